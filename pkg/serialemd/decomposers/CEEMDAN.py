from .EEMD import EEMD
from ..helper.ensemble import ceemdan


class CEEMDAN(EEMD):
    """Complete ensemble EMD with adaptive noise: each mode is extracted from the current
    residue plus the matching EMD mode of every noise realization.

    Parameters
    -----------
    sift_config : SiftConfig
        Stopping rules of the sifting process
    ensemble_config : EnsembleConfig
        Noise level, number of realizations and seed. Default : EnsembleConfig()
    """
    def __init__(self, sift_config=None, ensemble_config=None):
        EEMD.__init__(self, sift_config, ensemble_config)

    def decompose(self, signal):
        return ceemdan(signal, self._sift_config, self._ensemble_config)

    def name(self):
        return "ceemdan"
