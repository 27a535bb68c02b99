from ..base_classes import Decomposer
from ..helper.ensemble import EnsembleConfig, eemd


class EEMD(Decomposer):
    """Ensemble EMD: the IMFs are the averages of the IMFs of noisy copies of the signal.

    Parameters
    -----------
    sift_config : SiftConfig
        Stopping rules of the sifting process
    ensemble_config : EnsembleConfig
        Noise level, number of realizations and seed. Default : EnsembleConfig()
    """
    def __init__(self, sift_config=None, ensemble_config=None):
        Decomposer.__init__(self, sift_config)
        if ensemble_config is None:
            ensemble_config = EnsembleConfig()
        self._ensemble_config = ensemble_config

    def decompose(self, signal):
        return eemd(signal, self._sift_config, self._ensemble_config)

    def name(self):
        return "eemd"

    def setEnsembleConfig(self, ensemble_config):
        self._ensemble_config = ensemble_config

    def ensembleConfig(self):
        return self._ensemble_config
