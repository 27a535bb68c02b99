from ..base_classes import Decomposer
from ..helper.sifting import emd


class EMD(Decomposer):
    """Standard empirical mode decomposition.

    Parameters
    -----------
    sift_config : SiftConfig
        Stopping rules of the sifting process
    """
    def __init__(self, sift_config=None):
        Decomposer.__init__(self, sift_config)

    def decompose(self, signal):
        return emd(signal, self._sift_config)

    def name(self):
        return "emd"
