"""
This module defines the base class for the one-dimensional decomposition algorithms.

"""

from ..helper.sifting import SiftConfig

class Decomposer(object):
    """ EMD, EEMD, CEEMDAN, etc. should inherit this interface.

    A decomposer turns a one-dimensional signal into a Decomposition1D. The serial and the
    slicewise decompositions of multi-signals only rely on this interface.

    Parameters
    -----------
    sift_config : SiftConfig
        Stopping rules of the sifting process. Default : SiftConfig()
    """
    def __init__(self, sift_config=None):
        if sift_config is None:
            sift_config = SiftConfig()
        self._sift_config = sift_config

    def decompose(self, signal):
        """ Decomposes a one-dimensional signal and returns a Decomposition1D
        """
        raise NotImplementedError()

    def name(self):
        """ Identifier of the algorithm ('emd', 'eemd', ...)
        """
        raise NotImplementedError()

    def __call__(self, signal):
        return self.decompose(signal)

    def setSiftConfig(self, sift_config):
        """ Setting the stopping rules of the sifting process

        Parameters
        -----------
        sift_config : SiftConfig
            The configuration that has to be set
        """
        self._sift_config = sift_config

    def siftConfig(self):
        """ Getting the stopping rules of the sifting process
        """
        return self._sift_config

if __name__ == "__main__":
    pass
