from ..helper.sifting import SignalError
from .EMD import EMD
from .EEMD import EEMD
from .CEEMDAN import CEEMDAN

ALGORITHMS = ("emd", "eemd", "ceemdan")


def make_decomposer(algo, sift_config=None, ensemble_config=None):
    """ Builds the decomposer named [algo] ('emd', 'eemd' or 'ceemdan')
    """
    if algo == "emd":
        return EMD(sift_config)
    elif algo == "eemd":
        return EEMD(sift_config, ensemble_config)
    elif algo == "ceemdan":
        return CEEMDAN(sift_config, ensemble_config)
    raise SignalError("unknown algorithm '{}', expected one of {}".format(algo, ", ".join(ALGORITHMS)))
