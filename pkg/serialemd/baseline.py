"""
This module contains the slicewise decomposition of multi-signals: every channel is decomposed on
its own by a one-dimensional algorithm, which is the reference the serial decomposition is
compared against.

"""

import logging

import numpy as np
from joblib import Parallel, delayed

from .decomposers import make_decomposer
from .serializer import ImfTensor, check_multisignal

logger = logging.getLogger(__name__)


def slicewise_decompose(x, algo="emd", cfg=None, ens=None, n_jobs=1):
    """Decomposes every channel of the multi-signal [x] independently.

    Channels have different numbers of IMFs. They are aligned on a common K, the largest number of
    modes (IMFs plus residue) over the channels: the residue of every channel is put in the last
    mode, and the modes missing in between are zeros.

    Parameters
    -----------
    x : array-like, M x N
    algo : str
        'emd', 'eemd' or 'ceemdan'
    cfg : SiftConfig
    ens : EnsembleConfig
    n_jobs : int
        Number of joblib workers decomposing channels. The output does not depend on it.

    Returns
    -------
    ImfTensor of shape (M, N, K)
    """
    x = check_multisignal(x)
    M, N = x.shape
    decomposer = make_decomposer(algo, cfg, ens)

    decompositions = Parallel(n_jobs=n_jobs)(delayed(decomposer.decompose)(x[:, j]) for j in range(N))

    K = max(d.nImfs() for d in decompositions) + 1
    data = np.zeros((M, N, K))
    for j, decomposition in enumerate(decompositions):
        for k, imf in enumerate(decomposition.imfs):
            data[:, j, k] = imf
        data[:, j, K - 1] = decomposition.residue
    logger.debug("slicewise-%s: %d channels, K=%d", algo, N, K)

    return ImfTensor(data)

if __name__ == "__main__":
    pass
