"""
This module contains the measures used to compare decompositions: reconstruction error, dominant
frequency of a mode, mode-by-mode correlation of two IMF tensors and the sifting work spent on a
serialized signal.

"""

import numpy as np

from .baseline import slicewise_decompose
from .helper.sifting import SignalError, emd
from .serializer import ImfTensor, SerializationError, TransitionSpec, serial_decompose, check_multisignal, concatenate

# peaks below this fraction of the spectrum mass are numerical noise
FLAT_SPECTRUM_TOLERANCE = 1e-9


def reconstruction_error(x, t):
    """Largest absolute difference between [x] and the sum of the modes of [t], relative to the
    largest absolute sample of [x] (absolute if [x] is zero everywhere).

    Parameters
    -----------
    x : array-like, M x N (or a one-dimensional signal)
    t : ImfTensor or array of shape (M, N, K)
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, np.newaxis]
    data = _tensor_data(t)
    if data.shape[:2] != x.shape:
        raise SerializationError("shapes do not agree: signal {} and tensor {}".format(x.shape, data.shape))

    error = np.max(np.abs(x - data.sum(axis=2)))
    scale = np.max(np.abs(x))
    return float(error / scale) if scale > 0 else float(error)


def dominant_frequency(s, fs):
    """Frequency (Hz) of the largest DFT magnitude of [s], the DC bin being excluded.

    The resolution is fs / len(s). A signal without any oscillation returns 0.
    """
    s = np.asarray(s, dtype=float)
    if s.ndim != 1 or s.size < 8:
        raise SignalError("too short: {} samples, at least 8 required".format(s.size))

    spectrum = np.abs(np.fft.rfft(s))
    freqs = np.fft.rfftfreq(s.size, d=1. / fs)
    peak = 1 + int(np.argmax(spectrum[1:]))
    if spectrum[peak] <= FLAT_SPECTRUM_TOLERANCE * np.sum(np.abs(s)):
        return 0.
    return float(freqs[peak])


def pearson(a, b):
    """ Pearson correlation of two equally long vectors, 0 when one of them has no variance
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    da = a - a.mean()
    db = b - b.mean()
    norm = np.sqrt(np.dot(da, da) * np.dot(db, db))
    if norm == 0:
        return 0.
    return float(np.clip(np.dot(da, db) / norm, -1., 1.))


def pad_modes(a, b):
    """Brings two IMF tensors to the same number of modes.

    The residue stays the last mode: zero modes are inserted before the residue of the tensor with
    fewer modes, the way slicewise_decompose() aligns its channels.
    """
    a = _tensor_data(a)
    b = _tensor_data(b)
    K = max(a.shape[2], b.shape[2])
    return _insert_zero_modes(a, K), _insert_zero_modes(b, K)


def _insert_zero_modes(data, K):
    M, N, current = data.shape
    if current == K:
        return data
    zeros = np.zeros((M, N, K - current))
    return np.concatenate([data[:, :, :-1], zeros, data[:, :, -1:]], axis=2)


def mode_correlation(a, b):
    """Pearson correlation of every (mode, channel) pair of slices of two IMF tensors.

    Returns
    -------
    numpy array of shape (K, N), K being the larger number of modes
    """
    a, b = pad_modes(a, b)
    if a.shape != b.shape:
        raise SerializationError("shapes do not agree: {} and {}".format(a.shape, b.shape))

    _, N, K = a.shape
    r = np.zeros((K, N))
    for k in range(K):
        for j in range(N):
            r[k, j] = pearson(a[:, j, k], b[:, j, k])
    return r


def d_sweep_similarity(x, Ds, algo="emd", cfg=None, ens=None, n_modes=2, reference=None):
    """Similarity of the serial decomposition of [x] with its slicewise decomposition, for several
    transition lengths.

    Parameters
    -----------
    x : array-like, M x N
    Ds : iterable of int
        Transition lengths to try
    n_modes : int
        Number of leading IMFs compared
    reference : ImfTensor
        Slicewise decomposition of [x], computed if not given

    Returns
    -------
    dict mapping every D to the mean correlation of the first [n_modes] modes over the channels
    """
    x = check_multisignal(x)
    if reference is None:
        reference = slicewise_decompose(x, algo, cfg, ens)

    similarity = {}
    for D in Ds:
        serial = serial_decompose(x, TransitionSpec(D), algo, cfg, ens)
        r = mode_correlation(serial, reference)
        similarity[int(D)] = float(np.mean(r[:n_modes]))
    return similarity


def sift_load(x, Ds, cfg=None):
    """Total number of sifting iterations of the serial EMD of [x], for several transition lengths.

    The count is deterministic, it does not depend on the machine.

    Returns
    -------
    dict mapping every D to (sift iterations, serialized length)
    """
    x = check_multisignal(x)
    load = {}
    for D in Ds:
        serialized = concatenate(x, TransitionSpec(D))
        decomposition = emd(serialized.samples, cfg)
        load[int(D)] = (int(sum(decomposition.sift_counts)), len(serialized))
    return load


def max_joint_step(x, D):
    """ Largest jump between consecutive samples of [x] serialized with transitions of length [D]
    """
    samples = concatenate(x, TransitionSpec(D)).samples
    return float(np.max(np.abs(np.diff(samples))))


def _tensor_data(t):
    data = t.data if isinstance(t, ImfTensor) else np.asarray(t, dtype=float)
    if data.ndim != 3:
        raise SerializationError("expected an M x N x K tensor, got shape {}".format(data.shape))
    return data

if __name__ == "__main__":
    pass
