"""
This module contains the serialization of multi-signals.

The N channels (columns) of an M x N multi-signal are joined end to end into one signal of length
MN + DN - D. Between two consecutive channels, D samples of transition blend the flipped tail of
the previous channel with the flipped head of the next one, so that the joint stays continuous.
The serialized signal is decomposed once by a one-dimensional algorithm, and its modes are cut
back into an M x N x K tensor by dropping the transitions.

"""

import logging

import numpy as np

from .decomposers import make_decomposer
from .helper.sifting import SignalError, MIN_LENGTH

logger = logging.getLogger(__name__)

DEFAULT_TRANSITION_RATIO = 0.2


class TransitionSpec(object):
    """Length of the transitions inserted between consecutive channels.

    Parameters
    -----------
    D : int
        Number of transition samples, 1 <= D <= M
    """

    def __init__(self, D):
        if int(D) != D or D < 1:
            raise SerializationError("transition length should be a positive integer, got {}".format(D))
        self.D = int(D)

    @classmethod
    def fromLength(cls, M, ratio=DEFAULT_TRANSITION_RATIO):
        """ Transition of round(ratio * M) samples (halves rounded up), kept within [1, M]
        """
        return cls(max(1, min(int(M), int(np.floor(ratio * M + 0.5)))))

    def check(self, M):
        if self.D > M:
            raise SerializationError("transition longer than channel: D={} > M={}".format(self.D, M))

    def __repr__(self):
        return "TransitionSpec(D={})".format(self.D)


class SerializedSignal(object):
    """A serialized multi-signal.

    Parameters
    -----------
    samples : numpy array of length M*N + D*N - D
    M, N, D : int
        Channel length, number of channels and transition length
    """

    def __init__(self, samples, M, N, D):
        self.samples = np.asarray(samples, dtype=float)
        if self.samples.shape != (serialized_length(M, N, D),):
            raise SerializationError("{} samples do not match M={}, N={}, D={}"
                                     .format(self.samples.size, M, N, D))
        self.M = M
        self.N = N
        self.D = D

    @property
    def meta(self):
        return (self.M, self.N, self.D)

    def channel(self, i):
        """ The samples of channel [i] (0-based) inside the serialized signal
        """
        start = i * (self.M + self.D)
        return self.samples[start:start + self.M]

    def __len__(self):
        return self.samples.size


class ImfTensor(object):
    """Per-channel modes of a multi-signal, as an M x N x K array.

    The last mode is the residue, so that summing over the modes gives back the multi-signal.
    """

    def __init__(self, data):
        self.data = np.asarray(data, dtype=float)
        if self.data.ndim != 3:
            raise SerializationError("an IMF tensor should have 3 dimensions, got shape {}".format(self.data.shape))

    @property
    def shape(self):
        return self.data.shape

    def nModes(self):
        return self.data.shape[2]

    def mode(self, k):
        """ Mode [k] (0-based) of every channel, as an M x N array
        """
        return self.data[:, :, k]

    def reconstruct(self):
        return self.data.sum(axis=2)

    def padTo(self, K):
        """ Returns a tensor with K modes, zero modes being appended or trailing modes dropped
        """
        M, N, current = self.data.shape
        if current >= K:
            return ImfTensor(self.data[:, :, :K].copy())
        return ImfTensor(np.concatenate([self.data, np.zeros((M, N, K - current))], axis=2))


def serialized_length(M, N, D):
    return M * N + D * N - D


def check_multisignal(x):
    """Returns [x] as an M x N float array (a one-dimensional input is a single channel).

    Throws
    -------
        SignalError
            If M < 4, N < 1 or some samples are not finite.
    """
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        x = x[:, np.newaxis]
    if x.ndim != 2:
        raise SignalError("expected an M x N multi-signal, got shape {}".format(x.shape))
    M, N = x.shape
    if M < MIN_LENGTH or N < 1:
        raise SignalError("a multi-signal needs M >= {} samples and N >= 1 channels, got {} x {}"
                          .format(MIN_LENGTH, M, N))
    if not np.all(np.isfinite(x)):
        raise SignalError("multi-signal contains NaN or Inf samples")
    return x


def transition_weights(D):
    """ The D weights i/(D+1), i = 1..D, evenly spaced in ]0, 1[
    """
    if D < 1:
        raise SerializationError("transition length should be >= 1, got {}".format(D))
    return np.arange(1, D + 1) / (D + 1)


def concatenate(x, spec=None):
    """Serializes the multi-signal [x] with transitions of length spec.D.

    The transitions are computed for all the joints at once: with X_A the first D rows of
    channels 2..N and X_B the last D rows of channels 1..N-1,
    E = flip(X_A) * a + flip(X_B) * flip(a), a being transition_weights(D). E is stacked under X
    (a zero block under the last channel), the result is read column by column and the trailing
    D zeros are cut.

    Parameters
    -----------
    x : array-like, M x N
    spec : TransitionSpec
        Default : TransitionSpec.fromLength(M)

    Returns
    -------
    SerializedSignal
    """
    x = check_multisignal(x)
    M, N = x.shape
    if spec is None:
        spec = TransitionSpec.fromLength(M)
    spec.check(M)
    D = spec.D

    if N == 1:
        return SerializedSignal(x[:, 0].copy(), M, N, D)

    a = transition_weights(D)[:, np.newaxis]
    heads_flipped = x[D - 1::-1, 1:]
    tails_flipped = x[:M - D - 1:-1, :-1] if M > D else x[::-1, :-1]

    stacked = np.zeros((M + D, N))
    stacked[:M] = x
    stacked[M:, :-1] = heads_flipped * a + tails_flipped * a[::-1]

    samples = stacked.ravel(order='F')[:serialized_length(M, N, D)]
    return SerializedSignal(samples, M, N, D)


def concatenate_naive(x, spec=None):
    """Serializes [x] joint by joint, evaluating the transition sample by sample.

    Between channels f and g, sample t = 1..D of the transition is
    (1 - t/(D+1)) * f[M-t] + t/(D+1) * g[D-t], the discrete version of
    h(t) = (1 - t/D) f(T-t) + (t/D) g(D-t). The result is bit-identical to concatenate().
    """
    x = check_multisignal(x)
    M, N = x.shape
    if spec is None:
        spec = TransitionSpec.fromLength(M)
    spec.check(M)
    D = spec.D

    pieces = [x[:, 0]]
    for i in range(1, N):
        f = x[:, i - 1]
        g = x[:, i]
        h = np.empty(D)
        for t in range(1, D + 1):
            h[t - 1] = (D + 1 - t) / (D + 1) * f[M - t] + t / (D + 1) * g[D - t]
        pieces.append(h)
        pieces.append(g)

    return SerializedSignal(np.concatenate(pieces), M, N, D)


def deconcatenate(R, meta):
    """Cuts the modes of a serialized signal back into per-channel modes.

    D zero rows are appended to every mode, the (M+D)N x K matrix is reshaped column by column into
    (M+D) x N x K, and only the first M rows (the channel samples) are kept.

    Parameters
    -----------
    R : array-like of shape (M*N + D*N - D, K), or a single mode as a vector
    meta : tuple (M, N, D)

    Returns
    -------
    ImfTensor of shape (M, N, K)
    """
    M, N, D = meta
    R = np.asarray(R, dtype=float)
    if R.ndim == 1:
        R = R[:, np.newaxis]
    if R.ndim != 2 or R.shape[0] != serialized_length(M, N, D):
        raise SerializationError("expected {} rows for M={}, N={}, D={}, got shape {}"
                                 .format(serialized_length(M, N, D), M, N, D, R.shape))
    K = R.shape[1]

    padded = np.vstack([R, np.zeros((D, K))])
    data = padded.reshape((M + D, N, K), order='F')[:M]
    return ImfTensor(np.ascontiguousarray(data))


def serial_decompose(x, spec=None, algo="emd", cfg=None, ens=None):
    """Decomposes the multi-signal [x] through its serialization.

    Parameters
    -----------
    x : array-like, M x N
    spec : TransitionSpec
        Default : TransitionSpec.fromLength(M)
    algo : str
        'emd', 'eemd' or 'ceemdan'
    cfg : SiftConfig
    ens : EnsembleConfig
        Only used by 'eemd' and 'ceemdan'

    Returns
    -------
    ImfTensor of shape (M, N, K), the residue being the last mode
    """
    x = check_multisignal(x)
    if spec is None:
        spec = TransitionSpec.fromLength(x.shape[0])

    serialized = concatenate(x, spec)
    decomposition = make_decomposer(algo, cfg, ens).decompose(serialized.samples)
    logger.debug("serial-%s: %d samples, %d IMFs", algo, len(serialized), decomposition.nImfs())
    return deconcatenate(decomposition.toArray().T, serialized.meta)


def image_to_multisignal(img):
    """ The columns of the image [img] become the channels of a multi-signal
    """
    return check_multisignal(np.array(img, dtype=float, ndmin=2))


def imf_tensor_to_images(t):
    """ Splits an ImfTensor into the list of its K modes, each as an M x N image
    """
    data = t.data if isinstance(t, ImfTensor) else np.asarray(t, dtype=float)
    return [data[:, :, k].copy() for k in range(data.shape[2])]


class SerializationError(ValueError):
    """Exception raised for inconsistent serialization parameters or shapes.
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

if __name__ == "__main__":
    pass
