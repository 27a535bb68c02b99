"""
This module contains the sifting machinery of the empirical mode decomposition (EMD):
extrema detection, spline envelopes, the extraction of one intrinsic mode function (IMF)
and the EMD loop that peels IMFs off a signal until only a residue is left.

"""

import logging
from warnings import warn

import numpy as np
from scipy.interpolate import CubicSpline

logger = logging.getLogger(__name__)

MIN_LENGTH = 4


class SiftConfig(object):
    """Stopping rules of the sifting process.

    Parameters
    -----------
    sd_threshold : float
        Threshold of the Cauchy-type criterion sum((s_prev - s)**2) / sum(s_prev**2), in (0, 1].
        Default : 0.2
    max_sift_iters : int
        Maximum number of sifting iterations for one IMF. Default : 300
    max_imfs : int or None
        Maximum number of IMFs extracted by emd(). None means unbounded.
    check_imf : bool
        If True, sifting only stops below the threshold once the candidate also has as many
        extrema as zero-crossings (up to one), see is_imf(). Default : True
    """

    def __init__(self, sd_threshold=0.2, max_sift_iters=300, max_imfs=None, check_imf=True):
        if not (0. < sd_threshold <= 1.):
            raise SignalError("sd_threshold should be in (0, 1], got {}".format(sd_threshold))
        if int(max_sift_iters) != max_sift_iters or max_sift_iters < 1:
            raise SignalError("max_sift_iters should be a positive integer, got {}".format(max_sift_iters))
        if max_imfs is not None and (int(max_imfs) != max_imfs or max_imfs < 1):
            raise SignalError("max_imfs should be a positive integer or None, got {}".format(max_imfs))

        self.sd_threshold = float(sd_threshold)
        self.max_sift_iters = int(max_sift_iters)
        self.max_imfs = None if max_imfs is None else int(max_imfs)
        self.check_imf = bool(check_imf)

    def replace(self, **kwargs):
        """ Returns a copy of this configuration with some fields replaced
        """
        fields = dict(sd_threshold=self.sd_threshold, max_sift_iters=self.max_sift_iters,
                      max_imfs=self.max_imfs, check_imf=self.check_imf)
        fields.update(kwargs)
        return SiftConfig(**fields)

    def __repr__(self):
        return "SiftConfig(sd_threshold={}, max_sift_iters={}, max_imfs={}, check_imf={})".format(
            self.sd_threshold, self.max_sift_iters, self.max_imfs, self.check_imf)


class Decomposition1D(object):
    """The IMFs and the residue of a one-dimensional signal.

    The sum of all the IMFs and of the residue gives back the decomposed signal.

    Parameters
    -----------
    imfs : list of numpy arrays
        IMFs ordered from the highest to the lowest frequency, each as long as the signal
    residue : numpy array
        What is left of the signal once every IMF was removed
    sift_counts : list of int
        Sifting iterations spent on every IMF, when known
    """

    def __init__(self, imfs, residue, sift_counts=None):
        self.residue = np.asarray(residue, dtype=float)
        self.sift_counts = None if sift_counts is None else [int(c) for c in sift_counts]
        self.imfs = [np.asarray(imf, dtype=float) for imf in imfs]
        for imf in self.imfs:
            if imf.shape != self.residue.shape:
                raise SignalError("IMF of shape {} does not match residue of shape {}"
                                  .format(imf.shape, self.residue.shape))

    def nImfs(self):
        return len(self.imfs)

    def toArray(self):
        """ Stacks the IMFs and the residue (as last row) in a (nImfs()+1) x length array
        """
        return np.vstack(self.imfs + [self.residue])

    def reconstruct(self):
        """ Sums the IMFs and the residue
        """
        return self.toArray().sum(axis=0)


def check_signal(signal, min_length=MIN_LENGTH):
    """Returns [signal] as a one-dimensional float array, after checking it can be decomposed.

    Throws
    -------
        SignalError
            If the signal is not one-dimensional, is shorter than [min_length] or is not finite.
    """
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1:
        raise SignalError("expected a one-dimensional signal, got shape {}".format(x.shape))
    if x.size < min_length:
        raise SignalError("too short: {} samples, at least {} required".format(x.size, min_length))
    if not np.all(np.isfinite(x)):
        raise SignalError("signal contains NaN or Inf samples")
    return x


def find_extrema(signal):
    """Finds the strict local maxima and minima of [signal].

    A sample is an extremum when it is strictly above (or below) both of its neighbours. A plateau
    of equal samples surrounded by a rise and a fall is reported once, at its middle index. The
    first and the last samples are never extrema.

    Parameters
    -----------
    signal : array-like
        Finite samples, at least 3 of them

    Returns
    -------
    maxima : tuple (indices, values) of numpy arrays
    minima : tuple (indices, values) of numpy arrays
    """
    x = check_signal(signal, min_length=3)

    d = np.diff(x)
    moves = np.flatnonzero(d)
    if moves.size < 2:
        empty = (np.zeros(0, dtype=int), np.zeros(0))
        return empty, empty

    rising = d[moves] > 0
    turns = np.flatnonzero(rising[:-1] != rising[1:])
    # samples moves[j]+1 .. moves[j+1] share the same value
    positions = (moves[turns] + 1 + moves[turns + 1]) // 2
    is_max = rising[turns]

    max_pos = positions[is_max]
    min_pos = positions[~is_max]
    return (max_pos, x[max_pos]), (min_pos, x[min_pos])


def count_extrema(signal):
    maxima, minima = find_extrema(signal)
    return maxima[0].size + minima[0].size


def count_zero_crossings(signal):
    """ Number of sign changes of [signal], samples equal to zero being skipped
    """
    x = np.asarray(signal, dtype=float)
    signs = np.sign(x[x != 0])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def is_imf(signal, boundary=2):
    """Whether the number of extrema and of zero-crossings of [signal] differ at most by one.

    The [boundary] samples at each end are left out of the count.
    """
    x = np.asarray(signal, dtype=float)
    if x.size > 2 * boundary + 3:
        x = x[boundary:x.size - boundary]
    return abs(count_extrema(x) - count_zero_crossings(x)) <= 1


def envelope(extrema, length):
    """Natural cubic spline through [extrema], evaluated at every index 0..length-1.

    When the first (last) extremum is not on the first (last) sample, the two extrema closest to
    that end are mirrored across it before fitting, which keeps the spline from swinging at the
    ends of the signal.

    Parameters
    -----------
    extrema : tuple (indices, values)
        Strictly increasing indices, e.g. one of the outputs of find_extrema()
    length : int
        Length of the signal

    Throws
    -------
        InsufficientExtremaError
            If fewer than 2 extrema are given.
    """
    positions = np.asarray(extrema[0], dtype=float)
    values = np.asarray(extrema[1], dtype=float)
    if positions.size < 2:
        raise InsufficientExtremaError("insufficient extrema: {} given, 2 required".format(positions.size))

    last = length - 1
    knots_x = [positions]
    knots_y = [values]
    if positions[0] > 0:
        knots_x.insert(0, -positions[1::-1])
        knots_y.insert(0, values[1::-1])
    if positions[-1] < last:
        knots_x.append(2 * last - positions[:-3:-1])
        knots_y.append(values[:-3:-1])

    spline = CubicSpline(np.concatenate(knots_x), np.concatenate(knots_y), bc_type='natural')
    return spline(np.arange(length, dtype=float))


def extract_imf(signal, cfg=None):
    """Sifts one IMF out of [signal].

    The local mean of the upper and lower envelopes is subtracted repeatedly until the Cauchy-type
    criterion falls below cfg.sd_threshold (and, with cfg.check_imf, the candidate passes is_imf())
    or cfg.max_sift_iters iterations were done.

    Returns
    -------
    imf : numpy array
        The last candidate
    sift_count : int
        Number of sifting iterations performed, at most cfg.max_sift_iters

    Throws
    -------
        InsufficientExtremaError
            If the signal has fewer than 2 maxima or 2 minima.
    """
    if cfg is None:
        cfg = SiftConfig()
    s = check_signal(signal)
    n = s.size

    sift_count = 0
    while sift_count < cfg.max_sift_iters:
        maxima, minima = find_extrema(s)
        if maxima[0].size < 2 or minima[0].size < 2:
            if sift_count == 0:
                raise InsufficientExtremaError("insufficient extrema: {} maxima, {} minima"
                                               .format(maxima[0].size, minima[0].size))
            # the candidate lost its extrema along the way, keep it as it is
            break

        mean = 0.5 * (envelope(maxima, n) + envelope(minima, n))
        previous, s = s, s - mean
        sift_count += 1

        energy = np.dot(previous, previous)
        sd = np.dot(mean, mean) / energy if energy > 0 else 0.
        if sd < cfg.sd_threshold and (not cfg.check_imf or is_imf(s)):
            break
    else:
        warn("Sifting stopped after max_sift_iters={} iterations without meeting the stopping criterion"
             .format(cfg.max_sift_iters), DecompositionWarning)

    return s, sift_count


def emd(signal, cfg=None):
    """Empirical mode decomposition of [signal].

    IMFs are extracted from the running residue until the residue has fewer than 3 extrema,
    sifting is no longer possible or cfg.max_imfs IMFs were found.

    Returns
    -------
    Decomposition1D
    """
    if cfg is None:
        cfg = SiftConfig()
    x = check_signal(signal)

    imfs = []
    sift_counts = []
    residue = x.copy()
    while cfg.max_imfs is None or len(imfs) < cfg.max_imfs:
        if count_extrema(residue) < 3:
            break
        try:
            imf, sift_count = extract_imf(residue, cfg)
        except InsufficientExtremaError:
            break
        logger.debug("IMF %d extracted after %d sifting iterations", len(imfs) + 1, sift_count)
        imfs.append(imf)
        sift_counts.append(sift_count)
        residue = residue - imf

    return Decomposition1D(imfs, residue, sift_counts)


class SignalError(ValueError):
    """Exception raised for signals or parameters that cannot be decomposed.
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

class InsufficientExtremaError(RuntimeError):
    """Exception raised when a signal does not have enough extrema to build its envelopes.
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

class DecompositionWarning(RuntimeWarning):
    """Warning issued when a decomposition or one of its runs behaves unexpectedly.
    """

if __name__ == "__main__":
    pass
