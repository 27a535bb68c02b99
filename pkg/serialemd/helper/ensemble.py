"""
This module contains the noise-assisted variants of the EMD: the ensemble EMD (EEMD) and the
complete ensemble EMD with adaptive noise (CEEMDAN).

Realization m of an ensemble always draws its white noise from realization_seed(base_seed, m),
and the ensemble averages are accumulated in realization order. Realizations can thus be run in
parallel (see EnsembleConfig.n_jobs) without changing a single bit of the result.

"""

import logging

import numpy as np
from joblib import Parallel, delayed

from .sifting import SiftConfig, Decomposition1D, SignalError, check_signal, count_extrema, emd

logger = logging.getLogger(__name__)


class EnsembleConfig(object):
    """Parameters of the noise-assisted decompositions.

    Parameters
    -----------
    nstd : float
        Standard deviation of the added white noise, as a fraction of the standard deviation of
        the signal (or of the current residue for CEEMDAN). Default : 0.2
    nr : int
        Number of noise realizations. Default : 100
    base_seed : int
        Seed from which the seed of every realization is derived. Default : 0
    n_jobs : int
        Number of joblib workers used to run the realizations. Default : 1
    """

    def __init__(self, nstd=0.2, nr=100, base_seed=0, n_jobs=1):
        if not (nstd >= 0. and np.isfinite(nstd)):
            raise SignalError("nstd should be a finite value >= 0, got {}".format(nstd))
        if int(nr) != nr or nr < 1:
            raise SignalError("nr should be a positive integer, got {}".format(nr))

        self.nstd = float(nstd)
        self.nr = int(nr)
        self.base_seed = int(base_seed)
        self.n_jobs = int(n_jobs)

    def replace(self, **kwargs):
        """ Returns a copy of this configuration with some fields replaced
        """
        fields = dict(nstd=self.nstd, nr=self.nr, base_seed=self.base_seed, n_jobs=self.n_jobs)
        fields.update(kwargs)
        return EnsembleConfig(**fields)

    def __repr__(self):
        return "EnsembleConfig(nstd={}, nr={}, base_seed={}, n_jobs={})".format(
            self.nstd, self.nr, self.base_seed, self.n_jobs)


def realization_seed(base_seed, m):
    """ Deterministic 64-bit seed of realization [m] of an ensemble seeded with [base_seed]
    """
    sequence = np.random.SeedSequence([int(base_seed) % 2**64, int(m)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def white_noise(length, seed, std=1.0):
    """Zero-mean Gaussian white noise of standard deviation [std], the same for the same [seed].
    """
    if std < 0:
        raise SignalError("std should be >= 0, got {}".format(std))
    if std == 0:
        return np.zeros(length)
    rng = np.random.default_rng(seed)
    return std * rng.standard_normal(length)


def noise_mode(noise, i, cfg=None):
    """The i-th EMD mode (i >= 1) of a noise realization, or zeros if it has fewer than i modes.
    """
    if i < 1:
        raise SignalError("mode index should be >= 1, got {}".format(i))
    if cfg is None:
        cfg = SiftConfig()
    w = check_signal(noise)
    if cfg.max_imfs is not None and cfg.max_imfs < i:
        return np.zeros(w.size)
    return _nth_mode(emd(w, cfg.replace(max_imfs=i)), i)


def eemd(signal, cfg=None, ens=None):
    """Ensemble empirical mode decomposition of [signal].

    Every realization x + beta * w^(m), with beta = ens.nstd * std(x), is decomposed with emd().
    The IMF lists are padded with zeros to the longest one and averaged index by index. The
    residue is what the averaged IMFs leave of the signal.

    Returns
    -------
    Decomposition1D
    """
    if cfg is None:
        cfg = SiftConfig()
    if ens is None:
        ens = EnsembleConfig()
    x = check_signal(signal)

    beta = ens.nstd * np.std(x)
    # without noise every realization is the same
    n_realizations = ens.nr if beta > 0 else 1

    runs = Parallel(n_jobs=ens.n_jobs)(
        delayed(_realization_imfs)(x, beta, realization_seed(ens.base_seed, m), cfg)
        for m in range(n_realizations))

    n_modes = max(len(imfs) for imfs in runs)
    total = np.zeros((n_modes, x.size))
    for imfs in runs:
        for k, imf in enumerate(imfs):
            total[k] += imf
    means = total / n_realizations
    logger.debug("EEMD: %d realizations, %d modes", n_realizations, n_modes)

    return Decomposition1D(list(means), x - means.sum(axis=0))


def ceemdan(signal, cfg=None, ens=None):
    """Complete ensemble empirical mode decomposition with adaptive noise of [signal].

    The first mode is the EEMD first mode. Then, with r_i the residue after i modes and
    beta_i = ens.nstd * std(r_i), mode i+1 is the average over the realizations of the first EMD
    mode of r_i + beta_i * E_i(w^(m)), E_i being noise_mode(). The recursion stops when the
    residue has fewer than 3 extrema, when no realization yields a mode anymore or when
    cfg.max_imfs modes were found.

    Returns
    -------
    Decomposition1D
    """
    if cfg is None:
        cfg = SiftConfig()
    if ens is None:
        ens = EnsembleConfig()
    x = check_signal(signal)

    modes = []
    residue = x
    if count_extrema(residue) < 3:
        return Decomposition1D(modes, residue)

    n_realizations = ens.nr if ens.nstd > 0 else 1
    noises = []
    noise_decompositions = []
    if ens.nstd > 0:
        noises = [white_noise(x.size, realization_seed(ens.base_seed, m), 1.0) for m in range(n_realizations)]
        noise_decompositions = Parallel(n_jobs=ens.n_jobs)(delayed(emd)(w, cfg) for w in noises)

    beta = ens.nstd * np.std(x)
    candidates = [x + beta * w for w in noises] if noises else [x]
    mode = _average_first_mode(candidates, cfg, ens.n_jobs)
    stage = 1
    while mode is not None:
        modes.append(mode)
        residue = residue - mode
        logger.debug("CEEMDAN: mode %d extracted", stage)
        if count_extrema(residue) < 3:
            break
        if cfg.max_imfs is not None and len(modes) >= cfg.max_imfs:
            break

        beta = ens.nstd * np.std(residue)
        if noises:
            candidates = [residue + beta * _nth_mode(decomposition, stage)
                          for decomposition in noise_decompositions]
        else:
            candidates = [residue]
        mode = _average_first_mode(candidates, cfg, ens.n_jobs)
        stage += 1

    return Decomposition1D(modes, residue)


def _nth_mode(decomposition, i):
    if decomposition.nImfs() < i:
        return np.zeros(decomposition.residue.size)
    return decomposition.imfs[i - 1]


def _realization_imfs(x, beta, seed, cfg):
    return emd(x + beta * white_noise(x.size, seed, 1.0), cfg).imfs


def _first_mode(signal, cfg):
    decomposition = emd(signal, cfg.replace(max_imfs=1))
    if decomposition.nImfs() == 0:
        return None
    return decomposition.imfs[0]


def _average_first_mode(candidates, cfg, n_jobs):
    """ Average of the first EMD modes of [candidates], None if none of them has a mode
    """
    firsts = Parallel(n_jobs=n_jobs)(delayed(_first_mode)(c, cfg) for c in candidates)
    if all(first is None for first in firsts):
        return None
    total = np.zeros(candidates[0].size)
    for first in firsts:
        if first is not None:
            total += first
    return total / len(candidates)

if __name__ == "__main__":
    pass
