"""
This module contains the generators of the synthetic data: multi-variate sums of sinusoids, the
artificial texture image (ATI) and its components, and multiplicative speckle noise calibrated to
a target signal-to-noise ratio.

"""

import logging

import numpy as np

from .helper.sifting import SignalError

logger = logging.getLogger(__name__)

DEFAULT_FREQS = (32., 16., 8., 2.)
VARIATES = ("U", "V", "W", "X", "Y", "Z")
# rows: 32, 16, 8 and 2 Hz, columns: U to Z
DEFAULT_MASK = np.array([[1, 1, 0, 1, 0, 0],
                         [1, 1, 1, 0, 1, 0],
                         [1, 1, 1, 1, 1, 1],
                         [1, 0, 1, 1, 0, 1]], dtype=int)
COMMON_FREQ = 8.


class PickupMask(object):
    """Binary matrix telling which sinusoid is included in which variate.

    Parameters
    -----------
    mask : array-like of 0 and 1, n_freqs x n_variates
        Default : DEFAULT_MASK
    freqs : tuple of float
        Frequency (Hz) of every row. Default : DEFAULT_FREQS
    """

    def __init__(self, mask=None, freqs=DEFAULT_FREQS):
        mask = DEFAULT_MASK if mask is None else mask
        self.mask = np.array(mask, dtype=int, ndmin=2)
        self.freqs = tuple(float(f) for f in freqs)
        if self.mask.shape[0] != len(self.freqs):
            raise SignalError("mask has {} rows for {} frequencies".format(self.mask.shape[0], len(self.freqs)))
        if not np.all((self.mask == 0) | (self.mask == 1)):
            raise SignalError("mask entries should be 0 or 1")

    def nVariates(self):
        return self.mask.shape[1]

    def variatesWith(self, freq):
        """ Indices of the variates including the sinusoid of frequency [freq]
        """
        row = self.freqs.index(float(freq))
        return [int(j) for j in np.flatnonzero(self.mask[row])]


def multivariate_sinusoids(mask=None, n_samples=1000, fs=1000.):
    """Builds the multi-variate signal selected by the pick-up mask.

    Channel j is the sum of the unit-amplitude sinusoids sin(2 pi f_i t), t = k/fs, for which
    mask[i, j] is 1.

    Parameters
    -----------
    mask : PickupMask
        Default : PickupMask()
    n_samples : int
        Samples per channel, at least 2. Default : 1000
    fs : float
        Sampling frequency (Hz), above twice the highest frequency. Default : 1000

    Returns
    -------
    numpy array of shape (n_samples, n_variates)
    """
    if mask is None:
        mask = PickupMask()
    if fs <= 2 * max(mask.freqs):
        raise SignalError("aliasing: fs={} Hz should be above {} Hz".format(fs, 2 * max(mask.freqs)))
    if n_samples < 2:
        raise SignalError("n_samples should be >= 2, got {}".format(n_samples))

    t = np.arange(n_samples) / fs
    tones = np.stack([np.sin(2 * np.pi * f * t) for f in mask.freqs], axis=1)
    return tones.dot(mask.mask.astype(float))


class AtiSpec(object):
    """Artificial texture image.

    Parameters
    -----------
    size : int
        Width and height of the image. Default : 101
    spatial_freqs : tuple of float
        Spatial frequency (cycles per image width) of every component. Default : (20, 4, 1)
    """

    def __init__(self, size=101, spatial_freqs=(20., 4., 1.)):
        if size < 4:
            raise SignalError("ATI size should be >= 4, got {}".format(size))
        self.size = int(size)
        self.spatial_freqs = tuple(float(f) for f in spatial_freqs)


def make_ati(spec=None):
    """Builds the artificial texture image and its components.

    Component i is sin(2 pi f_i x / size) + sin(2 pi f_i y / size), a horizontal and a vertical
    oscillation; the image is the sum of its components.

    Returns
    -------
    ati : numpy array (size x size)
    atcs : list of numpy arrays (size x size), highest frequency first
    """
    if spec is None:
        spec = AtiSpec()
    coords = np.arange(spec.size) / spec.size
    atcs = []
    for f in spec.spatial_freqs:
        wave = np.sin(2 * np.pi * f * coords)
        atcs.append(wave[np.newaxis, :] + wave[:, np.newaxis])

    ati = np.zeros((spec.size, spec.size))
    for atc in atcs:
        ati += atc
    return ati, atcs


class SpeckleSpec(object):
    """Speckle noise at a target signal-to-noise ratio.

    Parameters
    -----------
    snr_db : float
        Target SNR (dB), +inf for no noise. Default : -6
    seed : int
        Seed of the noise draw. Default : 0
    """

    def __init__(self, snr_db=-6., seed=0):
        if np.isnan(snr_db) or snr_db == -np.inf:
            raise SignalError("snr_db should be a number or +inf, got {}".format(snr_db))
        self.snr_db = float(snr_db)
        self.seed = int(seed)

    def __repr__(self):
        return "SpeckleSpec(snr_db={}, seed={})".format(self.snr_db, self.seed)


def speckle_noise(img, spec):
    """Draws the multiplicative noise N of add_speckle(), along with its level sigma.

    N is uniform on [-sigma/sqrt(2), sigma/sqrt(2)]; sigma is solved on the actual draw so that
    sum(img**2) / sum((img*N)**2) is exactly the target ratio.

    Returns
    -------
    noise : numpy array shaped like [img]
    sigma : float
    """
    img = np.asarray(img, dtype=float)
    if not np.all(np.isfinite(img)):
        raise SignalError("image contains NaN or Inf samples")
    power = np.sum(img ** 2)
    if power == 0:
        raise SignalError("SNR undefined: the image is zero everywhere")
    if spec.snr_db == np.inf:
        return np.zeros(img.shape), 0.

    rng = np.random.default_rng(spec.seed % 2**64)
    unit = rng.uniform(-1. / np.sqrt(2), 1. / np.sqrt(2), size=img.shape)
    unit_power = np.sum((img * unit) ** 2)
    sigma = np.sqrt(power / (10 ** (spec.snr_db / 10.) * unit_power))
    return sigma * unit, float(sigma)


def add_speckle(img, spec=None):
    """ Returns img + img * N, N being drawn by speckle_noise()
    """
    if spec is None:
        spec = SpeckleSpec()
    img = np.asarray(img, dtype=float)
    noise, sigma = speckle_noise(img, spec)
    logger.debug("speckle: sigma=%g for %s", sigma, spec)
    if sigma == 0:
        return img.copy()
    return img + img * noise


def snr_db(signal, noise):
    """ 10 log10 of the power of [signal] over the power of [noise]
    """
    signal = np.asarray(signal, dtype=float)
    noise = np.asarray(noise, dtype=float)
    noise_power = np.sum(noise ** 2)
    if noise_power == 0:
        raise SignalError("SNR undefined: the noise is zero everywhere")
    return float(10 * np.log10(np.sum(signal ** 2) / noise_power))

if __name__ == "__main__":
    pass
