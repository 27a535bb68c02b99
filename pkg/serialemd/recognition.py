"""
This module contains the face recognition experiment: faces corrupted by speckle noise are
decomposed by a serial algorithm, a range of their IMFs is summed up into a feature image, and a
nearest neighbour classifier is evaluated on these features by stratified cross-validation. Trying
every range of IMFs gives an accuracy heat map.

The faces are read from a directory in the ORL (AT&T) layout: one sub-directory sN per subject
holding the images M.pgm.

"""

import logging
import os
import re
from collections import Counter

import numpy as np
from joblib import Memory, Parallel, delayed
from scipy.spatial.distance import cdist
from sklearn.base import BaseEstimator, ClassifierMixin, clone
from sklearn.metrics import accuracy_score
from sklearn.model_selection import StratifiedKFold

from .helper.ensemble import realization_seed
from .helper.netpbm import read_pgm
from .helper.sifting import SignalError
from .serializer import ImfTensor, SerializationError, serial_decompose
from .synth import SpeckleSpec, add_speckle

logger = logging.getLogger(__name__)

N_MODES = 10
DEFAULT_FOLDS = 10
DEFAULT_SNR_DB = -6.
_SUBJECT_DIR = re.compile(r"^s(\d+)$")
_IMAGE_FILE = re.compile(r"^(\d+)\.pgm$")


class FaceDataset(object):
    """Grayscale face images and the subject they show.

    Parameters
    -----------
    images : list of 2D numpy arrays, all of the same shape
    labels : list of int
        Subject of every image
    """

    def __init__(self, images, labels):
        if len(images) != len(labels):
            raise DatasetError("{} images for {} labels".format(len(images), len(labels)))
        if len(images) == 0:
            raise DatasetError("empty dataset")
        shapes = set(np.shape(img) for img in images)
        if len(shapes) != 1:
            raise DatasetError("images of different sizes: {}".format(sorted(shapes)))
        self.images = list(images)
        self.labels = np.asarray(labels, dtype=int)

    def __len__(self):
        return len(self.images)

    def shape(self):
        return np.shape(self.images[0])

    def subjects(self):
        return sorted(set(int(l) for l in self.labels))

    def checkBalanced(self, folds=DEFAULT_FOLDS):
        """Checks that every subject has the same number of images, a multiple of [folds].

        Throws
        -------
            DatasetError
        """
        check_balanced(self.labels, folds)

    def features(self):
        """ Every image flattened row by row, as an n_images x n_pixels array
        """
        return np.stack([np.asarray(img, dtype=float).ravel() for img in self.images])


def check_balanced(labels, folds=DEFAULT_FOLDS):
    counts = Counter(int(l) for l in labels)
    per_subject = set(counts.values())
    if len(per_subject) != 1:
        raise DatasetError("unbalanced dataset: images per subject range over {}".format(sorted(per_subject)))
    n = per_subject.pop()
    if n % folds != 0:
        raise DatasetError("{} images per subject cannot be split into {} folds".format(n, folds))


def load_orl(path):
    """Loads the faces of an ORL-style directory (sN/M.pgm, binary PGM).

    Throws
    -------
        DatasetNotFoundError
            If [path] is None, does not exist or holds no sN/M.pgm image.
        DatasetError
            If the images do not all have the same size.
    """
    if not path or not os.path.isdir(path):
        raise DatasetNotFoundError("dataset not found: {!r} is not a directory (see SERIAL_EMD_DATASET)".format(path))

    images = []
    labels = []
    subjects = sorted((int(m.group(1)), name) for name in os.listdir(path)
                      for m in [_SUBJECT_DIR.match(name)] if m and os.path.isdir(os.path.join(path, name)))
    for subject, name in subjects:
        directory = os.path.join(path, name)
        files = sorted((int(m.group(1)), f) for f in os.listdir(directory) for m in [_IMAGE_FILE.match(f)] if m)
        for _, f in files:
            images.append(read_pgm(os.path.join(directory, f)))
            labels.append(subject)
    if not images:
        raise DatasetNotFoundError("dataset not found: no sN/M.pgm image under {!r}".format(path))

    logger.debug("loaded %d images of %d subjects from %s", len(images), len(subjects), path)
    return FaceDataset(images, labels)


class ImfRange(object):
    """Range of IMFs summed into a feature, from the [hi]-th (highest frequency) to the [lo]-th,
    both included and counted from 1.
    """

    def __init__(self, hi, lo, n_modes=N_MODES):
        if not (1 <= hi <= lo <= n_modes):
            raise SignalError("invalid range {}:{}, 1 <= hi <= lo <= {} expected".format(hi, lo, n_modes))
        self.hi = int(hi)
        self.lo = int(lo)

    @classmethod
    def parse(cls, text, n_modes=N_MODES):
        """ Parses 'HI:LO', e.g. '2:7'
        """
        try:
            hi, lo = (int(v) for v in text.split(":"))
        except ValueError:
            raise SignalError("invalid range {!r}, HI:LO expected".format(text))
        return cls(hi, lo, n_modes)

    def __repr__(self):
        return "ImfRange({}, {})".format(self.hi, self.lo)


def all_ranges(n_modes=N_MODES):
    return [ImfRange(hi, lo, n_modes) for hi in range(1, n_modes + 1) for lo in range(hi, n_modes + 1)]


def normalize_imf_count(t, target=N_MODES):
    """ Appends zero modes to [t], or drops its trailing modes, so that it has [target] modes
    """
    if not isinstance(t, ImfTensor):
        t = ImfTensor(t)
    return t.padTo(target)


def sum_imf_range(t, r):
    """Sums the modes r.hi to r.lo of [t] and flattens the result row by row.

    Returns
    -------
    numpy array of length M*N
    """
    data = t.data if isinstance(t, ImfTensor) else np.asarray(t, dtype=float)
    if data.ndim != 3 or data.shape[2] < r.lo:
        raise SerializationError("{} needs at least {} modes, tensor of shape {}".format(r, r.lo, data.shape))
    return data[:, :, r.hi - 1:r.lo].sum(axis=2).ravel()


def knn_classify(train_features, train_labels, query, k=1):
    """Label of [query] by a vote of its [k] nearest (Euclidean) training features.

    A tie between labels goes to the one whose voters have the smallest summed distance, then to
    the lowest label.
    """
    train_features = np.asarray(train_features, dtype=float)
    if train_features.ndim == 1:
        train_features = train_features[:, np.newaxis]
    if train_features.shape[0] == 0:
        raise DatasetError("empty training set")
    query = np.asarray(query, dtype=float).reshape(1, -1)
    distances = cdist(query, train_features)[0]
    return _vote(distances, np.asarray(train_labels), k)


def _vote(distances, labels, k):
    if k < 1:
        raise SignalError("k should be >= 1, got {}".format(k))
    nearest = np.argsort(distances, kind="stable")[:k]
    votes = {}
    for i in nearest:
        count, total = votes.get(labels[i], (0, 0.))
        votes[labels[i]] = (count + 1, total + distances[i])
    return min(votes, key=lambda label: (-votes[label][0], votes[label][1], label))


class KnnClassifier(BaseEstimator, ClassifierMixin):
    """Nearest neighbour classifier following the voting rule of knn_classify().

    Parameters
    -----------
    k : int
        Number of neighbours. Default : 1
    """

    def __init__(self, k=1):
        self.k = k

    def fit(self, X, y):
        self.train_features_ = np.asarray(X, dtype=float)
        self.train_labels_ = np.asarray(y)
        if self.train_features_.shape[0] == 0:
            raise DatasetError("empty training set")
        return self

    def predict(self, X):
        distances = cdist(np.asarray(X, dtype=float), self.train_features_)
        return np.array([_vote(row, self.train_labels_, self.k) for row in distances])


class LabeledFeatures(object):
    """ Feature vectors and their labels, evaluated by kfold_cv() like a FaceDataset
    """

    def __init__(self, features, labels):
        self._features = np.asarray(features, dtype=float)
        self.labels = np.asarray(labels, dtype=int)

    def features(self):
        return self._features

    def checkBalanced(self, folds=DEFAULT_FOLDS):
        check_balanced(self.labels, folds)


def kfold_scores(features, labels, estimator, folds=DEFAULT_FOLDS, seed=0):
    """ Accuracy of a clone of [estimator] on every fold of a shuffled stratified split
    """
    features = np.asarray(features, dtype=float)
    labels = np.asarray(labels)
    splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed % 2**32)
    scores = []
    for train, test in splitter.split(features, labels):
        model = clone(estimator).fit(features[train], labels[train])
        scores.append(accuracy_score(labels[test], model.predict(features[test])))
    return np.array(scores)


def kfold_cv(ds, pipeline=None, folds=DEFAULT_FOLDS, seed=0):
    """Stratified [folds]-fold cross-validation.

    Parameters
    -----------
    ds : FaceDataset or LabeledFeatures
        Balanced data, see FaceDataset.checkBalanced()
    pipeline : estimator with fit() and predict()
        Default : KnnClassifier(k=1)
    folds : int
    seed : int
        Seed of the fold assignment

    Returns
    -------
    mean : float
        Mean of the fold accuracies
    std : float
        Sample standard deviation of the fold accuracies
    """
    if pipeline is None:
        pipeline = KnnClassifier()
    ds.checkBalanced(folds)
    scores = kfold_scores(ds.features(), ds.labels, pipeline, folds, seed)
    return float(np.mean(scores)), float(np.std(scores, ddof=1)) if scores.size > 1 else 0.


def noisy_images(images, snr_db=DEFAULT_SNR_DB, seed=0):
    """ Adds speckle noise to every image, the noise of image i being drawn from realization_seed(seed, i)
    """
    return [add_speckle(np.asarray(img, dtype=float), SpeckleSpec(snr_db, realization_seed(seed, i)))
            for i, img in enumerate(images)]


def decompose_dataset(images, algo="emd", cfg=None, ens=None, spec=None, n_jobs=1, cache=None):
    """Serial decomposition of every image, its columns being the channels.

    Parameters
    -----------
    images : list of 2D arrays
    n_jobs : int
        Number of joblib workers, one image per task
    cache : str
        Directory of a joblib.Memory cache of the decompositions. Default : no cache

    Returns
    -------
    list of ImfTensor
    """
    decompose = Memory(cache, verbose=0).cache(serial_decompose) if cache else serial_decompose
    tensors = Parallel(n_jobs=n_jobs)(delayed(decompose)(img, spec, algo, cfg, ens) for img in images)
    logger.debug("decomposed %d images with serial-%s", len(tensors), algo)
    return tensors


def imf_count_histogram(counts):
    """ Number of decompositions per number of modes, e.g. {9: 66, 10: 960, ...}
    """
    counts = [c.nModes() if isinstance(c, ImfTensor) else int(c) for c in counts]
    return dict(sorted(Counter(counts).items()))


def evaluate_range(tensors, labels, r, k=1, folds=DEFAULT_FOLDS, seed=0):
    """Cross-validated accuracy of the features summing the IMFs of range [r].

    Returns
    -------
    (mean, std) of the fold accuracies
    """
    features = np.stack([sum_imf_range(normalize_imf_count(t), r) for t in tensors])
    return kfold_cv(LabeledFeatures(features, labels), KnnClassifier(k), folds, seed)


def sweep_ranges(tensors, labels, k=1, folds=DEFAULT_FOLDS, seed=0, n_modes=N_MODES):
    """Accuracy of every IMF range.

    Returns
    -------
    grid : numpy array, n_modes x n_modes
        grid[hi-1, lo-1] is the mean accuracy of range hi:lo, NaN where hi > lo
    stds : numpy array, n_modes x n_modes
        The matching standard deviations
    """
    normalized = [normalize_imf_count(t, n_modes) for t in tensors]
    grid = np.full((n_modes, n_modes), np.nan)
    stds = np.full((n_modes, n_modes), np.nan)
    for r in all_ranges(n_modes):
        features = np.stack([sum_imf_range(t, r) for t in normalized])
        grid[r.hi - 1, r.lo - 1], stds[r.hi - 1, r.lo - 1] = kfold_cv(
            LabeledFeatures(features, labels), KnnClassifier(k), folds, seed)
        logger.debug("%s: accuracy %.4f", r, grid[r.hi - 1, r.lo - 1])
    return grid, stds


def heatmap_sweep(ds, algo="emd", cfg=None, ens=None, snr_db=DEFAULT_SNR_DB, seed=0, k=1, folds=DEFAULT_FOLDS,
                  n_jobs=1, cache=None):
    """Accuracy heat map of the serial decomposition [algo] over every IMF range.

    The faces of [ds] get speckle noise at [snr_db], are decomposed, and every range hi:lo is
    evaluated by kfold_cv().

    Returns
    -------
    numpy array 10 x 10, NaN where hi > lo (see sweep_ranges())
    """
    ds.checkBalanced(folds)
    tensors = decompose_dataset(noisy_images(ds.images, snr_db, seed), algo, cfg, ens, n_jobs=n_jobs, cache=cache)
    grid, _ = sweep_ranges(tensors, ds.labels, k, folds, seed)
    return grid


def best_range(grid):
    """ The ImfRange of the highest accuracy of a heat map (the first one in row order on ties)
    """
    flat = np.where(np.isnan(grid), -np.inf, grid)
    hi, lo = np.unravel_index(int(np.argmax(flat)), grid.shape)
    return ImfRange(hi + 1, lo + 1, grid.shape[0])


def denoise(t, drop=2):
    """ Sums the modes of [t] left once its first [drop] IMFs are removed, as an M x N array
    """
    data = t.data if isinstance(t, ImfTensor) else np.asarray(t, dtype=float)
    if drop < 0:
        raise SignalError("drop should be >= 0, got {}".format(drop))
    return data[:, :, drop:].sum(axis=2)


class DatasetNotFoundError(LookupError):
    """Exception raised when the face dataset cannot be found.
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

class DatasetError(ValueError):
    """Exception raised for inconsistent datasets (unbalanced subjects, images of different sizes).
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

if __name__ == "__main__":
    pass
