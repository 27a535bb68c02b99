"""
This module contains the benchmark scenarios: the multi-variate signals timed per algorithm and per
transition length, the artificial texture image, and the noisy faces.

"""

import os

from ..base_classes import Scenario, BenchCase
from ..baseline import slicewise_decompose
from ..helper.ensemble import EnsembleConfig
from ..serializer import TransitionSpec, serial_decompose
from .. import synth

ALGOS = ("emd", "eemd", "ceemdan")
D_SWEEP = (1, 5, 10, 20, 50, 100, 200, 500)
DEFAULT_NR = 100


class _DecompositionScenario(Scenario):
    """Shared plumbing of the scenarios timing serial and slicewise decompositions.

    Parameters
    -----------
    nr : int
        Noise realizations of EEMD and CEEMDAN. Default : 100
    seed : int
        Seed of the ensembles
    """

    def __init__(self, nr=None, seed=0):
        self._nr = DEFAULT_NR if nr is None else int(nr)
        self._seed = seed
        self._ens = EnsembleConfig(nr=self._nr, base_seed=seed)
        self._data = None

    def nr(self):
        return self._nr

    def _serialCase(self, algo, D):
        x, spec, ens = self._data, TransitionSpec(D), self._ens
        return BenchCase(self.name(), "serial-" + algo, D, lambda: serial_decompose(x, spec, algo, None, ens))

    def _slicewiseCase(self, algo):
        x, ens = self._data, self._ens
        return BenchCase(self.name(), "slicewise-" + algo, None, lambda: slicewise_decompose(x, algo, None, ens))


class MultivariateAlgos(_DecompositionScenario):
    """The pick-up mask signals (1000 samples at 1000 Hz, 6 variates), decomposed by the serial and
    slicewise versions of every algorithm.
    """

    def __init__(self, D=50, nr=None, seed=0, algos=ALGOS):
        _DecompositionScenario.__init__(self, nr, seed)
        self._D = D
        self._algos = algos

    def name(self):
        return "multivariate-algos"

    def prepare(self):
        self._data = synth.multivariate_sinusoids()

    def cases(self):
        return ([self._serialCase(algo, self._D) for algo in self._algos] +
                [self._slicewiseCase(algo) for algo in self._algos])

    def describe(self):
        return {"nr": self._nr, "D": self._D}


class MultivariateDSweep(_DecompositionScenario):
    """Serial decompositions of the pick-up mask signals for a range of transition lengths, one case
    per transition length and algorithm.
    """

    def __init__(self, Ds=D_SWEEP, nr=None, seed=0, algos=ALGOS):
        _DecompositionScenario.__init__(self, nr, seed)
        self._Ds = tuple(Ds)
        self._algos = algos

    def name(self):
        return "multivariate-D-sweep"

    def prepare(self):
        self._data = synth.multivariate_sinusoids()

    def cases(self):
        return [self._serialCase(algo, D) for algo in self._algos for D in self._Ds]

    def describe(self):
        return {"nr": self._nr, "Ds": list(self._Ds), "algos": list(self._algos)}


class AtiAlgos(_DecompositionScenario):
    """The 101 x 101 artificial texture image, its columns being the channels.
    """

    def __init__(self, D=20, nr=None, seed=0, algos=ALGOS):
        _DecompositionScenario.__init__(self, nr, seed)
        self._D = D
        self._algos = algos

    def name(self):
        return "ati-algos"

    def prepare(self):
        self._data, _ = synth.make_ati()

    def cases(self):
        return ([self._serialCase(algo, self._D) for algo in self._algos] +
                [self._slicewiseCase(algo) for algo in self._algos])

    def describe(self):
        return {"nr": self._nr, "D": self._D}


class FacePerImage(_DecompositionScenario):
    """The faces of a dataset with speckle noise, decomposed one after the other by every serial
    algorithm. A run times the whole set of images; the report gives the per-image time as
    median_per_unit_ms.

    Parameters
    -----------
    dataset : str
        Dataset directory. Default : the SERIAL_EMD_DATASET environment variable
    n_images : int
        Number of images decomposed per run. Default : all
    snr_db : float
        Speckle level. Default : -6
    """

    def __init__(self, dataset=None, n_images=None, snr_db=-6., nr=None, seed=0, algos=ALGOS):
        _DecompositionScenario.__init__(self, nr, seed)
        self._dataset = dataset
        self._n_images = n_images
        self._snr_db = snr_db
        self._algos = algos
        self._images = []

    def name(self):
        return "face-per-image"

    def prepare(self):
        from ..recognition import load_orl, noisy_images

        faces = load_orl(self._dataset or os.environ.get("SERIAL_EMD_DATASET"))
        images = faces.images if self._n_images is None else faces.images[:self._n_images]
        self._images = noisy_images(images, self._snr_db, self._seed)

    def cases(self):
        out = []
        for algo in self._algos:
            images, ens = self._images, self._ens
            task = lambda images=images, algo=algo: [serial_decompose(img, None, algo, None, ens) for img in images]
            out.append(BenchCase(self.name(), "serial-" + algo, None, task, units=len(images)))
        return out

    def describe(self):
        return {"nr": self._nr, "images": len(self._images), "snr_db": self._snr_db}


SCENARIOS = {
    "multivariate-D-sweep": MultivariateDSweep,
    "multivariate-algos": MultivariateAlgos,
    "ati-algos": AtiAlgos,
    "face-per-image": FacePerImage,
}
ALIASES = {"d-sweep": "multivariate-D-sweep"}


def make_scenario(name, nr=None, seed=0, dataset=None):
    """ Builds the scenario identified by [name] (see SCENARIOS and ALIASES)
    """
    from ..bench import BenchError

    name = ALIASES.get(name, name)
    if name not in SCENARIOS:
        raise BenchError("unknown scenario '{}', expected one of {}"
                         .format(name, ", ".join(sorted(list(SCENARIOS) + list(ALIASES)))))
    if name == "face-per-image":
        return FacePerImage(dataset=dataset, nr=nr, seed=seed)
    return SCENARIOS[name](nr=nr, seed=seed)

if __name__ == "__main__":
    pass
