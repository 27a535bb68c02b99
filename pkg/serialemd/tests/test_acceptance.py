"""End-to-end checks of the serial decompositions on the synthetic data.

The timing checks are slow and machine dependent; they only run with SERIAL_EMD_SLOW=1.
"""
import os
import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from serialemd import synth
from serialemd.baseline import slicewise_decompose
from serialemd.bench import BenchRunner
from serialemd.decomposers import make_decomposer
from serialemd.experiment.scenarios import AtiAlgos, MultivariateAlgos, MultivariateDSweep
from serialemd.helper.ensemble import EnsembleConfig, eemd
from serialemd.metrics import dominant_frequency, max_joint_step, mode_correlation, pearson
from serialemd.serializer import TransitionSpec, serial_decompose

FS = 1000.
SLOW = os.environ.get("SERIAL_EMD_SLOW") == "1"


class TestReconstructionIdentity(unittest.TestCase):

  @settings(max_examples=100, deadline=None)
  @given(st.sampled_from(["emd", "eemd", "ceemdan"]), st.sampled_from(["direct", "serial", "slicewise"]),
         st.integers(16, 120), st.integers(1, 4), st.integers(0, 2**32 - 1))
  def test_modes_sum_to_input(self, algo, route, M, N, seed):
    x = np.random.default_rng(seed).uniform(-5., 5., size=(M, N))
    ens = EnsembleConfig(nr=4, base_seed=seed)
    if route == "direct":
      modes = make_decomposer(algo, None, ens).decompose(x[:, 0]).reconstruct()
      target = x[:, 0]
    elif route == "serial":
      modes = serial_decompose(x, TransitionSpec.fromLength(M), algo, None, ens).reconstruct()
      target = x
    else:
      modes = slicewise_decompose(x, algo, None, ens).reconstruct()
      target = x
    np.testing.assert_allclose(modes, target, rtol=0, atol=1e-8 * np.max(np.abs(target)))


class TestFrequencyRecovery(unittest.TestCase):

  @classmethod
  def setUpClass(cls):
    cls.mask = synth.PickupMask()
    cls.x = synth.multivariate_sinusoids(cls.mask)
    cls.serial = serial_decompose(cls.x, TransitionSpec(50))

  def test_fastest_tone_in_first_imf(self):
    for j in self.mask.variatesWith(32.):
      self.assertAlmostEqual(dominant_frequency(self.serial.mode(0)[:, j], FS), 32., delta=1.)

  def test_common_tone_in_every_variate(self):
    for j in range(self.mask.nVariates()):
      freqs = [dominant_frequency(self.serial.mode(k)[:, j], FS) for k in range(self.serial.nModes())]
      self.assertTrue(any(abs(f - synth.COMMON_FREQ) <= 1. for f in freqs), "variate {}: {}".format(j, freqs))

  def test_close_to_slicewise(self):
    r = mode_correlation(self.serial, slicewise_decompose(self.x))
    self.assertTrue(np.all(r[0] >= 0.9), r[0])
    self.assertTrue(np.all(r[1] >= 0.7), r[1])


  def test_channels_already_join_continuously(self):
    inner = np.max(np.abs(np.diff(self.x, axis=0)))
    self.assertLessEqual(max_joint_step(self.x, 1), inner)


class TestEnsembleTones(unittest.TestCase):

  def test_variate_u_tones_in_order(self):
    x = synth.multivariate_sinusoids()[:, 0]
    decomposition = eemd(x, None, EnsembleConfig(nstd=0.2, nr=100))
    freqs = [dominant_frequency(imf, FS) for imf in decomposition.imfs]
    positions = []
    for tone in synth.DEFAULT_FREQS:
      matches = [k for k, f in enumerate(freqs) if abs(f - tone) <= 1.]
      self.assertTrue(matches, "{} Hz missing from {}".format(tone, freqs))
      positions.append(matches[0])
    self.assertEqual(positions, sorted(positions))
    for f in freqs[:positions[0]]:
      self.assertGreater(f, 33.)


class TestAtiComponents(unittest.TestCase):

  @classmethod
  def setUpClass(cls):
    cls.ati, cls.atcs = synth.make_ati()
    cls.tensor = serial_decompose(cls.ati, TransitionSpec(20), "eemd", None, EnsembleConfig(nr=100))

  def test_in_column_half_bounds_the_correlation(self):
    spec = synth.AtiSpec()
    coords = np.arange(spec.size) / spec.size
    for f, atc in zip(spec.spatial_freqs, self.atcs):
      in_column = np.repeat(np.sin(2 * np.pi * f * coords)[:, np.newaxis], spec.size, axis=1)
      self.assertAlmostEqual(pearson(in_column, atc), 1. / np.sqrt(2.))

  def test_first_mode_is_the_finest_component(self):
    self.assertGreaterEqual(pearson(self.tensor.mode(0), self.atcs[0]), 0.65)

  def test_every_component_has_a_mode(self):
    for atc in self.atcs:
      best = max(pearson(self.tensor.mode(k), atc) for k in range(self.tensor.nModes()))
      self.assertGreaterEqual(best, 0.55)


class TestNoiseCapture(unittest.TestCase):

  def test_ati_speckle(self):
    ati, _ = synth.make_ati()
    noisy = synth.add_speckle(ati, synth.SpeckleSpec(-6., 0))
    tensor = serial_decompose(noisy, TransitionSpec(20))
    kept = tensor.data[:, :, 2:].sum(axis=2)
    self.assertGreater(pearson(ati, kept), pearson(ati, noisy))


@unittest.skipUnless(SLOW, "timing checks need SERIAL_EMD_SLOW=1")
class TestTimings(unittest.TestCase):

  def _medians(self, scenario):
    report = BenchRunner([scenario], reps=10).run()
    return {row["algorithm"]: row["median_ms"] for row in report["results"]}

  def test_algorithm_order(self):
    for scenario in (MultivariateAlgos(nr=20), AtiAlgos(nr=20)):
      medians = self._medians(scenario)
      self.assertLess(medians["serial-emd"], medians["serial-eemd"])
      self.assertLess(medians["serial-eemd"], medians["serial-ceemdan"])
      if scenario.name() == "ati-algos":
        self.assertLessEqual(medians["serial-eemd"], medians["slicewise-eemd"] / 1.2)

  def test_long_transitions_cost_length(self):
    report = BenchRunner([MultivariateDSweep(Ds=(1, 500), algos=("emd",))], reps=10).run()
    medians = {row["D"]: row["median_ms"] for row in report["results"]}
    self.assertLess(medians[1], medians[500])

if __name__ == '__main__':
    unittest.main()
