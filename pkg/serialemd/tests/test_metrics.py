import unittest

import numpy as np

from serialemd.metrics import (reconstruction_error, dominant_frequency, pearson, pad_modes, mode_correlation,
                               d_sweep_similarity, sift_load, max_joint_step)
from serialemd.helper.sifting import SignalError
from serialemd.serializer import ImfTensor, SerializationError, serialized_length
from serialemd import synth

T = np.arange(1000) / 1000.


class TestReconstructionError(unittest.TestCase):

  def test_exact(self):
    x = np.random.default_rng(0).standard_normal((50, 3))
    t = np.stack([0.25 * x, 0.75 * x], axis=2)
    self.assertLessEqual(reconstruction_error(x, t), 1e-15)

  def test_zeros(self):
    x = np.random.default_rng(1).standard_normal((20, 2))
    self.assertEqual(reconstruction_error(x, np.zeros((20, 2, 3))), 1.0)

  def test_perturbation(self):
    x = np.random.default_rng(2).standard_normal((20, 2))
    t = np.stack([x, np.zeros_like(x)], axis=2)
    t[4, 1, 1] += 1e-3
    self.assertGreaterEqual(reconstruction_error(x, t), 1e-3 / np.max(np.abs(x)) * (1 - 1e-9))

  def test_zero_signal_is_absolute(self):
    t = np.zeros((10, 1, 2))
    t[3, 0, 0] = 0.5
    self.assertEqual(reconstruction_error(np.zeros((10, 1)), t), 0.5)

  def test_shape_mismatch(self):
    with self.assertRaises(SerializationError):
      reconstruction_error(np.zeros((10, 2)), np.zeros((10, 3, 2)))


class TestDominantFrequency(unittest.TestCase):

  def test_sinusoid(self):
    self.assertEqual(dominant_frequency(np.sin(2 * np.pi * 32 * T), 1000.), 32.)

  def test_constant(self):
    self.assertEqual(dominant_frequency(np.full(100, 3.), 1000.), 0.)
    self.assertEqual(dominant_frequency(np.zeros(100), 1000.), 0.)

  def test_amplitude_dominance(self):
    s = np.sin(2 * np.pi * 32 * T) + 0.1 * np.sin(2 * np.pi * 2 * T)
    self.assertEqual(dominant_frequency(s, 1000.), 32.)

  def test_scale_invariance(self):
    s = np.sin(2 * np.pi * 8 * T) + 0.3 * np.sin(2 * np.pi * 50 * T)
    for c in (1e-3, 1., 250.):
      self.assertEqual(dominant_frequency(c * s, 1000.), 8.)

  def test_too_short(self):
    with self.assertRaises(SignalError):
      dominant_frequency(np.ones(7), 1000.)


class TestModeCorrelation(unittest.TestCase):

  def setUp(self):
    self.a = ImfTensor(np.random.default_rng(4).standard_normal((40, 3, 2)))

  def test_identity(self):
    np.testing.assert_allclose(mode_correlation(self.a, self.a), np.ones((2, 3)))

  def test_opposite(self):
    np.testing.assert_allclose(mode_correlation(self.a, -self.a.data), -np.ones((2, 3)))

  def test_symmetric(self):
    b = ImfTensor(np.random.default_rng(5).standard_normal((40, 3, 2)))
    np.testing.assert_array_equal(mode_correlation(self.a, b), mode_correlation(b, self.a))

  def test_zero_variance(self):
    b = self.a.data.copy()
    b[:, 1, 0] = 2.
    self.assertEqual(mode_correlation(self.a, b)[0, 1], 0.)
    self.assertEqual(pearson(np.ones(5), np.arange(5.)), 0.)

  def test_different_mode_counts(self):
    extra = np.random.default_rng(6).standard_normal((40, 3, 1))
    b = np.concatenate([self.a.data[:, :, :1], extra, self.a.data[:, :, 1:]], axis=2)
    r = mode_correlation(self.a, b)
    self.assertEqual(r.shape, (3, 3))
    np.testing.assert_allclose(r[0], 1.)
    np.testing.assert_array_equal(r[1], 0.)
    np.testing.assert_allclose(r[2], 1.)

  def test_residue_stays_last(self):
    b = np.zeros((40, 3, 4))
    padded_a, padded_b = pad_modes(self.a, b)
    self.assertEqual(padded_a.shape, (40, 3, 4))
    self.assertIs(padded_b, b)
    np.testing.assert_array_equal(padded_a[:, :, 0], self.a.data[:, :, 0])
    np.testing.assert_array_equal(padded_a[:, :, 1:3], 0.)
    np.testing.assert_array_equal(padded_a[:, :, 3], self.a.data[:, :, 1])

  def test_shape_mismatch(self):
    with self.assertRaises(SerializationError):
      mode_correlation(self.a, np.zeros((40, 4, 2)))


class TestDSweepSimilarity(unittest.TestCase):

  def test_keys_and_range(self):
    x = synth.multivariate_sinusoids(n_samples=300)
    similarity = d_sweep_similarity(x, (5, 30, 60))
    self.assertEqual(sorted(similarity), [5, 30, 60])
    for value in similarity.values():
      self.assertGreaterEqual(value, -1.)
      self.assertLessEqual(value, 1.)


class TestJointContinuity(unittest.TestCase):

  def test_transitions_smooth_a_step(self):
    x = np.zeros((200, 2))
    x[:, 1] = 10.
    self.assertEqual(max_joint_step(x, 1), 5.)
    self.assertAlmostEqual(max_joint_step(x, 50), 10. / 51)
    steps = [max_joint_step(x, D) for D in (1, 5, 20, 50, 100)]
    self.assertEqual(steps, sorted(steps, reverse=True))

  def test_sift_load(self):
    x = synth.multivariate_sinusoids(n_samples=200)[:, :3]
    load = sift_load(x, (1, 20))
    self.assertEqual(sorted(load), [1, 20])
    for D, (sifts, length) in load.items():
      self.assertGreaterEqual(sifts, 1)
      self.assertEqual(length, serialized_length(200, 3, D))
    self.assertEqual(sift_load(x, (1, 20)), load)

if __name__ == '__main__':
    unittest.main()
