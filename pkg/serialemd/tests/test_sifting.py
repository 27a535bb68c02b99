import unittest

import numpy as np
from hypothesis import given, settings, strategies as st

from serialemd.helper.sifting import (SiftConfig, Decomposition1D, SignalError, InsufficientExtremaError, check_signal,
                                      find_extrema, count_extrema, count_zero_crossings, is_imf, envelope,
                                      extract_imf, emd)
from serialemd.metrics import dominant_frequency, pearson
from serialemd import synth

FS = 1000.
T = np.arange(1000) / FS


class TestExtrema(unittest.TestCase):

  def test_single_oscillation(self):
    (max_pos, max_val), (min_pos, min_val) = find_extrema([0, 1, 0, -1, 0])
    np.testing.assert_array_equal(max_pos, [1])
    np.testing.assert_array_equal(max_val, [1])
    np.testing.assert_array_equal(min_pos, [3])
    np.testing.assert_array_equal(min_val, [-1])

  def test_constant_has_no_extrema(self):
    maxima, minima = find_extrema(np.ones(50))
    self.assertEqual(maxima[0].size, 0)
    self.assertEqual(minima[0].size, 0)

  def test_plateau_reported_at_its_middle(self):
    maxima, minima = find_extrema([0, 1, 1, 1, 0])
    np.testing.assert_array_equal(maxima[0], [2])
    self.assertEqual(minima[0].size, 0)

  def test_ends_are_never_extrema(self):
    maxima, minima = find_extrema([5, 0, 1, 0, 5])
    np.testing.assert_array_equal(maxima[0], [2])
    np.testing.assert_array_equal(minima[0], [1, 3])

  def test_sinusoid_extrema_count(self):
    maxima, minima = find_extrema(np.sin(2 * np.pi * 32 * T))
    self.assertLessEqual(abs(maxima[0].size - 32), 1)
    self.assertLessEqual(abs(minima[0].size - 32), 1)

  def test_too_short(self):
    with self.assertRaises(SignalError) as cm:
      find_extrema([1., 2.])
    self.assertIn("too short", str(cm.exception))

  def test_zero_crossings(self):
    self.assertEqual(count_zero_crossings([1, -1, 1]), 2)
    self.assertEqual(count_zero_crossings([1, 0, -1]), 1)
    self.assertEqual(count_zero_crossings([0, 0, 0]), 0)

  def test_is_imf(self):
    self.assertTrue(is_imf(np.sin(2 * np.pi * 8 * T)))
    self.assertFalse(is_imf(np.sin(2 * np.pi * 8 * T) + 3.))


class TestCheckSignal(unittest.TestCase):

  def test_rejects_non_finite(self):
    with self.assertRaises(SignalError):
      check_signal([0., 1., np.nan, 2., 3.])
    with self.assertRaises(SignalError):
      check_signal([0., 1., np.inf, 2., 3.])

  def test_rejects_short_and_2d(self):
    with self.assertRaises(SignalError):
      check_signal([0., 1., 2.])
    with self.assertRaises(SignalError):
      check_signal(np.zeros((4, 4)))

  def test_config_validation(self):
    with self.assertRaises(SignalError):
      SiftConfig(sd_threshold=0.)
    with self.assertRaises(SignalError):
      SiftConfig(sd_threshold=1.5)
    with self.assertRaises(SignalError):
      SiftConfig(max_sift_iters=0)
    with self.assertRaises(SignalError):
      SiftConfig(max_imfs=0)
    self.assertEqual(SiftConfig().replace(max_imfs=3).max_imfs, 3)


class TestEnvelope(unittest.TestCase):

  def test_two_equal_knots(self):
    np.testing.assert_allclose(envelope(([0, 9], [1., 1.]), 10), np.ones(10), atol=1e-12)

  def test_collinear_knots(self):
    np.testing.assert_allclose(envelope(([0, 5, 10], [0., 5., 10.]), 11), np.arange(11.), atol=1e-10)

  def test_interpolates_the_knots(self):
    env = envelope(([2, 5, 8], [1., 2., 1.]), 11)
    np.testing.assert_allclose(env[[2, 5, 8]], [1., 2., 1.], atol=1e-12)

  def test_sine_upper_envelope(self):
    s = np.sin(2 * np.pi * 5 * T)
    maxima, _ = find_extrema(s)
    env = envelope(maxima, s.size)
    self.assertLess(np.max(np.abs(env[100:-100] - 1.)), 0.05)

  def test_insufficient_extrema(self):
    with self.assertRaises(InsufficientExtremaError):
      envelope(([3], [1.]), 10)


class TestExtractImf(unittest.TestCase):

  def test_single_tone_is_its_own_imf(self):
    s = np.sin(2 * np.pi * 8 * T)
    imf, _ = extract_imf(s)
    self.assertGreaterEqual(pearson(imf, s), 0.99)

  def test_fast_tone_comes_first(self):
    s = np.sin(2 * np.pi * 32 * T) + np.sin(2 * np.pi * 2 * T)
    imf, _ = extract_imf(s)
    self.assertAlmostEqual(dominant_frequency(imf, FS), 32., delta=1.)

  def test_sift_count_bounded(self):
    rng = np.random.default_rng(3)
    s = rng.standard_normal(300)
    for iters in (1, 2, 5):
      _, count = extract_imf(s, SiftConfig(max_sift_iters=iters))
      self.assertLessEqual(count, iters)
      self.assertGreaterEqual(count, 1)

  def test_ramp_cannot_be_sifted(self):
    with self.assertRaises(InsufficientExtremaError):
      extract_imf(np.arange(100.))


class TestEmd(unittest.TestCase):

  def test_ramp_is_residue(self):
    x = np.linspace(-1., 3., 200)
    decomposition = emd(x)
    self.assertEqual(decomposition.nImfs(), 0)
    np.testing.assert_array_equal(decomposition.residue, x)

  def test_constant_is_residue(self):
    decomposition = emd(np.full(64, 2.5))
    self.assertEqual(decomposition.nImfs(), 0)

  def test_max_imfs(self):
    x = synth.multivariate_sinusoids()[:, 0]
    self.assertEqual(emd(x, SiftConfig(max_imfs=1)).nImfs(), 1)

  def test_variate_u(self):
    x = synth.multivariate_sinusoids()[:, 0]
    decomposition = emd(x)
    self.assertGreaterEqual(decomposition.nImfs(), 3)
    freqs = [dominant_frequency(imf, FS) for imf in decomposition.imfs[:3]]
    self.assertAlmostEqual(freqs[0], 32., delta=1.)
    self.assertGreaterEqual(freqs[0], freqs[1])
    self.assertGreaterEqual(freqs[1], freqs[2])

  def test_sift_counts(self):
    x = synth.multivariate_sinusoids()[:, 0]
    decomposition = emd(x)
    self.assertEqual(len(decomposition.sift_counts), decomposition.nImfs())
    for count in decomposition.sift_counts:
      self.assertGreaterEqual(count, 1)
      self.assertLessEqual(count, 300)
    self.assertIsNone(Decomposition1D([], np.zeros(5)).sift_counts)

  def test_imfs_pass_the_imf_test(self):
    x = synth.multivariate_sinusoids()[:, 3]
    for imf in emd(x, SiftConfig(max_imfs=2)).imfs:
      self.assertTrue(is_imf(imf))

  def test_to_array(self):
    decomposition = Decomposition1D([np.ones(5), 2 * np.ones(5)], np.zeros(5))
    self.assertEqual(decomposition.toArray().shape, (3, 5))
    np.testing.assert_array_equal(decomposition.reconstruct(), 3 * np.ones(5))
    with self.assertRaises(SignalError):
      Decomposition1D([np.ones(4)], np.zeros(5))

  @settings(max_examples=30, deadline=None)
  @given(st.lists(st.integers(-1000, 1000), min_size=4, max_size=150))
  def test_reconstruction(self, values):
    x = np.array(values, dtype=float) / 10.
    decomposition = emd(x, SiftConfig(max_sift_iters=50))
    scale = max(np.max(np.abs(x)), 1e-300)
    self.assertLessEqual(np.max(np.abs(decomposition.reconstruct() - x)), 1e-8 * scale)

if __name__ == '__main__':
    unittest.main()
