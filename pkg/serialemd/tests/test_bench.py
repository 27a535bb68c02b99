import json
import os
import tempfile
import unittest

import joblib
import numpy as np

from serialemd.bench import (TimingSample, QuartileSummary, BenchRunner, BenchError, quartile_stats, time_repeated,
                             speedups, REPORT_COLUMNS)
from serialemd.base_classes import Scenario, BenchCase
from serialemd.experiment import base_controllers as controllers
from serialemd.experiment.scenarios import MultivariateAlgos, MultivariateDSweep, make_scenario
from serialemd.helper.sifting import DecompositionWarning


class CountingScenario(Scenario):

  def __init__(self, outputs=None):
    self.prepared = 0
    self.calls = 0
    self._outputs = outputs

  def name(self):
    return "counting"

  def prepare(self):
    self.prepared += 1

  def _task(self):
    self.calls += 1
    if self._outputs is None:
      return np.zeros(3)
    return self._outputs[(self.calls - 1) % len(self._outputs)]

  def cases(self):
    return [BenchCase(self.name(), "serial-emd", 5, self._task),
            BenchCase(self.name(), "slicewise-emd", None, self._task)]


class RecordingController(controllers.Controller):

  def __init__(self):
    super(self.__class__, self).__init__()
    self.events = []

  def onStart(self, runner):
    if (self._active == False):
      return
    self.events.append("start")

  def onCaseStart(self, runner, case):
    if (self._active == False):
      return
    self.events.append("case " + case.algorithm)

  def onRepetitionEnd(self, runner, case, repetition, sample, output):
    if (self._active == False):
      return
    self.events.append(repetition)

  def onCaseEnd(self, runner, case, summary):
    if (self._active == False):
      return
    self.events.append("end " + case.algorithm)

  def onEnd(self, runner):
    if (self._active == False):
      return
    self.events.append("stop")


class TestQuartiles(unittest.TestCase):

  def test_odd_count(self):
    summary = quartile_stats(range(1, 10))
    self.assertEqual((summary.q1, summary.median, summary.q3), (3., 5., 7.))
    self.assertEqual(summary.iqr, 4.)
    self.assertEqual(summary.outliers, [])
    self.assertEqual(summary.n, 9)

  def test_single_sample(self):
    summary = quartile_stats([2.5])
    self.assertEqual((summary.q1, summary.median, summary.q3, summary.iqr), (2.5, 2.5, 2.5, 0.))

  def test_outlier(self):
    summary = quartile_stats([1., 1., 1., 1., 100.])
    self.assertEqual(summary.outliers, [100.])
    self.assertEqual(summary.median, 1.)

  def test_order_does_not_matter(self):
    values = [4., 9., 1., 7., 3., 3.5]
    self.assertEqual(quartile_stats(values).toDict(), quartile_stats(sorted(values)).toDict())

  def test_samples(self):
    samples = [TimingSample("s", "a", 1, d) for d in (1., 2., 3.)]
    self.assertEqual(quartile_stats(samples).median, 2.)

  def test_empty(self):
    with self.assertRaises(BenchError):
      quartile_stats([])

  def test_durations_are_positive(self):
    with self.assertRaises(BenchError):
      TimingSample("s", "a", None, 0.)

  def test_summary_dict(self):
    row = QuartileSummary(1., 2., 4., [9.], 5).toDict()
    self.assertEqual(row["iqr_ms"], 3.)
    self.assertEqual(row["outliers_ms"], [9.])


class TestTimeRepeated(unittest.TestCase):

  def test_counts(self):
    calls = []
    samples = time_repeated(lambda: calls.append(1), reps=4, scenario="s", algorithm="a", D=2)
    self.assertEqual(len(samples), 4)
    self.assertEqual(len(calls), 5)
    for sample in samples:
      self.assertGreater(sample.duration_ms, 0.)
      self.assertEqual((sample.scenario, sample.algorithm, sample.D), ("s", "a", 2))

  def test_without_warmup(self):
    calls = []
    time_repeated(lambda: calls.append(1), reps=3, warmup=False)
    self.assertEqual(len(calls), 3)

  def test_listener(self):
    seen = []
    time_repeated(lambda: "out", reps=2, listener=lambda r, s, o: seen.append((r, o)))
    self.assertEqual(seen, [(0, "out"), (1, "out")])

  def test_failing_task(self):
    def fail():
      raise ValueError("boom")
    with self.assertRaises(BenchError) as context:
      time_repeated(fail, reps=2)
    self.assertIn("warm-up", str(context.exception))
    with self.assertRaises(BenchError) as context:
      time_repeated(fail, reps=2, warmup=False)
    self.assertIn("repetition 1", str(context.exception))

  def test_invalid_reps(self):
    with self.assertRaises(BenchError):
      time_repeated(lambda: None, reps=0)


class TestBenchRunner(unittest.TestCase):

  def test_events(self):
    recorder = RecordingController()
    runner = BenchRunner([CountingScenario()], reps=2)
    runner.attach(recorder)
    runner.run()
    self.assertEqual(recorder.events, ["start", "case serial-emd", 0, 1, "end serial-emd",
                                       "case slicewise-emd", 0, 1, "end slicewise-emd", "stop"])

  def test_inactive_controller(self):
    recorder = RecordingController()
    recorder.setActive(False)
    runner = BenchRunner([CountingScenario()], reps=1)
    runner.attach(recorder)
    runner.run()
    self.assertEqual(recorder.events, [])

  def test_attach_and_detach(self):
    runner = BenchRunner([CountingScenario()])
    with self.assertRaises(TypeError):
      runner.attach("not a controller")
    recorder = RecordingController()
    runner.attach(recorder)
    self.assertIs(runner.detach(0), recorder)
    with self.assertRaises(TypeError):
      BenchRunner([object()])

  def test_report(self):
    scenario = CountingScenario()
    report = BenchRunner([scenario], reps=3).run()
    self.assertEqual(scenario.prepared, 1)
    self.assertEqual(scenario.calls, 8)
    self.assertEqual(report["reps"], 3)
    self.assertEqual(report["scenarios"], {"counting": {"nr": None}})
    self.assertEqual(len(report["results"]), 2)
    for row in report["results"]:
      for column in REPORT_COLUMNS:
        self.assertIn(column, row)
      self.assertEqual(row["n"], 3)
      self.assertEqual(row["units"], 1)
      self.assertEqual(row["median_per_unit_ms"], row["median_ms"])
    self.assertEqual(len(report["speedups"]), 1)
    self.assertEqual(report["speedups"][0]["baseline"], "slicewise-emd")


class TestSpeedups(unittest.TestCase):

  def test_ratio(self):
    rows = [{"scenario": "s", "algorithm": "serial-emd", "D": 50, "median_ms": 10.},
            {"scenario": "s", "algorithm": "slicewise-emd", "D": None, "median_ms": 40.},
            {"scenario": "t", "algorithm": "slicewise-emd", "D": None, "median_ms": 1.}]
    out = speedups(rows)
    self.assertEqual(len(out), 1)
    self.assertEqual(out[0]["ratio"], 4.)
    self.assertEqual(out[0]["reduction_pct"], 75.)

  def test_no_baseline(self):
    self.assertEqual(speedups([{"scenario": "s", "algorithm": "serial-emd", "D": 5, "median_ms": 1.}]), [])


class TestControllers(unittest.TestCase):

  def test_determinism(self):
    checker = controllers.DeterminismController()
    runner = BenchRunner([CountingScenario([np.zeros(3), np.ones(3)])], reps=3, warmup=False)
    runner.attach(checker)
    with self.assertWarns(DecompositionWarning):
      runner.run()
    self.assertEqual(len(checker.mismatches), 2)

  def test_determinism_silent(self):
    checker = controllers.DeterminismController()
    runner = BenchRunner([CountingScenario()], reps=3)
    runner.attach(checker)
    runner.run()
    self.assertEqual(checker.mismatches, [])

  def test_report_files(self):
    with tempfile.TemporaryDirectory() as directory:
      reporter = controllers.ReportController(directory, "timings", extra={"seed": 4})
      runner = BenchRunner([CountingScenario()], reps=2)
      runner.attach(controllers.VerboseController(show_outliers=True))
      runner.attach(reporter)
      runner.run()
      self.assertEqual(len(reporter.paths), 3)
      for path in reporter.paths:
        self.assertTrue(os.path.exists(path))
      with open(os.path.join(directory, "timings.json")) as f:
        report = json.load(f)
      self.assertEqual(report["seed"], 4)
      self.assertEqual(len(report["results"]), 2)
      with open(os.path.join(directory, "timings.csv")) as f:
        lines = f.read().splitlines()
      self.assertEqual(lines[0], ",".join(REPORT_COLUMNS))
      self.assertEqual(len(lines), 3)
      samples = joblib.load(os.path.join(directory, "timings_samples.jldump"))
      self.assertEqual(len(samples[("counting", "serial-emd", 5)]), 2)


class TestScenarios(unittest.TestCase):

  def test_make_scenario(self):
    self.assertIsInstance(make_scenario("d-sweep"), MultivariateDSweep)
    self.assertIsInstance(make_scenario("multivariate-algos", nr=7), MultivariateAlgos)
    self.assertEqual(make_scenario("multivariate-algos", nr=7).nr(), 7)
    with self.assertRaises(BenchError):
      make_scenario("nope")

  def test_d_sweep_cases(self):
    scenario = MultivariateDSweep()
    scenario.prepare()
    cases = [(case.algorithm, case.D) for case in scenario.cases()]
    self.assertEqual(len(cases), 24)
    for algo in ("emd", "eemd", "ceemdan"):
      self.assertEqual([D for name, D in cases if name == "serial-" + algo], [1, 5, 10, 20, 50, 100, 200, 500])

  def test_d_sweep_report_rows(self):
    report = BenchRunner([make_scenario("d-sweep", nr=2)], reps=1).run()
    rows = sorted((row["algorithm"], row["D"]) for row in report["results"])
    self.assertEqual(len(rows), 24)
    self.assertEqual(len(set(rows)), 24)
    self.assertEqual(report["scenarios"]["multivariate-D-sweep"]["nr"], 2)
    self.assertEqual(report["scenarios"]["multivariate-D-sweep"]["algos"], ["emd", "eemd", "ceemdan"])

  def test_multivariate_emd(self):
    scenario = MultivariateAlgos(algos=("emd",))
    checker = controllers.DeterminismController()
    runner = BenchRunner([scenario], reps=2)
    runner.attach(checker)
    report = runner.run()
    self.assertEqual([row["algorithm"] for row in report["results"]], ["serial-emd", "slicewise-emd"])
    self.assertEqual(checker.mismatches, [])
    self.assertEqual(report["scenarios"]["multivariate-algos"], {"nr": 100, "D": 50})

if __name__ == '__main__':
    unittest.main()
