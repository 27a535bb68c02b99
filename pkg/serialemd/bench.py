"""
This module contains the timing harness of the decompositions.

Scenarios (see experiment/scenarios.py) provide cases, the BenchRunner times every case a number
of times and summarizes the durations by their quartiles, the way box plots show them. Controllers
attached to the runner react to its events (printing progress, checking determinism, writing the
report).

"""

import logging
import time

import numpy as np

from .base_classes import Scenario
from .experiment import base_controllers as controllers

logger = logging.getLogger(__name__)

DEFAULT_REPS = 10
OUTLIER_FACTOR = 1.5
REPORT_COLUMNS = ("scenario", "algorithm", "D", "n", "q1_ms", "median_ms", "q3_ms", "iqr_ms", "outliers_ms")


class TimingSample(object):
    """Wall-clock duration of one run of a case.

    Parameters
    -----------
    scenario : str
    algorithm : str
    D : int or None
    duration_ms : float
        Strictly positive duration, in milliseconds
    """

    def __init__(self, scenario, algorithm, D, duration_ms):
        if not duration_ms > 0:
            raise BenchError("durations should be > 0, got {}".format(duration_ms))
        self.scenario = scenario
        self.algorithm = algorithm
        self.D = D
        self.duration_ms = float(duration_ms)

    def __repr__(self):
        return "TimingSample({}, {}, D={}, {:.3f} ms)".format(self.scenario, self.algorithm, self.D, self.duration_ms)


class QuartileSummary(object):
    """Quartiles of a set of durations (milliseconds) and the durations lying more than
    1.5 IQR away from them.
    """

    def __init__(self, q1, median, q3, outliers, n):
        self.q1 = float(q1)
        self.median = float(median)
        self.q3 = float(q3)
        self.iqr = self.q3 - self.q1
        self.outliers = [float(o) for o in outliers]
        self.n = int(n)

    def toDict(self):
        return {"n": self.n, "q1_ms": self.q1, "median_ms": self.median, "q3_ms": self.q3,
                "iqr_ms": self.iqr, "outliers_ms": list(self.outliers)}

    def __repr__(self):
        return "QuartileSummary(q1={:.3f}, median={:.3f}, q3={:.3f}, outliers={}, n={})".format(
            self.q1, self.median, self.q3, self.outliers, self.n)


def _duration_ms(sample):
    return sample.duration_ms if isinstance(sample, TimingSample) else float(sample)


def quartile_stats(samples):
    """Summarizes durations by their quartiles.

    Quartiles are linearly interpolated on the sorted durations; outliers are the durations below
    q1 - 1.5 iqr or above q3 + 1.5 iqr.

    Parameters
    -----------
    samples : iterable of TimingSample or of durations in milliseconds

    Returns
    -------
    QuartileSummary
    """
    durations = np.sort([_duration_ms(s) for s in samples])
    if durations.size == 0:
        raise BenchError("cannot summarize an empty set of samples")

    q1, median, q3 = np.percentile(durations, [25, 50, 75])
    iqr = q3 - q1
    low = q1 - OUTLIER_FACTOR * iqr
    high = q3 + OUTLIER_FACTOR * iqr
    outliers = durations[(durations < low) | (durations > high)]
    return QuartileSummary(q1, median, q3, outliers, durations.size)


def time_repeated(task, reps=DEFAULT_REPS, scenario=None, algorithm=None, D=None, warmup=True, listener=None):
    """Times [reps] runs of [task] on a monotonic clock.

    Parameters
    -----------
    task : callable
        Called without arguments
    reps : int
        Number of timed runs. Default : 10
    warmup : bool
        Whether a first untimed run is made. Default : True
    listener : callable
        Called as listener(repetition, sample, output) after every timed run

    Returns
    -------
    list of TimingSample

    Throws
    -------
        BenchError
            If reps < 1 or if the task fails; the message tells which run failed.
    """
    if int(reps) != reps or reps < 1:
        raise BenchError("reps should be a positive integer, got {}".format(reps))
    resolution_ms = time.get_clock_info("perf_counter").resolution * 1e3

    if warmup:
        _run(task, scenario, algorithm, D, "warm-up")

    samples = []
    for repetition in range(int(reps)):
        start = time.perf_counter()
        output = _run(task, scenario, algorithm, D, "repetition {}".format(repetition + 1))
        elapsed_ms = (time.perf_counter() - start) * 1e3
        sample = TimingSample(scenario, algorithm, D, max(elapsed_ms, resolution_ms))
        samples.append(sample)
        if listener is not None:
            listener(repetition, sample, output)
    return samples


def _run(task, scenario, algorithm, D, which):
    try:
        return task()
    except Exception as e:
        raise BenchError("{} of {} / {} (D={}) failed: {}".format(which, scenario, algorithm, D, e)) from e


class BenchResult(object):
    """ Samples and summary of one timed case
    """

    def __init__(self, case, samples):
        self.case = case
        self.samples = samples
        self.summary = quartile_stats(samples)

    def toDict(self):
        row = {"scenario": self.case.scenario, "algorithm": self.case.algorithm, "D": self.case.D}
        row.update(self.summary.toDict())
        row["units"] = self.case.units
        row["median_per_unit_ms"] = self.summary.median / max(self.case.units, 1)
        return row


class BenchRunner(object):
    """The BenchRunner times every case of a list of scenarios.

    Attach controllers to it in order to follow the run (progress, determinism checks, report
    files).

    Parameters
    -----------
    scenarios : list of Scenario
    reps : int
        Number of timed runs per case. Default : 10
    warmup : bool
        Whether every case gets an untimed first run. Default : True
    """

    def __init__(self, scenarios, reps=DEFAULT_REPS, warmup=True):
        for scenario in scenarios:
            if not isinstance(scenario, Scenario):
                raise TypeError("The object you try to benchmark is not a Scenario.")
        self._scenarios = list(scenarios)
        self._reps = reps
        self._warmup = warmup
        self._controllers = []
        self._results = []
        self._current_case = None

    def attach(self, controller):
        if (isinstance(controller, controllers.Controller)):
            self._controllers.append(controller)
        else:
            raise TypeError("The object you try to attach is not a Controller.")

    def detach(self, controllerIdx):
        return self._controllers.pop(controllerIdx)

    def reps(self):
        return self._reps

    def scenarios(self):
        return self._scenarios

    def results(self):
        return self._results

    def currentCase(self):
        return self._current_case

    def run(self):
        """
        Runs the benchmark: calls the controllers method "onStart", then, for every scenario,
        prepares its data and times each of its cases (firing "onCaseStart", "onRepetitionEnd" and
        "onCaseEnd"), and ends up by calling the controllers method "onEnd".

        Returns
        -------
        The report, see report()
        """
        self._results = []
        for c in self._controllers: c.onStart(self)

        for scenario in self._scenarios:
            scenario.prepare()
            for case in scenario.cases():
                self._current_case = case
                for c in self._controllers: c.onCaseStart(self, case)
                samples = time_repeated(case.task, self._reps, case.scenario, case.algorithm, case.D,
                                        warmup=self._warmup, listener=self._onRepetition)
                result = BenchResult(case, samples)
                self._results.append(result)
                logger.debug("%s: median %.3f ms", case, result.summary.median)
                for c in self._controllers: c.onCaseEnd(self, case, result.summary)
            scenario.end()

        self._current_case = None
        for c in self._controllers: c.onEnd(self)
        return self.report()

    def _onRepetition(self, repetition, sample, output):
        for c in self._controllers: c.onRepetitionEnd(self, self._current_case, repetition, sample, output)

    def report(self):
        """Summaries of the timed cases, ready to be dumped as JSON.

        Returns
        -------
        dict with keys 'reps', 'scenarios' (parameters of every scenario), 'results' (one row per
        case, columns of REPORT_COLUMNS) and 'speedups' (see speedups())
        """
        rows = [result.toDict() for result in self._results]
        return {"reps": self._reps,
                "scenarios": {scenario.name(): scenario.describe() for scenario in self._scenarios},
                "results": rows,
                "speedups": speedups(rows)}


def speedups(rows):
    """Relative speed of the serial and slicewise versions of an algorithm within a scenario.

    Every 'serial-X' row is compared with the 'slicewise-X' row of the same scenario.

    Returns
    -------
    list of dict with keys scenario, baseline, candidate, D, ratio (baseline median over candidate
    median) and reduction_pct (percent of the baseline median saved by the candidate)
    """
    out = []
    for row in rows:
        if not row["algorithm"].startswith("serial-"):
            continue
        baseline_name = "slicewise-" + row["algorithm"][len("serial-"):]
        for baseline in rows:
            if baseline["scenario"] == row["scenario"] and baseline["algorithm"] == baseline_name:
                ratio = baseline["median_ms"] / row["median_ms"]
                out.append({"scenario": row["scenario"], "baseline": baseline_name,
                            "candidate": row["algorithm"], "D": row["D"], "ratio": ratio,
                            "reduction_pct": 100. * (1. - row["median_ms"] / baseline["median_ms"])})
    return out


def bench_suite(scenarios, reps=DEFAULT_REPS, nr=None, seed=0, dataset=None, attach=()):
    """Times the named scenarios.

    Parameters
    -----------
    scenarios : list of str
        Identifiers among SCENARIOS of experiment/scenarios.py ('d-sweep' being an alias of
        'multivariate-D-sweep')
    reps : int
        Number of timed runs per case
    nr : int
        Number of noise realizations of the ensemble algorithms. Default : the scenario default
    seed : int
        Seed of the ensembles and of the generated noise
    dataset : str
        Face dataset directory, only used by 'face-per-image'
    attach : list of Controller

    Returns
    -------
    The report of BenchRunner.report()

    Throws
    -------
        BenchError
            For an unknown scenario identifier.
    """
    from .experiment.scenarios import make_scenario

    runner = BenchRunner([make_scenario(name, nr=nr, seed=seed, dataset=dataset) for name in scenarios], reps)
    for controller in attach:
        runner.attach(controller)
    return runner.run()


class BenchError(RuntimeError):
    """Exception raised for invalid benchmark requests or failing benchmark tasks.
    Attributes:
        value -- explanation of the error
    """

    def __init__(self, value):
        self.value = value
    def __str__(self):
        return repr(self.value)

if __name__ == "__main__":
    pass
