"""This file defines the base Controller class and some presets controllers that you can use for following
a benchmark run.

Controllers can be attached to a runner using the runner's ``attach(Controller)`` method. The order in which
controllers are attached matters. Indeed, if controllers C1, C2 and C3 were attached in this order and C1 and C3
both listen to the onCaseEnd signal, the onCaseEnd() method of C1 will be called *before* the onCaseEnd() method
of C3, whenever a case ends.

"""
import csv
import json
import os
from warnings import warn

import joblib
import numpy as np

from ..helper.sifting import DecompositionWarning


class Controller(object):
    """A base controller that does nothing when receiving the various signals emitted by a runner. This class
    should be the base class of any controller you would want to define.
    """

    def __init__(self):
        """Activate this controller.

        All controllers inheriting this class should call this method in their own __init()__ using
        super(self.__class__, self).__init__().
        """

        self._active = True

    def setActive(self, active):
        """Activate or deactivate this controller.

        A controller should not react to any signal it receives as long as it is deactivated.
        """

        self._active = active

    def onStart(self, runner):
        """Called when the runner is going to start (before anything else).

        Parameters
        ----------
             runner : BenchRunner
                The runner firing the event
        """

        pass

    def onCaseStart(self, runner, case):
        """Called before the (warm-up and) timed runs of a case.

        Parameters
        ----------
        runner : BenchRunner
            The runner firing the event
        case : BenchCase
            The case about to be timed
        """

        pass

    def onRepetitionEnd(self, runner, case, repetition, sample, output):
        """Called after every timed run of a case.

        Parameters
        ----------
        runner : BenchRunner
            The runner firing the event
        case : BenchCase
            The case being timed
        repetition : int
            Index of the run, from 0
        sample : TimingSample
            Duration of the run
        output : object
            What the task returned (an ImfTensor for the decomposition tasks)
        """

        pass

    def onCaseEnd(self, runner, case, summary):
        """Called once all the runs of a case are done.

        Parameters
        ----------
        runner : BenchRunner
            The runner firing the event
        case : BenchCase
            The case just timed
        summary : QuartileSummary
            Quartiles of its durations
        """

        pass

    def onEnd(self, runner):
        """Called when every case of every scenario was timed, just before returning from the runner's run() method.
        """

        pass


class VerboseController(Controller):
    """A controller that prints one line on stdout whenever a case was timed.

    Parameters
    ----------
    show_outliers : bool
        Whether to print the outlying durations too
    """

    def __init__(self, show_outliers=False):
        super(self.__class__, self).__init__()
        self._show_outliers = show_outliers
        self._count = 0

    def onStart(self, runner):
        if (self._active == False):
            return

        self._count = 0

    def onCaseEnd(self, runner, case, summary):
        if (self._active == False):
            return

        self._count += 1
        print("{} / {} (D={}): median {:.3f} ms, Q1 {:.3f} ms, Q3 {:.3f} ms over {} runs".format(
            case.scenario, case.algorithm, case.D, summary.median, summary.q1, summary.q3, summary.n))
        if self._show_outliers and summary.outliers:
            print("    outliers (ms): {}".format(", ".join("{:.3f}".format(o) for o in summary.outliers)))

    def onEnd(self, runner):
        if (self._active == False):
            return

        print("{} case(s) timed".format(self._count))


class DeterminismController(Controller):
    """A controller that checks that every run of a case returns the same decomposition.

    A DecompositionWarning is issued for every case whose outputs differ between runs.
    """

    def __init__(self):
        super(self.__class__, self).__init__()
        self._reference = None
        self.mismatches = []

    def onStart(self, runner):
        if (self._active == False):
            return

        self.mismatches = []

    def onCaseStart(self, runner, case):
        if (self._active == False):
            return

        self._reference = None

    def onRepetitionEnd(self, runner, case, repetition, sample, output):
        if (self._active == False):
            return

        data = getattr(output, "data", output)
        if self._reference is None:
            self._reference = data
            return
        if not _same_output(self._reference, data) and case.key() not in self.mismatches:
            self.mismatches.append(case.key())
            warn("Run {} of {} returned a different decomposition than the first run".format(repetition + 1, case),
                 DecompositionWarning)


def _same_output(a, b):
    if isinstance(a, (list, tuple)) and isinstance(b, (list, tuple)):
        return len(a) == len(b) and all(_same_output(getattr(x, "data", x), getattr(y, "data", y))
                                        for x, y in zip(a, b))
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.shape(a) == np.shape(b) and np.array_equal(a, b)
    return a == b


class ReportController(Controller):
    """A controller that writes the report of the runner once the benchmark ended.

    Files written in [directory]: <basename>.json (the full report), <basename>.csv (one row per case)
    and <basename>_samples.jldump (every duration, per case).

    Parameters
    ----------
    directory : str
        Output directory, created if needed
    basename : str
        Name of the files, without extension
    extra : dict
        Fields added to the top level of the JSON report
    """

    def __init__(self, directory=".", basename="bench", extra=None):
        super(self.__class__, self).__init__()
        self._directory = directory
        self._basename = basename
        self._extra = dict(extra or {})
        self.paths = []

    def onEnd(self, runner):
        if (self._active == False):
            return

        from ..bench import REPORT_COLUMNS

        os.makedirs(self._directory, exist_ok=True)
        base = os.path.join(self._directory, self._basename)
        report = runner.report()
        report.update(self._extra)

        with open(base + ".json", "w") as f:
            json.dump(report, f, sort_keys=True, indent=2)

        with open(base + ".csv", "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(REPORT_COLUMNS)
            for row in report["results"]:
                writer.writerow([";".join(repr(o) for o in row[c]) if c == "outliers_ms" else row[c]
                                 for c in REPORT_COLUMNS])

        joblib.dump({r.case.key(): [s.duration_ms for s in r.samples] for r in runner.results()},
                    base + "_samples.jldump")
        self.paths = [base + ".json", base + ".csv", base + "_samples.jldump"]

if __name__ == "__main__":
    pass
