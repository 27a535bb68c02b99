"""
This module defines the base class for the benchmark scenarios.

"""

class Scenario(object):
    """All your benchmark scenarios should inherit this interface.

    A scenario owns the input data of one timing experiment (synthetic multi-variate signals, the
    artificial texture image, noisy faces, ...) and enumerates the cases to be timed on it. A case
    is one (algorithm, transition length D) pair together with the task that runs the
    corresponding decomposition.

    The benchmark runner first calls prepare(), then times every case returned by cases() and
    finally calls end().
    """

    def name(self):
        """Gets the identifier of the scenario, as used in the reports (e.g. 'multivariate-algos').
        """

        raise NotImplementedError()

    def prepare(self):
        """Builds the input data of the scenario. Called once, before cases().

        Data generation is kept out of the timed tasks, so that only the decompositions are timed.
        """

        pass

    def cases(self):
        """Gets the cases to be timed.

        Returns
        -------
        list of BenchCase
        """

        raise NotImplementedError()

    def nr(self):
        """Number of noise realizations used by the ensemble algorithms of this scenario, reported
        with the timings since the timings of EEMD and CEEMDAN scale with it. None if irrelevant.
        """

        return None

    def describe(self):
        """Parameters of the scenario recorded in the benchmark report.
        """

        return {"nr": self.nr()}

    def end(self):
        """Optional hook called once all the cases of the scenario were timed
        """

        pass


class BenchCase(object):
    """One timed case of a scenario.

    Parameters
    -----------
    scenario : str
        Identifier of the scenario the case belongs to
    algorithm : str
        Identifier of the algorithm, e.g. 'serial-eemd' or 'slicewise-emd'
    D : int or None
        Transition length used by serial algorithms, None for slicewise ones
    task : callable
        Runs the decomposition once and returns its output (an ImfTensor)
    units : int
        Number of items (e.g. images) processed by one run of the task. Default : 1
    """

    def __init__(self, scenario, algorithm, D, task, units=1):
        self.scenario = scenario
        self.algorithm = algorithm
        self.D = D
        self.task = task
        self.units = units

    def key(self):
        return (self.scenario, self.algorithm, self.D)

    def __repr__(self):
        return "BenchCase({}, {}, D={})".format(self.scenario, self.algorithm, self.D)
