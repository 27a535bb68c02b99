from .decomposer import Decomposer
from .scenario import Scenario, BenchCase
