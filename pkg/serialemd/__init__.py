"""Serial empirical mode decomposition of multi-signals and images."""

__version__ = '0.1'
