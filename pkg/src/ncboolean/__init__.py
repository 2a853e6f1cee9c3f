"""Boolean cumulants of free random variables and of their anticommutator."""

__version__ = "0.1.0"
