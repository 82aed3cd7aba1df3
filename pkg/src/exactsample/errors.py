"""Exceptions shared across the package."""


class Exhausted(Exception):
    """A finite tape ran out of bits.

    Raised only by :class:`~exactsample.entropy.TapeSource`. The exact
    enumerator catches it and books the execution as residual mass.
    """


class Undecided(Exception):
    """A comparison hit its precision cap without separating its arguments."""


class InvalidParameter(ValueError):
    pass


class DegenerateBinning(ValueError):
    """Fewer than two chi-square bins survive tail merging."""
