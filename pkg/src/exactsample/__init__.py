"""Exact, float-free random variate generation on lazy uniform deviates."""

from exactsample.errors import DegenerateBinning, Exhausted, InvalidParameter, Undecided
from exactsample.entropy import BitSource, RecordingSource, SeededSource, TapeSource
from exactsample.lazyreal import LazyUniform, cmp_uniform, le_half, max2, new_uniform
from exactsample.creal import CReal, Dyadic

__version__ = "0.1.0"

__all__ = [
    "BitSource",
    "CReal",
    "DegenerateBinning",
    "Dyadic",
    "Exhausted",
    "InvalidParameter",
    "LazyUniform",
    "RecordingSource",
    "SeededSource",
    "TapeSource",
    "Undecided",
    "cmp_uniform",
    "le_half",
    "max2",
    "new_uniform",
]
