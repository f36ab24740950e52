"""lifekit: a Conway's Game of Life toolkit.

Simulation on the plane and on toruses, RLE pattern IO, oscillator
analysis, glider-loop synthesis for every period >= 43, an embedded
verified oscillator catalog, torus soup censuses, and brute-force
catalyst placement search.
"""

from .core import (
    PLANE,
    Cell,
    CoordinateOverflowError,
    D8Transform,
    D8_ELEMENTS,
    LifeError,
    Pattern,
    Plane,
    Topology,
    TopologyError,
    Torus,
    step,
    step_n,
    transform,
)
from .rle import RleDocument, RleParseError, parse_rle, write_rle

__all__ = [
    "PLANE",
    "Cell",
    "CoordinateOverflowError",
    "D8Transform",
    "D8_ELEMENTS",
    "LifeError",
    "Pattern",
    "Plane",
    "RleDocument",
    "RleParseError",
    "Topology",
    "TopologyError",
    "Torus",
    "parse_rle",
    "step",
    "step_n",
    "transform",
    "write_rle",
]
