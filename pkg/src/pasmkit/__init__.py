"""Partial alternating sign matrices, their bijective companions, toggles,
rowmotion, gyration and link patterns."""

from __future__ import annotations

from .bijections import BijectionError, convert, family_of
from .enumeration import count_by_sum, count_pasm, enumerate_pasm, make_tables, orbit_report
from .grid import Dims
from .gyration import complete_to_asm, gyrate, gyrate_inverse, link_pattern, local_move
from .io import dumps, loads
from .objects import (
    CornerSumMatrix,
    InvariantError,
    OsculatingNest,
    PartialFpl,
    PartialHeightFunction,
    PartialLinkPattern,
    PartialMonotoneTriangle,
    Pasm,
    RectIce,
    StructuralError,
    validate,
)
from .poset import OrderIdeal, build_poset, gyr, rowmotion, toggle

__version__ = "0.1.0"
