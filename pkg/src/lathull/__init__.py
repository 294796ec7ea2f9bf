"""Finite lattices, their distributive hulls, and the structures built around them."""

from .completion import distributive_ideals, downset_lattice, macneille, verify_hull
from .errors import (
    AlarmError,
    CapExceededError,
    CycleError,
    InputError,
    InvalidMapError,
    LatticeError,
    NotALatticeError,
    NotHeytingError,
)
from .heyting import heyting_arrow, heyting_status
from .order_core import BoundedLattice, LatticeMap, Poset, build_lattice, build_poset

__all__ = [
    "AlarmError",
    "BoundedLattice",
    "CapExceededError",
    "CycleError",
    "InputError",
    "InvalidMapError",
    "LatticeError",
    "LatticeMap",
    "NotALatticeError",
    "NotHeytingError",
    "Poset",
    "build_lattice",
    "build_poset",
    "distributive_ideals",
    "downset_lattice",
    "heyting_arrow",
    "heyting_status",
    "macneille",
    "verify_hull",
]

__version__ = "0.1.0"
