"""Named small lattices, ortholattices and Cartan maps used in tests and demos."""

from __future__ import annotations

import itertools

from .order_core import BoundedLattice, build_lattice


def chain(n: int) -> BoundedLattice:
    """``n``-element chain labelled 0, c1, ..., 1 (``chain(1)`` is the trivial lattice)."""
    if n == 1:
        return build_lattice(["0"], [])
    if n == 3:
        labels = ["0", "m", "1"]
    else:
        labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return build_lattice(labels, zip(labels, labels[1:]))


def boolean(k: int) -> BoundedLattice:
    """Boolean lattice of ``2**k`` elements.

    ``boolean(2)`` is labelled 0, a, b, 1; larger ones use subset words such
    as ``xy`` over the letters x, y, z, w, ... with 0 and 1 at the ends.
    """
    if k == 0:
        return chain(1)
    if k == 1:
        return chain(2)
    if k == 2:
        return build_lattice(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    letters = "xyzwuv"[:k]
    subsets = [
        "".join(c) for r in range(k + 1) for c in itertools.combinations(letters, r)
    ]
    name = {s: s for s in subsets}
    name[""] = "0"
    name[letters] = "1"
    covers = [
        (name[s], name[t]) for s in subsets for t in subsets if len(t) == len(s) + 1 and set(s) <= set(t)
    ]
    return build_lattice([name[s] for s in subsets], covers)


def m3() -> BoundedLattice:
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )


def n5() -> BoundedLattice:
    """Pentagon: 0 < a < c < 1 and 0 < b < 1."""
    return build_lattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )


def square() -> BoundedLattice:
    """The four-element Boolean lattice written 0, a, a', 1."""
    return build_lattice(
        ["0", "a", "a'", "1"], [("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")]
    )


def square_with_extra_join() -> BoundedLattice:
    """0, a, a', b, 1 with a, a' < b < 1: a non-hull extension of the square."""
    return build_lattice(
        ["0", "a", "a'", "b", "1"],
        [("0", "a"), ("0", "a'"), ("a", "b"), ("a'", "b"), ("b", "1")],
    )


def mo2_lattice() -> BoundedLattice:
    atoms = ["a", "a'", "b", "b'"]
    return build_lattice(["0", *atoms, "1"], [("0", x) for x in atoms] + [(x, "1") for x in atoms])


def o6_lattice() -> BoundedLattice:
    """Benzene ring: 0 < a < b < 1 and 0 < b' < a' < 1."""
    return build_lattice(
        ["0", "a", "b", "b'", "a'", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")],
    )


def finite_topology() -> BoundedLattice:
    """Open sets of the space {x, y, z} with opens {}, {x}, {x,y}, {x,z}, {x,y,z}."""
    return build_lattice(
        ["0", "x", "xy", "xz", "1"],
        [("0", "x"), ("x", "xy"), ("x", "xz"), ("xy", "1"), ("xz", "1")],
    )


def catalog_lattices() -> dict[str, BoundedLattice]:
    out = {f"C{n}": chain(n) for n in range(2, 7)}
    out.update({"B2": boolean(2), "B3": boolean(3), "M3": m3(), "N5": n5()})
    out.update({"MO2": mo2_lattice(), "O6": o6_lattice()})
    return out
