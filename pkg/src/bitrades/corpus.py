"""Small reference bitrades used in tests and documentation."""

from __future__ import annotations

from fractions import Fraction

from .core import COL, ROW, SYM, Label, Triple, build_bitrade
from .geometry import extract_bitrade


def _from_tables(row_names, col_names, sym_names, star_cells, delta_cells):
    rows = {n: Label(ROW, i, n) for i, n in enumerate(row_names)}
    cols = {n: Label(COL, i, n) for i, n in enumerate(col_names)}
    syms = {n: Label(SYM, i, n) for i, n in enumerate(sym_names)}

    def triples(cells):
        return [Triple(rows[r], cols[c], syms[s]) for r, c, s in cells]

    return build_bitrade(triples(star_cells), triples(delta_cells))


def intercalate():
    """The smallest bitrade: a 2x2x2 exchange."""
    return _from_tables(
        ["r0", "r1"],
        ["c0", "c1"],
        ["s0", "s1"],
        [("r0", "c0", "s0"), ("r0", "c1", "s1"), ("r1", "c0", "s1"), ("r1", "c1", "s0")],
        [("r0", "c0", "s1"), ("r0", "c1", "s0"), ("r1", "c0", "s0"), ("r1", "c1", "s1")],
    )


def example_4x5():
    """Spherical bitrade of size 12 with 4 rows, 5 columns and 5 symbols."""
    star = [
        ("r0", "c0", "s4"), ("r0", "c2", "s0"), ("r0", "c4", "s2"),
        ("r1", "c3", "s2"), ("r1", "c4", "s4"),
        ("r2", "c0", "s0"), ("r2", "c1", "s1"), ("r2", "c2", "s2"), ("r2", "c3", "s3"),
        ("r3", "c0", "s1"), ("r3", "c1", "s3"), ("r3", "c3", "s4"),
    ]
    delta = [
        ("r0", "c0", "s0"), ("r0", "c2", "s2"), ("r0", "c4", "s4"),
        ("r1", "c3", "s4"), ("r1", "c4", "s2"),
        ("r2", "c0", "s1"), ("r2", "c1", "s3"), ("r2", "c2", "s0"), ("r2", "c3", "s2"),
        ("r3", "c0", "s4"), ("r3", "c1", "s1"), ("r3", "c3", "s3"),
    ]
    return _from_tables(
        ["r0", "r1", "r2", "r3"],
        ["c0", "c1", "c2", "c3", "c4"],
        ["s0", "s1", "s2", "s3", "s4"],
        star,
        delta,
    )


_TOROIDAL_LEFT = [
    ("e", "f", "1"), ("e", "b", "3"), ("e", "c", "4"), ("e", "d", "5"),
    ("x", "f", "3"), ("x", "a", "6"), ("x", "b", "2"), ("x", "c", "5"), ("x", "g", "7"),
    ("y", "f", "5"), ("y", "d", "1"),
    ("z", "b", "4"), ("z", "c", "2"),
    ("t", "f", "7"), ("t", "a", "5"), ("t", "b", "6"), ("t", "c", "3"), ("t", "g", "2"),
]

_TOROIDAL_RIGHT = [
    ("e", "f", "3"), ("e", "b", "4"), ("e", "c", "5"), ("e", "d", "1"),
    ("x", "f", "7"), ("x", "a", "5"), ("x", "b", "6"), ("x", "c", "3"), ("x", "g", "2"),
    ("y", "f", "1"), ("y", "d", "5"),
    ("z", "b", "2"), ("z", "c", "4"),
    ("t", "f", "5"), ("t", "a", "6"), ("t", "b", "3"), ("t", "c", "2"), ("t", "g", "7"),
]

_TOROIDAL_AXES = (
    ["e", "x", "y", "z", "t"],
    ["f", "a", "b", "c", "d", "g"],
    ["1", "2", "3", "4", "5", "6", "7"],
)


def toroidal():
    """Genus-1 bitrade of size 18 that embeds into no group."""
    return _from_tables(*_TOROIDAL_AXES, _TOROIDAL_LEFT, _TOROIDAL_RIGHT)


def toroidal_swapped():
    """The same instance with the roles of star and delta exchanged."""
    return _from_tables(*_TOROIDAL_AXES, _TOROIDAL_RIGHT, _TOROIDAL_LEFT)


NESTED_LINES = [
    (0, 0, Fraction(1, 2)),
    (0, Fraction(1, 2), 1),
    (Fraction(1, 2), 0, 1),
    (Fraction(1, 2), Fraction(1, 2), Fraction(3, 4)),
    (Fraction(1, 2), Fraction(1, 4), Fraction(1, 2)),
    (Fraction(1, 4), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 4), Fraction(1, 4), Fraction(3, 4)),
]


def nested_intercalate():
    """Size-7 pointed bitrade from subdividing a dissection triangle.

    Take the four-triangle dissection of the intercalate and replace its
    middle triangle by a half-scale copy of the same dissection; the
    replaced triangle's triple becomes a trigon.
    """
    return extract_bitrade(NESTED_LINES)
