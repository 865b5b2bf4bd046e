"""Canonical abelian groups attached to a bitrade.

The relation matrix B has one row per star triple (row + col - sym = 0)
over the m label generators.  G(T) is the free abelian group on the
labels modulo the row lattice of B; H(T) is the subgroup generated by
within-role differences of label classes.  Both are reported by free
rank and invariant factors via Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import COL, ROW, SYM, metrics
from .exact import (
    determinant,
    gauss_solve,
    invert_unimodular,
    rank,
    smith_normal_form,
)
from .solver import all_labels


def relation_matrix(T):
    """B: one row per star triple, columns in universe order (rows, cols, syms)."""
    labels = all_labels(T)
    col_of = {lab: j for j, lab in enumerate(labels)}
    B = []
    for p in T.star:
        row = [0] * len(labels)
        row[col_of[p.row]] = 1
        row[col_of[p.col]] = 1
        row[col_of[p.sym]] = -1
        B.append(row)
    return B, labels


@dataclass(frozen=True)
class AbelianGroupStructure:
    free_rank: int
    invariant_factors: tuple  # each > 1, divisibility chain

    @property
    def is_finite(self):
        return self.free_rank == 0

    @property
    def order(self):
        if not self.is_finite:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.invariant_factors]
        return " + ".join(parts) if parts else "0"


def presentation(T):
    """Structure of G(T) = Z^m / rowlattice(B)."""
    B, labels = relation_matrix(T)
    snf = smith_normal_form(B)
    free = len(labels) - snf.rank
    return AbelianGroupStructure(free, tuple(snf.invariant_factors))


@dataclass(frozen=True)
class CanonicalImages:
    """Coordinates of each label's class in the SNF basis of G(T).

    Each image is a tuple: torsion coordinates (mod their invariant
    factor) followed by free coordinates.
    """

    structure: AbelianGroupStructure
    images: dict  # Label -> tuple of ints
    moduli: tuple  # invariant factor per torsion coordinate, then 0 per free one


def canonical_images(T):
    B, labels = relation_matrix(T)
    m = len(labels)
    snf = smith_normal_form(B)
    diag = list(snf.diagonal) + [0] * (m - len(snf.diagonal))
    keep = [k for k in range(m) if diag[k] != 1]
    moduli = tuple(diag[k] for k in keep)

    def reduce_vec(vec):
        return tuple(
            vec[k] % diag[k] if diag[k] > 1 else vec[k] for k in keep
        )

    # class of generator i has coordinates = row i of V
    images = {lab: reduce_vec(snf.V[i]) for i, lab in enumerate(labels)}
    for p in T.star:
        combined = tuple(
            (x + y - z) % mod if mod > 1 else x + y - z
            for x, y, z, mod in zip(
                images[p.row], images[p.col], images[p.sym], moduli
            )
        )
        assert all(v == 0 for v in combined), f"additive law fails at {p}"
    free = m - snf.rank
    return CanonicalImages(
        AbelianGroupStructure(free, tuple(snf.invariant_factors)), images, moduli
    )


def is_abelian_embeddable(T):
    """(verdict, witness): images injective within each role, or a colliding pair."""
    ci = canonical_images(T)
    for role in (ROW, COL, SYM):
        seen = {}
        for lab in T.universe(role):
            img = ci.images[lab]
            if img in seen:
                return False, (seen[img], lab)
            seen[img] = lab
    return True, None


def _lattice_basis(generators):
    """Basis rows of the lattice spanned by integer generator rows."""
    snf = smith_normal_form(generators)
    vinv = invert_unimodular(snf.V)
    basis = []
    for k, d in enumerate(snf.diagonal):
        if d != 0:
            basis.append([d * x for x in vinv[k]])
    return basis


def _in_basis(basis, row):
    """Integer coordinates of row in the given lattice basis."""
    res = gauss_solve([list(col) for col in zip(*basis)], row)
    assert res.status == "unique"
    coords = []
    for x in res.solution:
        assert x.denominator == 1, "row is not in the lattice"
        coords.append(int(x))
    return coords


def subgroup_H(T):
    """Structure of H(T), the within-role difference subgroup of G(T).

    H = (L + N) / N where N is the row lattice of B and L is generated
    by the differences e_{b_i} - e_{a_i} for a fixed base star triple a
    and i ranging over the row and column coordinates.
    """
    B, labels = relation_matrix(T)
    m = len(labels)
    col_of = {lab: j for j, lab in enumerate(labels)}
    base = T.star[0]
    gens = [row[:] for row in B]
    for p in T.star:
        for i in (ROW, COL):
            if p[i] != base[i]:
                row = [0] * m
                row[col_of[p[i]]] = 1
                row[col_of[base[i]]] -= 1
                gens.append(row)

    L = _lattice_basis(gens)  # basis of L + N
    C = [_in_basis(L, row) for row in B]  # N's generators in that basis
    snf = smith_normal_form(C)
    free = len(L) - snf.rank
    H = AbelianGroupStructure(free, tuple(snf.invariant_factors))
    if metrics(T).spherical:
        G = presentation(T)
        assert H.free_rank == 0, "H must be finite for a spherical bitrade"
        assert H.invariant_factors == G.invariant_factors
        assert G.free_rank == 2
    return H


@dataclass(frozen=True)
class DetInvarianceReport:
    common_value: int
    pairs_checked: int
    all_equal: bool
    nonzero: bool


def check_det_invariance(T):
    """|det B_{ij}| over all admissible deleted column pairs (i, j).

    Admissible: i indexes a row label and j a later-block label, or i a
    column label and j a symbol label.  For a spherical bitrade all
    these determinants agree and are nonzero.
    """
    B, labels = relation_matrix(T)
    met = metrics(T)
    o1, o2, m = met.o1, met.o2, met.m
    pairs = [(i, j) for i in range(o1) for j in range(o1, m)]
    pairs += [(i, j) for i in range(o1, o1 + o2) for j in range(o1 + o2, m)]
    values = set()
    for i, j in pairs:
        Bij = [[x for k, x in enumerate(row) if k not in (i, j)] for row in B]
        values.add(abs(determinant(Bij)))
    common = values.pop() if len(values) == 1 else None
    return DetInvarianceReport(
        common_value=common,
        pairs_checked=len(pairs),
        all_equal=common is not None,
        nonzero=bool(common),
    )


def integer_homotopy_rank(T):
    """(rank B, nullity, trivial_only): integer homotopies are trivial iff nullity is 2."""
    B, labels = relation_matrix(T)
    r = rank(B)
    nullity = len(labels) - r
    return r, nullity, nullity == 2
