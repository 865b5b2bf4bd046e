"""Latin bitrades: validation, permutations, surface metrics, isotopy.

A bitrade is a pair of disjoint triple sets (star, delta) over row,
column and symbol labels, satisfying the exchange axioms R1-R3: the two
sets are disjoint, and for every triple of one set and every pair of
coordinates there is exactly one triple of the other set agreeing in
that pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

ROW, COL, SYM = 0, 1, 2
ROLE_NAMES = ("row", "col", "sym")
PAIRS = ((0, 1), (0, 2), (1, 2))


class BitradeError(Exception):
    pass


class EmptyInput(BitradeError):
    pass


class NotSeparated(BitradeError):
    pass


class AxiomViolation(BitradeError):
    """One of R1-R3 failed; carries the witness triple and coordinate pair."""

    def __init__(self, axiom, triple, pair=None, detail=""):
        self.axiom = axiom
        self.triple = triple
        self.pair = pair
        msg = f"axiom {axiom} violated at {triple}"
        if pair is not None:
            msg += f" in coordinates {pair}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


@dataclass(frozen=True, order=True)
class Label:
    role: int  # ROW, COL or SYM
    index: int
    name: str = field(compare=False)

    def __repr__(self):
        return f"{ROLE_NAMES[self.role]}({self.name})"


@dataclass(frozen=True, order=True)
class Triple:
    row: Label
    col: Label
    sym: Label

    def __post_init__(self):
        if (self.row.role, self.col.role, self.sym.role) != (ROW, COL, SYM):
            raise ValueError(f"label roles do not match triple positions: {self}")

    def __getitem__(self, i):
        return (self.row, self.col, self.sym)[i]

    def labels(self):
        return (self.row, self.col, self.sym)

    def names(self):
        return (self.row.name, self.col.name, self.sym.name)

    def __repr__(self):
        return "({},{},{})".format(*self.names())


def _other(pair):
    return 3 - pair[0] - pair[1]


class Bitrade:
    """A validated latin bitrade with pair-lookup indexes.

    Immutable after construction; use :func:`build_bitrade`.
    """

    def __init__(self, star, delta, universes, star_pair, delta_pair):
        self.star = star  # tuple, canonical (row, col) order
        self.delta = delta
        self.universes = universes  # (rows, cols, syms), tuples of Label
        self._star_pair = star_pair  # {pair: {(value, value): Triple}}
        self._delta_pair = delta_pair
        self._star_set = frozenset(star)
        self._delta_set = frozenset(delta)

    @property
    def size(self):
        return len(self.star)

    def universe(self, role):
        return self.universes[role]

    @property
    def rows(self):
        return self.universes[ROW]

    @property
    def cols(self):
        return self.universes[COL]

    @property
    def syms(self):
        return self.universes[SYM]

    def in_star(self, t):
        return t in self._star_set

    def in_delta(self, t):
        return t in self._delta_set

    def star_partner(self, triple, pair):
        """The unique star triple agreeing with `triple` in both coordinates of `pair`."""
        return self._star_pair[pair][(triple[pair[0]], triple[pair[1]])]

    def delta_partner(self, triple, pair):
        return self._delta_pair[pair][(triple[pair[0]], triple[pair[1]])]

    def star_pair_key(self, pair, key):
        return self._star_pair[pair].get(key)

    def delta_pair_key(self, pair, key):
        return self._delta_pair[pair].get(key)

    def __repr__(self):
        return f"Bitrade(size={self.size}, shape={tuple(len(u) for u in self.universes)})"


def build_bitrade(star, delta):
    """Validate R1-R3 and build an indexed Bitrade.

    Raises EmptyInput, ValueError (duplicates, label inconsistencies) or
    AxiomViolation with the first violated axiom, witness triple and
    coordinate pair.
    """
    star = sorted(star)
    delta = sorted(delta)
    if not star or not delta:
        raise EmptyInput("star and delta must both be non-empty")
    if len(set(star)) != len(star):
        raise ValueError("duplicate triple in star")
    if len(set(delta)) != len(delta):
        raise ValueError("duplicate triple in delta")

    star_set = set(star)
    for q in delta:
        if q in star_set:
            raise AxiomViolation("R1", q, detail="triple occurs in both star and delta")

    def raw_index(triples):
        idx = {pair: {} for pair in PAIRS}
        for t in triples:
            for pair in PAIRS:
                idx[pair].setdefault((t[pair[0]], t[pair[1]]), []).append(t)
        return idx

    star_raw = raw_index(star)
    delta_raw = raw_index(delta)

    for p in star:
        for pair in PAIRS:
            hits = delta_raw[pair].get((p[pair[0]], p[pair[1]]), [])
            if len(hits) != 1:
                raise AxiomViolation(
                    "R2", p, pair,
                    f"{len(hits)} delta triples agree in this coordinate pair (need exactly 1)",
                )
    for q in delta:
        for pair in PAIRS:
            hits = star_raw[pair].get((q[pair[0]], q[pair[1]]), [])
            if len(hits) != 1:
                raise AxiomViolation(
                    "R3", q, pair,
                    f"{len(hits)} star triples agree in this coordinate pair (need exactly 1)",
                )

    universes = []
    for role in (ROW, COL, SYM):
        labels = sorted({t[role] for t in star} | {t[role] for t in delta})
        if len({lab.index for lab in labels}) != len(labels):
            raise ValueError(f"duplicate {ROLE_NAMES[role]} label index")
        if len({lab.name for lab in labels}) != len(labels):
            raise ValueError(f"duplicate {ROLE_NAMES[role]} label name")
        if any(lab not in {t[role] for t in star} for lab in labels):
            raise ValueError(f"{ROLE_NAMES[role]} label missing from star")
        universes.append(tuple(labels))

    star_pair = {pair: {k: v[0] for k, v in star_raw[pair].items()} for pair in PAIRS}
    delta_pair = {pair: {k: v[0] for k, v in delta_raw[pair].items()} for pair in PAIRS}
    return Bitrade(tuple(star), tuple(delta), tuple(universes), star_pair, delta_pair)


def mu(T, r, s, c):
    """The permutation mu_{r,s} of delta (coordinates are 0-based).

    First find the star triple d agreeing with c everywhere except at s,
    then the delta triple agreeing with d everywhere except at r.
    Satisfies mu(s, r, mu(r, s, c)) == c.
    """
    if r == s:
        raise ValueError("mu needs two distinct coordinates")
    t = 3 - r - s
    d = T.star_partner(c, (min(t, r), max(t, r)))
    return T.delta_partner(d, (min(t, s), max(t, s)))


def nu(T, r, s, a):
    """The dual permutation nu_{r,s} of star (0-based coordinates)."""
    if r == s:
        raise ValueError("nu needs two distinct coordinates")
    t = 3 - r - s
    b = T.delta_partner(a, (min(t, r), max(t, r)))
    return T.star_partner(b, (min(t, s), max(t, s)))


def tau(T, j, a):
    """tau_j = nu_{j+1, j-1}; its cycle through a fixes coordinate j."""
    return nu(T, (j + 1) % 3, (j + 2) % 3, a)


def tau_inverse(T, j, a):
    return nu(T, (j + 2) % 3, (j + 1) % 3, a)


def tau_cycle(T, j, a):
    """The full cycle of tau_j through a, starting at a."""
    cycle = [a]
    cur = tau(T, j, a)
    while cur != a:
        cycle.append(cur)
        cur = tau(T, j, cur)
    return cycle


def is_indecomposable(T):
    """True iff the two-coordinate-agreement graph on star + delta is connected."""
    start = T.star[0]
    seen_star = {start}
    seen_delta = set()
    frontier = [("star", start)]
    while frontier:
        kind, t = frontier.pop()
        for pair in PAIRS:
            if kind == "star":
                q = T.delta_partner(t, pair)
                if q not in seen_delta:
                    seen_delta.add(q)
                    frontier.append(("delta", q))
            else:
                p = T.star_partner(t, pair)
                if p not in seen_star:
                    seen_star.add(p)
                    frontier.append(("star", p))
    return len(seen_star) == T.size and len(seen_delta) == T.size


def is_separated_bitrade(T):
    """True iff every label's star triples form a single tau cycle."""
    for role in (ROW, COL, SYM):
        for lab in T.universe(role):
            carrying = [p for p in T.star if p[role] == lab]
            cycle = tau_cycle(T, role, carrying[0])
            if set(cycle) != set(carrying):
                return False
    return True


@dataclass(frozen=True)
class Metrics:
    size: int
    o1: int
    o2: int
    o3: int
    m: int
    euler_characteristic: int
    separated: bool
    spherical: bool
    genus: int | None  # None = non-surface

    def as_dict(self):
        return {
            "size": self.size,
            "rows": self.o1,
            "cols": self.o2,
            "syms": self.o3,
            "m": self.m,
            "euler_characteristic": self.euler_characteristic,
            "separated": self.separated,
            "spherical": self.spherical,
            "genus": self.genus,
        }


def metrics(T):
    s = T.size
    o1, o2, o3 = (len(T.universe(r)) for r in (ROW, COL, SYM))
    m = o1 + o2 + o3
    chi = m - s
    if m > s + 2 and is_indecomposable(T):
        raise BitradeError(
            f"m = {m} > size + 2 = {s + 2} on an indecomposable input; "
            "this cannot happen for a latin bitrade"
        )
    separated = is_separated_bitrade(T)
    genus = (2 - chi) // 2 if separated and chi % 2 == 0 else None
    return Metrics(s, o1, o2, o3, m, chi, separated, m == s + 2, genus)


@dataclass(frozen=True)
class SemidualFaces:
    """Faces of the semidual surface: vertices are star triples."""

    cyclic: dict  # Label -> tuple of star triples (tau cycle order)
    triangular: dict  # delta Triple -> tuple of 3 star triples

    @property
    def face_count(self):
        return len(self.cyclic) + len(self.triangular)


def semidual_faces(T):
    if not is_separated_bitrade(T):
        raise NotSeparated("semidual faces are only defined for separated bitrades")
    cyclic = {}
    for role in (ROW, COL, SYM):
        for lab in T.universe(role):
            start = next(p for p in T.star if p[role] == lab)
            cyclic[lab] = tuple(tau_cycle(T, role, start))
    triangular = {}
    for c in T.delta:
        triangular[c] = tuple(T.star_partner(c, pair) for pair in PAIRS)
    return SemidualFaces(cyclic, triangular)


def is_isotopic(T, S):
    """Search for role-wise label bijections carrying T onto S.

    Returns a tuple of three dicts (rows, cols, syms mapping) or None.
    The search propagates forced assignments along R2/R3 partners, with
    backtracking only across connected components.
    """
    if T.size != S.size:
        return None
    if any(len(T.universe(r)) != len(S.universe(r)) for r in (ROW, COL, SYM)):
        return None

    def propagate(p0, q0, mapping, star_map, delta_map):
        queue = [("star", p0, q0)]
        while queue:
            kind, p, q = queue.pop()
            current = star_map if kind == "star" else delta_map
            if p in current:
                if current[p] != q:
                    return False
                continue
            for pl, ql in zip(p.labels(), q.labels()):
                if mapping.get(pl, ql) != ql:
                    return False
                mapping[pl] = ql
            current[p] = q
            for pair in PAIRS:
                if kind == "star":
                    queue.append(("delta", T.delta_partner(p, pair), S.delta_partner(q, pair)))
                else:
                    queue.append(("star", T.star_partner(p, pair), S.star_partner(q, pair)))
        return True

    def extend(mapping, star_map, delta_map):
        remaining = [p for p in T.star if p not in star_map]
        if not remaining:
            # full verification: the maps must reproduce S exactly
            if len(set(mapping.values())) != len(mapping):
                return None
            for p in T.star:
                if not S.in_star(_apply(mapping, p)):
                    return None
            for p in T.delta:
                if not S.in_delta(_apply(mapping, p)):
                    return None
            return mapping
        p0 = remaining[0]
        used = set(star_map.values())
        for q0 in S.star:
            if q0 in used:
                continue
            m2, sm2, dm2 = dict(mapping), dict(star_map), dict(delta_map)
            if propagate(p0, q0, m2, sm2, dm2):
                result = extend(m2, sm2, dm2)
                if result is not None:
                    return result
        return None

    mapping = extend({}, {}, {})
    if mapping is None:
        return None
    return tuple(
        {lab: mapping[lab] for lab in T.universe(role)} for role in (ROW, COL, SYM)
    )


def _apply(mapping, t):
    return Triple(mapping[t.row], mapping[t.col], mapping[t.sym])


def apply_isotopy(maps, T):
    """Apply role-wise bijections to a bitrade, rebuilding it."""
    merged = {}
    for d in maps:
        merged.update(d)
    star = [_apply(merged, t) for t in T.star]
    delta = [_apply(merged, t) for t in T.delta]
    return build_bitrade(star, delta)
