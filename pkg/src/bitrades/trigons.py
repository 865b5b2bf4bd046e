"""Trigons: detection, inner/outer splitting, homotopy recombination,
and the separation recursion down to a finite abelian embedding.

A trigon is a triple c outside the star whose three "corner" delta
triples exist.  Splitting along its inner circumference produces two
strictly smaller bitrades; homotopies of the outer part recombine with
the exact solution of the inner part into homotopies of the whole.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    COL,
    PAIRS,
    ROW,
    SYM,
    Bitrade,
    BitradeError,
    Triple,
    build_bitrade,
    metrics,
    mu,
    tau,
    tau_cycle,
)
from .solver import (
    Homotopy,
    PointedBitrade,
    induced_homotopy,
    near_values,
    solve_pointed,
)

PAIR_WITHOUT = {0: (1, 2), 1: (0, 2), 2: (0, 1)}


class SpliceIdentityFailure(BitradeError):
    pass


class SplitInvalid(BitradeError):
    pass


class NotInShrinkSituation(BitradeError):
    pass


class LemmaViolation(BitradeError):
    """The trigon-location dichotomy or uniqueness failed (diagnostic)."""


class ArgumentError(BitradeError):
    pass


@dataclass(frozen=True)
class Trigon:
    triple: Triple  # c, not in star
    corners: tuple  # delta triples, corners[j] differs from c exactly at j
    alphas: tuple  # star triples, alphas[j] differs from c exactly at j
    arc_lengths: tuple  # k_j with tau_j^{k_j}(alpha_{j-1}) = alpha_{j+1}
    cycle_lengths: tuple  # lengths of the tau_j cycles carrying the arcs


def trigon_at(T, c):
    """The Trigon at triple c, or None if c is not a trigon."""
    if T.in_star(c):
        return None
    corners = []
    for j in range(3):
        pair = PAIR_WITHOUT[j]
        q = T.delta_pair_key(pair, (c[pair[0]], c[pair[1]]))
        if q is None or q[j] == c[j]:
            return None
        corners.append(q)
    alphas = [T.star_partner(corners[j], PAIR_WITHOUT[j]) for j in range(3)]
    ks, ls = [], []
    for j in range(3):
        cycle = tau_cycle(T, j, alphas[(j - 1) % 3])
        target = alphas[(j + 1) % 3]
        if target not in cycle:
            return None
        k = cycle.index(target)
        assert 2 <= k < len(cycle), "trigon arc bounds violated"
        ks.append(k)
        ls.append(len(cycle))
    return Trigon(c, tuple(corners), tuple(alphas), tuple(ks), tuple(ls))


def find_trigons(T):
    """All trigons, found by joining the delta pair indexes."""
    keys01 = {(q.row, q.col) for q in T.delta}
    keys02 = {(q.row, q.sym) for q in T.delta}
    keys12 = {(q.col, q.sym) for q in T.delta}
    out = []
    for r, c in sorted(keys01):
        for s in T.syms:
            if (r, s) in keys02 and (c, s) in keys12:
                tg = trigon_at(T, Triple(r, c, s))
                if tg is not None:
                    out.append(tg)
    return out


def scan_trigons_bruteforce(T):
    """Trigons by full enumeration of the label cube (test oracle)."""
    out = []
    for r in T.rows:
        for c in T.cols:
            for s in T.syms:
                tg = trigon_at(T, Triple(r, c, s))
                if tg is not None:
                    out.append(tg)
    return out


def _path_steps(T, tg):
    """The closed path P around the trigon, as directed tau steps.

    Returns (vertices, steps) where steps[i] = (vertices[i], j) means
    vertices[i+1] = tau_j(vertices[i]).  Arc order: alpha_2 --tau_0-->
    alpha_1 --tau_2--> alpha_0 --tau_1--> alpha_2.
    """
    vertices, steps = [], []
    for j, start, end in (
        (0, tg.alphas[2], tg.alphas[1]),
        (2, tg.alphas[1], tg.alphas[0]),
        (1, tg.alphas[0], tg.alphas[2]),
    ):
        x = start
        while True:
            vertices.append(x)
            steps.append((x, j))
            x = tau(T, j, x)
            if x == end:
                break
    if len(set(vertices)) != len(vertices):
        raise SpliceIdentityFailure("path around the trigon is not simple")
    return vertices, steps


def _edge_id(T, x, j):
    """Identity of the semidual edge (x, tau_j(x)).

    The edge lies between the cyclic face of label x[j] and the
    triangular face of the delta triple adjacent to both endpoints.
    """
    pair = tuple(sorted((j, (j + 1) % 3)))
    return (j, T.delta_partner(x, pair))


@dataclass(frozen=True)
class TrigonCircumference:
    path: tuple  # P, closed star-triple sequence
    betas: tuple  # predecessors of the alphas on P
    arcs: tuple  # the three detour walks Q_j
    circumference: tuple  # closed inner circumference


def inner_circumference(T, tg):
    """Splice the detour arcs into P, yielding the inner circumference."""
    vertices, _ = _path_steps(T, tg)
    betas, arcs = [], []
    for j in range(3):
        idx = vertices.index(tg.alphas[j])
        beta = vertices[idx - 1]
        succ = vertices[(idx + 1) % len(vertices)]
        if tau(T, j, succ) != beta:
            raise SpliceIdentityFailure(
                f"splice identity fails at corner {tg.alphas[j]}"
            )
        q = tau_cycle(T, j, beta)
        assert q[-1] == succ
        betas.append(beta)
        arcs.append(tuple(q))
    circ = list(vertices)
    for j in range(3):
        idx = circ.index(tg.alphas[j])
        circ[idx:idx + 1] = list(arcs[j][1:-1])
    return TrigonCircumference(tuple(vertices), tuple(betas), tuple(arcs), tuple(circ))


def _flood_inner(T, tg):
    """Faces inside the trigon boundary, found by a flood fill.

    Face nodes are cyclic faces (labels) and triangular faces (delta
    triples); each semidual edge joins one of each.  The fill starts at
    the three corner faces and never crosses an edge of the path P.
    """
    _, steps = _path_steps(T, tg)
    blocked = {_edge_id(T, x, j) for x, j in steps}

    by_label = {}
    for q in T.delta:
        for j in range(3):
            by_label.setdefault(q[j], []).append((j, q))

    seen_tri = set(tg.corners)
    seen_cyc = set()
    frontier = list(tg.corners)
    while frontier:
        q = frontier.pop()
        for j in range(3):
            if (j, q) not in blocked and q[j] not in seen_cyc:
                seen_cyc.add(q[j])
                for j2, q2 in by_label[q[j]]:
                    if (j2, q2) not in blocked and q2 not in seen_tri:
                        seen_tri.add(q2)
                        frontier.append(q2)
    return seen_tri, seen_cyc


@dataclass(frozen=True)
class Split:
    trigon: Trigon
    inner: Bitrade  # S1: trigon triple joins its star
    outer: Bitrade  # S0: trigon triple joins its delta
    inner_points: frozenset  # star triples of T on or inside the boundary


def split(T, tg):
    """Cut T along the trigon boundary into inner and outer bitrades."""
    inner_tri, inner_cyc = _flood_inner(T, tg)
    inner_points = set()
    for q in inner_tri:
        for pair in PAIRS:
            inner_points.add(T.star_partner(q, pair))
    for lab in inner_cyc:
        start = next(p for p in T.star if p[lab.role] == lab)
        inner_points.update(tau_cycle(T, lab.role, start))
    inner_points -= set(tg.alphas)

    c = tg.triple
    s1_star = sorted(inner_points) + [c]
    s1_delta = sorted(inner_tri)
    s0_star = [p for p in T.star if p not in inner_points]
    s0_delta = sorted(set(T.delta) - inner_tri) + [c]
    try:
        inner = build_bitrade(s1_star, s1_delta)
        outer = build_bitrade(s0_star, s0_delta)
    except BitradeError as e:
        raise SplitInvalid(f"split pieces are not bitrades: {e}") from e

    assert inner.size + outer.size == T.size + 1
    assert len(inner.delta) + len(outer.delta) == T.size + 1
    if metrics(T).spherical:
        assert metrics(inner).spherical and metrics(outer).spherical
    return Split(tg, inner, outer, frozenset(inner_points))


def recombine(T, sp, phi):
    """Lift a homotopy of the outer bitrade to all of T (mod m*n).

    phi is a homotopy of sp.outer mod m; n is the width of the trigon
    triple's system in sp.inner.  Outer labels are embedded via i -> n*i;
    labels living only inside get offset near-homotopy values.
    """
    c = sp.trigon.triple
    m = phi.modulus
    sol1 = solve_pointed(PointedBitrade(sp.inner, c))
    n, psi_bar = near_values(sol1)
    mn = m * n

    h = {ROW: n * phi(c.row) % mn, COL: n * phi(c.col) % mn}
    h[SYM] = (h[ROW] + h[COL]) % mn
    k = (phi(c.sym) - phi(c.row) - phi(c.col)) % m

    outer_labels = {lab for role in (ROW, COL, SYM) for lab in sp.outer.universe(role)}
    maps = {}
    for role in (ROW, COL, SYM):
        for lab in T.universe(role):
            outer_val = n * phi(lab) % mn if lab in outer_labels else None
            inner_val = (
                (h[role] + psi_bar[lab] * k) % mn if lab in psi_bar else None
            )
            if outer_val is not None and inner_val is not None:
                assert outer_val == inner_val, f"recombination conflict at {lab}"
            val = outer_val if outer_val is not None else inner_val
            assert val is not None, f"label {lab} lost in the split"
            maps[lab] = val
    return Homotopy.checked(T, mn, maps)


def _degenerates(sol, q):
    v = sol.values
    return v[q.row] + v[q.col] == v[q.sym]


def locate_trigon(pointed, sol, b, j):
    """Find the trigon that blocks separating b from the pivot at coordinate j.

    Preconditions: the solution assigns equal values to the pivot's and
    b's labels at coordinate j although the labels differ.  Walks the mu
    cycle through the pivot's delta neighbours, keeps the non-degenerate
    triples, and returns the unique gap trigon having b outside.
    """
    T, a = pointed.bitrade, pointed.pivot
    if b[j] == a[j] or sol.values[b[j]] != sol.values[a[j]]:
        raise NotInShrinkSituation(
            f"labels at coordinate {j} are equal or already separated"
        )

    eta = [T.delta_partner(a, PAIR_WITHOUT[t]) for t in range(3)]
    r_coord, s_coord = (j + 2) % 3, (j + 1) % 3  # mu_{j-1,j+1} in 0-based form
    cycle = [eta[r_coord]]
    x = mu(T, r_coord, s_coord, cycle[0])
    while x != cycle[0]:
        cycle.append(x)
        x = mu(T, r_coord, s_coord, x)
    if cycle[-1] != eta[s_coord]:
        raise LemmaViolation("mu walk did not end at the opposite corner triple")

    gammas = [q for q in cycle if not _degenerates(sol, q)]
    indices = [i for i, q in enumerate(cycle) if not _degenerates(sol, q)]
    if not gammas or gammas[0] != cycle[0] or gammas[-1] != cycle[-1]:
        raise LemmaViolation("corner triples of the pivot degenerate")

    hits = []
    for r in range(len(gammas) - 1):
        coords = [None, None, None]
        coords[j] = a[j]
        coords[(j + 2) % 3] = gammas[r][(j + 2) % 3]
        coords[(j + 1) % 3] = gammas[r + 1][(j + 1) % 3]
        beta = Triple(*coords)
        consecutive = indices[r + 1] == indices[r] + 1
        if consecutive:
            if not T.in_star(beta):
                raise LemmaViolation(f"{beta} expected in star (consecutive case)")
            continue
        tg = trigon_at(T, beta)
        if tg is None:
            raise LemmaViolation(f"{beta} expected to be a trigon (gap case)")
        sp = split(T, tg)
        if b in set(sp.outer.star):
            hits.append((tg, sp))
    if len(hits) != 1:
        raise LemmaViolation(
            f"expected exactly one trigon with {b} outside, found {len(hits)}"
        )
    return hits[0][0]


def _separate(T, a, b, i, depth):
    pointed = PointedBitrade(T, a)
    sol = solve_pointed(pointed)
    hom = induced_homotopy(sol)
    if hom.separates(a[i], b[i]):
        return hom, depth
    tg = locate_trigon(pointed, sol, b, i)
    sp = split(T, tg)
    outer = sp.outer
    assert len(outer.delta) < len(T.delta)
    a2 = next(p for p in outer.star if p[i] == a[i])
    b2 = b if b in set(outer.star) else next(p for p in outer.star if p[i] == b[i])
    phi, depth = _separate(outer, a2, b2, i, depth + 1)
    lifted = recombine(T, sp, phi)
    assert lifted.separates(a[i], b[i])
    return lifted, depth


def separate(T, a, b, i):
    """A homotopy into some Z_n (n >= 2) distinguishing a[i] from b[i]."""
    if a[i] == b[i]:
        raise ArgumentError(f"triples agree at coordinate {i}")
    hom, _ = _separate(T, a, b, i, 0)
    return hom


def separate_trace(T, a, b, i):
    """Like separate, but also returns the recursion depth used."""
    if a[i] == b[i]:
        raise ArgumentError(f"triples agree at coordinate {i}")
    return _separate(T, a, b, i, 0)


@dataclass(frozen=True)
class ProductEmbedding:
    factors: tuple  # (role, (label, label), Homotopy) per needed separation
    images: dict  # Label -> tuple of residues, one per factor

    @property
    def moduli(self):
        return tuple(f[2].modulus for f in self.factors)


def embed_product(T):
    """Embed the star labels into a product of cyclic groups.

    Greedy: for each role and label pair not yet distinguished by the
    factors collected so far, run one separation.  The combined map is
    verified to be injective within each role.
    """
    factors = []
    for role in (ROW, COL, SYM):
        labs = T.universe(role)
        for u in range(len(labs)):
            for v in range(u + 1, len(labs)):
                x, y = labs[u], labs[v]
                if any(h.separates(x, y) for _, _, h in factors):
                    continue
                a = next(p for p in T.star if p[role] == x)
                b = next(p for p in T.star if p[role] == y)
                factors.append((role, (x, y), separate(T, a, b, role)))
    images = {}
    for role in (ROW, COL, SYM):
        for lab in T.universe(role):
            images[lab] = tuple(h.maps[lab] % h.modulus for _, _, h in factors)
        seen = {}
        for lab in T.universe(role):
            assert images[lab] not in seen, f"product map collides at {lab}"
            seen[images[lab]] = lab
    return ProductEmbedding(tuple(factors), images)
