import pytest

from bitrades.core import COL, ROW, SYM, metrics
from bitrades.groups import (
    canonical_images,
    check_det_invariance,
    integer_homotopy_rank,
    is_abelian_embeddable,
    presentation,
    relation_matrix,
    subgroup_H,
)
from test_exact import cofactor_det


class TestRelationMatrix:
    def test_intercalate_rows(self, intercalate):
        B, labels = relation_matrix(intercalate)
        assert len(B) == 4 and len(labels) == 6
        names = [lab.name for lab in labels]
        assert names == ["r0", "r1", "c0", "c1", "s0", "s1"]
        for row, p in zip(B, intercalate.star):
            assert sorted(row) == [-1, 0, 0, 0, 1, 1]

    def test_column_blocks(self, ex45):
        B, labels = relation_matrix(ex45)
        met = metrics(ex45)
        assert [lab.role for lab in labels] == (
            [ROW] * met.o1 + [COL] * met.o2 + [SYM] * met.o3
        )


class TestPresentation:
    def test_intercalate(self, intercalate):
        G = presentation(intercalate)
        assert G.free_rank == 2
        assert G.invariant_factors == (2,)
        assert str(G) == "Z + Z + Z2"

    def test_ex45(self, ex45):
        G = presentation(ex45)
        assert G.free_rank == 2
        assert G.invariant_factors == (14,)

    def test_nested(self, nested):
        G = presentation(nested.bitrade)
        assert G.free_rank == 2
        assert G.invariant_factors == (4,)


class TestSubgroupH:
    def test_intercalate(self, intercalate):
        H = subgroup_H(intercalate)
        assert H.free_rank == 0 and H.invariant_factors == (2,)
        assert H.order == 2

    def test_ex45(self, ex45):
        assert subgroup_H(ex45).invariant_factors == (14,)

    def test_toroidal_delta_side(self, toroidal_swapped):
        H = subgroup_H(toroidal_swapped)
        assert H.free_rank == 0
        assert H.invariant_factors == (10,)

    def test_spherical_H_is_torsion_of_G(self, spherical_corpus):
        for T in spherical_corpus.values():
            G, H = presentation(T), subgroup_H(T)
            assert H.free_rank == 0
            assert H.invariant_factors == G.invariant_factors
            assert G.free_rank == 2


class TestCanonicalImages:
    def test_additive_law_is_asserted(self, spherical_corpus, toroidal):
        for T in list(spherical_corpus.values()) + [toroidal]:
            ci = canonical_images(T)
            assert len(ci.images) == metrics(T).m

    def test_intercalate_rows_differ_by_torsion(self, intercalate):
        ci = canonical_images(intercalate)
        r0, r1 = intercalate.universe(ROW)
        a, b = ci.images[r0], ci.images[r1]
        assert a != b
        # in the torsion coordinate (modulus 2) they differ by the generator
        torsion = [k for k, mod in enumerate(ci.moduli) if mod == 2]
        assert len(torsion) == 1


class TestEmbeddability:
    def test_spherical_always_embeddable(self, spherical_corpus):
        for T in spherical_corpus.values():
            assert is_abelian_embeddable(T) == (True, None)

    def test_toroidal_star_side_fails(self, toroidal):
        ok, witness = is_abelian_embeddable(toroidal)
        assert not ok
        assert witness[0].role == witness[1].role
        assert witness[0] != witness[1]

    def test_toroidal_delta_side(self, toroidal_swapped):
        # two symbols are identified by every homotopy into an abelian
        # group: their generator difference lies in the relation lattice
        ok, witness = is_abelian_embeddable(toroidal_swapped)
        assert not ok
        assert sorted(w.name for w in witness) == ["4", "7"]


class TestDetInvariance:
    def test_intercalate_value_2(self, intercalate):
        rep = check_det_invariance(intercalate)
        assert rep.all_equal and rep.nonzero
        assert rep.common_value == 2
        # admissible pairs: 2 rows x 4 later + 2 cols x 2 syms
        assert rep.pairs_checked == 12

    def test_intercalate_against_cofactor_oracle(self, intercalate):
        B, _ = relation_matrix(intercalate)
        # delete the first row column and the last symbol column
        Bij = [[x for k, x in enumerate(row) if k not in (0, 5)] for row in B]
        assert abs(cofactor_det(Bij)) == 2

    def test_all_spherical(self, spherical_corpus):
        for T in spherical_corpus.values():
            rep = check_det_invariance(T)
            assert rep.all_equal and rep.nonzero

    def test_common_value_matches_H_order(self, spherical_corpus):
        # observed experimentally on the corpus; recorded as data
        for T in spherical_corpus.values():
            assert check_det_invariance(T).common_value == subgroup_H(T).order


class TestIntegerHomotopyRank:
    def test_ex45(self, ex45):
        assert integer_homotopy_rank(ex45) == (12, 2, True)

    def test_intercalate(self, intercalate):
        assert integer_homotopy_rank(intercalate) == (4, 2, True)

    def test_toroidal(self, toroidal):
        r, nullity, trivial = integer_homotopy_rank(toroidal)
        assert r + nullity == 18
        assert trivial == (nullity == 2)

    def test_spherical_nullity_2(self, spherical_corpus):
        for T in spherical_corpus.values():
            assert integer_homotopy_rank(T)[1] == 2
