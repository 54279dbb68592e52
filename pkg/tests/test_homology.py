import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import minors_gcd, rational_rank
from indcomp.complexes import (
    IntegerMatrix,
    SimplicialComplex,
    boundary_matrix,
    f_vector,
    face_euler,
    independence_complex,
)
from indcomp.graphs import Graph
from indcomp.homology import (
    HomologyGroups,
    betti,
    classify_groups,
    euler_from_betti,
    homology_class,
    reduced_homology,
    smith_normal_form,
    sphere_like,
    total_betti,
    xgcd,
)

# the canonical 6-vertex triangulation of the projective plane: every edge
# of K6 appears in exactly two of these ten triangles
RP2_FACETS = [
    (0, 1, 3),
    (0, 1, 4),
    (0, 2, 3),
    (0, 2, 5),
    (0, 4, 5),
    (1, 2, 4),
    (1, 2, 5),
    (1, 3, 5),
    (2, 3, 4),
    (3, 4, 5),
]


def rp2_complex() -> SimplicialComplex:
    return SimplicialComplex.from_facets(6, RP2_FACETS)


@settings(max_examples=200)
@given(st.integers(-300, 300), st.integers(-300, 300))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g >= 0 and x * a + y * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


class TestSmithNormalForm:
    def test_identity(self):
        m = IntegerMatrix.from_rows([[1, 0], [0, 1]])
        assert smith_normal_form(m).invariant_factors == (1, 1)

    def test_known_matrix(self):
        # gcd-of-minors oracle: d1 = gcd(2,4,6,8) = 2, d1*d2 = |det| = 8
        m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
        assert smith_normal_form(m).invariant_factors == (2, 4)

    def test_zero_matrix(self):
        assert smith_normal_form(IntegerMatrix(3, 4, {})).invariant_factors == ()

    def test_single_entries(self):
        assert smith_normal_form(IntegerMatrix.from_rows([[6]])).invariant_factors == (6,)
        assert smith_normal_form(IntegerMatrix.from_rows([[0]])).invariant_factors == ()

    def test_divisibility_is_enforced(self):
        m = IntegerMatrix.from_rows([[2, 0], [0, 3]])
        assert smith_normal_form(m).invariant_factors == (1, 6)

    def _check_against_minors(self, rows):
        sf = smith_normal_form(IntegerMatrix.from_rows(rows))
        product = 1
        for k, d in enumerate(sf.invariant_factors, start=1):
            product *= d
            assert product == minors_gcd(rows, k), (rows, sf)
        # one past the rank: all minors vanish
        if sf.rank < min(len(rows), len(rows[0]) if rows else 0):
            assert minors_gcd(rows, sf.rank + 1) == 0

    def test_minors_oracle_random_small(self):
        rng = random.Random(2024)
        for _ in range(300):
            n_rows = rng.randint(1, 5)
            n_cols = rng.randint(1, 5)
            rows = [
                [rng.randint(-9, 9) for _ in range(n_cols)] for _ in range(n_rows)
            ]
            self._check_against_minors(rows)

    @settings(max_examples=120, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(-9, 9), min_size=1, max_size=4),
            min_size=1,
            max_size=4,
        ).filter(lambda rows: len({len(r) for r in rows}) == 1)
    )
    def test_minors_oracle_property(self, rows):
        self._check_against_minors(rows)

    def test_minors_oracle_truncated_up_to_12(self):
        # larger matrices: verify the first three invariant-factor products
        # (full minors enumeration is exponential) plus rank over Q
        rng = random.Random(7)
        for _ in range(6):
            size = rng.randint(9, 12)
            rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
            sf = smith_normal_form(IntegerMatrix.from_rows(rows))
            product = 1
            for k, d in enumerate(sf.invariant_factors[:3], start=1):
                product *= d
                assert product == minors_gcd(rows, k)
            assert sf.rank == rational_rank(rows)

    def test_rank_matches_rational_rank(self, corpus6):
        rng = random.Random(13)
        for g in rng.sample(corpus6, 40):
            k = independence_complex(g)
            for i in range(0, k.top_dimension + 2):
                m = boundary_matrix(k, i)
                assert smith_normal_form(m).rank == rational_rank(m.to_rows())

    def test_sparse_unit_sweep_with_torsion_left(self):
        # block diag(1, 2) embedded in junk
        m = IntegerMatrix.from_rows([[1, 3, 0], [2, 6, 4]])
        assert smith_normal_form(m).invariant_factors == (1, 4)


class TestReducedHomology:
    def test_hollow_triangle_is_circle(self):
        k = SimplicialComplex.from_facets(3, [(0, 1), (1, 2), (0, 2)])
        h = reduced_homology(k)
        assert h.rank(1) == 1 and h.total_betti == 1 and not h.has_torsion
        assert h.rank(0) == 0 and h.rank(-1) == 0

    def test_empty_complex_has_dimension_minus_one(self):
        k = independence_complex(Graph.empty(0))
        h = reduced_homology(k)
        assert h.rank(-1) == 1
        assert h.betti_vector == [] and h.total_betti == 0

    def test_projective_plane_torsion(self):
        # 10 triangles, 15 edges, 6 vertices; chi = 1, H~1 = Z/2, beta = 0
        k = rp2_complex()
        assert f_vector(k) == [6, 15, 10]
        h = reduced_homology(k)
        assert h.torsion(1) == (2,)
        assert h.betti_vector == [0, 0, 0]
        assert h.total_betti == 0 and h.has_torsion
        # independent rank check: beta_i = f_i - rank d_i - rank d_{i+1}
        ranks = {
            i: rational_rank(boundary_matrix(k, i).to_rows()) for i in range(0, 4)
        }
        for i in range(0, 3):
            assert h.rank(i) == k.face_count(i) - ranks[i] - ranks[i + 1]

    def test_full_simplex_trivial(self):
        for size in range(1, 7):
            h = reduced_homology(independence_complex(Graph.empty(size)))
            assert h.total_betti == 0 and not h.has_torsion and h.rank(-1) == 0

    def test_rank_pair_bound(self, corpus6):
        # rank d_i + rank d_{i+1} <= f_i, a shadow of dd = 0
        for g in corpus6[:100]:
            k = independence_complex(g)
            for i in range(0, k.top_dimension + 1):
                r_i = smith_normal_form(boundary_matrix(k, i)).rank
                r_next = smith_normal_form(boundary_matrix(k, i + 1)).rank
                assert r_i + r_next <= k.face_count(i)

    def test_euler_poincare_across_corpus(self, corpus6):
        for g in corpus6:
            k = independence_complex(g)
            assert euler_from_betti(k) == face_euler(k)


class TestBettiAndEuler:
    def test_cycle_six(self):
        k = independence_complex(Graph.cycle(6))
        assert betti(k) == [0, 2, 0]
        assert total_betti(k) == 2
        assert euler_from_betti(k) == -2

    def test_cycle_five(self):
        k = independence_complex(Graph.cycle(5))
        assert betti(k) == [0, 1]
        assert total_betti(k) == 1
        assert euler_from_betti(k) == -1

    def test_cone_is_acyclic(self, corpus6):
        rng = random.Random(4)
        for g in rng.sample(corpus6, 30):
            cone = g.add_vertex(0)
            assert total_betti(independence_complex(cone)) == 0

    def test_point(self):
        k = independence_complex(Graph.empty(1))
        assert euler_from_betti(k) == 0 and total_betti(k) == 0


class TestHomologyClass:
    def test_sphere_cases(self):
        assert homology_class(independence_complex(Graph.cycle(5))) == sphere_like(1)
        assert homology_class(independence_complex(Graph.empty(0))) == sphere_like(-1)

    def test_wedge_is_other(self):
        assert homology_class(independence_complex(Graph.cycle(6))).kind == "other"

    def test_torsion_is_other(self):
        assert homology_class(rp2_complex()).kind == "other"

    def test_cone_is_point(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2)])  # vertex 3 isolated
        assert homology_class(independence_complex(g)).kind == "point"

    def test_classify_groups_multirank(self):
        h = HomologyGroups({0: (2, ()), 1: (0, ())})
        assert classify_groups(h).kind == "other"

    def test_sphere_like_validation(self):
        with pytest.raises(ValueError):
            sphere_like(-2)


class TestSubadditivity:
    def test_exact_sequence_rank_bound(self, corpus6):
        # beta_i(G) <= beta_i(G - v) + beta_{i-1}(G - N[v])
        rng = random.Random(9)
        for g in rng.sample([g for g in corpus6 if g.n >= 2], 60):
            h = reduced_homology(independence_complex(g))
            full = g.vertex_mask
            for v in range(g.n):
                minus_v = reduced_homology(
                    independence_complex(g.induced(full & ~(1 << v))[0])
                )
                minus_nv = reduced_homology(
                    independence_complex(
                        g.induced(full & ~g.closed_neighborhood(v))[0]
                    )
                )
                for i in range(0, h.top_dimension + 1):
                    assert h.rank(i) <= minus_v.rank(i) + minus_nv.rank(i - 1)
