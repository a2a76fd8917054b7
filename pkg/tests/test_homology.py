import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from matchtile.complexes import SimplicialComplex, SparseIntMatrix, chain_complex, independence_complex, join
from matchtile.graphs import EMPTY_GRAPH, G_graph, H_graph, cycle_graph, path_graph
from matchtile.homology import (
    EMPTY_PROFILE,
    INFINITY,
    HomologyProfile,
    SmithForm,
    TorsionError,
    connectivity_of_profile,
    homology_of,
    is_contractible_profile,
    join_profiles,
    rank_mod_p,
    random_prime_rank_check,
    smith_normal_form,
    suspend_profile,
    wedge_profiles,
)

from oracles import betti_over_q, determinantal_factors, naive_snf
from test_graphs import graphs


def snf(rows):
    return smith_normal_form(SparseIntMatrix.from_dense(rows))


def test_smith_examples():
    assert snf([[1, 0], [0, 1]]) == SmithForm(2, (1, 1))
    assert snf([[2, 4], [6, 8]]) == SmithForm(2, (2, 4))
    assert snf([[0, 0], [0, 0]]) == SmithForm(0, ())
    assert snf([[2, 0], [0, 3]]) == SmithForm(2, (1, 6))


def test_smith_form_invariants():
    with pytest.raises(ValueError):
        SmithForm(2, (1,))


def _random_matrix(rng):
    m, n = rng.randint(1, 8), rng.randint(1, 8)
    density = rng.choice([0.3, 0.6, 1.0])
    return [[rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]


def test_smith_against_naive_oracle():
    rng = random.Random(2024)
    for _ in range(200):
        rows = _random_matrix(rng)
        got = snf(rows)
        assert list(got.invariant_factors) == naive_snf(rows), rows
        f = got.invariant_factors
        assert all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))


def test_smith_against_determinantal_divisors():
    rng = random.Random(7)
    for _ in range(60):
        rows = [[rng.randint(-9, 9) for _ in range(rng.randint(1, 4))]]
        rows += [[rng.randint(-9, 9) for _ in range(len(rows[0]))] for _ in range(rng.randint(0, 3))]
        assert list(snf(rows).invariant_factors) == determinantal_factors(rows), rows


def test_smith_large_entries_stay_exact():
    big = 10**30
    rows = [[big, 0], [0, big * 3]]
    assert snf(rows).invariant_factors == (big, 3 * big)


def test_rank_mod_p():
    rows = [[2, 4], [6, 8]]
    m = SparseIntMatrix.from_dense(rows)
    assert rank_mod_p(m, 2) == 0
    assert rank_mod_p(m, 3) == 2
    assert rank_mod_p(SparseIntMatrix.from_dense([[1, 2], [2, 4]]), 7) == 1


def test_reduced_homology_examples():
    assert homology_of(independence_complex(cycle_graph(6))) == HomologyProfile({1: 2})
    assert homology_of(independence_complex(path_graph(4))) == HomologyProfile({})
    assert homology_of(independence_complex(path_graph(5))) == HomologyProfile({1: 1})
    assert homology_of(independence_complex(EMPTY_GRAPH)) == EMPTY_PROFILE
    assert homology_of(independence_complex(path_graph(1))) == HomologyProfile({})


def test_torsion_detected_on_projective_plane():
    # minimal 6-vertex triangulation of RP^2: H_1 = Z/2
    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]
    faces = set()
    for t in tris:
        faces |= {t, (t[0], t[1]), (t[0], t[2]), (t[1], t[2]), (t[0],), (t[1],), (t[2],)}
    h = homology_of(SimplicialComplex.from_faces(6, faces))
    assert h.betti == {} and h.torsion == {1: (2,)}
    assert not is_contractible_profile(h)
    with pytest.raises(TorsionError):
        connectivity_of_profile(h)


def test_contractible_and_connectivity():
    assert is_contractible_profile(homology_of(independence_complex(path_graph(4))))
    assert not is_contractible_profile(homology_of(independence_complex(cycle_graph(6))))
    assert not is_contractible_profile(EMPTY_PROFILE)
    assert connectivity_of_profile(homology_of(independence_complex(cycle_graph(6)))) == 0
    assert connectivity_of_profile(HomologyProfile({})) == INFINITY
    assert connectivity_of_profile(homology_of(independence_complex(G_graph(3, 3)))) == 2


@given(graphs(max_vertices=8))
def test_betti_matches_rational_oracle(g):
    k = independence_complex(g)
    h = homology_of(k)
    assert h.torsion == {}
    assert h.betti == betti_over_q(k.all_faces(), k.vertex_count)


@pytest.mark.parametrize("g", [G_graph(3, 2), H_graph(3, 2), G_graph(2, 4), cycle_graph(11)], ids=repr)
def test_mod_p_prepass_agrees(g):
    assert random_prime_rank_check(chain_complex(independence_complex(g)), seed=3)


def test_profile_algebra():
    s0 = HomologyProfile({0: 1})
    assert suspend_profile(EMPTY_PROFILE) == s0
    assert join_profiles(s0, s0) == HomologyProfile({1: 1})
    assert join_profiles(EMPTY_PROFILE, HomologyProfile({3: 2})) == HomologyProfile({3: 2})
    assert join_profiles(HomologyProfile({}), HomologyProfile({3: 2})) == HomologyProfile({})
    assert wedge_profiles(HomologyProfile({1: 1}), HomologyProfile({1: 1, 2: 1})) == HomologyProfile({1: 2, 2: 1})
    with pytest.raises(ValueError):
        wedge_profiles(EMPTY_PROFILE, s0)


sphere_profiles = st.dictionaries(st.integers(0, 2), st.integers(1, 2), max_size=2).map(HomologyProfile)


@given(sphere_profiles, sphere_profiles)
def test_join_of_spheres_matches_simplicial_join(p, q):
    """Realise each profile as a wedge of boundary-of-simplex spheres and join them."""

    def realise(profile):
        faces, offset = set(), 0
        vertex0 = None
        for d, mult in profile.betti.items():
            for _ in range(mult):
                verts = list(range(offset, offset + d + 2))
                offset += d + 2
                for size in range(1, d + 2):
                    faces |= set(combinations(verts, size))
                if vertex0 is not None:
                    faces.add((vertex0, verts[0]))  # connect so the union is a wedge up to homotopy
                vertex0 = verts[0]
        if not faces:
            faces = {(0,)}
            offset = 1
        return SimplicialComplex.from_faces(offset, faces)

    kp, kq = realise(p), realise(q)
    assert homology_of(kp) == p and homology_of(kq) == q
    assert homology_of(join(kp, kq)) == join_profiles(p, q)
