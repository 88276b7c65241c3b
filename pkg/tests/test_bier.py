import pytest

from biersphere.bier import (
    FullSimplexError,
    alexander_dual,
    bier_mf_formula,
    bier_sphere,
    deleted_join,
    ghost_count,
    render_mf,
    side_label,
)
from biersphere.classify import enumerate_complexes
from biersphere.complexes import SimplicialComplex, mask_of, popcount, submasks


def all_faces(K):
    out = {0}
    for f in K.facets:
        out.update(submasks(f))
    return out


def deleted_join_oracle(K1, K2):
    m = K1.m
    cand = set()
    for s in all_faces(K1):
        for t in all_faces(K2):
            if s & t == 0:
                cand.add(s | (t << m))
    maximal = {c for c in cand if not any(c != d and c & ~d == 0 for d in cand)}
    return SimplicialComplex(2 * m, frozenset(maximal) or frozenset({0}))


def test_dual_of_empty_is_boundary():
    K = SimplicialComplex.empty(4)
    assert alexander_dual(K) == SimplicialComplex.simplex_boundary(4)
    assert alexander_dual(SimplicialComplex.simplex_boundary(4)) == K


def test_dual_of_simplex_undefined():
    with pytest.raises(FullSimplexError):
        alexander_dual(SimplicialComplex.simplex(4))


def test_dual_involution_everywhere():
    for m in (2, 3, 4):
        for K in enumerate_complexes(m):
            assert alexander_dual(alexander_dual(K)) == K


def test_deleted_join_matches_oracle():
    for m in (2, 3):
        reps = enumerate_complexes(m)
        for K1 in reps:
            for K2 in reps:
                assert deleted_join(K1, K2) == deleted_join_oracle(K1, K2)


def test_deleted_join_of_point_with_itself():
    # facets intersect here, so the splitting over the intersection matters
    P = SimplicialComplex.from_facets(1, [[1]])
    J = deleted_join(P, P)
    assert J.facets == frozenset({mask_of([1]), mask_of([2])})


def test_bier_sphere_certificate():
    for m in (2, 3, 4):
        for K in enumerate_complexes(m):
            S = bier_sphere(K)
            B = S.complex
            assert B.is_pure()
            assert B.dim == m - 2
            assert B.is_pseudomanifold()
            assert B.euler_characteristic() == 1 + (-1) ** (m - 2)


def test_bier_rejects_simplex():
    with pytest.raises(FullSimplexError):
        bier_sphere(SimplicialComplex.simplex(3))


def test_mf_formula_matches_direct_computation():
    for m in (2, 3, 4):
        for K in enumerate_complexes(m):
            S = bier_sphere(K)
            assert set(bier_mf_formula(K)) == set(S.complex.minimal_non_faces())


def test_ghost_count_formula():
    for m in (2, 3, 4):
        for K in enumerate_complexes(m):
            S = bier_sphere(K).complex
            assert ghost_count(K) == len(S.ghost_vertices())


def test_bier_of_empty_is_simplex_boundary_on_y():
    S = bier_sphere(SimplicialComplex.empty(4)).complex
    assert list(S.ghost_vertices()) == [1, 2, 3, 4]
    assert S.f_vector() == (4, 6, 4)


def test_render():
    assert side_label(2, 4) == "x2"
    assert side_label(6, 4) == "y2"
    masks = [mask_of([1, 5]), mask_of([3, 4])]
    assert render_mf(masks, 4) == ["x1y1", "x3x4"]


def test_sphere_json_roundtrip():
    from biersphere.bier import BierSphere

    S = bier_sphere(SimplicialComplex.from_facets(4, [[1, 2], [3]]))
    obj = S.to_json_obj()
    assert obj["side_labels"] is True
    assert BierSphere.from_json_obj(obj) == S
