from itertools import permutations

import pytest

from biersphere import golden
from biersphere.bier import alexander_dual, bier_sphere
from biersphere.classify import enumerate_complexes
from biersphere.complexes import SimplicialComplex
from biersphere.toric import (
    CharMatrix,
    _gl3_f2,
    bier_charmap,
    buchstaber_certificate,
    cohomology_presentation,
    det_int,
    fenn_charmap,
    small_cover_orientable,
    validate_charmap,
)
from biersphere.verify import sphere_charmap


def det_oracle(a):
    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total


def test_det_int_against_expansion():
    mats = [
        [[2]],
        [[1, 2], [3, 4]],
        [[0, 1, 2], [1, 0, 3], [4, 5, 0]],
        [[2, 0, 0, 1], [0, 1, 0, 0], [3, 0, 1, 0], [0, 0, 0, 5]],
        [[1, 1], [1, 1]],
    ]
    for a in mats:
        assert det_int([row[:] for row in a]) == det_oracle(a)
    assert det_int([]) == 1


def test_bier_charmap_shape():
    K = SimplicialComplex.empty(4)
    L = bier_charmap(K, alexander_dual(K))
    assert L.rows == 3 and L.cols == 8
    assert L.column(0) == (1, 0, 0)
    assert L.column(3) == (1, 1, 1)
    assert L.column(7) == (1, 1, 1)
    assert L.labels[:4] == ("x1", "x2", "x3", "x4")


def test_bier_charmap_m2():
    K = SimplicialComplex.empty(2)
    L = bier_charmap(K, alexander_dual(K))
    assert L.entries == ((1, 1, 1, 1),)


def test_validate_charmap_golden():
    S, Lam = sphere_charmap(13)
    ok, bad = validate_charmap(S, Lam)
    assert ok and bad is None


def test_validate_charmap_reports_failure():
    S, Lam = sphere_charmap(13)
    broken = CharMatrix(
        entries=tuple(
            tuple(row[0] if j == 1 else x for j, x in enumerate(row))
            for row in Lam.entries
        ),
        labels=Lam.labels,
    )
    ok, bad = validate_charmap(S, broken)
    assert not ok
    assert bad in S.facets


def test_validate_charmap_rejects_wrong_facet_size():
    K = SimplicialComplex.from_facets(3, [[1, 2], [3]])
    Lam = CharMatrix(entries=((1, 0, 1), (0, 1, 1)), labels=("a", "b", "c"))
    with pytest.raises(ValueError):
        validate_charmap(K, Lam)


def test_buchstaber_exhaustive_small():
    for m in (2, 3, 4):
        for K in enumerate_complexes(m):
            cert = buchstaber_certificate(K)
            assert cert.claimed_s == m + 1 == cert.upper_bound
            ok, _ = validate_charmap(cert.sphere.complex, cert.matrix)
            assert ok


def test_fenn_columns():
    F = fenn_charmap(golden.golden_building_set(13))
    assert F.column_by_label("{1}") == (1, 0, 0)
    assert F.column_by_label("{4}") == (-1, -1, -1)
    F10 = fenn_charmap(golden.golden_building_set(10))
    assert F10.column_by_label("{1,2}") == (1, 1, 0)
    assert F10.column_by_label("{1,2,3}") == (1, 1, 1)


def test_fenn_matches_published_matrices():
    for i in golden.NESTOHEDRAL_INDICES:
        F = fenn_charmap(golden.golden_building_set(i))
        A = golden.appendix_matrix(i)
        assert sorted(F.labels) == sorted(A.labels)
        for lab in A.labels:
            assert F.column_by_label(lab) == A.column_by_label(lab)


def test_cohomology_presentation():
    S, Lam = sphere_charmap(10)
    pres = cohomology_presentation(S, Lam)
    assert pres.betti == (1, 3, 3, 1)
    assert sum(pres.betti) == S.f_vector()[-1]
    supports = {rel for rel in pres.monomial_relations}
    assert len(supports) == len(pres.monomial_relations)
    assert pres.linear_relations == Lam.entries


def test_betti_golden_all_types():
    for i in range(1, 14):
        S, Lam = sphere_charmap(i)
        assert cohomology_presentation(S, Lam).betti == golden.BETTI[i]


def test_betti_sanity():
    for i in range(1, 14):
        S, Lam = sphere_charmap(i)
        b = cohomology_presentation(S, Lam).betti
        assert b[0] == b[-1] == 1
        assert b[1] == S.m - 3


def test_presentation_rejects_invalid_matrix():
    S, Lam = sphere_charmap(13)
    zeroed = CharMatrix(
        entries=tuple(tuple(0 for _ in row) for row in Lam.entries),
        labels=Lam.labels,
    )
    with pytest.raises(ValueError):
        cohomology_presentation(S, zeroed)


def test_gl3_count():
    assert len(_gl3_f2()) == 168


def test_orientability_identity_basis():
    w = small_cover_orientable(golden.appendix_matrix(13))
    assert w is not None
    cols = {golden.appendix_matrix(13).mod2()[r] for r in range(3)}  # rows, just sanity
    b1, b2, b3 = w
    assert len({b1, b2, b3}) == 3


def test_orientability_golden_set():
    found = {
        i
        for i in range(1, 14)
        if small_cover_orientable(golden.appendix_matrix(i)) is not None
    }
    assert found == set(golden.ORIENTABLE_INDICES)


def test_orientability_needs_three_rows():
    with pytest.raises(ValueError):
        small_cover_orientable(CharMatrix(entries=((1, 0), (0, 1)), labels=("a", "b")))


def test_charmatrix_json_roundtrip():
    A = golden.appendix_matrix(7)
    assert CharMatrix.from_json_obj(A.to_json_obj()) == A
