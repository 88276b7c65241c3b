from fractions import Fraction

import pytest

from biersphere import golden
from biersphere.building import (
    BuildingSet,
    BuildingSetError,
    NestohedronRealization,
    _cut_one_vertex,
    delzant_check,
    nerve_by_truncation,
    nerve_of_realization,
    read_off,
    realize_nestohedron,
    realize_p6,
    solve_square,
    validate_building_set,
    write_off,
)
from biersphere.classify import canonical_form
from biersphere.toric import fenn_charmap


def test_validate_accepts_good_set():
    B = validate_building_set([[1], [2], [3], [4], [1, 2, 3, 4]], 4)
    assert B.is_connected
    assert len(B.elements) == 5


def test_validate_reports_missing_singleton():
    with pytest.raises(BuildingSetError, match="singleton"):
        validate_building_set([[1], [2], [1, 2], [2, 3]], 3)


def test_validate_reports_union_axiom():
    with pytest.raises(BuildingSetError, match="union"):
        validate_building_set([[1], [2], [3], [1, 2], [2, 3]], 3)


def test_validate_rejects_foreign_elements():
    with pytest.raises(BuildingSetError):
        validate_building_set([[1], [2], [3], [4]], 3)


def test_proper_element_order():
    B = golden.golden_building_set(7)
    names = [tuple(sorted(s)) for s in B.proper_elements()]
    assert names == [(1,), (2,), (3,), (4,), (1, 2, 3), (1, 3, 4), (1, 2)]


def test_solve_square():
    rows = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert solve_square(rows, [Fraction(5), Fraction(10)]) == [Fraction(1), Fraction(3)]
    singular = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert solve_square(singular, [Fraction(1), Fraction(1)]) is None


def test_simplex_realization():
    # the minimal connected building set cuts out a simplex: the lattice
    # points are the permutations of (2,1,1,1)
    R = realize_nestohedron(golden.golden_building_set(13))
    expected = set()
    for i in range(4):
        pt = [Fraction(1)] * 4
        pt[i] = Fraction(2)
        expected.add(tuple(pt))
    assert set(R.vertices) == expected
    nerve = nerve_of_realization(R)
    assert nerve.complex.f_vector() == (4, 6, 4)


def test_cube_realization():
    R = realize_nestohedron(golden.golden_building_set(10))
    assert len(R.vertices) == 8
    nerve = nerve_of_realization(R)
    assert nerve.complex.f_vector() == (6, 12, 8)


def test_cut_simplex_realization():
    R = realize_nestohedron(golden.golden_building_set(12))
    assert len(R.vertices) == 6
    nerve = nerve_of_realization(R)
    assert nerve.complex.f_vector() == (5, 9, 6)


def test_realization_exactness_and_simplicity():
    for i in golden.NESTOHEDRAL_INDICES:
        R = realize_nestohedron(golden.golden_building_set(i))
        for v, inc in zip(R.vertices, R.incidence):
            assert sum(v) == R.level
            assert len(inc) == 3
            for j, h in enumerate(R.halfspaces):
                val = sum(Fraction(c) * x for c, x in zip(h.coeffs, v))
                assert val >= h.rhs
                assert (val == h.rhs) == (j in inc)


def test_realization_requires_connected():
    B = validate_building_set([[1], [2], [3]], 3)
    with pytest.raises(BuildingSetError):
        realize_nestohedron(B)
    with pytest.raises(BuildingSetError):
        nerve_by_truncation(B)


def test_truncation_nerve_starts_at_simplex():
    trunc = nerve_by_truncation(golden.golden_building_set(13))
    assert trunc.complex.f_vector() == (4, 6, 4)


def test_truncation_single_cut():
    trunc = nerve_by_truncation(golden.golden_building_set(12))
    assert trunc.complex.f_vector() == (5, 9, 6)


def test_two_paths_agree():
    for i in golden.NESTOHEDRAL_INDICES:
        B = golden.golden_building_set(i)
        trunc = nerve_by_truncation(B)
        direct = nerve_of_realization(realize_nestohedron(B))
        m = max(trunc.complex.m, direct.complex.m)
        assert canonical_form(trunc.complex.with_ground(m)) == canonical_form(
            direct.complex.with_ground(m)
        )


def test_nerves_match_spheres():
    for i in golden.NESTOHEDRAL_INDICES:
        nerve = nerve_of_realization(realize_nestohedron(golden.golden_building_set(i)))
        S = golden.golden_sphere(i)
        assert canonical_form(nerve.complex.with_ground(S.m)) == canonical_form(S)


def test_no_building_set_gives_type_6():
    target = canonical_form(golden.golden_sphere(6))
    for i in golden.NESTOHEDRAL_INDICES:
        nerve = nerve_of_realization(realize_nestohedron(golden.golden_building_set(i)))
        assert canonical_form(nerve.complex.with_ground(8)) != target


def test_delzant_check():
    for i in golden.NESTOHEDRAL_INDICES:
        B = golden.golden_building_set(i)
        assert delzant_check(realize_nestohedron(B), fenn_charmap(B))


def test_delzant_check_rejects_bad_matrix():
    from biersphere.toric import CharMatrix

    B = golden.golden_building_set(13)
    R = realize_nestohedron(B)
    F = fenn_charmap(B)
    doubled = CharMatrix(
        entries=tuple(tuple(2 * x if j == 0 else x for j, x in enumerate(row)) for row in F.entries),
        labels=F.labels,
    )
    assert not delzant_check(R, doubled)


def test_realize_p6():
    R6, L6 = realize_p6()
    assert len(R6.vertices) == 12
    nerve = nerve_of_realization(R6)
    assert nerve.complex.f_vector() == (8, 18, 12)
    S6 = golden.golden_sphere(6)
    assert canonical_form(nerve.complex.with_ground(S6.m)) == canonical_form(S6)
    assert delzant_check(R6, L6)
    A6 = golden.appendix_matrix(6)
    assert sorted(L6.column(j) for j in range(8)) == sorted(A6.column(j) for j in range(8))


def test_cut_one_vertex_returns_none_on_tie():
    R = realize_nestohedron(golden.golden_building_set(10))
    # the cube; any coordinate functional ties on a whole square facet
    assert _cut_one_vertex(R, (1, 0, 0, 0)) is None


def test_off_roundtrip():
    R = realize_nestohedron(golden.golden_building_set(10))
    text = write_off(R)
    parsed = read_off(text)
    assert len(parsed["vertices"]) == 8
    assert len(parsed["faces"]) == 6
    assert parsed["edges"] == 12
    body = {tuple(v) for v in parsed["vertices"]}
    assert body == {tuple(float(c) for c in v[:-1]) for v in R.vertices}


def test_realization_json_roundtrip():
    R = realize_nestohedron(golden.golden_building_set(12))
    again = NestohedronRealization.from_json_obj(R.to_json_obj())
    assert again == R


def test_building_set_json_roundtrip():
    B = golden.golden_building_set(10)
    assert BuildingSet.from_json_obj(B.to_json_obj()) == B
