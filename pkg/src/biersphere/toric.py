"""Characteristic matrices, certificates, and small-cover invariants.

All determinant work is exact integer arithmetic (fraction-free
elimination); the mod-2 material reduces the same matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .complexes import SimplicialComplex, popcount, vertices_of
from .bier import BierSphere, alexander_dual, bier_sphere


@dataclass(frozen=True)
class CharMatrix:
    entries: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if any(len(r) != len(self.labels) for r in self.entries):
            raise ValueError("row length does not match label count")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.labels)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[r][j] for r in range(self.rows))

    def column_by_label(self, label: str) -> tuple[int, ...]:
        return self.column(self.labels.index(label))

    def mod2(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(x % 2 for x in row) for row in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(r) for r in self.entries],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CharMatrix":
        mat = cls(
            entries=tuple(tuple(int(x) for x in r) for r in obj["entries"]),
            labels=tuple(obj["labels"]),
        )
        if mat.rows != obj["rows"] or mat.cols != obj["cols"]:
            raise ValueError("declared shape does not match entries")
        return mat


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def bier_charmap(K1: SimplicialComplex, K2: SimplicialComplex) -> CharMatrix:
    """(m-1) x 2m labelling: i and i' to e_i for i < m, both m-columns to
    the all-ones vector."""
    m = K1.m
    if K2.m != m or m < 2:
        raise ValueError("both complexes must share a ground set of size >= 2")
    n = m - 1
    ones = tuple(1 for _ in range(n))
    cols = []
    for _ in range(2):
        for i in range(n):
            cols.append(tuple(1 if r == i else 0 for r in range(n)))
        cols.append(ones)
    entries = tuple(tuple(col[r] for col in cols) for r in range(n))
    labels = tuple(f"x{i}" for i in range(1, m + 1)) + tuple(
        f"y{i}" for i in range(1, m + 1)
    )
    return CharMatrix(entries=entries, labels=labels)


def validate_charmap(
    K: SimplicialComplex, Lambda: CharMatrix
) -> tuple[bool, int | None]:
    """Check every facet's column submatrix has determinant +-1.

    Column j of the matrix corresponds to ground position j+1.  Returns
    (True, None) or (False, first offending facet mask).
    """
    if Lambda.cols != K.m:
        raise ValueError("column count must equal the ground-set size")
    n = Lambda.rows
    for facet in sorted(K.facets):
        verts = list(vertices_of(facet))
        if len(verts) != n:
            raise ValueError(f"facet of size {len(verts)} against {n} rows")
        minor = [[Lambda.entries[r][v - 1] for v in verts] for r in range(n)]
        if det_int(minor) not in (1, -1):
            return False, facet
    return True, None


@dataclass(frozen=True)
class BuchstaberCertificate:
    sphere: BierSphere
    matrix: CharMatrix
    claimed_s: int
    upper_bound: int

    def to_json_obj(self) -> dict:
        return {
            "sphere": self.sphere.to_json_obj(),
            "matrix": self.matrix.to_json_obj(),
            "claimed_s": self.claimed_s,
            "upper_bound": self.upper_bound,
        }


def buchstaber_certificate(K: SimplicialComplex) -> BuchstaberCertificate:
    """Certify s = s_R = m+1 for Bier(K) by an explicit valid labelling."""
    S = bier_sphere(K)
    Lambda = bier_charmap(K, alexander_dual(K))
    ok, bad = validate_charmap(S.complex, Lambda)
    if not ok:
        raise AssertionError(f"labelling failed on facet {bad:#x}")
    m = K.m
    return BuchstaberCertificate(S, Lambda, claimed_s=m + 1, upper_bound=2 * m - (m - 1))


def fenn_charmap(B) -> CharMatrix:
    """Canonical Delzant matrix of a nestohedron, one column per proper
    element: v_i = 1 if i in S without n+1, -1 if n+1 in S without i, else 0.
    """
    from .building import BuildingSetError

    if not B.is_connected:
        raise BuildingSetError("Fenn matrix requires a connected building set")
    n1 = B.n_plus_1
    n = n1 - 1
    proper = B.proper_elements()
    entries = []
    for i in range(1, n + 1):
        row = []
        for S in proper:
            if i in S and n1 not in S:
                row.append(1)
            elif i not in S and n1 in S:
                row.append(-1)
            else:
                row.append(0)
        entries.append(tuple(row))
    labels = tuple("{" + ",".join(map(str, sorted(S))) + "}" for S in proper)
    return CharMatrix(entries=tuple(entries), labels=labels)


@dataclass(frozen=True)
class CohomologyPresentation:
    generators: tuple[str, ...]
    monomial_relations: tuple[tuple[str, ...], ...]
    linear_relations: tuple[tuple[int, ...], ...]
    betti: tuple[int, ...]  # beta_0, beta_2, ..., beta_2n

    def to_json_obj(self) -> dict:
        return {
            "generators": list(self.generators),
            "monomial_relations": [list(rel) for rel in self.monomial_relations],
            "linear_relations": [list(r) for r in self.linear_relations],
            "betti": list(self.betti),
        }


def cohomology_presentation(
    K: SimplicialComplex, Lambda: CharMatrix
) -> CohomologyPresentation:
    """Generators-and-relations description of the associated quasitoric
    manifold's cohomology; even Betti numbers are the h-vector entries."""
    ok, bad = validate_charmap(K, Lambda)
    if not ok:
        raise ValueError(f"matrix is not valid for the complex (facet {bad:#x})")
    gens = tuple(f"v{i}" for i in range(1, K.m + 1))
    mf = sorted(K.minimal_non_faces(), key=lambda s: (popcount(s), s))
    monomials = tuple(
        tuple(f"v{v}" for v in vertices_of(s)) for s in mf
    )
    return CohomologyPresentation(
        generators=gens,
        monomial_relations=monomials,
        linear_relations=Lambda.entries,
        betti=tuple(K.h_vector()),
    )


def _gl3_f2():
    """All 168 invertible 3x3 matrices over the two-element field, as
    column triples."""
    vecs = [v for v in product((0, 1), repeat=3) if v != (0, 0, 0)]
    out = []
    for b1 in vecs:
        for b2 in vecs:
            if b2 == b1:
                continue
            span = {b1, b2, tuple((x + y) % 2 for x, y in zip(b1, b2))}
            for b3 in vecs:
                if b3 not in span:
                    out.append((b1, b2, b3))
    return out


def small_cover_orientable(Lambda: CharMatrix):
    """Orientability of the small cover over a 3-polytope: search for a
    basis of F_2^3 whose four-element set {b1, b2, b3, b1+b2+b3} contains
    every column mod 2.  Returns the witnessing basis or None."""
    if Lambda.rows != 3:
        raise ValueError("criterion implemented for three rows only")
    reduced = Lambda.mod2()
    columns = {
        tuple(reduced[r][j] for r in range(3)) for j in range(Lambda.cols)
    }
    for b1, b2, b3 in _gl3_f2():
        allowed = {b1, b2, b3, tuple((x + y + z) % 2 for x, y, z in zip(b1, b2, b3))}
        if columns <= allowed:
            return (b1, b2, b3)
    return None
