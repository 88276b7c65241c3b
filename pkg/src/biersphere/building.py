"""Building sets and exact nestohedron geometry.

Realizations intersect the level hyperplane sum(x) = |B| with the halfspaces
sum_{i in S} x_i >= |B restricted to S| and enumerate vertices by solving
every square subsystem over the rationals.  No floating point enters any
decision; floats only order vertices cosmetically in the OFF export.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import atan2

from .complexes import SimplicialComplex, _antichain, mask_of


class BuildingSetError(ValueError):
    """A family violating one of the building-set axioms."""


@dataclass(frozen=True)
class BuildingSet:
    n_plus_1: int
    elements: frozenset[frozenset[int]]

    @property
    def full_set(self) -> frozenset[int]:
        return frozenset(range(1, self.n_plus_1 + 1))

    @property
    def is_connected(self) -> bool:
        return self.full_set in self.elements

    def proper_elements(self) -> list[frozenset[int]]:
        """Elements other than the full set, in the fixed column order:
        singletons in natural order, then descending cardinality with
        lexicographic tie-break."""
        proper = [s for s in self.elements if s != self.full_set]
        singles = sorted((s for s in proper if len(s) == 1), key=min)
        rest = sorted(
            (s for s in proper if len(s) > 1),
            key=lambda s: (-len(s), tuple(sorted(s))),
        )
        return singles + rest

    def restriction_size(self, S: frozenset[int]) -> int:
        return sum(1 for e in self.elements if e <= S)

    def to_json_obj(self) -> dict:
        return {
            "n_plus_1": self.n_plus_1,
            "elements": sorted([sorted(e) for e in self.elements]),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BuildingSet":
        return validate_building_set(
            [frozenset(e) for e in obj["elements"]], int(obj["n_plus_1"])
        )


def validate_building_set(elements, n_plus_1: int) -> BuildingSet:
    """Check both axioms and report the violated one."""
    elems = frozenset(frozenset(e) for e in elements)
    ground = frozenset(range(1, n_plus_1 + 1))
    for e in elems:
        if not e or not e <= ground:
            raise BuildingSetError(f"element {sorted(e)} not a nonempty subset of [{n_plus_1}]")
    for i in ground:
        if frozenset({i}) not in elems:
            raise BuildingSetError(f"missing singleton {{{i}}}")
    for a, b in combinations(elems, 2):
        if a & b and (a | b) not in elems:
            raise BuildingSetError(
                f"union axiom violated: {sorted(a)} meets {sorted(b)} "
                f"but {sorted(a | b)} is absent"
            )
    return BuildingSet(n_plus_1, elems)


# -- exact linear algebra -------------------------------------------------

def solve_square(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve A x = b over the rationals; None when A is singular."""
    n = len(rows)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


@dataclass(frozen=True)
class Halfspace:
    """coeffs . x >= rhs, labelled; element is set for nestohedral facets."""

    label: str
    coeffs: tuple[int, ...]
    rhs: Fraction
    element: frozenset[int] | None = None


@dataclass(frozen=True)
class NestohedronRealization:
    """Exact vertex description of a simple polytope in the level hyperplane."""

    ambient: int
    level: Fraction  # sum of coordinates on the defining hyperplane
    halfspaces: tuple[Halfspace, ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    incidence: tuple[frozenset[int], ...]  # halfspace indices tight per vertex

    @property
    def dim(self) -> int:
        return self.ambient - 1

    def facet_vertex_sets(self) -> list[frozenset[int]]:
        """Per halfspace, the set of vertex indices lying on it."""
        out = []
        for h_idx in range(len(self.halfspaces)):
            out.append(frozenset(v for v, inc in enumerate(self.incidence) if h_idx in inc))
        return out

    def to_json_obj(self) -> dict:
        return {
            "ambient": self.ambient,
            "level": str(self.level),
            "halfspaces": [
                {
                    "label": h.label,
                    "coeffs": list(h.coeffs),
                    "rhs": str(h.rhs),
                    "element": sorted(h.element) if h.element is not None else None,
                }
                for h in self.halfspaces
            ],
            "vertices": [[str(c) for c in v] for v in self.vertices],
            "incidence": [sorted(inc) for inc in self.incidence],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "NestohedronRealization":
        return cls(
            ambient=int(obj["ambient"]),
            level=Fraction(obj["level"]),
            halfspaces=tuple(
                Halfspace(
                    label=h["label"],
                    coeffs=tuple(h["coeffs"]),
                    rhs=Fraction(h["rhs"]),
                    element=frozenset(h["element"]) if h["element"] is not None else None,
                )
                for h in obj["halfspaces"]
            ),
            vertices=tuple(tuple(Fraction(c) for c in v) for v in obj["vertices"]),
            incidence=tuple(frozenset(inc) for inc in obj["incidence"]),
        )


def _enumerate_vertices(
    ambient: int, level: Fraction, halfspaces: tuple[Halfspace, ...]
) -> tuple[tuple[tuple[Fraction, ...], ...], tuple[frozenset[int], ...]]:
    """Brute-force vertex enumeration inside the level hyperplane.

    Solves each (ambient x ambient) system of dim tight halfspaces plus the
    hyperplane, keeps feasible solutions, dedupes, and recomputes incidence
    from scratch so simplicity can be asserted independently.
    """
    dim = ambient - 1
    points: list[tuple[Fraction, ...]] = []
    for tight in combinations(range(len(halfspaces)), dim):
        rows = [[Fraction(c) for c in halfspaces[i].coeffs] for i in tight]
        rhs = [halfspaces[i].rhs for i in tight]
        rows.append([Fraction(1)] * ambient)
        rhs.append(level)
        sol = solve_square(rows, rhs)
        if sol is None:
            continue
        if all(
            sum(Fraction(c) * x for c, x in zip(h.coeffs, sol)) >= h.rhs
            for h in halfspaces
        ):
            pt = tuple(sol)
            if pt not in points:
                points.append(pt)
    points.sort()
    incidence = []
    for pt in points:
        tightset = frozenset(
            i
            for i, h in enumerate(halfspaces)
            if sum(Fraction(c) * x for c, x in zip(h.coeffs, pt)) == h.rhs
        )
        if len(tightset) != dim:
            raise AssertionError(f"non-simple vertex {pt}: tight on {len(tightset)} facets")
        incidence.append(tightset)
    return tuple(points), tuple(incidence)


def realize_nestohedron(B: BuildingSet) -> NestohedronRealization:
    """Postnikov H-representation, enumerated exactly."""
    if not B.is_connected:
        raise BuildingSetError("realization requires a connected building set")
    ambient = B.n_plus_1
    level = Fraction(len(B.elements))
    halfspaces = tuple(
        Halfspace(
            label="{" + ",".join(map(str, sorted(S))) + "}",
            coeffs=tuple(1 if i in S else 0 for i in range(1, ambient + 1)),
            rhs=Fraction(B.restriction_size(S)),
            element=S,
        )
        for S in B.proper_elements()
    )
    vertices, incidence = _enumerate_vertices(ambient, level, halfspaces)
    return NestohedronRealization(ambient, level, halfspaces, vertices, incidence)


@dataclass(frozen=True)
class NerveComplex:
    """Boundary complex of the dual simplicial polytope, with facet labels."""

    complex: SimplicialComplex
    labels: tuple[str, ...]  # label of each vertex position 1..m


def nerve_of_realization(R: NestohedronRealization) -> NerveComplex:
    """Nerve of the facet covering: one vertex per nonempty facet."""
    facet_sets = R.facet_vertex_sets()
    active = [i for i, vs in enumerate(facet_sets) if vs]
    position = {h: p + 1 for p, h in enumerate(active)}
    facets = [
        mask_of(position[h] for h in inc if h in position) for inc in R.incidence
    ]
    K = SimplicialComplex(len(active), _antichain(facets))
    return NerveComplex(K, tuple(R.halfspaces[h].label for h in active))


def nerve_by_truncation(B: BuildingSet) -> NerveComplex:
    """Nerve complex built by stellar subdivisions along the truncation lemma.

    Starts from the boundary of the simplex on the singleton labels and
    subdivides at the face spanned by the minimal decomposition of each
    non-simplex element, processed in inclusion-reverse order.
    """
    if not B.is_connected:
        raise BuildingSetError("truncation nerve requires a connected building set")
    n1 = B.n_plus_1
    base = {frozenset({i}) for i in range(1, n1 + 1)} | {B.full_set}
    if not base <= B.elements:
        raise BuildingSetError("building set must contain the simplex building set")
    K = SimplicialComplex.simplex_boundary(n1)
    labels = [frozenset({i}) for i in range(1, n1 + 1)]
    todo = sorted(
        B.elements - base, key=lambda s: (-len(s), tuple(sorted(s)))
    )
    current = set(base)
    for S in todo:
        maximal = [
            e for e in current
            if e < S and not any(e < other < S for other in current)
        ]
        covered = frozenset().union(*maximal) if maximal else frozenset()
        if covered != S or sum(len(e) for e in maximal) != len(S):
            raise BuildingSetError(f"no disjoint decomposition of {sorted(S)}")
        face = mask_of(labels.index(e) + 1 for e in maximal)
        if not K.is_face(face):
            raise BuildingSetError(f"decomposition of {sorted(S)} is not a face; bad order")
        K = K.stellar_subdivision(face)
        labels.append(S)
        current.add(S)
    label_strs = tuple("{" + ",".join(map(str, sorted(s))) + "}" for s in labels)
    return NerveComplex(K, label_strs)


def delzant_check(R: NestohedronRealization, Lambda) -> bool:
    """Every vertex's tight-facet columns must form a lattice basis."""
    from .toric import det_int

    labels = [h.label for h in R.halfspaces]
    try:
        col_of = {lab: Lambda.labels.index(lab) for lab in labels}
    except ValueError as exc:
        raise ValueError(f"matrix columns do not match facet labels: {exc}") from exc
    n = Lambda.rows
    for inc in R.incidence:
        cols = [col_of[labels[h]] for h in sorted(inc)]
        minor = [[Lambda.entries[r][c] for c in cols] for r in range(n)]
        if det_int(minor) not in (1, -1):
            return False
    return True


def _cut_one_vertex(R: NestohedronRealization, coeffs: tuple[int, ...]):
    """Add the halfspace coeffs . x <= c chosen so it strictly separates
    exactly the vertex minimizing coeffs; None when every offset ties."""
    phi = lambda pt: sum(Fraction(c) * x for c, x in zip(coeffs, pt))
    vals = [phi(v) for v in R.vertices]
    low = min(vals)
    eps = Fraction(1)
    for _ in range(8):
        cutoff = low + eps
        if sum(1 for x in vals if x < cutoff) == 1 and all(x != cutoff for x in vals):
            cut = Halfspace("cut", coeffs, cutoff)
            halfspaces = R.halfspaces + (cut,)
            vertices, incidence = _enumerate_vertices(R.ambient, R.level, halfspaces)
            return NestohedronRealization(
                R.ambient, R.level, halfspaces, vertices, incidence
            )
        eps /= 2
    return None


def realize_p6():
    """The one non-nestohedral type: truncate a vertex of the type-7 polytope.

    First tries a cutting plane parallel to the unique triangular facet,
    halving the offset until exactly one vertex is separated.  On the
    canonical realization that ladder always ties (the quadrilateral facet
    opposite the triangle shares its normal direction, so four vertices sit
    at equal distance); the fallback truncates candidate vertices with the
    standard cut along the sum of their tight facet normals, in coordinate
    order, keeping the first result of the right combinatorial type.
    Returns the polytope together with its published characteristic matrix,
    columns assigned to facets via an isomorphism of the nerve onto the
    golden type-6 sphere.
    """
    from . import golden
    from .classify import canonical_form, isomorphic
    from .toric import CharMatrix

    R7 = realize_nestohedron(golden.golden_building_set(7))
    facet_sets = R7.facet_vertex_sets()
    triangles = [i for i, vs in enumerate(facet_sets) if len(vs) == 3]
    if len(triangles) != 1:
        raise AssertionError("type-7 polytope should have a unique triangular facet")
    tri = triangles[0]
    S6 = golden.golden_sphere(6)
    target = canonical_form(S6)

    candidates = []
    away = tuple(-c for c in R7.halfspaces[tri].coeffs)
    R6 = _cut_one_vertex(R7, away)
    if R6 is not None:
        candidates.append(R6)
    for vi in range(len(R7.vertices)):
        if tri in R7.incidence[vi]:
            continue
        coeffs = tuple(
            sum(R7.halfspaces[h].coeffs[k] for h in R7.incidence[vi])
            for k in range(R7.ambient)
        )
        cut = _cut_one_vertex(R7, coeffs)
        if cut is not None:
            candidates.append(cut)

    nerve = witness = R6 = None
    for cand in candidates:
        nv = nerve_of_realization(cand)
        if canonical_form(nv.complex.with_ground(S6.m)) == target:
            w = isomorphic(nv.complex.with_ground(S6.m), S6)
            if w is not None:
                R6, nerve, witness = cand, nv, w
                break
    if R6 is None:
        raise AssertionError("no vertex truncation of the type-7 polytope matched")
    appendix = golden.appendix_matrix(6)
    order = [
        golden.P6_COLUMN_OF_VERTEX[witness[p] - 1]
        for p in range(1, nerve.complex.m + 1)
    ]
    entries = tuple(
        tuple(appendix.entries[r][c] for c in order) for r in range(appendix.rows)
    )
    Lambda = CharMatrix(entries=entries, labels=nerve.labels)
    if not delzant_check(R6, Lambda):
        raise AssertionError("type-6 realization failed its Delzant certificate")
    return R6, Lambda


# -- OFF export -------------------------------------------------------------

def _facet_cycles(R: NestohedronRealization) -> list[list[int]]:
    """Vertex indices of each nonempty facet, ordered cyclically (3-polytopes).

    Ordering uses floating point only; membership is exact.
    """
    cycles = []
    for vs in R.facet_vertex_sets():
        idxs = sorted(vs)
        if not idxs:
            continue
        pts = [tuple(float(c) for c in R.vertices[i]) for i in idxs]
        cx = [sum(p[k] for p in pts) / len(pts) for k in range(len(pts[0]))]
        rel = [tuple(p[k] - cx[k] for k in range(len(p))) for p in pts]
        u = rel[0]
        # Gram-Schmidt a second in-plane axis from any independent rel vector
        def dot(a, b):
            return sum(x * y for x, y in zip(a, b))
        w = next(r for r in rel[1:] if abs(dot(r, u)) ** 2 < dot(r, r) * dot(u, u) * (1 - 1e-12))
        proj = dot(w, u) / dot(u, u)
        v2 = tuple(w[k] - proj * u[k] for k in range(len(w)))
        angles = [atan2(dot(r, v2), dot(r, u)) for r in rel]
        cycles.append([i for _, i in sorted(zip(angles, idxs))])
    return cycles


def write_off(R: NestohedronRealization) -> str:
    """OFF text: decimal coordinates in the body, exact fractions in comments.

    The body drops the last ambient coordinate (an affine bijection on the
    level hyperplane) so standard 3-coordinate viewers can read the file;
    the comments and the JSON twin keep every exact coordinate.
    """
    cycles = _facet_cycles(R)
    lines = ["OFF"]
    edge_count = sum(len(c) for c in cycles) // 2
    lines.append(f"{len(R.vertices)} {len(cycles)} {edge_count}")
    for v in R.vertices:
        lines.append("# " + " ".join(str(c) for c in v))
        lines.append(" ".join(repr(float(c)) for c in v[:-1]))
    for cyc in cycles:
        lines.append(str(len(cyc)) + " " + " ".join(map(str, cyc)))
    return "\n".join(lines) + "\n"


def read_off(text: str) -> dict:
    """Parse the subset of OFF emitted by write_off."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    if lines[0] != "OFF":
        raise ValueError("not an OFF file")
    nv, nf, ne = map(int, lines[1].split())
    vertices = [[float(x) for x in lines[2 + i].split()] for i in range(nv)]
    faces = []
    for i in range(nf):
        parts = list(map(int, lines[2 + nv + i].split()))
        if parts[0] != len(parts) - 1:
            raise ValueError("malformed face row")
        faces.append(parts[1:])
    return {"vertices": vertices, "faces": faces, "edges": ne}
