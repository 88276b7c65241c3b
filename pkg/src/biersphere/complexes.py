"""Finite simplicial complexes with ghost vertices.

Vertices are the positions 1..m of a fixed ground set; faces are stored as
bit masks (bit i-1 set means vertex i belongs to the face).  A complex keeps
only its facet antichain; closure is implicit.  Ghost vertices (positions in
no facet) are first-class: the ground size ``m`` is independent of the
support of the facets, so the empty complex on m vertices is representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_GROUND = 64


class DegenerateComplexError(ValueError):
    """Raised for operations undefined on the empty complex (dimension -1)."""


def mask_of(vertices) -> int:
    """Bit mask for an iterable of 1-based vertex labels."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based vertex labels of a bit mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int):
    """All subsets of ``mask``, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _antichain(masks) -> frozenset[int]:
    """Inclusion-maximal elements of a family of masks; {0} if family empty."""
    masks = set(masks)
    maximal = {
        f for f in masks
        if not any(f != g and f & ~g == 0 for g in masks)
    }
    return frozenset(maximal) if maximal else frozenset({0})


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by ground size and facet antichain."""

    m: int
    facets: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.m <= MAX_GROUND:
            raise ValueError(f"ground size must be in 1..{MAX_GROUND}, got {self.m}")
        full = (1 << self.m) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet contains label out of range")

    # -- construction -------------------------------------------------

    @classmethod
    def from_facets(cls, m: int, facets) -> "SimplicialComplex":
        """Build from any generating family of faces (1-based label lists).

        Dominated and duplicate faces are absorbed; an empty family yields
        the empty complex on m all-ghost vertices.
        """
        masks = []
        for face in facets:
            for v in face:
                if not 1 <= v <= m:
                    raise ValueError(f"label {v} out of range 1..{m}")
            masks.append(mask_of(face))
        return cls(m, _antichain(masks))

    @classmethod
    def empty(cls, m: int) -> "SimplicialComplex":
        return cls(m, frozenset({0}))

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        """The full simplex on [m]."""
        return cls(m, frozenset({(1 << m) - 1}))

    @classmethod
    def simplex_boundary(cls, m: int) -> "SimplicialComplex":
        full = (1 << m) - 1
        return cls(m, frozenset(full & ~(1 << i) for i in range(m)))

    # -- basic structure ----------------------------------------------

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def is_void_of_faces(self) -> bool:
        """True for the empty complex (only the empty face)."""
        return self.facets == frozenset({0})

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == frozenset({(1 << self.m) - 1})

    def is_pure(self) -> bool:
        sizes = {popcount(f) for f in self.facets}
        return len(sizes) == 1

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def vertex_mask(self) -> int:
        """Mask of non-ghost vertices."""
        acc = 0
        for f in self.facets:
            acc |= f
        return acc

    def ghost_vertices(self) -> tuple[int, ...]:
        full = (1 << self.m) - 1
        return vertices_of(full & ~self.vertex_mask())

    def faces(self) -> list[int]:
        """All faces (masks), including the empty face, each once."""
        seen = set()
        for f in self.facets:
            for s in submasks(f):
                seen.add(s)
        return sorted(seen)

    # -- invariants ----------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_{dim}); undefined for the empty complex."""
        if self.is_void_of_faces:
            raise DegenerateComplexError("empty complex has no f-vector")
        counts = [0] * (self.dim + 1)
        for face in self.faces():
            k = popcount(face)
            if k:
                counts[k - 1] += 1
        return tuple(counts)

    def h_vector(self, n: int | None = None) -> tuple[int, ...]:
        """(h_0, ..., h_n) for a pure complex of dimension n-1.

        Expands h_0 t^n + ... + h_n = (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}
        exactly over the integers.
        """
        if not self.is_pure():
            raise ValueError("h-vector requires a pure complex")
        f = self.f_vector()
        if n is None:
            n = self.dim + 1
        if n != self.dim + 1:
            raise ValueError("ambient rank must equal dim + 1")
        fext = (1,) + f  # f_{-1} = 1
        h = []
        for k in range(n + 1):
            # coefficient of t^{n-k} in sum_i f_{i-1} (t-1)^{n-i}
            coeff = 0
            for i in range(k + 1):
                coeff += fext[i] * comb(n - i, k - i) * (-1) ** (k - i)
            h.append(coeff)
        return tuple(h)

    def euler_characteristic(self) -> int:
        f = self.f_vector()
        return sum((-1) ** i * fi for i, fi in enumerate(f))

    def minimal_non_faces(self) -> list[int]:
        """Inclusion-minimal non-faces; [] for the full simplex.

        Brute force over all subsets: s is a minimal non-face iff it is not
        a face while every s minus one vertex is.  Ghost vertices appear as
        singletons.
        """
        out = []
        for s in range(1, 1 << self.m):
            if self.is_face(s):
                continue
            sub = s
            minimal = True
            while sub:
                low = sub & -sub
                if not self.is_face(s & ~low):
                    minimal = False
                    break
                sub &= sub - 1
            if minimal:
                out.append(s)
        out.sort(key=lambda x: (popcount(x), x))
        return out

    def is_flag(self) -> bool:
        return all(popcount(s) <= 2 for s in self.minimal_non_faces())

    # -- derived complexes ----------------------------------------------

    def skeleton(self, ell: int) -> "SimplicialComplex":
        if not -1 <= ell <= self.dim:
            raise ValueError(f"skeleton index {ell} out of range")
        if ell == -1:
            return SimplicialComplex.empty(self.m)
        faces = {f for f in self.faces() if popcount(f) == ell + 1}
        lower = {f for f in self.facets if popcount(f) <= ell + 1}
        return SimplicialComplex(self.m, _antichain(faces | lower))

    def stellar_subdivision(self, sigma: int) -> "SimplicialComplex":
        """Stellar subdivision at the nonempty face sigma.

        The fresh vertex gets the label m+1.  Facets containing sigma are
        replaced by (F minus one vertex of sigma) + new vertex.
        """
        if sigma == 0 or not self.is_face(sigma):
            raise ValueError("sigma must be a nonempty face")
        if self.m + 1 > MAX_GROUND:
            raise ValueError("ground size limit exceeded")
        new_bit = 1 << self.m
        new_facets = set()
        for f in self.facets:
            if sigma & ~f:
                new_facets.add(f)
                continue
            rest = sigma
            while rest:
                low = rest & -rest
                new_facets.add((f & ~low) | new_bit)
                rest &= rest - 1
        return SimplicialComplex(self.m + 1, _antichain(new_facets))

    def with_ground(self, m: int) -> "SimplicialComplex":
        """Same facets on a larger ground set; the new labels are ghosts."""
        if m < self.m:
            raise ValueError("ground set can only grow")
        if m > MAX_GROUND:
            raise ValueError("ground size limit exceeded")
        return SimplicialComplex(m, self.facets)

    def is_pseudomanifold(self) -> bool:
        """Pure and every codimension-1 face lies in exactly two facets."""
        if not self.is_pure():
            return False
        n = self.dim + 1
        if n < 1:
            return False
        ridge_count: dict[int, int] = {}
        for f in self.facets:
            rest = f
            while rest:
                low = rest & -rest
                r = f & ~low
                ridge_count[r] = ridge_count.get(r, 0) + 1
                rest &= rest - 1
        return all(c == 2 for c in ridge_count.values())

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "m": self.m,
            "facets": [list(vertices_of(f)) for f in sorted(self.facets)],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        return cls.from_facets(int(obj["m"]), obj["facets"])
