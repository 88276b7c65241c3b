"""Alexander duality, deleted joins and the Bier sphere construction.

The doubled ground set uses the fixed position convention x_i -> i and
y_i -> m+i, so minimal non-face tables print stably in x/y notation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    SimplicialComplex,
    _antichain,
    popcount,
    submasks,
    vertices_of,
)


class FullSimplexError(ValueError):
    """Alexander dual (and the Bier sphere) are undefined for the simplex."""


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """Complex on a fresh copy of [m] whose facets are complements of MF(K)."""
    if K.is_full_simplex:
        raise FullSimplexError("Alexander dual undefined for the full simplex")
    full = (1 << K.m) - 1
    return SimplicialComplex(K.m, _antichain(full & ~s for s in K.minimal_non_faces()))


def deleted_join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Deleted join on 2m positions: faces sigma ++ tau with sigma, tau disjoint.

    Built facet-wise: for facets f1, f2 with intersection I, the maximal
    disjoint pairs inside f1 x f2 arise by splitting I between the two sides.
    """
    if K1.m != K2.m:
        raise ValueError("ground sizes differ")
    m = K1.m
    cand = set()
    for f1 in K1.facets:
        for f2 in K2.facets:
            inter = f1 & f2
            for a in submasks(inter):
                sigma = f1 & ~a
                tau = f2 & ~(inter & ~a)
                cand.add(sigma | (tau << m))
    return SimplicialComplex(2 * m, _antichain(cand))


@dataclass(frozen=True)
class BierSphere:
    """A Bier sphere: deleted join of K with its Alexander dual."""

    complex: SimplicialComplex
    source_m: int

    def to_json_obj(self) -> dict:
        obj = self.complex.to_json_obj()
        obj["source_m"] = self.source_m
        obj["side_labels"] = True
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BierSphere":
        return cls(SimplicialComplex.from_json_obj(obj), int(obj["source_m"]))


def bier_sphere(K: SimplicialComplex) -> BierSphere:
    """Bier(K) with the defining sphere properties verified."""
    if K.m < 2:
        raise ValueError("Bier sphere needs ground size m >= 2")
    dual = alexander_dual(K)
    B = deleted_join(K, dual)
    m = K.m
    if not (B.is_pure() and B.dim == m - 2 and B.is_pseudomanifold()):
        raise AssertionError("Bier construction failed its sphere certificate")
    return BierSphere(B, m)


def bier_mf_formula(K: SimplicialComplex) -> list[int]:
    """MF(Bier(K)) predicted by the closed formula, as masks on 2m positions.

    MF(K) on the x side, MF of the dual on the y side, and the pairs x_i y_i
    over positions non-ghost in both K and the dual.
    """
    dual = alexander_dual(K)
    m = K.m
    out = [s for s in K.minimal_non_faces()]
    out.extend(s << m for s in dual.minimal_non_faces())
    both = K.vertex_mask() & dual.vertex_mask()
    rest = both
    while rest:
        low = rest & -rest
        out.append(low | (low << m))
        rest &= rest - 1
    out.sort(key=lambda x: (popcount(x), x))
    return out


def ghost_count(K: SimplicialComplex) -> int:
    """Ghost count of Bier(K) from the f-vector formula |V| - f_0 + f_{|V|-2}."""
    if K.is_void_of_faces:
        return K.m
    f = K.f_vector()
    f0 = f[0]
    top = f[K.m - 2] if K.m - 2 <= K.dim else 0
    return K.m - f0 + top


def side_label(position: int, m: int) -> str:
    """Render a doubled-ground position as x_i / y_i."""
    if position <= m:
        return f"x{position}"
    return f"y{position - m}"


def render_mf(masks, m: int) -> list[str]:
    """x/y strings for minimal non-faces of a complex on 2m positions."""
    return ["".join(side_label(v, m) for v in vertices_of(s)) for s in masks]
