"""Bier spheres: construction, classification, polytopes and toric invariants."""

from .bier import (
    BierSphere,
    FullSimplexError,
    alexander_dual,
    bier_mf_formula,
    bier_sphere,
    deleted_join,
    render_mf,
)
from .building import (
    BuildingSet,
    BuildingSetError,
    NerveComplex,
    NestohedronRealization,
    delzant_check,
    nerve_by_truncation,
    nerve_of_realization,
    realize_nestohedron,
    realize_p6,
    validate_building_set,
    write_off,
)
from .classify import (
    CanonicalForm,
    ClassificationReport,
    canonical_form,
    classify_bier,
    enumerate_complexes,
    isomorphic,
)
from .complexes import DegenerateComplexError, SimplicialComplex
from .toric import (
    BuchstaberCertificate,
    CharMatrix,
    bier_charmap,
    buchstaber_certificate,
    cohomology_presentation,
    fenn_charmap,
    small_cover_orientable,
    validate_charmap,
)
from .verify import PaperVerificationSummary, verify_paper

__all__ = [
    "BierSphere",
    "BuchstaberCertificate",
    "BuildingSet",
    "BuildingSetError",
    "CanonicalForm",
    "CharMatrix",
    "ClassificationReport",
    "DegenerateComplexError",
    "FullSimplexError",
    "NerveComplex",
    "NestohedronRealization",
    "PaperVerificationSummary",
    "SimplicialComplex",
    "alexander_dual",
    "bier_charmap",
    "bier_mf_formula",
    "bier_sphere",
    "buchstaber_certificate",
    "canonical_form",
    "classify_bier",
    "cohomology_presentation",
    "deleted_join",
    "delzant_check",
    "enumerate_complexes",
    "fenn_charmap",
    "isomorphic",
    "nerve_by_truncation",
    "nerve_of_realization",
    "realize_nestohedron",
    "realize_p6",
    "render_mf",
    "small_cover_orientable",
    "validate_building_set",
    "validate_charmap",
    "verify_paper",
    "write_off",
]
