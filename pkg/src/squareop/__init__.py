"""Squares of opposition and Aristotelian diagrams, crisp and fuzzy.

The crisp half builds finite powerset Boolean algebras, classifies the seven
logical relations between fragment elements, and checks Aristotelian
isomorphisms and informativity-preserving maps.  The fuzzy half works with
intuitionistic fuzzy relations (membership/nonmembership matrices), certifies
them as partial orders, lattices and Boolean algebras, and hosts fuzzy
diagrams with tolerance-based bi-implication.
"""

from .algebra import (
    AlgebraMismatchError,
    AxiomReport,
    BooleanAlgebra,
    Element,
    LawCheck,
    element_label,
    verify_axioms,
)
from .degrees import (
    ContradictionDegrees,
    Degree,
    DomainMismatchError,
    FuzzySet,
    IFPair,
    OperatorChoice,
    contradiction_degree,
    degree,
    format_degree,
    if_complement,
    implies,
    negate,
    parse_degree,
    register_implication,
    register_negation,
    self_contradiction_degree,
)
from .diagram import (
    INFORMATIVITY_COVERS,
    Diagram,
    DiagramMap,
    RelationKind,
    canonical_square,
    check_infomorphism,
    check_iso,
    classify,
    compose_maps,
    find_isos,
    informativity_leq,
    informativity_order,
    relation_table,
)
from .fuzzydiagram import (
    AnnotatedSquare,
    CategoryLawReport,
    FuzzyAristotelianDiagram,
    FuzzyClassification,
    FuzzyDiagramMap,
    annotate_square,
    check_fuzzy_infomorphism,
    check_if_homomorphism,
    classify_fuzzy,
    compose_fuzzy_maps,
    embed_diagram,
    fuzzy_bi_implication,
    fuzzy_relation_table,
    verify_category_laws,
)
from .ifrel import (
    IFRelation,
    compose,
    identity_relation,
    is_partial_order,
    is_perfectly_antisymmetric,
    is_reflexive,
    is_transitive,
    transitive_closure,
)
from .iflattice import (
    IFLattice,
    LatticeCertification,
    LawViolationError,
    PreconditionError,
    certify,
    powerset_lattice,
    underlying_order,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraMismatchError",
    "AnnotatedSquare",
    "AxiomReport",
    "BooleanAlgebra",
    "CategoryLawReport",
    "ContradictionDegrees",
    "Degree",
    "Diagram",
    "DiagramMap",
    "DomainMismatchError",
    "Element",
    "FuzzyAristotelianDiagram",
    "FuzzyClassification",
    "FuzzyDiagramMap",
    "FuzzySet",
    "IFLattice",
    "IFPair",
    "IFRelation",
    "INFORMATIVITY_COVERS",
    "LatticeCertification",
    "LawCheck",
    "LawViolationError",
    "OperatorChoice",
    "PreconditionError",
    "RelationKind",
    "annotate_square",
    "canonical_square",
    "certify",
    "check_fuzzy_infomorphism",
    "check_if_homomorphism",
    "check_infomorphism",
    "check_iso",
    "classify",
    "classify_fuzzy",
    "compose",
    "compose_fuzzy_maps",
    "compose_maps",
    "contradiction_degree",
    "degree",
    "element_label",
    "embed_diagram",
    "find_isos",
    "format_degree",
    "fuzzy_bi_implication",
    "fuzzy_relation_table",
    "identity_relation",
    "if_complement",
    "implies",
    "informativity_leq",
    "informativity_order",
    "is_partial_order",
    "is_perfectly_antisymmetric",
    "is_reflexive",
    "is_transitive",
    "negate",
    "parse_degree",
    "powerset_lattice",
    "register_implication",
    "register_negation",
    "relation_table",
    "self_contradiction_degree",
    "transitive_closure",
    "underlying_order",
    "verify_axioms",
    "verify_category_laws",
]
