"""Dividing-set combinatorics for b-contact structures on (S3, S2) and (S3, T2).

The pipeline: region graphs encode isotopy classes of cooriented
separating curves on the critical surface; the enumerator lists all
admissible classes up to isomorphism; exact arithmetic turns each class
into the classification of b-contact structures inducing it, including
the tight count on the solid torus via negative continued fractions.
"""

from .admissibility import Verdict, euler_pairing, is_admissible, is_tight_candidate
from .classify import (
    ClassificationRecord,
    InadmissibleError,
    LeafCensus,
    RegimeDescriptor,
    classification_table,
    classify,
    leaf_census,
)
from .counting import (
    ContinuedFractionExpansion,
    TightCountResult,
    catalan,
    expansion_products,
    negative_continued_fraction,
    tight_count_solid_torus,
)
from .enumeration import (
    ResourceLimitError,
    enum_equicolored_trees,
    enum_torus_classes,
)
from .formats import (
    ParseError,
    export_dot,
    parse_dividing_set,
    parse_region_graph,
    serialize_class_text,
)
from .oracle import brute_force_isomorphic, oracle_count_trees
from .region_graph import (
    InvalidRegionGraphError,
    RegionGraph,
    RegionVertex,
    Violation,
    are_isomorphic,
    canonical_code,
    validate,
)
from .surfaces import (
    S3_S2,
    S3_T2,
    DividingSetClass,
    ManifoldSpec,
    Surface,
    check_embeddable,
    region_euler,
    total_euler,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationRecord",
    "ContinuedFractionExpansion",
    "DividingSetClass",
    "InadmissibleError",
    "InvalidRegionGraphError",
    "LeafCensus",
    "ManifoldSpec",
    "ParseError",
    "RegimeDescriptor",
    "RegionGraph",
    "RegionVertex",
    "ResourceLimitError",
    "S3_S2",
    "S3_T2",
    "Surface",
    "TightCountResult",
    "Verdict",
    "Violation",
    "are_isomorphic",
    "brute_force_isomorphic",
    "canonical_code",
    "catalan",
    "check_embeddable",
    "classification_table",
    "classify",
    "enum_equicolored_trees",
    "enum_torus_classes",
    "euler_pairing",
    "expansion_products",
    "export_dot",
    "is_admissible",
    "is_tight_candidate",
    "leaf_census",
    "negative_continued_fraction",
    "oracle_count_trees",
    "parse_dividing_set",
    "parse_region_graph",
    "region_euler",
    "serialize_class_text",
    "tight_count_solid_torus",
    "total_euler",
    "validate",
    "__version__",
]
