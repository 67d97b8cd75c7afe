"""Named-dimension cubical sets, open boxes, and uniform Kan filling.

Everything is finite and explicit: carriers are truncated at a dimension
bound, laws are checked by exhaustive enumeration, and filling operations
are synthesized or refuted by complete search at desk scale.
"""

from .category import (
    CanonicalForm,
    CubeMorphism,
    DimSet,
    EndPoint,
    FaceLabel,
    ONE,
    ZERO,
    augment,
    canonical_dims,
    canonical_form,
    compose,
    enumerate_morphisms,
    extend,
    face,
    face_instance,
    identity,
    inclusion,
    morphism,
    ordered_renaming,
    orthogonal,
    recompose,
    reconcilable,
    reconciliations,
    swap,
)
from .cubical import (
    FiniteCubicalSet,
    GeometricCube,
    action,
    algebraic_of_geometric,
    check_functor_laws,
    check_natural_cube,
    codiscrete_nerve,
    corner_values,
    geometric_of_algebraic,
    minimal_interval,
    one_point,
)
from .boxes import (
    AlgBox,
    BoxShape,
    GeomBox,
    NEGATIVE,
    POSITIVE,
    Polarity,
    afm,
    algebraic_box,
    box_action,
    box_projection,
    canonical_shape,
    canonical_shapes,
    check_adjacency,
    check_geom_box,
    check_naive_coherence,
    enumerate_boxes,
    geom_box_action,
    nerve,
    realize,
    sieve_member,
    sieve_members,
)
from .kan import (
    FillingTable,
    KanVerdict,
    UniformityReport,
    check_geometric_lifting,
    check_section_property,
    check_uniform,
    codiscrete_filler,
    codiscrete_filler_table,
    filling_to_geometric,
    fillers,
    geometric_to_filling,
    is_kan,
    synthesize_uniform,
)
from .fibration import (
    CubicalMap,
    FibAlgBox,
    PointwiseFamily,
    check_fib_section_property,
    check_lying_over,
    check_map_naturality,
    check_section,
    check_uniform_fib,
    codiscrete_relabeling,
    constant_family,
    enumerate_fib_boxes,
    fib_box_action,
    fib_box_projection,
    fib_fillers,
    fibers,
    fibers_family,
    identity_map,
    is_kan_fibration,
    product_with,
    synthesize_uniform_fib,
    terminal_map,
    total_space,
    transport,
)
from .errors import (
    AdjacencyViolation,
    BudgetExhausted,
    DimensionOverflow,
    DomainMismatch,
    FiberMismatch,
    KanlabError,
    NameClash,
    ParseError,
    ShapeMismatch,
    UnknownCube,
    ValidationError,
)
from .report import Report

__version__ = "0.1.0"
