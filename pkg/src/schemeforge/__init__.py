"""schemeforge: exact computation with finite association schemes, finite
hypergroups, hyperring quotients, and the geometries and valuations that
connect them.  All objects are verified exhaustively at construction time and
every operation is a pure function of immutable values.
"""

from .errors import (
    CongruenceError,
    GeometryError,
    SchemeForgeError,
    SizeGuardError,
    TriangleConditionError,
    Violation,
)
from .scheme import (
    AssociationScheme,
    SchemeReport,
    build_scheme,
    closed_subsets,
    complex_mult,
    double_cosets,
    is_closed,
    is_commutative,
    is_normal_closed,
    is_primitive,
    product_scheme,
    quotient_blocks,
    quotient_scheme,
    restrict_scheme,
    scheme_isomorphic,
)
from .hypergroup import (
    CongruenceRelation,
    Hypergroup,
    HypergroupReport,
    build_hypergroup,
    congruence_quotient,
    congruence_violations,
    group_as_hypergroup,
    hypergroup_isomorphic,
    is_normal_sub,
    is_sub_hypergroup,
    product_hypergroup,
    quotient_hypergroup,
    sub_hypergroups,
)
from .realize import (
    InducedHom,
    MorphismReport,
    SchemeMorphism,
    check_morphism,
    compose_morphisms,
    identity_morphism,
    induced_hom,
    product_projection,
    quotient_projection,
    search_realization,
    to_hypergroup,
)
from .constructions import (
    AutSubgroup,
    FiniteGroup,
    FiniteRing,
    IncidenceGeometry,
    QuotientHyperring,
    TriangleReport,
    ValuedRing,
    additive_group,
    alternating_group,
    aut_subgroup,
    build_group,
    build_ring,
    check_geometry,
    check_triangle_condition,
    cyclic_group,
    fano_flag_scheme,
    fano_plane,
    geometry_from_hypergroup,
    gf_ring,
    group_hypergroup,
    group_scheme,
    hamming_scheme,
    inner_automorphisms,
    is_k_vector_space,
    krasner_hypergroup,
    linear_hypergroup,
    orbits,
    padic_valued_ring,
    partition_hypergroup,
    partition_scheme,
    product_group,
    quotient_hyperring,
    ring_units,
    scaling_automorphisms,
    sign_hypergroup,
    symmetric_group,
    trivial_automorphisms,
    trivial_valued_ring,
    unit_subgroup,
    units_of_order_dividing,
    valuation_relation,
    valuation_scheme,
    valued_ring,
    zmod_ring,
)

__version__ = "0.1.0"
