"""Exact cellular (co)homology for finite CW complexes."""

from .abgroups import (
    AbHom,
    FgAbGroup,
    GroupSyntaxError,
    NotAnIsomorphism,
    compose_hom,
    direct_sum,
    format_group,
    hom_image,
    hom_kernel,
    hom_subquotient,
    identity_hom,
    invert_iso,
    is_exact_pair,
    parse_group,
    zero_hom,
)
from .chainmaps import (
    ChainMap,
    MappingCone,
    NotASphereModel,
    compose,
    connecting_map,
    degree,
    identity_map,
    inclusion_map,
    induced_map,
    is_pointed,
    mapping_cone,
    require_valid_map,
    shift_iso,
    sphere_self_map,
    susp_map,
    validate_map,
)
from .complexes import (
    CwComplex,
    EdgePresentation,
    InvalidComplex,
    MalformedWord,
    ZOO_NAMES,
    add_disjoint_basepoint,
    euler_characteristic,
    from_presentation,
    quotient_by_skeleton,
    require_valid,
    skeleton,
    suspension,
    validate,
    wedge,
    zoo,
)
from .documents import (
    SchemaError,
    complex_from_doc,
    complex_to_doc,
    dumps,
    loads_complex,
    loads_map,
    map_from_doc,
    map_to_doc,
)
from .homology import all_groups, cells_presentation, chain_group, cohomology, integral_homology
from .intmat import (
    ChainConditionViolation,
    ContainmentViolation,
    IntMatrix,
    NotInLattice,
    kernel_basis,
    snf,
)
from .verify import (
    CheckReport,
    IsoTransportFailure,
    check_dimension,
    check_les_exactness,
    check_skeletal_reformulation,
    check_suspension,
    check_wedge,
    run_battery,
    standard_corpus,
)

__version__ = "0.1.0"
