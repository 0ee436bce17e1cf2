"""Primitive ideals and coherent local systems for highest weight sl(infinity)-modules."""

from .cls import (
    EINF,
    IDENTITY,
    BoundData,
    ClsCanonical,
    ClsProfile,
    E,
    L,
    Linf,
    R,
    Rinf,
    attach_infinite,
    bound_cls,
    bound_data,
    cls_is_finite_type,
    cls_mul,
    cls_of_dominant,
    cls_product,
    duflo_function,
    parse_cls,
    profile_of,
)
from .errors import ParseError, SlinfError
from .levels import (
    CoherenceReport,
    DominantWeight,
    WeightSet,
    cls_level,
    coherence_check,
    highest_weight_level,
    set_mul,
)
from .orders import (
    BorelOrder,
    FunctionSpec,
    annihilator_nonzero,
    coarsest_constant_partition,
    integrality_defect,
    is_almost_integral,
    is_dominant,
    is_integral,
    is_locally_constant,
    parse_function,
    parse_order,
)
from .scalars import ScalarValue, int_congruent
from .tableaux import Partition, corank, lds_oracle, modified_rs, rank

__version__ = "0.1.0"
