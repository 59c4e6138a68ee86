"""Stanley decompositions of monomial subquotients in localized
polynomial rings: construction, verification, localization, Stanley depth,
fdepth via prime filtrations, and total-absolute-degree Hilbert series."""

from ._intervals import BACKEND as KERNEL_BACKEND
from .errors import (
    BudgetExceededError,
    ContainmentError,
    ContextMismatchError,
    MalformedInputError,
    ParseError,
    StanleyError,
    VerificationError,
    ZeroModuleError,
)
from .filtration import (
    FdepthResult,
    FiltrationStep,
    PrimeFiltration,
    enumerate_prime_filtrations,
    fdepth,
    fdepth_of,
    localize_filtration,
    verify_filtration,
)
from .hilbert import (
    DegreeCount,
    HilbertSeries,
    count_maximal_spaces,
    expand,
    hilbert_count,
    series_of_decomposition,
    series_of_laurent_ring,
    series_of_space,
)
from .ring import (
    MonomialIdeal,
    RingContext,
    colon,
    contains,
    contraction,
    in_quotient,
    normalize_ideal,
    signed_supports,
)
from .solver import (
    CharacteristicPoset,
    IntervalPartition,
    SdepthResult,
    build_characteristic_poset,
    max_interval_partition,
    partition_to_decomposition,
    reduce_to_polynomial,
    sdepth,
)
from .stanley import (
    Region,
    StanleyDecomposition,
    StanleySpace,
    VerificationReport,
    adjoin_variable,
    canonical_sf_decomposition,
    localize_decomposition,
    sdepth_of,
    space_contains,
    space_region,
    verify_decomposition,
)

__version__ = "0.1.0"
