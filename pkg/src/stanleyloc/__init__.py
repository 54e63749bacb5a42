"""Stanley depth of monomial quotients and its behaviour when a variable is sent to 1."""

from .decomposition import (
    StanleyDecomposition,
    StanleySpace,
    Verdict,
    localize_decomposition,
    sdepth_of,
    space_contains,
    verify,
)
from .engine import (
    CharacteristicPoset,
    Interval,
    IntervalPartition,
    Limits,
    build_poset,
    partition_to_decomposition,
    sdepth,
    sdepth_decomposition,
)
from .errors import (
    AmbientMismatch,
    DomainError,
    ExponentOverflow,
    InvalidObject,
    ParseError,
    ResourceLimit,
    StanleyLocError,
    TheoremViolation,
)
from .filtration import (
    FiltrationStep,
    PrimeFiltration,
    fdepth,
    fdepth_of,
    filtration_to_decomposition,
    is_clean,
    is_pretty_clean,
    localize_filtration,
    verify_filtration,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VariableSet,
    as_prime,
    colon,
    contains,
    divides,
    gcd_monomial,
    ideal,
    lcm_monomial,
    localize,
    minimal_primes,
    minimalize,
    parse_ideal,
    parse_monomial,
)
from .simplicial import (
    SimplicialComplex,
    check_link_lemma,
    complex_from_ideal,
    iterated_link,
    link,
    stanley_reisner_ideal,
)

__version__ = "0.1.0"
