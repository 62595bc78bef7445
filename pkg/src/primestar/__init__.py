"""Prime numerals, their Kleene star, and machine-checked non-regularity.

The library is organized bottom-up: exact integer arithmetic and primality
(``numtheory``), positional numerals (``baseb``), the two membership oracles
(``primelang``), compositeness certificates and witness families
(``witness``), and DFA refutation machinery (``refuter``). ``report`` writes
CSV/PNG evidence bundles and ``cli`` exposes everything as subcommands.
"""

from .baseb import (
    CanonicalNumeral,
    from_base,
    parse_digits,
    to_base,
    witness_numeral,
)
from .errors import BudgetExceededError, DfaFormatError, NumeralError
from .numtheory import (
    PrimalityVerdict,
    factorial,
    factorial_mod,
    is_prime,
    mod_pow,
    multiplicative_order,
)
from .primelang import (
    FbResult,
    Language,
    PbVerdict,
    StarDecomposition,
    classify_pb,
    compute_fb,
    in_pb,
    in_pb_star,
    membership_levels,
    nerode_lower_bound,
)
from .refuter import (
    Counterexample,
    DfaSpec,
    PumpingRefutation,
    PumpRow,
    dfa_accepts,
    find_counterexample,
    parse_dfa,
    pumping_refutation,
    render_dfa,
)
from .witness import (
    CertificateCheck,
    CompositenessCertificate,
    FactorialExponent,
    HardExponentResult,
    divisor_certificate,
    lemma_witnesses,
    proposition_N,
    smallest_hard_N,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CanonicalNumeral",
    "CertificateCheck",
    "CompositenessCertificate",
    "Counterexample",
    "DfaFormatError",
    "DfaSpec",
    "FactorialExponent",
    "FbResult",
    "HardExponentResult",
    "Language",
    "NumeralError",
    "PbVerdict",
    "PrimalityVerdict",
    "PumpRow",
    "PumpingRefutation",
    "StarDecomposition",
    "classify_pb",
    "compute_fb",
    "dfa_accepts",
    "divisor_certificate",
    "factorial",
    "factorial_mod",
    "find_counterexample",
    "from_base",
    "in_pb",
    "in_pb_star",
    "is_prime",
    "lemma_witnesses",
    "membership_levels",
    "mod_pow",
    "multiplicative_order",
    "nerode_lower_bound",
    "parse_digits",
    "parse_dfa",
    "proposition_N",
    "pumping_refutation",
    "render_dfa",
    "smallest_hard_N",
    "to_base",
    "verify_certificate",
    "witness_numeral",
    "__version__",
]
