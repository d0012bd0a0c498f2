"""Groebner bases over boolean polynomial rings GF(2)[x]/(x_i^2 + x_i).

The package computes Groebner bases with the signature-based GVW
algorithm and its mutant-promoting variant M-GVW, reducing each degree
batch with a bit-packed GF(2) matrix whose elimination respects the
signature order.  A classic Buchberger implementation is included as an
independent cross-check.
"""

from .buchberger import (
    buchberger,
    field_s_polynomial,
    gb_equal,
    s_polynomial,
    verify_groebner,
)
from .engine import (
    Engine,
    EngineAbort,
    EngineConfig,
    RoundStats,
    RunStats,
    TraceEvent,
    gvw_run,
    mgvw_run,
)
from .gf2matrix import (
    EliminationResult,
    SigMatrix,
    naive_sig_gauss,
    ple_rows,
    sig_ple,
)
from .monomials import (
    MAX_VARS,
    BoolPoly,
    grevlex_cmp,
    grevlex_key,
    mono_deg,
    mono_divides,
    mono_from_indices,
    mono_indices,
    mono_lcm,
    mono_mul,
    mono_poly_mul,
    mono_quot,
    mono_str,
    poly_add,
    reduce_basis,
    rem,
)
from .signatures import (
    JPair,
    LabeledPoly,
    RuleTable,
    Sig,
    SyzygySet,
    field_jpairs,
    is_covered,
    is_mutant,
    make_jpair,
    regular_top_reduce,
    sig_cmp,
    sig_key,
    sig_mul,
    sig_str,
    super_top_reducible,
    syz_reject,
)
from .symbolic import MacaulayBatch, eliminate_batch, symbolic_process
from .systems import (
    RandomSpec,
    SystemFile,
    emit_basis,
    emit_stats,
    gen_random,
    parse_system,
    system_str,
)

__version__ = "0.1.0"
