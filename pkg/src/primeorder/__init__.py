"""Find the index-order of a prime with an integral feedback controller.

The package builds a table of the first N primes with a segmented sieve
(compiled core with a pure-Python fallback), exposes it as a static
process y = p(floor(u)), and searches orders by iterating an incremental
integral controller, or the multiplicative proportion variant, against
that process. A binary-search oracle verifies every converged answer.
"""

from .controller import (
    ControllerConfig,
    ControllerState,
    Mode,
    StepRecord,
    Tuning,
    clamp_antiwindup,
    integral_step,
    proportion_step,
    tune_balanced,
    tune_logarithmic,
)
from .process import (
    DEFAULT_AVERAGE_GAIN,
    GainModel,
    LinearProcess,
    PrimeProcess,
    ProcessDomainError,
    StaticProcess,
    actual_gain,
    asymptotic_gain,
    export_static_characteristics,
    mean_actual_gain,
    refined_gain,
)
from .search import (
    DEFAULT_BENCHMARK_SETPOINTS,
    BenchmarkEntry,
    BenchmarkReport,
    SearchRequest,
    SearchResult,
    SearchStatus,
    export_trace_csv,
    format_benchmark_summary,
    resolve_tuning,
    run_benchmark,
    run_proportion_search,
    run_search,
    write_benchmark_csv,
)
from .sieve import BACKEND, available_backends
from .table import (
    ChecksumMismatchError,
    PrimeTable,
    TableError,
    TableFormatError,
    TableHeader,
    TruncatedTableError,
    build_table,
    load_table,
    read_header,
    save_table,
    sieve_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BenchmarkEntry",
    "BenchmarkReport",
    "ChecksumMismatchError",
    "ControllerConfig",
    "ControllerState",
    "DEFAULT_AVERAGE_GAIN",
    "DEFAULT_BENCHMARK_SETPOINTS",
    "GainModel",
    "LinearProcess",
    "Mode",
    "PrimeProcess",
    "PrimeTable",
    "ProcessDomainError",
    "SearchRequest",
    "SearchResult",
    "SearchStatus",
    "StaticProcess",
    "StepRecord",
    "TableError",
    "TableFormatError",
    "TableHeader",
    "TruncatedTableError",
    "Tuning",
    "actual_gain",
    "asymptotic_gain",
    "available_backends",
    "build_table",
    "clamp_antiwindup",
    "export_static_characteristics",
    "export_trace_csv",
    "format_benchmark_summary",
    "integral_step",
    "load_table",
    "mean_actual_gain",
    "proportion_step",
    "read_header",
    "refined_gain",
    "resolve_tuning",
    "run_benchmark",
    "run_proportion_search",
    "run_search",
    "save_table",
    "sieve_bound",
    "tune_balanced",
    "tune_logarithmic",
    "write_benchmark_csv",
]
