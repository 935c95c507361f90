"""Enumeration, oracles, coherence diagrams and the verification suites."""

from .diagrams import ALL_CONDITIONS, EXTRA_CONDITIONS, PC_CONDITIONS, Condition, by_hom, middle_swap
from .enumerate import (brute_force_count, enumerate_exprs, enumerate_normal_forms, iter_exprs,
                        leaf_exprs, random_expr, strings)
from .mutants import MUTANTS, IdentityDistL, SwappedPairModel
from .oracle import RewriteOracle
from .suites import (Failure, SuiteReport, instance_axiom_suite, iso_ok, left_distributivity_suite,
                     oracle_agrees, pc_axiom_suite, replay, semiring_suite, signature_program,
                     span_suite, strict_law_suite, strictification_suite, transport_suite)


def clear_caches() -> None:
    """Release memo tables and interned nodes (between large runs)."""
    import importlib
    cells, core, normalize, twocell = (importlib.import_module(f"..{m}", __name__)
                                       for m in ("cells", "core", "normalize", "twocell"))
    from .._node import clear_intern_tables
    for fn in (normalize.strict_compose, normalize.strict_sum, normalize.embed, normalize._normalizer,
               normalize._canonical, normalize._merge_sum, normalize._merge_comp,
               normalize._merge_strings, cells.boundary, cells.is_structural, core._endpoints):
        fn.cache_clear()
    normalize._last[:] = [None, None]
    twocell.DEFAULT_SEMANTICS._cache.clear()
    clear_intern_tables()


__all__ = [
    "ALL_CONDITIONS", "EXTRA_CONDITIONS", "PC_CONDITIONS", "Condition", "by_hom", "middle_swap",
    "brute_force_count", "enumerate_exprs", "enumerate_normal_forms", "iter_exprs", "leaf_exprs",
    "random_expr", "strings", "MUTANTS", "IdentityDistL", "SwappedPairModel", "RewriteOracle",
    "Failure", "SuiteReport", "instance_axiom_suite", "iso_ok", "left_distributivity_suite",
    "oracle_agrees", "pc_axiom_suite", "replay", "semiring_suite", "signature_program",
    "span_suite", "strict_law_suite", "strictification_suite", "transport_suite", "clear_caches",
]
