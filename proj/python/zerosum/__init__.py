"""Zero-sum sequences over [-k, k]."""

from ._core import (
    ParseError,
    ResourceLimitError,
    Sequence,
    bounds,
    complete_block,
    constant,
    davenport,
    divides,
    extremal,
    family,
    find_zero_sum,
    frobenius,
    is_t_avoiding,
    lcm_growth,
    lcm_range,
    frequency_margins,
    greedy_counterexamples,
    longest_avoiding,
    max_minimal_length,
    reduce,
    spectrum,
    strip,
)

__all__ = [name for name in dir() if not name.startswith("_")]
