"""Exact-arithmetic toolkit for maximal-genus curve numerology on rational
normal scrolls, with a brute-force Hilbert-duality oracle.

Everything is re-exported from the compiled extension; see the individual
docstrings for signatures.
"""

from liaison._core import (  # noqa: F401
    Scroll,
    castelnuovo_genus,
    castelnuovo_genus_printed,
    classify_example1,
    closed_form_genus,
    compute_parameters,
    delta_h,
    example2_construction,
    hilbert_function,
    linked_genus,
    linked_genus_scroll,
    max_genus,
    min_admissible_degree,
    residual_h0_bound,
    verify_cone_colon,
    verify_cubic_scroll_split,
    verify_quadric_split,
)

__all__ = [
    "Scroll",
    "castelnuovo_genus",
    "castelnuovo_genus_printed",
    "classify_example1",
    "closed_form_genus",
    "compute_parameters",
    "delta_h",
    "example2_construction",
    "hilbert_function",
    "linked_genus",
    "linked_genus_scroll",
    "max_genus",
    "min_admissible_degree",
    "residual_h0_bound",
    "verify_cone_colon",
    "verify_cubic_scroll_split",
    "verify_quadric_split",
]
