"""Balanced multiplicative colorings of homogeneous arithmetic progressions.

Colorings are passed either by name ("liouville", "bcc", "alternating") or as a
PrimeAssignment. Signs come back as Python ints +1/-1.
"""

from ._core import (
    PrimeAssignment,
    __version__,
    bounded_sum_search,
    check_f_bound,
    check_mccurley,
    cli,
    construct_balanced,
    count_f,
    count_ones_base3,
    eval,
    flip_experiment,
    gk_adjacent,
    graham_witness,
    hap_sum,
    is_prime,
    liouville_disagreements,
    min_h,
    polya_scan,
    primes_upto,
    r_sequence,
    run_rejmer,
    scan_max_discrepancy,
    search_rainbow,
    signs,
    theta_3_1,
    verify_rainbow,
    verify_theorem1,
)

__all__ = [
    "PrimeAssignment",
    "__version__",
    "bounded_sum_search",
    "check_f_bound",
    "check_mccurley",
    "cli",
    "construct_balanced",
    "count_f",
    "count_ones_base3",
    "eval",
    "flip_experiment",
    "gk_adjacent",
    "graham_witness",
    "hap_sum",
    "is_prime",
    "liouville_disagreements",
    "min_h",
    "polya_scan",
    "primes_upto",
    "r_sequence",
    "run_rejmer",
    "scan_max_discrepancy",
    "search_rainbow",
    "signs",
    "theta_3_1",
    "verify_rainbow",
    "verify_theorem1",
]
