"""Desk-scale checks of the fan-extremality claim.

* :mod:`~hyperfan.verify.bounds` compares lambda(F_n) with the witness lower
  bound and tabulates lambda(F_n) / cbrt(4n).
* :mod:`~hyperfan.verify.scan` ranks every triangulation of the n-gon by
  spectral radius.
* :mod:`~hyperfan.verify.transforms` implements the moves that push a
  hypergraph towards the fan.

.. code-block:: python

    from hyperfan.verify import extremal_scan, summarize_scan

    records = extremal_scan(7, dedupe=True)
    summary = summarize_scan(7, records)
    print(summary.fan_rank_one, summary.violations)

"""

from .bounds import (
    DEFAULT_ASYMPTOTIC_NS,
    asymptotic_table,
    check_fan_bound,
    fan_lower_bound,
    fan_witness_vector,
    ratios_non_decreasing,
)
from .scan import extremal_scan, summarize_scan
from .transforms import (
    entry_swap_check,
    find_flips,
    find_leaf_reattachments,
    flip_gain,
    flip_transform,
    leaf_reattach,
)

__all__ = [
    "DEFAULT_ASYMPTOTIC_NS",
    "asymptotic_table",
    "check_fan_bound",
    "entry_swap_check",
    "extremal_scan",
    "fan_lower_bound",
    "fan_witness_vector",
    "find_flips",
    "find_leaf_reattachments",
    "flip_gain",
    "flip_transform",
    "leaf_reattach",
    "ratios_non_decreasing",
    "summarize_scan",
]
