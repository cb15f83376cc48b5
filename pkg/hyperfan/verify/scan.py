"""Exhaustive spectral scan over triangulations of the n-gon.

Every maximal outerplanar 3-uniform hypergraph on n vertices is, up to
relabeling, the triangle set of a triangulation of the n-gon. The scan solves
each dihedral class once and ranks the triangulations by spectral radius.
Values closer than ``TIE_TOLERANCE`` to the head of their class count as a
numerical tie. Tied rows are ordered by canonical form and then by raw form,
so the ranking is deterministic.
"""

from __future__ import annotations
import logging
import math
from typing import TYPE_CHECKING, Optional

from hyperfan.exceptions import HyperfanError, InvalidParameterError
from hyperfan.models.spectral import PerronResult, SolverConfig
from hyperfan.models.verify import ScanRecord, ScanSummary
from hyperfan.outerplanar import canonical_form, catalan, enumerate_triangulations, fan_triangulation, to_hypergraph
from hyperfan.solver_pool import SolverPool

if TYPE_CHECKING:
    from collections.abc import Sequence

    from hyperfan.caching.base import BaseCache
    from hyperfan.models.outerplanar import Triangulation

logger = logging.getLogger("hyperfan")

TIE_TOLERANCE = 1e-9
TOP_GAP_THRESHOLD = 1e-8
VIOLATION_SLACK = 1e-9
DEFAULT_MAX_N = 12
MIN_SCAN_N = 4


def extremal_scan(
    n: int,
    cfg: Optional[SolverConfig] = None,
    dedupe: bool = False,
    *,
    workers: int = 1,
    use_cache: bool = False,
    cache: Optional[BaseCache] = None,
    max_n: int = DEFAULT_MAX_N,
) -> list[ScanRecord]:
    """Rank every triangulation of the n-gon by the spectral radius of its hypergraph.

    Args:
        n (int): Polygon size, ``4 <= n <= max_n``.
        cfg (Optional[SolverConfig]): Solver settings. Defaults to ``SolverConfig()``.
        dedupe (bool): Scan one representative per symmetry class. Defaults to False.
        workers (int): Solver processes. Defaults to 1.
        use_cache (bool): Whether to use the result cache. Defaults to False.
        cache (Optional[BaseCache]): Cache to use instead of the global one. Defaults to None.
        max_n (int): Largest accepted ``n``. Defaults to 12.

    Returns:
        list[ScanRecord]: Rows sorted by descending lambda. Failed solves come
        last, with NaN values and their error message.

    Raises:
        InvalidParameterError: If ``n`` is outside ``[4, max_n]``.

    """
    if not MIN_SCAN_N <= n <= max_n:
        msg = f"scan needs {MIN_SCAN_N} <= n <= {max_n}, got {n}"
        raise InvalidParameterError(msg, {"n": n, "max_n": max_n})
    cfg = cfg or SolverConfig()

    rows: list[tuple[Triangulation, Triangulation]] = []
    classes: dict[str, Triangulation] = {}
    for triangulation in enumerate_triangulations(n, dedupe=dedupe):
        canonical = triangulation if dedupe else canonical_form(triangulation)
        rows.append((triangulation, canonical))
        classes.setdefault(canonical.to_text(), canonical)
    logger.info(f"Scanning n={n}: {len(rows)} triangulations in {len(classes)} classes")

    keys = list(classes)
    with SolverPool(cfg, workers=workers, cache=cache) as pool:
        solved = pool.solve_many([to_hypergraph(classes[key]) for key in keys], use_cache=use_cache)
    by_class: dict[str, PerronResult | HyperfanError] = dict(zip(keys, solved))

    fan_result = by_class.get(fan_triangulation(n).to_text())
    lambda_fan = fan_result.lambda_ if isinstance(fan_result, PerronResult) else math.nan
    fan_key = fan_triangulation(n).diagonals

    good: list[tuple[float, tuple[object, ...], tuple[object, ...], Triangulation, Triangulation, PerronResult]] = []
    bad: list[tuple[Triangulation, Triangulation, HyperfanError]] = []
    for triangulation, canonical in rows:
        outcome = by_class[canonical.to_text()]
        if isinstance(outcome, PerronResult):
            good.append((outcome.lambda_, canonical.diagonals, triangulation.diagonals, triangulation, canonical, outcome))
        else:
            bad.append((triangulation, canonical, outcome))

    good.sort(key=lambda row: (-row[0], row[1], row[2]))
    # tie classes hang off their first (largest) member
    grouped: list[list[int]] = []
    head = math.inf
    for index, row in enumerate(good):
        if not grouped or head - row[0] >= TIE_TOLERANCE:
            grouped.append([])
            head = row[0]
        grouped[-1].append(index)

    records: list[ScanRecord] = []
    for tie_class, members in enumerate(grouped):
        members.sort(key=lambda index: (good[index][1], good[index][2]))
        for index in members:
            value, _, _, triangulation, canonical, result = good[index]
            records.append(
                ScanRecord(
                    rank=len(records) + 1,
                    triangulation=triangulation.to_text(),
                    canonical=canonical.to_text(),
                    lambda_=value,
                    gap_to_fan=lambda_fan - value,
                    residual=result.residual,
                    iterations=result.iterations,
                    is_fan=canonical.diagonals == fan_key,
                    tie_class=tie_class,
                ),
            )
    for triangulation, canonical, error in sorted(bad, key=lambda row: row[0].diagonals):
        logger.warning(f"Solve failed for {triangulation.to_text()}: {error.message}")
        records.append(
            ScanRecord(
                rank=len(records) + 1,
                triangulation=triangulation.to_text(),
                canonical=canonical.to_text(),
                lambda_=math.nan,
                gap_to_fan=math.nan,
                residual=math.nan,
                is_fan=canonical.diagonals == fan_key,
                tie_class=len(grouped),
                error=error.message,
            ),
        )
    return records


def summarize_scan(n: int, records: Sequence[ScanRecord]) -> ScanSummary:
    """Derive the rank-1, top-gap and violation flags of a finished scan.

    ``raw_count`` is the number of triangulations of the n-gon, Catalan(n - 2),
    whether or not the scan was deduplicated.

    Args:
        n (int): Polygon size of the scan.
        records (Sequence[ScanRecord]): Output of :func:`extremal_scan`.

    Returns:
        ScanSummary: The summary. Violations are reported, not raised.

    """
    solved = [record for record in records if not record.failed]
    fans = [record.lambda_ for record in solved if record.is_fan]
    lambda_fan = fans[0] if fans else math.nan

    top_gap: Optional[float] = None
    if solved:
        head = solved[0]
        runner_up = next((r for r in solved if r.canonical != head.canonical), None)
        if runner_up is not None:
            top_gap = head.lambda_ - runner_up.lambda_

    violations = sorted(
        {
            record.canonical
            for record in solved
            if not record.is_fan and record.lambda_ > lambda_fan + VIOLATION_SLACK
        },
    )
    summary = ScanSummary(
        n=n,
        raw_count=catalan(n - 2),
        canonical_count=len({record.canonical for record in records}),
        lambda_fan=lambda_fan,
        fan_rank_one=bool(solved) and solved[0].is_fan,
        top_gap=top_gap,
        top_gap_exceeds=top_gap is not None and top_gap > TOP_GAP_THRESHOLD,
        violations=tuple(violations),
        failures=len(records) - len(solved),
    )
    if summary.violations:
        logger.info(f"n={n}: {len(summary.violations)} class(es) beat the fan")
    return summary
