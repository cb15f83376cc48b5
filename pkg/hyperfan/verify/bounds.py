from __future__ import annotations
import logging
from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np

from hyperfan.exceptions import InvalidParameterError
from hyperfan.models.spectral import SolverConfig
from hyperfan.models.verify import BoundReport
from hyperfan.outerplanar import fan
from hyperfan.spectral import spectral_radius

logger = logging.getLogger("hyperfan")

BOUND_SLACK = 1e-9
DEFAULT_ASYMPTOTIC_NS = (10, 100, 1000, 10000)


def fan_lower_bound(n: int) -> float:
    """Witness lower bound on the fan: cbrt(4(n-1)) * (1 - 1/(n-1)).

    Raises:
        InvalidParameterError: If ``n < 3``.

    """
    if n < 3:  # noqa: PLR2004
        msg = f"bound needs n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    return float(np.cbrt(4.0 * (n - 1)) * (1.0 - 1.0 / (n - 1)))


def fan_witness_vector(n: int) -> list[float]:
    """Unit 3-norm vector attaining :func:`fan_lower_bound` on F_n.

    The hub gets 3^(-1/3) and every other vertex (2 / (3(n-1)))^(1/3).
    """
    if n < 3:  # noqa: PLR2004
        msg = f"bound needs n >= 3, got {n}"
        raise InvalidParameterError(msg, {"n": n})
    hub = float(np.cbrt(1.0 / 3.0))
    rim = float(np.cbrt(2.0 / (3.0 * (n - 1))))
    return [hub] + [rim] * (n - 1)


def check_fan_bound(n: int, cfg: Optional[SolverConfig] = None) -> BoundReport:
    """Solve F_n and compare it with the witness bound.

    Args:
        n (int): Vertex count, at least 3.
        cfg (Optional[SolverConfig]): Solver settings. Defaults to ``SolverConfig()``.

    Returns:
        BoundReport: lambda(F_n), the bound, lambda(F_n) / cbrt(4n) and the verdict.

    """
    bound = fan_lower_bound(n)
    lambda_fan = spectral_radius(fan(n), cfg).lambda_
    ok = lambda_fan >= bound - BOUND_SLACK
    if not ok:
        logger.error(f"Fan bound violated at n={n}: lambda={lambda_fan!r} < bound={bound!r}")
    report = BoundReport(
        n=n,
        lambda_fan=lambda_fan,
        bound=bound,
        ratio_to_cbrt4n=lambda_fan / float(np.cbrt(4.0 * n)),
        ok=ok,
    )
    logger.info(f"n={n}: lambda(F_n)={lambda_fan:.12g}, ratio {report.ratio_to_cbrt4n:.6f}")
    return report


def asymptotic_table(
    ns: Iterable[int] = DEFAULT_ASYMPTOTIC_NS,
    cfg: Optional[SolverConfig] = None,
) -> list[BoundReport]:
    """One :class:`BoundReport` per ``n``, in the given order."""
    return [check_fan_bound(n, cfg) for n in ns]


def ratios_non_decreasing(reports: Sequence[BoundReport], noise: float = 1e-3) -> bool:
    """Whether ``ratio_to_cbrt4n`` never drops by more than ``noise`` along ``reports``."""
    return all(
        later.ratio_to_cbrt4n >= earlier.ratio_to_cbrt4n - noise
        for earlier, later in zip(reports, reports[1:])
    )
