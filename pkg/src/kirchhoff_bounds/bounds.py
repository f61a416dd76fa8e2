"""
Lower bounds on the Kirchhoff index of a perturbed graph.

Four bounds are evaluated from statistics of the unperturbed graph ``G``:

``wang_add``
    ``K(G+e) >= K(G) / (1 + n * diam(G) / 2)`` for one added link.
``wang_remove``
    ``K(G-e) >= n (n-1)^2 / (2 (m-1))`` for one removed link.
``majorization_add``
    after adding ``h`` links,
    ``K >= n (1/(d1+1) + 1/d2 + (n-3)^2 / (2m+2h-1-d1-d2))``.
``majorization_remove``
    after removing ``h`` links (``h < d2/2``),
    ``K >= n (1/(d1+1-2h) + 1/(d2-2h) + (n-3)^2 / (2m+2h-1-d1-d2))``.

The two majorization bounds are computed twice: once by the closed form
and once by building the minimal element of the eigenvalue constraint set
and evaluating ``n * sum(1/x)`` on it.  The two must agree.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    AlreadyComplete,
    DegenerateOrder,
    DegenerateSize,
    Disconnected,
    HalfDegreeViolated,
    HTooLarge,
    KirchhoffError,
)
from .graph import Graph, degree_sequence, diameter, is_complete, is_connected
from .majorization import ConstrainedSet, minimal_element, schur_eval
from .spectral import kirchhoff_index

log = logging.getLogger(__name__)

WANG_ADD = "wang_add"
WANG_REMOVE = "wang_remove"
MAJORIZATION_ADD = "majorization_add"
MAJORIZATION_REMOVE = "majorization_remove"
BOUND_IDS = (WANG_ADD, WANG_REMOVE, MAJORIZATION_ADD, MAJORIZATION_REMOVE)

AGREEMENT_RTOL = 1e-10


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    value: float | None
    applicable: bool
    reason: str = ""
    inputs: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.applicable != (self.value is not None):
            raise ValueError("value must be present exactly when the bound applies")


def _inapplicable(bound_id: str, reason: str, **inputs) -> BoundReport:
    return BoundReport(bound_id, None, False, reason, dict(inputs))


def _top_degrees(g: Graph) -> tuple[int, int]:
    d = degree_sequence(g)
    return d[0], d[1]


def _check_majorization_preconditions(g: Graph) -> None:
    if g.n < 4:
        raise DegenerateOrder(f"majorization bounds need n >= 4, got n={g.n}")
    if not is_connected(g):
        raise Disconnected("majorization bounds need a connected base graph")


def _constructive(n: int, a: int, floor1: int, floor2: int) -> float:
    # n-1 non-zero Laplacian eigenvalues summing to a, two of them floored
    lower = [float(floor1), float(floor2)] + [0.0] * (n - 3)
    x = minimal_element(ConstrainedSet(a, lower))
    return schur_eval(x.point, n)


def closed_form_addition(n: int, m: int, h: int, d1: int, d2: int) -> float:
    return n * (1.0 / (d1 + 1) + 1.0 / d2 + (n - 3) ** 2 / (2 * m + 2 * h - 1 - d1 - d2))


def closed_form_removal(n: int, m: int, h: int, d1: int, d2: int) -> float:
    return n * (1.0 / (d1 + 1 - 2 * h) + 1.0 / (d2 - 2 * h)
                + (n - 3) ** 2 / (2 * m + 2 * h - 1 - d1 - d2))


def _agree(closed: float, built: float, what: str) -> None:
    if not math.isclose(closed, built, rel_tol=AGREEMENT_RTOL, abs_tol=0.0):
        raise ArithmeticError(f"{what}: closed form {closed!r} != constructive {built!r}")


def majorization_addition_bound(g: Graph, h: int) -> BoundReport:
    """Lower bound on ``K(G')`` for any ``G'`` obtained by adding ``h`` links.

    Applies when ``2m + 2h <= 1 + d1 + (n-2) d2``; otherwise an
    inapplicable report is returned.
    """
    _check_majorization_preconditions(g)
    n, m = g.n, g.m
    room = n * (n - 1) // 2 - m
    if not 1 <= h <= room:
        raise HTooLarge(f"h={h} outside [1, {room}] (links missing from G)")
    d1, d2 = _top_degrees(g)
    inputs = dict(n=n, m=m, h=h, d1=d1, d2=d2)
    a = 2 * m + 2 * h
    limit = 1 + d1 + (n - 2) * d2
    if a > limit:
        return _inapplicable(MAJORIZATION_ADD,
                             f"requires 2m+2h <= 1+d1+(n-2)d2, got {a} > {limit}", **inputs)
    closed = closed_form_addition(n, m, h, d1, d2)
    built = _constructive(n, a, 1 + d1, d2)
    _agree(closed, built, "addition bound")
    return BoundReport(MAJORIZATION_ADD, closed, True, "", inputs)


def majorization_removal_bound(g: Graph, h: int) -> BoundReport:
    """Lower bound on ``K(G'')`` for any connected ``G''`` obtained by
    removing ``h`` links, valid for ``h < d2 / 2``.

    The removable range is ``1 <= h <= m - (n - 1)``.  The flat block of the
    constructed eigenvalue vector must not exceed ``d2 - 2h``; if it does,
    the report is inapplicable (the raw formula value is logged only).
    """
    _check_majorization_preconditions(g)
    n, m = g.n, g.m
    d1, d2 = _top_degrees(g)
    if h < 1:
        raise HTooLarge(f"h must be positive, got {h}")
    if not 2 * h < d2:
        raise HalfDegreeViolated(f"requires h < d2/2, got h={h}, d2={d2}")
    spare = m - (n - 1)
    if h > spare:
        raise HTooLarge(f"h={h} exceeds m-(n-1)={spare}; G'' could not be connected")
    inputs = dict(n=n, m=m, h=h, d1=d1, d2=d2, h_range=(1, spare))
    rest = 2 * m + 2 * h - 1 - d1 - d2
    if rest > (n - 3) * (d2 - 2 * h):
        raw = closed_form_removal(n, m, h, d1, d2)
        log.info("removal bound ordering fails (%d/%d > %d); raw formula %.10g",
                 rest, n - 3, d2 - 2 * h, raw)
        return _inapplicable(MAJORIZATION_REMOVE,
                             f"requires (2m+2h-1-d1-d2)/(n-3) <= d2-2h, got {rest}/{n - 3} > {d2 - 2 * h}",
                             **inputs)
    closed = closed_form_removal(n, m, h, d1, d2)
    built = _constructive(n, 2 * m - 2 * h, 1 + d1 - 2 * h, d2 - 2 * h)
    _agree(closed, built, "removal bound")
    return BoundReport(MAJORIZATION_REMOVE, closed, True, "", inputs)


def wang_addition_bound(g: Graph, k_g: float | None = None) -> BoundReport:
    """``K(G) / (1 + n diam / 2)``; ``k_g`` may be passed to skip recomputing
    the Kirchhoff index of ``G``."""
    if not is_connected(g):
        raise Disconnected("Wang addition bound needs a connected graph")
    if g.n < 2:
        raise DegenerateOrder("Wang addition bound needs n >= 2")
    if is_complete(g):
        raise AlreadyComplete("no link can be added to a complete graph")
    rho = diameter(g)
    if k_g is None:
        k_g = kirchhoff_index(g)
    value = k_g / (1 + g.n * rho / 2)
    return BoundReport(WANG_ADD, value, True, "", dict(n=g.n, m=g.m, h=1, diameter=rho, K_G=k_g))


def wang_removal_bound(g: Graph) -> BoundReport:
    n, m = g.n, g.m
    if n < 2:
        raise DegenerateOrder("Wang removal bound needs n >= 2")
    if m < 2:
        raise DegenerateSize(f"Wang removal bound needs m >= 2, got m={m}")
    value = n * (n - 1) ** 2 / (2 * (m - 1))
    return BoundReport(WANG_REMOVE, value, True, "", dict(n=n, m=m, h=1))


def bound_suite(g: Graph, h: int = 1, k_g: float | None = None) -> list[BoundReport]:
    """Evaluate every bound relevant for ``h``; failures become inapplicable
    reports.  Wang bounds are single-link results and only appear for
    ``h == 1``."""
    calls = []
    if h == 1:
        calls.append((WANG_ADD, lambda: wang_addition_bound(g, k_g)))
        calls.append((WANG_REMOVE, lambda: wang_removal_bound(g)))
    calls.append((MAJORIZATION_ADD, lambda: majorization_addition_bound(g, h)))
    calls.append((MAJORIZATION_REMOVE, lambda: majorization_removal_bound(g, h)))
    reports = []
    for bound_id, fn in calls:
        try:
            reports.append(fn())
        except KirchhoffError as exc:
            reports.append(_inapplicable(bound_id, f"{type(exc).__name__}: {exc}", n=g.n, m=g.m, h=h))
    return reports


def suite_by_id(reports: list[BoundReport]) -> dict[str, BoundReport]:
    return {r.bound_id: r for r in reports}
