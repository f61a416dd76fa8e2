"""
Majorization order and minimal elements of box-constrained sum sets.

A :class:`ConstrainedSet` collects the non-increasing vectors ``x`` of a
fixed length with ``sum(x) == a`` and ``lower[i] <= x[i] <= upper[i]``.
Its minimal element with respect to majorization minimizes every
Schur-convex function over the set, which is how the Kirchhoff-index lower
bounds are assembled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    FloorTooLarge,
    Infeasible,
    LengthMismatch,
    NonPositiveEntry,
    NotNested,
    NotSorted,
)
from .spectral import Verdict

REL_TOL = 1e-12


def _tol(scale: float) -> float:
    return REL_TOL * max(1.0, abs(scale))


def _is_nonincreasing(x: Sequence[float], tol: float) -> bool:
    return all(x[i] >= x[i + 1] - tol for i in range(len(x) - 1))


@dataclass(frozen=True)
class ConstrainedSet:
    """``{x non-increasing : sum(x) = a, lower <= x <= upper}``.

    Missing upper bounds default to ``a`` (no coordinate of a non-negative
    vector summing to ``a`` can exceed it).
    """

    a: float
    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __init__(self, a: float, lower: Sequence[float], upper: Sequence[float] | None = None):
        lower = tuple(float(x) for x in lower)
        upper = tuple(float(a) for _ in lower) if upper is None else tuple(float(x) for x in upper)
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        self._validate()

    @classmethod
    def free(cls, a: float, length: int) -> "ConstrainedSet":
        return cls(a, [0.0] * length)

    @property
    def length(self) -> int:
        return len(self.lower)

    def _validate(self) -> None:
        if self.a <= 0:
            raise Infeasible(f"prescribed sum must be positive, got {self.a}")
        if len(self.lower) != len(self.upper):
            raise LengthMismatch("lower and upper bounds differ in length")
        if not self.lower:
            raise Infeasible("a constrained set needs at least one coordinate")
        tol = _tol(self.a)
        if not (_is_nonincreasing(self.lower, 0.0) and _is_nonincreasing(self.upper, 0.0)):
            raise NotSorted("bounds must be non-increasing")
        if self.lower[-1] < 0:
            raise Infeasible("lower bounds must be non-negative")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise Infeasible("some lower bound exceeds its upper bound")
        if not (sum(self.lower) - tol <= self.a <= sum(self.upper) + tol):
            raise Infeasible("prescribed sum outside [sum(lower), sum(upper)]")

    def contains(self, x: Sequence[float]) -> bool:
        tol = _tol(self.a)
        if len(x) != self.length:
            return False
        return (
            abs(float(np.sum(x)) - self.a) <= tol * len(x)
            and _is_nonincreasing(x, tol)
            and all(lo - tol <= xi <= hi + tol for xi, lo, hi in zip(x, self.lower, self.upper))
        )

    def contains_set(self, other: "ConstrainedSet") -> bool:
        """True when ``other`` is a subset obtained by tightening bounds."""
        return (
            other.length == self.length
            and abs(other.a - self.a) <= _tol(self.a)
            and all(i >= o for i, o in zip(other.lower, self.lower))
            and all(i <= o for i, o in zip(other.upper, self.upper))
        )


@dataclass(frozen=True)
class MinimalElement:
    point: tuple[float, ...]
    k: int
    d: int
    rho_flat: float

    def as_array(self) -> np.ndarray:
        return np.asarray(self.point)


def majorizes(y: Sequence[float], z: Sequence[float]) -> bool:
    """True when ``y`` is majorized by ``z``.

    Both vectors must be sorted non-increasingly; every top-``k`` partial sum
    of ``y`` is at most that of ``z`` and the totals agree.

    >>> majorizes([2, 2, 2], [3, 2, 1])
    True
    """
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    if y.shape != z.shape or y.ndim != 1:
        raise LengthMismatch(f"shapes {y.shape} and {z.shape} differ")
    scale = max(float(np.abs(y).sum()), float(np.abs(z).sum()), 1.0)
    tol = REL_TOL * scale
    if not (_is_nonincreasing(y, tol) and _is_nonincreasing(z, tol)):
        raise NotSorted("majorization compares non-increasing vectors")
    cy, cz = np.cumsum(y), np.cumsum(z)
    if abs(cy[-1] - cz[-1]) > tol:
        return False
    return bool(np.all(cy[:-1] <= cz[:-1] + tol))


def schur_eval(x: Sequence[float], scale: float) -> float:
    """``scale * sum(1 / x_i)``, the Schur-convex Kirchhoff objective."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise NonPositiveEntry("reciprocal sum needs strictly positive entries")
    return float(scale * np.sum(1.0 / x))


def _search_order(length: int):
    # increasing k + d, ties broken by increasing k
    for total in range(length):
        for k in range(total + 1):
            yield k, total - k


def minimal_element(s: ConstrainedSet) -> MinimalElement:
    """Majorization-minimal point of ``s``.

    The first ``k`` coordinates sit on their lower bounds, the last ``d`` on
    their upper bounds, and the middle block is flat at
    ``rho = (a - sum(lower[:k]) - sum(upper[n-d:])) / (n - k - d)``.  Pairs
    ``(k, d)`` are tried by increasing ``k + d`` and then ``k``; the first
    pair with ``lower[k] <= rho <= upper[n-d-1]`` whose point lies in ``s``
    wins.
    """
    n, a = s.length, s.a
    lo, hi = s.lower, s.upper
    tol = _tol(a)
    for k, d in _search_order(n):
        rho = (a - math.fsum(lo[:k]) - math.fsum(hi[n - d:])) / (n - k - d)
        if not (lo[k] - tol <= rho <= hi[n - d - 1] + tol):
            continue
        point = tuple(lo[:k]) + (float(rho),) * (n - k - d) + tuple(hi[n - d:])
        if s.contains(point):
            return MinimalElement(point=point, k=k, d=d, rho_flat=float(rho))
    raise Infeasible("no (k, d) split yields a point of the set")


def minimal_element_uniform_floor(a: float, length: int, h: int, alpha: float) -> MinimalElement:
    """Minimal element of ``{sum x = a, x_1..x_h >= alpha}``.

    Flat at ``a / length`` when ``alpha <= a / length``; otherwise ``alpha``
    on the first ``h`` coordinates and ``(a - alpha h) / (length - h)`` on
    the rest.
    """
    if not 1 <= h <= length:
        raise FloorTooLarge(f"need 1 <= h <= length, got h={h}, length={length}")
    if alpha <= 0:
        raise NonPositiveEntry("alpha must be positive")
    if alpha > a / h:
        raise FloorTooLarge(f"alpha={alpha} exceeds a/h={a / h}")
    flat = a / length
    # same slack as minimal_element so both routes pick the same branch
    if alpha <= flat + _tol(a):
        return MinimalElement(point=(flat,) * length, k=0, d=0, rho_flat=flat)
    rho = (a - alpha * h) / (length - h)
    return MinimalElement(point=(float(alpha),) * h + (rho,) * (length - h), k=h, d=0, rho_flat=rho)


def nested_set_check(s_outer: ConstrainedSet, s_inner: ConstrainedSet, scale: float) -> Verdict:
    """Minimal elements respect inclusion: ``x*(outer)`` is majorized by
    ``x*(inner)`` and the Schur-convex objective is ordered the same way."""
    if not s_outer.contains_set(s_inner):
        raise NotNested("inner set is not contained in outer set")
    x_out = minimal_element(s_outer).point
    x_in = minimal_element(s_inner).point
    v = Verdict()
    v.record("outer minimal majorized by inner minimal", majorizes(x_out, x_in))
    if min(x_out) > 0 and min(x_in) > 0:
        f_out, f_in = schur_eval(x_out, scale), schur_eval(x_in, scale)
        v.record("schur-convex ordering", f_in >= f_out - REL_TOL * scale, f"{f_in!r} >= {f_out!r}")
        # Schur-concave dual: -phi reverses the inequality
        v.record("schur-concave dual", -f_in <= -f_out + REL_TOL * scale)
    return v


def sample_feasible_point(s: ConstrainedSet, rng: np.random.Generator,
                          max_rounds: int = 100) -> np.ndarray | None:
    """Random point of ``s``, or ``None`` when clipping does not settle.

    Draws a point of the scaled simplex from normalized exponential
    spacings, alternately clips it into the box and redistributes the
    surplus over coordinates with slack, then sorts.
    """
    lo, hi = np.asarray(s.lower), np.asarray(s.upper)
    tol = _tol(s.a)
    x = rng.exponential(size=s.length)
    x = s.a * x / x.sum()
    for _ in range(max_rounds):
        x = np.clip(x, lo, hi)
        gap = s.a - x.sum()
        if abs(gap) <= tol:
            break
        room = (hi - x) if gap > 0 else (x - lo)
        total = room.sum()
        if total <= 0:
            return None
        w = rng.exponential(size=s.length) * room
        if w.sum() <= 0:
            w = room
        x = x + np.sign(gap) * np.minimum(abs(gap) * w / w.sum(), room)
    else:
        return None
    x = np.sort(x)[::-1]
    return x if s.contains(x) else None
