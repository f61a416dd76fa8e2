"""
Laplacian spectra, the Kirchhoff index and effective resistances.

Two independent routes to the Kirchhoff index are provided:

* :func:`kirchhoff_index` sums reciprocal non-zero Laplacian eigenvalues,
  ``K = n * sum_{i<n} 1/mu_i``;
* :func:`kirchhoff_via_resistance` sums pairwise effective resistances
  obtained from the inverse of the grounded (vertex-0-deleted) Laplacian,
  without touching the eigendecomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceFailure, DegenerateOrder, Disconnected, NotSingleAddition
from .graph import Graph, degree_sequence, is_connected, laplacian

RESIDUAL_SCALE = 1e-9


def default_residual_tol(m: int) -> float:
    return RESIDUAL_SCALE * max(1, 2 * m)


@dataclass(frozen=True)
class Spectrum:
    """Laplacian eigenvalues sorted non-increasingly.

    ``residual_tol`` is the certified bound on ``max ||L v - mu v||`` and
    ``max_residual`` the value actually observed.
    """

    values: np.ndarray
    residual_tol: float
    max_residual: float = 0.0
    vectors: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def laplacian_spectrum(g: Graph, residual_tol: float | None = None,
                       keep_vectors: bool = False) -> Spectrum:
    """Full symmetric eigendecomposition of the Laplacian of ``g``.

    Every eigenpair residual is checked against ``residual_tol``
    (default ``1e-9 * max(1, 2m)``); :class:`ConvergenceFailure` is raised
    when the solver fails or the certificate does not hold.
    """
    tol = default_residual_tol(g.m) if residual_tol is None else float(residual_tol)
    L = laplacian(g).astype(float)
    try:
        w, V = np.linalg.eigh(L)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    resid = np.linalg.norm(L @ V - V * w, axis=0)
    max_res = float(resid.max()) if len(resid) else 0.0
    if not np.isfinite(max_res) or max_res > tol:
        raise ConvergenceFailure(f"eigenpair residual {max_res:.3e} exceeds {tol:.3e}")
    order = np.argsort(-w, kind="stable")
    return Spectrum(values=w[order], residual_tol=tol, max_residual=max_res,
                    vectors=V[:, order] if keep_vectors else None)


def _require_connected(g: Graph) -> None:
    if g.n < 2:
        raise DegenerateOrder("Kirchhoff index needs n >= 2")
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def kirchhoff_from_spectrum(n: int, s: Spectrum) -> float:
    """``n * sum(1/mu_i)`` over all but the smallest eigenvalue."""
    smallest = float(s.values[-1])
    if abs(smallest) > s.residual_tol:
        raise ConvergenceFailure(f"smallest Laplacian eigenvalue {smallest:.3e} is not zero")
    nonzero = s.values[:-1]
    if np.any(nonzero <= s.residual_tol):
        raise Disconnected("algebraic connectivity below tolerance")
    return float(n * np.sum(1.0 / nonzero))


def kirchhoff_index(g: Graph, spectrum: Spectrum | None = None) -> float:
    _require_connected(g)
    s = laplacian_spectrum(g) if spectrum is None else spectrum
    return kirchhoff_from_spectrum(g.n, s)


def effective_resistance_matrix(g: Graph) -> np.ndarray:
    """Pairwise effective resistances with every edge a unit resistor.

    Vertex 0 is grounded: with ``Z`` the inverse of the Laplacian minus its
    first row and column (padded back with zeros),
    ``R_uv = Z_uu + Z_vv - 2 Z_uv``.
    """
    if not is_connected(g):
        raise Disconnected("effective resistance needs a connected graph")
    n = g.n
    if n == 1:
        return np.zeros((1, 1))
    L = laplacian(g).astype(float)
    Z = np.zeros((n, n))
    Z[1:, 1:] = np.linalg.solve(L[1:, 1:], np.eye(n - 1))
    Z = 0.5 * (Z + Z.T)
    d = np.diag(Z)
    R = d[:, None] + d[None, :] - 2.0 * Z
    np.fill_diagonal(R, 0.0)
    return R


def kirchhoff_via_resistance(g: Graph) -> float:
    _require_connected(g)
    R = effective_resistance_matrix(g)
    return float(R[np.triu_indices(g.n, k=1)].sum())


@dataclass
class Verdict:
    """Outcome of a batch of named inequality checks."""

    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = bool(ok)
        if detail:
            self.details[name] = detail

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def __bool__(self):
        return self.passed


def check_interlacing(g: Graph, g_plus: Graph) -> Verdict:
    """Verify eigenvalue interlacing after one edge addition.

    Checks ``mu_j(g) <= mu_j(g+e) <= mu_{j-1}(g)`` for ``j = 2..n-1``,
    ``mu_1(g) <= mu_1(g+e)`` and that the non-zero eigenvalues grow by 2 in
    total.
    """
    if g.n != g_plus.n or not g.edges < g_plus.edges or g_plus.m != g.m + 1:
        raise NotSingleAddition("g_plus must equal g with exactly one extra edge")
    s, t = laplacian_spectrum(g), laplacian_spectrum(g_plus)
    tol = 2.0 * max(s.residual_tol, t.residual_tol)
    mu, nu = s.values, t.values
    n = g.n
    v = Verdict()
    v.record("mu1 nondecreasing", mu[0] <= nu[0] + tol, f"{mu[0]:.12g} -> {nu[0]:.12g}")
    for j in range(1, n - 1):  # 0-based index for mu_{j+1}
        v.record(f"lower j={j + 1}", mu[j] <= nu[j] + tol)
        v.record(f"upper j={j + 1}", nu[j] <= mu[j - 1] + tol)
    shift = float(np.sum(nu[: n - 1]) - np.sum(mu[: n - 1]))
    v.record("sum of shifts = 2", abs(shift - 2.0) <= n * tol, f"{shift:.12g}")
    return v


def check_degree_floors(g: Graph, s: Spectrum | None = None) -> Verdict:
    """Check the classical degree floors on the Laplacian spectrum.

    ``mu1 >= 1 + d1 >= 2m/n``, ``mu2 >= d2`` (n >= 3), ``mu_n ~ 0`` and
    ``mu_{n-1} > 0``.
    """
    if s is None:
        s = laplacian_spectrum(g)
    tol = s.residual_tol
    d = degree_sequence(g)
    mu = s.values
    v = Verdict()
    v.record("mu1 >= 1+d1", mu[0] >= 1 + d[0] - tol, f"{mu[0]:.12g} vs {1 + d[0]}")
    v.record("1+d1 >= 2m/n", (1 + d[0]) * g.n >= 2 * g.m)
    if g.n >= 3:
        # for n = 2 the second eigenvalue is the zero one
        v.record("mu2 >= d2", mu[1] >= d[1] - tol, f"{mu[1]:.12g} vs {d[1]}")
    if g.n >= 2:
        v.record("mu_{n-1} > 0", mu[-2] > tol, f"{mu[-2]:.3e}")
    v.record("mu_n = 0", abs(mu[-1]) <= tol, f"{mu[-1]:.3e}")
    return v
