"""
Seeded random graph models and random link perturbations.

Randomness comes from :class:`RngSeed`, a ``(seed, stream)`` pair mapped to
a NumPy ``Generator`` through ``SeedSequence(seed, spawn_key=(stream, ...))``.
Every function also accepts a ready ``numpy.random.Generator``.
Connectivity is enforced by whole-sample rejection: a disconnected draw is
thrown away and redrawn from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import (
    BadLatticeParams,
    BadParams,
    Disconnected,
    HTooLarge,
    NotEnoughAbsentPairs,
    RejectionBudgetExhausted,
)
from .graph import Edge, Graph, absent_pairs, add_edges, is_connected, remove_edges

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class RngSeed:
    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise BadParams("seed must be a 64-bit unsigned integer")
        if self.stream < 0:
            raise BadParams("stream must be non-negative")

    def generator(self, *labels: int) -> np.random.Generator:
        """Independent generator for this stream; ``labels`` select
        sub-streams (e.g. graph draw vs. perturbation)."""
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream, *labels))
        return np.random.Generator(np.random.PCG64(ss))


RngLike = Union[RngSeed, np.random.Generator]


def _as_generator(rng: RngLike) -> np.random.Generator:
    return rng.generator() if isinstance(rng, RngSeed) else rng


@dataclass(frozen=True)
class PerturbedPair:
    base: Graph
    perturbed: Graph
    kind: Literal["add", "remove"]
    h: int
    changed_edges: tuple[Edge, ...]

    def check(self) -> bool:
        changed = set(self.changed_edges)
        if len(changed) != self.h or len(self.changed_edges) != self.h:
            return False
        if self.kind == "add":
            ok = self.perturbed.edges == self.base.edges | changed and not (changed & self.base.edges)
        else:
            ok = self.perturbed.edges == self.base.edges - changed and changed <= self.base.edges
            ok = ok and is_connected(self.perturbed)
        return ok


def erdos_renyi_connected(n: int, p: float, rng: RngLike,
                          budget: int = DEFAULT_BUDGET) -> Graph:
    """G(n, p) conditioned on connectivity by rejection.

    Pairs are drawn in lexicographic ``u < v`` order, one uniform per pair.
    """
    if n < 2:
        raise BadParams(f"need n >= 2, got {n}")
    if not 0 < p <= 1:
        raise BadParams(f"need 0 < p <= 1, got {p}")
    gen = _as_generator(rng)
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(budget):
        keep = gen.random(len(iu)) < p
        g = Graph._trusted(n, frozenset(zip(iu[keep].tolist(), ju[keep].tolist())))
        if is_connected(g):
            return g
    raise RejectionBudgetExhausted(f"no connected G({n}, {p}) in {budget} draws")


def watts_strogatz(n: int, k: int, beta: float, rng: RngLike,
                   budget: int = DEFAULT_BUDGET) -> Graph:
    """Ring lattice with ``k`` nearest neighbours, each lattice link rewired
    with probability ``beta`` to a uniformly chosen new endpoint."""
    if k < 2 or k % 2 or not n > k:
        raise BadLatticeParams(f"need even k >= 2 and n > k, got n={n}, k={k}")
    if not 0 <= beta <= 1:
        raise BadLatticeParams(f"need 0 <= beta <= 1, got {beta}")
    gen = _as_generator(rng)
    for _ in range(budget):
        adj = [set() for _ in range(n)]
        for u in range(n):
            for j in range(1, k // 2 + 1):
                v = (u + j) % n
                adj[u].add(v)
                adj[v].add(u)
        for j in range(1, k // 2 + 1):
            for u in range(n):
                v = (u + j) % n
                if v not in adj[u] or gen.random() >= beta:
                    continue
                if len(adj[u]) >= n - 1:
                    continue
                candidates = [w for w in range(n) if w != u and w not in adj[u]]
                w = candidates[gen.integers(len(candidates))]
                adj[u].discard(v)
                adj[v].discard(u)
                adj[u].add(w)
                adj[w].add(u)
        edges = frozenset((u, w) for u in range(n) for w in adj[u] if u < w)
        g = Graph._trusted(n, edges)
        if is_connected(g):
            return g
    raise RejectionBudgetExhausted(f"no connected WS({n}, {k}, {beta}) in {budget} draws")


def barabasi_albert(n: int, m0: int, rng: RngLike) -> Graph:
    """Preferential attachment from a clique on ``m0 + 1`` vertices.

    Each later vertex links to ``m0`` distinct earlier vertices drawn with
    probability proportional to their current degree.
    """
    if not n > m0 >= 1:
        raise BadParams(f"need n > m0 >= 1, got n={n}, m0={m0}")
    gen = _as_generator(rng)
    edges = {(u, v) for u in range(m0 + 1) for v in range(u + 1, m0 + 1)}
    deg = np.zeros(n, dtype=float)
    deg[: m0 + 1] = m0
    for new in range(m0 + 1, n):
        weights = deg[:new] / deg[:new].sum()
        targets = gen.choice(new, size=m0, replace=False, p=weights)
        for t in sorted(int(x) for x in targets):
            edges.add((t, new))
            deg[t] += 1
        deg[new] = m0
    return Graph._trusted(n, frozenset(edges))


def perturb_add(g: Graph, h: int, rng: RngLike) -> PerturbedPair:
    """Add ``h`` distinct absent links chosen uniformly without replacement."""
    if h < 1:
        raise BadParams("h must be positive")
    pool = absent_pairs(g)
    if len(pool) < h:
        raise NotEnoughAbsentPairs(f"only {len(pool)} absent pairs, need {h}")
    gen = _as_generator(rng)
    idx = gen.choice(len(pool), size=h, replace=False)
    chosen = tuple(sorted(pool[int(i)] for i in idx))
    return PerturbedPair(g, add_edges(g, chosen), "add", h, chosen)


def perturb_remove_connected(g: Graph, h: int, rng: RngLike,
                             budget: int = DEFAULT_BUDGET) -> PerturbedPair:
    """Remove ``h`` distinct links chosen uniformly, redrawing the whole
    subset until the remaining graph is connected."""
    if h < 1:
        raise BadParams("h must be positive")
    if not is_connected(g):
        raise Disconnected("base graph must be connected")
    if h > g.m:
        raise HTooLarge(f"cannot remove {h} of {g.m} links")
    if g.m - h < g.n - 1:
        # every draw would be rejected; fail without spending the budget
        raise RejectionBudgetExhausted(
            f"removing {h} of {g.m} links cannot leave {g.n} vertices connected")
    pool = g.sorted_edges()
    gen = _as_generator(rng)
    for _ in range(budget):
        idx = gen.choice(len(pool), size=h, replace=False)
        chosen = tuple(sorted(pool[int(i)] for i in idx))
        g2 = remove_edges(g, chosen)
        if is_connected(g2):
            return PerturbedPair(g, g2, "remove", h, chosen)
    raise RejectionBudgetExhausted(f"no connected {h}-link removal found in {budget} draws")
