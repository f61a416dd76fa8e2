"""
Experiment harness: one-link comparison tables and multi-link sweeps on
Erdős–Rényi graphs, CSV serialization and SVG rendering of sweeps.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import time
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from . import bounds as B
from .errors import (
    GenerationFailure,
    IoFailure,
    KirchhoffError,
    MixedSeries,
    NotEnoughAbsentPairs,
    RejectionBudgetExhausted,
)
from .generators import RngSeed, erdos_renyi_connected, perturb_add, perturb_remove_connected
from .graph import Graph, degree_sequence, density
from .spectral import kirchhoff_index

log = logging.getLogger(__name__)

CSV_HEADER = ("mode,n,m,p,h,rep,K_G,K_perturbed,bound_majorization,"
              "applicable,bound_wang,density,wall_time_ms")
MODES = ("table_add", "table_remove", "sweep")
RECORD_MODES = ("table_add", "table_remove", "sweep_add", "sweep_remove")

# sub-stream labels under RngSeed(seed, rep)
_GRAPH, _ADD, _REMOVE = 0, 1, 2


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    sizes: tuple[int, ...] = (10,)
    p: float = 0.5
    h_max: int = 1
    reps: int = 1
    seed: int = 0
    output_path: str | None = None
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.graph is None:
            if not self.sizes:
                raise ValueError("sizes must be non-empty")
            if any(n < 4 for n in self.sizes):
                raise ValueError("every size must be >= 4 for the bound columns")
            if not 0 < self.p <= 1:
                raise ValueError(f"p must lie in (0, 1], got {self.p}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.h_max < 1:
            raise ValueError("h_max must be >= 1")


@dataclass(frozen=True)
class ExperimentRecord:
    mode: str
    n: int
    m: int
    p: float | None
    h: int
    rep: int
    K_G: float
    K_perturbed: float
    bound_majorization: float | None
    applicable: bool
    bound_wang: float | None
    density: float
    wall_time_ms: float = 0.0

    @property
    def kind(self) -> str:
        return "add" if self.mode.endswith("add") else "remove"

    def violations(self) -> list[str]:
        out = []
        if self.kind == "add" and not self.K_perturbed < self.K_G:
            out.append("adding links must lower K")
        if self.kind == "remove" and not self.K_perturbed > self.K_G:
            out.append("removing links must raise K")
        slack = 1e-8 * self.K_perturbed
        for name in ("bound_majorization", "bound_wang"):
            b = getattr(self, name)
            if b is not None and b > self.K_perturbed + slack:
                out.append(f"{name}={b} exceeds K_perturbed={self.K_perturbed}")
        if self.applicable != (self.bound_majorization is not None):
            out.append("applicable flag disagrees with bound_majorization")
        return out

    def quantized(self) -> "ExperimentRecord":
        """The record as it reads back from CSV (6 significant digits)."""
        return parse_csv(format_csv([self]))[0]


# ---------------------------------------------------------------------------
# CSV


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, str)):
        return str(x)
    return f"{x:.6g}"


def _opt_float(s: str) -> float | None:
    return None if s == "" else float(s)


def format_csv(records: Iterable[ExperimentRecord]) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in records:
        buf.write(",".join(_fmt(getattr(r, f.name)) for f in fields(ExperimentRecord)) + "\n")
    return buf.getvalue()


def parse_csv(text: str) -> list[ExperimentRecord]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CSV_HEADER:
        raise IoFailure("missing or unexpected CSV header")
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(ExperimentRecord(
            mode=row["mode"],
            n=int(row["n"]),
            m=int(row["m"]),
            p=_opt_float(row["p"]),
            h=int(row["h"]),
            rep=int(row["rep"]),
            K_G=float(row["K_G"]),
            K_perturbed=float(row["K_perturbed"]),
            bound_majorization=_opt_float(row["bound_majorization"]),
            applicable=row["applicable"] == "true",
            bound_wang=_opt_float(row["bound_wang"]),
            density=float(row["density"]),
            wall_time_ms=float(row["wall_time_ms"]),
        ))
    return out


def write_csv(records: Sequence[ExperimentRecord], path: str | os.PathLike) -> None:
    try:
        with open(path, "w", encoding="ascii", newline="") as fh:
            fh.write(format_csv(records))
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def read_csv(path: str | os.PathLike) -> list[ExperimentRecord]:
    try:
        with open(path, encoding="ascii", newline="") as fh:
            return parse_csv(fh.read())
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def strip_timing(csv_text: str) -> str:
    """CSV text with the wall_time_ms column removed, for determinism checks."""
    return "\n".join(line.rsplit(",", 1)[0] for line in csv_text.splitlines()) + "\n"


# ---------------------------------------------------------------------------
# runners


def _base_graphs(config: ExperimentConfig) -> Iterator[tuple[int, RngSeed, Graph]]:
    """Yield ``(rep, seed, G)`` in (size, rep) order."""
    if config.graph is not None:
        for rep in range(config.reps):
            yield rep, RngSeed(config.seed, rep), config.graph
        return
    for n in config.sizes:
        for rep in range(config.reps):
            seed = RngSeed(config.seed, rep)
            try:
                g = erdos_renyi_connected(n, config.p, seed.generator(n, _GRAPH))
            except RejectionBudgetExhausted as exc:
                raise GenerationFailure(str(exc)) from exc
            yield rep, seed, g


def _p_of(config: ExperimentConfig) -> float | None:
    return None if config.graph is not None else config.p


def _pick(reports: list[B.BoundReport], bound_id: str) -> B.BoundReport | None:
    return B.suite_by_id(reports).get(bound_id)


def _value(report: B.BoundReport | None) -> float | None:
    return None if report is None else report.value


def run_table(config: ExperimentConfig) -> list[ExperimentRecord]:
    """One-link addition or removal comparison, one record per (n, rep)."""
    if config.mode not in ("table_add", "table_remove"):
        raise ValueError("run_table needs mode table_add or table_remove")
    adding = config.mode == "table_add"
    records = []
    for rep, seed, g in _base_graphs(config):
        t0 = time.perf_counter()
        k_g = kirchhoff_index(g)
        try:
            if adding:
                pair = perturb_add(g, 1, seed.generator(g.n, _ADD))
            else:
                pair = perturb_remove_connected(g, 1, seed.generator(g.n, _REMOVE))
        except (RejectionBudgetExhausted, NotEnoughAbsentPairs) as exc:
            raise GenerationFailure(str(exc)) from exc
        k_p = kirchhoff_index(pair.perturbed)
        reports = B.bound_suite(g, 1, k_g=k_g)
        ours = _pick(reports, B.MAJORIZATION_ADD if adding else B.MAJORIZATION_REMOVE)
        wang = _pick(reports, B.WANG_ADD if adding else B.WANG_REMOVE)
        records.append(ExperimentRecord(
            mode=config.mode, n=g.n, m=g.m, p=_p_of(config), h=1, rep=rep,
            K_G=k_g, K_perturbed=k_p,
            bound_majorization=_value(ours), applicable=bool(ours and ours.applicable),
            bound_wang=_value(wang), density=density(g),
            wall_time_ms=(time.perf_counter() - t0) * 1e3,
        ))
        log.info("%s n=%d rep=%d K=%.6g K'=%.6g", config.mode, g.n, rep, k_g, k_p)
    if config.output_path:
        write_csv(records, config.output_path)
    return records


def _bound_or_none(fn, *args) -> B.BoundReport | None:
    try:
        return fn(*args)
    except KirchhoffError as exc:
        log.debug("bound unavailable: %s", exc)
        return None


def run_sweep(config: ExperimentConfig) -> list[ExperimentRecord]:
    """Cumulative h-link sweeps: the graph for ``h`` extends the one for
    ``h - 1`` by one further random link added (or removed)."""
    if config.mode != "sweep":
        raise ValueError("run_sweep needs mode sweep")
    records = []
    for rep, seed, g in _base_graphs(config):
        k_g = kirchhoff_index(g)
        dens = density(g)
        d2 = degree_sequence(g)[1]
        p = _p_of(config)

        gen = seed.generator(g.n, _ADD)
        current = g
        for h in range(1, config.h_max + 1):
            t0 = time.perf_counter()
            try:
                step = perturb_add(current, 1, gen)
            except NotEnoughAbsentPairs:
                break
            current = step.perturbed
            k_p = kirchhoff_index(current)
            ours = _bound_or_none(B.majorization_addition_bound, g, h)
            wang = _bound_or_none(B.wang_addition_bound, g, k_g) if h == 1 else None
            records.append(ExperimentRecord(
                "sweep_add", g.n, g.m, p, h, rep, k_g, k_p,
                _value(ours), bool(ours and ours.applicable), _value(wang), dens,
                (time.perf_counter() - t0) * 1e3))

        gen = seed.generator(g.n, _REMOVE)
        current = g
        for h in range(1, config.h_max + 1):
            if not (2 * h < d2 and g.m - h >= g.n - 1):
                break
            t0 = time.perf_counter()
            try:
                step = perturb_remove_connected(current, 1, gen)
            except RejectionBudgetExhausted:
                break
            current = step.perturbed
            k_p = kirchhoff_index(current)
            ours = _bound_or_none(B.majorization_removal_bound, g, h)
            wang = _bound_or_none(B.wang_removal_bound, g) if h == 1 else None
            records.append(ExperimentRecord(
                "sweep_remove", g.n, g.m, p, h, rep, k_g, k_p,
                _value(ours), bool(ours and ours.applicable), _value(wang), dens,
                (time.perf_counter() - t0) * 1e3))
    if config.output_path:
        write_csv(records, config.output_path)
    return records


def run(config: ExperimentConfig) -> list[ExperimentRecord]:
    return run_sweep(config) if config.mode == "sweep" else run_table(config)


# ---------------------------------------------------------------------------
# plotting


def split_series(records: Iterable[ExperimentRecord]) -> dict[tuple[str, int, int], list[ExperimentRecord]]:
    """Group records by (mode, n, rep), i.e. by base graph and direction."""
    out: dict[tuple[str, int, int], list[ExperimentRecord]] = {}
    for r in records:
        out.setdefault((r.mode, r.n, r.rep), []).append(r)
    return out


_W, _H, _PAD = 640, 420, 60


def _polyline(points, sx, sy, style: str) -> str:
    coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
    return f'<polyline fill="none" {style} points="{coords}"/>'


def emit_plot(records: Sequence[ExperimentRecord], path: str | os.PathLike) -> Path:
    """Write an SVG of exact K and the majorization bound against h.

    A plain-text table of the plotted points is written next to it with a
    ``.txt`` suffix.
    """
    if not records:
        raise MixedSeries("nothing to plot")
    series = split_series(records)
    if len(series) != 1:
        raise MixedSeries(f"records span {len(series)} series: {sorted(series)}")
    (mode, n, rep), = series
    rows = sorted(records, key=lambda r: r.h)
    exact = [(r.h, r.K_perturbed) for r in rows]
    bound = [(r.h, r.bound_majorization) for r in rows if r.bound_majorization is not None]
    k_g = rows[0].K_G

    xs = [h for h, _ in exact]
    ys = [y for _, y in exact] + [y for _, y in bound] + [k_g]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1

    def sx(x):
        return _PAD + (x - x0) / (x1 - x0) * (_W - 2 * _PAD)

    def sy(y):
        return _H - _PAD - (y - y0) / (y1 - y0) * (_H - 2 * _PAD)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2}" y="24" text-anchor="middle" font-size="14">'
        f'{mode} n={n} rep={rep}</text>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<text x="{_W / 2}" y="{_H - 20}" text-anchor="middle" font-size="12">h</text>',
        f'<text x="{_PAD}" y="{_H - _PAD + 16}" text-anchor="middle" font-size="10">{x0}</text>',
        f'<text x="{_W - _PAD}" y="{_H - _PAD + 16}" text-anchor="middle" font-size="10">{x1}</text>',
        f'<text x="{_PAD - 4}" y="{_H - _PAD}" text-anchor="end" font-size="10">{y0:.6g}</text>',
        f'<text x="{_PAD - 4}" y="{_PAD}" text-anchor="end" font-size="10">{y1:.6g}</text>',
        f'<line x1="{_PAD}" y1="{sy(k_g):.2f}" x2="{_W - _PAD}" y2="{sy(k_g):.2f}" '
        f'stroke="black" stroke-dasharray="2,3"/>',
        _polyline(exact, sx, sy, 'stroke="#1f77b4" stroke-width="2"'),
    ]
    if bound:
        parts.append(_polyline(bound, sx, sy, 'stroke="#d62728" stroke-width="2" stroke-dasharray="5,4"'))
    legend = [("exact K", "#1f77b4", ""), ("K(G)", "black", ' stroke-dasharray="2,3"')]
    if bound:
        legend.insert(1, ("majorization bound", "#d62728", ' stroke-dasharray="5,4"'))
    for i, (label, color, dash) in enumerate(legend):
        y = _PAD + 14 * i
        parts.append(f'<line x1="{_W - 200}" y1="{y}" x2="{_W - 170}" y2="{y}" stroke="{color}"{dash}/>')
        parts.append(f'<text x="{_W - 164}" y="{y + 4}" font-size="11">{label}</text>')
    parts.append("</svg>")

    path = Path(path)
    table = ["h\tK_G\tK_perturbed\tbound_majorization"]
    table += [f"{r.h}\t{r.K_G:.6g}\t{r.K_perturbed:.6g}\t{_fmt(r.bound_majorization)}" for r in rows]
    try:
        path.write_text("\n".join(parts) + "\n", encoding="utf-8")
        path.with_suffix(".txt").write_text("\n".join(table) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write plot {path}: {exc}") from exc
    return path
