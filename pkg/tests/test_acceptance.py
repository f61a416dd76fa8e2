"""Exit criteria for the package, one test per criterion.

Each test appends a PASS/FAIL line to ``RESULTS``; the lines are printed in
the terminal summary (see ``conftest.py``).
"""

import itertools
import time

import numpy as np
import pytest

from kirchhoff_bounds import bounds as B
from kirchhoff_bounds.errors import HalfDegreeViolated, HTooLarge
from kirchhoff_bounds.experiments import ExperimentConfig, parse_csv, format_csv, run_table, strip_timing
from kirchhoff_bounds.cli import main
from kirchhoff_bounds.generators import RngSeed, erdos_renyi_connected
from kirchhoff_bounds.graph import (
    absent_pairs,
    add_edge,
    add_edges,
    complete_graph,
    from_edge_list,
    is_connected,
    path_graph,
    remove_edges,
)
from kirchhoff_bounds.majorization import (
    ConstrainedSet,
    majorizes,
    minimal_element,
    minimal_element_uniform_floor,
    sample_feasible_point,
    schur_eval,
)
from kirchhoff_bounds.spectral import (
    check_degree_floors,
    check_interlacing,
    kirchhoff_index,
    kirchhoff_via_resistance,
    laplacian_spectrum,
)

RESULTS: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {detail}")
    print(RESULTS[-1])
    assert ok, detail


def test_c01_oracle_equivalence():
    rng = np.random.default_rng(1)
    t0 = time.perf_counter()
    worst = 0.0
    for i in range(200):
        n = int(rng.integers(2, 13))
        p = float(rng.choice([0.3, 0.5, 0.8]))
        g = erdos_renyi_connected(n, p, rng)
        k1, k2 = kirchhoff_index(g), kirchhoff_via_resistance(g)
        worst = max(worst, abs(k1 - k2) / k1)
    elapsed = time.perf_counter() - t0
    report(1, worst <= 1e-8 and elapsed < 10,
           f"200 ER graphs, max |K_spec - K_res|/K = {worst:.2e} (tol 1e-8), {elapsed:.2f}s")


def test_c02_closed_forms():
    worst = 0.0
    for n in range(2, 21):
        for g, exact in ((complete_graph(n), n - 1), (path_graph(n), (n**3 - n) / 6)):
            for k in (kirchhoff_index(g), kirchhoff_via_resistance(g)):
                worst = max(worst, abs(k - exact) / exact)
    report(2, worst <= 1e-9, f"K(K_n)=n-1, K(P_n)=(n^3-n)/6 for n=2..20, max rel err {worst:.2e}")


def _realizations(items, h, rng, want=20, exhaustive_cap=400):
    combos = list(itertools.islice(itertools.combinations(items, h), exhaustive_cap + 1))
    if len(combos) <= exhaustive_cap:
        return combos
    out = set()
    while len(out) < want:
        idx = rng.choice(len(items), size=h, replace=False)
        out.add(tuple(sorted(items[int(i)] for i in idx)))
    return sorted(out)


def test_c03_bound_validity():
    rng = np.random.default_rng(3)
    add_cases = rem_cases = violations = 0
    min_real = 10**9
    while add_cases < 500 or rem_cases < 500:
        n = int(rng.integers(5, 13))
        p = float(rng.choice([0.5, 0.7, 0.85]))
        g = erdos_renyi_connected(n, p, rng)
        h = int(rng.integers(1, 4))
        if add_cases < 500:
            try:
                r = B.majorization_addition_bound(g, h)
            except HTooLarge:
                r = None
            if r is not None and r.applicable:
                combos = _realizations(absent_pairs(g), h, rng)
                if len(combos) >= 20:
                    add_cases += 1
                    min_real = min(min_real, len(combos))
                    for c in combos:
                        k = kirchhoff_index(add_edges(g, c))
                        violations += r.value > k + 1e-8 * k
        if rem_cases < 500:
            try:
                r = B.majorization_removal_bound(g, h)
            except (HTooLarge, HalfDegreeViolated):
                continue
            if r.applicable:
                combos = _realizations(g.sorted_edges(), h, rng, want=40)
                kept = [c for c in combos if is_connected(remove_edges(g, c))]
                if len(kept) >= 20:
                    rem_cases += 1
                    min_real = min(min_real, len(kept))
                    for c in kept:
                        k = kirchhoff_index(remove_edges(g, c))
                        violations += r.value > k + 1e-8 * k
    broom = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5)])
    broom_min = min(kirchhoff_index(add_edge(broom, u, v)) for u, v in absent_pairs(broom))
    broom_bound = B.majorization_addition_bound(broom, 1).value
    ok = violations == 0 and broom_min >= 15 - 1e-12 and abs(broom_bound - 15) < 1e-12
    report(3, ok, f"{add_cases} addition + {rem_cases} removal cases (>= {min_real} realizations each), "
                  f"{violations} violations; "
                  f"broom min K(G')={broom_min:.6f} >= bound {broom_bound:.6f}")


def test_c04_dominance():
    rng = np.random.default_rng(4)
    cases, worst = 0, np.inf
    while cases < 300:
        n = int(rng.integers(6, 60))
        g = erdos_renyi_connected(n, float(rng.choice([0.3, 0.5, 0.7, 0.9])), rng)
        try:
            ours = B.majorization_removal_bound(g, 1)
        except (HTooLarge, HalfDegreeViolated):
            continue
        if not ours.applicable:
            continue
        cases += 1
        worst = min(worst, ours.value - B.wang_removal_bound(g).value)
    report(4, worst >= -1e-10, f"{cases} graphs, min(ours - Wang) = {worst:.4g} (>= -1e-10)")


@pytest.mark.slow
def test_c05_addition_table_n1000():
    t0 = time.perf_counter()
    recs = run_table(ExperimentConfig("table_add", sizes=(1000,), p=0.5, reps=5, seed=1))
    elapsed = time.perf_counter() - t0
    k_mean = np.mean([r.K_G for r in recs])
    b_mean = np.mean([r.bound_majorization for r in recs])
    wang = [r.bound_wang for r in recs]
    ok = (abs(k_mean - 1999.25) <= 0.05 * 1999.25 and abs(b_mean - 1995.26) <= 0.05 * 1995.26
          and all(1.8 <= w <= 2.2 for w in wang) and elapsed <= 900
          and all(not r.violations() for r in recs))
    report(5, ok, f"n=1000: mean K(G)={k_mean:.2f} (1999.25 +-5%), mean bound={b_mean:.2f} "
                  f"(1995.26 +-5%), Wang in [{min(wang):.3f}, {max(wang):.3f}], {elapsed:.0f}s")


def test_c06_removal_table_n100():
    recs = run_table(ExperimentConfig("table_remove", sizes=(100,), p=0.5, reps=5, seed=1))
    k_mean = np.mean([r.K_G for r in recs])
    b_mean = np.mean([r.bound_majorization for r in recs])
    ordered = all(r.bound_majorization > r.bound_wang for r in recs)
    ok = (abs(k_mean - 191.36) <= 0.05 * 191.36 and abs(b_mean - 188.49) <= 0.05 * 188.49
          and ordered)
    report(6, ok, f"n=100: mean K(G)={k_mean:.2f} (191.36 +-5%), mean bound={b_mean:.2f} "
                  f"(188.49 +-5%), ours > Wang on every instance: {ordered}")


def test_c07_monotonicity():
    bad, checked = 0, 0
    for s in range(20):
        g = erdos_renyi_connected(100, 0.5, RngSeed(7, s))
        vals = []
        for h in range(1, 51):
            r = B.majorization_addition_bound(g, h)
            if r.applicable:
                vals.append(r.value)
        checked += len(vals)
        bad += sum(a <= b for a, b in zip(vals, vals[1:]))
    report(7, bad == 0 and checked > 0,
           f"20 ER(100,0.5) graphs, {checked} applicable h values, {bad} non-decreasing steps")


def test_c08_interlacing_and_floors():
    rng = np.random.default_rng(8)
    fails_il = fails_df = pairs = 0
    while pairs < 100:
        n = int(rng.integers(4, 51))
        g = erdos_renyi_connected(n, float(rng.uniform(0.15, 0.9)), rng)
        missing = absent_pairs(g)
        if not missing:
            continue
        u, v = missing[int(rng.integers(len(missing)))]
        gp = add_edge(g, u, v)
        pairs += 1
        fails_il += not check_interlacing(g, gp).passed
        fails_df += not check_degree_floors(g, laplacian_spectrum(g)).passed
        fails_df += not check_degree_floors(gp).passed
    report(8, fails_il == 0 and fails_df == 0,
           f"{pairs} (g, g+e) pairs: {fails_il} interlacing failures, {fails_df} degree-floor failures")


def _random_set(rng):
    n = int(rng.integers(1, 9))
    lower = np.sort(rng.uniform(0.1, 5, n))[::-1]
    upper = np.sort(lower + rng.uniform(0, 5, n))[::-1]
    if rng.random() < 0.3:
        upper[:] = 1e6  # effectively unbounded above
    a = lower.sum() + rng.uniform(0.05, 0.95) * (min(upper.sum(), lower.sum() + 20) - lower.sum())
    return ConstrainedSet(a, lower, upper)


def test_c09_majorization_minimality():
    rng = np.random.default_rng(9)
    sets = samples = bad_major = bad_schur = 0
    while sets < 50:
        s = _random_set(rng)
        x = minimal_element(s)
        pts = []
        tries = 0
        while len(pts) < 1000 and tries < 3000:
            tries += 1
            p = sample_feasible_point(s, rng)
            if p is not None:
                pts.append(p)
        if len(pts) < 1000:
            continue
        sets += 1
        for p in pts:
            samples += 1
            bad_major += not majorizes(x.point, p)
            bad_schur += schur_eval(x.point, 2.0) > schur_eval(p, 2.0) + 1e-12 * schur_eval(p, 2.0)
    floor_bad = 0
    for length in range(1, 9):
        for a in (1.0, 7.5, 40.0):
            lo, hi = 0.5 * a / length, 2 * a / length
            x = minimal_element(ConstrainedSet(a, [lo] * length, [hi] * length))
            floor_bad += x.point != (a / length,) * length
            for h in range(1, length + 1):
                for alpha in np.linspace(a / length / 2, a / h, 5):
                    u = minimal_element_uniform_floor(a, length, h, float(alpha))
                    box = minimal_element(ConstrainedSet(a, [float(alpha)] * h + [0.0] * (length - h)))
                    floor_bad += u.point != box.point
    report(9, bad_major == 0 and bad_schur == 0 and floor_bad == 0,
           f"{sets} sets x 1000 samples: {bad_major} majorization and {bad_schur} Schur violations; "
           f"{floor_bad} uniform-floor mismatches")


def test_c10_cli_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["table-add", "--sizes", "10,20", "--p", "0.5", "--reps", "2", "--seed", "42"]
    rc = main(args + ["--out", str(a)]), main(args + ["--out", str(b)])
    same = strip_timing(a.read_text()) == strip_timing(b.read_text())
    text = a.read_text()
    lossless = format_csv(parse_csv(text)) == text
    report(10, rc == (0, 0) and same and lossless,
           f"exit codes {rc}, byte-identical (sans wall_time_ms): {same}, CSV round-trip lossless: {lossless}")
