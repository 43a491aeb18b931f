"""Seeded experiment runners.

Every runner is a pure function of its :class:`ExperimentConfig`: seed ``k``
of ``cfg.seeds`` is ``cfg.base_seed + k``, and rows come out sorted by ``n``.
"""

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from statistics import NormalDist
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utsw.bounds import (
    cycle_set_size_bound,
    detection_lower_bound,
    theoretical_eu_bound,
    verify_z_bounds,
)
from utsw.cycles import four_cycles_search
from utsw.labeling import label_graph, labeling_from_positions, remove_long_range_edges
from utsw.model import EdgeKind, generate_torus, generate_utsw
from utsw.routing import build_routing_tables, routing_stats, storage_bits

FORMAT_VERSION = 1
EXPERIMENTS = ("detection", "cycles", "routing", "zbounds", "eu")


@dataclass
class ExperimentConfig:
    n_list: List[int] = field(default_factory=lambda: [10, 100, 150])
    seeds: int = 30
    base_seed: int = 0
    trials: int = 1000
    out: Optional[str] = None
    fmt: str = "csv"

    def seed_list(self) -> List[int]:
        return [self.base_seed + k for k in range(self.seeds)]

    def validate(self, min_n: int = 5) -> None:
        if self.seeds < 1:
            raise ValueError(f"seeds must be >= 1, got {self.seeds}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")
        bad = [n for n in self.n_list if n < min_n]
        if bad:
            raise ValueError(f"every n must be >= {min_n}, got {bad}")
        if not self.n_list:
            raise ValueError("n_list is empty")


@dataclass
class GraphMeasurement:
    """Per-(n, seed) statistics of the labeling pipeline."""

    n: int
    seed: int
    mean_cycles: float
    detected: float
    labeled: float
    local_removed: int
    bad_detected: int
    long_range_edges: int


def measure_graph(n: int, seed: int, label: bool = True) -> GraphMeasurement:
    g = generate_utsw(n, seed)
    t = remove_long_range_edges(g.view())
    local_removed = sum(g.kind(u, v) is EdgeKind.LOCAL for u, v in t.dropped)
    # detected vertices must keep exactly their four torus edges
    bad_detected = sum(
        1 for u in range(n * n)
        if t.detected[u] and (len(t.adj[u]) != 4 or any(g.kind(u, w) is not EdgeKind.LOCAL for w in t.adj[u]))
    )
    labeled = label_graph(g.view(), seed, t=t).labeled_fraction if label else float("nan")
    return GraphMeasurement(
        n=n,
        seed=seed,
        mean_cycles=float(np.mean(t.cycle_counts)),
        detected=t.detected_fraction,
        labeled=labeled,
        local_removed=local_removed,
        bad_detected=bad_detected,
        long_range_edges=len(g.long_range_edges()),
    )


def _mean_std(xs: Sequence[float]) -> Tuple[float, float]:
    a = np.asarray(xs, dtype=float)
    return float(a.mean()), float(a.std(ddof=1)) if len(a) > 1 else 0.0


def measure_all(cfg: ExperimentConfig, label: bool = True) -> Dict[int, List[GraphMeasurement]]:
    return {n: [measure_graph(n, s, label) for s in cfg.seed_list()] for n in sorted(cfg.n_list)}


def run_detection_experiment(cfg: ExperimentConfig, cells=None) -> List[dict]:
    cfg.validate()
    cells = cells or measure_all(cfg)
    rows = []
    for n in sorted(cells):
        ms = cells[n]
        det_m, det_s = _mean_std([m.detected for m in ms])
        lab_m, lab_s = _mean_std([m.labeled for m in ms])
        rows.append({
            "n": n,
            "seeds": len(ms),
            "detected_mean": det_m,
            "detected_std": det_s,
            "labeled_mean": lab_m,
            "labeled_std": lab_s,
            "local_removed": sum(m.local_removed for m in ms),
            "detection_lower_bound": detection_lower_bound(n),
        })
    return rows


def run_cycle_size_experiment(cfg: ExperimentConfig, cells=None) -> List[dict]:
    cfg.validate()
    cells = cells or measure_all(cfg, label=False)
    rows = []
    for n in sorted(cells):
        ms = cells[n]
        mean, std = _mean_std([m.mean_cycles for m in ms])
        rows.append({
            "n": n,
            "seeds": len(ms),
            "cycles_mean": mean,
            "cycles_std": std,
            "cycles_bound": cycle_set_size_bound(n),
        })
    return rows


def _routing_row(n: int, kind: str, results, storage: List[float], labeled: List[float]) -> dict:
    return {
        "n": n,
        "graph": kind,
        "pairs": sum(r.pairs for r in results),
        "delivery_rate": float(np.mean([r.delivery_rate for r in results])),
        "mean_hops": float(np.mean([r.mean_hops for r in results])),
        "mean_distance": float(np.mean([r.mean_distance for r in results])),
        "mean_stretch": float(np.mean([r.mean_stretch for r in results])),
        "storage_bits": float(np.mean(storage)),
        "labeled_mean": float(np.mean(labeled)),
    }


def run_routing_experiment(cfg: ExperimentConfig, recovered: bool = True) -> List[dict]:
    """Greedy routing over UTSW graphs plus a pure-torus control row per ``n``.

    With ``recovered`` the UTSW rows route on labels from :func:`label_graph`;
    otherwise on the generator coordinates (a fully labeled graph).
    """
    cfg.validate()
    rows = []
    for n in sorted(cfg.n_list):
        torus = generate_torus(n)
        lab = labeling_from_positions(torus)
        tables = build_routing_tables(torus, lab)
        res = routing_stats(torus, tables, lab, cfg.trials, np.random.default_rng([cfg.base_seed, n]))
        rows.append(_routing_row(n, "torus", [res], [storage_bits(tables, 0)], [1.0]))

        results, storage, labeled = [], [], []
        for seed in cfg.seed_list():
            g = generate_utsw(n, seed)
            lab = label_graph(g.view(), seed) if recovered else labeling_from_positions(g)
            tables = build_routing_tables(g.view(), lab)
            results.append(routing_stats(g, tables, lab, cfg.trials, np.random.default_rng([seed, 2])))
            storage.append(float(np.mean([storage_bits(tables, u) for u in range(n * n)])))
            labeled.append(lab.labeled_fraction)
        rows.append(_routing_row(n, "utsw", results, storage, labeled))
    return rows


def run_zbounds_experiment(cfg: ExperimentConfig) -> List[dict]:
    cfg.validate(min_n=3)
    return verify_z_bounds(sorted(cfg.n_list))


def wilson_interval(successes: int, total: int, confidence: float = 0.95) -> Tuple[float, float]:
    if total <= 0:
        raise ValueError("total must be positive")
    z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
    p = successes / total
    denom = 1.0 + z * z / total
    mid = (p + z * z / (2 * total)) / denom
    half = z * math.sqrt(p * (1 - p) / total + z * z / (4 * total * total)) / denom
    return max(0.0, mid - half), min(1.0, mid + half)


@dataclass
class RateEstimate:
    n: int
    hits: int
    roots: int
    rate: float
    lo: float
    hi: float


def has_forbidden_cycle(g, u: int) -> bool:
    """Whether some four-cycle rooted at ``u`` uses a long-range edge."""
    for c in four_cycles_search(g.view(), u):
        for a, b in ((c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])):
            if g.kind(a, b) is EdgeKind.LONG_RANGE:
                return True
    return False


def estimate_forbidden_cycle_rate(n: int, seeds: Iterable[int], sample_roots: Optional[int] = None,
                                  graphs=None, confidence: float = 0.95) -> RateEstimate:
    """Fraction of roots whose four-cycle set contains a long-range edge.

    ``sample_roots`` roots are drawn per graph without replacement (all roots
    when ``None``). ``graphs`` overrides generation, e.g. with a pure torus.
    """
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    hits = total = 0
    seeds = list(seeds)
    if graphs is None:
        graphs = [generate_utsw(n, s) for s in seeds]
    for s, g in zip(seeds, graphs):
        size = n * n
        if sample_roots is None or sample_roots >= size:
            roots = range(size)
        else:
            roots = np.random.default_rng([s, 3]).choice(size, sample_roots, replace=False).tolist()
        for u in roots:
            hits += has_forbidden_cycle(g, u)
            total += 1
    lo, hi = wilson_interval(hits, total, confidence)
    return RateEstimate(n=n, hits=hits, roots=total, rate=hits / total, lo=lo, hi=hi)


def run_eu_experiment(cfg: ExperimentConfig) -> List[dict]:
    cfg.validate()
    rows = []
    for n in sorted(cfg.n_list):
        est = estimate_forbidden_cycle_rate(n, cfg.seed_list(), min(cfg.trials, n * n))
        row = asdict(est)
        row["bound"] = theoretical_eu_bound(n)
        rows.append(row)
    return rows


def run_experiment(name: str, cfg: ExperimentConfig) -> List[dict]:
    runners = {
        "detection": run_detection_experiment,
        "cycles": run_cycle_size_experiment,
        "routing": run_routing_experiment,
        "zbounds": run_zbounds_experiment,
        "eu": run_eu_experiment,
    }
    if name not in runners:
        raise ValueError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")
    return runners[name](cfg)


def format_rows(name: str, rows: List[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"format": FORMAT_VERSION, "experiment": name, "rows": rows}, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: repr(v) if isinstance(v, float) else v for k, v in r.items()})
    return buf.getvalue()
