"""Batch experiment harness: seeded dataset families crossed with named
operations, reproducible CSV records, and log-log trend fits.

Records are deterministic given the config; the CSV schema is fixed as
family,n,d,seed,op,metric,value (+ a trailing timestamp column excluded
from reproducibility comparisons).  Runtimes live on the in-memory
records, not in the CSV.
"""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction

from . import datasets
from .arrangement import enumerate_cells, is_independent_set
from .census import (
    classify_tuples,
    count_cohyperplanar_tuples,
    max_hyperplane_richness,
    naive_cohyperplanar_count,
    spanned_hyperplanes,
)
from .geometry import PointSet, is_general_position
from .hypergraphs import spencer_bound_ceil
from .independence import coloring_is_proper, greedy_coloring, randomized_beta_procedure
from .pipelines import exact_alpha, large_genpos_subset
from .serialize import format_rational


class ValidationError(ValueError):
    """Bad config: unknown key, unknown family/op, empty lists."""


class VerificationError(RuntimeError):
    """A recorded measurement failed its independent recheck."""


POINT_FAMILIES = {
    "grid": lambda n, d, seed: datasets.square_grid(n, d),
    "random_rational": datasets.random_rational_points,
    "simplex": lambda n, d, seed: datasets.simplex_points(d),
    "projected_grid": None,  # built below, needs k(d) convention
}
HYPERPLANE_FAMILIES = {
    "parallel": lambda n, d, seed: datasets.parallel_hyperplanes(n, d),
    "dual_of_points": datasets.dual_arrangement_of_points,
}


def _projected_grid(n, d, seed):
    k = {2: 3, 3: 2}.get(d)
    if k is None:
        raise ValidationError("projected_grid supports dims 2 and 3")
    m = round(math.log(n, k))
    if k**m != n:
        raise ValidationError(f"n={n} is not a power of {k}")
    from .halesjewett import build_projected_grid

    return build_projected_grid(k, m, d, seed)


POINT_FAMILIES["projected_grid"] = _projected_grid

FAMILIES = set(POINT_FAMILIES) | set(HYPERPLANE_FAMILIES)


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    operation: str
    sizes: tuple[int, ...]
    dims: tuple[int, ...]
    seeds: tuple[int, ...]
    gamma: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if self.operation not in OPERATIONS:
            raise ValidationError(f"unknown operation {self.operation!r}")
        if not self.sizes or not self.dims or not self.seeds:
            raise ValidationError("sizes, dims and seeds must be nonempty")
        if not (0 < self.gamma < 1):
            raise ValidationError("gamma must be in (0, 1)")
        point_op = OPERATIONS[self.operation][0] == "point"
        point_family = self.family in POINT_FAMILIES
        if point_op != point_family:
            raise ValidationError(
                f"operation {self.operation!r} needs a "
                f"{'point' if point_op else 'hyperplane'} family"
            )


CONFIG_KEYS = {"family", "operation", "sizes", "dims", "seeds", "gamma"}


def parse_config_text(text: str) -> ExperimentConfig:
    """Strict flat key=value format; unknown keys are rejected."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"line {lineno}: expected key = value")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ValidationError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValidationError(f"line {lineno}: duplicate key {key!r}")
        values[key] = val.strip()
    missing = {"family", "operation", "sizes", "dims", "seeds"} - set(values)
    if missing:
        raise ValidationError(f"missing keys: {sorted(missing)}")

    def int_list(s):
        try:
            return tuple(int(x) for x in s.split(",") if x.strip())
        except ValueError as exc:
            raise ValidationError(f"bad integer list {s!r}") from exc

    return ExperimentConfig(
        family=values["family"],
        operation=values["operation"],
        sizes=int_list(values["sizes"]),
        dims=int_list(values["dims"]),
        seeds=int_list(values["seeds"]),
        gamma=Fraction(values.get("gamma", "1/2")),
    )


@dataclass(frozen=True)
class ExperimentRecord:
    family: str
    n: int
    d: int
    seed: int
    op: str
    metrics: tuple[tuple[str, object], ...]
    runtime_s: float


def _op_census(instance: PointSet, seed, gamma, verify):
    metrics = [
        ("cohyperplanar_tuples", count_cohyperplanar_tuples(instance)),
        ("spanned_hyperplanes", len(spanned_hyperplanes(instance))),
        ("max_richness", max_hyperplane_richness(instance)),
    ]
    if instance.dim >= 3:
        counts = classify_tuples(instance, gamma).tuple_counts
        metrics += [
            ("type1", counts.type1),
            ("type2", counts.type2),
            ("type3", counts.type3),
        ]
    if verify and naive_cohyperplanar_count(instance) != metrics[0][1]:
        raise VerificationError("census disagrees with naive enumeration")
    return metrics


def _op_arrange(instance, seed, gamma, verify):
    arr = enumerate_cells(instance)
    n, d = len(arr.hyperplanes), arr.dim
    cells = len(arr.cells)
    metrics = [
        ("cells", cells),
        ("bounded_cells", sum(c.bounded for c in arr.cells)),
        ("simplicial_cells", sum(c.simplicial for c in arr.cells)),
    ]
    if verify and n >= 2 and not cells < d * n**d:
        raise VerificationError("cell count bound violated")
    return metrics


def _op_independent(instance, seed, gamma, verify):
    arr = enumerate_cells(instance)
    selected, report = randomized_beta_procedure(arr, seed)
    if verify and not is_independent_set(arr, selected):
        raise VerificationError("returned set is not independent")
    return [
        ("p_used", report.p_used),
        ("size_sample", report.size_sample),
        ("size_cleaned", report.size_cleaned),
        ("size_independent", report.size_independent),
        ("size_final", report.size_final),
        ("cleanup_removals", report.cleanup_removals),
    ]


def _op_color(instance, seed, gamma, verify):
    arr = enumerate_cells(instance)
    colors = greedy_coloring(arr)
    if verify and not coloring_is_proper(arr, colors):
        raise VerificationError("coloring left a monochromatic cell")
    return [("colors", len(set(colors)))]


def _op_genpos(instance: PointSet, seed, gamma, verify):
    m = count_cohyperplanar_tuples(instance)
    subset = large_genpos_subset(instance, seed)
    bound = (
        spencer_bound_ceil(len(instance), m, instance.dim + 1)
        if m
        else len(instance)
    )
    if verify:
        if not is_general_position(instance.subset(subset)):
            raise VerificationError("subset not in general position")
        if len(subset) < bound:
            raise VerificationError("subset below the guaranteed bound")
    return [("tuples", m), ("bound", bound), ("subset_size", len(subset))]


def _op_alpha(instance: PointSet, seed, gamma, verify):
    size, witness = exact_alpha(instance)
    if verify and not is_general_position(instance.subset(witness)):
        raise VerificationError("alpha witness not in general position")
    return [("alpha", size)]


OPERATIONS = {
    "census": ("point", _op_census),
    "arrange": ("hyperplane", _op_arrange),
    "independent": ("hyperplane", _op_independent),
    "color": ("hyperplane", _op_color),
    "genpos": ("point", _op_genpos),
    "alpha": ("point", _op_alpha),
}


def _build_instance(family: str, n: int, d: int, seed: int):
    builder = POINT_FAMILIES.get(family) or HYPERPLANE_FAMILIES.get(family)
    return builder(n, d, seed)


def _run_one(args):
    cfg, n, d, seed, verify = args
    start = time.perf_counter()
    instance = _build_instance(cfg.family, n, d, seed)
    _kind, fn = OPERATIONS[cfg.operation]
    metrics = fn(instance, seed, cfg.gamma, verify)
    return ExperimentRecord(
        family=cfg.family,
        n=n,
        d=d,
        seed=seed,
        op=cfg.operation,
        metrics=tuple(metrics),
        runtime_s=time.perf_counter() - start,
    )


def run_experiment(
    cfg: ExperimentConfig, verify: bool = False, jobs: int = 1
) -> list[ExperimentRecord]:
    """One record per (size, dim, seed), in deterministic order."""
    tasks = [
        (cfg, n, d, seed, verify)
        for n in cfg.sizes
        for d in cfg.dims
        for seed in cfg.seeds
    ]
    if jobs <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))


def _format_value(v) -> str:
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


CSV_HEADER = ["family", "n", "d", "seed", "op", "metric", "value", "timestamp"]


def records_to_csv(records, timestamp: str | None = None) -> str:
    """One row per metric.  The timestamp column is identical across the
    run and is excluded from reproducibility comparisons."""
    stamp = timestamp or datetime.now(timezone.utc).isoformat()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        for metric, value in rec.metrics:
            writer.writerow(
                [rec.family, rec.n, rec.d, rec.seed, rec.op, metric,
                 _format_value(value), stamp]
            )
    return buf.getvalue()


def strip_timestamps(csv_text: str) -> str:
    """Drop the timestamp column, for byte-exact comparisons."""
    rows = list(csv.reader(io.StringIO(csv_text)))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row[:-1])
    return buf.getvalue()


def fit_trend(samples, model: str) -> tuple[float, float, float]:
    """Least-squares fit on log-transformed data.

    model "power" fits y = c * n^e; model "power_log" fits
    y = c * (n log2 n)^e.  Returns (exponent, constant, rms log residual).
    """
    pts = [(float(n), float(y)) for n, y in samples]
    if len(pts) < 3:
        raise ValueError("need at least 3 samples")
    if any(y <= 0 or n <= 1 for n, y in pts):
        raise ValueError("samples must have n > 1 and positive measurements")
    if model == "power":
        xs = [math.log(n) for n, _ in pts]
    elif model == "power_log":
        xs = [math.log(n * math.log2(n)) for n, _ in pts]
    else:
        raise ValueError(f"unknown model {model!r}")
    ys = [math.log(y) for _, y in pts]
    k = len(xs)
    mean_x = sum(xs) / k
    mean_y = sum(ys) / k
    var = sum((x - mean_x) ** 2 for x in xs)
    if var == 0:
        raise ValueError("samples span a single size; cannot fit")
    exponent = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / var
    intercept = mean_y - exponent * mean_x
    residual = math.sqrt(
        sum((y - (exponent * x + intercept)) ** 2 for x, y in zip(xs, ys)) / k
    )
    return exponent, math.exp(intercept), residual
