"""Command-line interface.

Subcommands: generate, census, arrange, independent, color, genpos,
ramsey, hj, experiment, fit.  Exit codes: 0 success, 2 validation
failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import datasets
from .arrangement import enumerate_cells, is_independent_set
from .census import (
    classify_tuples,
    count_cohyperplanar_tuples,
    naive_cohyperplanar_count,
    rich_flat_profile,
)
from .experiments import (
    ValidationError,
    VerificationError,
    fit_trend,
    parse_config_text,
    records_to_csv,
    run_experiment,
)
from .geometry import is_general_position
from .halesjewett import build_projected_grid, enumerate_lines, max_linefree_subset
from .independence import coloring_is_proper, greedy_coloring, randomized_beta_procedure
from .pipelines import genpos_or_hyperplane, large_genpos_subset, validate_witness
from .serialize import (
    BETA_LOG_HEADER,
    beta_report_row,
    arrangement_to_dict,
    hyperplanes_to_json,
    points_to_csv,
    profile_to_dict,
    read_hyperplanes,
    read_points,
    witness_to_dict,
    write_hyperplanes,
    write_points,
)

POINT_FAMILIES = {"grid", "random_rational", "simplex", "projected_grid"}
HYPERPLANE_FAMILIES = {"parallel", "dual_of_points"}


def _write_or_print(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_generate(args) -> int:
    family, n, d, seed = args.family, args.n, args.d, args.seed
    if family == "grid":
        instance = datasets.square_grid(n, d)
    elif family == "random_rational":
        instance = datasets.random_rational_points(n, d, seed)
    elif family == "simplex":
        instance = datasets.simplex_points(d)
    elif family == "projected_grid":
        from .experiments import _projected_grid

        instance = _projected_grid(n, d, seed)
    elif family == "parallel":
        instance = datasets.parallel_hyperplanes(n, d)
    elif family == "dual_of_points":
        instance = datasets.dual_arrangement_of_points(n, d, seed)
    else:
        raise ValidationError(f"unknown family {family!r}")
    if family in POINT_FAMILIES:
        if args.out:
            write_points(instance, args.out)
        else:
            print(points_to_csv(instance), end="")
    else:
        if args.out:
            write_hyperplanes(instance, args.out)
        else:
            print(hyperplanes_to_json(instance))
    return 0


def _cmd_census(args) -> int:
    ps = read_points(args.points)
    total = count_cohyperplanar_tuples(ps)
    if args.verify and naive_cohyperplanar_count(ps) != total:
        raise VerificationError("census disagrees with naive enumeration")
    h_profile = rich_flat_profile(ps, ps.dim - 1)
    s_profile = rich_flat_profile(ps, ps.dim - 2) if ps.dim >= 2 else {}
    print("k,h_k,s_k")
    for k in sorted(set(h_profile) | set(s_profile)):
        print(f"{k},{h_profile.get(k, 0)},{s_profile.get(k, 0)}")
    if ps.dim >= 3:
        profile = classify_tuples(ps, Fraction(args.gamma))
        c = profile.tuple_counts
        print(f"type1,{c.type1}")
        print(f"type2,{c.type2}")
        print(f"type3,{c.type3}")
        print(f"total,{c.total}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(profile_to_dict(profile), fh, indent=2)
    else:
        print(f"total,{total}")
    return 0


def _cmd_arrange(args) -> int:
    arr = enumerate_cells(read_hyperplanes(args.hyperplanes))
    n, d = len(arr.hyperplanes), arr.dim
    cells = len(arr.cells)
    bounded = sum(c.bounded for c in arr.cells)
    simplicial = sum(c.simplicial for c in arr.cells)
    if args.verify and n >= 2 and not cells < d * n**d:
        raise VerificationError("cell count exceeds d*n^d")
    print(f"hyperplanes,{n}")
    print(f"dim,{d}")
    print(f"cells,{cells}")
    print(f"bounded_cells,{bounded}")
    print(f"unbounded_cells,{cells - bounded}")
    print(f"simplicial_cells,{simplicial}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(arrangement_to_dict(arr), fh, indent=2)
    return 0


def _cmd_independent(args) -> int:
    hps = read_hyperplanes(args.hyperplanes)
    arr = enumerate_cells(hps)
    selected, report = randomized_beta_procedure(arr, args.seed)
    if args.verify and not is_independent_set(arr, selected):
        raise VerificationError("returned set is not independent")
    print(f"independent_set,{' '.join(map(str, selected))}")
    print(f"size,{len(selected)}")
    print(f"p_used,{report.p_used!r}")
    if args.log:
        row = beta_report_row(report, len(hps), arr.dim)
        new = not _file_exists(args.log)
        with open(args.log, "a", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            if new:
                writer.writerow(BETA_LOG_HEADER)
            writer.writerow(row)
    return 0


def _file_exists(path) -> bool:
    try:
        with open(path, encoding="utf-8"):
            return True
    except OSError:
        return False


def _cmd_color(args) -> int:
    arr = enumerate_cells(read_hyperplanes(args.hyperplanes))
    colors = greedy_coloring(arr)
    if args.verify and not coloring_is_proper(arr, colors):
        raise VerificationError("coloring left a monochromatic cell")
    print(f"colors,{len(set(colors))}")
    print(f"assignment,{' '.join(map(str, colors))}")
    return 0


def _cmd_genpos(args) -> int:
    ps = read_points(args.points)
    subset = large_genpos_subset(ps, args.seed)
    if args.verify and not is_general_position(ps.subset(subset)):
        raise VerificationError("subset not in general position")
    payload = {"indices": subset, "size": len(subset)}
    _write_or_print(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_ramsey(args) -> int:
    ps = read_points(args.points)
    witness = genpos_or_hyperplane(ps, args.q, seed=args.seed)
    if args.verify and not validate_witness(ps, args.q, witness):
        raise VerificationError("dichotomy witness failed validation")
    _write_or_print(json.dumps(witness_to_dict(witness), indent=2), args.out)
    return 0


def _cmd_hj(args) -> int:
    if args.hj_command == "lines":
        lines = enumerate_lines(args.k, args.m)
        print(f"lines,{len(lines)}")
    elif args.hj_command == "linefree":
        result = max_linefree_subset(args.k, args.m, budget=args.budget)
        print(f"size,{result.size}")
        print(f"exact,{int(result.exact)}")
        for w in result.witness:
            print(" ".join(map(str, w)))
    else:  # project
        ps = build_projected_grid(args.k, args.m, args.d, seed=args.seed)
        _write_or_print(points_to_csv(ps), args.out)
    return 0


def _cmd_experiment(args) -> int:
    with open(args.config, encoding="utf-8") as fh:
        cfg = parse_config_text(fh.read())
    records = run_experiment(cfg, verify=args.verify, jobs=args.jobs)
    _write_or_print(records_to_csv(records), args.out)
    return 0


def _cmd_fit(args) -> int:
    with open(args.records, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    samples = [
        (int(r["n"]), float(Fraction(r["value"])))
        for r in rows
        if r["metric"] == args.metric and (args.op is None or r["op"] == args.op)
    ]
    exponent, constant, residual = fit_trend(samples, args.model)
    print(f"exponent,{exponent!r}")
    print(f"constant,{constant!r}")
    print(f"residual,{residual!r}")
    return 0


def _add_common(sub, out=True):
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--verify", action="store_true")
    sub.add_argument("--jobs", type=int, default=1)
    if out:
        sub.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpos",
        description=(
            "Exact censuses, arrangements, independent hyperplane sets and "
            "general-position subset extraction."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("generate", help="emit a dataset family instance")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_generate)

    p = subs.add_parser("census", help="rich-flat profiles and tuple counts")
    p.add_argument("points")
    p.add_argument("--gamma", default="1/2")
    _add_common(p)
    p.set_defaults(fn=_cmd_census)

    p = subs.add_parser("arrange", help="cell statistics of an arrangement")
    p.add_argument("hyperplanes")
    _add_common(p)
    p.set_defaults(fn=_cmd_arrange)

    p = subs.add_parser("independent", help="extract an independent hyperplane set")
    p.add_argument("hyperplanes")
    p.add_argument("--log", default=None, help="append a report row to this CSV")
    _add_common(p)
    p.set_defaults(fn=_cmd_independent)

    p = subs.add_parser("color", help="color hyperplanes, no monochromatic cell")
    p.add_argument("hyperplanes")
    _add_common(p)
    p.set_defaults(fn=_cmd_color)

    p = subs.add_parser("genpos", help="large general-position subset")
    p.add_argument("points")
    _add_common(p)
    p.set_defaults(fn=_cmd_genpos)

    p = subs.add_parser("ramsey", help="general-position-or-hyperplane dichotomy")
    p.add_argument("points")
    p.add_argument("--q", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=_cmd_ramsey)

    p = subs.add_parser("hj", help="combinatorial lines and projected grids")
    hj_subs = p.add_subparsers(dest="hj_command", required=True)
    q = hj_subs.add_parser("lines")
    q.add_argument("k", type=int)
    q.add_argument("m", type=int)
    _add_common(q)
    q.set_defaults(fn=_cmd_hj)
    q = hj_subs.add_parser("linefree")
    q.add_argument("k", type=int)
    q.add_argument("m", type=int)
    q.add_argument("--budget", type=int, default=None)
    _add_common(q)
    q.set_defaults(fn=_cmd_hj)
    q = hj_subs.add_parser("project")
    q.add_argument("k", type=int)
    q.add_argument("m", type=int)
    q.add_argument("d", type=int)
    _add_common(q)
    q.set_defaults(fn=_cmd_hj)

    p = subs.add_parser("experiment", help="run a config of seeded experiments")
    p.add_argument("config")
    _add_common(p)
    p.set_defaults(fn=_cmd_experiment)

    p = subs.add_parser("fit", help="log-log trend fit over experiment records")
    p.add_argument("records")
    p.add_argument("--metric", required=True)
    p.add_argument("--model", choices=["power", "power_log"], required=True)
    p.add_argument("--op", default=None)
    _add_common(p)
    p.set_defaults(fn=_cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
