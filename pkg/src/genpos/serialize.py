"""Bit-exact file formats.

Point sets travel as CSV with rationals serialized "p/q" (plain "p" for
integers) under a header x1..xd; hyperplanes as JSON records
{"normal": [...], "offset": ...} in canonical integer form.  Reading back
reproduces the exact same values.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .arrangement import Arrangement
from .census import CensusProfile
from .geometry import Flat, Hyperplane, PointSet
from .independence import BetaRunReport
from .pipelines import DichotomyWitness


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def points_to_csv(ps: PointSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"x{i + 1}" for i in range(ps.dim)])
    for p in ps.points:
        writer.writerow([format_rational(c) for c in p])
    return buf.getvalue()


def points_from_csv(text: str, ell: int | None = None) -> PointSet:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise ValueError("empty points file")
    header = rows[0]
    dim = len(header)
    if header != [f"x{i + 1}" for i in range(dim)]:
        raise ValueError(f"bad header {header}; expected x1..x{dim}")
    pts = [tuple(parse_rational(c) for c in row) for row in rows[1:] if row]
    return PointSet(dim=dim, points=tuple(pts), ell=ell)


def write_points(ps: PointSet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(points_to_csv(ps))


def read_points(path, ell: int | None = None) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return points_from_csv(fh.read(), ell=ell)


def hyperplane_to_dict(h: Hyperplane) -> dict:
    return {"normal": list(h.normal), "offset": h.offset}


def hyperplane_from_dict(d: dict) -> Hyperplane:
    return Hyperplane.from_coeffs(d["normal"], d["offset"])


def hyperplanes_to_json(hps) -> str:
    return json.dumps([hyperplane_to_dict(h) for h in hps], indent=0)


def hyperplanes_from_json(text: str) -> list[Hyperplane]:
    return [hyperplane_from_dict(d) for d in json.loads(text)]


def write_hyperplanes(hps, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(hyperplanes_to_json(hps))


def read_hyperplanes(path) -> list[Hyperplane]:
    with open(path, encoding="utf-8") as fh:
        return hyperplanes_from_json(fh.read())


def flat_to_dict(f: Flat) -> dict:
    return {
        "dim_flat": f.dim_flat,
        "basepoint": [format_rational(c) for c in f.basepoint],
        "directions": [
            [format_rational(c) for c in row] for row in f.directions
        ],
    }


def arrangement_to_dict(arr: Arrangement) -> dict:
    return {
        "dim": arr.dim,
        "hyperplanes": [hyperplane_to_dict(h) for h in arr.hyperplanes],
        "cells": [
            {
                "signs": "".join("+" if s > 0 else "-" for s in c.sign_vector),
                "facet_support": sorted(c.facet_support),
                "bounded": c.bounded,
                "simplicial": c.simplicial,
                "witness": [format_rational(x) for x in c.witness],
            }
            for c in arr.cells
        ],
    }


def profile_to_dict(profile: CensusProfile) -> dict:
    return {
        "hyperplane_rich": {str(k): v for k, v in profile.hyperplane_rich.items()},
        "subflat_rich": {str(k): v for k, v in profile.subflat_rich.items()},
        "pencils": [
            {"flat": flat_to_dict(flat), "profile": {str(r): c for r, c in prof.items()}}
            for flat, prof in profile.pencils
        ],
        "tuple_counts": {
            "type1": profile.tuple_counts.type1,
            "type2": profile.tuple_counts.type2,
            "type3": profile.tuple_counts.type3,
            "total": profile.tuple_counts.total,
        },
    }


def witness_to_dict(w: DichotomyWitness) -> dict:
    return {
        "kind": w.kind,
        "indices": list(w.indices),
        "hyperplane": hyperplane_to_dict(w.hyperplane) if w.hyperplane else None,
        "guaranteed": w.guaranteed,
    }


BETA_LOG_HEADER = [
    "seed",
    "n",
    "d",
    "p",
    "size_sample",
    "size_cleaned",
    "size_independent",
    "size_final",
    "cleanup_removals",
]


def beta_report_row(report: BetaRunReport, n: int, d: int) -> list:
    return [
        report.seed,
        n,
        d,
        repr(report.p_used),
        report.size_sample,
        report.size_cleaned,
        report.size_independent,
        report.size_final,
        report.cleanup_removals,
    ]
