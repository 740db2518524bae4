"""JSON and CSV serialization for ensembles, line sets and arrays."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any

import numpy as np

from .golden import GoldenScalar
from .octonions import LineSet
from .sic import SicEnsemble


def ensemble_to_dict(e: SicEnsemble) -> dict[str, Any]:
    """Projectors as row-major interleaved ``[re, im, re, im, ...]`` lists."""
    projs = []
    for p in e.projectors:
        flat = np.asarray(p, dtype=complex).ravel()
        projs.append([float(x) for pair in zip(flat.real, flat.imag) for x in pair])
    return {"dimension": e.d, "provenance": e.provenance, "labels": list(e.labels), "projectors": projs}


def ensemble_from_dict(data: dict[str, Any]) -> SicEnsemble:
    d = int(data["dimension"])
    projs = []
    for flat in data["projectors"]:
        arr = np.asarray(flat, dtype=float)
        if arr.size != 2 * d * d:
            raise ValueError(f"projector has {arr.size} reals, expected {2 * d * d}")
        projs.append((arr[0::2] + 1j * arr[1::2]).reshape(d, d))
    return SicEnsemble(d, projs, data["provenance"], labels=list(data.get("labels", [])))


def write_ensemble(e: SicEnsemble, path) -> None:
    with open(path, "w") as fh:
        json.dump(ensemble_to_dict(e), fh)


def read_ensemble(path) -> SicEnsemble:
    with open(path) as fh:
        return ensemble_from_dict(json.load(fh))


def _exact_entry(x) -> Any:
    if isinstance(x, GoldenScalar):
        return x.to_pair()
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    return float(x)


def _parse_entry(x) -> Any:
    if isinstance(x, list):
        return GoldenScalar.from_pair(x)
    if isinstance(x, str):
        return Fraction(x)
    return x


def lineset_to_dict(lines: LineSet) -> dict[str, Any]:
    out: dict[str, Any] = {
        "dimension": lines.dimension,
        "vectors": [[_exact_entry(x) for x in v] for v in lines.vectors],
        "cosine_squared": str(lines.cosine_squared),
        "cosine": lines.cosine,
    }
    if lines.tags:
        out["tags"] = [list(t) if isinstance(t, tuple) else t for t in lines.tags]
    return out


def lineset_from_dict(data: dict[str, Any]) -> LineSet:
    vecs = tuple(tuple(_parse_entry(x) for x in v) for v in data["vectors"])
    tags = tuple(tuple(t) if isinstance(t, list) else t for t in data.get("tags", ()))
    return LineSet(int(data["dimension"]), vecs, Fraction(data["cosine_squared"]), tags=tags)


def lineset_to_csv(lines: LineSet) -> str:
    """One row per vector, float entries."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{k}" for k in range(lines.dimension)])
    for v in lines.vectors:
        w.writerow([repr(float(x)) for x in v])
    return buf.getvalue()


def array_to_json(a) -> list:
    """Nested lists; booleans stay booleans, floats round-trip exactly."""
    return np.asarray(a).tolist()


def matrix_to_csv(a) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(a).tolist():
        w.writerow([int(x) if isinstance(x, bool) else x for x in row])
    return buf.getvalue()
