"""Command-line interface: build, verify, report-all, entropy-search, incidence, bounds, export.

Exit statuses: 0 all checks pass, 1 a check failed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from . import duality, families, io, search, sic
from .certificate import Certificate, format_real

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
SEED_ENV = "SPORADIC_SICS_SEED"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: str | None = None
    tolerance: float = 1e-10
    seed: int = 0
    restarts: int = 64
    format: str = "json"
    output: str | None = None

    def __post_init__(self) -> None:
        if self.family is not None and self.family not in families.FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        if not self.tolerance > 0:
            raise UsageError("tolerance must be > 0")
        if self.restarts < 1:
            raise UsageError("restarts must be >= 1")
        if self.format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.format!r}")

    def public(self) -> dict[str, Any]:
        """Config as recorded in documents (no output path)."""
        out = asdict(self)
        out.pop("output")
        out["tolerance"] = format_real(self.tolerance)
        return out


# -- rendering ------------------------------------------------------------------


def _cert_rows(cert: Certificate) -> list[list[str]]:
    return [
        [cert.subject, c.name, "pass" if c.passed else "FAIL", format_real(c.max_deviation), format_real(c.tolerance)]
        for c in cert.checks
    ]


def render_certificates(certs: list[Certificate], config: RunConfig, subject: str | None = None) -> str:
    fmt = config.format
    if fmt == "json":
        if subject is None and len(certs) == 1:
            doc = certs[0].to_dict(config.public())
        else:
            doc = {
                "subject": subject or "report",
                "config": config.public(),
                "sections": [c.to_dict() for c in certs],
                "overall": all(c.overall for c in certs),
            }
        return json.dumps(doc, indent=2) + "\n"
    rows = [r for c in certs for r in _cert_rows(c)]
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["subject", "name", "passed", "max_deviation", "tolerance"])
        w.writerows(rows)
        return buf.getvalue()
    return _table(["subject", "check", "result", "max deviation", "tolerance"], rows) + "\n" + "\n".join(
        f"{c.subject}: {'PASS' if c.overall else 'FAIL'}" for c in certs
    ) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
    line = lambda r: "  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([line(header), line(["-" * w for w in widths])] + [line(r) for r in rows])


def _emit(text: str, config: RunConfig) -> None:
    if config.output:
        with open(config.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------


def run_verify(config: RunConfig) -> tuple[Certificate, int]:
    if config.family is None:
        raise UsageError("verify needs --family")
    cert = families.verify_family(config.family, config.tolerance)
    _emit(render_certificates([cert], config), config)
    return cert, EXIT_OK if cert.overall else EXIT_FAIL


def run_report_all(config: RunConfig) -> tuple[list[Certificate], int]:
    certs = []
    for fam in families.FAMILIES:
        try:
            certs.append(families.verify_family(fam, config.tolerance))
        except Exception as exc:  # a broken family must not abort the others
            cert = Certificate(fam)
            cert.require(f"construction raised {type(exc).__name__}: {exc}", False)
            certs.append(cert)
    _emit(render_certificates(certs, config, subject="report-all"), config)
    return certs, EXIT_OK if all(c.overall for c in certs) else EXIT_FAIL


def _dual_states(family: str) -> list[np.ndarray]:
    if family == "qubit-plus":
        return sic.qubit_sic(-1).vectors()
    if family == "qubit-minus":
        return sic.qubit_sic(1).vectors()
    if family in ("hesse-coxeter", "hesse-orbit"):
        return duality.mub_dual().states
    if family == "hoggar-plus":
        return sic.hoggar_sic(-1).vectors()
    return sic.hoggar_sic(1).vectors()


def entropy_search_report(config: RunConfig) -> dict[str, Any]:
    family = config.family or "qubit-plus"
    if family not in families.SIC_FAMILIES:
        raise UsageError(f"entropy-search needs a SIC family, got {family!r}")
    e = families.build_sic(family)
    maxfev = 4000 if e.d > 3 else None
    found = search.entropy_min_search(e, restarts=config.restarts, seed=config.seed, maxfev=maxfev)
    summary = search.summarize(found)
    dual = _dual_states(family)
    fids = sic.fidelity_matrix(summary.minimizers, dual)
    matches = [
        {"dual_index": int(np.argmax(row)), "fidelity": format_real(float(np.max(row)))} for row in fids
    ]
    return {
        "subject": f"entropy-search:{family}",
        "config": config.public(),
        "minimum_entropy_bits": format_real(summary.minimum),
        "local_minima": [format_real(h) for _, h in found],
        "minimizer_count": len(summary.minimizers),
        "matched_dual_states": matches,
        "distinct_dual_states_matched": len({m["dual_index"] for m in matches}),
    }


def _render_search(rep: dict[str, Any], config: RunConfig) -> str:
    if config.format == "json":
        return json.dumps(rep, indent=2) + "\n"
    rows = [[str(k), m["dual_index"], m["fidelity"]] for k, m in enumerate(rep["matched_dual_states"])]
    if config.format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["minimizer", "dual_index", "fidelity"])
        w.writerows(rows)
        return buf.getvalue()
    head = (
        f"{rep['subject']}\n"
        f"minimum entropy (bits): {rep['minimum_entropy_bits']}\n"
        f"minimizers: {rep['minimizer_count']}, distinct dual states matched: "
        f"{rep['distinct_dual_states_matched']}\n"
    )
    return head + _table(["minimizer", "dual state", "fidelity"], rows) + "\n"


def incidence_report(config: RunConfig) -> tuple[dict[str, Any], str]:
    family = config.family or "mub-dual"
    if family == "mub-dual":
        inc = duality.sic_mub_incidence()
        summary = {
            "subject": "incidence:mub-dual",
            "per_sic_state": inc.counts[0],
            "per_mub_state": inc.counts[1],
            "total_orthogonal_pairs": inc.total,
            "matrix": io.array_to_json(inc.matrix.astype(int)),
        }
        rows = [["SIC states", "9", str(inc.counts[0])], ["MUB states", "12", str(inc.counts[1])],
                ["orthogonal pairs", "", str(inc.total)]]  # fmt: skip
    elif family == "twin-incidence":
        twin = duality.twin_incidence()
        rc, cc = set(twin.row_counts), set(twin.col_counts)
        summary = {
            "subject": "incidence:twin-incidence",
            "row_regularity": sorted(rc),
            "column_regularity": sorted(cc),
            "total_orthogonal_pairs": int(twin.zero_pattern.sum()),
            "matrix": io.array_to_json(twin.zero_pattern.astype(int)),
        }
        rows = [["plus states", "64", ",".join(map(str, sorted(rc)))],
                ["minus states", "64", ",".join(map(str, sorted(cc)))],
                ["orthogonal pairs", "", str(int(twin.zero_pattern.sum()))]]  # fmt: skip
    else:
        raise UsageError(f"incidence needs mub-dual or twin-incidence, got {family!r}")
    if config.format == "json":
        return summary, json.dumps(summary) + "\n"
    if config.format == "csv":
        return summary, io.matrix_to_csv(summary["matrix"])
    return summary, _table(["structure", "size", "orthogonal count"], rows) + "\n"


def bounds_report(config: RunConfig) -> str:
    table = families.bounds_table()
    if config.format == "json":
        return json.dumps(table, indent=2) + "\n"
    rows = [[group, key, str(val)] for group, vals in table.items() if isinstance(vals, dict) for key, val in vals.items()]
    rows.append(["fibonacci_lucas", "k=1..5", ", ".join(map(str, table["fibonacci_lucas"]))])
    if config.format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "argument", "value"])
        w.writerows(rows)
        return buf.getvalue()
    return _table(["quantity", "argument", "value"], rows) + "\n"


def export_text(config: RunConfig) -> str:
    family = config.family
    if family is None:
        raise UsageError("export needs --family")
    obj = families.build(family)
    if isinstance(obj, sic.SicEnsemble):
        if config.format == "csv":
            raise UsageError("ensembles export as JSON only")
        return json.dumps(io.ensemble_to_dict(obj)) + "\n"
    if family in ("fano-28", "so8-28", "icosahedron", "trine-r2"):
        if config.format == "csv":
            return io.lineset_to_csv(obj)
        return json.dumps(io.lineset_to_dict(obj)) + "\n"
    if family == "mub-dual":
        data = {"probabilities": io.array_to_json(np.array(obj.probabilities)),
                "bases": obj.bases}  # fmt: skip
        if config.format == "csv":
            return io.matrix_to_csv(np.array(obj.probabilities))
        return json.dumps(data) + "\n"
    if family == "twin-incidence":
        if config.format == "csv":
            return io.matrix_to_csv(obj.zero_pattern.astype(int))
        return json.dumps({"zero_pattern": io.array_to_json(obj.zero_pattern.astype(int))}) + "\n"
    return bounds_report(config)


def build_summary(config: RunConfig) -> str:
    family = config.family
    if family is None:
        raise UsageError("build needs --family")
    obj = families.build(family)
    if isinstance(obj, sic.SicEnsemble):
        info = {"family": family, "dimension": obj.d, "members": len(obj), "provenance": obj.provenance}
    elif family == "mub-dual":
        info = {"family": family, "states": len(obj.states), "bases": len(obj.bases)}
    elif family == "twin-incidence":
        info = {"family": family, "shape": list(obj.zero_pattern.shape), "zeros": int(obj.zero_pattern.sum())}
    elif family == "bounds":
        info = {"family": family, **obj}
    else:
        info = {"family": family, "dimension": obj.dimension, "lines": len(obj),
                "cosine_squared": str(obj.cosine_squared)}  # fmt: skip
    if config.format == "json":
        return json.dumps(info) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in info.items()) + "\n"


# -- argument parsing -------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sporadic-sics", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=families.FAMILIES)
    common.add_argument("--tolerance", type=float, default=1e-10)
    common.add_argument("--seed", type=int, default=None, help=f"default 0, or ${SEED_ENV}")
    common.add_argument("--restarts", type=int, default=64)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--output", default=None)
    for name, help_ in (
        ("build", "construct a family and summarize it"),
        ("verify", "run a family's check suite"),
        ("report-all", "verify every family"),
        ("entropy-search", "search for minimal-entropy pure states"),
        ("incidence", "orthogonality incidence counts"),
        ("bounds", "Gerzon and zero-count bounds"),
        ("export", "write a family's data as JSON or CSV"),
    ):
        sub.add_parser(name, parents=[common], help=help_)
    return p


def _config(args: argparse.Namespace) -> RunConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = int(env) if env is not None else 0
        except ValueError:
            raise UsageError(f"${SEED_ENV} must be an integer, got {env!r}") from None
    default_fmt = "text" if args.command in ("incidence", "bounds", "build", "entropy-search") else "json"
    return RunConfig(
        family=args.family,
        tolerance=args.tolerance,
        seed=seed,
        restarts=args.restarts,
        format=args.format or default_fmt,
        output=args.output,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    try:
        config = _config(args)
        if args.command == "verify":
            return run_verify(config)[1]
        if args.command == "report-all":
            return run_report_all(config)[1]
        if args.command == "entropy-search":
            _emit(_render_search(entropy_search_report(config), config), config)
            return EXIT_OK
        if args.command == "incidence":
            _emit(incidence_report(config)[1], config)
            return EXIT_OK
        if args.command == "bounds":
            _emit(bounds_report(config), config)
            return EXIT_OK
        if args.command == "export":
            _emit(export_text(config), config)
            return EXIT_OK
        if args.command == "build":
            _emit(build_summary(config), config)
            return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
