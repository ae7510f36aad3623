"""Command-line front end: batch verification, table printing, Monte Carlo.

Exit codes: 0 all checks pass, 1 at least one identity or statistical
failure, 2 usage or domain error.  All rational output is exact "p/q"
text; polynomials serialize as ascending coefficient arrays (an empty
array is the zero polynomial).  Evaluation times are reported as 0 unless
--timings is given, so that repeated runs with one config are
byte-identical in json and csv modes.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, TextIO

from .exactmath import Poly
from .identities import (
    REGISTRY,
    DomainError,
    IdentityReport,
    IdentitySpec,
    UnknownIdentityError,
    build_points,
    point_text,
    verify,
)
from .sequences import (
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    genocchi_number,
)
from .stochastic import MomentQuery, dirichlet_moment_mc

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Exact rational from 'p/q' or integer text; no floating forms."""
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"expected an integer or p/q rational, got {text!r}")
    return Fraction(token)


def parse_n_range(text: str) -> tuple[int, ...]:
    """Inclusive integer range 'A..B', or a single integer."""
    token = text.strip()
    if ".." in token:
        lo_text, hi_text = token.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    return (int(token),)


def parse_params(text: str) -> dict:
    """Comma list of name=value pairs; bare values extend the last name.

    'a=1/2,b=3/2' gives two scalars; 'a_vec=1,2,1/2' gives one tuple.
    """
    grouped: dict[str, list[str]] = {}
    current: str | None = None
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty token in parameter list {text!r}")
        if "=" in token:
            key, _, value = token.partition("=")
            key = key.strip()
            if not key:
                raise ValueError(f"missing parameter name in {token!r}")
            if key in grouped:
                raise ValueError(f"duplicate parameter {key!r}")
            grouped[key] = [value.strip()]
            current = key
        else:
            if current is None:
                raise ValueError(f"value {token!r} appears before any parameter name")
            grouped[current].append(token)
    parsed: dict = {}
    for key, values in grouped.items():
        if key == "a_vec":
            parsed[key] = tuple(parse_rational(v) for v in values)
        elif len(values) == 1:
            parsed[key] = parse_rational(values[0])
        else:
            raise ValueError(f"parameter {key!r} takes a single value, got {values}")
    return parsed


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in text.split(","))


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(v.strip()) for v in text.split(","))


@dataclass
class RunConfig:
    """One parsed invocation; `run` consumes it without touching argv."""

    command: str
    identity: str | None = None
    n_range: tuple[int, ...] | None = None
    k: int | None = None
    params: dict | None = None
    format: str = "text"
    seed: int = 42
    samples: int = 1_000_000
    sigma: float = 4.0
    max_n: int = 6
    a_vec: tuple[Fraction, ...] | None = None
    l_vec: tuple[int, ...] | None = None
    timings: bool = False


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------

_INPUT_ORDER = ("n", "k", "a", "b", "a_vec", "p", "epsilon", "display")


def _poly_cells(p: Poly) -> list[str]:
    return [str(c) for c in p]


def _poly_text(p: Poly) -> str:
    return "[" + ", ".join(_poly_cells(p)) + "]"


def format_poly(p: Poly) -> str:
    """Human rendering in descending powers, e.g. 'x^2 - x + 1/6'."""
    if not p:
        return "0"
    pieces: list[tuple[str, str]] = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        magnitude = abs(c)
        if i == 0:
            body = str(magnitude)
        else:
            head = "" if magnitude == 1 else f"{magnitude}*"
            body = head + ("x" if i == 1 else f"x^{i}")
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def _inputs_payload(inputs: Mapping) -> dict:
    out: dict = {}
    for key in _INPUT_ORDER:
        if key not in inputs:
            continue
        value = inputs[key]
        if key in ("n", "k"):
            out[key] = int(value)
        elif key == "a_vec":
            out[key] = [str(Fraction(v)) for v in value]
        elif key == "display":
            out[key] = str(value)
        else:
            out[key] = str(Fraction(value))
    return out


def _elapsed_ms(report: IdentityReport, timings: bool) -> float | int:
    return round(report.elapsed * 1000.0, 3) if timings else 0


def _report_payload(report: IdentityReport, timings: bool) -> dict:
    return {
        "identity": report.identity,
        "inputs": _inputs_payload(report.inputs),
        "status": report.status,
        "lhs": _poly_cells(report.lhs),
        "rhs": _poly_cells(report.rhs),
        "difference": _poly_cells(report.difference),
        "elapsed_ms": _elapsed_ms(report, timings),
    }


class _Style:
    def __init__(self, out: TextIO, fmt: str) -> None:
        self.enabled = (
            fmt == "text"
            and not os.environ.get("NO_COLOR")
            and bool(getattr(out, "isatty", lambda: False)())
        )

    def ok(self, text: str) -> str:
        return f"\033[32m{text}\033[0m" if self.enabled else text

    def bad(self, text: str) -> str:
        return f"\033[31m{text}\033[0m" if self.enabled else text


def _emit_reports(config: RunConfig, reports: list[IdentityReport], out: TextIO) -> None:
    if config.format == "json":
        payload = [_report_payload(r, config.timings) for r in reports]
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    if config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["identity", "inputs", "status", "lhs", "rhs", "difference", "elapsed_ms"])
        for r in reports:
            writer.writerow([
                r.identity,
                point_text(r.inputs),
                r.status,
                ";".join(_poly_cells(r.lhs)),
                ";".join(_poly_cells(r.rhs)),
                ";".join(_poly_cells(r.difference)),
                _elapsed_ms(r, config.timings),
            ])
        return
    style = _Style(out, config.format)
    by_name: dict[str, list[IdentityReport]] = {}
    for r in reports:
        by_name.setdefault(r.identity, []).append(r)
    for name, group in by_name.items():
        passed = sum(1 for r in group if r.passed)
        marker = style.ok("PASS") if passed == len(group) else style.bad("FAIL")
        out.write(f"{name}: {passed}/{len(group)} reports pass  [{marker}]\n")
        for r in group:
            if r.passed:
                continue
            out.write(f"  FAIL {point_text(r.inputs)}\n")
            out.write(f"    lhs        = {_poly_text(r.lhs)}\n")
            out.write(f"    rhs        = {_poly_text(r.rhs)}\n")
            out.write(f"    difference = {_poly_text(r.difference)}\n")
    failures = sum(1 for r in reports if not r.passed)
    if failures:
        out.write(style.bad(f"{failures} of {len(reports)} reports fail\n"))
    else:
        out.write(style.ok(f"all {len(reports)} reports pass\n"))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _grid_text(entry: IdentitySpec) -> str:
    def render_ns(ns: tuple[int, ...]) -> str:
        if len(ns) == 1:
            return f"n={ns[0]}"
        step = ns[1] - ns[0]
        if all(ns[i + 1] - ns[i] == step for i in range(len(ns) - 1)):
            return f"n={ns[0]}..{ns[-1]}" + (f" step {step}" if step != 1 else "")
        return "n in {" + ",".join(map(str, ns)) + "}"

    chunks = []
    for kk in entry.default_ks or (None,):
        ns = entry.default_n(kk)
        n_sets = len(entry.default_param_sets(kk))
        piece = render_ns(ns)
        if kk is not None:
            piece = f"k={kk}: {piece}"
        if n_sets > 1:
            piece += f", {n_sets} parameter sets"
        chunks.append(piece)
    return "; ".join(chunks)


def _cmd_list(config: RunConfig, registry: Mapping[str, IdentitySpec], out: TextIO) -> int:
    entries = list(registry.values())
    if config.format == "json":
        payload = [
            {
                "name": e.name,
                "summary": e.summary,
                "params": list(e.param_names),
                "takes_k": e.takes_k,
                "validity": e.validity_text,
                "default_grid": _grid_text(e),
            }
            for e in entries
        ]
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    if config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["name", "summary", "params", "takes_k", "validity", "default_grid"])
        for e in entries:
            writer.writerow([
                e.name, e.summary, ",".join(e.param_names), str(e.takes_k).lower(),
                e.validity_text, _grid_text(e),
            ])
        return 0
    width = max(len(e.name) for e in entries)
    for e in entries:
        out.write(f"{e.name.ljust(width)}  {e.summary}\n")
        detail = f"validity: {e.validity_text}"
        if e.param_names:
            detail += f"; params: {', '.join(e.param_names)}"
        detail += f"; default grid: {_grid_text(e)}"
        out.write(f"{' ' * width}  {detail}\n")
    return 0


def _tables_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(max_n + 1):
        bp = bernoulli_poly(n)
        ep = euler_poly(n)
        rows.append({
            "n": n,
            "B": str(bernoulli_number(n)),
            "E": str(euler_number(n)),
            "G": str(genocchi_number(n)),
            "B_poly": _poly_cells(bp),
            "E_poly": _poly_cells(ep),
            "B_poly_text": format_poly(bp),
            "E_poly_text": format_poly(ep),
        })
    return rows


def _cmd_tables(config: RunConfig, out: TextIO) -> int:
    if config.max_n < 0:
        raise ValueError(f"--max-n must be >= 0, got {config.max_n}")
    rows = _tables_rows(config.max_n)
    if config.format == "json":
        out.write(json.dumps({"max_n": config.max_n, "rows": rows}, indent=2) + "\n")
        return 0
    if config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "B", "E", "G", "B_poly", "E_poly"])
        for row in rows:
            writer.writerow([
                row["n"], row["B"], row["E"], row["G"],
                ";".join(row["B_poly"]), ";".join(row["E_poly"]),
            ])
        return 0
    widths = {key: max(len(f"{key}_n"), *(len(row[key]) for row in rows)) for key in ("B", "E", "G")}
    n_width = max(1, len(str(config.max_n)))
    header = f"{'n'.rjust(n_width)}  {'B_n'.ljust(widths['B'])}  {'E_n'.ljust(widths['E'])}  {'G_n'.ljust(widths['G'])}"
    out.write(header + "\n")
    for row in rows:
        out.write(
            f"{str(row['n']).rjust(n_width)}  {row['B'].ljust(widths['B'])}  "
            f"{row['E'].ljust(widths['E'])}  {row['G'].ljust(widths['G'])}\n"
        )
    out.write("\n")
    for row in rows:
        out.write(f"B_{row['n']}(x) = {row['B_poly_text']}\n")
    out.write("\n")
    for row in rows:
        out.write(f"E_{row['n']}(x) = {row['E_poly_text']}\n")
    return 0


def _cmd_verify(config: RunConfig, registry: Mapping[str, IdentitySpec], out: TextIO) -> int:
    if not config.identity:
        raise ValueError("verify requires --identity NAME")
    entry = registry.get(config.identity)
    if entry is None:
        raise UnknownIdentityError(
            f"unknown identity {config.identity!r}; valid names: {', '.join(registry)}"
        )
    points = build_points(entry, n_values=config.n_range, k=config.k, params=config.params)
    reports = verify(config.identity, points=points, registry=registry)
    _emit_reports(config, reports, out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify_all(config: RunConfig, registry: Mapping[str, IdentitySpec], out: TextIO) -> int:
    reports: list[IdentityReport] = []
    for name in registry:
        reports.extend(verify(name, registry=registry))
    _emit_reports(config, reports, out)
    return 0 if all(r.passed for r in reports) else 1


_MC_DEFAULT_QUERIES: tuple[tuple[tuple[Fraction, ...], tuple[int, ...]], ...] = (
    ((Fraction(1), Fraction(1)), (1, 1)),
    ((Fraction(1), Fraction(2), Fraction(1, 2)), (2, 1, 3)),
    ((Fraction(2), Fraction(2), Fraction(2), Fraction(2)), (1, 1, 1, 1)),
)


def _cmd_mc(config: RunConfig, out: TextIO) -> int:
    if (config.a_vec is None) != (config.l_vec is None):
        raise ValueError("--a and --l must be given together")
    if config.a_vec is not None:
        queries = [(config.a_vec, config.l_vec)]
    else:
        queries = list(_MC_DEFAULT_QUERIES)
    results = []
    for a_vec, l_vec in queries:
        started = time.perf_counter()
        estimate = dirichlet_moment_mc(MomentQuery(a_vec, l_vec, config.samples, config.seed))
        elapsed = time.perf_counter() - started
        if estimate.stderr > 0.0:
            sigmas: float | None = estimate.deviation / estimate.stderr
        else:
            sigmas = None
        results.append({
            "a_vec": [str(v) for v in a_vec],
            "l_vec": list(l_vec),
            "samples": config.samples,
            "seed": config.seed,
            "sigma": config.sigma,
            "exact": str(estimate.exact),
            "mean": estimate.mean,
            "stderr": estimate.stderr,
            "sigmas": sigmas,
            "status": "pass" if estimate.within(config.sigma) else "fail",
            "elapsed_ms": round(elapsed * 1000.0, 3) if config.timings else 0,
        })
    if config.format == "json":
        out.write(json.dumps(results, indent=2) + "\n")
    elif config.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["a_vec", "l_vec", "samples", "seed", "sigma",
                         "exact", "mean", "stderr", "sigmas", "status", "elapsed_ms"])
        for row in results:
            writer.writerow([
                ",".join(row["a_vec"]),
                ",".join(str(v) for v in row["l_vec"]),
                row["samples"], row["seed"], row["sigma"], row["exact"],
                repr(row["mean"]), repr(row["stderr"]),
                "" if row["sigmas"] is None else repr(row["sigmas"]),
                row["status"], row["elapsed_ms"],
            ])
    else:
        style = _Style(out, config.format)
        for row in results:
            marker = style.ok("PASS") if row["status"] == "pass" else style.bad("FAIL")
            sig_text = "exact" if row["sigmas"] is None else f"{row['sigmas']:.2f} sigma"
            out.write(
                f"mc a={','.join(row['a_vec'])} l={','.join(str(v) for v in row['l_vec'])} "
                f"samples={row['samples']} seed={row['seed']}: mean={row['mean']:.8g} "
                f"exact={row['exact']} stderr={row['stderr']:.3g} deviation={sig_text} [{marker}]\n"
            )
        failures = sum(1 for row in results if row["status"] != "pass")
        if failures:
            out.write(style.bad(f"{failures} of {len(results)} checks fail (tolerance {config.sigma} sigma)\n"))
        else:
            out.write(style.ok(f"all {len(results)} checks pass (tolerance {config.sigma} sigma)\n"))
    return 0 if all(row["status"] == "pass" for row in results) else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def run(
    config: RunConfig,
    registry: Mapping[str, IdentitySpec] | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    """Execute one parsed invocation and return the exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    reg = registry if registry is not None else REGISTRY
    try:
        if config.command == "list":
            return _cmd_list(config, reg, out)
        if config.command == "tables":
            return _cmd_tables(config, out)
        if config.command == "verify":
            return _cmd_verify(config, reg, out)
        if config.command == "verify-all":
            return _cmd_verify_all(config, reg, out)
        if config.command == "mc":
            return _cmd_mc(config, out)
        err.write(f"unknown command {config.command!r}\n")
        return 2
    except UnknownIdentityError as exc:
        err.write((exc.args[0] if exc.args else str(exc)) + "\n")
        return 2
    except (DomainError, ValueError) as exc:
        err.write(f"{exc}\n")
        return 2


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (default text)")


def _add_timings_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--timings", action="store_true",
                        help="report wall-clock evaluation times; off by default "
                             "so repeated runs are byte-identical")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bek",
        description="Exact verification of Bernoulli/Euler convolution identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub_list = sub.add_parser("list", help="list registry entries and their default grids")
    _add_format_flag(sub_list)

    sub_tables = sub.add_parser("tables", help="print number and polynomial tables")
    sub_tables.add_argument("--max-n", type=int, default=6, dest="max_n",
                            help="largest index to print (default 6)")
    _add_format_flag(sub_tables)

    sub_verify = sub.add_parser("verify", help="verify one identity on a grid")
    sub_verify.add_argument("--identity", required=True, help="registry name (see `bek list`)")
    sub_verify.add_argument("--n", type=parse_n_range, dest="n_range",
                            help="inclusive range A..B or single integer (default: entry grid)")
    sub_verify.add_argument("--k", type=int, help="number of parameters for k-ary entries")
    sub_verify.add_argument("--params", type=parse_params,
                            help="named rationals, e.g. a=1/2,b=3/2 or a_vec=1,2,1/2")
    _add_format_flag(sub_verify)
    _add_timings_flag(sub_verify)

    sub_all = sub.add_parser("verify-all", help="verify every entry on its default grid")
    _add_format_flag(sub_all)
    _add_timings_flag(sub_all)

    sub_mc = sub.add_parser("mc", help="Monte Carlo check of the mixed-moment formula")
    sub_mc.add_argument("--a", type=_parse_rational_list, dest="a_vec",
                        help="comma list of positive rational shapes, e.g. 1,2,1/2")
    sub_mc.add_argument("--l", type=_parse_int_list, dest="l_vec",
                        help="comma list of non-negative integer exponents, e.g. 2,1,3")
    sub_mc.add_argument("--samples", type=int, default=1_000_000, help="draw count (default 10^6)")
    sub_mc.add_argument("--seed", type=int, default=42, help="master seed (default 42)")
    sub_mc.add_argument("--sigma", type=float, default=4.0,
                        help="tolerance in standard errors (default 4)")
    _add_format_flag(sub_mc)
    _add_timings_flag(sub_mc)

    return parser


def _config_from_namespace(ns: argparse.Namespace) -> RunConfig:
    fields = {
        "command": ns.command,
        "format": getattr(ns, "format", "text"),
    }
    for name in ("identity", "n_range", "k", "params", "max_n", "a_vec", "l_vec",
                 "seed", "samples", "sigma", "timings"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            fields[name] = getattr(ns, name)
    return RunConfig(**fields)


def main(argv: Sequence[str] | None = None) -> int:
    ns = _build_parser().parse_args(argv)
    return run(_config_from_namespace(ns))


if __name__ == "__main__":
    sys.exit(main())
