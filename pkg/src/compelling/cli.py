"""Command-line front end.

Subcommands: ``chi`` (exact compelling chromatic number of a graph file),
``check`` (is a given coloring compelling), ``family-table`` (solver vs
closed form over a parameter range, CSV by default), and ``verify`` (run a
verification suite).

Exit codes: 0 on success (including infeasible and not-compelling
verdicts), 1 on a failed verification assertion or timeout, 2 on usage,
parse, or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field

from .closed_forms import (
    chi_conn_cycle,
    chi_conn_mop,
    chi_conn_path,
    chi_conn_tree,
    chi_edge_cycle,
    chi_edge_path,
    chi_edge_tree,
)
from .graphs import (
    EXACT_CHROMATIC_CAP,
    Graph,
    load_graph,
    make_cycle,
    make_double_broom,
    make_fan,
    make_path,
    make_random_mop,
    make_random_tree,
    make_split_graph,
)
from .properties import SubsetProperty
from .solver import (
    Coloring,
    SearchTimeout,
    compelling_chromatic_number,
    is_compelling,
    validate_coloring,
)
from .verify import DEFAULT_SEED, run_suite


@dataclass
class RunReport:
    """Machine-readable record of one CLI invocation.

    Rerunning with the same seed reproduces everything except the timing
    field.
    """

    command: str
    seed: int | None
    results: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


class CliError(Exception):
    """Usage or input problem; maps to exit code 2."""


def _load_graph(path: str) -> Graph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise CliError(f"cannot read graph file {path}: {exc}")
    except ValueError as exc:
        raise CliError(f"bad graph file {path}: {exc}")


def _load_coloring(path: str, g: Graph) -> Coloring:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read coloring file {path}: {exc}")
    assigned: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise CliError(f"bad coloring line {line!r}, expected 'vertex color'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise CliError(f"bad coloring line {line!r}")
        if not 0 <= v < g.n:
            raise CliError(f"vertex {v} out of range for a graph on {g.n} vertices")
        if v in assigned:
            raise CliError(f"vertex {v} assigned twice")
        assigned[v] = c
    missing = [v for v in range(g.n) if v not in assigned]
    if missing:
        raise CliError(f"coloring is partial: vertex {missing[0]} unassigned")
    try:
        coloring = Coloring(tuple(assigned[v] for v in range(g.n)))
        validate_coloring(g, coloring)
    except ValueError as exc:
        raise CliError(str(exc))
    return coloring


def _parse_property(name: str) -> SubsetProperty:
    try:
        return SubsetProperty.from_name(name)
    except ValueError as exc:
        raise CliError(str(exc))


def _parse_range(text: str) -> tuple[int, int]:
    for sep in (":", "..", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                return int(lo), int(hi)
            except ValueError:
                break
    raise CliError(f"bad range {text!r}, expected like 3:12")


# ---------------------------------------------------------------------------
# chi
# ---------------------------------------------------------------------------


def cmd_chi(args) -> int:
    g = _load_graph(args.graph)
    prop = _parse_property(args.property)
    start = time.perf_counter()
    try:
        res = compelling_chromatic_number(
            g, prop, max_n=args.max_n, timeout_s=args.timeout_secs
        )
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        raise CliError(str(exc))
    report = RunReport(
        command=f"chi {args.graph} {prop.value}",
        seed=None,
        elapsed_s=time.perf_counter() - start,
    )
    row = {
        "graph": args.graph,
        "n": g.n,
        "m": g.edge_count,
        "property": prop.value,
        "value": res.value,
        "infeasible": res.infeasible,
        "lower_bound": res.lower_bound,
        "upper_bound": res.upper_bound,
        "witness": list(res.witness.colors) if res.witness else None,
    }
    report.results.append(row)
    if args.format == "json":
        print(report.to_json())
        return 0
    print(f"graph: {args.graph} (n={g.n}, m={g.edge_count})")
    print(f"property: {prop.value}")
    if res.infeasible:
        reason = (
            "no vertex subset satisfies the property"
            if res.lower_bound is None
            else "no compelling coloring exists at any number of colors"
        )
        print(f"chi: INFEASIBLE ({reason})")
        return 0
    print(f"chi: {res.value}")
    upper = res.upper_bound if res.upper_bound is not None else "unknown"
    print(f"bounds: lower={res.lower_bound} upper={upper}")
    print("witness:")
    for v, c in enumerate(res.witness.colors):
        print(f"{v}: {c}")
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    coloring = _load_coloring(args.coloring, g)
    prop = _parse_property(args.property)
    report = is_compelling(g, coloring, prop)
    if args.format == "json":
        out = RunReport(
            command=f"check {args.graph} {args.coloring} {prop.value}",
            seed=None,
            results=[
                {
                    "compelling": report.compelling,
                    "method": report.method,
                    "counterexample": list(report.counterexample)
                    if report.counterexample
                    else None,
                }
            ],
        )
        print(out.to_json())
        return 0
    if report.compelling:
        print("COMPELLING")
    else:
        committee = " ".join(str(v) for v in report.counterexample)
        print("NOT-COMPELLING")
        print(f"counterexample committee: {committee}")
    return 0


# ---------------------------------------------------------------------------
# family-table
# ---------------------------------------------------------------------------

_FAMILY_RANGE_FLOOR = {
    "path": 1,
    "cycle": 3,
    "tree-random": 1,
    "mop-random": 3,
    "double-broom": 1,
    "split": 2,
    "fan": 1,
}


def _family_graph(family: str, n: int, seed: int) -> Graph:
    if family == "path":
        return make_path(n)
    if family == "cycle":
        return make_cycle(n)
    if family == "tree-random":
        return make_random_tree(n, seed=seed * 1_000_003 + n)
    if family == "mop-random":
        return make_random_mop(n, seed=seed * 1_000_003 + n)
    if family == "double-broom":
        return make_double_broom(n, n)
    if family == "split":
        return make_split_graph(n)
    if family == "fan":
        return make_fan(n)
    raise CliError(f"unknown family {family!r}")


def _closed_form(family: str, g: Graph, n: int, prop: SubsetProperty) -> int | None:
    """Closed-form value when one is known for this family and property."""
    if prop is SubsetProperty.EDGE:
        if family == "path" and n >= 2:
            return chi_edge_path(n)
        if family == "cycle":
            return chi_edge_cycle(n)
        if family in ("tree-random", "double-broom") and g.n >= 2:
            return chi_edge_tree(g)
    if prop is SubsetProperty.CONNECTED:
        if family == "path" and n >= 2:
            return chi_conn_path(n)
        if family == "cycle":
            return chi_conn_cycle(n)
        if family in ("tree-random", "double-broom") and g.n >= 2:
            return chi_conn_tree(g)
        if family == "mop-random":
            return chi_conn_mop(g)
    return None


def family_rows(
    family: str,
    lo: int,
    hi: int,
    prop: SubsetProperty,
    seed: int,
    max_n: int,
    timeout_s: float | None = None,
) -> tuple[list[dict], list[str]]:
    if family not in _FAMILY_RANGE_FLOOR:
        raise CliError(
            f"unknown family {family!r}; expected one of: "
            + ", ".join(sorted(_FAMILY_RANGE_FLOOR))
        )
    rows = []
    warnings = []
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    for n in range(lo, hi + 1):
        if n < _FAMILY_RANGE_FLOOR[family]:
            warnings.append(f"skipping n={n}: below the {family} family minimum")
            continue
        g = _family_graph(family, n, seed)
        if g.n > max_n:
            warnings.append(
                f"range truncated at n={n}: instance has {g.n} vertices, cap is {max_n}"
            )
            break
        budget = None if deadline is None else deadline - time.monotonic()
        if budget is not None and budget <= 0:
            warnings.append(f"range truncated at n={n}: time budget exhausted")
            break
        try:
            value = compelling_chromatic_number(g, prop, max_n=max_n, timeout_s=budget).value
        except SearchTimeout:
            warnings.append(f"range truncated at n={n}: time budget exhausted")
            break
        closed = _closed_form(family, g, n, prop)
        rows.append(
            {
                "n": n,
                "solver": value,
                "closed_form": closed,
                "match": (value == closed) if closed is not None else None,
            }
        )
    return rows, warnings


def render_family_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "solver", "closed_form", "match"])
    for row in rows:
        writer.writerow(
            [
                row["n"],
                "infeasible" if row["solver"] is None else row["solver"],
                "" if row["closed_form"] is None else row["closed_form"],
                "" if row["match"] is None else str(row["match"]).lower(),
            ]
        )
    return buf.getvalue()


def parse_family_csv(text: str) -> list[dict]:
    """Inverse of :func:`render_family_csv`."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["n", "solver", "closed_form", "match"]:
        raise ValueError(f"unexpected header {header}")
    rows = []
    for rec in reader:
        if not rec:
            continue
        n, solver, closed, match = rec
        rows.append(
            {
                "n": int(n),
                "solver": None if solver == "infeasible" else int(solver),
                "closed_form": int(closed) if closed else None,
                "match": None if match == "" else match == "true",
            }
        )
    return rows


def cmd_family_table(args) -> int:
    prop = _parse_property(args.property)
    lo, hi = _parse_range(args.n_range)
    start = time.perf_counter()
    rows, warnings = family_rows(
        args.family, lo, hi, prop, args.seed, args.max_n, args.timeout_secs
    )
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.format == "json":
        report = RunReport(
            command=f"family-table {args.family} {args.n_range} {prop.value}",
            seed=args.seed,
            results=rows,
            notes=warnings,
            elapsed_s=time.perf_counter() - start,
        )
        print(report.to_json())
    elif args.format == "text":
        for row in rows:
            solver = "infeasible" if row["solver"] is None else row["solver"]
            closed = "-" if row["closed_form"] is None else row["closed_form"]
            match = "-" if row["match"] is None else str(row["match"]).lower()
            print(f"n={row['n']} solver={solver} closed={closed} match={match}")
    else:
        sys.stdout.write(render_family_csv(rows))
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        suite_results = run_suite(args.suite, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc))
    all_ok = True
    if args.format == "json":
        report = RunReport(command=f"verify {args.suite}", seed=args.seed)
        for suite in suite_results:
            for check in suite.checks:
                report.results.append(
                    {
                        "suite": suite.suite,
                        "check": check.name,
                        "passed": check.passed,
                        "detail": check.detail,
                    }
                )
                all_ok &= check.passed
            report.notes.extend(f"{suite.suite}: {note}" for note in suite.notes)
        print(report.to_json())
        return 0 if all_ok else 1
    for suite in suite_results:
        for check in suite.checks:
            tag = "PASS" if check.passed else "FAIL"
            detail = f" ({check.detail})" if check.detail else ""
            print(f"{tag} [{suite.suite}] {check.name}{detail}")
            all_ok &= check.passed
        for note in suite.notes:
            print(f"NOTE [{suite.suite}] {note}")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compelling",
        description="Exact compelling chromatic numbers of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chi = sub.add_parser("chi", help="exact compelling chromatic number")
    p_chi.add_argument("graph", help="graph file ('n m' header then edge lines)")
    p_chi.add_argument("--property", required=True, help="dom|tdom|if|edge|connected|cdom")
    p_chi.add_argument("--max-n", type=int, default=EXACT_CHROMATIC_CAP)
    p_chi.add_argument("--timeout-secs", type=float, default=None)
    p_chi.add_argument("--format", choices=("text", "json"), default="text")
    p_chi.set_defaults(func=cmd_chi)

    p_check = sub.add_parser("check", help="is a given coloring compelling")
    p_check.add_argument("graph")
    p_check.add_argument("coloring", help="coloring file, one 'vertex color' per line")
    p_check.add_argument("--property", required=True)
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_table = sub.add_parser(
        "family-table", help="solver vs closed form over a family range"
    )
    p_table.add_argument(
        "family", help="path|cycle|tree-random|mop-random|double-broom|split|fan"
    )
    p_table.add_argument("--n-range", required=True, help="inclusive range like 2:12")
    p_table.add_argument("--property", required=True)
    p_table.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_table.add_argument("--max-n", type=int, default=EXACT_CHROMATIC_CAP)
    p_table.add_argument("--timeout-secs", type=float, default=None)
    p_table.add_argument("--format", choices=("csv", "text", "json"), default="csv")
    p_table.set_defaults(func=cmd_family_table)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help="suite name, or 'all'")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
