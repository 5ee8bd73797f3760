"""Command line front end.

    maxdenum dmax 7,11,13,15
    maxdenum dmax 7,8,9 --method bezout
    maxdenum factor 7,8,13 48 --maximal
    maxdenum reduced 7,11,13,15
    maxdenum table --multiplicity 7 --max-gen 13 --basic-only
    maxdenum verify --a1-max 15 --gen-max 40

A generator argument of the form ``@path`` (``@-`` for stdin) reads one
generator list per line and reports each in turn.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 method/arity mismatch, 4 element not in the semigroup.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional, Sequence, TextIO

from . import embdim3
from .embdim3 import (
    all_methods,
    dmax_bezout,
    dmax_ceiling,
    dmax_min_h,
    dmax_triple,
    gmn_decompose,
    multiplicity_table,
    reduced_structure,
)
from .errors import IsAllOfN, SemigroupError
from .semigroup import (
    DmaxResult,
    NumericalSemigroup,
    contains,
    dmax_semigroup_general,
    factorizations,
    frobenius_number,
    is_maximally_reduced,
    maximally_reduced_elements,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_ARITY = 3
EXIT_NOT_MEMBER = 4

FORMULA_METHODS: dict[str, Callable[[embdim3.GmnForm], DmaxResult]] = {
    "min-h": dmax_min_h,
    "ceiling": dmax_ceiling,
    "bezout": dmax_bezout,
}

INPUT_KEYS = (
    "generators",
    "minimal_generators",
    "embedding_dimension",
    "multiplicity",
    "element",
    "max_gen",
    "basic_only",
    "a1_max",
    "gen_max",
)


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class CliReport:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    payload: dict[str, Any] = field(default_factory=dict)
    method: Optional[str] = None
    elapsed_ms: Optional[float] = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"command": self.command, **self.inputs, **self.payload}
        if self.method is not None:
            out["method"] = self.method
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CliReport":
        data = dict(data)
        command = data.pop("command")
        method = data.pop("method", None)
        elapsed = data.pop("elapsed_ms", None)
        inputs = {k: data.pop(k) for k in INPUT_KEYS if k in data}
        return cls(command, inputs, data, method, elapsed)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "CliReport":
        return cls.from_dict(json.loads(text))


def parse_generators(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise CliFailure(EXIT_INVALID, f"cannot parse generator list {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise CliFailure(EXIT_INVALID, f"cannot parse generator list {text!r}") from None


def iter_batch(lines: Sequence[str]) -> Iterator[str]:
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            yield line


def _generator_specs(arg: str, stdin: TextIO) -> list[str]:
    if not arg.startswith("@"):
        return [arg]
    path = arg[1:]
    if path == "-":
        return list(iter_batch(stdin.read().splitlines()))
    try:
        with open(path, encoding="ascii") as fh:
            return list(iter_batch(fh.read().splitlines()))
    except OSError as exc:
        raise CliFailure(EXIT_INVALID, f"cannot read {path}: {exc}") from None


def _semigroup(raw: list[int]) -> NumericalSemigroup:
    try:
        return NumericalSemigroup(raw)
    except SemigroupError as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None


def _echo(S: NumericalSemigroup) -> dict[str, Any]:
    return {
        "generators": list(S.raw_generators),
        "minimal_generators": list(S.minimal_generators),
        "embedding_dimension": S.embedding_dimension,
        "multiplicity": S.multiplicity,
    }


def _fmt_gens(gens: Sequence[int]) -> str:
    return "<" + ", ".join(map(str, gens)) + ">"


def _fmt_tuple(coeffs: Sequence[int]) -> str:
    return "(" + ",".join(map(str, coeffs)) + ")"


# -- subcommand bodies: each returns a report and its text rendering ----------


def compute_dmax(raw: list[int], method: str = "auto") -> DmaxResult:
    S = _semigroup(raw)
    distinct = sorted(set(raw))
    if method == "general":
        return dmax_semigroup_general(S)
    if method == "auto":
        if len(distinct) == 3:
            return dmax_triple(*distinct)
        return dmax_semigroup_general(S)
    if len(raw) > 3 or len(distinct) != 3:
        raise CliFailure(
            EXIT_ARITY,
            f"method {method} needs exactly three distinct generators, got {raw}",
        )
    try:
        return FORMULA_METHODS[method](gmn_decompose(*distinct))
    except SemigroupError as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None


def cmd_dmax(raw: list[int], method: str) -> tuple[CliReport, str]:
    S = _semigroup(raw)
    result = compute_dmax(raw, method)
    report = CliReport("dmax", _echo(S), {"dmax": result.value}, result.method)
    return report, f"dmax({S}) = {result.value}  [{result.method}]"


def cmd_factor(raw: list[int], element: int, maximal_only: bool) -> tuple[CliReport, str]:
    S = _semigroup(raw)
    if element < 0:
        raise CliFailure(EXIT_INVALID, f"element must be nonnegative, got {element}")
    try:
        member = contains(S, element)
    except SemigroupError as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    if not member:
        try:
            hint = f" (Frobenius number {frobenius_number(S)})"
        except IsAllOfN:
            hint = ""
        raise CliFailure(EXIT_NOT_MEMBER, f"{element} is not an element of {S}{hint}")

    facts = factorizations(S, element)
    longest = max(f.length for f in facts)
    maximal = [f for f in facts if f.length == longest]
    shown = maximal if maximal_only else facts
    payload = {
        "factorizations": [list(f.coefficients) for f in shown],
        "lengths": [f.length for f in shown],
        "maximal_factorizations": [list(f.coefficients) for f in maximal],
        "max_length": longest,
        "denumerant": len(facts),
        "dmax_element": len(maximal),
        "maximally_reduced": is_maximally_reduced(S, element),
    }
    inputs = {**_echo(S), "element": element}
    lines = [f"factorizations of {element} in {S}:"]
    lines += [f"  {f}  length {f.length}" for f in shown]
    lines += [
        f"denumerant: {len(facts)}",
        f"maximal length: {longest}",
        f"dmax({element}) = {len(maximal)}",
        f"maximally reduced: {'yes' if payload['maximally_reduced'] else 'no'}",
    ]
    return CliReport("factor", inputs, payload), "\n".join(lines)


def cmd_reduced(raw: list[int]) -> tuple[CliReport, str]:
    S = _semigroup(raw)
    reports = maximally_reduced_elements(S)
    dmax = max(r.dmax_element for r in reports)
    payload: dict[str, Any] = {
        "reduction_bound": S.reduction_bound,
        "reduced_elements": [
            {
                "element": r.element,
                "maximal_factorizations": [list(f.coefficients) for f in r.maximal_factorizations],
                "dmax_element": r.dmax_element,
            }
            for r in reports
        ],
        "dmax": dmax,
    }
    lines = [f"maximally reduced elements of {S} (checked up to N = {S.reduction_bound}):"]
    for r in reports:
        facts = ", ".join(str(f) for f in r.maximal_factorizations)
        lines.append(f"- {r.element}; {facts}")
    lines.append(f"dmax({S}) = {dmax}")
    if S.embedding_dimension == 3:
        structure = reduced_structure(S)
        payload["structure"] = {
            "k": structure.k,
            "U": list(structure.U),
            "V": list(structure.V),
            "elements": list(structure.elements),
        }
        lines.append(
            f"k = {structure.k}, U = {_fmt_tuple(structure.U)}, V = {_fmt_tuple(structure.V)}"
        )
    return CliReport("reduced", _echo(S), payload, "general"), "\n".join(lines)


def cmd_table(a1: int, max_gen: int, basic_only: bool) -> tuple[CliReport, str]:
    try:
        rows = multiplicity_table(a1, max_gen, basic_only)
    except (ValueError, SemigroupError) as exc:
        raise CliFailure(EXIT_INVALID, str(exc)) from None
    inputs = {"multiplicity": a1, "max_gen": max_gen, "basic_only": basic_only}
    payload = {
        "table": [
            {
                "a2": r.a2,
                "a3": r.a3,
                "generators": [a1, r.a2, r.a3],
                "dmax": r.result.value,
                "method": r.result.method,
            }
            for r in rows
        ]
    }
    scope = "basic triples" if basic_only else "triples"
    lines = [f"{scope} <{a1}, a2, a3> with a3 <= {max_gen}:"]
    for value in sorted({r.result.value for r in rows}, reverse=True):
        group = [r for r in rows if r.result.value == value]
        lines.append(f"dmax = {value} ({len(group)}):")
        lines += [f"  {_fmt_gens((a1, r.a2, r.a3))}  [{r.result.method}]" for r in group]
    return CliReport("table", inputs, payload), "\n".join(lines)


def sweep_triples(a1_max: int, gen_max: int) -> Iterator[tuple[int, int, int]]:
    for a1 in range(1, a1_max + 1):
        for a2 in range(a1 + 1, gen_max + 1):
            for a3 in range(a2 + 1, gen_max + 1):
                if math.gcd(a1, a2, a3) == 1:
                    yield a1, a2, a3


def cmd_verify(a1_max: int, gen_max: int) -> tuple[CliReport, str, int]:
    if a1_max < 1 or gen_max < 1:
        raise CliFailure(EXIT_INVALID, "--a1-max and --gen-max must be positive")
    checked = 0
    for triple in sweep_triples(a1_max, gen_max):
        values = all_methods(*triple)
        checked += 1
        if len(set(values.values())) != 1:
            payload = {"checked": checked, "agree": False,
                       "counterexample": list(triple), "values": values}
            text = f"disagreement at {_fmt_gens(triple)}: " + ", ".join(
                f"{k}={v}" for k, v in values.items()
            )
            return (CliReport("verify", {"a1_max": a1_max, "gen_max": gen_max}, payload),
                    text, EXIT_VERIFY_FAILED)
    payload = {"checked": checked, "agree": True}
    text = f"checked {checked} triples: all methods agree"
    return CliReport("verify", {"a1_max": a1_max, "gen_max": gen_max}, payload), text, EXIT_OK


# -- argument handling ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxdenum", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON reports")
    common.add_argument("--timing", action="store_true", help="report elapsed milliseconds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dmax", parents=[common], help="maximal denumerant of S")
    p.add_argument("generators", help="comma separated generators or @file")
    p.add_argument("--method", default="auto",
                   choices=["auto", "general", "min-h", "ceiling", "bezout"])

    p = sub.add_parser("factor", parents=[common], help="factorizations of an element")
    p.add_argument("generators")
    p.add_argument("element", type=int)
    p.add_argument("--maximal", action="store_true", help="only maximal-length factorizations")

    p = sub.add_parser("reduced", parents=[common], help="maximally reduced elements")
    p.add_argument("generators")

    p = sub.add_parser("table", parents=[common], help="d_max table at fixed multiplicity")
    p.add_argument("--multiplicity", type=int, required=True)
    p.add_argument("--max-gen", type=int, required=True)
    p.add_argument("--basic-only", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="cross-check all methods on a sweep")
    p.add_argument("--a1-max", type=int, required=True)
    p.add_argument("--gen-max", type=int, required=True)
    return parser


def _emit(report: CliReport, text: str, args: argparse.Namespace,
          started: float, out: TextIO) -> None:
    if args.timing:
        report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(text, file=out)
        if args.timing:
            print(f"elapsed: {report.elapsed_ms} ms", file=out)


def _fail(exc: CliFailure, args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.json:
        print(json.dumps({"command": args.command, "error": str(exc), "exit_code": exc.code}),
              file=out)
    else:
        print(f"error: {exc}", file=err)
    return exc.code


def _run_one(args: argparse.Namespace, spec: Optional[str]) -> tuple[CliReport, str, int]:
    if args.command == "verify":
        return cmd_verify(args.a1_max, args.gen_max)
    if args.command == "table":
        return (*cmd_table(args.multiplicity, args.max_gen, args.basic_only), EXIT_OK)
    assert spec is not None
    raw = parse_generators(spec)
    if args.command == "dmax":
        return (*cmd_dmax(raw, args.method), EXIT_OK)
    if args.command == "factor":
        return (*cmd_factor(raw, args.element, args.maximal), EXIT_OK)
    return (*cmd_reduced(raw), EXIT_OK)


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = sys.stdin,
         stdout: TextIO = sys.stdout, stderr: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "generators"):
        try:
            specs: list[Optional[str]] = list(_generator_specs(args.generators, stdin))
        except CliFailure as exc:
            return _fail(exc, args, stdout, stderr)
    else:
        specs = [None]

    code = EXIT_OK
    for spec in specs:
        started = time.perf_counter()
        try:
            report, text, status = _run_one(args, spec)
        except CliFailure as exc:
            code = max(code, _fail(exc, args, stdout, stderr))
            continue
        _emit(report, text, args, started, stdout)
        code = max(code, status)
    return code


if __name__ == "__main__":
    sys.exit(main())
