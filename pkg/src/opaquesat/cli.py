"""Command line surface.

Exit codes: 0 success, 1 a property failed to hold (not a backdoor, not
a member, subsolver rejects, disagreement), 2 usage or parameter error,
3 unreadable or malformed input.  Results go to stdout, diagnostics to
stderr.  Machine output (--json, bench CSV) is schema stable and stamps
the tool version, plus the seed where one applies.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .backbone import backbone_fixed_variables, has_large_backbone, is_backbone
from .backdoor import (
    BackdoorCertificate,
    find_smallest_strong_backdoor,
    solve_via_backdoor,
    verify_strong_backdoor,
)
from .bench import records_to_csv, run_benchmark
from .constructions import (
    family_metadata_comment,
    pad_backdoor_family,
    pad_backbone_family,
    recognize_backdoor_family,
    recognize_backbone_family,
    reduce_sat_to_large_backbone,
)
from .core import CnfFormula, cnf_to_prop
from .dimacs import emit_dimacs, parse_dimacs
from .errors import (
    InvalidBeta,
    InvalidParameters,
    NotAStrongBackdoor,
    OpaqueSatError,
    ParseError,
    ReductionHookFailure,
    TooManyVariables,
    UnknownVariable,
    VariableNotInFormula,
    ZeroVariableFormula,
    EmptyBackdoorSet,
)
from .proptext import emit_formula, parse_formula
from .solver import brute_force_model_count, brute_force_solve, dpll_solve
from .subsolver import up_subsolve

USAGE_ERROR = 2
INPUT_ERROR = 3


def _diag(message: str) -> None:
    print(f"opaquesat: {message}", file=sys.stderr)


def _parse_beta(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidBeta(f"cannot read beta from {text!r}") from exc


def _parse_variable_list(text: str) -> list[int]:
    out = []
    for token in text.split(","):
        token = token.strip()
        if token.startswith("x"):
            token = token[1:]
        if not token.isdigit() or int(token) < 1:
            raise InvalidParameters(f"bad variable {token!r} in -S")
        out.append(int(token))
    return out


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _is_dimacs(text: str) -> bool:
    return any(line.lstrip().startswith("p cnf") for line in text.splitlines())


def _load_cnf(path: str) -> CnfFormula:
    text = _read_text(path)
    if not _is_dimacs(text):
        raise ParseError(f"{path} is not DIMACS CNF (no 'p cnf' line)")
    return parse_dimacs(text)


def _load_any(path: str):
    text = _read_text(path)
    if _is_dimacs(text):
        return parse_dimacs(text)
    return parse_formula(text)


def _load_prop(path: str):
    formula = _load_any(path)
    return cnf_to_prop(formula) if isinstance(formula, CnfFormula) else formula


def _emit_payload(args, payload: dict, human_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"version": __version__, **payload}, indent=2))
    else:
        for line in human_lines:
            print(line)


def _model_text(model) -> str:
    return " ".join(f"x{v}={'T' if model[v] else 'F'}" for v in sorted(model))


# -- solve -------------------------------------------------------------------


def cmd_solve(args) -> int:
    if args.up:
        formula = _load_cnf(args.file)
        outcome = up_subsolve(formula)
        payload = outcome.to_json_dict()
        if not args.trace:
            payload.pop("trace")
        lines = [f"outcome: {'rejects' if outcome.rejected else 'determines'}"]
        if outcome.determined:
            lines.append(f"verdict: {payload['verdict']}")
            if outcome.result.model is not None:
                lines.append(f"model: {_model_text(outcome.result.model)}")
        if args.trace:
            for step in payload.get("trace", []):
                lines.append(
                    f"step {step['step']}: clause {step['clause']} "
                    f"sets x{step['variable']}={'T' if step['value'] else 'F'}"
                )
        _emit_payload(args, payload, lines)
        return 0 if outcome.determined else 1

    formula = _load_any(args.file)
    if args.oracle:
        result = brute_force_solve(formula)
        count = brute_force_model_count(formula)
        payload = {**result.to_json_dict(), "model_count": count}
        lines = [f"verdict: {payload['verdict']}", f"model count: {count}"]
        if result.model is not None:
            lines.insert(1, f"model: {_model_text(result.model)}")
        _emit_payload(args, payload, lines)
        return 0

    if not isinstance(formula, CnfFormula):
        _diag("DPLL needs DIMACS CNF input; use --oracle for general formulas")
        return USAGE_ERROR
    result, stats = dpll_solve(formula)
    payload = {**result.to_json_dict(), "stats": stats.to_json_dict()}
    lines = [f"verdict: {payload['verdict']}"]
    if result.model is not None:
        lines.append(f"model: {_model_text(result.model)}")
    lines.append(
        f"decisions: {stats.decisions} propagations: {stats.propagations} "
        f"elapsed: {stats.elapsed:.6f}s"
    )
    _emit_payload(args, payload, lines)
    return 0


# -- backdoor ----------------------------------------------------------------


def cmd_backdoor(args) -> int:
    formula = _load_cnf(args.file)
    if args.action == "verify":
        if not args.variables:
            _diag("verify needs -S")
            return USAGE_ERROR
        outcome = verify_strong_backdoor(formula, _parse_variable_list(args.variables))
        if isinstance(outcome, BackdoorCertificate):
            branches = len(outcome.branch_outcomes)
            _emit_payload(
                args,
                {"strong_backdoor": True, **outcome.to_json_dict()},
                [
                    f"strong backdoor: yes ({branches} branches determined)",
                    f"variables: {sorted(outcome.backdoor)}",
                ],
            )
            return 0
        _emit_payload(
            args,
            {"strong_backdoor": False, **outcome.to_json_dict()},
            ["strong backdoor: no", f"rejected branch: {dict(outcome.failing_assignment)}"],
        )
        return 1
    if args.action == "find":
        found = find_smallest_strong_backdoor(formula, args.cap)
        if found is None:
            _diag("no strong backdoor within the size cap")
            return 1
        subset, certificate = found
        _emit_payload(
            args,
            {"smallest_backdoor": sorted(subset), **certificate.to_json_dict()},
            [f"smallest strong backdoor: {sorted(subset)} (size {len(subset)})"],
        )
        return 0
    # solve through a given backdoor
    if not args.variables:
        _diag("solve needs -S")
        return USAGE_ERROR
    result, calls = solve_via_backdoor(formula, _parse_variable_list(args.variables))
    payload = {**result.to_json_dict(), "subsolver_calls": calls}
    lines = [f"verdict: {payload['verdict']}", f"subsolver calls: {calls}"]
    if result.model is not None:
        lines.insert(1, f"model: {_model_text(result.model)}")
    _emit_payload(args, payload, lines)
    return 0


# -- backbone ----------------------------------------------------------------


def cmd_backbone(args) -> int:
    formula = _load_any(args.file)
    if args.action == "report":
        report = backbone_fixed_variables(formula)
        payload = report.to_json_dict()
        lines = [f"satisfiable: {report.satisfiable}"]
        if report.fixed:
            lines.append(
                "fixed: "
                + " ".join(f"x{v}={'T' if report.fixed[v] else 'F'}" for v in sorted(report.fixed))
            )
        else:
            lines.append("fixed: (none)")
        _emit_payload(args, payload, lines)
        return 0
    if args.action == "check":
        if not args.variables:
            _diag("check needs -S")
            return USAGE_ERROR
        subset = _parse_variable_list(args.variables)
        answer = is_backbone(formula, subset)
        _emit_payload(
            args,
            {"subset": sorted(subset), "backbone": answer},
            [f"backbone: {'yes' if answer else 'no'}"],
        )
        return 0 if answer else 1
    # large
    if not args.beta:
        _diag("large needs --beta")
        return USAGE_ERROR
    beta = _parse_beta(args.beta)
    answer = has_large_backbone(formula, beta)
    _emit_payload(
        args,
        {"beta": str(beta), "large_backbone": answer},
        [f"backbone of size >= {beta} * variables: {'yes' if answer else 'no'}"],
    )
    return 0 if answer else 1


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.construction == "pad-backdoor":
        base = _load_cnf(args.file)
        instance = pad_backdoor_family(base, args.k)
        text = emit_dimacs(
            instance.padded, comments=[f"opaque-sat {family_metadata_comment(instance)}"]
        )
    elif args.construction == "pad-backbone":
        base = _load_prop(args.file)
        instance = pad_backbone_family(base, _parse_beta(args.beta))
        text = emit_formula(instance.padded, comments=(family_metadata_comment(instance),))
    else:  # reduce
        beta = _parse_beta(args.beta)
        source = _load_prop(args.file)
        padded = reduce_sat_to_large_backbone(source, beta)
        instance = recognize_backbone_family(padded, beta)
        text = emit_formula(padded, comments=(family_metadata_comment(instance),))
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


# -- recognize ---------------------------------------------------------------


def cmd_recognize(args) -> int:
    if args.family == "backdoor":
        formula = _load_cnf(args.file)
        instance = recognize_backdoor_family(formula, args.k)
    else:
        formula = _load_prop(args.file)
        instance = recognize_backbone_family(formula, _parse_beta(args.beta))
    if instance is None:
        _diag("not a member")
        return 1
    payload = instance.to_json_dict()
    lines = [
        f"member: yes (family={payload['family']})",
        f"base variables: {payload['base_variables']}",
        f"tail variables: {len(payload['tail_variables'])}",
    ]
    _emit_payload(args, payload, lines)
    return 0


# -- bench -------------------------------------------------------------------


def cmd_bench(args) -> int:
    try:
        records = run_benchmark(
            base_vars=args.base_vars,
            base_clauses=args.base_clauses,
            k=args.k,
            count=args.count,
            seed=args.seed,
            search_cap=args.search_cap,
            search_timeout=args.search_timeout,
        )
    except AssertionError as exc:
        _diag(str(exc))
        return 1
    sys.stdout.write(records_to_csv(records, seed=args.seed, version=__version__))
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opaquesat",
        description="satisfiability structural analysis: subsolving, backdoors, backbones, padded families",
    )
    parser.add_argument("--version", action="version", version=f"opaquesat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide satisfiability of a formula file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="brute force enumeration instead of DPLL")
    p.add_argument("--up", action="store_true", help="run the unit propagation subsolver alone")
    p.add_argument("--trace", action="store_true", help="include the propagation trace (with --up)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("backdoor", help="strong backdoor operations on a CNF file")
    p.add_argument("action", choices=["verify", "find", "solve"])
    p.add_argument("file")
    p.add_argument("-S", dest="variables", help="comma separated variables, x-prefix optional")
    p.add_argument("--cap", type=int, default=None, help="size cap for find")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_backdoor)

    p = sub.add_parser("backbone", help="backbone operations on a formula file")
    p.add_argument("action", choices=["report", "check", "large"])
    p.add_argument("file")
    p.add_argument("-S", dest="variables", help="comma separated variables (for check)")
    p.add_argument("--beta", help="rational p/q (for large)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_backbone)

    p = sub.add_parser("gen", help="generate padded family instances")
    p.add_argument("construction", choices=["pad-backdoor", "pad-backbone", "reduce"])
    p.add_argument("file")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--beta", default="1/2")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("recognize", help="test membership in a padded family")
    p.add_argument("family", choices=["backdoor", "backbone"])
    p.add_argument("file")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--beta", default="1/2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_recognize)

    p = sub.add_parser("bench", help="benchmark guided versus blind backdoor use")
    p.add_argument("--base-vars", type=int, required=True)
    p.add_argument("--base-clauses", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--search-cap", type=int, default=2)
    p.add_argument("--search-timeout", type=float, default=2.0, help="seconds per blind search")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.handler(args)
    except ParseError as exc:
        _diag(str(exc))
        return INPUT_ERROR
    except OSError as exc:
        _diag(str(exc))
        return INPUT_ERROR
    except NotAStrongBackdoor as exc:
        _diag(str(exc))
        return 1
    except (
        InvalidBeta,
        InvalidParameters,
        ZeroVariableFormula,
        EmptyBackdoorSet,
        VariableNotInFormula,
        UnknownVariable,
        TooManyVariables,
        ReductionHookFailure,
    ) as exc:
        _diag(str(exc))
        return USAGE_ERROR
    except OpaqueSatError as exc:
        _diag(str(exc))
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
