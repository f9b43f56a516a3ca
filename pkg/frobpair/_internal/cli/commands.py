"""the subcommands. each `run_*` writes its report to `out` and returns the exit code; errors are
left to propagate so `main` can map them to exit codes in one place"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import TYPE_CHECKING, Final, final

from frobpair._internal.algebra.field import PrimeField
from frobpair._internal.algebra.parser import parse_poly
from frobpair._internal.algebra.poly import VarContext, format_poly
from frobpair._internal.algebra.roots import ie_roots, pe_decompose
from frobpair._internal.cli.regression import run_regression
from frobpair._internal.curves import (
    HyperellipticModel,
    cartier_manin,
    classify,
    homogenized_equation,
    stratification_kernel,
    stratified_test,
)
from frobpair._internal.level import (
    DEFAULT_E_MAX,
    ExceedsBound,
    Finite,
    LevelOutcome,
    LevelQuery,
    LevelZero,
    level_pair,
    level_single,
    outcome_level,
    verify_certificate,
)

if TYPE_CHECKING:
    from typing import TextIO

    from frobpair._internal.level import FrobeniusCertificate

EXIT_SUCCESS: Final = 0
EXIT_INPUT_ERROR: Final = 2
EXIT_RESOURCE_LIMIT: Final = 3
EXIT_REGRESSION_FAILURE: Final = 4


@final
@dataclass(frozen=True)
class LevelCommand:
    p: int
    vars: tuple[str, ...]
    num: str
    den: str
    e_max: int = DEFAULT_E_MAX
    want_certificate: bool = False
    json: bool = False


@final
@dataclass(frozen=True)
class RootsCommand:
    p: int
    e: int
    vars: tuple[str, ...]
    poly: str
    json: bool = False


@final
@dataclass(frozen=True)
class CurveCommand:
    p: int
    h: str
    stratified_vector: tuple[int, ...] | None = None
    level: bool = False
    e_max: int = DEFAULT_E_MAX
    json: bool = False


@final
@dataclass(frozen=True)
class ExamplesCommand:
    filter: str | None = None
    include_long: bool = False
    json: bool = False
    jobs: int | None = None


def _emit_json(data: object, out: TextIO) -> None:
    json.dump(data, out, indent=2)
    out.write("\n")


def outcome_json(outcome: LevelOutcome) -> dict[str, object]:
    if isinstance(outcome, LevelZero):
        return {"kind": "zero", "e": 0}
    if isinstance(outcome, Finite):
        return {"kind": "finite", "e": outcome.e}
    # "e" is the last level that was tried
    return {"kind": "exceeds_bound", "e": outcome.e_max, "e_max": outcome.e_max}


def certificate_json(certificate: FrobeniusCertificate) -> dict[str, object]:
    return {
        "e": certificate.e,
        "terms": [
            {"alpha": list(term.alpha), "cofactor": format_poly(term.cofactor)}
            for term in certificate
        ],
        "verified": verify_certificate(certificate),
    }


def describe_outcome(outcome: LevelOutcome) -> str:
    if isinstance(outcome, ExceedsBound):
        return f"level > {outcome.e_max} (undetermined)"
    return f"level = {outcome_level(outcome)}"


def run_level(command: LevelCommand, out: TextIO = sys.stdout) -> int:
    field = PrimeField(command.p)
    context = VarContext(command.vars)
    g = parse_poly(command.num, context, field)
    f = parse_poly(command.den, context, field)
    outcome = level_pair(LevelQuery(g, f, command.e_max))
    certificate = outcome.certificate if isinstance(outcome, Finite) else None
    if command.json:
        report: dict[str, object] = {
            "query": {
                "p": command.p,
                "vars": list(command.vars),
                "num": format_poly(g),
                "den": format_poly(f),
                "e_max": command.e_max,
            },
            "outcome": outcome_json(outcome),
        }
        if command.want_certificate and certificate is not None:
            report["certificate"] = certificate_json(certificate)
        _emit_json(report, out)
        return EXIT_SUCCESS
    out.write(describe_outcome(outcome) + "\n")
    if command.want_certificate:
        if isinstance(outcome, LevelZero):
            out.write(f"g/f = {format_poly(outcome.quotient)} is already a polynomial\n")
        elif certificate is not None:
            verified = verify_certificate(certificate)
            out.write(
                f"certificate: e = {certificate.e}, {len(certificate.terms)} terms,"
                f" {'verified' if verified else 'NOT VERIFIED'}\n"
            )
            for term in certificate:
                out.write(f"  alpha = {list(term.alpha)}: {format_poly(term.cofactor)}\n")
    return EXIT_SUCCESS


def run_roots(command: RootsCommand, out: TextIO = sys.stdout) -> int:
    field = PrimeField(command.p)
    f = parse_poly(command.poly, VarContext(command.vars), field)
    decomposition = pe_decompose(f, command.e)
    generators = ie_roots(f, command.e)
    if command.json:
        _emit_json(
            {
                "query": {
                    "p": command.p,
                    "e": command.e,
                    "vars": list(command.vars),
                    "poly": format_poly(f),
                },
                "entries": [
                    {"alpha": list(alpha), "root": format_poly(root)}
                    for alpha, root in decomposition
                ],
                "generators": [format_poly(generator) for generator in generators],
            },
            out,
        )
        return EXIT_SUCCESS
    out.write(f"decomposition over p^e = {command.p ** command.e}:\n")
    for alpha, root in decomposition:
        out.write(f"  {list(alpha)}: {format_poly(root)}\n")
    out.write(f"I_{command.e} = ({', '.join(format_poly(g) for g in generators)})\n")
    return EXIT_SUCCESS


def run_curve(command: CurveCommand, out: TextIO = sys.stdout) -> int:
    model = HyperellipticModel.from_text(command.p, command.h)
    matrix = cartier_manin(model)
    classification = classify(model)
    kernel = stratification_kernel(model)
    stratified = (
        None
        if command.stratified_vector is None
        else stratified_test(model, command.stratified_vector)
    )
    level = (
        level_single(homogenized_equation(model), command.e_max) if command.level else None
    )
    if command.json:
        report: dict[str, object] = {
            "query": {"p": command.p, "h": format_poly(model.h)},
            "genus": model.genus,
            "matrix": matrix.as_lists(),
            "p_rank": classification.p_rank,
            "a_number": classification.a_number,
            "ordinary": classification.ordinary,
            "superspecial": classification.superspecial,
            "kernel": kernel,
        }
        if stratified is not None:
            report["stratified"] = stratified
        if level is not None:
            report["level"] = outcome_json(level)
        _emit_json(report, out)
        return EXIT_SUCCESS
    out.write(f"genus = {model.genus}\ncartier-manin matrix:\n")
    for row in matrix.rows:
        out.write(f"  {list(row)}\n")
    out.write(
        f"p-rank = {classification.p_rank}\n"
        f"a-number = {classification.a_number}\n"
        f"ordinary = {'yes' if classification.ordinary else 'no'}\n"
        f"superspecial = {'yes' if classification.superspecial else 'no'}\n"
        "kernel basis:"
        + ("".join(f"\n  {vector}" for vector in kernel) if kernel else " (none)")
        + "\n"
    )
    if stratified is not None:
        out.write(f"stratified = {'yes' if stratified else 'no'}\n")
    if level is not None:
        out.write(f"plane model {homogenized_equation(model)}: {describe_outcome(level)}\n")
    return EXIT_SUCCESS


def run_examples(command: ExamplesCommand, out: TextIO = sys.stdout) -> int:
    results = run_regression(
        name_filter=command.filter, include_long=command.include_long, jobs=command.jobs
    )
    passed = all(result.passed for result in results)
    if command.json:
        _emit_json(
            {
                "results": [
                    {
                        "name": result.name,
                        "provenance": result.provenance,
                        "passed": result.passed,
                        "detail": result.detail,
                    }
                    for result in results
                ],
                "passed": passed,
            },
            out,
        )
    else:
        for result in results:
            out.write(
                f"{'PASS' if result.passed else 'FAIL'}  {result.name}  ({result.detail})\n"
            )
        out.write(
            f"{sum(result.passed for result in results)}/{len(results)} cases passed\n"
        )
    return EXIT_SUCCESS if passed else EXIT_REGRESSION_FAILURE
