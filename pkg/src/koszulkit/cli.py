"""Command-line front end: ``koszulkit <subcommand> [flags]``.

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import algebra_core as ac
from . import bv_small, complexes, hilbert, recipes, young_schur

SCHEMA = 1


class InputError(Exception):
    """Reported with exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    fixture: Optional[str] = None
    max_weight: Optional[int] = None
    order: Optional[int] = None
    fmt: str = "json"
    threads: int = 1
    debug_matrices: Optional[str] = None


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(payload: dict, fmt: str, text: Optional[str] = None, csv: Optional[str] = None) -> None:
    if fmt == "json":
        body = {"schema": SCHEMA, **payload}
        sys.stdout.write(json.dumps(_jsonable(body), indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        if csv is None:
            raise InputError("csv output is not available for this subcommand")
        sys.stdout.write(csv)
    else:
        sys.stdout.write(text if text is not None else json.dumps(_jsonable(payload), indent=2, ensure_ascii=False) + "\n")


def resolve_fixture(fixture: Optional[str], input_path: Optional[str]) -> ac.QuadraticPresentation:
    if input_path:
        fixture = f"file:{input_path}"
    if not fixture:
        raise InputError("give --fixture sv:<n> | g2n:<N> | file:<path>, or --input <path>")
    kind, _, arg = fixture.partition(":")
    try:
        if kind == "sv":
            n = int(arg)
            if n < 0:
                raise ValueError
            return ac.sv_presentation(n)
        if kind == "g2n":
            return ac.g2n_presentation(int(arg))
    except ValueError as e:
        raise InputError(f"bad fixture argument {fixture!r}: {e}") from None
    if kind == "file":
        path = Path(arg)
        if not path.is_file():
            raise InputError(f"no such file: {arg}")
        try:
            return ac.load_presentation(path)
        except ValueError as e:
            raise InputError(f"{arg}: {e}") from None
    raise InputError(f"unknown fixture {fixture!r}; expected sv:<n>, g2n:<N> or file:<path>")


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("KOSZULKIT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"KOSZULKIT_THREADS must be an integer, got {env!r}") from None
    return 1


def _need(value, name, default):
    v = default if value is None else value
    if v < 0:
        raise InputError(f"{name} must be >= 0")
    return v


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ac.DependentQuadricWarning)
        pres = resolve_fixture(args.fixture, args.input)
    notes = [str(w.message) for w in caught if issubclass(w.category, ac.DependentQuadricWarning)]
    canon = ac.format_presentation(pres)
    payload = {
        "n": pres.n,
        "m": pres.m,
        "generators": list(pres.generator_names),
        "relations": list(pres.relation_names),
        "warnings": notes,
        "canonical": canon,
    }
    _emit(payload, args.format, text=canon + "\n" + "".join(f"# warning: {w}\n" for w in notes))
    return 0


def cmd_hilbert(args) -> int:
    pres = resolve_fixture(args.fixture, args.input)
    N = _need(args.order, "--order", 8)
    H = hilbert.hilbert_series(pres, N)
    h = hilbert.numerator(H, pres.n)
    payload = {"order": N, "series": H.as_ints(), "numerator": h}
    text = f"H(t) = {H}\n"
    if h is None:
        hint = f"numerator not stabilized: increase --order (try {max(3 * N, 9)})"
        payload["hint"] = hint
        text += hint + "\n"
    else:
        text += f"h(t) = {hilbert.TruncatedSeries.from_poly(h, len(h) - 1).polynomial_str()}  over (1-t)^{pres.n}\n"
    _emit(payload, args.format, text=text)
    return 0


def cmd_deviations(args) -> int:
    pres = resolve_fixture(args.fixture, args.input)
    N = _need(args.order, "--order", 8)
    H = hilbert.hilbert_series(pres, N)
    check_order = min(N, args.check_order)
    check = hilbert.koszul_series_check(pres, check_order)
    try:
        dv = hilbert.deviations(H, formal=not check.passed)
    except hilbert.InconsistentSeriesError as e:
        raise InputError(str(e)) from None
    payload = {**dv.to_json(), "koszul_check_order": check_order}
    text = "epsilon: " + " ".join(map(str, dv.epsilons)) + ("  (formal)" if dv.formal else "") + "\n"
    _emit(payload, args.format, text=text)
    return 0


def cmd_dual(args) -> int:
    pres = resolve_fixture(args.fixture, args.input)
    N = _need(args.order, "--order", 6)
    dual = ac.koszul_dual(pres)
    check = hilbert.koszul_series_check(pres, N)
    payload = {
        "relation_space_dim": len(dual.relation_space),
        "dual_dims": check.dual.as_ints(),
        "koszul_series_check": {"passed": check.passed, "first_failing_degree": check.first_failing_degree, "order": N},
    }
    text = (
        f"dim Q^perp = {len(dual.relation_space)}\n"
        f"H_A!(t) = {check.dual}\n"
        f"H_A(t) H_A!(-t) = 1 mod t^{N + 1}: {'pass' if check.passed else f'FAIL at degree {check.first_failing_degree}'}\n"
    )
    _emit(payload, args.format, text=text)
    return 0 if check.passed else 1


def _betti_out(args, table, cx=None) -> None:
    if args.debug_matrices and cx is not None:
        cx.dump_matrices(args.debug_matrices)
    _emit(table.to_json(), args.format, text=table.to_text(), csv=table.to_csv())


def cmd_syzygies(args) -> int:
    pres = resolve_fixture(args.fixture, args.input)
    w = _need(args.max_weight, "--max-weight", 6)
    cx = complexes.build_koszul_complex(pres, w)
    _betti_out(args, complexes.homology(cx, _threads(args)), cx)
    return 0


def cmd_berkovits(args) -> int:
    pres = resolve_fixture(args.fixture, args.input)
    w = _need(args.max_weight, "--max-weight", 5)
    cx = complexes.build_berkovits_complex(pres, w)
    _betti_out(args, complexes.homology(cx, _threads(args)), cx)
    return 0


def cmd_bv_small(args) -> int:
    w = _need(args.max_weight, "--max-weight", 7)
    signs = list(bv_small.DEFAULT_TOP_SIGNS)
    for i in args.drop_top_term or ():
        if not 1 <= i <= 5:
            raise InputError("--drop-top-term takes indices 1..5")
        signs[i - 1] = 0
    cx = bv_small.build_bv_complex(w, signs)
    if args.debug_matrices:
        cx.dump_matrices(args.debug_matrices)
    table = complexes.homology(cx, _threads(args))
    rep = bv_small.check_L3_free(w, signs)
    payload = {**table.to_json(), "freeness": rep.to_json(), "generator_series": rep.generators.as_ints()}
    text = table.to_text() + f"g(t) = {rep.generators}\nH^2 = 0: {'pass' if rep.passed else 'FAIL'}" + (f" ({rep.note})" if rep.note else "") + "\n"
    _emit(payload, args.format, text=text, csv=table.to_csv())
    return 0 if rep.passed else 1


def cmd_schur(args) -> int:
    try:
        shapes = [young_schur.parse_shape(s) for s in args.shapes]
    except ValueError as e:
        raise InputError(str(e)) from None
    if not shapes:
        raise InputError("give at least one shape")
    rows = args.rows
    if args.power is not None:
        if len(shapes) != 1 or args.power < 1:
            raise InputError("--power takes one shape and k >= 1")
        exp = young_schur.schur_power(shapes[0], args.power, rows)
    else:
        exp = young_schur.SchurExpansion.from_dict({shapes[0]: 1}) if rows is None or len(shapes[0]) <= rows else young_schur.SchurExpansion()
        for lam in shapes[1:]:
            exp = young_schur.schur_product(exp, young_schur.SchurExpansion.from_dict({lam: 1}), rows)
    payload = {"expansion": exp.to_json(), "text": str(exp)}
    if rows is not None:
        payload["dimension"] = exp.dimension(rows)
    _emit(payload, args.format, text=str(exp) + "\n")
    return 0


def cmd_check_g25(args) -> int:
    w = _need(args.max_weight, "--max-weight", 7)
    if w < 5:
        raise InputError("--max-weight must be >= 5 for check-g25 (c* sits in weight 5)")
    res = complexes.verify_g25_resolution(w)
    betti = complexes.syzygy_betti(ac.g2n_presentation(5), min(w, 6), _threads(args))
    fp = complexes.g25_frobenius_products(5, "tableau")
    fp_res = complexes.g25_frobenius_products(5, "resolution")
    ok_fp = complexes.frobenius_pattern(fp["normalised"])
    ok_betti = betti.entries == recipes.G25_BETTI
    payload = {
        "resolution": {"passed": res.passed, "failures": [f"{c.name}: {c.detail}" for c in res.failures()]},
        "syzygies": betti.to_json(),
        "syzygies_passed": ok_betti,
        "frobenius": {"passed": ok_fp, "tableau_basis": fp["normalised"], "resolution_basis": fp_res["normalised"]},
    }
    passed = res.passed and ok_betti and ok_fp
    payload["passed"] = passed
    text = (
        f"resolution exact to weight {w}: {'pass' if res.passed else 'FAIL'}\n"
        + betti.to_text()
        + f"Frobenius products (tableau basis): {'pass' if ok_fp else 'FAIL'}\n"
    )
    _emit(payload, args.format, text=text)
    return 0 if passed else 1


def cmd_check_paper(args) -> int:
    results = []

    def report(r):
        if args.format == "text":
            sys.stdout.write(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.title} ({r.seconds:.1f}s)\n")
            sys.stdout.flush()

    results = recipes.run_all(stop_on_failure=True, on_result=report)
    passed = all(r.passed for r in results) and len(results) == len(recipes.CRITERIA)
    if args.format != "text":
        failed = next((r for r in results if not r.passed), None)
        _emit(
            {
                "passed": passed,
                "checks": [r.to_json() for r in results],
                "first_failure": failed.to_json() if failed else None,
            },
            args.format,
        )
    return 0 if passed else 1


COMMANDS = {
    "validate": cmd_validate,
    "hilbert": cmd_hilbert,
    "deviations": cmd_deviations,
    "dual": cmd_dual,
    "syzygies": cmd_syzygies,
    "berkovits": cmd_berkovits,
    "bv-small": cmd_bv_small,
    "schur": cmd_schur,
    "check-g25": cmd_check_g25,
    "check-paper": cmd_check_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixture", help="sv:<n>, g2n:<N> or file:<path>")
    common.add_argument("--input", help="path to a .qpa presentation")
    common.add_argument("--max-weight", type=int)
    common.add_argument("--order", type=int)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--threads", type=int, help="worker threads (fallback: KOSZULKIT_THREADS)")
    common.add_argument("--debug-matrices", metavar="DIR", help="dump differentials as MatrixMarket files")

    p = argparse.ArgumentParser(prog="koszulkit", description="Exact computations for quadratic commutative algebras.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "deviations":
            sp.add_argument("--check-order", type=int, default=6, help="order of the Koszul series check deciding the formal label")
        if name == "bv-small":
            sp.add_argument("--drop-top-term", type=int, action="append", metavar="I", help="zero the y_I term of d(c*) (fault injection)")
        if name == "schur":
            sp.add_argument("shapes", nargs="*", help="[4,1,1] or (1|4)")
            sp.add_argument("--power", type=int)
            sp.add_argument("--rows", type=int, help="keep only shapes with at most this many rows (GL_N)")
    return p


def config_from_args(args) -> RunConfig:
    return RunConfig(
        subcommand=args.subcommand,
        fixture=args.fixture or (f"file:{args.input}" if args.input else None),
        max_weight=args.max_weight,
        order=args.order,
        fmt=args.format,
        threads=_threads(args),
        debug_matrices=args.debug_matrices,
    )


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        config_from_args(args)
        return COMMANDS[args.subcommand](args)
    except InputError as e:
        sys.stderr.write(f"koszulkit: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
