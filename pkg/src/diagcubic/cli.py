"""Command-line front end.

Exit codes: 0 when the computation ran, 1 when a requested property (point,
criterion, witness) was not found, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .eisenstein import EisensteinInt, format_eisenstein, parse_eisenstein
from .localsolve import (
    CurveSpec,
    everywhere_locally_solvable,
    solvable_generic_local,
    solvable_kq,
    solvable_lambda,
    solvable_Q3,
    solvable_Qp,
)
from .oracle import brute_local, count_solutions_mod, finite_field_point_count
from .residues import SymbolError, cubic_symbol
from .selmer import compute_selmer
from .surface import (
    SelmerDimensionError,
    everywhere_local_surface,
    normalize,
    selmer_ratio_criterion,
    surface_point_search,
    theorem28_pipeline,
    theorem33_witness_search,
    theorem35_criteria,
)

SD_HYPOTHESIS = "Sha(E_A/K) finite for every curve x^3 + y^3 = A z^3 over every quadratic field K"
SYMBOLS = {0: "1", 1: "w", 2: "w^2"}


class UsageError(ValueError):
    pass


def _ring_element(text: str) -> int | EisensteinInt:
    x = parse_eisenstein(text)
    return x.a if x.is_rational() else x


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def _place(text: str) -> int | EisensteinInt:
    if text.strip().lower() in ("lambda", "l"):
        return EisensteinInt(1, -1)
    return _ring_element(text)


# ---------------------------------------------------------------------------
# subcommands; each returns (result, hypotheses, exit_code, human_rows)


def cmd_symbol(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    alpha, q = parse_eisenstein(args.alpha), parse_eisenstein(args.q)
    e = cubic_symbol(alpha, q)
    res = {"alpha": format_eisenstein(alpha), "q": format_eisenstein(q), "exponent": e, "symbol": SYMBOLS[e]}
    return res, [], 0, [("symbol", SYMBOLS[e])]


def _local_one(curve: CurveSpec, place: int | EisensteinInt):
    if isinstance(place, int):
        if place == 3:
            return solvable_Q3(curve)
        return solvable_Qp(curve, place)
    if place.norm() == 3:
        return solvable_lambda(curve)
    return solvable_kq(curve, place)


def cmd_local(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    coeffs = [_ring_element(t) for t in (args.a, args.b, args.c)]
    curve = CurveSpec(*coeffs)
    if args.all:
        if not curve.is_rational:
            raise UsageError("--all needs rational coefficients")
        ok, verdicts = everywhere_locally_solvable(curve)
        res = {"curve": str(curve), "everywhere_locally_solvable": ok, "verdicts": [v.to_dict() for v in verdicts]}
        rows = [(v.place, _word(v.solvable), v.case) for v in verdicts]
        rows.append(("all places", _word(ok), ""))
        return res, [], 0, rows
    if args.prime is None:
        raise UsageError("give --prime P or --all")
    place = _place(args.prime)
    v = _local_one(curve, place)
    res = {"curve": str(curve), "verdict": v.to_dict()}
    rows = [("curve", str(curve)), ("place", v.place), ("verdict", _word(v.solvable)), ("case", v.case)]
    rows += [(k, _text(val)) for k, val in v.certificate.items()]
    if args.enumerate:
        g = solvable_generic_local(curve, place)
        res["enumeration"] = g.to_dict()
        rows.append(("enumeration", _word(g.solvable)))
    return res, [], 0, rows


def cmd_selmer(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    A = _integer(args.A)
    r = compute_selmer(A, witness_bound=args.witness_bound)
    res = r.to_dict()
    rows = [
        ("A", A),
        ("dimension", r.dimension),
        ("basis", ", ".join(str(b) for b in r.basis)),
        ("s", r.s),
        ("s0", r.s0),
        ("root_sign", r.root_sign),
    ]
    if r.conditional_statement():
        rows.append(("conditional", r.conditional_statement()))
    return res, r.hypotheses(), 0, rows


def cmd_surface(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    coeffs = [_integer(t) for t in (args.a1, args.a2, args.a3, args.a4)]
    s = normalize(*coeffs, form=args.form)
    els, local = everywhere_local_surface(s)
    ratio = selmer_ratio_criterion(s)
    res: dict[str, Any] = {
        "surface": s.to_dict(),
        "everywhere_locally_solvable": els,
        "local_splittings": {str(p): (w.to_dict() if w else None) for p, w in local.items()},
        "selmer_ratio_criterion": ratio,
    }
    rows: list = [("surface", s.describe()), ("everywhere locally solvable", _word(els))]
    rows += [(f"  C_{p}", w.C if w else "none") for p, w in local.items()]
    rows.append(("ratio criterion", ratio))
    hyps: list[str] = []
    code = 0
    if args.criteria:
        rep = theorem35_criteria(s)
        wit = theorem33_witness_search(s) if els else None
        res["criteria"] = rep.to_dict()
        res["witness"] = wit.to_dict() if wit else None
        rows.append(("criteria", ", ".join(rep.labels) or "none"))
        rows.append(("witness", f"p1={wit.p1.prime} C={wit.p1.C}; p3={wit.p3.prime} C={wit.p3.C}" if wit else "none"))
        if rep.hits or wit:
            hyps.append(SD_HYPOTHESIS)
            res["conditional_statement"] = f"If {SD_HYPOTHESIS}, then V has a rational point"
        elif not ratio:
            code = 1
    if args.search:
        pt = surface_point_search(s, args.search, threads=args.threads)
        res["search_bound"] = args.search
        res["point"] = list(pt) if pt else None
        res["point_original"] = list(s.to_original(pt)) if pt else None
        rows.append((f"point (|x| <= {args.search})", pt if pt else "none"))
        if pt is None:
            code = 1
    if els and ratio:
        res["hasse_principle"] = "ratio criterion applies: V(Q) nonempty iff V is everywhere locally solvable"
    return res, hyps, code, rows


def cmd_theorem28(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    ps = [_integer(t) for t in (args.p1, args.p2, args.p3)]
    rep = theorem28_pipeline(*ps, search=args.search, threads=args.threads)
    res = rep.to_dict()
    rows = [
        ("primes", " ".join(map(str, rep.ordered))),
        ("residues mod 9", " ".join(str(p % 9) for p in rep.ordered)),
        ("pattern", rep.pattern),
        ("surface", rep.surface.describe()),
    ]
    if rep.A is not None:
        rows += [
            ("A", rep.A),
            ("S(A) basis", ", ".join(str(b) for b in rep.selmer.basis)),
            ("distinguished class", rep.distinguished_class),
            ("torsor", str(rep.torsor)),
            ("conditional", rep.conditional_statement),
        ]
    if rep.surface_point is not None:
        rows.append(("rational point", f"{rep.surface_point} ({rep.point_source})"))
    code = 1 if args.search and rep.surface_point is None else 0
    return res, rep.hypotheses, code, rows


def cmd_oracle(args: argparse.Namespace) -> tuple[dict, list, int, list]:
    if args.oracle_cmd == "count":
        curve = CurveSpec(*(_integer(t) for t in (args.a, args.b, args.c)))
        r = count_solutions_mod(curve, args.mod)
        res = {"curve": str(curve), "modulus": r.modulus, "nontrivial_solutions": r.nontrivial_solutions,
               "representatives": [list(t) for t in r.representatives]}
        return res, [], 0, [("curve", str(curve)), (f"solutions mod {r.modulus}", r.nontrivial_solutions)]
    curve = CurveSpec(*(_ring_element(t) for t in (args.a, args.b, args.c)))
    place = _place(args.place)
    if args.oracle_cmd == "brute":
        b = brute_local(curve, place, args.depth)
        res = {"curve": str(curve), "place": b.place, "solvable": b.solvable, "depth": b.depth,
               "certified_bound": b.certified_bound, "point": [_text(x) for x in b.point] if b.point else None,
               "detail": b.detail}
        verdict = "unknown" if b.solvable is None else _word(b.solvable)
        return res, [], 0, [("curve", str(curve)), ("place", b.place), ("verdict", verdict), ("depth", b.depth)]
    n = finite_field_point_count(curve, place)
    return {"curve": str(curve), "place": _text(place), "points": n}, [], 0, [("points", n)]


# ---------------------------------------------------------------------------


def _word(ok: bool) -> str:
    return "solvable" if ok else "insolvable"


def _text(x: Any) -> str:
    if isinstance(x, EisensteinInt):
        return format_eisenstein(x)
    return str(x)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope")
    common.add_argument("--threads", type=int, default=1, help="worker processes for point searches")
    p = argparse.ArgumentParser(prog="diagcubic", description="Diagonal cubic curves and surfaces over Q and Q(w).")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("symbol", parents=[common], help="cubic residue symbol (alpha/q)_3")
    sp.add_argument("alpha")
    sp.add_argument("q")

    sp = sub.add_parser("local", parents=[common], help="local solvability of a x^3 + b y^3 = c z^3")
    for name in ("a", "b", "c"):
        sp.add_argument(name)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--prime", help="rational prime, Eisenstein prime a+b*w, or 'lambda'")
    grp.add_argument("--all", action="store_true", help="every place of Q")
    sp.add_argument("--enumerate", action="store_true", help="also run the certified enumeration")

    sp = sub.add_parser("selmer", parents=[common], help="sqrt(-3)-Selmer group of x^3 + y^3 = A z^3")
    sp.add_argument("A")
    sp.add_argument("--witness-bound", type=int, default=6)

    sp = sub.add_parser("surface", parents=[common], help="diagonal cubic surface analysis")
    for name in ("a1", "a2", "a3", "a4"):
        sp.add_argument(name)
    sp.add_argument("--form", choices=("sum", "split"), default="sum")
    sp.add_argument("--criteria", action="store_true")
    sp.add_argument("--search", type=int, default=0, metavar="N")

    sp = sub.add_parser("theorem28", parents=[common], help="three-prime family x1^3 + p1p2 x2^3 + p2p3 x3^3 + p3p1 x4^3 = 0")
    for name in ("p1", "p2", "p3"):
        sp.add_argument(name)
    sp.add_argument("--search", type=int, default=0, metavar="N")

    sp = sub.add_parser("oracle", help="brute-force cross-checks")
    osub = sp.add_subparsers(dest="oracle_cmd", required=True)
    op = osub.add_parser("count", parents=[common], help="solutions mod n")
    for name in ("a", "b", "c"):
        op.add_argument(name)
    op.add_argument("--mod", type=int, default=9)
    op = osub.add_parser("brute", parents=[common], help="depth-first local point search")
    for name in ("a", "b", "c"):
        op.add_argument(name)
    op.add_argument("--place", required=True)
    op.add_argument("--depth", type=int)
    op = osub.add_parser("points", parents=[common], help="points over the residue field")
    for name in ("a", "b", "c"):
        op.add_argument(name)
    op.add_argument("--place", required=True)
    return p


HANDLERS = {
    "symbol": cmd_symbol,
    "local": cmd_local,
    "selmer": cmd_selmer,
    "surface": cmd_surface,
    "theorem28": cmd_theorem28,
    "oracle": cmd_oracle,
}


def envelope(command: str, inputs: dict, result: Any, hypotheses: list[str]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "conditional_hypotheses": hypotheses,
        "version": __version__,
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, default=str)


def _print_rows(rows: list) -> None:
    width = max((len(str(r[0])) for r in rows), default=0)
    for r in rows:
        print(f"{str(r[0]):<{width}}  " + "  ".join(str(x) for x in r[1:]))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, hyps, code, rows = HANDLERS[args.command](args)
    except (UsageError, SymbolError, ValueError, ZeroDivisionError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SelmerDimensionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    if args.json:
        inputs = {k: v for k, v in vars(args).items() if k not in ("json",)}
        print(dumps(envelope(args.command, inputs, result, hyps)))
    else:
        _print_rows(rows)
        for h in hyps:
            print(f"assumes: {h}")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
