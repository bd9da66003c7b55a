"""Command line front end.

Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
3 rewriting budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import combing, handlebody, wreath
from .braid import braid_eq, perm_of
from .conjrules import format_pure, verify_rules
from .freewords import format_word
from .hecke import conjecture_probe, parse_expr, sigma_reduce
from .hecke.hgn import DEFAULT_BUDGET, ENGINES, STRATEGIES, FailureReport
from .hecke.probe import PROBE_BUDGET
from .syntax import parse_braid, parse_pure

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

CONVENTIONS = """\
index conventions:
  B_m      crossings s1 .. s(m-1)
  P_m      pure generators a<i>.<j>, 1 <= i < j <= m
  B_{g,n}  loops t1 .. t<g>, crossings s<g+1> .. s<g+n-1>; strands 1..g are fixed
  H_{g,n}  as B_{g,n}; t<i>.<j> = s<j-1>..s<g+1> t<i> s<g+1>..s<j-1>,
           t'<i>.<j> = a<i>.<j> = s<j-1>..s<g+1> t<i> s<g+1>^-1..s<j-1>^-1
  powers   any letter may carry ^<int>; "1" is the empty word
"""


class UsageError(Exception):
    pass


def _emit(args, plain: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(plain)


# -- braid / pure ---------------------------------------------------------------------

def cmd_braid_eq(args) -> int:
    u, v = parse_braid(args.w1, args.m), parse_braid(args.w2, args.m)
    same = braid_eq(u, v)
    _emit(args, "equal" if same else "unequal", {"equal": same})
    return EXIT_OK if same else EXIT_NO


def cmd_braid_perm(args) -> int:
    p = perm_of(parse_braid(args.w, args.m))
    _emit(args, str(p), {"perm": str(p), "images": list(p.images)})
    return EXIT_OK


def cmd_pure_comb(args) -> int:
    w = parse_pure(args.w, args.m)
    if args.mode == "vertical":
        form = combing.comb_vertical(w, args.m)
        parts = {f"u{j}": format_pure(u) for j, u in form.columns}
    else:
        form = combing.comb_horizontal(w, args.m)
        parts = {f"v{i}": format_pure(v) for i, v in form.rows}
    _emit(args, str(form), {"mode": args.mode, "components": parts})
    return EXIT_OK


# -- handlebody -----------------------------------------------------------------------

def _handle(args):
    return handlebody.parse_handle(args.w, args.g, args.n)


def cmd_hb_embed(args) -> int:
    b = handlebody.embed(_handle(args))
    _emit(args, str(b), {"strands": b.strands, "word": str(b)})
    return EXIT_OK


def cmd_hb_phi(args) -> int:
    w = handlebody.phi(_handle(args))
    _emit(args, str(w), {"word": str(w)})
    return EXIT_OK


def cmd_hb_psi(args) -> int:
    p = handlebody.psi(_handle(args))
    _emit(args, str(p), {"perm": str(p), "images": list(p.images)})
    return EXIT_OK


def cmd_hb_rdecomp(args) -> int:
    w = _handle(args)
    try:
        d = handlebody.r_decompose(w, allow_tail=args.allow_tail)
    except handlebody.NotInRError as exc:
        _emit(args, f"not in R: {exc}", {"in_r": False, "error": str(exc)})
        return EXIT_NO
    data = {
        "in_r": True,
        "columns": {f"ubar{k}": format_pure(u) for k, u in d.columns},
        "rows": {f"vbar{i}": format_pure(v) for i, v in d.rows},
        "tail": str(d.tail),
        "certificates": {str(k): ok for k, ok in d.certificates().items()},
    }
    _emit(args, str(d), data)
    return EXIT_OK


# -- checks ---------------------------------------------------------------------------

def cmd_check_presentation(args) -> int:
    rep = handlebody.presentation_check(args.g, args.n)
    total, bad = len(rep.instances), rep.failures
    if bad:
        plain = "\n".join([f"{len(bad)} of {total} relation instances fail"] + [str(r) for r in bad])
    else:
        plain = f"all {total} relation instances hold"
    data = {
        "g": args.g, "n": args.n, "total": total,
        "failures": [str(r) for r in bad],
        "families": dict(sorted(Counter(r.family for r in rep.instances).items())),
    }
    _emit(args, plain, data)
    return EXIT_NO if bad else EXIT_OK


def cmd_check_rules(args) -> int:
    inst = verify_rules(args.m)
    bad = [r for r in inst if not r.holds]
    per_rule = Counter(r.rule for r in inst)
    if bad:
        lines = [f"{len(bad)} of {len(inst)} rule instances fail"]
        lines += [f"{r.rule} {dict(r.env)} eps={r.eps}" for r in bad]
        plain = "\n".join(lines)
    else:
        plain = f"all {len(inst)} rule instances hold ({len(per_rule)} rules)"
    data = {
        "m": args.m, "total": len(inst),
        "per_rule": dict(sorted(per_rule.items())),
        "failures": [{"rule": r.rule, "env": dict(r.env), "eps": r.eps} for r in bad],
    }
    _emit(args, plain, data)
    return EXIT_NO if bad else EXIT_OK


# -- wreath ---------------------------------------------------------------------------

def cmd_wreath_nf(args) -> int:
    x = wreath.project(_handle(args))
    cols = {f"h{c}": format_word(h) for c, h in enumerate(x.columns, start=1)}
    plain = " ".join(f"{k}={v}" for k, v in cols.items()) + f" perm={x.perm}"
    _emit(args, plain, {"columns": cols, "perm": str(x.perm), "images": list(x.perm.images)})
    return EXIT_OK


# -- hecke ----------------------------------------------------------------------------

def cmd_hecke_reduce(args) -> int:
    expr = parse_expr(args.expr, args.g, args.n)
    res = sigma_reduce(expr, args.g, args.n, budget=args.budget, strategy=args.strategy, engine=args.engine)
    if isinstance(res, FailureReport):
        data = {
            "status": "budget_exhausted", "steps": res.steps, "budget": res.budget,
            "pending": len(res.stuck),
        }
        _emit(args, f"budget exhausted: {res}", data)
        return EXIT_BUDGET
    terms = [{"coef": str(c), "word": s.word()} for s, c in sorted(res.terms.items(), key=lambda kv: str(kv[0]))]
    _emit(args, str(res), {"status": "reduced", "result": str(res), "terms": terms})
    return EXIT_OK


def cmd_hecke_probe(args) -> int:
    rep = conjecture_probe(args.g, args.n, args.max_len, budget=args.budget, seed=args.seed)
    data = rep.to_json()
    if args.format == "plain":
        print(
            f"g={rep.g} n={rep.n} max_len={rep.max_len}: {rep.reduced}/{rep.total} reduced, "
            f"{rep.failed} over budget, {rep.collisions} collisions, {rep.q1_mismatches} q=1 mismatches"
        )
    else:
        print(json.dumps(data, indent=2, sort_keys=True))
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default=None, help="output format (default plain)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands")

    p = argparse.ArgumentParser(
        prog="hbraid",
        description="Braid groups of handlebodies and their Hecke-type algebras.",
        epilog=CONVENTIONS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    groups = p.add_subparsers(dest="group", required=True)

    def sub(parent, name, func, help_text):
        sp = parent.add_parser(name, parents=[common], help=help_text, epilog=CONVENTIONS,
                               formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=func)
        return sp

    def gn(sp):
        sp.add_argument("-g", type=int, required=True, help="number of fixed strands")
        sp.add_argument("-n", type=int, required=True, help="number of moving strands")

    braid = groups.add_parser("braid", help="words in B_m").add_subparsers(dest="cmd", required=True)
    sp = sub(braid, "eq", cmd_braid_eq, "decide equality of two braid words")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("w1")
    sp.add_argument("w2")
    sp = sub(braid, "perm", cmd_braid_perm, "underlying permutation")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("w")

    pure = groups.add_parser("pure", help="words in P_m").add_subparsers(dest="cmd", required=True)
    sp = sub(pure, "comb", cmd_pure_comb, "comb a pure braid")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--mode", choices=("vertical", "horizontal"), default="vertical")
    sp.add_argument("w")

    hb = groups.add_parser("hb", help="words in B_{g,n}").add_subparsers(dest="cmd", required=True)
    for name, func, text in (
        ("embed", cmd_hb_embed, "the braid on g+n strands"),
        ("phi", cmd_hb_phi, "image in B_n"),
        ("psi", cmd_hb_psi, "permutation of the moving strands"),
        ("rdecomp", cmd_hb_rdecomp, "column and row decomposition of a word in R_{g,n}"),
    ):
        sp = sub(hb, name, func, text)
        gn(sp)
        sp.add_argument("w")
        if name == "rdecomp":
            sp.add_argument("--allow-tail", action="store_true", help="decompose w * phi(w)^-1 instead of refusing")

    check = groups.add_parser("check", help="verification reports").add_subparsers(dest="cmd", required=True)
    sp = sub(check, "presentation", cmd_check_presentation, "defining relations of B_{g,n}")
    gn(sp)
    sp = sub(check, "rules", cmd_check_rules, "conjugation rule tables in P_m")
    sp.add_argument("-m", type=int, required=True)

    wr = groups.add_parser("wreath", help="the quotient G_{g,n}").add_subparsers(dest="cmd", required=True)
    sp = sub(wr, "nf", cmd_wreath_nf, "normal form (h_1, ..., h_n; perm)")
    gn(sp)
    sp.add_argument("w")

    hk = groups.add_parser("hecke", help="the algebra H_{g,n}(q)").add_subparsers(dest="cmd", required=True)
    sp = sub(hk, "reduce", cmd_hecke_reduce, "rewrite an expression toward Sigma_{g,n}")
    gn(sp)
    sp.add_argument("expr")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--strategy", choices=STRATEGIES, default="right")
    sp.add_argument("--engine", choices=ENGINES, default="auto")
    sp = sub(hk, "probe", cmd_hecke_probe, "exhaustive spanning probe (JSON report)")
    gn(sp)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--budget", type=int, default=PROBE_BUDGET, help="rewrite steps per word and strategy")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        for name in ("m", "g", "n", "max_len", "budget"):
            v = getattr(args, name, None)
            if v is not None and v < (0 if name in ("g", "max_len") else 1):
                raise UsageError(f"-{name.replace('_', '-')} must be positive")
        if args.format is None and args.func is not cmd_hecke_probe:
            args.format = "plain"
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hbraid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
