"""Command-line front end.

Exit status: 0 on success or a decisive verdict, 2 on parse/validation
errors, 3 when the decider answers Unknown.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decider
from .counting import cnt_sym, mul_sym, profile, unification_condition
from .encoder import encode_poly, verify_encoding
from .equalizer import equalize
from .oracle import brute_force
from .poly import IntPoly, PolyParseError, parse_poly, print_poly
from .syntax import ParseError, ValidationError, parse_file, parse_subst, parse_term, print_problem
from .terms import Problem, TermError, Var, is_unifier, occ_sym, render

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 2, 3


def _poly(p: IntPoly) -> str:
    return print_poly(p, var="h")


def _emit(args, human: list[str], machine: dict):
    if args.machine:
        print(json.dumps(machine, indent=2, sort_keys=True))
    else:
        print("\n".join(human))


def _load(args):
    return parse_file(Path(args.file).read_text())


def _point(text: str | None, n: int) -> tuple[int, ...] | None:
    if text is None:
        return None
    vals = tuple(int(v) for v in text.split(","))
    if len(vals) == 1 and n > 1:
        vals = vals * n
    if len(vals) != n or any(v < 0 for v in vals):
        raise ValueError(f"--at needs {n} natural numbers")
    return vals


def _problem_json(p: Problem) -> dict:
    return {
        "signature": [[s.name, s.arity] for s in p.signature.symbols],
        "fvar": p.fvar,
        "arity": p.arity,
        "equations": [[render(e.lhs), render(e.rhs)] for e in p.equations],
    }


def cmd_parse(args) -> int:
    pf = _load(args)
    text = print_problem(pf.problem, pf.terms)
    _emit(args, [text.rstrip("\n")], {"problem": _problem_json(pf.problem), "canonical": text})
    return EXIT_OK


def cmd_count(args) -> int:
    pf = _load(args)
    p = pf.problem
    n = p.arity or 1
    at = _point(args.at, n)
    terms = list(pf.terms) + [parse_term(t, p.signature, p.fvar) for t in args.term]
    base = p.signature.base_symbols()
    human, machine = [], {"at": list(at) if at else None, "terms": [], "profile": None}

    def show(label, poly):
        line = f"  {label} = {_poly(poly)}"
        if at is not None:
            line += f"  [{poly.eval(at)} at h={','.join(map(str, at))}]"
        human.append(line)
        return {"poly": poly.to_json(), "value": poly.eval(at) if at else None}

    for t in terms:
        human.append(f"term {render(t)}")
        entry = {"term": render(t), "mul": show("mul", mul_sym(t, p.fvar, n)), "cnt": {}}
        for c in base:
            entry["cnt"][c] = show(f"cnt({c})", cnt_sym(t, c, p.fvar, n))
        machine["terms"].append(entry)
    if p.equations:
        prof = profile(p)
        human.append(f"problem ({len(p.equations)} equations)")
        mp = {"mul_l": show("mul_l", prof.mul_l), "mul_r": show("mul_r", prof.mul_r)}
        mp["cnt_l"] = {c: show(f"cnt_l({c})", prof.cnt_l[c]) for c in base}
        mp["cnt_r"] = {c: show(f"cnt_r({c})", prof.cnt_r[c]) for c in base}
        machine["profile"] = mp
    _emit(args, human, machine)
    return EXIT_OK


def cmd_encode(args) -> int:
    enc = encode_poly(parse_poly(args.poly, args.nvars), fvar=args.fvar)
    ok = verify_encoding(enc)
    text = print_problem(enc.problem, header=f"encodes: {print_poly(enc.source)}")
    if args.out:
        Path(args.out).write_text(text)
    human = [text.rstrip("\n")] if not args.out else [f"wrote {args.out}"]
    human.append(f"# verified: {ok}")
    _emit(args, human, {"problem": _problem_json(enc.problem), "source": enc.source.to_json(),
                        "text": text, "verified": ok})
    return EXIT_OK


def cmd_condition(args) -> int:
    p = _load(args).problem
    sigma = parse_subst(args.sub, p.signature, p.fvar)
    if sigma.arity != p.arity:
        raise ValidationError([f"substitution arity {sigma.arity} != {p.arity}"])
    prof = profile(p)
    hs = sigma.holes()
    d = prof.mul_diff.eval(hs)
    rows, human = [], [f"{sigma}", f"h = {list(hs)}, mul_l - mul_r = {d}"]
    for c in prof.symbols():
        k, nc = occ_sym(c, sigma.body), prof.cnt_diff(c).eval(hs)
        rows.append({"symbol": c, "occ": k, "lhs": k * d, "rhs": nc, "holds": k * d == nc})
        human.append(f"  {c}: {k}*{d} = {k * d}  vs  cnt_r - cnt_l = {nc}  {'ok' if k * d == nc else 'FAILS'}")
    cond = unification_condition(p, sigma)
    uni = is_unifier(p, sigma)
    human += [f"condition: {cond}", f"unifier: {uni}"]
    _emit(args, human, {"binding": str(sigma), "h": list(hs), "mul_diff": d, "rows": rows,
                        "condition": cond, "unifier": uni})
    return EXIT_OK


def cmd_equalize(args) -> int:
    p = _load(args).problem
    ws = equalize(p, args.bound, args.symbol or None)
    human = [f"h={','.join(map(str, w.hs))}  counts={dict(w.counts)}" for w in ws]
    human.append(f"{len(ws)} witnesses; bounded search exhausted at bound {args.bound}")
    _emit(args, human, {"bound": args.bound, "exhausted": True,
                        "witnesses": [{"h": list(w.hs), "counts": dict(w.counts)} for w in ws]})
    return EXIT_OK


def _verdict_json(v) -> dict:
    out = {"verdict": type(v).__name__}
    if isinstance(v, decider.Unifiable):
        out["binding"] = str(v.binding)
    if isinstance(v, decider.Unknown):
        out["reason"] = v.reason
    return out


def cmd_decide(args) -> int:
    p = _load(args).problem
    tr = decider.decide_report(p, args.budget, args.max_candidates)
    rep, v = tr.fragment, tr.verdict
    human = [
        f"hU_literal={rep.hU_literal} hU_safe={rep.hU_safe} witnesses={list(rep.witnesses)} "
        f"certified={rep.certified}"
    ]
    for b in tr.branches:
        fc = b.forced
        detail = dict(fc.counts) if fc.status == decider.CONSISTENT else (fc.reason or sorted(fc.free))
        human.append(f"  h'={b.hprime}: {fc.status} {detail} -> {b.outcome} ({b.tested} tested)")
    machine = _verdict_json(v)
    machine["fragment"] = {
        "hU_literal": rep.hU_literal, "hU_safe": rep.hU_safe, "witnesses": list(rep.witnesses),
        "in_fragment": rep.in_fragment, "certified": rep.certified,
        "mul_const": rep.mul_const, "cnt_consts": dict(rep.cnt_consts),
    }
    machine["branches"] = [
        {"hprime": b.hprime, "status": b.forced.status, "counts": dict(b.forced.counts),
         "free": sorted(b.forced.free), "reason": b.forced.reason, "outcome": b.outcome,
         "tested": b.tested}
        for b in tr.branches
    ]
    if isinstance(v, decider.Unifiable):
        human.append(f"Unifiable: {v.binding}")
    elif isinstance(v, decider.NotInFragment):
        human.append("NotInFragment")
        trivial = p.binding(Var(1)) if p.arity == 1 else None
        if trivial is not None and is_unifier(p, trivial):
            human.append(f"hint: {trivial} unifies (checked directly)")
            machine["hint"] = str(trivial)
    elif isinstance(v, decider.Unknown):
        human.append(f"Unknown: {v.reason}")
    else:
        human.append("NotUnifiable")
    _emit(args, human, machine)
    return EXIT_UNKNOWN if isinstance(v, decider.Unknown) else EXIT_OK


def cmd_oracle(args) -> int:
    p = _load(args).problem
    res = brute_force(p, args.size)
    human = [str(s) for s in res.unifiers]
    human.append(f"{len(res.unifiers)} unifiers among {res.tested} bodies of size <= {args.size}")
    _emit(args, human, {"size_bound": res.size_bound, "exhausted": res.exhausted,
                        "tested": res.tested, "unifiers": [str(s) for s in res.unifiers]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="JSON output")
    withfile = argparse.ArgumentParser(add_help=False, parents=[common])
    withfile.add_argument("--file", required=True, help="problem file")

    ap = argparse.ArgumentParser(prog="sogu", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[withfile], help="validate and print canonical form")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("count", parents=[withfile], help="multiplier/counter polynomials")
    p.add_argument("--at", help="evaluate at h (comma-separated for n > 1)")
    p.add_argument("--term", action="append", default=[], help="extra term to count")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("encode", parents=[common], help="polynomial to problem")
    p.add_argument("--poly", required=True)
    p.add_argument("--nvars", type=int)
    p.add_argument("--fvar", default="F")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("condition", parents=[withfile], help="check the unification condition")
    p.add_argument("--sub", required=True, help="e.g. 'sub F(x) = g(x,x)'")
    p.set_defaults(func=cmd_condition)

    p = sub.add_parser("equalize", parents=[withfile], help="bounded equalizer search")
    p.add_argument("--bound", type=_nat, default=16)
    p.add_argument("--symbol", action="append", default=[], help="restrict to base symbol")
    p.set_defaults(func=cmd_equalize)

    p = sub.add_parser("decide", parents=[withfile], help="decide a unary problem")
    p.add_argument("--budget", type=_nat, default=32, help="max candidate body size")
    p.add_argument("--max-candidates", type=_nat, default=decider.DEFAULT_MAX_CANDIDATES)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", parents=[withfile], help="brute-force unifier search")
    p.add_argument("--size", type=_nat, default=9)
    p.set_defaults(func=cmd_oracle)
    return ap


def _nat(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        for v in exc.violations:
            print(f"error: {v}", file=sys.stderr)
    except (ParseError, PolyParseError, TermError, decider.FragmentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
