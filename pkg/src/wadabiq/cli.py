"""Command-line front end: ``wadabiq <command> [options]``.

Exit status is 0 on success, 2 when the input does not parse (bad Gauss
code, braid word, group spec or option combination) and 3 when a
structure fails validation (a birack axiom, an invalid group).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import corpus
from .algebra import GroupError, GroupSpecError, cyclic, group_from_spec
from .biquandle import WADA_PAIRS, AxiomError, Biquandle, abelian_wada, from_wada, wada_conditions
from .cocycle import additive_cocycle, mochizuki_cocycle, state_sum
from .coloring import count_colorings
from .diagram import Diagram, DiagramError, diagram_from_text
from .numbering import checkerboard_obstruction, integer_numbering, min_span, mod2_numbering
from .wadagroup import abelianization, hom_count, presentation, simplify

COMMANDS = ("axioms", "color-count", "state-sum", "wada-group", "abelianization",
            "hom-count", "alex-numbering", "span", "obstruct", "corpus")


class UsageError(ValueError):
    """Inconsistent options; reported with exit status 2."""


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wadabiq",
                                 description="Invariants of virtual links from group biquandles.")
    ap.add_argument("command", choices=COMMANDS)
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--gauss", help='signed Gauss code, e.g. "O1+ U2+ O3+ U1+ O2+ U3+"')
    src.add_argument("--braid", help='virtual braid word, e.g. "n=2 s1 s1 v1"')
    src.add_argument("--name", help="corpus entry")
    ap.add_argument("--biquandle", choices=("w1", "w2", "core", "abelian"))
    ap.add_argument("--group", help="z:<n> d:<n> s:<n> sd:<m>:<k>:<a> prod:<spec>x<spec>")
    ap.add_argument("--n", type=int, help="modulus of the abelian Wada biquandle (0 means Z)")
    ap.add_argument("--cocycle", choices=("additive", "mochizuki"), default="additive")
    ap.add_argument("--mirror", action="store_true", help="exchange over and under at every crossing")
    ap.add_argument("--simplify", action="store_true", help="Tietze-simplify presentations")
    ap.add_argument("--bound", type=int, default=10, help="coefficient radius for span search")
    ap.add_argument("--json", action="store_true", help="emit one JSON object")
    ap.add_argument("--threads", type=int, default=1,
                    help="worker cap; every computation currently runs in one thread")
    return ap


# ---------------------------------------------------------------------------
# option resolution


def _diagram(args) -> tuple[Diagram, str]:
    if args.gauss is not None:
        return diagram_from_text(args.gauss, args.mirror), args.gauss
    if args.braid is not None:
        if not args.braid.strip().startswith("n="):
            raise DiagramError("braid text must start with n=<strands>")
        return diagram_from_text(args.braid, args.mirror), args.braid
    if args.name is not None:
        try:
            e = corpus.entry(args.name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return e.diagram(args.mirror), e.text
    raise UsageError("give one of --gauss, --braid, --name")


def _group(args):
    if not args.group:
        raise UsageError("this command needs --group")
    return group_from_spec(args.group)


def _biquandle(args) -> Biquandle:
    if args.biquandle is None:
        raise UsageError("this command needs --biquandle")
    if args.biquandle == "abelian":
        if args.n is None:
            if args.group and args.group.startswith("z:"):
                return from_wada(WADA_PAIRS["w1"], _group(args))
            raise UsageError("--biquandle abelian needs --n")
        return abelian_wada(args.n)
    return from_wada(WADA_PAIRS[args.biquandle], _group(args))


def _kind(args) -> str:
    if args.biquandle not in ("w1", "w2", "core"):
        raise UsageError("this command needs --biquandle w1, w2 or core")
    return args.biquandle


# ---------------------------------------------------------------------------
# commands; each returns (data dict, human-readable text)


def cmd_axioms(args):
    b = _biquandle(args)
    data = {"biquandle": b.name, "order": b.size, "invertible": True,
            "left_invertible": True, "right_invertible": True, "yang_baxter": True,
            "type_one": b.is_biquandle, "wada": None}
    if args.biquandle in WADA_PAIRS:
        rep = wada_conditions(WADA_PAIRS[args.biquandle], _group(args))
        data["wada"] = {"T": rep.T, "M": rep.M, "B": rep.B,
                        "witness": {k: list(v) for k, v in rep.witness.items()}}
    lines = [f"{b.name}: order {b.size}",
             "birack axioms: pass",
             f"type I: {'pass (biquandle)' if b.is_biquandle else 'fail (birack only)'}"]
    if data["wada"] is not None:
        w = data["wada"]
        lines.append("Wada conditions: " + " ".join(
            f"{k}={'pass' if w[k] else 'fail ' + str(tuple(w['witness'][k]))}" for k in "TMB"))
    return data, "\n".join(lines)


def cmd_color_count(args):
    d, _ = _diagram(args)
    b = _biquandle(args)
    n = count_colorings(d, b)
    return {"biquandle": b.name, "count": n}, str(n)


def _cocycle(args, b: Biquandle):
    if args.biquandle != "abelian":
        raise UsageError("state-sum needs --biquandle abelian")
    if args.cocycle == "mochizuki":
        return mochizuki_cocycle(b.size)
    return additive_cocycle(b.size)


def cmd_state_sum(args):
    d, _ = _diagram(args)
    b = _biquandle(args)
    try:
        f = _cocycle(args, b)
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(str(exc)) from None
    phi = state_sum(d, b, f)
    data = {"biquandle": b.name, "cocycle": f.name, "modulus": phi.modulus,
            "terms": {str(k): c for k, c in phi.as_dict().items()},
            "colorings": phi.augmentation, "trivial": phi.is_trivial(), "text": str(phi)}
    return data, str(phi)


def _presentation(args):
    d, _ = _diagram(args)
    p = presentation(d, _kind(args))
    return simplify(p) if args.simplify else p


def cmd_wada_group(args):
    p = _presentation(args)
    data = {"kind": args.biquandle, "generators": list(p.names),
            "relators": [p.format_word(r) for r in p.relators], "text": str(p)}
    return data, str(p)


def cmd_abelianization(args):
    p = _presentation(args)
    s = abelianization(p)
    data = {"kind": args.biquandle, "free_rank": s.free_rank, "torsion": s.torsion,
            "text": s.describe()}
    return data, s.describe()


def cmd_hom_count(args):
    p = _presentation(args)
    G = _group(args)
    n = hom_count(p, G)
    return {"kind": args.biquandle, "group": G.name, "count": n}, str(n)


def _listing(values) -> str:
    return " ".join(f"{e}:{v}" for e, v in enumerate(values))


def cmd_alex_numbering(args):
    d, _ = _diagram(args)
    m2, z = mod2_numbering(d), integer_numbering(d)
    data = {"mod2": m2, "integer": z}
    lines = [
        "mod 2: " + (_listing(m2) if m2 is not None
                     else "none (this diagram admits no mod-2 Alexander numbering)"),
        "integer: " + (_listing(z) if z is not None
                       else "none (this diagram admits no Alexander numbering)"),
    ]
    return data, "\n".join(lines)


def cmd_span(args):
    d, _ = _diagram(args)
    if args.bound < 1:
        raise UsageError("--bound must be at least 1")
    r = min_span(d, args.bound)
    data = {"span": r.span, "witness": list(r.witness) if r.witness else None,
            "basis": r.basis, "bound": r.bound, "proof_bound": r.proof_bound, "exact": r.exact}
    if r.span is None:
        return data, "no nonzero coloring by Z"
    lines = [f"span {r.span}" + ("" if r.exact else f" (searched coefficients up to {r.bound})"),
             "witness: " + _listing(r.witness),
             f"lattice rank {len(r.basis)}"]
    return data, "\n".join(lines)


def cmd_obstruct(args):
    d, _ = _diagram(args)
    n = 0 if args.n is None else args.n
    try:
        r = checkerboard_obstruction(d, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    where = "Z" if n == 0 else f"Z_{n}"
    data = {"n": n, "obstructed": r.obstructed, "weight": r.weight,
            "witness": list(r.witness) if r.witness else None,
            "diagram_numbering": r.diagram_numbering}
    if r.obstructed:
        head = (f"obstructed: the link is not checkerboard colorable "
                f"(a coloring by {where} has weight {r.weight})")
    else:
        head = f"not obstructed by {where}"
    lines = [head]
    if r.witness:
        lines.append("witness: " + _listing(r.witness))
    lines.append("this diagram " + ("admits" if r.diagram_numbering else "admits no")
                 + " mod-2 Alexander numbering")
    return data, "\n".join(lines)


def cmd_corpus(args):
    if args.name is not None:
        try:
            e = corpus.entry(args.name)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        d = e.diagram(args.mirror)
        data = {"name": e.name, "text": e.text, "note": e.note, "diagram": d.to_dict()}
        return data, f"{e.name}: {e.text}\n{e.note}\n{d.to_json()}"
    entries = [{"name": e.name, "text": e.text, "note": e.note} for e in corpus.entries()]
    pairs = [list(p) for p in corpus.equivalent_pairs()]
    width = max(len(e["name"]) for e in entries)
    lines = [f"{e['name']:<{width}}  {e['text']}" for e in entries]
    lines += [f"{a} ~ {b} ({m})" for a, b, m in pairs]
    return {"entries": entries, "equivalent": pairs}, "\n".join(lines)


HANDLERS = {
    "axioms": cmd_axioms, "color-count": cmd_color_count, "state-sum": cmd_state_sum,
    "wada-group": cmd_wada_group, "abelianization": cmd_abelianization,
    "hom-count": cmd_hom_count, "alex-numbering": cmd_alex_numbering, "span": cmd_span,
    "obstruct": cmd_obstruct, "corpus": cmd_corpus,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("wadabiq: --threads must be at least 1", file=err)
        return 2
    try:
        data, text = HANDLERS[args.command](args)
    except (DiagramError, GroupSpecError, UsageError) as exc:
        print(f"wadabiq: {exc}", file=err)
        return 2
    except AxiomError as exc:
        print(f"wadabiq: {exc.axiom} fails, witness {exc.witness}", file=err)
        return 3
    except GroupError as exc:
        print(f"wadabiq: {exc}", file=err)
        return 3
    if args.json:
        print(json.dumps({"command": args.command, **data}), file=out)
    else:
        print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
