"""``hk``: command-line access to the library.

Every report is a sequence of ``KEY: VALUE`` lines on stdout.  Exit codes:
0 for success / true / no violations, 1 for a false predicate or violations,
2 for usage, parse and precondition errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import classify as cl
from .claims import check_all
from .constructions import product, quotient
from .core import KrasnerError, Verdict, verify_axioms
from .fixtures import file_endos
from .ideals import (colon, enumerate_hyperideals, is_hyperideal, is_maximal, is_theta_maximal,
                     prime_radical, radical, theta_radical)
from .morphisms import enumerate_endomorphisms, from_labels, identity
from .textio import format_set, format_tuple, load, parse_label_list, serialize
from .theorems import SEARCH_PROPERTIES, THEOREMS, CorpusEntry, format_reports, run_suite, search

KINDS = ("prime", "primary", "endo-prime", "endo-primary", "strongly-endo-prime", "maximal",
         "theta-maximal", "domain", "theta-domain")


class UsageError(KrasnerError):
    pass


def _out(key, value):
    print(f"{key}: {value}")


def _parse_ideal(H, text):
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    try:
        E = frozenset(H.index(x) for x in parse_label_list(text))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad element list {text!r}: {exc}") from exc
    v = is_hyperideal(H, E)
    if not v:
        raise UsageError(f"{format_set(H, E)} is not a hyperideal of {H.name} "
                         f"(witness {_fmt_witness(H, v.witness)})")
    return E


def _resolve_endo(sf, name):
    H = sf.table
    if name in sf.endos:
        return from_labels(sf.endos[name], H, name=name)
    if name == "identity":
        return identity(H)
    for th in enumerate_endomorphisms(H):
        if th.name == name:
            return th
    known = sorted(set(sf.endos) | {th.name for th in enumerate_endomorphisms(H)})
    raise UsageError(f"unknown endomorphism {name!r}; known: {', '.join(known)}")


def _fmt_witness(H, w):
    if w is None:
        return "-"
    if w and isinstance(w[0], tuple):
        return "(" + ",".join(format_set(H, s) for s in w) + ")"
    if all(isinstance(x, int) for x in w):
        return format_tuple(H, w)
    return str(w)


def cmd_verify(args):
    status = 0
    for path in args.files:
        sf = load(path)
        rep = verify_axioms(sf.table)
        for line in rep.lines(sf.table):
            print(line)
        status |= 0 if rep.passed else 1
    return status


def cmd_ideals(args):
    H = load(args.file).table
    ideals = enumerate_hyperideals(H)
    _out("structure", H.name)
    _out("count", len(ideals))
    for I in ideals:
        tags = []
        if I.is_proper:
            if cl.is_prime(H, I):
                tags.append("prime")
            if is_maximal(H, I):
                tags.append("maximal")
        _out("ideal", format_set(H, I.members) + (" " + " ".join(tags) if tags else ""))
    return 0


def cmd_endos(args):
    sf = load(args.file)
    H = sf.table
    endos = enumerate_endomorphisms(H, cap=args.cap)
    _out("structure", H.name)
    _out("count", len(endos))
    for th in endos:
        _out("endo", f"{th.name} " + " ".join(f"{a}->{b}" for a, b in th.label_map().items()))
    return 0


def cmd_classify(args):
    sf = load(args.file)
    H = sf.table
    theta = _resolve_endo(sf, args.endo)
    kind = args.kind
    if kind in ("domain", "theta-domain"):
        E = frozenset({H.zero})
    else:
        if args.ideal is None:
            raise UsageError(f"--ideal is required for --kind {kind}")
        E = _parse_ideal(H, args.ideal)
    pos = args.positions
    if kind == "prime":
        v = cl.is_prime(H, E)
    elif kind == "primary":
        v = cl.is_primary(H, E, pos)
    elif kind == "endo-prime":
        v = cl.is_endo_prime(H, E, theta, pos)
    elif kind == "endo-primary":
        v = cl.is_endo_primary(H, E, theta, pos)
    elif kind == "strongly-endo-prime":
        v = cl.is_strongly_endo_prime(H, E, theta, pos)
    elif kind == "maximal":
        v = Verdict("maximal", is_maximal(H, E))
    elif kind == "theta-maximal":
        v = is_theta_maximal(H, E, theta)
    elif kind == "domain":
        v = cl.is_hyperintegral_domain(H)
    else:
        v = cl.is_theta_domain(H, theta, pos)
    _out("structure", H.name)
    _out("kind", kind)
    if kind not in ("domain", "theta-domain"):
        _out("ideal", format_set(H, E))
    if kind.startswith(("endo", "strongly", "theta")):
        _out("endo", theta.name)
    _out("result", "true" if v else "false")
    if not v and v.witness is not None:
        _out("witness", _fmt_witness(H, v.witness))
        if v.position is not None:
            _out("position", v.position)
    return 0 if v else 1


def cmd_radical(args):
    sf = load(args.file)
    H = sf.table
    E = _parse_ideal(H, args.ideal)
    _out("ideal", format_set(H, E))
    _out("radical", format_set(H, radical(H, E)))
    _out("prime-radical", format_set(H, prime_radical(H, E)))
    if args.endo:
        theta = _resolve_endo(sf, args.endo)
        _out("theta-radical", f"{format_set(H, theta_radical(H, E, theta))} ({theta.name})")
    return 0


def cmd_colon(args):
    H = load(args.file).table
    E = _parse_ideal(H, args.ideal)
    by = args.by.strip().strip("{}")
    A = [H.index(x) for x in parse_label_list(by)]
    if not A:
        raise UsageError("--by needs at least one element")
    _out("ideal", format_set(H, E))
    _out("by", format_set(H, A))
    _out("colon", format_set(H, colon(H, E, A)))
    return 0


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
        _out("written", out)
    else:
        sys.stdout.write(text)


def cmd_quotient(args):
    H = load(args.file).table
    E = _parse_ideal(H, args.ideal)
    Q = quotient(H, E, args.name)
    _emit(serialize(Q.table), args.output)
    return 0


def cmd_product(args):
    H1, H2 = load(args.first).table, load(args.second).table
    _emit(serialize(product(H1, H2, args.name)), args.output)
    return 0


def _corpus(files, endos_opt):
    donor = None
    if endos_opt not in ("all", "declared"):
        donor = load(endos_opt)
    corpus = []
    for path in files:
        sf = load(path)
        if endos_opt == "all":
            corpus.append(CorpusEntry(sf.table))
        elif endos_opt == "declared":
            corpus.append(CorpusEntry(sf.table, file_endos(sf)))
        else:
            corpus.append(CorpusEntry(sf.table, [from_labels(m, sf.table, name=n)
                                                 for n, m in donor.endos.items()]))
    return corpus


def cmd_theorems(args):
    only = None
    if args.only:
        only = [t.strip() for t in args.only.split(",") if t.strip()]
        unknown = [t for t in only if t not in THEOREMS]
        if unknown:
            raise UsageError(f"unknown theorem ids {unknown}; known: {', '.join(THEOREMS)}")
    reports = run_suite(_corpus(args.files, args.endos), only=only, positions=args.positions,
                        require_scalar_identity=not args.allow_nonneutral_one)
    sys.stdout.write(format_reports(reports, timing=args.timing))
    return 1 if any(r.violations for r in reports) else 0


def cmd_search(args):
    hits = search(_corpus(args.files, args.endos), args.property, args.positions)
    _out("property", args.property)
    _out("count", len(hits))
    for H, E, th in hits:
        _out("found", f"{H.name} {format_set(H, E)} {th.name}")
    return 0 if hits else 1


def cmd_paper_examples(args):
    failed = 0
    for claim, ok, detail in check_all():
        failed += not ok
        line = f"{'pass' if ok else 'FAIL'} {claim.key}: {claim.statement}"
        _out("claim", line + (f" [{detail}]" if detail else ""))
    _out("failed", failed)
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="hk", description="Finite Krasner (m,n)-hyperring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check the hyperring axioms")
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("ideals", help="list all hyperideals")
    s.add_argument("file")
    s.set_defaults(func=cmd_ideals)

    s = sub.add_parser("endos", help="enumerate endomorphisms")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=10**7, help="search node budget")
    s.set_defaults(func=cmd_endos)

    s = sub.add_parser("classify", help="evaluate a predicate on a hyperideal")
    s.add_argument("file")
    s.add_argument("--ideal")
    s.add_argument("--endo", default="identity")
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--positions", choices=cl.POSITIONS, default="every")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("radical", help="radical, prime radical and theta-radical")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--endo")
    s.set_defaults(func=cmd_radical)

    s = sub.add_parser("colon", help="(E : A)")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--by", required=True)
    s.set_defaults(func=cmd_colon)

    s = sub.add_parser("quotient", help="quotient by a hyperideal, as a structure file")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--name")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("product", help="direct product of two structures")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--name")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_product)

    for name, func, helptext in (("theorems", cmd_theorems, "run the theorem suite"),
                                 ("search", cmd_search, "search for separating examples")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("files", nargs="+")
        s.add_argument("--endos", default="all",
                       help="'all' (enumerate), 'declared' (endo lines of each file) or a FILE "
                            "whose endo lines apply to every structure")
        s.add_argument("--positions", choices=cl.POSITIONS, default="every")
        s.set_defaults(func=func)
    theorems = sub.choices["theorems"]
    theorems.add_argument("--only", help="comma separated ids, e.g. T1,T4")
    theorems.add_argument("--allow-nonneutral-one", action="store_true",
                          help="do not skip structures whose declared one is not neutral")
    theorems.add_argument("--timing", action="store_true")
    sub.choices["search"].add_argument("--property", choices=SEARCH_PROPERTIES, required=True)

    s = sub.add_parser("paper-examples", help="check the facts about the bundled fixtures")
    s.set_defaults(func=cmd_paper_examples)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (KrasnerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
