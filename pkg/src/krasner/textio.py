"""Line-oriented ``.hkr`` text format for hyperring tables and endomorphisms.

Grammar (``#`` starts a comment, blank lines ignored)::

    hyperring NAME
    m INT
    n INT
    elements L0 L1 ...
    zero L
    one L                     # optional
    commutative add           # optional, also "commutative mul"
    add a1 .. am -> b1 b2 ..
    mul a1 .. an -> b
    mul default -> b          # optional catch-all for missing mul rows
    endo NAME: a->b c->d ..   # optional, must be total

Labels are any whitespace-free tokens not containing ``->``.  With a
commutative flag set, rows that are permutations of each other must agree
and each ordered tuple may appear at most once.

:func:`serialize` writes sorted tuples only under a commutative flag, and
uses ``mul default`` for a value that fills at least half the mul rows.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from .core import HyperringTable, KrasnerError

__all__ = ["ParseError", "StructureFile", "parse_structure", "load", "serialize",
           "parse_label_list", "format_set", "format_tuple"]


class ParseError(KrasnerError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 path: str | None = None):
        self.line, self.column, self.path = line, column, path
        where = ""
        if line is not None:
            where = f"{path or '<text>'}:{line}:{column or 1}: "
        super().__init__(where + message)


@dataclass
class StructureFile:
    table: HyperringTable
    endos: dict[str, dict[str, str]] = field(default_factory=dict)
    path: str | None = None
    line_map: dict[tuple, int] = field(default_factory=dict)


_HEADER_KEYS = ("hyperring", "m", "n", "elements", "zero", "one")


def parse_structure(text: str, path: str | None = None) -> StructureFile:
    header: dict[str, object] = {}
    flags: set[str] = set()
    add_rows: dict[tuple, tuple] = {}
    mul_rows: dict[tuple, str] = {}
    mul_default: str | None = None
    endos: dict[str, dict[str, str]] = {}
    line_map: dict[tuple, int] = {}
    endo_lines: dict[str, int] = {}

    def fail(msg, lineno, col=1):
        raise ParseError(msg, lineno, col, path)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = len(raw) - len(raw.lstrip()) + 1
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in _HEADER_KEYS:
            if key in header:
                fail(f"duplicate '{key}' line", lineno, col)
            if not rest:
                fail(f"'{key}' needs a value", lineno, col)
            if key in ("m", "n"):
                try:
                    header[key] = int(rest)
                except ValueError:
                    fail(f"'{key}' must be an integer, got {rest!r}", lineno, col)
            elif key == "elements":
                header[key] = rest.split()
            else:
                header[key] = rest
        elif key == "commutative":
            if rest not in ("add", "mul"):
                fail(f"expected 'commutative add' or 'commutative mul', got {rest!r}", lineno, col)
            flags.add(rest)
        elif key in ("add", "mul"):
            lhs, arrow, rhs = rest.partition("->")
            if not arrow:
                fail(f"missing '->' in {key} row", lineno, col)
            args, vals = tuple(lhs.split()), rhs.split()
            if key == "mul" and args == ("default",):
                if mul_default is not None:
                    fail("duplicate 'mul default' row", lineno, col)
                if len(vals) != 1:
                    fail("mul default must map to exactly one element", lineno, col)
                mul_default = vals[0]
                continue
            rows = add_rows if key == "add" else mul_rows
            if args in rows:
                fail(f"duplicate tuple ({','.join(args)}) in {key}", lineno, col)
            if not vals:
                fail(f"empty image in {key} row", lineno, col)
            if key == "mul" and len(vals) != 1:
                fail("mul row must map to exactly one element", lineno, col)
            rows[args] = tuple(vals) if key == "add" else vals[0]
            line_map[(key, args)] = lineno
        elif key == "endo":
            name, colon, body = rest.partition(":")
            name = name.strip()
            if not colon or not name:
                fail("endo line must look like 'endo NAME: a->b ...'", lineno, col)
            if name in endos:
                fail(f"duplicate endo {name!r}", lineno, col)
            mapping: dict[str, str] = {}
            for pair in body.split():
                a, arrow, b = pair.partition("->")
                if not arrow or not a or not b:
                    fail(f"bad endo pair {pair!r}", lineno, col)
                if a in mapping:
                    fail(f"endo {name!r} maps {a!r} twice", lineno, col)
                mapping[a] = b
            endos[name] = mapping
            endo_lines[name] = lineno
        else:
            fail(f"unknown directive {key!r}", lineno, col)

    for req in ("hyperring", "m", "n", "elements", "zero"):
        if req not in header:
            if req == "zero":
                raise ParseError("missing zero", None, None, path)
            raise ParseError(f"missing '{req}' line", None, None, path)

    m, n = header["m"], header["n"]
    elements = header["elements"]
    known = set(elements)
    if len(known) != len(elements):
        raise ParseError("duplicate element labels", None, None, path)

    def check_label(x, where):
        if x not in known:
            fail(f"unknown element {x!r}", line_map.get(where))

    for lab in ("zero", "one"):
        if lab in header and header[lab] not in known:
            raise ParseError(f"{lab} {header[lab]!r} is not an element", None, None, path)
    for kind, rows, arity in (("add", add_rows, m), ("mul", mul_rows, n)):
        for args, vals in rows.items():
            if len(args) != arity:
                fail(f"{kind} row has {len(args)} arguments, expected {arity}",
                     line_map[(kind, args)])
            for x in args + (vals if kind == "add" else (vals,)):
                check_label(x, (kind, args))
    if mul_default is not None and mul_default not in known:
        raise ParseError(f"unknown element {mul_default!r} in mul default", None, None, path)

    # commutative consistency: permutations of one multiset must agree
    order = {e: i for i, e in enumerate(elements)}
    for kind, rows in (("add", add_rows), ("mul", mul_rows)):
        if kind not in flags:
            continue
        canon: dict[tuple, tuple] = {}
        for args, vals in rows.items():
            c = tuple(sorted(args, key=order.__getitem__))
            v = frozenset(vals) if kind == "add" else vals
            if c in canon and canon[c][1] != v:
                fail(f"rows ({','.join(canon[c][0])}) and ({','.join(args)}) disagree "
                     f"under 'commutative {kind}'", line_map[(kind, args)])
            canon.setdefault(c, (args, v))

    # completeness
    for kind, rows, arity in (("add", add_rows, m), ("mul", mul_rows, n)):
        comm = kind in flags
        have = {tuple(sorted(a, key=order.__getitem__)) for a in rows} if comm else set(rows)
        for t in product(elements, repeat=arity):
            probe = tuple(sorted(t, key=order.__getitem__)) if comm else t
            if probe not in have and not (kind == "mul" and mul_default is not None):
                raise ParseError(f"missing tuple ({','.join(probe)}) in {kind} table",
                                 None, None, path)
    if mul_default is not None:
        comm = "mul" in flags
        have = {tuple(sorted(a, key=order.__getitem__)) for a in mul_rows} if comm else set(mul_rows)
        for t in product(elements, repeat=n):
            probe = tuple(sorted(t, key=order.__getitem__)) if comm else t
            if probe not in have:
                mul_rows[probe] = mul_default
                have.add(probe)

    try:
        table = HyperringTable.from_labels(
            header["hyperring"], m, n, elements, add_rows, mul_rows, header["zero"],
            header.get("one"), "add" in flags, "mul" in flags)
    except KrasnerError as exc:
        raise ParseError(str(exc), None, None, path) from exc

    for name, mapping in endos.items():
        missing = [e for e in elements if e not in mapping]
        unknown = [x for x in list(mapping) + list(mapping.values()) if x not in known]
        if unknown:
            fail(f"endo {name!r}: unknown element {unknown[0]!r}", endo_lines[name])
        if missing:
            fail(f"endo {name!r} is not total: no image for {missing[0]!r}", endo_lines[name])
    return StructureFile(table, endos, path, line_map)


def load(path) -> StructureFile:
    path = Path(path)
    return parse_structure(path.read_text(encoding="utf-8"), str(path))


def serialize(H: HyperringTable, endos: dict[str, dict[str, str]] | None = None) -> str:
    """Canonical text for ``H``; canonical tuples only under commutative flags."""
    E = H.elements
    out = [f"hyperring {H.name}", f"m {H.m}", f"n {H.n}", "elements " + " ".join(E),
           f"zero {E[H.zero]}"]
    if H.one is not None:
        out.append(f"one {E[H.one]}")
    if H.commutative_add:
        out.append("commutative add")
    if H.commutative_mul:
        out.append("commutative mul")
    for t in product(H.carrier, repeat=H.m):
        if H.commutative_add and tuple(sorted(t)) != t:
            continue
        out.append("add " + " ".join(E[i] for i in t) + " -> "
                   + " ".join(E[i] for i in sorted(H.add[t])))
    rows = [t for t in product(H.carrier, repeat=H.n)
            if not (H.commutative_mul and tuple(sorted(t)) != t)]
    # a value filling at least half the rows becomes the ``mul default`` line
    counts = Counter(H.mul[t] for t in rows)
    default, hits = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if 2 * hits < len(rows):
        default = None
    else:
        out.append(f"mul default -> {E[default]}")
    for t in rows:
        if H.mul[t] != default:
            out.append("mul " + " ".join(E[i] for i in t) + " -> " + E[H.mul[t]])
    for name, mapping in (endos or {}).items():
        out.append(f"endo {name}: " + " ".join(f"{a}->{mapping[a]}" for a in E))
    return "\n".join(out) + "\n"


def parse_label_list(text: str) -> list[str]:
    """Split ``"0,1"`` or ``"(0,0),(0,1)"`` on commas outside brackets."""
    items, depth, cur = [], 0, []
    for ch in text.strip():
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        items.append("".join(cur).strip())
    return [x for x in items if x]


def format_set(H: HyperringTable, items) -> str:
    return "{" + ",".join(H.labels(items)) + "}"


def format_tuple(H: HyperringTable, t) -> str:
    return "(" + ",".join(H.label(i) for i in t) + ")"
