"""Executable checks of the Endo-prime / Endo-primary theory on finite corpora.

Each theorem is checked as a statement about finite instances: the suite
enumerates every hyperideal, endomorphism and (where needed) homomorphism
that instantiates the hypothesis, and records instances where the
conclusion fails.  Instances whose hypothesis fails are counted as vacuous.

All theorems presuppose a commutative structure whose declared one is a
scalar identity.  Structures without one are skipped with a note unless
``require_scalar_identity=False``, in which case the declared one is used
verbatim (useful to see exactly which statements depend on neutrality).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .classify import (is_endo_prime, is_endo_primary, is_hyperintegral_domain, is_prime,
                       is_primary, is_strongly_endo_prime, is_theta_domain)
from .constructions import (QuotientStructure, induced_endo, inclusion, product_endo, quotient,
                           restrict)
from .core import HyperringTable, KrasnerError, PreconditionError
from .ideals import (colon, enumerate_hyperideals, image_of, is_hyperideal, is_theta_maximal,
                     max_spectrum, minimal_primes_over, nilpotents, radical, theta_nilpotents,
                     theta_radical)
from .morphisms import Morphism, commutes, enumerate_endomorphisms, identity, kernel

__all__ = ["CorpusEntry", "Violation", "TheoremReport", "THEOREMS", "SEARCH_PROPERTIES",
           "run_suite", "search", "format_reports"]


@dataclass
class CorpusEntry:
    table: HyperringTable
    endos: list[Morphism] | None = None
    factors: tuple[CorpusEntry, CorpusEntry] | None = None
    subrings: list[frozenset[int]] = field(default_factory=list)

    def endomorphisms(self) -> list[Morphism]:
        if self.endos is None:
            self.endos = enumerate_endomorphisms(self.table)
        return self.endos


@dataclass
class Violation:
    structure: str
    ideals: tuple[str, ...]
    endos: tuple[str, ...]
    detail: str

    def line(self) -> str:
        return (f"violation: {self.structure} ideals={';'.join(self.ideals) or '-'} "
                f"endos={','.join(self.endos) or '-'} {self.detail}")


@dataclass
class TheoremReport:
    theorem_id: str
    title: str
    instances_checked: int = 0
    passed: int = 0
    vacuous: int = 0
    violations: list[Violation] = field(default_factory=list)
    skips: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self, timing: bool = False) -> list[str]:
        out = [f"theorem: {self.theorem_id} {self.title}",
               f"  checked: {self.instances_checked} passed: {self.passed} "
               f"vacuous: {self.vacuous} violated: {len(self.violations)}"]
        out += [f"  skip: {s}" for s in self.skips]
        out += ["  " + v.line() for v in self.violations]
        if timing:
            out.append(f"  elapsed: {self.elapsed:.3f}s")
        return out


class _Recorder:
    def __init__(self, report: TheoremReport, H: HyperringTable):
        self.report, self.H = report, H

    def vacuous(self, n: int = 1):
        self.report.instances_checked += n
        self.report.vacuous += n

    def check(self, ok: bool, ideals: Iterable = (), endos: Iterable = (), detail: str = ""):
        self.report.instances_checked += 1
        if ok:
            self.report.passed += 1
            return
        names = tuple("{" + ",".join(self.H.labels(S)) + "}" for S in ideals)
        self.report.violations.append(
            Violation(self.H.name, names, tuple(getattr(t, "name", str(t)) for t in endos),
                      detail))


class _Ctx:
    """Per-structure caches shared by all theorem checks."""

    def __init__(self, entry: CorpusEntry, positions: str):
        self.entry = entry
        self.H = H = entry.table
        self.positions = positions
        self.endos = entry.endomorphisms()
        self.ideals = [I.members for I in enumerate_hyperideals(H)]
        self.proper = [I for I in self.ideals if len(I) < H.size]
        self.full = frozenset(H.carrier)
        self._ep: dict = {}
        self._epy: dict = {}
        self._rad: dict = {}
        self._quot: dict = {}

    def rad(self, E) -> frozenset[int]:
        if E not in self._rad:
            self._rad[E] = radical(self.H, E)
        return self._rad[E]

    def endo_prime(self, E, theta) -> bool:
        key = (E, theta.map)
        if key not in self._ep:
            self._ep[key] = bool(is_endo_prime(self.H, E, theta, self.positions))
        return self._ep[key]

    def endo_primary(self, E, theta) -> bool:
        key = (E, theta.map)
        if key not in self._epy:
            self._epy[key] = bool(is_endo_primary(self.H, E, theta, self.positions))
        return self._epy[key]

    def prime(self, E) -> bool:
        return bool(is_prime(self.H, E))

    def endo_primes(self, theta) -> list[frozenset[int]]:
        return [E for E in self.proper if self.endo_prime(E, theta)]

    def quotient(self, E) -> QuotientStructure | None:
        if E not in self._quot:
            try:
                self._quot[E] = quotient(self.H, E)
            except KrasnerError:
                self._quot[E] = None
        return self._quot[E]

    def is_ideal(self, S) -> bool:
        return bool(is_hyperideal(self.H, S))


def _img(theta, S) -> frozenset[int]:
    return image_of(theta, S)


# -- Endo-prime section -------------------------------------------------------

def _t1(c: _Ctx, r: _Recorder):
    for th in c.endos:
        for E in c.proper:
            if not c.endo_prime(E, th):
                r.vacuous()
                continue
            R = c.rad(E)
            ok = len(R) < c.H.size and c.endo_prime(R, th)
            r.check(ok, [E, R], [th], "rad(E) is not an Endo-prime hyperideal")


def _t2(c: _Ctx, r: _Recorder):
    for th in c.endos:
        for E in c.proper:
            if not c.endo_prime(E, th):
                r.vacuous()
                continue
            r.check(_img(th, E) <= E, [E], [th], "theta(E) is not contained in E")


def _colon_values(c: _Ctx, E) -> list[frozenset[int]]:
    """Every (E:A) for non-empty A, via intersections of the (E:u)."""
    singles = {colon(c.H, E, [u]) for u in c.H.carrier}
    vals = set(singles)
    frontier = set(singles)
    while frontier:
        new = {X & Y for X in frontier for Y in singles} - vals
        vals |= new
        frontier = new
    return sorted(vals, key=lambda S: (len(S), sorted(S)))


def _t3(c: _Ctx, r: _Recorder):
    H = c.H
    for th in c.endos:
        f = th.map
        for E in c.proper:
            if not c.endo_prime(E, th):
                r.vacuous(4)
                continue
            Ep = frozenset(u for u in H.carrier if f[u] in E)
            ok = c.is_ideal(Ep) and len(Ep) < H.size and c.endo_prime(Ep, th)
            r.check(ok, [E, Ep], [th], "(1) {u : theta(u) in E} is not Endo-prime")
            bad = [V for V in _colon_values(c, E)
                   if len(V) < H.size and not (c.is_ideal(V) and c.endo_prime(V, th))]
            r.check(not bad, [E] + bad[:1], [th], "(2) a proper (E:A) is not Endo-prime")
            R = c.rad(E)
            bad3 = [u for u in R if f[u] not in E]
            r.check(not bad3, [E], [th],
                    f"(3) power of {H.label(bad3[0])} in E but theta of it is not" if bad3 else "")
            bad4 = [u for u in H.carrier if f[u] in R and f[f[u]] not in E]
            r.check(not bad4, [E], [th],
                    f"(4) fails at {H.label(bad4[0])}" if bad4 else "")


def _t4(c: _Ctx, r: _Recorder):
    H = c.H
    products = sorted({H.substitute_one(t, i) for t in H.mul for i in range(H.n)})
    for th in c.endos:
        f = th.map
        for E in c.proper:
            c1 = c.endo_prime(E, th)
            c2 = all(principal_set(H, u) <= E or _img(th, colon(H, E, [u])) <= E
                     for u in H.carrier)
            c3 = bool(is_strongly_endo_prime(H, E, th, c.positions))
            c4 = all(colon(H, E, [p]) == E for p in products if f[p] not in E)
            vals = {"1": c1, "2": c2, "3": c3, "4": c4}
            differ = [f"({a})={vals[a]} ({b})={vals[b]}"
                      for a, b in combinations("1234", 2) if vals[a] != vals[b]]
            r.check(not differ, [E], [th], "; ".join(differ))


def principal_set(H: HyperringTable, u: int) -> frozenset[int]:
    return frozenset(H.k_with_ones(u, v) for v in H.carrier)


def _chains(items: list[frozenset[int]]) -> Iterable[list[frozenset[int]]]:
    items = sorted(items, key=len)

    def extend(chain, start):
        if len(chain) >= 2:
            yield list(chain)
        for j in range(start, len(items)):
            if chain[-1] < items[j]:
                yield from extend(chain + [items[j]], j + 1)

    for i, X in enumerate(items):
        yield from extend([X], i + 1)


def _t5(c: _Ctx, r: _Recorder):
    for th in c.endos:
        eps = c.endo_primes(th)
        any_chain = False
        for chain in _chains(eps):
            any_chain = True
            meet = frozenset.intersection(*chain)
            r.check(c.is_ideal(meet) and c.endo_prime(meet, th), chain, [th],
                    "intersection of the chain is not Endo-prime")
        if not any_chain:
            r.vacuous()


def _t6(c: _Ctx, r: _Recorder):
    for th in c.endos:
        for E in c.proper:
            if not c.endo_prime(E, th):
                r.vacuous()
                continue
            for Q in minimal_primes_over(c.H, E):
                Q = Q.members
                tq = _img(th, Q)
                ok = tq <= E and _img(th, E) <= tq and E <= Q
                r.check(ok, [E, Q], [th], "theta(E) <= theta(Q) <= E <= Q fails")


def _t7(c: _Ctx, r: _Recorder):
    primes = [Q for Q in c.proper if c.prime(Q)]
    for th in c.endos:
        if not all(_img(th, Q) == Q for Q in primes):
            r.vacuous()
            continue
        for E in c.proper:
            r.check(c.endo_prime(E, th) == c.prime(E), [E], [th],
                    "Endo-prime and prime disagree although theta fixes every prime")


def _t8(c: _Ctx, r: _Recorder):
    nil = nilpotents(c.H)
    for th in c.endos:
        for E in c.proper:
            if not c.endo_prime(E, th):
                r.vacuous()
                continue
            ok = _img(th, c.rad(E)) <= E and _img(th, nil) <= E
            r.check(ok, [E], [th], "theta(rad(E)) or theta(nilpotents) not inside E")


def _t9(c: _Ctx, r: _Recorder):
    for eta in c.endos:
        for th in c.endos:
            if not commutes(eta, th, th):
                r.vacuous()
                continue
            for E2 in c.endo_primes(th):
                pre = frozenset(u for u in c.H.carrier if eta.map[u] in E2)
                ok = c.is_ideal(pre) and len(pre) < c.H.size and c.endo_prime(pre, th)
                r.check(ok, [E2, pre], [eta, th], "preimage is not Endo-prime")


def _t10(c: _Ctx, r: _Recorder):
    for th in c.endos:
        K = kernel(th)
        for E in c.endo_primes(th):
            r.check(K <= E, [E, K], [th], "Ker theta not inside an Endo-prime")


def _t11(c: _Ctx, r: _Recorder):
    H = c.H
    if not is_hyperintegral_domain(H):
        r.vacuous()
        return
    for th in c.endos:
        eps = c.endo_primes(th)
        meet = frozenset.intersection(c.full, *eps)
        ups = theta_nilpotents(H, th)
        r.check(ups == meet, [ups, meet], [th], "theta-nilradical differs from the intersection")
        for E in c.proper:
            over = [P for P in eps if E <= P]
            meet_e = frozenset.intersection(c.full, *over)
            rt = theta_radical(H, E, th)
            r.check(rt == meet_e, [E, rt, meet_e], [th],
                    "theta-radical differs from the intersection of Endo-primes over E")


def _t12(c: _Ctx, r: _Recorder):
    for th in c.endos:
        for E in c.proper:
            if not _img(th, E) <= E:
                r.vacuous(2)
                continue
            Q = c.quotient(E)
            if Q is None:
                r.vacuous(2)
                continue
            thE = induced_endo(th, Q)
            dom = bool(is_theta_domain(Q.table, thE, c.positions))
            if is_strongly_endo_prime(c.H, E, th, c.positions):
                r.check(dom, [E], [th], "(1) H/E is not a theta_E-hyperintegral domain")
            else:
                r.vacuous()
            if dom:
                r.check(c.endo_prime(E, th), [E], [th], "(2) E is not Endo-prime")
            else:
                r.vacuous()


def _homomorphisms(c: _Ctx):
    """(eta, target table, target endomorphisms) pairs used by the transfer theorem."""
    for eta in c.endos:
        yield eta, c.H, c.endos
    for K in c.proper:
        Q = c.quotient(K)
        if Q is not None:
            yield Q.projection, Q.table, enumerate_endomorphisms(Q.table)


def _t13(c: _Ctx, r: _Recorder):
    H = c.H
    for eta, T, t_endos in _homomorphisms(c):
        t_ideals = [I.members for I in enumerate_hyperideals(T) if I.is_proper]
        surjective = eta.is_surjective()
        K = kernel(eta)
        for th1 in c.endos:
            for th2 in t_endos:
                if not commutes(eta, th1, th2):
                    r.vacuous()
                    continue
                for E2 in t_ideals:
                    if not is_endo_prime(T, E2, th2, c.positions):
                        continue
                    pre = frozenset(u for u in H.carrier if eta.map[u] in E2)
                    ok = c.is_ideal(pre) and len(pre) < H.size and c.endo_prime(pre, th1)
                    r.check(ok, [E2, pre], [eta, th1, th2], "(1) preimage is not Endo-prime")
                if not surjective:
                    continue
                for E1 in c.endo_primes(th1):
                    if not K <= E1:
                        continue
                    im = frozenset(eta.map[u] for u in E1)
                    ok = (bool(is_hyperideal(T, im)) and len(im) < T.size
                          and bool(is_endo_prime(T, im, th2, c.positions)))
                    r.check(ok, [E1], [eta, th1, th2], "(2) image is not Endo-prime")
    _t13_restriction(c, r)
    _t13_kernel_quotient(c, r)


def _candidate_subrings(c: _Ctx) -> list[frozenset[int]]:
    H = c.H
    cands = set(c.entry.subrings)
    for th in c.endos:
        cands.add(frozenset(th.map))
        cands.add(frozenset(u for u in H.carrier if th.map[u] == u))
    return sorted(cands, key=lambda S: (len(S), sorted(S)))


def _t13_restriction(c: _Ctx, r: _Recorder):
    H = c.H
    for G in _candidate_subrings(c):
        for th in c.endos:
            try:
                sub, th_g = restrict(H, G, th)
            except PreconditionError:
                continue
            inc = inclusion(sub, H)
            for E in c.endo_primes(th):
                EG = frozenset(i for i, u in enumerate(inc.map) if u in E)
                ok = (bool(is_hyperideal(sub, EG)) and len(EG) < sub.size
                      and bool(is_endo_prime(sub, EG, th_g, c.positions)))
                r.check(ok, [E, G], [th], "restriction E meet G is not Endo-prime in G")


def _t13_kernel_quotient(c: _Ctx, r: _Recorder):
    for th in c.endos:
        K = kernel(th)
        Q = c.quotient(K)
        if Q is None:
            r.vacuous()
            continue
        thK = induced_endo(th, Q)
        for E in c.proper:
            if not K <= E:
                continue
            EK = frozenset(Q.class_of(u) for u in E)
            lhs = c.endo_prime(E, th)
            rhs = len(EK) < Q.table.size and bool(
                is_endo_prime(Q.table, EK, thK, c.positions))
            r.check(lhs == rhs, [E, K], [th], "E and E/Ker theta disagree on Endo-primality")


def _t14(c: _Ctx, r: _Recorder):
    if c.entry.factors is None:
        r.vacuous()
        return
    A, B = c.entry.factors
    H1, H2 = A.table, B.table
    N2 = H2.size
    for t1 in A.endomorphisms():
        for t2 in B.endomorphisms():
            th = product_endo(t1, t2, c.H)
            for E in c.proper:
                lhs = c.endo_prime(E, th)
                rhs = False
                E1 = frozenset(x for x in H1.carrier if all(x * N2 + y in E for y in H2.carrier))
                E2 = frozenset(y for y in H2.carrier if all(x * N2 + y in E for x in H1.carrier))
                if len(E) == len(E1) * N2 and len(E1) < H1.size:
                    rhs = bool(is_endo_prime(H1, E1, t1, c.positions))
                if not rhs and len(E) == len(E2) * H1.size and len(E2) < N2:
                    rhs = bool(is_endo_prime(H2, E2, t2, c.positions))
                r.check(lhs == rhs, [E], [th],
                        f"Endo-prime={lhs} but product characterisation={rhs}")


# -- Endo-primary section -----------------------------------------------------

def _t15(c: _Ctx, r: _Recorder):
    for th in c.endos:
        for E in c.proper:
            if not c.endo_primary(E, th):
                r.vacuous()
                continue
            R = c.rad(E)
            ok = len(R) < c.H.size and c.endo_prime(R, th)
            r.check(ok, [E, R], [th], "rad(E) is not Endo-prime")


def _t16(c: _Ctx, r: _Recorder):
    H = c.H
    for th in c.endos:
        f = th.map
        for E in c.proper:
            if not c.endo_primary(E, th):
                r.vacuous(2)
                continue
            R = c.rad(E)
            r.check(_img(th, E) <= R, [E], [th], "(1) theta(E) not inside rad(E)")
            bad = [u for u in R if not (u in E or f[u] in R)]
            r.check(not bad, [E], [th],
                    f"(2) fails at {H.label(bad[0])}" if bad else "")


def _t17(c: _Ctx, r: _Recorder):
    H = c.H
    if H.size < 2:
        r.vacuous()
        return
    maxs = sorted(M.members for M in max_spectrum(H))
    for th in c.endos:
        zero_max = bool(is_theta_maximal(H, {H.zero}, th))
        only_ker = maxs == [kernel(th)]
        r.check(zero_max == only_ker, [{H.zero}], [th],
                f"0 theta-maximal={zero_max} but Max(H)={{Ker theta}} is {only_ker}")


def _t18(c: _Ctx, r: _Recorder):
    fams = [(th, lambda E, th=th: c.endo_primary(E, th), "Endo-primary") for th in c.endos]
    fams.append((identity(c.H), lambda E: bool(is_primary(c.H, E, c.positions)), "primary"))
    for th, pred, what in fams:
        groups: dict[frozenset, list] = {}
        for E in c.proper:
            if pred(E):
                groups.setdefault(c.rad(E), []).append(E)
        checked = False
        for members_ in groups.values():
            for size in range(2, len(members_) + 1):
                for fam in combinations(members_, size):
                    checked = True
                    meet = frozenset.intersection(*fam)
                    ok = c.is_ideal(meet) and pred(meet)
                    r.check(ok, list(fam), [th], f"intersection is not {what}")
        if not checked:
            r.vacuous()


def _t19(c: _Ctx, r: _Recorder):
    H = c.H
    for th in c.endos:
        f = th.map
        for E in c.proper:
            if not c.endo_primary(E, th):
                r.vacuous(2)
                continue
            Q = c.rad(E)
            r.check(all(colon(H, E, [u]) == c.full for u in E), [E], [th], "(1) (E:u) != H")
            bad = [u for u in H.carrier if f[u] not in Q and colon(H, E, [u]) != E]
            r.check(not bad, [E], [th], f"(2) (E:{H.label(bad[0])}) != E" if bad else "")


def _t20(c: _Ctx, r: _Recorder):
    H = c.H
    for th in c.endos:
        for M in c.proper:
            if is_theta_maximal(H, M, th):
                r.check(c.endo_prime(M, th), [M], [th], "(1) theta-maximal but not Endo-prime")
            else:
                r.vacuous()
        for E in c.proper:
            R = c.rad(E)
            if len(R) < H.size and is_theta_maximal(H, R, th):
                r.check(c.endo_primary(E, th), [E, R], [th],
                        "(2) rad(E) theta-maximal but E not Endo-primary")
            else:
                r.vacuous()


THEOREMS: dict[str, tuple[str, Callable]] = {
    "T1": ("radical of an Endo-prime is Endo-prime", _t1),
    "T2": ("Endo-prime E contains theta(E)", _t2),
    "T3": ("E', (E:A) and power conditions", _t3),
    "T4": ("four equivalent characterisations", _t4),
    "T5": ("intersection of a chain of Endo-primes", _t5),
    "T6": ("theta(Q) inside E for minimal primes Q over E", _t6),
    "T7": ("theta fixing all primes makes Endo-prime = prime", _t7),
    "T8": ("theta(rad(E)) and theta(nilradical) inside E", _t8),
    "T9": ("preimage under a commuting homomorphism", _t9),
    "T10": ("Ker theta inside every Endo-prime", _t10),
    "T11": ("theta-nilradical in a hyperintegral domain", _t11),
    "T12": ("quotient is a theta_E-hyperintegral domain", _t12),
    "T13": ("transfer along homomorphisms, restriction, Ker quotient", _t13),
    "T14": ("Endo-primes of a product", _t14),
    "T15": ("radical of an Endo-primary is Endo-prime", _t15),
    "T16": ("theta(E) inside rad(E) and power clause", _t16),
    "T17": ("0 theta-maximal iff Max(H) = {Ker theta}", _t17),
    "T18": ("intersections of Endo-primaries with equal radicals", _t18),
    "T19": ("colon behaviour of Endo-primaries", _t19),
    "T20": ("theta-maximal gives Endo-prime / Endo-primary", _t20),
}


def _skip_reason(H: HyperringTable, require_scalar_identity: bool) -> str | None:
    if H.one is None:
        return "no declared one"
    if require_scalar_identity and not H.has_neutral_one():
        return "declared one is not a scalar identity"
    if not (H.commutative_add and H.commutative_mul):
        return "not declared commutative"
    return None


def run_suite(corpus: Iterable[CorpusEntry | HyperringTable], only: Iterable[str] | None = None,
              positions: str = "every", require_scalar_identity: bool = True
              ) -> list[TheoremReport]:
    entries = [e if isinstance(e, CorpusEntry) else CorpusEntry(e) for e in corpus]
    ids = list(THEOREMS) if only is None else [t for t in THEOREMS if t in set(only)]
    unknown = set(only or ()) - set(THEOREMS)
    if unknown:
        raise ValueError(f"unknown theorem ids: {sorted(unknown)}")
    reports = [TheoremReport(t, THEOREMS[t][0]) for t in ids]
    ctxs = []
    for e in entries:
        reason = _skip_reason(e.table, require_scalar_identity)
        if reason:
            for rep in reports:
                rep.skips.append(f"{e.table.name}: {reason}")
        else:
            ctxs.append(_Ctx(e, positions))
    for rep in reports:
        fn = THEOREMS[rep.theorem_id][1]
        start = time.perf_counter()
        for c in ctxs:
            fn(c, _Recorder(rep, c.H))
        rep.elapsed = time.perf_counter() - start
    return reports


def format_reports(reports: list[TheoremReport], timing: bool = False) -> str:
    lines = []
    for rep in reports:
        lines += rep.lines(timing)
    total = sum(len(r.violations) for r in reports)
    lines.append(f"violations: {total}")
    return "\n".join(lines) + "\n"


# -- counterexample search ------------------------------------------------------

SEARCH_PROPERTIES = ("endo-prime-not-prime", "theta-stable-not-endo-prime",
                     "endo-primary-not-endo-prime")


def search(corpus: Iterable[CorpusEntry | HyperringTable], prop: str,
           positions: str = "every") -> list[tuple[HyperringTable, frozenset[int], Morphism]]:
    """All (structure, hyperideal, endomorphism) triples with the given property."""
    if prop not in SEARCH_PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; choose from {SEARCH_PROPERTIES}")
    found = []
    for e in corpus:
        e = e if isinstance(e, CorpusEntry) else CorpusEntry(e)
        H = e.table
        if H.one is None:
            continue
        for I in enumerate_hyperideals(H):
            if not I.is_proper:
                continue
            E = I.members
            for th in e.endomorphisms():
                ep = bool(is_endo_prime(H, E, th, positions))
                if prop == "endo-prime-not-prime":
                    hit = ep and not is_prime(H, E)
                elif prop == "theta-stable-not-endo-prime":
                    hit = _img(th, E) <= E and not ep
                else:
                    hit = bool(is_endo_primary(H, E, th, positions)) and not ep
                if hit:
                    found.append((H, E, th))
    return found
