"""Concrete facts about the bundled fixtures, each checkable in isolation.

Every claim is a named predicate over the fixtures returning ``(holds,
detail)``.  They are the facts the ``hk paper-examples`` command reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classify import (is_endo_prime, is_endo_primary, is_hyperintegral_domain, is_prime,
                       is_strongly_endo_prime)
from .core import iterated_add, iterated_mul, power, verify_axioms
from .fixtures import domain4, hyperfield5, hyperfield5_squared, s4, swap
from .ideals import enumerate_hyperideals, is_invertible, is_theta_maximal, max_spectrum
from .morphisms import enumerate_endomorphisms, identity, kernel, verify_morphism
from .textio import format_tuple
from .theorems import CorpusEntry, search

__all__ = ["Claim", "CLAIMS", "refutes", "check_all"]


@dataclass(frozen=True)
class Claim:
    key: str
    statement: str
    check: Callable[[], tuple[bool, str]]


def refutes(H, E, t, clause) -> bool:
    """True if k(t) lies in E while no position i has t_i in E or ``clause(t, i)``.

    Such a tuple refutes the predicate under either reading of the positions.
    """
    if H.mul[t] not in E:
        return False
    return not any(t[i] in E or clause(t, i) for i in range(H.n))


def _idx(H, *labels):
    return tuple(H.index(x) for x in labels)


def _add_11():
    H = s4()
    got = iterated_add(H, 1, _idx(H, "1", "1"))
    return got == frozenset(_idx(H, "0", "1")), "{" + ",".join(H.labels(got)) + "}"


def _mul(args, want):
    def check():
        H = s4()
        got = iterated_mul(H, 1, _idx(H, *args))
        return H.label(got) == want, H.label(got)
    return check


def _power():
    H = s4()
    got = power(H, H.index("2"), 4)
    return H.label(got) == "2", H.label(got)


def _axioms_p():
    rep = verify_axioms(hyperfield5())
    return rep.passed and not rep.warnings, f"violations={len(rep.violations)} warnings={len(rep.warnings)}"


def _swap_hom():
    PP = hyperfield5_squared()
    v = verify_morphism(swap(PP).map, PP, PP)
    return v.holds, "verified" if v else f"fails at {v.witness}"


def _zero_theta_max():
    P = hyperfield5()
    th = identity(P)
    zm = bool(is_theta_maximal(P, {P.zero}, th))
    maxs = [M.members for M in max_spectrum(P)]
    ok = zm and maxs == [kernel(th)] == [frozenset({P.zero})]
    return ok, f"zero theta-maximal={zm} Max={[sorted(P.labels(M)) for M in maxs]}"


def _invertible(fixture, label):
    def check():
        H = fixture()
        return is_invertible(H, H.index(label)), ""
    return check


def _s4_not_prime():
    H = s4()
    E = frozenset({H.zero})
    v = is_prime(H, E)
    t = _idx(H, "1", "2", "3", "3")
    ok = not v and refutes(H, E, t, lambda t, i: False)
    return ok, f"reported witness {format_tuple(H, v.witness)}; (1,2,3,3) refutes={ok}"


def _pp_swap():
    PP = hyperfield5_squared()
    th = swap(PP)
    E = frozenset({PP.zero})
    v = is_endo_prime(PP, E, th)
    t = _idx(PP, "(1,0)", "(0,1)")
    f = th.map
    ref = refutes(PP, E, t, lambda t, i: f[PP.substitute_one(t, i)] in E)
    stable = all(f[u] in E for u in E)
    ok = not v and ref and stable
    return ok, (f"reported witness ({','.join(PP.label(x) for x in v.witness)}); "
                f"((1,0),(0,1)) refutes={ref}; theta(E) inside E={stable}")


def _s4_endo_prime():
    H = s4()
    results = {th.name: bool(is_endo_prime(H, {H.zero}, th)) for th in enumerate_endomorphisms(H)}
    return all(results.values()), " ".join(f"{k}={v}" for k, v in results.items())


def _fixtures():
    return [hyperfield5(), domain4(), s4(), hyperfield5_squared()]


def _prime_implies_endo_prime():
    for H in _fixtures():
        for I in enumerate_hyperideals(H):
            if not I.is_proper or not is_prime(H, I):
                continue
            for th in enumerate_endomorphisms(H):
                v = is_endo_prime(H, I, th)
                if not v:
                    return False, (f"{H.name}: {{{','.join(I.labels())}}} is prime but not "
                                   f"Endo-prime for {th.name}, witness "
                                   f"{format_tuple(H, v.witness)} at position {v.position}")
    return True, ""


def _implication(premise, conclusion, what):
    def check():
        for H in _fixtures():
            for I in enumerate_hyperideals(H):
                if not I.is_proper:
                    continue
                for th in enumerate_endomorphisms(H):
                    if premise(H, I, th) and not conclusion(H, I, th):
                        return False, f"{H.name}: {{{','.join(I.labels())}}} with {th.name} {what}"
        return True, ""
    return check


def _domain_g():
    return bool(is_hyperintegral_domain(domain4())), ""


def _domain_s4():
    H = s4()
    v = is_hyperintegral_domain(H)
    t = _idx(H, "1", "2", "3", "3")
    ok = not v and refutes(H, frozenset({H.zero}), t, lambda t, i: False)
    return ok, f"reported witness {format_tuple(H, v.witness)}"


def _search_s4():
    hits = search([s4()], "endo-prime-not-prime")
    zero = [th.name for H, E, th in hits if E == frozenset({H.zero})]
    return bool(zero), f"{{0}} with {','.join(zero)}"


def _search_pp():
    PP = hyperfield5_squared()
    hits = search([CorpusEntry(PP, [swap(PP)])], "theta-stable-not-endo-prime")
    ok = any(E == frozenset({PP.zero}) for _, E, _ in hits)
    return ok, f"{len(hits)} hyperideal(s)"


CLAIMS: list[Claim] = [
    Claim("s4-add", "in S4, h(1,1) = {0,1}", _add_11),
    Claim("s4-mul-2", "in S4, k(2,3,3,2) = 2", _mul(("2", "3", "3", "2"), "2")),
    Claim("s4-mul-0", "in S4, k(1,2,3,3) = 0", _mul(("1", "2", "3", "3"), "0")),
    Claim("s4-power", "in S4, the 4th power of 2 is 2", _power),
    Claim("p-axioms", "P satisfies every axiom with no warnings", _axioms_p),
    Claim("swap-hom", "swap is an endomorphism of PxP", _swap_hom),
    Claim("p-zero-theta-max", "in P, {0} is identity-maximal and Max(P) = {Ker identity}",
          _zero_theta_max),
    Claim("p-invertible", "u is invertible in P", _invertible(hyperfield5, "u")),
    Claim("g-invertible", "v is invertible in G", _invertible(domain4, "v")),
    Claim("s4-zero-not-prime", "{0} is not prime in S4, refuted by (1,2,3,3)", _s4_not_prime),
    Claim("pp-swap-not-endo-prime",
          "{(0,0)} is not Endo-prime for swap, refuted by ((1,0),(0,1)), yet swap fixes it",
          _pp_swap),
    Claim("s4-zero-endo-prime", "{0} is Endo-prime in S4 for every endomorphism",
          _s4_endo_prime),
    Claim("prime-endo-prime", "every prime hyperideal is Endo-prime for every endomorphism",
          _prime_implies_endo_prime),
    Claim("endo-prime-endo-primary", "every Endo-prime hyperideal is Endo-primary",
          _implication(lambda H, I, th: bool(is_endo_prime(H, I, th)),
                       lambda H, I, th: bool(is_endo_primary(H, I, th)),
                       "is Endo-prime but not Endo-primary")),
    Claim("strongly-endo-prime", "every strongly Endo-prime hyperideal is Endo-prime",
          _implication(lambda H, I, th: bool(is_strongly_endo_prime(H, I, th)),
                       lambda H, I, th: bool(is_endo_prime(H, I, th)),
                       "is strongly Endo-prime but not Endo-prime")),
    Claim("g-domain", "G is a hyperintegral domain", _domain_g),
    Claim("s4-not-domain", "S4 is not a hyperintegral domain, refuted by (1,2,3,3)", _domain_s4),
    Claim("search-s4", "search finds {0} Endo-prime but not prime in S4", _search_s4),
    Claim("search-pp", "search finds {(0,0)} swap-stable but not Endo-prime in PxP", _search_pp),
]


def check_all() -> list[tuple[Claim, bool, str]]:
    return [(c, *c.check()) for c in CLAIMS]
