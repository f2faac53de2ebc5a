"""Primality-style predicates on hyperideals, each returning a :class:`Verdict`.

Every predicate has the shape "k(u_1..u_n) in E implies, at position i,
u_i in E or <clause on the product with u_i replaced by 1>".  ``positions``
selects how i is quantified:

``"every"`` (default)
    every position must satisfy its clause.  For n = 2 this is the familiar
    ``uv in I => u in I or theta(v) in I`` for all u, v in a commutative
    ring, which by symmetry constrains both positions.
``"some"``
    the implication holds if at least one position satisfies its clause.

Witnesses are the first offending tuple in declaration order.
"""
from __future__ import annotations

from itertools import product
from typing import Callable

from .core import HyperringTable, PreconditionError, Verdict
from .ideals import enumerate_hyperideals, map_of, members, radical

__all__ = [
    "POSITIONS", "is_prime", "is_primary", "is_endo_prime", "is_endo_primary",
    "is_strongly_endo_prime", "is_hyperintegral_domain", "is_theta_domain",
]

POSITIONS = ("some", "every")


def _proper(H: HyperringTable, E) -> frozenset[int]:
    E = members(E)
    if len(E) == H.size:
        raise PreconditionError("hyperideal must be proper")
    return E


def _scan(kind: str, H: HyperringTable, E: frozenset[int],
          clause: Callable[[tuple, int], bool], positions: str) -> Verdict:
    if positions not in POSITIONS:
        raise ValueError(f"positions must be one of {POSITIONS}, got {positions!r}")
    for t, v in H.mul.items():
        if v not in E:
            continue
        if positions == "some":
            if not any(t[i] in E or clause(t, i) for i in range(H.n)):
                return Verdict(kind, False, t)
        else:
            for i in range(H.n):
                if not (t[i] in E or clause(t, i)):
                    return Verdict(kind, False, t, i + 1)
    return Verdict(kind, True)


def is_prime(H: HyperringTable, Q) -> Verdict:
    Q = _proper(H, Q)
    return _scan("prime", H, Q, lambda t, i: False, "some")


def is_primary(H: HyperringTable, P, positions: str = "every") -> Verdict:
    P = _proper(H, P)
    H.require_one()
    rad = radical(H, P)
    return _scan("primary", H, P, lambda t, i: H.substitute_one(t, i) in rad, positions)


def is_endo_prime(H: HyperringTable, E, theta, positions: str = "every") -> Verdict:
    E = _proper(H, E)
    H.require_one()
    f = map_of(theta)
    return _scan("endo-prime", H, E, lambda t, i: f[H.substitute_one(t, i)] in E, positions)


def is_endo_primary(H: HyperringTable, E, theta, positions: str = "every") -> Verdict:
    E = _proper(H, E)
    H.require_one()
    f = map_of(theta)
    rad = radical(H, E)
    return _scan("endo-primary", H, E, lambda t, i: f[H.substitute_one(t, i)] in rad,
                 positions)


def is_strongly_endo_prime(H: HyperringTable, E, theta, positions: str = "every") -> Verdict:
    """Endo-prime condition over n-tuples of hyperideals, with containment.

    k on a tuple of hyperideals is the set of all k-values over element
    choices; "U_i in E" is read as U_i a subset of E.
    """
    E = _proper(H, E)
    one = H.require_one()
    f = map_of(theta)
    ideals = [I.members for I in enumerate_hyperideals(H)]

    def ok(U, i):
        if U[i] <= E:
            return True
        sub = U[:i] + (frozenset({one}),) + U[i + 1:]
        return all(f[x] in E for x in H.k_sets(*sub))

    for idx in product(range(len(ideals)), repeat=H.n):
        U = tuple(ideals[j] for j in idx)
        if not H.k_sets(*U) <= E:
            continue
        if positions == "some":
            if not any(ok(U, i) for i in range(H.n)):
                return Verdict("strongly-endo-prime", False, tuple(tuple(sorted(u)) for u in U))
        else:
            for i in range(H.n):
                if not ok(U, i):
                    return Verdict("strongly-endo-prime", False,
                                   tuple(tuple(sorted(u)) for u in U), i + 1)
    return Verdict("strongly-endo-prime", True)


def is_hyperintegral_domain(H: HyperringTable) -> Verdict:
    v = _scan("domain", H, frozenset({H.zero}), lambda t, i: False, "some")
    return v


def is_theta_domain(H: HyperringTable, theta, positions: str = "every") -> Verdict:
    v = is_endo_prime(H, {H.zero}, theta, positions)
    v.kind = "theta-domain"
    return v
