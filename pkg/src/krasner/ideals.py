"""Hyperideals: recognition, generation, enumeration, colon sets and radicals."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .core import HyperringTable, PreconditionError, Verdict, power_sequence_members

__all__ = [
    "Hyperideal", "PrincipalIdealWarning", "members", "is_hyperideal", "ideal_closure",
    "principal", "colon", "enumerate_hyperideals", "brute_force_hyperideals",
    "radical", "prime_radical", "theta_radical", "nilpotents", "theta_nilpotents",
    "is_maximal", "max_spectrum", "is_theta_maximal", "is_invertible",
    "minimal_primes_over", "image_of", "map_of",
]


class PrincipalIdealWarning(UserWarning):
    """k(u, H, 1^(n-2)) turned out not to be a hyperideal."""


@dataclass(frozen=True)
class Hyperideal:
    parent: HyperringTable = field(compare=False, repr=False)
    members: frozenset[int]

    def __contains__(self, u) -> bool:
        return u in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.parent.size

    def labels(self) -> list[str]:
        return self.parent.labels(self.members)

    def __repr__(self) -> str:
        return "Hyperideal({" + ",".join(self.labels()) + "})"


def members(S) -> frozenset[int]:
    if isinstance(S, Hyperideal):
        return S.members
    return S if isinstance(S, frozenset) else frozenset(S)


def map_of(theta) -> Sequence[int]:
    """Index-level image vector of a morphism or plain sequence."""
    return getattr(theta, "map", theta)


def image_of(theta, S) -> frozenset[int]:
    f = map_of(theta)
    return frozenset(f[u] for u in members(S))


def _sort_key(S: frozenset[int]):
    return (len(S), sorted(S))


# -- recognition and generation ---------------------------------------------

def is_hyperideal(H: HyperringTable, S) -> Verdict:
    S = members(S)
    if not S:
        return Verdict("hyperideal", False, (), warnings=["empty set"])
    if H.zero not in S:
        return Verdict("hyperideal", False, (H.zero,), warnings=["zero missing"])
    for u in sorted(S):
        inv = H.negative(u)
        if inv is None or inv not in S:
            return Verdict("hyperideal", False, (u,), warnings=["inverse missing"])
    for t in product(sorted(S), repeat=H.m):
        if not H.add[t] <= S:
            return Verdict("hyperideal", False, t, warnings=["not closed under h"])
    for i in range(H.n):
        for others in product(H.carrier, repeat=H.n - 1):
            for u in sorted(S):
                t = others[:i] + (u,) + others[i:]
                if H.mul[t] not in S:
                    return Verdict("hyperideal", False, t, i + 1, ["not absorbing"])
    return Verdict("hyperideal", True)


def ideal_closure(H: HyperringTable, S: Iterable[int]) -> Hyperideal:
    """Smallest hyperideal containing ``S``."""
    cur = set(members(frozenset(S))) | {H.zero}
    while True:
        new = set(cur)
        for u in cur:
            inv = H.negative(u)
            if inv is not None:
                new.add(inv)
        for t in product(sorted(cur), repeat=H.m):
            new |= H.add[t]
        for i in range(H.n):
            for others in product(H.carrier, repeat=H.n - 1):
                for u in cur:
                    new.add(H.mul[others[:i] + (u,) + others[i:]])
        if new == cur:
            return Hyperideal(H, frozenset(cur))
        cur = new


def principal(H: HyperringTable, u: int) -> Hyperideal:
    """The set {k(u, v, 1^(n-2)) : v in H}, warning when it is not a hyperideal."""
    H.require_one()
    S = frozenset(H.k_with_ones(u, v) for v in H.carrier)
    verdict = is_hyperideal(H, S)
    if not verdict:
        warnings.warn(f"<{H.label(u)}> = {H.labels(S)} is not a hyperideal of {H.name} "
                      f"(witness {verdict.witness})", PrincipalIdealWarning, stacklevel=2)
    return Hyperideal(H, S)


def colon(H: HyperringTable, I, A: Iterable[int]) -> frozenset[int]:
    """(I : A) = {v : k(u, v, 1^(n-2)) in I for every u in A}."""
    H.require_one()
    I = members(I)
    A = list(A)
    return frozenset(v for v in H.carrier if all(H.k_with_ones(u, v) in I for u in A))


# -- enumeration --------------------------------------------------------------

def enumerate_hyperideals(H: HyperringTable) -> list[Hyperideal]:
    """All hyperideals ordered by size, then by sorted membership."""
    cached = H._cache.get("hyperideals")
    if cached is not None:
        return cached
    family = {ideal_closure(H, {u}).members for u in H.carrier}
    frontier = set(family)
    while frontier:
        fresh = set()
        for X in frontier:
            for Y in family:
                Z = ideal_closure(H, X | Y).members
                if Z not in family:
                    fresh.add(Z)
        family |= fresh
        frontier = fresh
    out = [Hyperideal(H, S) for S in sorted(family, key=_sort_key)]
    if __debug__ and H.size <= 12:
        assert [I.members for I in out] == brute_force_hyperideals(H), \
            f"closure enumeration disagrees with subset search on {H.name}"
    H._cache["hyperideals"] = out
    return out


def _horn_clauses(H: HyperringTable):
    """Implications premises -> conclusion that a hyperideal must satisfy."""
    clauses = set()
    for u in H.carrier:
        inv = H.negative(u)
        if inv is not None:
            clauses.add((frozenset({u}), inv))
    for t in product(H.carrier, repeat=H.m):
        for x in H.add[t]:
            clauses.add((frozenset(t), x))
    for t in product(H.carrier, repeat=H.n):
        for u in set(t):
            clauses.add((frozenset({u}), H.mul[t]))
    return clauses


def brute_force_hyperideals(H: HyperringTable, node_cap: int = 10**7) -> list[frozenset[int]]:
    """Reference enumeration: depth-first search over all subsets.

    Each element is decided in turn; a branch is cut once a membership
    implication over already-decided elements is violated, and every
    surviving leaf is re-checked with :func:`is_hyperideal`.
    """
    by_last: dict[int, list] = {}
    for prem, concl in _horn_clauses(H):
        by_last.setdefault(max(prem | {concl}), []).append((prem, concl))
    N = H.size
    found, nodes = [], 0
    chosen = [False] * N

    def ok(j):
        for prem, concl in by_last.get(j, ()):
            if not chosen[concl] and all(chosen[p] for p in prem):
                return False
        return True

    def dfs(j):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise RuntimeError("subset search exceeded its node cap")
        if j == N:
            S = frozenset(i for i in range(N) if chosen[i])
            if S and is_hyperideal(H, S):
                found.append(S)
            return
        for val in (False, True):
            chosen[j] = val
            if ok(j):
                dfs(j + 1)
        chosen[j] = False

    dfs(0)
    return sorted(found, key=_sort_key)


# -- radicals -----------------------------------------------------------------

def radical(H: HyperringTable, I) -> frozenset[int]:
    """Elements some valid power of which lies in ``I``.

    Without a declared one only exponents l(n-1)+1 participate.
    """
    I = members(I)
    return frozenset(u for u in H.carrier if power_sequence_members(H, u, I))


def theta_radical(H: HyperringTable, E, theta) -> frozenset[int]:
    E = members(E)
    f = map_of(theta)
    return frozenset(u for u in H.carrier
                     if power_sequence_members(H, u, E, transform=f.__getitem__))


def nilpotents(H: HyperringTable) -> frozenset[int]:
    return radical(H, {H.zero})


def theta_nilpotents(H: HyperringTable, theta) -> frozenset[int]:
    return theta_radical(H, {H.zero}, theta)


def _primes(H: HyperringTable) -> list[Hyperideal]:
    from .classify import is_prime
    cached = H._cache.get("primes")
    if cached is None:
        cached = [I for I in enumerate_hyperideals(H) if I.is_proper and is_prime(H, I)]
        H._cache["primes"] = cached
    return cached


def prime_radical(H: HyperringTable, I) -> frozenset[int]:
    """Intersection of the primes containing ``I``; the whole carrier if there are none."""
    I = members(I)
    out = frozenset(H.carrier)
    for Q in _primes(H):
        if I <= Q.members:
            out &= Q.members
    return out


def minimal_primes_over(H: HyperringTable, E) -> list[Hyperideal]:
    E = members(E)
    over = [Q for Q in _primes(H) if E <= Q.members]
    return [Q for Q in over if not any(P.members < Q.members for P in over)]


# -- maximality and units -----------------------------------------------------

def _require_proper(H: HyperringTable, I) -> frozenset[int]:
    I = members(I)
    if len(I) == H.size:
        raise PreconditionError("hyperideal must be proper")
    return I


def is_maximal(H: HyperringTable, I) -> bool:
    I = _require_proper(H, I)
    return not any(I < J.members and J.is_proper for J in enumerate_hyperideals(H))


def max_spectrum(H: HyperringTable) -> list[Hyperideal]:
    return [J for J in enumerate_hyperideals(H) if J.is_proper and is_maximal(H, J)]


def is_theta_maximal(H: HyperringTable, M, theta) -> Verdict:
    """Every hyperideal E containing M has theta(E) inside M or equals H."""
    M = _require_proper(H, M)
    for E in enumerate_hyperideals(H):
        if M <= E.members and E.is_proper and not image_of(theta, E) <= M:
            return Verdict("theta-maximal", False, tuple(sorted(E.members)))
    return Verdict("theta-maximal", True)


def is_invertible(H: HyperringTable, u: int) -> bool:
    one = H.require_one()
    return any(H.k_with_ones(u, v) == one for v in H.carrier)
