"""Products, quotients by hyperideals, induced endomorphisms and restrictions."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from .core import ArityError, HyperringTable, PreconditionError, KrasnerError
from .ideals import Hyperideal, is_hyperideal, map_of, members
from .morphisms import Morphism, make_morphism

__all__ = [
    "ConstructionError", "QuotientStructure", "product", "product_endo", "projection",
    "quotient", "induced_endo", "restrict", "inclusion",
]


class ConstructionError(KrasnerError):
    pass


def product(H1: HyperringTable, H2: HyperringTable, name: str | None = None) -> HyperringTable:
    """Componentwise product; elements are labelled ``(x,y)`` in lexicographic order."""
    if (H1.m, H1.n) != (H2.m, H2.n):
        raise ArityError(f"arity mismatch: ({H1.m},{H1.n}) vs ({H2.m},{H2.n})")
    N2 = H2.size
    pairs = [(a, b) for a in H1.carrier for b in H2.carrier]
    labels = [f"({H1.label(a)},{H2.label(b)})" for a, b in pairs]

    def add(*t):
        xs = H1.add[tuple(pairs[i][0] for i in t)]
        ys = H2.add[tuple(pairs[i][1] for i in t)]
        return {x * N2 + y for x in xs for y in ys}

    def mul(*t):
        return (H1.mul[tuple(pairs[i][0] for i in t)] * N2
                + H2.mul[tuple(pairs[i][1] for i in t)])

    one = None
    if H1.one is not None and H2.one is not None:
        one = H1.one * N2 + H2.one
    return HyperringTable.from_functions(
        name or f"{H1.name}x{H2.name}", H1.m, H1.n, labels, add, mul,
        H1.zero * N2 + H2.zero, one,
        H1.commutative_add and H2.commutative_add,
        H1.commutative_mul and H2.commutative_mul)


def product_endo(theta1: Morphism, theta2: Morphism, P: HyperringTable) -> Morphism:
    """theta1 x theta2 acting componentwise on ``P = product(H1, H2)``."""
    N2 = theta2.source.size
    img = tuple(theta1.map[u // N2] * N2 + theta2.map[u % N2] for u in P.carrier)
    return make_morphism(img, P, P, f"{theta1.name}x{theta2.name}")


def projection(P: HyperringTable, H1: HyperringTable, H2: HyperringTable,
               coordinate: int = 0) -> Morphism:
    """Coordinate projection from ``P = product(H1, H2)`` (verified)."""
    N2 = H2.size
    if coordinate == 0:
        return make_morphism([u // N2 for u in P.carrier], P, H1, "pr1")
    return make_morphism([u % N2 for u in P.carrier], P, H2, "pr2")


@dataclass(frozen=True, eq=False)
class QuotientStructure:
    base: HyperringTable
    ideal: Hyperideal
    classes: tuple[frozenset[int], ...]
    table: HyperringTable
    projection: Morphism

    def class_of(self, u: int) -> int:
        return self.projection.map[u]

    def lift(self, S) -> frozenset[int]:
        """Union of the classes in ``S`` (a set of quotient elements)."""
        out: set[int] = set()
        for c in members(S):
            out |= self.classes[c]
        return frozenset(out)


def _is_commutative(table) -> bool:
    return all(table[tuple(sorted(t))] == v for t, v in table.items())


def quotient(H: HyperringTable, E, name: str | None = None) -> QuotientStructure:
    """H/E built from the cosets h(u, E, 0^(m-2)).

    Representative independence of both operations is checked exhaustively.
    """
    E = members(E)
    if len(E) == H.size:
        raise PreconditionError("quotient needs a proper hyperideal")
    v = is_hyperideal(H, E)
    if not v:
        raise PreconditionError(f"not a hyperideal (witness {v.witness})")
    if not (H.commutative_add and _is_commutative(H.add)):
        raise PreconditionError("quotients require a commutative hyperaddition")
    pad = (H.zero,) * (H.m - 2)
    cosets: list[frozenset[int]] = []
    cls = [None] * H.size
    for u in H.carrier:
        c = H.h_sets((u,), E, *[(z,) for z in pad])
        if c not in cosets:
            for d in cosets:
                if c & d:
                    raise ConstructionError(f"cosets {sorted(c)} and {sorted(d)} overlap")
            cosets.append(c)
        cls[u] = cosets.index(c)
    if any(u not in cosets[cls[u]] for u in H.carrier):
        raise ConstructionError("cosets do not partition the carrier")

    add: dict[tuple, frozenset] = {}
    for t in cartesian(H.carrier, repeat=H.m):
        key = tuple(cls[u] for u in t)
        val = frozenset(cls[x] for x in H.add[t])
        if add.setdefault(key, val) != val:
            raise ConstructionError(f"class hyperaddition depends on representatives {t}")
    mul: dict[tuple, int] = {}
    for t in cartesian(H.carrier, repeat=H.n):
        key = tuple(cls[u] for u in t)
        val = cls[H.mul[t]]
        if mul.setdefault(key, val) != val:
            raise ConstructionError(f"class multiplication depends on representatives {t}")

    labels = ["[" + ",".join(H.labels(c)) + "]" for c in cosets]
    size = len(cosets)
    add = {t: add[t] for t in cartesian(range(size), repeat=H.m)}
    mul = {t: mul[t] for t in cartesian(range(size), repeat=H.n)}
    table = HyperringTable(name or f"{H.name}/{{{','.join(H.labels(E))}}}", H.m, H.n,
                           tuple(labels), add, mul, cls[H.zero],
                           None if H.one is None else cls[H.one],
                           H.commutative_add, H.commutative_mul)
    proj = make_morphism(cls, H, table, "projection")
    return QuotientStructure(H, Hyperideal(H, E), tuple(cosets), table, proj)


def induced_endo(theta, Q: QuotientStructure) -> Morphism:
    """class(u) -> class(theta(u)); needs theta(E) inside E."""
    f = map_of(theta)
    H, E = Q.base, Q.ideal.members
    bad = next((u for u in sorted(E) if f[u] not in E), None)
    if bad is not None:
        raise PreconditionError(f"theta maps {H.label(bad)} in E to {H.label(f[bad])} outside E")
    img = [None] * Q.table.size
    for u in H.carrier:
        c, d = Q.class_of(u), Q.class_of(f[u])
        if img[c] is None:
            img[c] = d
        elif img[c] != d:
            raise ConstructionError(f"induced map is not well defined at {H.label(u)}")
    name = getattr(theta, "name", "theta")
    return make_morphism(img, Q.table, Q.table, f"{name}_E")


def _check_subhyperring(H: HyperringTable, G: frozenset[int]):
    if H.zero not in G:
        raise PreconditionError("subset does not contain zero")
    if H.one is not None and H.one not in G:
        raise PreconditionError("subset does not contain the declared one")
    for u in sorted(G):
        if H.negative(u) not in G:
            raise PreconditionError(f"not closed under inverses at {H.label(u)}")
    for t in cartesian(sorted(G), repeat=H.m):
        if not H.add[t] <= G:
            raise PreconditionError(f"not closed under h at {tuple(H.label(x) for x in t)}")
    for t in cartesian(sorted(G), repeat=H.n):
        if H.mul[t] not in G:
            raise PreconditionError(f"not closed under k at {tuple(H.label(x) for x in t)}")


def restrict(H: HyperringTable, G, theta, name: str | None = None
             ) -> tuple[HyperringTable, Morphism]:
    """Subhyperring on ``G`` (declaration order kept) with theta restricted to it."""
    G = members(G)
    _check_subhyperring(H, G)
    f = map_of(theta)
    bad = next((u for u in sorted(G) if f[u] not in G), None)
    if bad is not None:
        raise PreconditionError(f"theta maps {H.label(bad)} outside the subset")
    elems = sorted(G)
    pos = {u: i for i, u in enumerate(elems)}
    add = {t: frozenset(pos[x] for x in H.add[tuple(elems[i] for i in t)])
           for t in cartesian(range(len(elems)), repeat=H.m)}
    mul = {t: pos[H.mul[tuple(elems[i] for i in t)]]
           for t in cartesian(range(len(elems)), repeat=H.n)}
    sub = HyperringTable(name or f"{H.name}|sub", H.m, H.n, tuple(H.label(u) for u in elems),
                         add, mul, pos[H.zero], None if H.one is None else pos[H.one],
                         H.commutative_add, H.commutative_mul)
    tname = getattr(theta, "name", "theta")
    return sub, make_morphism([pos[f[u]] for u in elems], sub, sub, f"{tname}|G")


def inclusion(sub: HyperringTable, H: HyperringTable) -> Morphism:
    """Inclusion of a table produced by :func:`restrict` (matched by label)."""
    return make_morphism([H.index(x) for x in sub.elements], sub, H, "inclusion")
