"""Homomorphisms between hyperring tables and the hyperideals they transfer."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .core import BudgetError, DomainError, HyperringTable, PreconditionError, Verdict
from .ideals import Hyperideal, is_hyperideal, members

__all__ = [
    "Morphism", "verify_morphism", "make_morphism", "identity", "enumerate_endomorphisms",
    "compose", "kernel", "preimage_ideal", "image_ideal", "commutes", "commutation_witness",
    "from_labels",
]


@dataclass(frozen=True, eq=False)
class Morphism:
    source: HyperringTable
    target: HyperringTable
    map: tuple[int, ...]
    name: str = ""
    verified: bool = False

    def __call__(self, u: int) -> int:
        return self.map[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and self.map == other.map)

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.map))

    @property
    def is_endomorphism(self) -> bool:
        return self.source is self.target

    def is_surjective(self) -> bool:
        return set(self.map) == set(self.target.carrier)

    def label_map(self) -> dict[str, str]:
        return {self.source.label(u): self.target.label(v) for u, v in enumerate(self.map)}

    def __repr__(self) -> str:
        body = " ".join(f"{a}->{b}" for a, b in self.label_map().items())
        return f"Morphism({self.name or '?'}: {body})"


def verify_morphism(f: Sequence[int], H1: HyperringTable, H2: HyperringTable) -> Verdict:
    """Check the three homomorphism conditions; witness is the first failing tuple."""
    f = tuple(f)
    if len(f) != H1.size:
        raise DomainError(f"map must have {H1.size} images, got {len(f)}")
    for v in f:
        if not (isinstance(v, int) and 0 <= v < H2.size):
            raise DomainError(f"image {v!r} is not an element of {H2.name}")
    for t in product(H1.carrier, repeat=H1.m):
        if frozenset(f[x] for x in H1.add[t]) != H2.add[tuple(f[u] for u in t)]:
            return Verdict("homomorphism", False, t, warnings=["add"])
    for t in product(H1.carrier, repeat=H1.n):
        if f[H1.mul[t]] != H2.mul[tuple(f[u] for u in t)]:
            return Verdict("homomorphism", False, t, warnings=["mul"])
    if H1.one is not None and H2.one is not None and f[H1.one] != H2.one:
        return Verdict("homomorphism", False, (H1.one,), warnings=["one"])
    if f[H1.zero] != H2.zero:
        return Verdict("homomorphism", False, (H1.zero,), warnings=["zero"])
    return Verdict("homomorphism", True)


def make_morphism(f: Sequence[int], H1: HyperringTable, H2: HyperringTable | None = None,
                  name: str = "") -> Morphism:
    """Verified morphism; raises PreconditionError with the witness otherwise."""
    H2 = H1 if H2 is None else H2
    v = verify_morphism(f, H1, H2)
    if not v:
        raise PreconditionError(f"{name or 'map'} is not a homomorphism: "
                                f"{v.warnings[0]} condition fails at {v.witness}")
    return Morphism(H1, H2, tuple(f), name, True)


def from_labels(mapping: Mapping[str, str], H1: HyperringTable,
                H2: HyperringTable | None = None, name: str = "") -> Morphism:
    H2 = H1 if H2 is None else H2
    missing = [e for e in H1.elements if e not in mapping]
    if missing:
        raise DomainError(f"map is not total: no image for {missing[0]!r}")
    return make_morphism([H2.index(mapping[e]) for e in H1.elements], H1, H2, name)


def identity(H: HyperringTable) -> Morphism:
    return Morphism(H, H, tuple(H.carrier), "identity", True)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.target is not g.source:
        raise PreconditionError("morphisms are not composable")
    return Morphism(f.source, g.target, tuple(g.map[x] for x in f.map),
                    f"{g.name}*{f.name}", f.verified and g.verified)


def enumerate_endomorphisms(H: HyperringTable, cap: int = 10**7) -> list[Morphism]:
    """All endomorphisms, by backtracking over images with early pruning.

    Zero (and the declared one) are fixed up front.  Each table constraint is
    checked as soon as every element it mentions has an image.
    """
    cached = H._cache.get("endomorphisms")
    if cached is not None:
        return cached
    if cap < 1:
        raise PreconditionError("cap must be >= 1")
    N = H.size
    fixed = {H.zero: H.zero}
    if H.one is not None:
        fixed[H.one] = H.one
    order = list(fixed) + [u for u in H.carrier if u not in fixed]
    pos = {u: i for i, u in enumerate(order)}

    checks: dict[int, list] = {}
    for t, out in H.add.items():
        last = max(pos[x] for x in set(t) | out)
        checks.setdefault(last, []).append(("h", t, out))
    for t, out in H.mul.items():
        last = max(pos[x] for x in set(t) | {out})
        checks.setdefault(last, []).append(("k", t, out))

    f = [None] * N
    found: list[tuple[int, ...]] = []
    nodes = 0

    def consistent(level: int) -> bool:
        for kind, t, out in checks.get(level, ()):
            img = tuple(f[x] for x in t)
            if kind == "h":
                if frozenset(f[x] for x in out) != H.add[img]:
                    return False
            elif f[out] != H.mul[img]:
                return False
        return True

    def search(level: int):
        nonlocal nodes
        if level == N:
            found.append(tuple(f))
            return
        u = order[level]
        choices = [fixed[u]] if u in fixed else range(N)
        for v in choices:
            nodes += 1
            if nodes > cap:
                raise BudgetError(
                    f"endomorphism search for {H.name} exceeded {cap} nodes; "
                    "supply endomorphisms explicitly (endo lines in the structure file)")
            f[u] = v
            if consistent(level):
                search(level + 1)
        f[u] = None

    search(0)
    out = []
    for j, img in enumerate(sorted(found)):
        name = "identity" if img == tuple(H.carrier) else f"endo{j}"
        out.append(Morphism(H, H, img, name, True))
    H._cache["endomorphisms"] = out
    return out


def kernel(f: Morphism) -> frozenset[int]:
    K = frozenset(u for u in f.source.carrier if f.map[u] == f.target.zero)
    v = is_hyperideal(f.source, K)
    if not v:
        raise PreconditionError(f"kernel of {f.name} is not a hyperideal (witness {v.witness})")
    return K


def preimage_ideal(f: Morphism, E2) -> Hyperideal:
    E2 = members(E2)
    S = frozenset(u for u in f.source.carrier if f.map[u] in E2)
    v = is_hyperideal(f.source, S)
    if not v:
        raise PreconditionError(f"preimage is not a hyperideal (witness {v.witness})")
    return Hyperideal(f.source, S)


def image_ideal(f: Morphism, E1) -> Hyperideal:
    E1 = members(E1)
    if not f.is_surjective():
        raise PreconditionError(f"{f.name or 'morphism'} is not surjective")
    if not kernel(f) <= E1:
        raise PreconditionError("kernel is not contained in the hyperideal")
    S = frozenset(f.map[u] for u in E1)
    v = is_hyperideal(f.target, S)
    if not v:
        raise PreconditionError(f"image is not a hyperideal (witness {v.witness})")
    return Hyperideal(f.target, S)


def commutation_witness(eta: Morphism, theta1: Morphism, theta2: Morphism) -> int | None:
    """First u with theta2(eta(u)) != eta(theta1(u)), or None."""
    for u in eta.source.carrier:
        if theta2.map[eta.map[u]] != eta.map[theta1.map[u]]:
            return u
    return None


def commutes(eta: Morphism, theta1: Morphism, theta2: Morphism) -> bool:
    return commutation_witness(eta, theta1, theta2) is None
