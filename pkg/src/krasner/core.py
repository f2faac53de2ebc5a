"""Finite Krasner (m,n)-hyperrings stored as explicit operation tables.

Elements are addressed internally by their declaration index ``0..N-1``;
labels are only used for input and output.  The hyperaddition ``h`` maps
m-tuples to non-empty frozensets of indices and the multiplication ``k``
maps n-tuples to a single index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "KrasnerError", "TableError", "ArityError", "DomainError", "ExponentError",
    "IdentityRequiredError", "PreconditionError", "BudgetError",
    "HyperringTable", "AxiomReport", "AXIOMS", "Verdict",
    "iterated_add", "iterated_mul", "power", "valid_exponents",
    "power_sequence_members", "verify_axioms", "Mutation", "single_entry_mutations",
    "mutation_profile", "isolating_mutations",
]


class KrasnerError(Exception):
    """Base class for every error raised by this package."""


class TableError(KrasnerError, ValueError):
    pass


class ArityError(KrasnerError, ValueError):
    pass


class DomainError(KrasnerError, ValueError):
    pass


class ExponentError(KrasnerError, ValueError):
    pass


class IdentityRequiredError(KrasnerError, ValueError):
    pass


class PreconditionError(KrasnerError, ValueError):
    pass


class BudgetError(KrasnerError, RuntimeError):
    pass


@dataclass
class Verdict:
    """Outcome of a predicate; ``witness`` is set whenever ``holds`` is false."""

    kind: str
    holds: bool
    witness: tuple | None = None
    position: int | None = None
    warnings: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def _canon(t: tuple, commutative: bool) -> tuple:
    return tuple(sorted(t)) if commutative else t


@dataclass(frozen=True, eq=False)
class HyperringTable:
    name: str
    m: int
    n: int
    elements: tuple[str, ...]
    add: Mapping[tuple[int, ...], frozenset[int]]
    mul: Mapping[tuple[int, ...], int]
    zero: int
    one: int | None = None
    commutative_add: bool = False
    commutative_mul: bool = False
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_labels(cls, name: str, m: int, n: int, elements: Sequence[str],
                    add: Mapping[tuple, Iterable], mul: Mapping[tuple, object],
                    zero, one=None, commutative_add: bool = False,
                    commutative_mul: bool = False) -> "HyperringTable":
        """Build a table from label-keyed rows.

        When a commutative flag is set, rows may be given for canonical
        (sorted by declaration index) tuples only, for ordered tuples, or both;
        ordered rows must then agree with their canonical representative or
        the table is rejected.
        """
        if m < 2 or n < 2:
            raise ArityError(f"arities must be >= 2, got m={m}, n={n}")
        elements = tuple(str(e) for e in elements)
        if len(set(elements)) != len(elements):
            raise TableError("duplicate element labels")
        idx = {e: i for i, e in enumerate(elements)}

        def ix(label) -> int:
            try:
                return idx[str(label)]
            except KeyError:
                raise DomainError(f"unknown element {label!r}") from None

        def fill(rows, arity, commutative, convert, what):
            given = {}
            for key, val in rows.items():
                key = tuple(ix(a) for a in key)
                if len(key) != arity:
                    raise ArityError(f"{what} row {key} has arity {len(key)}, expected {arity}")
                given[key] = convert(val)
            full = {}
            for t in product(range(len(elements)), repeat=arity):
                if t in given:
                    full[t] = given[t]
                elif commutative and _canon(t, True) in given:
                    full[t] = given[_canon(t, True)]
                else:
                    raise TableError(f"missing {what} tuple {tuple(elements[i] for i in t)}")
            return full

        def as_set(val):
            s = frozenset(ix(v) for v in val)
            if not s:
                raise TableError("hyperaddition image must be non-empty")
            return s

        return cls(name, m, n, elements,
                   fill(add, m, commutative_add, as_set, "add"),
                   fill(mul, n, commutative_mul, ix, "mul"),
                   ix(zero), None if one is None else ix(one),
                   commutative_add, commutative_mul)

    @classmethod
    def from_functions(cls, name: str, m: int, n: int, elements: Sequence[str],
                       add_fn: Callable[..., Iterable[int]],
                       mul_fn: Callable[..., int], zero: int, one: int | None = None,
                       commutative_add: bool = False,
                       commutative_mul: bool = False) -> "HyperringTable":
        """Build a table by evaluating index-level functions on every tuple."""
        size = len(elements)
        add = {t: frozenset(add_fn(*t)) for t in product(range(size), repeat=m)}
        mul = {t: mul_fn(*t) for t in product(range(size), repeat=n)}
        return cls(name, m, n, tuple(elements), add, mul, zero, one,
                   commutative_add, commutative_mul)

    def replace(self, **changes) -> "HyperringTable":
        fields = dict(name=self.name, m=self.m, n=self.n, elements=self.elements,
                      add=self.add, mul=self.mul, zero=self.zero, one=self.one,
                      commutative_add=self.commutative_add,
                      commutative_mul=self.commutative_mul)
        fields.update(changes)
        return HyperringTable(**fields)

    # -- access -------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def carrier(self) -> range:
        return range(len(self.elements))

    def index(self, label) -> int:
        try:
            return self.elements.index(str(label))
        except ValueError:
            raise DomainError(f"unknown element {label!r} in {self.name}") from None

    def indices(self, labels: Iterable) -> frozenset[int]:
        return frozenset(self.index(x) for x in labels)

    def label(self, i: int) -> str:
        return self.elements[i]

    def labels(self, items: Iterable[int]) -> list[str]:
        return [self.elements[i] for i in sorted(items)]

    def h(self, *args: int) -> frozenset[int]:
        return self.add[args]

    def k(self, *args: int) -> int:
        return self.mul[args]

    def h_sets(self, *sets: Iterable[int]) -> frozenset[int]:
        """Hyperaddition extended to subsets (union over all choices)."""
        out: set[int] = set()
        for t in product(*sets):
            out |= self.add[t]
        return frozenset(out)

    def k_sets(self, *sets: Iterable[int]) -> frozenset[int]:
        return frozenset(self.mul[t] for t in product(*sets))

    def require_one(self) -> int:
        if self.one is None:
            raise IdentityRequiredError(f"{self.name} has no declared one")
        return self.one

    def substitute_one(self, t: Sequence[int], i: int) -> int:
        """k of ``t`` with position ``i`` replaced by the declared one."""
        one = self.require_one()
        return self.mul[tuple(t[:i]) + (one,) + tuple(t[i + 1:])]

    def k_with_ones(self, *args: int) -> int:
        """k(args, 1^(n-len(args)))."""
        one = self.require_one()
        return self.mul[tuple(args) + (one,) * (self.n - len(args))]

    def negative(self, u: int) -> int | None:
        """The unique additive inverse of ``u``, or None when absent or not unique."""
        inv = self._cache.get("inverses")
        if inv is None:
            pad = (self.zero,) * (self.m - 2)
            inv = []
            for x in self.carrier:
                cands = [y for y in self.carrier if self.zero in self.add[(x, y) + pad]]
                inv.append(cands[0] if len(cands) == 1 else None)
            self._cache["inverses"] = inv
        return inv[u]

    def has_neutral_one(self) -> bool:
        """True when a one is declared and k(u, 1^(n-1)) = u for every u."""
        if self.one is None:
            return False
        key = "neutral_one"
        if key not in self._cache:
            self._cache[key] = all(self.k_with_ones(u) == u for u in self.carrier)
        return self._cache[key]

    def structurally_equal(self, other: "HyperringTable") -> bool:
        return (self.m, self.n, self.elements, dict(self.add), dict(self.mul), self.zero,
                self.one, self.commutative_add, self.commutative_mul) == \
            (other.m, other.n, other.elements, dict(other.add), dict(other.mul), other.zero,
             other.one, other.commutative_add, other.commutative_mul)

    def __repr__(self) -> str:
        return f"HyperringTable({self.name!r}, m={self.m}, n={self.n}, size={self.size})"



def _check_args(H: HyperringTable, args: Sequence[int], arity: int, l: int) -> tuple[int, ...]:
    if l < 1:
        raise ArityError(f"iteration count must be >= 1, got {l}")
    expected = l * (arity - 1) + 1
    if len(args) != expected:
        raise ArityError(f"expected {expected} arguments for l={l}, got {len(args)}")
    for a in args:
        if not (isinstance(a, int) and 0 <= a < H.size):
            raise DomainError(f"{a!r} is not an element index of {H.name}")
    return tuple(args)


def iterated_add(H: HyperringTable, l: int, args: Sequence[int]) -> frozenset[int]:
    """Left-nested fold h(h(..h(first m)..), next m-1), .."""
    args = _check_args(H, args, H.m, l)
    acc = H.add[args[:H.m]]
    for start in range(H.m, len(args), H.m - 1):
        rest = args[start:start + H.m - 1]
        acc = H.h_sets(acc, *[(x,) for x in rest])
    return acc


def iterated_mul(H: HyperringTable, l: int, args: Sequence[int]) -> int:
    args = _check_args(H, args, H.n, l)
    acc = H.mul[args[:H.n]]
    for start in range(H.n, len(args), H.n - 1):
        acc = H.mul[(acc,) + args[start:start + H.n - 1]]
    return acc


def power(H: HyperringTable, u: int, r: int) -> int:
    """k(u^(r), 1^(n-r)) for r <= n, otherwise k_(l)(u^(r)) with r = l(n-1)+1.

    Exponent 1 returns ``u`` itself when a one is declared.
    """
    n = H.n
    if r < 1:
        raise ExponentError(f"exponent must be >= 1, got {r}")
    if r < n:
        if H.one is None:
            raise IdentityRequiredError(f"exponent {r} < n needs a declared one")
        return u if r == 1 else H.k_with_ones(*([u] * r))
    if r == n:
        return H.mul[(u,) * n]
    if (r - 1) % (n - 1):
        raise ExponentError(f"exponent {r} > n is not of the form l(n-1)+1")
    return iterated_mul(H, (r - 1) // (n - 1), [u] * r)


def valid_exponents(H: HyperringTable, limit: int) -> list[int]:
    """Valid exponents up to ``limit`` in increasing order."""
    out = list(range(1, H.n + 1)) if H.one is not None else []
    r = H.n if H.one is None else 2 * H.n - 1
    while r <= limit:
        out.append(r)
        r += H.n - 1
    return out


def _power_values(H: HyperringTable, u: int) -> list[int]:
    """All distinct values taken by valid powers of ``u``, in exponent order.

    The tail r = n, 2n-1, ... follows p <- k(p, u^(n-1)); it is deterministic,
    so it becomes periodic after at most |H| steps.
    """
    cache = H._cache.setdefault("powers", {})
    if u in cache:
        return cache[u]
    values: list[int] = []
    if H.one is not None:
        values.extend(power(H, u, r) for r in range(1, H.n))
    p = H.mul[(u,) * H.n]
    seen: set[int] = set()
    tail = (u,) * (H.n - 1)
    while p not in seen:
        seen.add(p)
        values.append(p)
        p = H.mul[(p,) + tail]
    cache[u] = values
    return values


def power_sequence_members(H: HyperringTable, u: int, target: Iterable[int],
                           transform: Callable[[int], int] | None = None) -> bool:
    """Whether some valid power of ``u`` (optionally mapped by ``transform``) lies in ``target``."""
    target = target if isinstance(target, (set, frozenset)) else set(target)
    for p in _power_values(H, u):
        if (transform(p) if transform else p) in target:
            return True
    return False


# -- axiom verification -------------------------------------------------------

AXIOMS = (
    "identity", "inverse", "reversibility", "add-associativity", "add-commutativity",
    "mul-associativity", "mul-commutativity", "distributivity", "zero-absorption",
)


@dataclass
class AxiomReport:
    passed: bool
    violations: list[tuple[str, tuple]]
    warnings: list[tuple[str, tuple]]

    @property
    def failed_axioms(self) -> list[str]:
        return [a for a, _ in self.violations]

    def lines(self, H: HyperringTable) -> list[str]:
        out = [f"structure: {H.name}", f"passed: {str(self.passed).lower()}"]
        for axiom, w in self.violations:
            out.append(f"violation: {axiom} {_fmt_witness(H, w)}")
        for kind, w in self.warnings:
            out.append(f"warning: {kind} {_fmt_witness(H, w)}")
        return out


def _fmt_witness(H: HyperringTable, w) -> str:
    if isinstance(w, tuple):
        return "(" + ",".join(_fmt_witness(H, x) for x in w) + ")"
    if isinstance(w, int):
        return H.label(w)
    return str(w)


def _image(H: HyperringTable, f, args: Sequence) -> frozenset[int]:
    """Apply h or k (``f``) to a mix of elements and element sets."""
    sets = [a if isinstance(a, (set, frozenset)) else (a,) for a in args]
    if f == "h":
        return H.h_sets(*sets)
    return H.k_sets(*sets)


def _assoc_witness(H: HyperringTable, f: str, arity: int):
    for t in product(H.carrier, repeat=2 * arity - 1):
        ref = None
        for i in range(arity):
            inner = _image(H, f, t[i:i + arity])
            val = _image(H, f, t[:i] + (inner,) + t[i + arity:])
            if ref is None:
                ref = val
            elif val != ref:
                return t
    return None


def _comm_witness(H: HyperringTable, table: Mapping) -> tuple | None:
    for t, v in table.items():
        c = tuple(sorted(t))
        if table[c] != v:
            return t
    return None


def verify_axioms(H: HyperringTable) -> AxiomReport:
    """Exhaustively check the Krasner (m,n)-hyperring axioms.

    Every axiom is checked independently; the first witness in declaration
    order is recorded for each failing one.  A declared one that is not a
    scalar identity produces a warning, not a violation.
    """
    m, n, zero = H.m, H.n, H.zero
    violations: list[tuple[str, tuple]] = []
    warnings: list[tuple[str, tuple]] = []
    E = H.carrier

    # identity: h(u, e^(m-1)) = {u}, e = declared zero and unique
    bad = next((u for u in E if H.add[(u,) + (zero,) * (m - 1)] != {u}), None)
    if bad is not None:
        violations.append(("identity", (bad,)))
    else:
        others = [e for e in E if e != zero
                  and all(H.add[(u,) + (e,) * (m - 1)] == {u} for u in E)]
        if others:
            violations.append(("identity", (others[0],)))

    pad = (zero,) * (m - 2)
    inverses: list[int | None] = []
    inv_ok = True
    for u in E:
        cands = [v for v in E if zero in H.add[(u, v) + pad]]
        if len(cands) != 1:
            if inv_ok:
                violations.append(("inverse", (u,)))
            inv_ok = False
            inverses.append(None)
        else:
            inverses.append(cands[0])

    if inv_ok:
        w = None
        for t in product(E, repeat=m):
            for u in H.add[t]:
                for i in range(m):
                    rest = [inverses[t[j]] for j in range(m) if j != i]
                    if t[i] not in H.add[(u, *rest)]:
                        w = t + (u, i + 1)
                        break
                if w:
                    break
            if w:
                break
        if w:
            violations.append(("reversibility", w))

    w = _assoc_witness(H, "h", m)
    if w:
        violations.append(("add-associativity", w))
    if H.commutative_add:
        w = _comm_witness(H, H.add)
        if w:
            violations.append(("add-commutativity", w))
    w = _assoc_witness(H, "k", n)
    if w:
        violations.append(("mul-associativity", w))
    if H.commutative_mul:
        w = _comm_witness(H, H.mul)
        if w:
            violations.append(("mul-commutativity", w))

    w = None
    for i in range(n):
        for others in product(E, repeat=n - 1):
            for v in product(E, repeat=m):
                lhs = frozenset(H.mul[others[:i] + (x,) + others[i:]] for x in H.add[v])
                rhs = H.add[tuple(H.mul[others[:i] + (x,) + others[i:]] for x in v)]
                if lhs != rhs:
                    w = others[:i] + (v,) + others[i:]
                    break
            if w:
                break
        if w:
            break
    if w:
        violations.append(("distributivity", w))

    w = None
    for i in range(n):
        for others in product(E, repeat=n - 1):
            if H.mul[others[:i] + (zero,) + others[i:]] != zero:
                w = others[:i] + (zero,) + others[i:]
                break
        if w:
            break
    if w:
        violations.append(("zero-absorption", w))

    if H.one is not None:
        bad = next((u for u in E if H.k_with_ones(u) != u), None)
        if bad is not None:
            warnings.append(("one-not-neutral", (bad,) + (H.one,) * (n - 1)))

    order = {a: i for i, a in enumerate(AXIOMS)}
    violations.sort(key=lambda v: order[v[0]])
    return AxiomReport(not violations, violations, warnings)


# -- mutation sensitivity -----------------------------------------------------

@dataclass(frozen=True)
class Mutation:
    """Replace one table entry.  ``symmetric`` rewrites every permutation of ``args``."""
    table: str
    args: tuple[int, ...]
    value: frozenset[int] | int
    symmetric: bool = False

    def apply(self, H: HyperringTable) -> HyperringTable:
        add, mul = dict(H.add), dict(H.mul)
        target = add if self.table == "add" else mul
        keys = set(permutations(self.args)) if self.symmetric else {self.args}
        for k in keys:
            target[k] = self.value
        return H.replace(name=f"{H.name}*", add=add, mul=mul)

    def describe(self, H: HyperringTable) -> str:
        val = (_fmt_witness(H, tuple(sorted(self.value))) if self.table == "add"
               else H.label(self.value))
        kind = " (all orders)" if self.symmetric else ""
        return f"{self.table} {_fmt_witness(H, self.args)} -> {val}{kind}"


def single_entry_mutations(H: HyperringTable) -> Iterator[Mutation]:
    """Every way of changing one table entry (ordered, and all-orders under a flag)."""
    subsets = [frozenset(c) for r in range(1, H.size + 1) for c in combinations(H.carrier, r)]
    for symmetric in (True, False):
        for t, val in H.add.items():
            if symmetric and (not H.commutative_add or tuple(sorted(t)) != t):
                continue
            for s in subsets:
                if s != val:
                    yield Mutation("add", t, s, symmetric)
        for t, val in H.mul.items():
            if symmetric and (not H.commutative_mul or tuple(sorted(t)) != t):
                continue
            for v in H.carrier:
                if v != val:
                    yield Mutation("mul", t, v, symmetric)


def mutation_profile(H: HyperringTable) -> dict[tuple[str, ...], list[Mutation]]:
    """Group single-entry mutations by the exact set of axioms they break."""
    cached = H._cache.get("mutation_profile")
    if cached is not None:
        return cached
    out: dict[tuple[str, ...], list[Mutation]] = {}
    for mu in single_entry_mutations(H):
        failed = tuple(verify_axioms(mu.apply(H)).failed_axioms)
        out.setdefault(failed, []).append(mu)
    H._cache["mutation_profile"] = out
    return out


def isolating_mutations(H: HyperringTable) -> dict[str, Mutation | None]:
    """For each axiom, the first single-entry mutation breaking exactly that axiom."""
    found: dict[str, Mutation | None] = dict.fromkeys(AXIOMS)
    for failed, muts in mutation_profile(H).items():
        if len(failed) == 1 and found[failed[0]] is None:
            found[failed[0]] = muts[0]
    return found
