"""Naive reference implementations, written directly from the definitions.

They share no code with the library beyond table lookups, and are only
meant for the small fixtures.
"""
from itertools import combinations, product


def subsets(H):
    for r in range(1, H.size + 1):
        yield from (frozenset(c) for c in combinations(H.carrier, r))


def is_ideal(H, S):
    if H.zero not in S:
        return False
    for u in S:
        if not any(H.zero in H.add[(u, v) + (H.zero,) * (H.m - 2)] for v in S):
            return False
    for t in product(sorted(S), repeat=H.m):
        if not H.add[t] <= S:
            return False
    for t in product(H.carrier, repeat=H.n):
        if any(x in S for x in t) and H.mul[t] not in S:
            return False
    return True


def all_ideals(H):
    return sorted((S for S in subsets(H) if is_ideal(H, S)), key=lambda S: (len(S), sorted(S)))


def all_endomorphisms(H):
    out = []
    for f in product(H.carrier, repeat=H.size):
        if f[H.zero] != H.zero or (H.one is not None and f[H.one] != H.one):
            continue
        if all(f[H.mul[t]] == H.mul[tuple(f[x] for x in t)]
               for t in product(H.carrier, repeat=H.n)) and \
           all({f[x] for x in H.add[t]} == H.add[tuple(f[x] for x in t)]
               for t in product(H.carrier, repeat=H.m)):
            out.append(f)
    return out


def mul_fold(H, args):
    acc = H.mul[tuple(args[:H.n])]
    rest = args[H.n:]
    while rest:
        acc = H.mul[(acc,) + tuple(rest[:H.n - 1])]
        rest = rest[H.n - 1:]
    return acc


def powers(H, u, max_l=None):
    """Values of every valid power of u, by direct folding up to a generous bound."""
    out = set()
    if H.one is not None:
        out.add(u)  # exponent 1 is u itself
        for r in range(2, H.n + 1):
            out.add(H.mul[(u,) * r + (H.one,) * (H.n - r)])
    for l in range(1, (max_l or 2 * H.size + 2) + 1):
        out.add(mul_fold(H, (u,) * (l * (H.n - 1) + 1)))
    return out


def radical(H, E, f=None):
    f = f or (lambda x: x)
    return frozenset(u for u in H.carrier if any(f(p) in E for p in powers(H, u)))


def primes(H):
    out = []
    for S in all_ideals(H):
        if len(S) == H.size:
            continue
        if all(H.mul[t] not in S or any(x in S for x in t)
               for t in product(H.carrier, repeat=H.n)):
            out.append(S)
    return out


def endo_prime(H, E, f, positions="every"):
    """Direct transcription of the definition for a map vector ``f``."""
    one = H.one
    for t in product(H.carrier, repeat=H.n):
        if H.mul[t] not in E:
            continue
        oks = []
        for i in range(H.n):
            sub = t[:i] + (one,) + t[i + 1:]
            oks.append(t[i] in E or f[H.mul[sub]] in E)
        if (positions == "every" and not all(oks)) or (positions == "some" and not any(oks)):
            return False
    return True


def all_ideals_bitmask(H):
    """Every subset holding zero, as a bitmask, filtered by membership rules.

    Exhaustive like :func:`all_ideals`, but vectorized: the subsets grow one
    element at a time and each rule is applied once all its elements are
    decided, so 25-element carriers stay cheap.
    """
    import numpy as np

    rules = []  # all premises in S forces the conclusion into S
    for t, out in H.mul.items():
        rules += [((x,), out) for x in set(t)]
    for t, out in H.add.items():
        rules += [(tuple(set(t)), c) for c in out]
    rules += [((u,), H.negative(u)) for u in H.carrier]
    order = [H.zero] + [u for u in H.carrier if u != H.zero]
    rank = {u: i for i, u in enumerate(order)}
    by_step = {}
    for prem, concl in rules:
        by_step.setdefault(max(rank[x] for x in prem + (concl,)), []).append((prem, concl))

    one = np.uint64(1)
    S = np.array([1 << H.zero], dtype=np.uint64)
    for step, u in enumerate(order):
        if step:
            S = np.concatenate([S, S | (one << np.uint64(u))])
        for prem, concl in by_step.get(step, ()):
            hold = np.ones(S.shape, dtype=bool)
            for p in prem:
                hold &= ((S >> np.uint64(p)) & one).astype(bool)
            S = S[~hold | ((S >> np.uint64(concl)) & one).astype(bool)]
    found = [frozenset(u for u in range(H.size) if int(s) >> u & 1) for s in S]
    return sorted(found, key=lambda S: (len(S), sorted(S)))
