from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ids, ix
from krasner.classify import (POSITIONS, is_endo_prime, is_endo_primary, is_hyperintegral_domain,
                              is_prime, is_primary, is_strongly_endo_prime, is_theta_domain)
from krasner.claims import refutes
from krasner.core import IdentityRequiredError, PreconditionError
from krasner.fixtures import domain4, hyperfield5, hyperfield5_squared, s4
from krasner.ideals import enumerate_hyperideals, radical
from krasner.morphisms import enumerate_endomorphisms, identity
import oracles

CORPUS = [hyperfield5, domain4, s4, hyperfield5_squared]


def _instances(makes=CORPUS):
    for make in makes:
        H = make()
        for I in enumerate_hyperideals(H):
            if I.is_proper:
                for th in enumerate_endomorphisms(H):
                    yield H, I.members, th


def test_prime_examples(S4, P):
    v = is_prime(S4, {0})
    assert not v
    assert refutes(S4, {0}, v.witness, lambda t, i: False)
    assert refutes(S4, {0}, ix(S4, "1", "2", "3", "3"), lambda t, i: False)
    assert is_prime(S4, ids(S4, "0", "1"))
    assert is_prime(P, {0})


def test_primary_examples(P, PP, S4):
    assert is_primary(P, {0})
    assert is_primary(S4, ids(S4, "0", "2"))
    # (0,1)(1,0) = 0 with neither factor, nor its cofactor, in rad{(0,0)} = {(0,0)}
    v = is_primary(PP, {PP.zero})
    assert not v and v.witness == ix(PP, "(0,1)", "(1,0)")


def test_endo_prime_examples(PP, sw, S4):
    v = is_endo_prime(PP, {PP.zero}, sw)
    assert not v
    f = sw.map
    clause = lambda t, i: f[PP.substitute_one(t, i)] in {PP.zero}
    assert refutes(PP, {PP.zero}, v.witness, clause)
    assert refutes(PP, {PP.zero}, ix(PP, "(1,0)", "(0,1)"), clause)
    for th in enumerate_endomorphisms(S4):
        assert is_endo_prime(S4, {0}, th)


def test_prime_need_not_be_endo_prime(PP, sw):
    left = frozenset(PP.index(f"(0,{y})") for y in "01uvw")
    assert is_prime(PP, left)
    assert not is_endo_prime(PP, left, sw)
    assert is_endo_prime(PP, left, sw, positions="some")


def test_endo_primary_examples(S4, P):
    assert is_endo_primary(S4, ids(S4, "0", "2"), identity(S4))
    assert is_endo_primary(P, {0}, identity(P))


def test_strongly_examples(P, PP, sw):
    assert is_strongly_endo_prime(P, {0}, identity(P))
    v = is_strongly_endo_prime(PP, {PP.zero}, sw)
    assert not v
    left = frozenset(PP.index(f"(0,{y})") for y in "01uvw")
    right = frozenset(PP.index(f"({x},0)") for x in "01uvw")
    assert {frozenset(w) for w in v.witness} == {left, right}


def test_domains(G, S4):
    assert is_hyperintegral_domain(G)
    v = is_hyperintegral_domain(S4)
    assert not v and refutes(S4, {0}, ix(S4, "1", "2", "3", "3"), lambda t, i: False)
    assert is_theta_domain(S4, identity(S4))


def test_preconditions(P, S4n):
    for fn in (is_prime, is_primary):
        with pytest.raises(PreconditionError):
            fn(P, P.carrier)
    with pytest.raises(PreconditionError):
        is_endo_prime(P, P.carrier, identity(P))
    with pytest.raises(IdentityRequiredError):
        is_endo_prime(S4n, {0}, identity(S4n))
    with pytest.raises(ValueError):
        is_endo_prime(P, {0}, identity(P), positions="most")


@pytest.mark.parametrize("positions", POSITIONS)
def test_endo_prime_matches_oracle(positions):
    for H, E, th in _instances():
        assert bool(is_endo_prime(H, E, th, positions)) == \
            oracles.endo_prime(H, E, th.map, positions)


@pytest.mark.parametrize("positions", POSITIONS)
def test_witnesses_are_sound_and_first(positions):
    for H, E, th in _instances():
        f = th.map
        clause = lambda t, i: f[H.substitute_one(t, i)] in E
        v = is_endo_prime(H, E, th, positions)
        if v:
            continue
        t = v.witness
        assert H.mul[t] in E
        if positions == "some":
            assert refutes(H, E, t, clause)
        else:
            i = v.position - 1
            assert not (t[i] in E or clause(t, i))
        earlier = [s for s in product(H.carrier, repeat=H.n) if s < t]
        for s in earlier:
            if H.mul[s] not in E:
                continue
            oks = [s[i] in E or clause(s, i) for i in range(H.n)]
            assert (all(oks) if positions == "every" else any(oks))


def test_binary_identity_reduces_to_prime():
    for make in (hyperfield5, hyperfield5_squared, domain4):
        H = make()
        for I in enumerate_hyperideals(H):
            if I.is_proper:
                for pos in POSITIONS:
                    assert bool(is_endo_prime(H, I, identity(H), pos)) == bool(is_prime(H, I))


def test_implication_chain():
    for H, E, th in _instances():
        if is_prime(H, E):
            assert is_primary(H, E)
        if is_endo_prime(H, E, th):
            assert is_endo_primary(H, E, th)
        if is_strongly_endo_prime(H, E, th):
            assert is_endo_prime(H, E, th)
        if is_prime(H, E):
            assert is_endo_prime(H, E, th, positions="some")


def test_theta_stable_when_endo_prime():
    for H, E, th in _instances([hyperfield5, domain4, hyperfield5_squared]):
        if is_endo_prime(H, E, th):
            assert all(th.map[u] in E for u in E)


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_primary_uses_radical(data):
    H = data.draw(st.sampled_from([f() for f in CORPUS]))
    I = data.draw(st.sampled_from([J for J in enumerate_hyperideals(H) if J.is_proper]))
    R = radical(H, I)
    manual = all(
        H.mul[t] not in I.members
        or all(t[i] in I.members or H.substitute_one(t, i) in R for i in range(H.n))
        for t in product(H.carrier, repeat=H.n))
    assert bool(is_primary(H, I)) == manual
