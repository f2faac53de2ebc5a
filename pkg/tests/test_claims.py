import pytest

from krasner.claims import CLAIMS, check_all, refutes
from krasner.classify import is_endo_prime, is_prime
from krasner.fixtures import hyperfield5_squared, s4
from krasner.ideals import enumerate_hyperideals
from krasner.morphisms import enumerate_endomorphisms

EXPECTED_FAILURES = {"prime-endo-prime"}


@pytest.mark.parametrize("claim", CLAIMS, ids=[c.key for c in CLAIMS])
def test_claim(claim):
    ok, detail = claim.check()
    assert ok == (claim.key not in EXPECTED_FAILURES), detail


def test_keys_unique_and_ordered():
    keys = [c.key for c in CLAIMS]
    assert len(set(keys)) == len(keys)
    assert [c.key for c, _, _ in check_all()] == keys


def test_prime_to_endo_prime_counterexample_is_genuine():
    PP = hyperfield5_squared()
    ok, detail = dict((c.key, (o, d)) for c, o, d in check_all())["prime-endo-prime"]
    assert detail.startswith("PxP: ")
    # the detail names a prime hyperideal, an endomorphism and a tuple; re-derive it here
    E = frozenset(PP.index(x) for x in ("(0,0)", "(0,1)", "(0,u)", "(0,v)", "(0,w)"))
    assert is_prime(PP, E)
    bad = [th for th in enumerate_endomorphisms(PP) if not is_endo_prime(PP, E, th)]
    assert bad
    t = (PP.index("(0,1)"), PP.index("(1,0)"))
    for th in bad:
        clause = lambda t, i: th.map[PP.substitute_one(t, i)] in E
        # fails at the second position, although the first holds
        assert PP.mul[t] in E and t[0] in E and not clause(t, 1) and t[1] not in E


def test_prime_to_endo_prime_holds_when_one_position_suffices():
    PP = hyperfield5_squared()
    for I in enumerate_hyperideals(PP):
        if I.is_proper and is_prime(PP, I):
            assert all(is_endo_prime(PP, I, th, "some") for th in enumerate_endomorphisms(PP))


def test_refutes():
    H = s4()
    E = frozenset({H.zero})
    t = tuple(H.index(x) for x in "1233")
    assert refutes(H, E, t, lambda t, i: False)
    assert not refutes(H, E, t, lambda t, i: True)
    assert not refutes(H, E, tuple(H.index(x) for x in "2222"), lambda t, i: False)
