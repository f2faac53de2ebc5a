import pytest

from conftest import ids
from krasner.constructions import (inclusion, induced_endo, product, product_endo, projection,
                                   quotient, restrict)
from krasner.core import ArityError, PreconditionError, verify_axioms
from krasner.fixtures import domain4, hyperfield5, s4, s4_noone
from krasner.ideals import enumerate_hyperideals
from krasner.morphisms import enumerate_endomorphisms, identity, kernel


def test_product_basics(P, PP):
    assert PP.size == 25
    assert [sorted(I.labels()) for I in enumerate_hyperideals(PP)][:1] == [["(0,0)"]]
    assert len(enumerate_hyperideals(PP)) == 4
    assert product_endo(identity(P), identity(P), PP).map == tuple(PP.carrier)
    assert kernel(projection(PP, P, P, 0)) == frozenset(PP.index(f"(0,{y})") for y in "01uvw")


def test_product_arity_mismatch(P, S4):
    with pytest.raises(ArityError):
        product(P, S4)


@pytest.mark.parametrize("pair", [(hyperfield5, domain4), (domain4, domain4),
                                  (domain4, hyperfield5)])
def test_products_satisfy_axioms(pair):
    A, B = pair[0](), pair[1]()
    assert verify_axioms(product(A, B)).violations == []


def test_quotient_s4(S4, S4q):
    assert [sorted(c) for c in S4q.classes] == [[0, 1], [2, 3]]
    two = S4q.class_of(S4.index("2"))
    assert S4q.table.mul[(two,) * 4] == two
    assert S4q.table.elements == ("[0,1]", "[2,3]")
    assert kernel(S4q.projection) == {0, 1}


@pytest.mark.parametrize("make", [hyperfield5, domain4, s4, s4_noone])
def test_quotient_by_zero_is_isomorphic(make):
    H = make()
    Q = quotient(H, {H.zero})
    assert all(len(c) == 1 for c in Q.classes)
    assert Q.projection.map == tuple(H.carrier)
    relabelled = Q.table.replace(elements=H.elements, name=H.name)
    assert relabelled.structurally_equal(H)


@pytest.mark.parametrize("make", [hyperfield5, domain4, s4, s4_noone])
def test_quotients_satisfy_axioms_and_lift(make):
    H = make()
    for I in enumerate_hyperideals(H):
        if not I.is_proper:
            continue
        Q = quotient(H, I)
        assert verify_axioms(Q.table).violations == []
        for c, members in enumerate(Q.classes):
            assert all(Q.class_of(u) == c for u in members)
            assert Q.lift({c}) == members


def test_quotient_preconditions(S4):
    with pytest.raises(PreconditionError):
        quotient(S4, S4.carrier)
    with pytest.raises(PreconditionError, match="not a hyperideal"):
        quotient(S4, ids(S4, "0", "3"))


def test_induced(S4, S4q, PP, sw):
    assert induced_endo(identity(S4), S4q).map == (0, 1)
    Q = quotient(PP, {PP.zero})
    assert induced_endo(sw, Q).map == sw.map
    left = frozenset(PP.index(f"(0,{y})") for y in "01uvw")
    with pytest.raises(PreconditionError, match="outside E"):
        induced_endo(sw, quotient(PP, left))


def test_restrict(S4, P, PP, sw):
    sub, th = restrict(S4, S4.carrier, identity(S4))
    assert sub.structurally_equal(S4.replace(name=sub.name)) and th.map == tuple(S4.carrier)
    sub, th = restrict(S4, {0, 1}, identity(S4))
    assert sub.size == 2 and verify_axioms(sub).violations == []
    assert inclusion(sub, S4).map == (0, 1)


def test_diagonal_is_not_closed_under_addition(PP, sw):
    diag = frozenset(PP.index(f"({x},{x})") for x in "01uvw")
    # h((1,1),(u,u)) = h(1,u) x h(1,u) = {1,u} x {1,u} contains (1,u)
    assert PP.index("(1,u)") in PP.add[(PP.index("(1,1)"), PP.index("(u,u)"))]
    with pytest.raises(PreconditionError, match="not closed under h"):
        restrict(PP, diag, sw)


def test_fixed_points_of_inversion(P):
    inv = enumerate_endomorphisms(P)[1]
    fixed = {u for u in P.carrier if inv.map[u] == u}
    with pytest.raises(PreconditionError):
        restrict(P, fixed, inv)
