import pytest

from krasner.constructions import product_endo, quotient
from krasner.fixtures import domain4, hyperfield5, hyperfield5_squared, s4, s4_noone, swap
from krasner.morphisms import enumerate_endomorphisms, identity
from krasner.theorems import THEOREMS, CorpusEntry, format_reports, run_suite, search


def corpus():
    P = hyperfield5()
    return [CorpusEntry(P), CorpusEntry(domain4()), CorpusEntry(s4()),
            CorpusEntry(hyperfield5_squared(), factors=(CorpusEntry(P), CorpusEntry(P))),
            CorpusEntry(quotient(s4(), {0, 1}).table), CorpusEntry(s4_noone())]


@pytest.fixture(scope="module")
def reports():
    return run_suite(corpus())


def test_all_theorems_hold(reports):
    assert [r.theorem_id for r in reports] == list(THEOREMS)
    for r in reports:
        assert r.violations == [], "\n".join(r.lines())
        assert r.instances_checked == r.passed + r.vacuous


def test_hypothesis_failures_are_skips(reports):
    for r in reports:
        assert sorted(s.split(":")[0] for s in r.skips) == ["S4", "S4/{0,1}", "S4_noone"]


def test_each_theorem_has_real_instances(reports):
    weak = {r.theorem_id for r in reports if r.passed == 0}
    # a finite chain of Endo-primes always has its smallest member as intersection,
    # and no corpus structure has two Endo-primaries sharing a radical
    assert weak <= {"T5", "T18"}


def test_swap_example_is_vacuous_for_the_inclusion_theorem():
    PP = hyperfield5_squared()
    [rep] = run_suite([CorpusEntry(PP, [swap(PP)])], only=["T2"])
    assert rep.violations == []
    assert rep.vacuous == 3 and rep.passed == 0


def test_product_theorem_with_identities():
    P = hyperfield5()
    PP = hyperfield5_squared()
    idid = product_endo(identity(P), identity(P), PP)
    entry = CorpusEntry(PP, [idid], factors=(CorpusEntry(P, [identity(P)]),
                                              CorpusEntry(P, [identity(P)])))
    [rep] = run_suite([entry], only=["T14"])
    assert rep.violations == [] and rep.passed == 3
    # every hyperideal is fixed by the identity, and only {(0,0)} fails to be prime
    hits = search([entry], "theta-stable-not-endo-prime")
    assert [E for _, E, _ in hits] == [frozenset({PP.zero})]


def test_some_reading_breaks_the_inclusion_theorem():
    PP = hyperfield5_squared()
    [rep] = run_suite([CorpusEntry(PP)], only=["T2"], positions="some")
    assert rep.violations
    assert all(v.structure == "PxP" for v in rep.violations)


def test_non_neutral_one_breaks_several_theorems():
    reps = run_suite([CorpusEntry(s4())], require_scalar_identity=False)
    broken = {r.theorem_id for r in reps if r.violations}
    assert {"T1", "T3", "T7", "T15"} <= broken


def test_only_and_unknown_ids():
    reps = run_suite([CorpusEntry(hyperfield5())], only=["T10", "T1"])
    assert [r.theorem_id for r in reps] == ["T1", "T10"]
    with pytest.raises(ValueError):
        run_suite([hyperfield5()], only=["T99"])


def test_report_text_is_deterministic():
    a = format_reports(run_suite([hyperfield5(), domain4()]))
    b = format_reports(run_suite([hyperfield5(), domain4()]))
    assert a == b and "elapsed" not in a and a.endswith("violations: 0\n")


def test_search_properties():
    S4 = s4()
    hits = search([S4], "endo-prime-not-prime")
    assert {E for _, E, _ in hits} == {frozenset({0}), frozenset({0, 2})}
    PP = hyperfield5_squared()
    hits = search([CorpusEntry(PP, [swap(PP)])], "theta-stable-not-endo-prime")
    assert [(E, th.name) for _, E, th in hits] == [(frozenset({PP.zero}), "swap")]
    assert search([hyperfield5()], "endo-primary-not-endo-prime") == []
    with pytest.raises(ValueError):
        search([S4], "nonsense")


def test_search_skips_structures_without_one():
    assert search([s4_noone()], "endo-prime-not-prime") == []


def test_enumerated_endos_are_used_by_default():
    entry = CorpusEntry(hyperfield5())
    run_suite([entry], only=["T2"])
    assert entry.endos == enumerate_endomorphisms(hyperfield5())
