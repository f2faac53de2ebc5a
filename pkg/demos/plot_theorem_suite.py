"""
Running the theorem suite
=========================

Every structural result about Endo-prime and Endo-primary hyperideals can be
checked on finite instances.  The suite enumerates hyperideals and
endomorphisms and reports passes, vacuous instances and violations.
"""

from krasner import hyperfield5, hyperfield5_squared, run_suite, s4, search
from krasner.constructions import quotient
from krasner.fixtures import domain4
from krasner.theorems import CorpusEntry, format_reports

P = hyperfield5()
corpus = [CorpusEntry(P), CorpusEntry(domain4()), CorpusEntry(s4()),
          CorpusEntry(hyperfield5_squared(), factors=(CorpusEntry(P), CorpusEntry(P))),
          CorpusEntry(quotient(s4(), {0, 1}).table)]

reports = run_suite(corpus)
print(format_reports(reports))

###############################################################################
# Structures whose declared one is not an identity are skipped.  Forcing them
# in shows why: several results lean on the one being neutral.

forced = run_suite([s4()], require_scalar_identity=False)
for r in forced:
    if r.violations:
        print(r.theorem_id, r.violations[0].line())

###############################################################################
# The search side looks for separating examples: Endo-prime but not prime,
# or fixed by theta but not Endo-prime.

for H, E, th in search([s4()], "endo-prime-not-prime"):
    print("Endo-prime, not prime:", H.name, H.labels(E), th.name)
PP = hyperfield5_squared()
for H, E, th in search([PP], "theta-stable-not-endo-prime")[:5]:
    print("stable, not Endo-prime:", H.name, H.labels(E), th.name)
