"""
Tables, axioms and hyperideals
==============================

A four-element (2,4)-hyperring: load it, check the axioms, compute with it
and list its hyperideals.
"""

from krasner import (enumerate_hyperideals, iterated_add, iterated_mul, power, prime_radical,
                     radical, verify_axioms)
from krasner.fixtures import s4, s4_noone

H = s4()
print(H)
print("elements:", H.elements, " zero:", H.label(H.zero), " one:", H.label(H.one))

###############################################################################
# Hyperaddition returns a set, multiplication a single element.  The product
# is 2 when every argument lies in {2,3} and 0 otherwise.

one_plus_one = iterated_add(H, 1, [H.index("1"), H.index("1")])
print("h(1,1) =", H.labels(one_plus_one))
print("k(2,3,3,2) =", H.label(iterated_mul(H, 1, [H.index(x) for x in "2332"])))
print("k(1,2,3,3) =", H.label(iterated_mul(H, 1, [H.index(x) for x in "1233"])))
print("2 to the 4th =", H.label(power(H, H.index("2"), 4)))

###############################################################################
# The axiom checker passes, with one warning: the declared one does not act
# as a multiplicative identity here (k(2,1,1,1) is 0, not 2).

for line in verify_axioms(H).lines(H):
    print(line)

###############################################################################
# Four hyperideals.  The radical computed from powers and the intersection
# of the primes above an ideal are two routes to the same set, but only when
# the one is a genuine identity.  With this declared one every element has a
# power k(u,1,1,1) = 0, so the power route swallows everything.

for I in enumerate_hyperideals(H):
    print(f"{str(I.labels()):22} radical {H.labels(radical(H, I))}"
          f"   primes meet in {H.labels(prime_radical(H, I))}")

###############################################################################
# Dropping the declared one leaves only the exponents l(n-1)+1, and the two
# routes agree again.

Hn = s4_noone()
for I in enumerate_hyperideals(Hn):
    print(f"{str(I.labels()):22} radical {Hn.labels(radical(Hn, I))}"
          f"   primes meet in {Hn.labels(prime_radical(Hn, I))}")
