"""
Prime versus Endo-prime
=======================

Endo-primality weakens primality with an escape clause: when a product lands
in E, a factor u_i outside E is forgiven if theta sends the product with u_i
replaced by the one into E.  This demo puts the two side by side.
"""

from krasner import enumerate_endomorphisms, enumerate_hyperideals, is_endo_prime, is_prime
from krasner.fixtures import hyperfield5_squared, s4, swap
from krasner.textio import format_tuple

###############################################################################
# In the four-element (2,4)-hyperring, {0} is not prime: (1,1,1,1) multiplies
# to 0 with no factor in {0}.  Every endomorphism rescues it though, since
# replacing any factor by the one already gives 0.

H = s4()
zero = {H.zero}
v = is_prime(H, zero)
print("prime:", bool(v), "witness", format_tuple(H, v.witness))
for th in enumerate_endomorphisms(H):
    print(f"Endo-prime for {th.name}:", bool(is_endo_prime(H, zero, th)))

###############################################################################
# Being fixed by theta is not enough.  Swapping coordinates in PxP fixes
# {(0,0)}, yet (0,1)*(1,0) = (0,0) while putting the one in the first slot
# gives swap((1,1)*(1,0)) = (0,1), which is not zero.

PP = hyperfield5_squared()
sw = swap(PP)
v = is_endo_prime(PP, {PP.zero}, sw)
print("swap fixes (0,0):", PP.label(sw(PP.zero)))
print("Endo-prime for swap:", bool(v), "witness", format_tuple(PP, v.witness),
      "failing at position", v.position)

###############################################################################
# The escape clause can be read per position (each u_i outside E needs it)
# or existentially (one good position suffices).  The two readings split on
# PxP: the prime {0}xP is Endo-prime for the identity under both, but not for
# the swaps under the per-position reading.

first_factor_zero = next(I for I in enumerate_hyperideals(PP)
                         if I.is_proper and PP.index("(0,1)") in I.members)
print("{0}xP prime:", bool(is_prime(PP, first_factor_zero)))
for th in enumerate_endomorphisms(PP):
    every = is_endo_prime(PP, first_factor_zero, th, "every")
    some = is_endo_prime(PP, first_factor_zero, th, "some")
    extra = "" if every else f"  witness {format_tuple(PP, every.witness)} at {every.position}"
    print(f"{th.name:9} every={bool(every)!s:5} some={bool(some)}{extra}")
