"""Walk the chain of flips from a projective space to the moduli space.

Each step of the chain replaces a projective bundle over S^k C by another
one; the table below tracks the algebraic Poincaré polynomial through every
step and ends at N_C.
"""

from algcoh import make_profile
from algcoh.closedforms import harder_poly, theorem1_poly
from algcoh.flipcalc import ChainSpec, thaddeus_chain

g, d = 3, 9
profile = make_profile("hodge_max", g)
der = thaddeus_chain(ChainSpec(g, d), profile)

print(f"g={g} d={d}: m={der.chain.m} n={der.chain.n} w={der.chain.w}")
print(f"  X_0 = {der.x_polys[0].to_str()}")
for k, (lam, mu) in enumerate(der.flip_types, start=1):
    print(f"  flip {k} of type ({lam},{mu}) along S^{k}C -> X_{k} = {der.x_polys[k].to_str()}")
print(f"  N_C: {der.result.to_str()}")
assert der.result == theorem1_poly(profile)

# the same chain in ordinary cohomology recovers the classical count
ordinary = thaddeus_chain(ChainSpec(g, d), make_profile("ordinary", g))
print(f"ordinary Betti numbers: {ordinary.result.int_coeffs()}")
assert ordinary.result == harder_poly(g)
