"""Three descriptions of P_A(N_C) for a curve with general Jacobian.

The closed rational form, the count of independent monomials in
alpha, beta, gamma, and a sum over alpha^i beta^j H_A^k(J) all agree.  The
last one also works for special Jacobians, shown here with random profiles.
"""

import random

from algcoh.closedforms import general_curve_poly, newstead_monomials, remark62_poly, theorem1_poly
from algcoh.jacobian import random_profile

for g in range(2, 7):
    nm = newstead_monomials(g)
    print(f"g={g}: {general_curve_poly(g).int_coeffs()}  (monomials: {nm.direct_count.int_coeffs()})")

rng = random.Random(7)
for _ in range(3):
    profile = random_profile(4, rng)
    p = remark62_poly(profile)
    print(f"H_A(J) = {profile.coefficients}: P_A(N_C) = {p.int_coeffs()}")
    assert p == theorem1_poly(profile)
