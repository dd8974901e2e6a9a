"""The correspondence kernel Delta in the exterior algebra on H^1(J).

phi_i are the degree-1 generators and psi_i their degree-3 partners.  Integrating
phi_S * Delta^g / g! over the Jacobian returns psi_S for every subset S.
"""

from math import factorial

from algcoh.extalg import delta_class, integrate_jacobian, theta_class, verify_nu_formula

g = 2
theta = theta_class(g)
print("theta       =", theta)
print("∫ θ^g / g!  =", integrate_jacobian(theta ** g / factorial(g)))
print("Delta       =", delta_class(g))

for genus in (2, 3, 4):
    rep = verify_nu_formula(genus)
    print(f"g={genus}: {rep.exact_matches}/{rep.checked} subsets reproduce psi_S exactly")
