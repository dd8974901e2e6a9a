"""Exact Poincaré-polynomial calculus for the moduli space of rank 2 bundles
on a curve: symmetric powers, flips, the Thaddeus chain, closed forms and an
exterior-algebra check of the Jacobian-to-moduli correspondence."""

from .closedforms import general_curve_poly, harder_poly, newstead_monomials, remark62_poly, theorem1_poly
from .exactalg import (
    NotDivisible,
    RationalFunctionExpr,
    UniPoly,
    exact_divide,
    is_palindromic,
    series_coefficients,
    substitute_power,
)
from .extalg import (
    ExtClass,
    delta_class,
    integrate_jacobian,
    nu_of_monomial,
    theta_class,
    verify_nu_formula,
    wedge,
)
from .flipcalc import (
    ChainSpec,
    FlipSpec,
    blowup_transform,
    flip_chow_dims,
    flip_transform,
    thaddeus_chain,
)
from .jacobian import InvalidGenus, InvalidProfile, JacobianProfile, make_profile
from .symmetric import algebraic_sym_powers, ordinary_sym_powers, vk_dimensions

__version__ = "0.1.0"
