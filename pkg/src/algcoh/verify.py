"""The cross-checking battery behind ``algcoh verify-all``.

Each ``check_*`` function runs one family of identities over a genus range
and appends a :class:`~algcoh.report.Check` with case and failure counts.
Random inputs come from a seeded :class:`random.Random`, so runs are
reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from .closedforms import general_curve_poly, harder_poly, newstead_monomials, remark62_poly, theorem1_poly
from .exactalg import ONE, UniPoly, exact_divide, is_palindromic, monomial
from .extalg import (
    ExtClass,
    delta_class,
    integrate_jacobian,
    random_homogeneous,
    theta_class,
    verify_nu_formula,
    wedge,
)
from .flipcalc import (
    ChainSpec,
    FlipSpec,
    flip_chow_dims,
    tail_corrected_series,
    thaddeus_chain,
    truncated_sym_series,
)
from .jacobian import make_profile, random_profile
from .report import Report
from .symmetric import algebraic_sym_powers, projective_bundle_poly, vk_dimensions

DEFAULT_SEED = 1995


def chain_degrees(g: int) -> range:
    return range(4 * g - 3, 4 * g + 6, 2)


def standard_profiles(g: int, rng: random.Random, n_random: int):
    profiles = [make_profile("general", g), make_profile("hodge_max", g)]
    profiles += [random_profile(g, rng) for _ in range(n_random)]
    return profiles


def _record(report: Report, name: str, failures: list, cases: int):
    detail = "; ".join(map(str, failures[:3]))
    report.add_check(name, not failures, cases, len(failures), detail)


def check_theorem1_via_flips(report: Report, genera, rng: random.Random, n_random: int = 5):
    failures, cases = [], 0
    dindep_fail, dcases = [], 0
    for g in genera:
        for profile in standard_profiles(g, rng, n_random):
            expected = theorem1_poly(profile)
            results = set()
            for d in chain_degrees(g):
                cases += 1
                got = thaddeus_chain(ChainSpec(g, d), profile).result
                results.add(got)
                if got != expected:
                    failures.append(f"g={g} d={d} {profile.label()}")
            dcases += 1
            if len(results) != 1:
                dindep_fail.append(f"g={g} {profile.label()}")
    _record(report, "theorem1_via_flips", failures, cases)
    _record(report, "chain_independent_of_degree", dindep_fail, dcases)


def check_harder_via_flips(report: Report, genera):
    failures = []
    for g in genera:
        got = thaddeus_chain(ChainSpec(g, 4 * g - 3), make_profile("ordinary", g)).result
        if got != harder_poly(g):
            failures.append(f"g={g}")
    _record(report, "harder_via_flips", failures, len(genera))


def check_general_curve(report: Report, genera):
    failures = []
    for g in genera:
        t1 = theorem1_poly(make_profile("general", g))
        gc = general_curve_poly(g)
        nm = newstead_monomials(g, check=False)
        if not (t1 == gc == nm.direct_count == nm.closed_sum):
            failures.append(f"g={g}")
    _record(report, "general_curve_and_newstead_count", failures, len(genera))


def check_prop31(report: Report, genera):
    failures, cases = [], 0
    proj_fail, pcases = [], 0
    for g in genera:
        for kind in ("general", "hodge_max"):
            profile = make_profile(kind, g)
            table = algebraic_sym_powers(profile, 4 * g)
            for k in range(4 * g + 1):
                cases += 1
                if vk_dimensions(profile, k) != table[k]:
                    failures.append(f"g={g} {kind} k={k}")
                if k >= 2 * g - 1:
                    pcases += 1
                    if table[k] != projective_bundle_poly(profile, k):
                        proj_fail.append(f"g={g} {kind} k={k}")
    _record(report, "prop31_basis_matches_series", failures, cases)
    _record(report, "symmetric_power_projective_regime", proj_fail, pcases)


def check_remark62(report: Report, genera, rng: random.Random, n_random: int = 100):
    failures, cases = [], 0
    for g in genera:
        for profile in standard_profiles(g, rng, n_random):
            cases += 1
            if remark62_poly(profile, check=False) != theorem1_poly(profile):
                failures.append(f"g={g} {profile.label()}")
    _record(report, "remark62_counting", failures, cases)


def check_palindromy(report: Report, genera, rng: random.Random, n_random: int = 5):
    failures, cases = [], 0
    for g in genera:
        for profile in standard_profiles(g, rng, n_random):
            cases += 1
            p = theorem1_poly(profile)
            if p.degree != 3 * g - 3 or not is_palindromic(p, 3 * g - 3):
                failures.append(f"g={g} {profile.label()}")
    _record(report, "theorem1_palindromic", failures, cases)


def random_flip(rng: random.Random) -> tuple[FlipSpec, UniPoly]:
    lam, mu = rng.randint(1, 10), rng.randint(1, 10)
    center = UniPoly([rng.randint(0, 6) for _ in range(rng.randint(1, 6))] + [1])
    p_minus = UniPoly([rng.randint(0, 20) for _ in range(rng.randint(1, 25))])
    return FlipSpec(lam, mu, center), p_minus


def check_prop71(report: Report, rng: random.Random, trials: int = 200):
    failures = []
    for _ in range(trials):
        spec, p_minus = random_flip(rng)
        rep = flip_chow_dims(spec, p_minus)
        gap = exact_divide(monomial(spec.lam) - monomial(spec.mu), ONE - monomial(1))
        if rep.b_plus_dims - rep.b_minus_dims != gap * spec.center_poly:
            failures.append(f"lam={spec.lam} mu={spec.mu}")
    _record(report, "prop71_dimensions", failures, trials)


def check_theta(report: Report, genera):
    failures = []
    for g in genera:
        val = integrate_jacobian(theta_class(g) ** g / factorial(g))
        if val.terms != {((), ()): Fraction(1)}:
            failures.append(f"g={g}: {val}")
    _record(report, "theta_key_property", failures, len(genera))


def check_nu(report: Report, genera) -> list[dict]:
    records = []
    fail, cases, signs = [], 0, 0
    for g in genera:
        rep = verify_nu_formula(g)
        records.append(rep.to_record())
        cases += rep.checked
        signs += len(rep.sign_mismatches)
        fail.extend(f"g={g} {m['subset']}" for m in rep.other_mismatches)
        fail.extend(f"g={g} sign {s}" for s in rep.sign_mismatches)
    pattern = "sign pattern: all exact matches" if not signs else f"sign pattern: {signs} sign-only mismatches"
    detail = "; ".join([pattern] + fail[:3])
    report.add_check("nu_formula", not fail, cases, len(fail), detail)
    return records


def check_exterior_laws(report: Report, rng: random.Random, trials: int = 500):
    anti_fail, assoc_fail = [], []
    for _ in range(trials):
        g = rng.randint(2, 4)
        p1, q1 = rng.randint(0, 3), rng.randint(0, 2)
        p2, q2 = rng.randint(0, 3), rng.randint(0, 2)
        a = random_homogeneous(g, p1, q1, rng)
        b = random_homogeneous(g, p2, q2, rng)
        da, db = p1 + 3 * q1, p2 + 3 * q2
        if wedge(a, b) != wedge(b, a).scale((-1) ** (da * db)):
            anti_fail.append((g, p1, q1, p2, q2))
        c = random_homogeneous(g, rng.randint(0, 2), rng.randint(0, 2), rng)
        if wedge(wedge(a, b), c) != wedge(a, wedge(b, c)):
            assoc_fail.append((g, p1, q1, p2, q2))
    _record(report, "wedge_anticommutative", anti_fail, trials)
    _record(report, "wedge_associative", assoc_fail, trials)


def check_delta_bidegrees(report: Report, genera):
    failures, cases = [], 0
    for g in genera:
        d = delta_class(g)
        power = ExtClass.scalar(g)
        for k in range(1, g + 1):
            cases += 1
            power = wedge(power, d)
            allowed = {
                (2 * a + b, 3 * b + 6 * (k - a - b))
                for a in range(k + 1)
                for b in range(k + 1 - a)
            }
            if not power.bidegrees() <= allowed:
                failures.append(f"g={g} k={k}")
    _record(report, "delta_power_bidegrees", failures, cases)


def check_tail_identity(report: Report, genera):
    failures, cases = [], 0
    for g in genera:
        for kind in ("general", "hodge_max"):
            profile = make_profile(kind, g)
            for w in (2 * g - 2, 2 * g + 2):
                cases += 1
                kmax = w + 2 * g + 4
                if truncated_sym_series(profile, w, kmax) != tail_corrected_series(profile, w, kmax):
                    failures.append(f"g={g} {kind} w={w}")
    _record(report, "tail_identity", failures, cases)


def verify_all(genera, *, nu_genera=None, seed: int = DEFAULT_SEED) -> Report:
    """Run every check over ``genera``; ``nu_genera`` defaults to ``genera`` capped at 4."""
    genera = list(genera)
    if nu_genera is None:
        nu_genera = [g for g in genera if g <= 4]
    rng = random.Random(seed)
    report = Report(command="verify-all")
    check_theorem1_via_flips(report, genera, rng)
    check_harder_via_flips(report, genera)
    check_general_curve(report, genera)
    check_prop31(report, genera)
    check_remark62(report, genera, rng)
    check_palindromy(report, genera, rng)
    check_prop71(report, rng)
    check_theta(report, genera)
    report.data["nu_reports"] = check_nu(report, nu_genera)
    check_exterior_laws(report, rng)
    check_delta_bidegrees(report, [g for g in genera if g <= 4])
    check_tail_identity(report, [g for g in genera if g <= 4])
    return report
