"""Command-line interface: ``algcoh <command> [flags]``.

Exit codes: 0 when every requested check passes, 1 when a check fails or a
computation breaks an invariant, 2 for usage errors and invalid inputs.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .closedforms import (
    CountMismatch,
    MirrorOverlap,
    general_curve_poly,
    harder_poly,
    newstead_monomials,
    remark62_poly,
    theorem1_poly,
)
from .exactalg import NotDivisible, UniPoly, is_palindromic
from .extalg import GenusTooLarge, verify_nu_formula
from .flipcalc import ChainSpec, FlipSpec, InconsistentDims, InvalidChain, flip_chow_dims, thaddeus_chain
from .jacobian import InvalidGenus, InvalidProfile, JacobianProfile, make_profile
from .report import FORMATS, Report, UnsupportedFormat, emit_report
from .symmetric import algebraic_sym_powers, ordinary_sym_powers, projective_bundle_poly, vk_dimensions
from .verify import DEFAULT_SEED, verify_all

COMMANDS = (
    "theorem1",
    "harder",
    "general-curve",
    "sympow",
    "chain",
    "chow-flip",
    "newstead-count",
    "remark62",
    "nu-check",
    "verify-all",
)

USAGE_ERRORS = (InvalidGenus, InvalidProfile, InvalidChain, GenusTooLarge, UnsupportedFormat, ValueError)
CHECK_ERRORS = (NotDivisible, InconsistentDims, CountMismatch, MirrorOverlap)


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    genera: list[int]
    profile: str = "general"
    degree: int | None = None
    kmax: int | None = None
    fmt: str = "text"
    out: str | None = None
    hodge_ceiling: bool = True
    lam: int | None = None
    mu: int | None = None
    center: str | None = None
    p_minus: str | None = None
    seed: int = DEFAULT_SEED


def parse_genus(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise UsageError(f"empty genus range {text!r}")
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"--genus expects N or A..B, got {text!r}") from None


def parse_coeffs(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def build_profile(spec: str, g: int, hodge_ceiling: bool = True) -> JacobianProfile:
    if spec.startswith("custom:"):
        return make_profile("custom", g, parse_coeffs(spec[len("custom:"):]), enforce_ceiling=hodge_ceiling)
    if spec not in ("general", "ordinary", "hodge-max", "hodge_max"):
        raise UsageError(f"unknown profile {spec!r}")
    return make_profile(spec, g)


def _suffix(cfg: RunConfig, g: int) -> str:
    return "" if len(cfg.genera) == 1 else f"[g={g}]"


def _cmd_theorem1(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        profile = build_profile(cfg.profile, g, cfg.hodge_ceiling)
        report.polynomials[f"theorem1{_suffix(cfg, g)}"] = theorem1_poly(profile)


def _cmd_harder(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        report.polynomials[f"harder{_suffix(cfg, g)}"] = harder_poly(g)


def _cmd_general_curve(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        report.polynomials[f"general_curve{_suffix(cfg, g)}"] = general_curve_poly(g)


def _cmd_sympow(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        sfx = _suffix(cfg, g)
        kmax = cfg.kmax if cfg.kmax is not None else 4 * g
        profile = build_profile(cfg.profile, g, cfg.hodge_ceiling)
        if profile.grading == "ordinary":
            table = ordinary_sym_powers(g, kmax)
            for k, p in enumerate(table.polys):
                report.polynomials[f"P(S^{k}C){sfx}"] = p
            bad = [k for k, p in enumerate(table.polys) if not is_palindromic(p, 2 * k)]
            report.add_check(f"sympow_palindromic{sfx}", not bad, kmax + 1, len(bad))
            continue
        table = algebraic_sym_powers(profile, kmax)
        for k, p in enumerate(table.polys):
            report.polynomials[f"P_A(S^{k}C){sfx}"] = p
        bad = [k for k in range(kmax + 1) if vk_dimensions(profile, k) != table[k]]
        report.add_check(f"prop31_basis_matches_series{sfx}", not bad, kmax + 1, len(bad), str(bad[:5]) if bad else "")
        proj = [k for k in range(2 * g - 1, kmax + 1) if table[k] != projective_bundle_poly(profile, k)]
        report.add_check(f"projective_regime{sfx}", not proj, max(kmax - 2 * g + 2, 0), len(proj))
        pal = [k for k, p in enumerate(table.polys) if not is_palindromic(p, k)]
        report.add_check(f"sympow_palindromic{sfx}", not pal, kmax + 1, len(pal))


def _cmd_chain(cfg: RunConfig, report: Report):
    records = []
    for g in cfg.genera:
        sfx = _suffix(cfg, g)
        d = cfg.degree if cfg.degree is not None else 4 * g - 3
        profile = build_profile(cfg.profile, g, cfg.hodge_ceiling)
        der = thaddeus_chain(ChainSpec(g, d), profile)
        rows = [["0", "-", "-", der.x_polys[0].to_str()]]
        for k, (lam, mu) in enumerate(der.flip_types, start=1):
            rows.append([str(k), f"({lam},{mu})", der.sym_polys[k].to_str(), der.x_polys[k].to_str()])
        rows.append(["N_C", "", "", der.result.to_str()])
        report.table = (["k", "flip type", "centre P(S^k C)", "P(X_k)"], rows)
        report.polynomials[f"result{sfx}"] = der.result
        records.append(der.to_record())
        if profile.grading == "ordinary":
            expected, name, top = harder_poly(g), "matches_harder", 6 * g - 6
        else:
            expected, name, top = theorem1_poly(profile), "matches_theorem1", 3 * g - 3
        report.add_check(f"{name}{sfx}", der.result == expected)
        report.add_check(f"palindromic{sfx}", is_palindromic(der.result, top))
    if len(cfg.genera) > 1:
        report.table = None
    report.data["derivations"] = records


def _cmd_chow_flip(cfg: RunConfig, report: Report):
    if cfg.lam is None or cfg.mu is None or cfg.center is None or cfg.p_minus is None:
        raise UsageError("chow-flip needs --lam, --mu, --center and --p-minus")
    spec = FlipSpec(cfg.lam, cfg.mu, UniPoly(parse_coeffs(cfg.center)))
    rep = flip_chow_dims(spec, UniPoly(parse_coeffs(cfg.p_minus)))
    report.polynomials["b_plus_dims"] = rep.b_plus_dims
    report.polynomials["b_minus_dims"] = rep.b_minus_dims
    report.polynomials["quotient_dims"] = rep.quotient_dims
    report.add_check("quotients_agree", True)


def _cmd_newstead(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        sfx = _suffix(cfg, g)
        nm = newstead_monomials(g, check=False)
        report.polynomials[f"direct_count{sfx}"] = nm.direct_count
        report.polynomials[f"closed_sum{sfx}"] = nm.closed_sum
        report.add_check(
            f"matches_general_curve{sfx}",
            nm.direct_count == nm.closed_sum == general_curve_poly(g),
        )


def _cmd_remark62(cfg: RunConfig, report: Report):
    for g in cfg.genera:
        sfx = _suffix(cfg, g)
        profile = build_profile(cfg.profile, g, cfg.hodge_ceiling)
        p = remark62_poly(profile, check=False)
        report.polynomials[f"remark62{sfx}"] = p
        report.add_check(f"matches_theorem1{sfx}", p == theorem1_poly(profile))


def _cmd_nu_check(cfg: RunConfig, report: Report):
    records = []
    for g in cfg.genera:
        rep = verify_nu_formula(g)
        records.append(rep.to_record())
        report.add_check(
            f"nu_formula[g={g}]",
            rep.ok,
            rep.checked,
            len(rep.sign_mismatches) + len(rep.other_mismatches),
            f"{rep.exact_matches} exact, {len(rep.sign_mismatches)} sign-only, "
            f"{len(rep.other_mismatches)} other",
        )
    report.data["nu_reports"] = records


def _cmd_verify_all(cfg: RunConfig, report: Report):
    full = verify_all(cfg.genera, seed=cfg.seed)
    report.checks.extend(full.checks)
    report.data.update(full.data)


DISPATCH = {
    "theorem1": _cmd_theorem1,
    "harder": _cmd_harder,
    "general-curve": _cmd_general_curve,
    "sympow": _cmd_sympow,
    "chain": _cmd_chain,
    "chow-flip": _cmd_chow_flip,
    "newstead-count": _cmd_newstead,
    "remark62": _cmd_remark62,
    "nu-check": _cmd_nu_check,
    "verify-all": _cmd_verify_all,
}


def run_command(cfg: RunConfig) -> Report:
    report = Report(command=cfg.command)
    DISPATCH[cfg.command](cfg, report)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="algcoh", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--genus", help="N or A..B")
    parser.add_argument("--degree", type=int, help="odd degree d >= 4g-3 for 'chain'")
    parser.add_argument(
        "--profile",
        default="general",
        help="general | ordinary | hodge-max | custom:c0,c1,...",
    )
    parser.add_argument("--kmax", type=int)
    parser.add_argument("--format", dest="fmt", default="text", choices=FORMATS)
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument(
        "--no-hodge-ceiling",
        dest="hodge_ceiling",
        action="store_false",
        help="accept custom profiles above dim H_A^k <= C(g,k)^2",
    )
    parser.add_argument("--lam", type=int, help="flip type lambda (chow-flip)")
    parser.add_argument("--mu", type=int, help="flip type mu (chow-flip)")
    parser.add_argument("--center", help="centre polynomial coefficients (chow-flip)")
    parser.add_argument("--p-minus", dest="p_minus", help="P(X_-) coefficients (chow-flip)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random profiles")
    return parser


def _default_genera(command: str) -> str:
    return {"verify-all": "2..6", "nu-check": "2..4"}.get(command, "2")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        genera = parse_genus(args.genus or _default_genera(args.command))
        cfg = RunConfig(
            command=args.command,
            genera=genera,
            profile=args.profile,
            degree=args.degree,
            kmax=args.kmax,
            fmt=args.fmt,
            out=args.out,
            hodge_ceiling=args.hodge_ceiling,
            lam=args.lam,
            mu=args.mu,
            center=args.center,
            p_minus=args.p_minus,
            seed=args.seed,
        )
        report = run_command(cfg)
    except CHECK_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2

    payload = emit_report(report, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
