import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algcoh.closedforms import general_curve_poly, harder_poly, theorem1_poly
from algcoh.exactalg import ONE, ZERO, UniPoly, exact_divide, geometric, is_palindromic, monomial
from algcoh.flipcalc import (
    ChainSpec,
    FlipSpec,
    InvalidChain,
    blowup_transform,
    flip_chow_dims,
    flip_transform,
    tail_corrected_series,
    thaddeus_chain,
    truncated_sym_series,
)
from algcoh.jacobian import make_profile, random_profile

from conftest import polys

P = lambda *cs: UniPoly(cs)  # noqa: E731


class TestBlowup:
    def test_point_on_surface(self):
        assert blowup_transform(P(1, 1), ONE, 2) == P(1, 2)

    def test_codimension_one_is_identity(self):
        assert blowup_transform(P(1, 3, 1), P(1, 1), 1) == P(1, 3, 1)

    def test_point_in_plane_codim_three(self):
        assert blowup_transform(P(1, 1, 1), ONE, 3) == P(1, 2, 2)

    @given(polys(), polys(), st.integers(1, 8))
    def test_matches_relation(self, px, pz, lam):
        # P(X~) - t P(E) = P(X) - t^lam P(Z), with E a P^(lam-1)-bundle over Z
        p_blow = blowup_transform(px, pz, lam)
        p_e = geometric(lam) * pz
        assert p_blow - p_e.shift(1) == px - pz.shift(lam)


class TestFlip:
    def test_equal_types_do_nothing(self):
        p = P(1, 2, 3)
        assert flip_transform(p, FlipSpec(3, 3, P(1, 5))) == p

    def test_first_genus_two_step(self):
        got = flip_transform(geometric(6), FlipSpec(1, 4, P(1, 1)))
        assert got == P(1, 2, 3, 3, 2, 1)

    @given(polys(), polys(), st.integers(1, 10), st.integers(1, 10))
    def test_inverse(self, p, c, lam, mu):
        spec = FlipSpec(lam, mu, c)
        assert flip_transform(flip_transform(p, spec), spec.inverse()) == p

    @given(polys(), polys(), st.integers(1, 10), st.integers(1, 10))
    def test_as_two_blowups(self, p_minus, center, lam, mu):
        # blow X_- up along Z_- (a P^(lam-1)-bundle over S, codim mu), then
        # blow down onto X_+ along Z_+ (a P^(mu-1)-bundle over S, codim lam)
        z_minus = geometric(lam) * center
        z_plus = geometric(mu) * center
        common = blowup_transform(p_minus, z_minus, mu)
        p_plus = common - (blowup_transform(ZERO, z_plus, lam))
        assert flip_transform(p_minus, FlipSpec(lam, mu, center)) == p_plus

    def test_invalid_type(self):
        with pytest.raises(ValueError):
            FlipSpec(0, 2, ONE)


class TestChowDims:
    def test_symmetric(self):
        rep = flip_chow_dims(FlipSpec(2, 2, P(1, 1)), P(1, 2, 2, 1))
        assert rep.b_plus_dims == rep.b_minus_dims == P(0, 0, 1, 1)

    def test_blowdown_side_empty(self):
        rep = flip_chow_dims(FlipSpec(1, 5, P(1, 1)), geometric(7))
        assert rep.b_minus_dims.is_zero()

    def test_genus_two_step(self):
        rep = flip_chow_dims(FlipSpec(1, 4, P(1, 1)), geometric(6))
        assert rep.b_plus_dims == P(0, 1, 2, 2, 1)
        assert rep.quotient_dims == geometric(6)

    @given(polys(lo=0), polys(lo=0), st.integers(1, 10), st.integers(1, 10))
    @settings(max_examples=200)
    def test_difference_is_flip_gap(self, p_minus, center, lam, mu):
        rep = flip_chow_dims(FlipSpec(lam, mu, center), p_minus)
        gap = exact_divide(monomial(lam) - monomial(mu), ONE - monomial(1))
        assert rep.b_plus_dims - rep.b_minus_dims == gap * center

    def test_coefficients_nonnegative(self, rng):
        for _ in range(50):
            lam, mu = rng.randint(1, 10), rng.randint(1, 10)
            center = UniPoly([rng.randint(0, 5) for _ in range(4)] + [1])
            rep = flip_chow_dims(FlipSpec(lam, mu, center), UniPoly([rng.randint(0, 9) for _ in range(20)]))
            assert all(c >= 0 for c in rep.b_plus_dims)
            assert all(c >= 0 for c in rep.b_minus_dims)


class TestChainSpec:
    def test_derived_constants(self):
        c = ChainSpec(2, 5)
        assert (c.w, c.m, c.n) == (2, 6, 3)

    @given(st.integers(2, 10), st.integers(0, 10))
    def test_relations(self, g, extra):
        c = ChainSpec(g, 4 * g - 3 + 2 * extra)
        assert c.m == c.n + 3 * g - 3
        assert 2 * c.w == c.n + 2 * g - 3
        assert c.n >= 1 and c.w >= 2 * g - 2

    @pytest.mark.parametrize("g, d", [(2, 6), (3, 7), (2, 3)])
    def test_invalid(self, g, d):
        with pytest.raises(InvalidChain):
            ChainSpec(g, d)


class TestThaddeusChain:
    def test_genus_two_derivation(self):
        der = thaddeus_chain(ChainSpec(2, 5), make_profile("general", 2))
        assert der.x_polys[0] == geometric(6)
        assert der.x_polys[1] == P(1, 2, 3, 3, 2, 1)
        assert der.x_polys[2] == der.x_polys[1]
        assert der.flip_types == ((1, 4), (2, 2))
        assert der.rhs_41 == P(1, 1, 1) * (ONE - monomial(4))
        assert der.result == P(1, 1, 1, 1)
        assert der.result == general_curve_poly(2)

    def test_record(self):
        rec = thaddeus_chain(ChainSpec(2, 5), make_profile("general", 2)).to_record()
        assert rec["result"] == ["1", "1", "1", "1"]
        assert {k: rec[k] for k in "gdmnw"} == {"g": 2, "d": 5, "m": 6, "n": 3, "w": 2}
        assert len(rec["x_polys"]) == 3

    @pytest.mark.parametrize("g", range(2, 6))
    def test_matches_theorem1_and_is_palindromic(self, g, rng):
        for profile in [make_profile("general", g), make_profile("hodge_max", g), random_profile(g, rng)]:
            results = set()
            for d in range(4 * g - 3, 4 * g + 6, 2):
                der = thaddeus_chain(ChainSpec(g, d), profile)
                assert der.result[0] == 1
                assert is_palindromic(der.result, 3 * g - 3)
                results.add(der.result)
            assert results == {theorem1_poly(profile)}

    @pytest.mark.parametrize("g", range(2, 5))
    def test_ordinary_grading_gives_harder(self, g):
        for d in (4 * g - 3, 4 * g - 1):
            assert thaddeus_chain(ChainSpec(g, d), make_profile("ordinary", g)).result == harder_poly(g)

    def test_genus_mismatch(self):
        with pytest.raises(InvalidChain):
            thaddeus_chain(ChainSpec(3, 9), make_profile("general", 2))


class TestTailIdentity:
    @pytest.mark.parametrize("g", range(2, 5))
    @pytest.mark.parametrize("kind", ["general", "hodge_max"])
    def test_boundary_and_beyond(self, g, kind):
        profile = make_profile(kind, g)
        for w in (2 * g - 2, 2 * g + 2):
            kmax = w + 2 * g + 4
            lhs = truncated_sym_series(profile, w, kmax)
            assert lhs == tail_corrected_series(profile, w, kmax)
            assert all(c.is_zero() for c in lhs[w + 1:])

    def test_rejects_small_w(self):
        with pytest.raises(ValueError):
            tail_corrected_series(make_profile("general", 3), 3, 10)
