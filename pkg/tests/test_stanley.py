import random
from itertools import product

import pytest

from stanleydec import ring, solver, stanley
from stanleydec.errors import VerificationError, ZeroModuleError
from stanleydec.ring import MonomialIdeal, RingContext
from stanleydec.stanley import StanleyDecomposition, StanleySpace

from util import polynomial_quotient, localize_pair


def space(ctx, root, zplus=(), zminus=()):
    return StanleySpace(ctx, root, frozenset(zplus), frozenset(zminus))


class TestRegion:
    def test_plain_space(self):
        ctx = RingContext(2)
        r = stanley.space_region(space(ctx, (1, 0), zplus={0, 1}))
        assert r.bounds == ((1, None), (0, None))

    def test_fixed_negative_coordinate(self):
        ctx = RingContext(3, frozenset({2}))
        r = stanley.space_region(space(ctx, (1, 0, -1), zplus={1}))
        assert r.bounds == ((1, 1), (0, None), (-1, -1))

    def test_inverse_direction(self):
        ctx = RingContext(3, frozenset({1, 2}))
        r = stanley.space_region(
            space(ctx, (0, -1, 0), zplus={0, 2}, zminus={1})
        )
        assert r.bounds == ((0, None), (None, -1), (0, None))


class TestSpaceContains:
    def test_member(self):
        ctx = RingContext(3)
        s = space(ctx, (0, 1, 0), zplus={1})
        assert stanley.space_contains(s, (0, 4, 0))

    def test_fixed_violated(self):
        ctx = RingContext(3)
        s = space(ctx, (0, 1, 0), zplus={1})
        assert not stanley.space_contains(s, (1, 1, 0))

    def test_inverse_ray(self):
        ctx = RingContext(3, frozenset({1}))
        s = space(ctx, (0, 0, 0), zminus={1})
        assert stanley.space_contains(s, (0, -3, 0))
        assert not stanley.space_contains(s, (0, 1, 0))

    def test_region_semantics_match_product_enumeration(self):
        # monomials of u*K[Z] are exactly u times products of Z-directions
        ctx = RingContext(3, frozenset({2}))
        s = space(ctx, (1, 0, -1), zplus={1}, zminus={2})
        reachable = set()
        for b in range(4):
            for c in range(4):
                reachable.add((1, b, -1 - c))
        for m in ring.box_monomials(ctx, 3):
            assert stanley.space_contains(s, m) == (m in reachable)


class TestCanonical:
    def test_two_inverted_variables(self):
        ctx = RingContext(3, frozenset({1, 2}))
        D = stanley.canonical_sf_decomposition(ctx)
        assert len(D.spaces) == 4
        assert all(s.dimension == 3 for s in D.spaces)
        expected = {
            ((0, 0, 0), (0, 1, 2), ()),
            ((0, -1, 0), (0, 2), (1,)),
            ((0, 0, -1), (0, 1), (2,)),
            ((0, -1, -1), (0,), (1, 2)),
        }
        assert {s.key() for s in D.spaces} == expected

    def test_polynomial_ring(self):
        D = stanley.canonical_sf_decomposition(RingContext(1))
        assert [s.key() for s in D.spaces] == [((0,), (0,), ())]

    def test_one_inverted_verifies(self):
        ctx = RingContext(2, frozenset({0}))
        D = stanley.canonical_sf_decomposition(ctx)
        I = ring.ideal(ctx, (0, 0))
        J = MonomialIdeal(ctx)
        assert stanley.verify_decomposition(D, I, J).valid

    def test_all_subsets_of_three(self):
        for bits in product((False, True), repeat=3):
            A = frozenset(i for i in range(3) if bits[i])
            ctx = RingContext(3, A)
            D = stanley.canonical_sf_decomposition(ctx)
            assert len(D.spaces) == 2 ** len(A)
            assert stanley.verify_decomposition(
                D, ring.ideal(ctx, (0, 0, 0)), MonomialIdeal(ctx)
            ).valid
            assert stanley.sdepth_of(D) == 3


class TestVerify:
    def test_paper_quotient(self):
        ctx = RingContext(3)
        I = ring.ideal(ctx, (0, 1, 0))
        J = ring.ideal(ctx, (1, 1, 0), (0, 1, 1))
        D = StanleyDecomposition(ctx, (space(ctx, (0, 1, 0), zplus={1}),))
        assert stanley.verify_decomposition(D, I, J).valid

    def test_double_cover_witness(self):
        ctx = RingContext(1)
        D = StanleyDecomposition(
            ctx, (space(ctx, (0,), zplus={0}), space(ctx, (1,), zplus={0}))
        )
        report = stanley.verify_decomposition(
            D, ring.ideal(ctx, (0,)), MonomialIdeal(ctx)
        )
        assert not report.valid
        assert report.failure == "disjointness"
        assert report.witness == (1,)

    def test_coverage_failure(self):
        ctx = RingContext(2)
        I = ring.ideal(ctx, (1, 0), (0, 1))
        D = StanleyDecomposition(ctx, (space(ctx, (1, 0), zplus={0, 1}),))
        report = stanley.verify_decomposition(D, I, MonomialIdeal(ctx))
        assert report.failure == "coverage"
        assert report.witness == (0, 1)

    def test_containment_failure(self):
        ctx = RingContext(2)
        I = ring.ideal(ctx, (1, 0))
        D = StanleyDecomposition(ctx, (space(ctx, (0, 0), zplus={0, 1}),))
        report = stanley.verify_decomposition(D, I, MonomialIdeal(ctx))
        assert report.failure == "containment"


class TestLocalize:
    def test_maximal_ideal_six_spaces(self):
        ctx = RingContext(3)
        I = ring.ideal(ctx, (1, 0, 0), (0, 1, 0), (0, 0, 1))
        J = MonomialIdeal(ctx)
        D = StanleyDecomposition(
            ctx,
            (
                space(ctx, (1, 0, 0), zplus={0, 1}),
                space(ctx, (0, 1, 0), zplus={1, 2}),
                space(ctx, (0, 0, 1), zplus={0, 2}),
                space(ctx, (1, 1, 1), zplus={0, 1, 2}),
            ),
        )
        res = stanley.localize_decomposition(D, I, J, {0})
        ctxf = RingContext(3, frozenset({0}))
        expected = StanleyDecomposition(
            ctxf,
            (
                space(ctxf, (1, 0, 0), zplus={0, 1}),
                space(ctxf, (0, 0, 0), zplus={1}, zminus={0}),
                space(ctxf, (0, 0, 1), zplus={0, 2}),
                space(ctxf, (-1, 0, 1), zplus={2}, zminus={0}),
                space(ctxf, (1, 1, 1), zplus={0, 1, 2}),
                space(ctxf, (0, 1, 1), zplus={1, 2}, zminus={0}),
            ),
        )
        assert res.decomposition.same_as(expected)
        assert res.dropped == (1,)
        assert stanley.sdepth_of(res.decomposition) == 2
        assert stanley.verify_decomposition(
            res.decomposition, res.localized_I, res.localized_J
        ).valid

    def test_principal_quotient(self):
        ctx = RingContext(3)
        I = ring.ideal(ctx, (0, 1, 0))
        J = ring.ideal(ctx, (1, 1, 0), (0, 1, 1))
        D = StanleyDecomposition(ctx, (space(ctx, (0, 1, 0), zplus={1}),))
        res = stanley.localize_decomposition(D, I, J, {1})
        ctxf = RingContext(3, frozenset({1}))
        expected = StanleyDecomposition(
            ctxf,
            (
                space(ctxf, (0, 1, 0), zplus={1}),
                space(ctxf, (0, 0, 0), zminus={1}),
            ),
        )
        assert res.decomposition.same_as(expected)
        assert stanley.sdepth_of(res.decomposition) == 1

    def test_strict_increase_example(self):
        ctx = RingContext(2)
        I = ring.ideal(ctx, (2, 0), (1, 1))
        J = ring.ideal(ctx, (3, 1), (2, 2))
        D = StanleyDecomposition(
            ctx,
            (
                space(ctx, (1, 1), zplus={1}),
                space(ctx, (2, 0), zplus={0}),
                space(ctx, (2, 1)),
            ),
        )
        assert stanley.sdepth_of(D) == 0
        res = stanley.localize_decomposition(D, I, J, {0})
        ctxf = RingContext(2, frozenset({0}))
        expected = StanleyDecomposition(
            ctxf,
            (
                space(ctxf, (2, 0), zplus={0}),
                space(ctxf, (1, 0), zminus={0}),
            ),
        )
        assert res.decomposition.same_as(expected)
        assert stanley.sdepth_of(res.decomposition) == 1

    def test_invalid_input_rejected(self):
        ctx = RingContext(2)
        I = ring.ideal(ctx, (1, 0))
        D = StanleyDecomposition(ctx, (space(ctx, (1, 0), zplus={0}),))
        with pytest.raises(VerificationError):
            stanley.localize_decomposition(D, I, MonomialIdeal(ctx), {0})

    def test_randomized_localizations_verify(self):
        rng = random.Random(7)
        for _ in range(25):
            ctx, I, J = polynomial_quotient(rng)
            D = solver.sdepth(I, J).witness
            A = frozenset(i for i in range(ctx.n) if rng.random() < 0.5)
            res = stanley.localize_decomposition(D, I, J, A, check=False)
            report = stanley.verify_decomposition(
                res.decomposition, res.localized_I, res.localized_J
            )
            assert report.valid, (I, J, A, report)


class TestAdjoin:
    def test_plain(self):
        ctx = RingContext(1)
        D = StanleyDecomposition(ctx, (space(ctx, (0,), zplus={0}),))
        D2 = stanley.adjoin_variable(D, laurent=False)
        assert [s.key() for s in D2.spaces] == [((0, 0), (0, 1), ())]

    def test_laurent(self):
        ctx = RingContext(1)
        D = StanleyDecomposition(ctx, (space(ctx, (0,), zplus={0}),))
        D2 = stanley.adjoin_variable(D, laurent=True)
        assert {s.key() for s in D2.spaces} == {
            ((0, 0), (0, 1), ()),
            ((0, -1), (0,), (1,)),
        }

    def test_sdepth_increases_by_one(self):
        rng = random.Random(11)
        for _ in range(20):
            ctx, I, J = polynomial_quotient(rng, n=2)
            D = solver.sdepth(I, J).witness
            for laurent in (False, True):
                D2 = stanley.adjoin_variable(D, laurent)
                assert stanley.sdepth_of(D2) == stanley.sdepth_of(D) + 1
                I2 = stanley.adjoin_ideal(I, laurent)
                J2 = stanley.adjoin_ideal(J, laurent)
                assert stanley.verify_decomposition(D2, I2, J2).valid

    def test_restrict_adjoined_roundtrip(self):
        rng = random.Random(13)
        for _ in range(10):
            ctx, I, J = polynomial_quotient(rng, n=2)
            D = solver.sdepth(I, J).witness
            D2 = stanley.adjoin_variable(D, laurent=True)
            back = stanley.restrict_adjoined(D2)
            assert stanley.verify_decomposition(back, I, J).valid


class TestSdepthOf:
    def test_canonical_dimension(self):
        ctx = RingContext(3, frozenset({0, 1}))
        D = stanley.canonical_sf_decomposition(ctx)
        assert stanley.sdepth_of(D) == 3

    def test_zero_minimum(self):
        ctx = RingContext(2)
        D = StanleyDecomposition(
            ctx,
            (
                space(ctx, (1, 1), zplus={1}),
                space(ctx, (2, 0), zplus={0}),
                space(ctx, (2, 1)),
            ),
        )
        assert stanley.sdepth_of(D) == 0

    def test_empty_rejected(self):
        D = StanleyDecomposition(RingContext(2), ())
        with pytest.raises(ZeroModuleError):
            stanley.sdepth_of(D)
