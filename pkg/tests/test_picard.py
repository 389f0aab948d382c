"""Line-bundle calculus: canonical classes, twists, admissibility, cells."""

import pytest
from hypothesis import given, settings

import helpers
from wittgrass import (FramedDiagram, JumpTuples, PicClass, PicClassMod2,
                       all_diagrams, base_det, base_det2,
                       canonical_in_pullback_span, cell_canonical_identity,
                       cell_canonicals, enumerate_even, les_twists,
                       pullback_to_flag, pushforward_admissible, quotient_det,
                       rel_canonical_fiber, rel_canonical_flag,
                       rel_canonical_grass, relative_dimension, taut_det,
                       taut_det2, twist_class, verify_cond_even)

B = "BaseDet"
T = "TautDet"


class TestPicClassAlgebra:
    def test_canonical_form_drops_zeros_and_sorts(self):
        cls = PicClass(4, ((T, 2, 0), (B, 4, 1), (B, 2, -1)))
        assert cls.terms == ((B, 2, -1), (B, 4, 1))

    def test_validation(self):
        with pytest.raises(ValueError):
            PicClass(4, (("Other", 1, 1),))
        with pytest.raises(ValueError):
            PicClass(4, ((B, 5, 1),))
        with pytest.raises(ValueError):
            PicClass(4, ((B, 2, 1), (B, 2, 1)))
        with pytest.raises(ValueError):
            base_det(4, 2) + base_det(5, 2)

    def test_arithmetic(self):
        a = base_det(4, 4)
        b = taut_det(4, 2)
        assert (a + b) - a == b
        assert (-a) + a == PicClass.zero(4)
        assert 3 * a - a == 2 * a
        assert (2 * a).coeff(B, 4) == 2
        assert 0 * a == PicClass.zero(4)

    def test_mod2(self):
        cls = 2 * base_det(4, 4) + 3 * taut_det(4, 2) - base_det(4, 1)
        assert cls.mod2().support == ((B, 1), (T, 2))
        assert (cls + cls).mod2().is_zero()

    def test_mod2_symmetric_difference(self):
        x = base_det2(4, 4) + taut_det2(4, 2)
        y = taut_det2(4, 2) + base_det2(4, 3)
        assert (x + y).support == ((B, 3), (B, 4))
        assert (x + x).is_zero()
        assert x.base_part().support == ((B, 4),)

    def test_json_roundtrip(self):
        cls = 2 * base_det(6, 5) - taut_det(6, 3)
        assert PicClass.from_json(cls.to_json()) == cls
        cls2 = base_det2(6, 5) + taut_det2(6, 3)
        assert PicClassMod2.from_json(cls2.to_json()) == cls2

    def test_quotient_det(self):
        assert quotient_det(4) == base_det(4, 4) - base_det(4, 3)
        with pytest.raises(ValueError):
            quotient_det(1)


class TestCanonicalClasses:
    def test_grass_frozen(self):
        assert rel_canonical_grass(2, 4) == -2 * base_det(4, 4) + 4 * taut_det(4, 2)
        with pytest.raises(ValueError):
            rel_canonical_grass(4, 4)

    def test_flag_frozen(self):
        cls = rel_canonical_flag(JumpTuples((1, 3), (1, 2)), 6)
        assert cls == (-1) * base_det(6, 2) - 2 * base_det(6, 5) + 4 * taut_det(6, 3)
        assert rel_canonical_flag(JumpTuples((3,), (0,)), 3).is_zero()

    def test_fiber_frozen(self):
        cls = rel_canonical_fiber(JumpTuples((2,), (1,)), 2, 2)
        assert cls == 2 * base_det(4, 4) - 2 * base_det(4, 3) - taut_det(4, 2)
        assert rel_canonical_fiber(JumpTuples((3,), (2,)), 3, 2).is_zero()
        full = rel_canonical_fiber(JumpTuples((3,), (0,)), 3, 2)
        assert full == 3 * base_det(5, 5) - 5 * base_det(5, 3)

    def test_fiber_requires_matching_rank(self):
        with pytest.raises(ValueError):
            rel_canonical_fiber(JumpTuples((2,), (1,)), 3, 2)

    def test_fiber_equals_flag_minus_grass_pullback(self):
        """Independent route: subtract the pulled-back Grassmann class."""
        for d in range(1, 6):
            for e in range(1, 6):
                n = d + e
                for rows in helpers.all_row_vectors(d, e):
                    t = FramedDiagram(d, e, rows).jump_tuples()
                    pb = (-d) * base_det(n, n) + n * taut_det(n, d)
                    if t.k == 1 and t.evec[0] == 0:
                        pb = pb - n * taut_det(n, d) + n * base_det(n, d)
                    lhs = rel_canonical_fiber(t, d, e)
                    assert lhs == rel_canonical_flag(t, n) - pb, rows

    def test_fiber_mod2_route(self):
        for d in range(1, 5):
            for e in range(1, 5):
                n = d + e
                for rows in helpers.all_row_vectors(d, e):
                    t = FramedDiagram(d, e, rows).jump_tuples()
                    lhs = rel_canonical_fiber(t, d, e).mod2()
                    rhs = (rel_canonical_flag(t, n).mod2()
                           + pullback_to_flag(rel_canonical_grass(d, n).mod2(), t))
                    assert lhs == rhs, rows

    def test_relative_dimension_frozen(self):
        assert relative_dimension(JumpTuples((1, 3), (1, 2))) == 5

    @given(helpers.framed_diagrams())
    def test_area_plus_fiber_dimension_fills_frame(self, dg):
        assert dg.area() + relative_dimension(dg.jump_tuples()) == dg.d * dg.e


class TestPullback:
    def test_fixes_base_and_matches_last_jump(self):
        t = JumpTuples((1, 3), (1, 2))
        cls = base_det2(6, 6) + taut_det2(6, 3)
        assert pullback_to_flag(cls, t) == cls

    def test_rejects_other_taut_indices(self):
        with pytest.raises(ValueError):
            pullback_to_flag(taut_det2(6, 2), JumpTuples((1, 3), (1, 2)))

    def test_normalizes_colength_zero(self):
        t = JumpTuples((3,), (0,))
        assert pullback_to_flag(taut_det2(5, 3), t) == base_det2(5, 3)


class TestTwist:
    def test_frozen(self):
        assert twist_class(FramedDiagram(2, 2, (1, 1))) == taut_det2(4, 2)
        assert twist_class(FramedDiagram(2, 2, (2, 0))) == (
            base_det2(4, 4) + taut_det2(4, 2))
        assert twist_class(FramedDiagram.empty(3, 3)).is_zero()

    def test_cancellation_for_all_even_diagrams(self):
        for d in range(1, 6):
            for e in range(1, 6):
                for dg in enumerate_even(d, e):
                    assert verify_cond_even(dg), dg.rows

    def test_rejects_non_even(self):
        with pytest.raises(ValueError):
            verify_cond_even(FramedDiagram(2, 2, (2, 1)))


class TestAdmissibility:
    def test_witnesses(self):
        loose = FramedDiagram(3, 3, (2, 1, 1))
        assert not loose.is_even()
        assert pushforward_admissible(loose)
        assert not pushforward_admissible(FramedDiagram(3, 3, (2, 2, 1)))

    def test_even_diagrams_are_admissible(self):
        for d in range(1, 6):
            for e in range(1, 6):
                for dg in enumerate_even(d, e):
                    assert pushforward_admissible(dg), dg.rows

    def test_equivalent_to_span_membership(self):
        for d in range(1, 6):
            for e in range(1, 6):
                for rows in helpers.all_row_vectors(d, e):
                    dg = FramedDiagram(d, e, rows)
                    assert (pushforward_admissible(dg)
                            == canonical_in_pullback_span(dg)), rows


class TestCells:
    def test_frozen_d2_n4(self):
        cc = cell_canonicals(2, 4)
        vv1 = quotient_det(4)
        assert cc.sub_grassmannian == -taut_det(4, 2) + 2 * vv1
        assert cc.blow_down == taut_det(4, 1) - taut_det(4, 2) + vv1
        assert cc.exceptional_divisor == vv1 + taut_det(4, 1) - taut_det(4, 2)
        assert cc.exceptional_projection == 2 * taut_det(4, 1) - taut_det(4, 2)

    def test_identity_over_range(self):
        for d in range(2, 6):
            for corank in range(2, 6):
                assert cell_canonical_identity(d, d + corank)

    def test_validation(self):
        with pytest.raises(ValueError):
            cell_canonicals(1, 4)
        with pytest.raises(ValueError):
            cell_canonicals(3, 4)


class TestLesTwists:
    def test_frozen(self):
        sub, comp = les_twists(2, 2, PicClassMod2.zero(4))
        assert sub == taut_det2(4, 2)
        assert comp.is_zero()

        sub, comp = les_twists(3, 2, taut_det2(5, 3))
        vv1 = quotient_det(5).mod2()
        assert sub == vv1
        assert comp == taut_det2(5, 2) + vv1

    def test_base_generators_ride_along(self):
        ell = base_det2(5, 1)
        sub, comp = les_twists(2, 3, ell)
        assert sub == ell + taut_det2(5, 2)
        assert comp == ell

    def test_validation(self):
        with pytest.raises(ValueError):
            les_twists(2, 2, PicClassMod2.zero(5))
        with pytest.raises(ValueError):
            les_twists(2, 2, taut_det2(4, 1))
        with pytest.raises(ValueError):
            les_twists(1, 3, PicClassMod2.zero(4))

    @settings(max_examples=50)
    @given(helpers.even_diagrams(min_d=2))
    def test_involutive_on_sub_side(self, dg):
        """Applying the sub-side shift twice returns the original twist."""
        tw = twist_class(dg)
        once, _ = les_twists(dg.d, dg.e, tw)
        twice, _ = les_twists(dg.d, dg.e, once)
        assert twice == tw
