from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qnk.chern import (
    CH_OC_MINUS_1,
    PRESETS,
    AssumptionError,
    BaseClass,
    BlowupClass,
    SurfaceInvariants,
    SurfaceKind,
    class_vd,
    del_pezzo,
    discriminant,
    exceptional_sheaf_ch,
    moduli_dimension,
    pullback,
    quot_expected_dims,
    twist,
    validate_assumption,
)

K3 = PRESETS["k3"]
ABELIAN = PRESETS["abelian"]


class TestSurfaces:
    def test_presets_enforced(self):
        with pytest.raises(ValueError):
            SurfaceInvariants(23, 2, 0, SurfaceKind.K3)
        with pytest.raises(ValueError):
            SurfaceInvariants(0, 1, 2, SurfaceKind.ABELIAN)
        with pytest.raises(ValueError):
            SurfaceInvariants(2, 1, 0, SurfaceKind.DEL_PEZZO)
        assert SurfaceInvariants(-4, 0, 3).h1_O == 3

    def test_del_pezzo(self):
        assert del_pezzo(9).euler == 3
        assert del_pezzo(3).euler == 9
        assert PRESETS["k3"].k_squared == 0
        with pytest.raises(ValueError):
            del_pezzo(10)


class TestAssumption:
    def test_hilbert_class_any_surface(self):
        v = validate_assumption(BaseClass.hilbert(4), SurfaceInvariants(-10, 0, 3))
        assert v.ok and "w1 = 0" in v.reason

    def test_gcd(self):
        v = validate_assumption(BaseClass(2, 4, 0, 0), K3)
        assert not v and "gcd clause" in v.reason

    def test_positivity(self):
        v = validate_assumption(BaseClass(0, 1, 0, 0), K3)
        assert not v and "positivity" in v.reason

    def test_surface_clause(self):
        assert not validate_assumption(BaseClass(2, 1, 0, 0), SurfaceInvariants(0, 1, 0))
        assert validate_assumption(BaseClass(2, 1, 0, 0), PRESETS["p2"])


class TestDimensions:
    def test_discriminant(self):
        assert discriminant(BaseClass.hilbert(7)) == 14
        assert discriminant(BaseClass(3, 1, 0, 0)) == 0
        assert discriminant(BaseClass(2, 1, 1, Fraction(1, 2))) == -1

    def test_moduli_dimension(self):
        n = 5
        assert moduli_dimension(BaseClass.hilbert(n), 0, K3) == 2 * n
        assert moduli_dimension(BaseClass.hilbert(n), 1, K3) == 2 * n - 2
        assert moduli_dimension(BaseClass.hilbert(0), 0, ABELIAN) == 2

    def test_non_integral_rejected(self):
        with pytest.raises(ValueError):
            moduli_dimension(BaseClass(1, 0, 0, Fraction(1, 4)), 0, K3)

    def test_assumption_required(self):
        with pytest.raises(AssumptionError):
            moduli_dimension(BaseClass(2, 2, 0, 0), 0, K3)

    def test_quot_dims(self):
        assert quot_expected_dims(7, 1, 1) == (7, 5)
        assert quot_expected_dims(7, 3, 0) == (7, 7)
        assert quot_expected_dims(10, 2, 2) == (10, 2)

    @given(st.integers(1, 4), st.integers(-3, 3), st.integers(0, 5), st.integers(-20, 20))
    def test_dim_drop(self, r, c1_sq, d, c2):
        w = BaseClass(r, 1, c1_sq, Fraction(c1_sq, 2) - c2)
        step = moduli_dimension(w, d, K3) - moduli_dimension(w, d + 1, K3)
        assert step == r + 2 * d + 1


class TestBlowupClasses:
    def test_riemann_roch_derivation(self):
        assert CH_OC_MINUS_1 == (0, 1, Fraction(-1, 2))
        # ch(O_C) = ch(O) - ch(O(-C)) with O(-C) = O . e^{-C}
        trivial = BlowupClass(1, 0, 0, 0, 0)
        o_minus_c = twist(trivial, 1)
        assert (0, trivial.c_coeff - o_minus_c.c_coeff, trivial.ch2 - o_minus_c.ch2) == exceptional_sheaf_ch(0)
        # O_C(m+1) and O_C(m) differ by one in chi, hence in ch2
        for m in range(-3, 4):
            assert exceptional_sheaf_ch(m + 1)[2] - exceptional_sheaf_ch(m)[2] == 1

    def test_vd(self):
        w = BaseClass.hilbert(3)
        assert class_vd(w, 0) == pullback(w)
        v1 = class_vd(w, 1)
        assert (v1.rank, v1.c_coeff, v1.ch2) == (1, -1, Fraction(-3) + Fraction(1, 2))
        w2 = BaseClass(2, 1, 0, Fraction(7, 2))
        v3 = class_vd(w2, 3)
        assert (v3.c_coeff, v3.ch2) == (-3, Fraction(7, 2) + Fraction(3, 2))

    def test_twist_examples(self):
        v = BlowupClass(1, 0, 0, -4, Fraction(5, 2))
        assert twist(v, 0) == v
        t = twist(v, 1)
        assert (t.rank, t.c_coeff, t.ch2) == (1, -5, Fraction(5, 2) - 4 - Fraction(1, 2))
        assert twist(twist(v, 3), -3) == v

    def test_half_integrality_guard(self):
        with pytest.raises(ArithmeticError):
            BlowupClass(1, 0, 0, 0, Fraction(1, 3))

    @given(
        st.integers(1, 5), st.integers(-5, 5), st.integers(-6, 6), st.integers(-6, 6),
        st.integers(-8, 8), st.integers(-8, 8),
    )
    def test_twist_is_action(self, r, c1_sq, a_c, ch2_twice, a, b):
        v = BlowupClass(r, 1, c1_sq, a_c, Fraction(ch2_twice, 2))
        assert twist(v, a + b) == twist(twist(v, a), b)

    @given(st.integers(1, 5), st.integers(0, 6), st.integers(-6, 6))
    def test_vd_twist_pattern(self, r, d, k):
        v = twist(class_vd(BaseClass(r, 1, 0, 0), d), k)
        assert v.c_coeff == -(d + k * r)

    @given(st.integers(1, 5), st.integers(-5, 5), st.integers(-10, 10), st.integers(-10, 10))
    def test_discriminant_linearity(self, r, c1_sq, w2, j):
        w = BaseClass(r, 1, c1_sq, Fraction(w2, 2))
        assert discriminant(w.shift_ch2(j)) == discriminant(w) - 2 * r * j
