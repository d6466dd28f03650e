from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gausstorus.cyclo import (
    CycNum,
    embed,
    gauss_sum,
    master_order,
    one,
    qnum,
    real_sign,
    sqrt_int,
    zero,
    zeta,
)


def small_cyc(order=24):
    """Elements with a few small terms, enough to exercise reduction."""
    coeff = st.fractions(
        min_value=-3, max_value=3, max_denominator=4
    )
    return st.builds(
        lambda pairs: sum(
            (c * zeta(order, e) for e, c in pairs), zero(order)
        ),
        st.lists(st.tuples(st.integers(0, order - 1), coeff), max_size=4),
    )


class TestCanonicalForm:
    def test_zeta_has_unit_order(self):
        for L in (8, 24, 32, 40):
            assert zeta(L) ** L == 1
            assert zeta(L) ** (L - 1) == zeta(L, -1)

    def test_full_power_table_wraps(self):
        z = zeta(24, 5)
        assert z ** 24 == one(24)
        assert z * z ** 23 == 1

    def test_imaginary_unit(self):
        i = zeta(8, 2)
        assert i * i == -1
        assert i.conj() == -i

    def test_rational_detection(self):
        z = zeta(24, 4)  # primitive 6th root
        w = z + z.conj()  # 2*cos(pi/3) = 1
        assert w.is_rational() and w.as_rational() == 1
        assert not zeta(24, 1).is_rational()

    def test_hash_agrees_with_rational(self):
        assert hash(zeta(24, 0)) == hash(Fraction(1))
        assert zeta(24, 12) == -1

    def test_mixed_orders_refuse_to_combine(self):
        with pytest.raises(ValueError):
            zeta(24) + zeta(8)
        with pytest.raises(ValueError):
            zeta(24) * zeta(8)
        # equality never raises: rationals are identified across orders,
        # anything else compares unequal
        assert zeta(24) != zeta(8)
        assert zeta(24, 0) == zeta(8, 0)
        assert zeta(24, 12) == zeta(8, 4)  # both are -1

    def test_coeff_strings_round_trip(self):
        z = zeta(24, 7) / 3 + Fraction(1, 2)
        back = CycNum.from_coeffs(24, [Fraction(s) for s in z.coeff_strings()])
        assert back == z


class TestFieldLaws:
    @given(small_cyc(), small_cyc(), small_cyc())
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a * b == b * a
        assert a + b == b + a
        assert a - a == 0

    @given(small_cyc(), small_cyc())
    def test_conj_is_a_ring_map(self, a, b):
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        assert a.conj().conj() == a

    @given(small_cyc())
    def test_inverses(self, a):
        if not a:
            with pytest.raises(ZeroDivisionError):
                a.inv()
        else:
            assert a * a.inv() == 1
            assert a.inv().inv() == a

    @given(small_cyc(), st.integers(-6, 6))
    def test_powers_match_repeated_product(self, a, n):
        if not a and n < 0:
            return
        expected = one(24)
        step = a if n >= 0 else (a.inv() if a else a)
        for _ in range(abs(n)):
            expected = expected * step
        assert a ** n == expected


class TestQuantumIntegers:
    def test_first_values(self):
        N = 3
        q = zeta(master_order(N), 4)
        assert qnum(0, N) == 0
        assert qnum(1, N) == 1
        assert qnum(2, N) == q + q.inv()
        assert qnum(3, N) == q ** 2 + 1 + q ** -2

    def test_half_integer_values(self):
        # [1/2] = 1/(x + 1/x) with x = q^(1/2)
        N = 5
        x = zeta(master_order(N), 2)
        assert qnum(Fraction(1, 2), N) * (x + x.inv()) == 1

    def test_antisymmetry_and_period(self):
        for N in (3, 4):
            for twice_m in range(-6, 7):
                m = Fraction(twice_m, 2)
                assert qnum(-m, N) == -qnum(m, N)
                assert qnum(m + N, N) == -qnum(m, N)
                assert qnum(m + 2 * N, N) == qnum(m, N)

    def test_specializes_to_classical_value(self):
        # [2] at q = exp(pi*i/3) is 2*cos(pi/3) = 1 exactly
        assert qnum(2, 3) == 1

    def test_rejects_finer_denominators(self):
        with pytest.raises(ValueError):
            qnum(Fraction(1, 3), 3)


class TestSquareRoots:
    def test_small_roots(self):
        r2 = sqrt_int(2, 24)
        assert r2 * r2 == 2 and real_sign(r2) == 1
        r3 = sqrt_int(3, 24)
        assert r3 * r3 == 3 and real_sign(r3) == 1
        assert sqrt_int(6, 24) == r2 * r3
        assert sqrt_int(4, 24) == 2
        assert sqrt_int(12, 24) == 2 * r3
        assert sqrt_int(0, 24) == 0

    def test_roots_for_each_supported_rank(self):
        for N in range(3, 9):
            L = master_order(N)
            need = N if N % 2 else 2 * N
            r = sqrt_int(need, L)
            assert r * r == need and real_sign(r) == 1

    def test_missing_roots_raise(self):
        with pytest.raises(ValueError):
            sqrt_int(5, 24)
        with pytest.raises(ValueError):
            sqrt_int(7, 40)
        with pytest.raises(ValueError):
            sqrt_int(-1, 24)


class TestGaussSums:
    def test_prime_sums_square_to_signed_prime(self):
        # classical: g_p^2 = p for p = 1 mod 4, -p for p = 3 mod 4
        assert gauss_sum(5, 40) ** 2 == 5
        assert gauss_sum(3, 24) ** 2 == -3
        assert gauss_sum(7, 56) ** 2 == -7

    def test_doubly_even_modulus(self):
        g = gauss_sum(8, 32)
        assert g * g.conj() == 16
        i = zeta(32, 8)
        assert g * g == 16 * i

    def test_requires_containment(self):
        with pytest.raises(ValueError):
            gauss_sum(5, 24)


class TestNumerics:
    def test_embed_known_values(self):
        assert abs(embed(qnum(2, 4)) - 2 ** 0.5) < 1e-9
        assert abs(embed(zeta(8, 1)) - complex(2 ** -0.5, 2 ** -0.5)) < 1e-9
        assert embed(zero(24)) == 0

    def test_real_sign(self):
        assert real_sign(sqrt_int(2, 24)) == 1
        assert real_sign(-sqrt_int(3, 24)) == -1
        assert real_sign(zero(24)) == 0
        with pytest.raises(ValueError):
            real_sign(zeta(24, 1))

    def test_sign_of_tiny_difference(self):
        # sqrt(2) + sqrt(3) - pi-ish rational: close to zero but not zero
        close = sqrt_int(2, 24) + sqrt_int(3, 24) - Fraction(31463, 10000)
        assert real_sign(close) == -1
