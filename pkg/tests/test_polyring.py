import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pydickson.polyring import (
    PolyFp,
    first_sums_from_h,
    h_closed,
    h_closed_even,
    h_closed_odd,
    h_rational,
    poly_exact_div,
)
from pydickson.power_sums import sum_d_closed
from pydickson.util.exceptions import (
    BoundExceeded,
    ContextMismatch,
    DivisionByZero,
    InexactDivision,
    NonPrime,
    WrongParity,
)
from pydickson.util.helper import factor_prime_power


class TestPolyFp:
    def test_canonical_form(self):
        assert PolyFp(5, [1, 2, 0, 5]).coeffs == (1, 2)
        assert PolyFp(5, [0, 0]).is_zero()
        assert PolyFp(5).degree == -1

    def test_arithmetic(self):
        a = PolyFp(5, [1, 1])
        b = PolyFp(5, [4, 1])
        assert a * b == PolyFp(5, [4, 0, 1])
        assert a + b == PolyFp(5, [0, 2])
        assert a - a == PolyFp(5)

    def test_mixed_characteristic(self):
        with pytest.raises(ContextMismatch):
            PolyFp(2, [1]) + PolyFp(3, [1])

    def test_evaluate(self):
        assert PolyFp(7, [1, 0, 1]).evaluate(3) == 3


class TestExactDivision:
    def test_examples(self):
        assert poly_exact_div(PolyFp(5, [-1, 0, 1]), PolyFp(5, [-1, 1])) == PolyFp(
            5, [1, 1]
        )
        assert poly_exact_div(
            PolyFp(2, [0, 1, 0, 0, 1]), PolyFp(2, [1, 0, 0, 1])
        ) == PolyFp(2, [0, 1])

    def test_inexact(self):
        with pytest.raises(InexactDivision):
            poly_exact_div(PolyFp(5, [1, 0, 1]), PolyFp(5, [1, 1]))

    def test_zero_divisor(self):
        with pytest.raises(DivisionByZero):
            poly_exact_div(PolyFp(5, [1]), PolyFp(5))

    @given(
        st.lists(st.integers(min_value=0, max_value=6), max_size=12),
        st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=8),
    )
    def test_round_trip(self, a, b):
        pa, pb = PolyFp(7, a), PolyFp(7, b)
        assume(not pb.is_zero())
        assert poly_exact_div(pa * pb, pb) == pa


class TestH:
    def test_q2(self):
        assert h_rational(2, 1) == PolyFp(2, [0, 1])
        assert h_closed_even(2, 1) == PolyFp(2, [0, 1])

    def test_q3(self):
        assert h_rational(3, 1) == PolyFp(3, [2, 2, 0, 2, 1])

    @pytest.mark.parametrize("q", [2, 4, 8, 16])
    def test_closed_even(self, q):
        p, e = factor_prime_power(q)
        h = h_rational(p, e)
        assert h_closed_even(p, e) == h
        assert h.degree == (q - 1) ** 2

    @pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27])
    def test_closed_odd(self, q):
        p, e = factor_prime_power(q)
        h = h_rational(p, e)
        assert h_closed_odd(p, e) == h
        assert h.degree == (q - 1) ** 2
        assert h.lead == 1

    def test_parity(self):
        with pytest.raises(WrongParity):
            h_closed_even(3, 1)
        with pytest.raises(WrongParity):
            h_closed_odd(2, 2)

    def test_bounds(self):
        with pytest.raises(NonPrime):
            h_rational(4, 1)
        with pytest.raises(BoundExceeded):
            h_rational(2, 10)

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_first_sums(self, q):
        p, e = factor_prime_power(q)
        sums = first_sums_from_h(h_closed(p, e), q)
        assert sorted(sums) == list(range(1, q * q))
        for n, value in sums.items():
            assert value == sum_d_closed(q, n)
