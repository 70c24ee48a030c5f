import pytest

from pydickson.power_sums import (
    T_cases_even,
    T_closed_even,
    T_closed_odd,
    T_direct_even,
    cube_sum_closed,
    odd_parts,
    odd_parts_direct,
    oracle_sums,
    power_sum_oracle,
    sum_closed,
    sum_d_closed,
    term_I,
    term_I_cases,
    term_II,
    term_II_cases,
    term_III,
    term_III_cases,
    triple_index,
    uv_decompose,
    weighted_sum_oracle,
)
from pydickson.rdp import build_tower
from pydickson.util.exceptions import OutOfWindow, RangeError, WrongParity

EVEN_Q = [2, 4, 8, 16]
ODD_Q = [3, 5, 7, 9, 11, 13, 25, 27]


def as_code(q, residue):
    return build_tower(q).ctx_q.from_int(residue)


class TestIndices:
    def test_uv_decompose(self):
        pair = uv_decompose(11, 4)
        assert (pair.u, pair.v) == (3, 2)
        assert pair.index(4) == 11

    def test_triple_index(self):
        tp = triple_index(8, 3)
        assert (tp.u_p, tp.v_p) == (2, 2)
        tp = triple_index(5, 4)
        assert tp.index(4) == 15
        assert triple_index(1, 5).index(5) == 3

    @pytest.mark.parametrize("n", [0, 16])
    def test_out_of_range(self, n):
        with pytest.raises(RangeError):
            uv_decompose(n, 4)
        with pytest.raises(RangeError):
            triple_index(n, 4)


class TestOracles:
    def test_single_pass_matches_separate(self):
        for n in range(1, 24):
            sums = oracle_sums(5, n)
            assert sums.first == power_sum_oracle(5, n, 1)
            assert sums.second == power_sum_oracle(5, n, 2)
            assert sums.cube == power_sum_oracle(5, n, 3)
            assert sums.weighted == weighted_sum_oracle(5, n)

    @pytest.mark.parametrize("q", [4, 8, 9])
    def test_sums_lie_in_prime_field(self, q):
        p = build_tower(q).p
        for n in range(1, q * q):
            sums = oracle_sums(q, n)
            assert max(sums.first, sums.second, sums.cube, sums.weighted) < p

    def test_errors(self):
        with pytest.raises(RangeError):
            power_sum_oracle(5, 3, 0)
        with pytest.raises(RangeError):
            oracle_sums(5, 25)


class TestFirstSum:
    def test_examples(self):
        assert sum_d_closed(4, 3) == 0
        assert sum_d_closed(4, 11) == 1
        assert sum_d_closed(5, 6) == 0
        assert sum_d_closed(5, 24) == 4

    @pytest.mark.parametrize("q", EVEN_Q + ODD_Q)
    def test_matches_oracle(self, q):
        for n in range(1, q * q):
            assert as_code(q, sum_d_closed(q, n)) == power_sum_oracle(q, n, 1)


class TestWeightedSumEven:
    def test_examples(self):
        assert T_closed_even(4, 1) == 0
        assert T_closed_even(4, 3) == 1
        assert T_closed_even(8, 2) == 0
        assert T_closed_even(2, 1) == 1
        assert T_closed_even(2, 3) == 0

    def test_bracket_terms_at_u_plus_v_past_q_minus_1(self):
        assert T_closed_even(4, 11) == 0
        assert weighted_sum_oracle(4, 11) == 0
        assert T_closed_even(8, 33) == 0
        assert weighted_sum_oracle(8, 33) == 0
        assert T_cases_even(8, 33) == T_closed_even(8, 33)

    @pytest.mark.parametrize("q", EVEN_Q + [32])
    def test_matches_oracle(self, q):
        for n in range(1, q * q):
            assert as_code(q, T_closed_even(q, n)) == weighted_sum_oracle(q, n)

    @pytest.mark.parametrize("q", [4, 8, 16])
    def test_cases(self, q):
        for v in range(q):
            for u in range(q):
                if 0 < u + v < 2 * (q - 1):
                    n = u + v * q
                    assert T_cases_even(q, n) == T_closed_even(q, n)

    def test_cases_window(self):
        with pytest.raises(OutOfWindow):
            T_cases_even(4, 15)

    @pytest.mark.parametrize("q", [2, 4, 8, 16])
    def test_direct(self, q):
        direct = T_direct_even(q)
        assert direct == {n: T_closed_even(q, n) for n in range(1, q * q)}

    def test_parity(self):
        with pytest.raises(WrongParity):
            T_closed_even(5, 1)
        with pytest.raises(WrongParity):
            T_direct_even(9)


class TestWeightedSumOdd:
    def test_term_examples(self):
        assert term_I_cases(5, 2, 4) == 1
        assert term_I_cases(5, 0, 4) == 0
        assert term_II_cases(5, 2, 0) == 0
        assert term_II_cases(5, 3, 3) == 1
        assert term_III_cases(5, 2, 0) == 0
        assert term_III_cases(5, 1, 1) == 2

    def test_q3(self):
        parts = odd_parts(3, 4)
        assert (parts.I, parts.II, parts.III) == (0, 1, 2)
        assert T_closed_odd(3, 4) == 0

    def test_examples(self):
        assert T_closed_odd(5, 1) == 0
        assert T_closed_odd(5, 2) == 0
        assert T_closed_odd(5, 6) == 1

    @pytest.mark.parametrize("q", ODD_Q)
    def test_matches_oracle(self, q):
        for n in range(1, q * q - 1):
            assert as_code(q, T_closed_odd(q, n)) == weighted_sum_oracle(q, n)

    @pytest.mark.parametrize("q", [5, 7, 9, 11, 25])
    def test_cases(self, q):
        for v in range(q):
            for u in range(q):
                if 0 < u + v < 2 * (q - 1):
                    assert term_I_cases(q, u, v) == term_I(q, u, v)
                    assert term_II_cases(q, u, v) == term_II(q, u, v)
                    assert term_III_cases(q, u, v) == term_III(q, u, v)

    def test_cases_for_q3(self):
        for v in range(3):
            for u in range(3):
                if 0 < u + v < 4:
                    assert term_I_cases(3, u, v) == term_I(3, u, v)
                    assert term_II_cases(3, u, v) == term_II(3, u, v)
        with pytest.raises(RangeError):
            term_III_cases(3, 1, 1)

    @pytest.mark.parametrize("q", [3, 5, 7, 9])
    def test_direct(self, q):
        direct = odd_parts_direct(q)
        for n in range(1, q * q - 1):
            assert direct[n] == odd_parts(q, n)

    def test_endpoint_is_oracle_only(self):
        with pytest.raises(RangeError):
            T_closed_odd(5, 24)
        assert weighted_sum_oracle(5, 24) == 3

    def test_errors(self):
        with pytest.raises(WrongParity):
            term_I(4, 1, 1)
        with pytest.raises(OutOfWindow):
            term_II_cases(5, 0, 0)
        with pytest.raises(OutOfWindow):
            term_III_cases(5, 4, 4)


class TestCubeSum:
    def test_examples(self):
        assert cube_sum_closed(5, 2) == 0
        assert cube_sum_closed(4, 3) == 1
        assert cube_sum_closed(5, 1) == 0
        assert [cube_sum_closed(2, n) for n in (1, 2, 3)] == [0, 0, 1]
        assert cube_sum_closed(8, 33) == 0

    @pytest.mark.parametrize("q", EVEN_Q + [32])
    def test_matches_oracle_even(self, q):
        for n in range(1, q * q):
            assert as_code(q, cube_sum_closed(q, n)) == power_sum_oracle(q, n, 3)

    @pytest.mark.parametrize("q", ODD_Q)
    def test_matches_oracle_odd(self, q):
        for n in range(1, q * q - 1):
            assert as_code(q, cube_sum_closed(q, n)) == power_sum_oracle(q, n, 3)

    def test_endpoint(self):
        with pytest.raises(RangeError):
            cube_sum_closed(7, 48)

    def test_sum_closed_dispatch(self):
        assert sum_closed(4, 11, 1) == sum_d_closed(4, 11)
        assert sum_closed(4, 11, 3) == cube_sum_closed(4, 11)
        with pytest.raises(RangeError):
            sum_closed(4, 11, 2)
