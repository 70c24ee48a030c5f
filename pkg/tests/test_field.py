import pytest
from hypothesis import given
from hypothesis import strategies as st

from pydickson.field import (
    enumerate_elements,
    field_add,
    field_inv,
    field_mul,
    field_pow,
    lift_scalar,
    lift_to_quadratic,
    make_field_ctx,
    make_quadratic_extension,
    smallest_irreducible,
)
from pydickson.models import FieldElement
from pydickson.util.exceptions import (
    BoundExceeded,
    ContextMismatch,
    DivisionByZero,
    NegativeInput,
    NonPrime,
)
from pydickson.util.helper import factor_prime_power


def ctx_for(q):
    return make_field_ctx(*factor_prime_power(q))


class TestModulus:
    def test_smallest_irreducible(self):
        assert smallest_irreducible(2, 1) == [0, 1]
        assert smallest_irreducible(2, 2) == [1, 1, 1]
        assert smallest_irreducible(3, 2) == [1, 0, 1]
        assert smallest_irreducible(2, 3) == [1, 0, 1, 1]

    def test_construction_errors(self):
        with pytest.raises(NonPrime):
            make_field_ctx(6, 1)
        with pytest.raises(BoundExceeded):
            make_field_ctx(2, 10)
        with pytest.raises(BoundExceeded):
            make_field_ctx(3, 3, bound=26)
        with pytest.raises(NegativeInput):
            make_field_ctx(3, 0)


class TestArithmetic:
    def test_f4(self):
        ctx = ctx_for(4)
        assert ctx.mul(2, 2) == 3
        assert ctx.inv(2) == 3
        assert ctx.add(2, 3) == 1

    def test_f5(self):
        ctx = ctx_for(5)
        assert ctx.inv(2) == 3
        assert ctx.pow(2, 7) == 3
        assert ctx.neg(1) == 4

    def test_zero_power(self):
        ctx = ctx_for(9)
        assert ctx.pow(0, 0) == 1
        assert ctx.pow(0, 5) == 0

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
    def test_axioms(self, q):
        ctx = ctx_for(q)
        for x in range(q):
            assert ctx.add(x, 0) == x
            assert ctx.mul(x, 1) == x
            assert ctx.add(x, ctx.neg(x)) == 0
            for y in range(q):
                assert ctx.add(x, y) == ctx.add(y, x)
                assert ctx.mul(x, y) == ctx.mul(y, x)
                for z in range(0, q, max(1, q // 4)):
                    assert ctx.mul(x, ctx.add(y, z)) == ctx.add(
                        ctx.mul(x, y), ctx.mul(x, z)
                    )
                    assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49, 64, 81])
    def test_frobenius_fixes_everything(self, q):
        ctx = ctx_for(q)
        assert all(ctx.pow(x, q) == x for x in range(q))

    @pytest.mark.parametrize("q", [3, 4, 8, 9, 25])
    def test_inverse(self, q):
        ctx = ctx_for(q)
        for x in range(1, q):
            assert ctx.mul(x, ctx.inv(x)) == 1
            assert ctx.inv(ctx.inv(x)) == x

    def test_inverse_of_zero(self):
        with pytest.raises(DivisionByZero):
            ctx_for(7).inv(0)

    def test_negative_exponent(self):
        with pytest.raises(NegativeInput):
            ctx_for(7).pow(3, -1)

    @given(st.integers(min_value=1, max_value=26), st.integers(min_value=0, max_value=10_000))
    def test_pow_matches_repeated_mul(self, x, n):
        ctx = ctx_for(27)
        expected = 1
        for _ in range(n % 26):
            expected = ctx.mul(expected, x)
        assert ctx.pow(x, n) == expected


class TestElements:
    def test_enumerate(self):
        ctx = ctx_for(9)
        elements = enumerate_elements(ctx)
        assert [a.code for a in elements] == list(range(9))
        assert elements[5].coeffs == (2, 1)

    def test_wrappers(self):
        ctx = ctx_for(4)
        a, b = ctx.element(2), ctx.element(3)
        assert field_add(ctx, a, b).code == 1
        assert field_mul(ctx, a, a).code == 3
        assert field_inv(ctx, a).code == 3
        assert field_pow(ctx, b, 3).code == 1

    def test_foreign_element(self):
        ctx = ctx_for(5)
        with pytest.raises(ContextMismatch):
            ctx.code(ctx_for(4).element(1))
        with pytest.raises(ContextMismatch):
            ctx.element(5)

    def test_element_validation(self):
        with pytest.raises(ValueError):
            FieldElement(field="GF(3^1)", radix=3, coeffs=(3,))

    def test_lift_scalar(self):
        ctx = ctx_for(9)
        assert lift_scalar(ctx, 5).code == 2
        assert lift_scalar(ctx, -1).code == 2


class TestQuadraticExtension:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 27])
    def test_order_and_embedding(self, q):
        ctx = ctx_for(q)
        ext = make_quadratic_extension(ctx)
        assert ext.order == q * q
        assert ext.degree == 2
        for x in range(q):
            for y in range(q):
                assert ext.add(x, y) == ctx.add(x, y)
                assert ext.mul(x, y) == ctx.mul(x, y)

    @pytest.mark.parametrize("q", [3, 4, 5, 9])
    def test_lift_is_homomorphism(self, q):
        ctx = ctx_for(q)
        ext = make_quadratic_extension(ctx)
        for a in enumerate_elements(ctx):
            for b in enumerate_elements(ctx):
                lifted = lift_to_quadratic(ctx, ext, field_mul(ctx, a, b))
                assert lifted == field_mul(
                    ext,
                    lift_to_quadratic(ctx, ext, a),
                    lift_to_quadratic(ctx, ext, b),
                )

    def test_lift_needs_matching_extension(self):
        ctx5 = ctx_for(5)
        ext7 = make_quadratic_extension(ctx_for(7))
        with pytest.raises(ContextMismatch):
            lift_to_quadratic(ctx5, ext7, ctx5.element(1))

    @pytest.mark.parametrize("q", [4, 5, 9])
    def test_multiplicative_group(self, q):
        ext = make_quadratic_extension(ctx_for(q))
        assert all(ext.pow(x, q * q - 1) == 1 for x in range(1, q * q))
        assert all(ext.mul(x, ext.inv(x)) == 1 for x in range(1, q * q))
