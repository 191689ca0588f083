from fractions import Fraction

import pytest

from qlink.laurent import LaurentPoly, qint
from qlink.tensorop import (
    HALF,
    Shape,
    ShapeError,
    Spin,
    as_scalar,
    compose,
    diagonal,
    embed,
    identity,
    kron,
)
from qlink.uqsu2 import (
    E_SYM,
    F_SYM,
    GeneratorSymbol,
    casimir,
    casimir_rep,
    chi,
    coproduct_rep,
    delta_rep,
    iterated_casimir,
    mu,
    rep,
    rep_e,
    rep_f,
    rep_qh,
    qh_symbol,
)

V = LaurentPoly.v_power
Q = LaurentPoly.q_power
ONE = LaurentPoly.one()


class TestGeneratorMatrices:
    def test_raising_on_fundamental(self):
        assert rep_e(HALF).entries == {(0, 1): ONE}
        assert rep_f(HALF).entries == {(1, 0): ONE}

    def test_trivial_space(self):
        assert rep_e(Spin(0)).is_zero()
        assert rep_f(Spin(0)).is_zero()

    def test_raising_on_spin_one(self):
        op = rep_e(Spin(2))
        assert op.entries == {(0, 1): qint(1), (1, 2): qint(2)}

    def test_weight_matrix(self):
        assert rep_qh(HALF, 2) == diagonal(Shape((HALF,)), [Q(1), Q(-1)])
        assert rep_qh(Spin(4), 0) == identity(Shape((Spin(4),)))
        assert rep_qh(Spin(2), Fraction(1, 2)).entries[(0, 0)] == V(1)

    def test_half_power_on_half_integer_spin_rejected(self):
        with pytest.raises(ValueError):
            rep_qh(HALF, Fraction(1, 2))


class TestDefiningRelations:
    @pytest.mark.parametrize("tj", range(0, 7))
    def test_exchange_relations(self, tj):
        j = Spin(tj)
        e, f, qh = rep_e(j), rep_f(j), rep_qh(j, 1)
        assert compose(qh, e) == compose(e, qh) * Q(1)
        assert compose(qh, f) == compose(f, qh) * Q(-1)
        commutator = compose(e, f) - compose(f, e)
        weight_bracket = diagonal(Shape((j,)), [qint(tm) for tm in j.twice_weights()])
        assert commutator == weight_bracket

    @pytest.mark.parametrize("tj", range(0, 7))
    def test_casimir_scalar_and_central(self, tj):
        j = Spin(tj)
        c = casimir(j)
        assert as_scalar(c) == chi(j)
        for op in (rep_e(j), rep_f(j), rep_qh(j, 1)):
            assert compose(c, op) == compose(op, c)

    def test_casimir_values(self):
        assert as_scalar(casimir(Spin(0))) == Q(1) + Q(-1)
        assert as_scalar(casimir(HALF)) == Q(2) + Q(-2)
        assert as_scalar(casimir(Spin(2))) == Q(3) + Q(-3)


class TestCoproduct:
    def test_weight_coproduct_is_grouplike(self):
        op = coproduct_rep(qh_symbol(1), HALF, HALF)
        assert op == diagonal(Shape((HALF, HALF)), [Q(1), Q(0), Q(0), Q(-1)])

    def test_trivial_leg_factors_through(self):
        j = Spin(3)
        op = coproduct_rep(E_SYM, Spin(0), j)
        assert op == kron(identity(Shape((Spin(0),))), rep_e(j))

    def test_raising_coproduct_entries_on_two_halves(self):
        op = coproduct_rep(E_SYM, HALF, HALF)
        # The doubly-lowered vector maps up with weights q^(1/2), q^(-1/2).
        assert op.entries == {(1, 3): V(1), (2, 3): V(-1), (0, 1): V(1), (0, 2): V(-1)}

    @pytest.mark.parametrize("pair", [(1, 2), (2, 2), (1, 3)])
    def test_coproduct_is_an_algebra_map(self, pair):
        shape = Shape.of(*pair)
        e = delta_rep(E_SYM, shape)
        f = delta_rep(F_SYM, shape)
        qh = delta_rep(qh_symbol(1), shape)
        assert compose(qh, e) == compose(e, qh) * Q(1)
        assert compose(qh, f) == compose(f, qh) * Q(-1)
        bracket = compose(e, f) - compose(f, e)
        weights = []
        for idx in range(shape.dim):
            total = sum(
                shape[t].twice_weights()[i] for t, i in enumerate(shape.unravel(idx))
            )
            weights.append(qint(total))
        assert bracket == diagonal(shape, weights)

    @pytest.mark.parametrize("sym", [E_SYM, F_SYM, qh_symbol(1)])
    @pytest.mark.parametrize("triple", [(1, 1, 1), (1, 2, 1), (2, 1, 2)])
    def test_coassociativity(self, sym, triple):
        shape = Shape.of(*triple)
        left_fold = delta_rep(sym, shape)
        head, tail = shape[0], Shape(shape.factors[1:])
        if sym.kind == "QH":
            right_fold = kron(rep(sym, head), delta_rep(sym, tail))
        else:
            partner = rep_e(head) if sym.kind == "E" else rep_f(head)
            right_fold = kron(rep(sym, head), delta_rep(qh_symbol(-1), tail)) + kron(
                rep_qh(head, 1), delta_rep(sym, tail)
            )
        assert left_fold == right_fold


class TestIteratedCasimir:
    def test_single_leg_is_embedded_casimir(self):
        shape = Shape.of(1, 2, 3)
        assert iterated_casimir(shape, (0,)) == embed(casimir(HALF), (0,), shape)
        assert iterated_casimir(shape, (1,)) == embed(casimir(Spin(2)), (1,), shape)

    def test_two_leg_annihilating_product(self):
        for third in (0, 1, 2):
            shape = Shape.of(1, 1, third)
            q12 = iterated_casimir(shape, (0, 1))
            prod = compose(q12 - identity(shape) * chi(Spin(0)), q12 - identity(shape) * chi(Spin(2)))
            assert prod.is_zero()

    def test_three_leg_annihilating_product(self):
        shape = Shape.of(1, 1, 1)
        q123 = iterated_casimir(shape, (0, 1, 2))
        prod = compose(
            q123 - identity(shape) * chi(Spin(1)), q123 - identity(shape) * chi(Spin(3))
        )
        assert prod.is_zero()

    def test_casimir_rep_matches_single_leg(self):
        assert casimir_rep(Shape.of(3)) == casimir(Spin(3))

    def test_non_contiguous_span_rejected(self):
        with pytest.raises(ShapeError):
            iterated_casimir(Shape.of(1, 1, 1), (0, 2))

    def test_central_on_pair(self):
        shape = Shape.of(1, 2)
        c = casimir_rep(shape)
        for sym in (E_SYM, F_SYM, qh_symbol(1)):
            img = delta_rep(sym, shape)
            assert compose(c, img) == compose(img, c)


class TestSymbols:
    def test_symbol_validation(self):
        with pytest.raises(ValueError):
            GeneratorSymbol("X")
        with pytest.raises(ValueError):
            qh_symbol(Fraction(1, 3))

    def test_mu_is_square_of_weight(self):
        j = Spin(3)
        assert mu(j) == compose(rep_qh(j, 1), rep_qh(j, 1))
