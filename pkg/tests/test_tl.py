import pytest

from qlink.braid import BraidWord
from qlink.laurent import LaurentPoly
from qlink.tl import (
    DELTA_X,
    PlanarMatching,
    TLElement,
    braid_letter,
    close_all,
    close_first,
    compose_matchings,
    tl_mul,
    word_element,
)

V = LaurentPoly.v_power


class TestPlanarMatching:
    def test_identity_and_hook(self):
        assert PlanarMatching.identity(2).pairing == (2, 3, 0, 1)
        hook = PlanarMatching.hook(3, 1)
        assert hook.pairing == (1, 0, 5, 4, 3, 2)

    def test_crossing_matchings_rejected(self):
        with pytest.raises(ValueError):
            PlanarMatching(2, (3, 2, 1, 0))  # bottom0-top1 crosses bottom1-top0

    def test_non_involution_rejected(self):
        with pytest.raises(ValueError):
            PlanarMatching(1, (0, 1))

    def test_nested_cups_allowed(self):
        PlanarMatching(2, (1, 0, 3, 2))  # cup-cup / cap-cap


class TestComposition:
    def test_hook_squared_makes_one_loop(self):
        hook = PlanarMatching.hook(2, 1)
        diag, loops = compose_matchings(hook, hook)
        assert diag == hook
        assert loops == 1

    def test_hook_relations(self):
        e1, e2 = TLElement.hook(3, 1), TLElement.hook(3, 2)
        assert tl_mul(e1, e1) == e1 * DELTA_X
        assert tl_mul(tl_mul(e1, e2), e1) == e1
        assert tl_mul(tl_mul(e2, e1), e2) == e2

    def test_identity_element_is_neutral(self):
        e1 = TLElement.hook(4, 1)
        ident = TLElement.identity(4)
        assert tl_mul(ident, e1) == e1
        assert tl_mul(e1, ident) == e1

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            tl_mul(TLElement.identity(2), TLElement.identity(3))


class TestBraidLetters:
    def test_letter_expansion(self):
        elem = braid_letter(2, 1)
        assert elem.terms[PlanarMatching.identity(2)] == V(1)
        assert elem.terms[PlanarMatching.hook(2, 1)] == V(-1)

    def test_inverse_letters_cancel(self):
        elem = tl_mul(braid_letter(2, -1), braid_letter(2, 1))
        assert elem == TLElement.identity(2)

    def test_braid_relation_in_the_monoid(self):
        lhs = word_element(BraidWord(3, (1, 2, 1)))
        rhs = word_element(BraidWord(3, (2, 1, 2)))
        assert lhs == rhs


class TestClosure:
    def test_closing_identity_strands(self):
        assert close_all(TLElement.identity(1)) == DELTA_X
        assert close_all(TLElement.identity(3)) == DELTA_X**3

    def test_closing_hook(self):
        assert close_all(TLElement.hook(2, 1)) == DELTA_X

    def test_close_first_partial(self):
        # Closing one strand of the two-strand identity leaves one strand and a loop.
        partial = close_first(TLElement.identity(2))
        assert partial == TLElement.identity(1) * DELTA_X

    def test_positive_kink_value(self):
        closed = close_all(word_element(BraidWord(2, (1,))))
        assert closed == LaurentPoly.monomial(3, -1) * DELTA_X

    def test_empty_word_bracket(self):
        assert close_all(word_element(BraidWord(1, ()))) == DELTA_X
