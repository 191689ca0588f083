"""
The two invariant pipelines for closed braids, and the identity suites
connecting them.

Quantum-trace route: each braid letter acts on the tensor product of the
current strand colors by the braided two-leg matrix at those spins (inverse
matrices for negative letters); colors travel with the strands, so the shape
bookkeeping is exact for mixed colorings.  The closure value is the trace
weighted by q^(2H) on every factor.  This value is a regular-isotopy
invariant: a kink changes it by exactly q^(+-2j(j+1)), which is checked by
`verify_framing` rather than normalized away.  An ambient-isotopy variant
that divides out each component's self-writhe is available behind the
`normalize` flag; the raw framed value is the default.

Bracket route (fundamental color only): a braid word is expanded in the
diagram monoid, closed, and evaluated at loop value -x^2 - x^(-2); composing
with x -> i v and the writhe phase (-i)^w yields the same value as the
quantum trace with every color 1/2.  An exponential-time smoothing-tree
oracle for the bracket lives in the test suite, deliberately independent of
the diagram-monoid implementation here.
"""

from __future__ import annotations

from typing import Optional

from . import rmatrix, tl
from .braid import (
    BraidWord,
    ColoredBraid,
    cable_component,
    component_color,
    components,
    delete_component,
    disjoint_union,
    recolor_component,
    writhe,
)
from .laurent import LaurentPoly, is_real, phase_mul, qint, subst_x_iv
from .report import Report
from .tensorop import (
    HALF,
    Operator,
    Shape,
    Spin,
    compose,
    embed,
    full_trace,
    identity,
)
from .uqsu2 import mu

Q = LaurentPoly.q_power
V = LaurentPoly.v_power

# Embedded braid letters, keyed by (twice spins at the crossing, sign,
# position, ambient twice-spin tuple).  Entries are written once and only
# read afterwards.
_letter_cache: dict[tuple, Operator] = {}


def clear_cache() -> None:
    _letter_cache.clear()


def _letter_operator(colors: list[Spin], i: int, positive: bool) -> Operator:
    """The embedded crossing at 0-based position i for the current colors."""
    a, b = colors[i], colors[i + 1]
    key = (a.twice_j, b.twice_j, positive, i, tuple(s.twice_j for s in colors))
    op = _letter_cache.get(key)
    if op is None:
        ambient = Shape(colors)
        two_leg = rmatrix.braided_r(a, b) if positive else rmatrix.braided_r_inv(b, a)
        op = embed(two_leg, (i, i + 1), ambient)
        _letter_cache[key] = op
    return op


def braid_operator(braid: ColoredBraid) -> Operator:
    """The represented braid, from the bottom-color shape to itself."""
    colors = list(braid.colors)
    op = identity(Shape(colors))
    for letter in braid.word.letters:
        i = abs(letter) - 1
        op = compose(_letter_operator(colors, i, letter > 0), op)
        colors[i], colors[i + 1] = colors[i + 1], colors[i]
    if tuple(colors) != braid.colors:  # pragma: no cover - ColoredBraid guarantees this
        raise AssertionError("colors failed to return to the bottom sequence")
    return op


def rt_invariant(braid: ColoredBraid, normalize: bool = False) -> LaurentPoly:
    """
    The weighted closure trace of the braid.  With normalize=True the value is
    multiplied by q^(-2j(j+1) * self-writhe) per component, trading the framed
    (regular-isotopy) value for an ambient-isotopy one.
    """
    op = braid_operator(braid)
    value = full_trace(op, [mu(j) for j in braid.colors])
    if normalize:
        breakdown = writhe(braid)
        exponent = 0
        for ci, comp in enumerate(components(braid)):
            tj = braid.colors[comp[0]].twice_j
            exponent -= tj * (tj + 2) * breakdown.per_component_self[ci]
        value = value * V(exponent)
    return value


# ---------------------------------------------------------------------------
# Bracket pipeline (all strands fundamental, input an uncolored word).
# ---------------------------------------------------------------------------


def kauffman_bracket(word: BraidWord) -> LaurentPoly:
    """
    The bracket of the braid closure, as a polynomial in x, normalized so a
    single closed strand is worth the loop value -x^2 - x^(-2) itself.
    """
    return tl.close_all(tl.word_element(word))


def cs_invariant_fundamental(word: BraidWord) -> LaurentPoly:
    """
    The invariant value of the closure with every component in the fundamental
    color: the bracket at x = i v times the writhe phase (-i)^w.  The result
    must come out real; a complex residue means the pipeline is broken.
    """
    value = phase_mul(subst_x_iv(kauffman_bracket(word)), word.exponent_sum())
    if not is_real(value):
        raise RuntimeError(f"closure value has a complex residue: {value}")
    return value


def all_half(word: BraidWord) -> ColoredBraid:
    """The word colored with spin 1/2 on every strand."""
    return ColoredBraid(word, tuple(HALF for _ in range(word.n_strands)))


# ---------------------------------------------------------------------------
# Identity suites.
# ---------------------------------------------------------------------------


def _conjugate(braid: ColoredBraid, g: int) -> ColoredBraid:
    """sigma_g . braid . sigma_g^-1, with the bottom colors swapped to match."""
    letters = (g,) + braid.word.letters + (-g,)
    colors = list(braid.colors)
    colors[g - 1], colors[g] = colors[g], colors[g - 1]
    return ColoredBraid(BraidWord(braid.n_strands, letters), tuple(colors))


def _stabilize_front(braid: ColoredBraid, positive: bool) -> ColoredBraid:
    """
    Add a kink at the left edge: a fresh strand at the leftmost bottom
    position, colored like the old leftmost strand, crossing it once.
    """
    if braid.n_strands == 0:
        raise ValueError("cannot stabilize an empty braid")
    shifted = tuple((abs(l) + 1) * (1 if l > 0 else -1) for l in braid.word.letters)
    letters = ((1,) if positive else (-1,)) + shifted
    colors = (braid.colors[0],) + braid.colors
    return ColoredBraid(BraidWord(braid.n_strands + 1, letters), colors)


def verify_framing(braid: ColoredBraid, strand: int = 0) -> Report:
    """
    Check that a single kink on the chosen strand's component scales the
    closure value by exactly q^(+-2j(j+1)).  The kink is inserted at the left
    edge; if the strand is not already leftmost, the braid is first conjugated
    (a closure-preserving move) to bring it there.
    """
    if not 0 <= strand < braid.n_strands:
        raise ValueError(f"no strand {strand} in a {braid.n_strands}-strand braid")
    report = Report(f"framing strand={strand}")
    work = braid
    # Walk the strand to the leftmost bottom position, one conjugation at a time.
    pos = strand
    while pos > 0:
        work = _conjugate(work, pos)
        pos -= 1
    base = rt_invariant(work)
    report.add("conjugation used to front the strand preserves the value", base - rt_invariant(braid))
    tj = braid.colors[strand].twice_j
    factor = V(tj * (tj + 2))  # q^(2j(j+1))
    plus = rt_invariant(_stabilize_front(work, positive=True))
    minus = rt_invariant(_stabilize_front(work, positive=False))
    report.add(f"positive kink scales by q^(2j(j+1)), 2j={tj}", plus - base * factor)
    report.add(f"negative kink scales by q^(-2j(j+1)), 2j={tj}", minus - base * factor.bar())
    return report


def verify_recursion(braid: ColoredBraid, comp_index: int) -> Report:
    """
    Check the color-lowering recursion on one component: the value at color j
    equals the value of the parallel 2-cable colored (1/2, j - 1/2) minus the
    value at color j - 1; plus the rule that a color-0 component can be
    deleted outright.
    """
    comps = components(braid)
    color = component_color(braid, comps[comp_index])
    tj = color.twice_j
    if tj < 1:
        raise ValueError("recursion needs a component of color at least 1/2")
    report = Report(f"recursion component={comp_index} color={color}")
    base = rt_invariant(braid)
    cabled = cable_component(braid, comp_index, (HALF, Spin(tj - 1)))
    lowered = recolor_component(braid, comp_index, Spin(tj - 2))
    report.add(
        f"value(j={color}) = value(cable(1/2,{Spin(tj - 1)})) - value(j={Spin(tj - 2)})",
        base - (rt_invariant(cabled) - rt_invariant(lowered)),
    )
    zeroed = recolor_component(braid, comp_index, Spin(0))
    report.add(
        "a color-0 component deletes cleanly",
        rt_invariant(zeroed) - rt_invariant(delete_component(zeroed, comp_index)),
    )
    return report


def verify_factorization(a: ColoredBraid, b: ColoredBraid) -> Report:
    """Closure value of a disjoint union is the product of the values."""
    report = Report("factorization")
    report.add(
        "value(a u b) = value(a) value(b)",
        rt_invariant(disjoint_union(a, b)) - rt_invariant(a) * rt_invariant(b),
    )
    return report


def verify_skein(braid: ColoredBraid, position: Optional[int] = None) -> Report:
    """
    The two-term crossing exchange for fundamental colors:
    q^(1/2) value(w sigma_i) - q^(-1/2) value(w sigma_i^-1) = (q - q^-1) value(w).
    """
    if any(c != HALF for c in braid.colors):
        raise ValueError("the two-term exchange needs every strand in color 1/2")
    report = Report("skein")
    base = rt_invariant(braid)
    coeff = Q(1) - Q(-1)
    positions = [position] if position is not None else list(range(1, braid.n_strands))
    for i in positions:
        word_plus = BraidWord(braid.n_strands, braid.word.letters + (i,))
        word_minus = BraidWord(braid.n_strands, braid.word.letters + (-i,))
        lhs = V(1) * rt_invariant(all_half(word_plus)) - V(-1) * rt_invariant(all_half(word_minus))
        report.add(f"exchange at position {i}", lhs - coeff * base)
    return report


def verify_markov(braid: ColoredBraid, generator: Optional[int] = None) -> Report:
    """Conjugating the word by any generator leaves the closure value fixed."""
    report = Report("markov")
    base = rt_invariant(braid)
    gens = [generator] if generator is not None else list(range(1, braid.n_strands))
    for g in gens:
        report.add(f"conjugation by generator {g}", rt_invariant(_conjugate(braid, g)) - base)
    return report


def unknot(j: Spin) -> ColoredBraid:
    """The zero-writhe unknot: the closed identity 1-braid."""
    return ColoredBraid(BraidWord(1, ()), (j,))


def hopf_link(j1: Spin, j2: Spin) -> ColoredBraid:
    """The closure of the doubled crossing on two strands."""
    return ColoredBraid(BraidWord(2, (1, 1)), (j1, j2))


def fusion_identity_residual(twice_a: int, twice_b: int) -> LaurentPoly:
    """
    Residual of the loop-dimension fusion rule: [a+1][b+1] equals the sum of
    [c+1] over the decomposition range of twice-spins c.
    """
    lhs = qint(twice_a + 1) * qint(twice_b + 1)
    rhs = LaurentPoly.zero()
    for tc in range(abs(twice_a - twice_b), twice_a + twice_b + 1, 2):
        rhs = rhs + qint(tc + 1)
    return lhs - rhs
