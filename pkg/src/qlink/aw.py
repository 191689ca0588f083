"""
Intermediate Casimir operators on threefold tensor products, built by two
independent routes, and exact verification of the Askey-Wilson relations.

Coproduct route (`q_elem`): the one-, two-, and three-leg Casimirs come from
iterated coproducts; the recoupled elements conjugate the (1,2)-block Casimir
by the braiding of the last two legs,

    Q_13  = Rhat_23^-1 . Q_12' . Rhat_23,
    Q~_13 = Rhat_23    . Q_12' . Rhat_23^-1,

where Q_12' is built on the *swapped* shape (j1, j3, j2) - the braiding
genuinely permutes factors, and constructing the middle operator on the
permuted shape is exactly what the shape-typed operators enforce.

Partial-trace route (`q_elem_trace`): every element with a trace realization
is produced as a weighted first-leg trace of a product of two-leg mixed
matrices on the auxiliary shape (1/2, j1, j2, j3), with the traced spin-1/2
leg always at position 0.  The index-3 element has no such realization here
and falls back to the coproduct route; `verify_routes` compares the two
constructions on every index that has both.

The central elements in the quartic relation are instantiated as their full
matrices, not scalar eigenvalues: the three-leg Casimir is generically not
scalar, and the relations hold at operator level.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .braid import BraidWord
from .laurent import LaurentPoly, subst_x_iv
from .report import Report
from .rmatrix import (
    braided_r,
    braided_r_inv,
    l_minus,
    l_minus_inv,
    l_plus,
    l_plus_inv,
    m_matrix,
    p_matrix,
    r_matrix,
)
from .tensorop import (
    HALF,
    Operator,
    Shape,
    Spin,
    compose,
    embed,
    identity,
    kron,
    partial_trace_first,
)
from .tl import TLElement, close_first, tl_mul, word_element
from .uqsu2 import E_SYM, F_SYM, GeneratorSymbol, chi, delta_rep, iterated_casimir

Q = LaurentPoly.q_power
V = LaurentPoly.v_power

AW_INDICES = ("1", "2", "3", "12", "23", "13", "123", "13~")

_q_cache: dict[tuple, Operator] = {}


def clear_cache() -> None:
    _q_cache.clear()


def _norm_index(index) -> str:
    name = str(index)
    if name == "13t":
        name = "13~"
    if name not in AW_INDICES:
        raise ValueError(f"unknown intermediate-Casimir index {index!r}")
    return name


def q_elem(index, shape: Shape) -> Operator:
    """The intermediate Casimir for one index block on a three-leg shape."""
    name = _norm_index(index)
    if len(shape) != 3:
        raise ValueError(f"intermediate Casimirs need a 3-leg shape, got {shape}")
    key = ("coprod", name, shape)
    op = _q_cache.get(key)
    if op is not None:
        return op
    j1, j2, j3 = shape.factors
    if name in ("1", "2", "3"):
        op = iterated_casimir(shape, (int(name) - 1,))
    elif name == "12":
        op = iterated_casimir(shape, (0, 1))
    elif name == "23":
        op = iterated_casimir(shape, (1, 2))
    elif name == "123":
        op = iterated_casimir(shape, (0, 1, 2))
    else:
        swapped = Shape((j1, j3, j2))
        middle = iterated_casimir(swapped, (0, 1))
        if name == "13":
            up = embed(braided_r(j2, j3), (1, 2), shape)        # (j1,j2,j3) -> (j1,j3,j2)
            down = embed(braided_r_inv(j2, j3), (1, 2), swapped)  # back again
            op = compose(down, compose(middle, up))
        else:  # "13~"
            up = embed(braided_r_inv(j3, j2), (1, 2), shape)    # (j1,j2,j3) -> (j1,j3,j2)
            down = embed(braided_r(j3, j2), (1, 2), swapped)
            op = compose(down, compose(middle, up))
    _q_cache[key] = op
    return op


# ---------------------------------------------------------------------------
# Partial-trace route.
# ---------------------------------------------------------------------------

# Product inside the traced expression, left to right.  Entries are
# (sign, leg, inverted): sign "+" for the flipped matrix, "-" for the plain
# one; leg is the target factor 1..3 of the triple.
_TRACE_FORMULAS: dict[str, tuple[tuple[str, int, bool], ...]] = {
    "1": (("+", 1, False), ("-", 1, False)),
    "12": (("+", 1, False), ("+", 2, False), ("-", 2, False), ("-", 1, False)),
    "123": (
        ("+", 1, False),
        ("+", 2, False),
        ("+", 3, False),
        ("-", 3, False),
        ("-", 2, False),
        ("-", 1, False),
    ),
    "2": (("+", 1, False), ("+", 2, False), ("-", 2, False), ("+", 1, True)),
    "23": (
        ("+", 1, False),
        ("+", 2, False),
        ("+", 3, False),
        ("-", 3, False),
        ("-", 2, False),
        ("+", 1, True),
    ),
    "13": (
        ("+", 1, False),
        ("+", 2, False),
        ("+", 3, False),
        ("-", 3, False),
        ("+", 2, True),
        ("-", 1, False),
    ),
    "13~": (
        ("+", 1, False),
        ("-", 2, True),
        ("+", 3, False),
        ("-", 3, False),
        ("-", 2, False),
        ("-", 1, False),
    ),
}

TRACE_ROUTE_INDICES = tuple(_TRACE_FORMULAS)


def _mixed(sign: str, j: Spin, inverted: bool) -> Operator:
    if sign == "+":
        return l_plus_inv(j) if inverted else l_plus(j)
    return l_minus_inv(j) if inverted else l_minus(j)


def q_elem_trace(index, shape: Shape) -> Operator:
    """
    The same element produced by tracing the spin-1/2 auxiliary leg out of a
    product of mixed matrices; falls back to `q_elem` for index "3", which has
    no trace realization here.
    """
    name = _norm_index(index)
    if len(shape) != 3:
        raise ValueError(f"intermediate Casimirs need a 3-leg shape, got {shape}")
    if name == "3":
        return q_elem(name, shape)
    key = ("trace", name, shape)
    op = _q_cache.get(key)
    if op is not None:
        return op
    aux = Shape((HALF,) + shape.factors)
    prod = identity(aux)
    for sign, leg, inverted in _TRACE_FORMULAS[name]:
        factor = embed(_mixed(sign, shape[leg - 1], inverted), (0, leg), aux)
        prod = compose(prod, factor)
    op = partial_trace_first(prod, m_matrix())
    _q_cache[key] = op
    return op


def casimir_trace(j: Spin) -> Operator:
    """One-leg version: the weighted trace of L+ L- reproduces the Casimir."""
    return partial_trace_first(compose(l_plus(j), l_minus(j)), m_matrix())


def delta_casimir_trace(j1: Spin, j2: Spin) -> Operator:
    """Two-leg version: the weighted trace reproduces the coproduct Casimir."""
    aux = Shape((HALF, j1, j2))
    prod = compose(
        embed(l_plus(j1), (0, 1), aux),
        compose(
            embed(l_plus(j2), (0, 2), aux),
            compose(embed(l_minus(j2), (0, 2), aux), embed(l_minus(j1), (0, 1), aux)),
        ),
    )
    return partial_trace_first(prod, m_matrix())


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


def verify_routes(shape: Shape) -> Report:
    """Coproduct and trace constructions agree on every index that has both."""
    report = Report(f"routes {shape}")
    for name in TRACE_ROUTE_INDICES:
        report.add(f"Q_{name} trace route", q_elem_trace(name, shape) - q_elem(name, shape))
    return report


def aw_residuals(q: dict[str, Operator], dim_identity: Operator) -> dict[str, Operator]:
    """
    Residual operators of the four defining relations for a given assignment
    of generators (exposed so corrupted assignments can serve as negative
    controls).  The q-commutator is [X, Y]_q = q X Y - q^-1 Y X.
    """
    qq, qi = Q(1), Q(-1)
    q2, qi2 = Q(2), Q(-2)
    one = dim_identity

    def qcomm(x: Operator, y: Operator) -> Operator:
        return compose(x, y) * qq - compose(y, x) * qi

    s1 = compose(q["1"], q["3"]) + compose(q["2"], q["123"])
    s2 = compose(q["1"], q["2"]) + compose(q["3"], q["123"])
    s3 = compose(q["2"], q["3"]) + compose(q["1"], q["123"])
    coeff = qq - qi
    res = {
        "AW1": qcomm(q["12"], q["23"]) + q["13"] * (q2 - qi2) - s1 * coeff,
        "AW2": qcomm(q["23"], q["13"]) + q["12"] * (q2 - qi2) - s2 * coeff,
        "AW3": qcomm(q["13"], q["12"]) + q["23"] * (q2 - qi2) - s3 * coeff,
    }
    lhs4 = (
        compose(compose(q["12"], q["23"]), q["13"]) * qq
        + compose(q["12"], q["12"]) * q2
        + compose(q["23"], q["23"]) * qi2
        + compose(q["13"], q["13"]) * q2
        - compose(q["12"], s2) * qq
        - compose(q["23"], s3) * qi
        - compose(q["13"], s1) * qq
    )
    rhs4 = (
        one * ((qq + qi) * (qq + qi))
        - compose(q["123"], q["123"])
        - compose(q["1"], q["1"])
        - compose(q["2"], q["2"])
        - compose(q["3"], q["3"])
        - compose(compose(q["1"], q["2"]), compose(q["3"], q["123"]))
    )
    res["AW4"] = lhs4 - rhs4
    return res


def verify_aw(shape: Shape) -> Report:
    """All four defining relations hold with zero residual on this shape."""
    report = Report(f"aw-relations {shape}")
    q = {name: q_elem(name, shape) for name in ("1", "2", "3", "12", "23", "13", "123")}
    for name, residual in aw_residuals(q, identity(shape)).items():
        report.add(name, residual)
    return report


def verify_expansion(shape: Shape) -> Report:
    """
    The product of the two adjacent-block Casimirs expands into the recoupled
    pair: Q12 Q23 = Q2 Q123 - q Q13 - q^-1 Q~13 + Q1 Q3, and the reversed
    product is the same expansion with q -> q^-1 on the explicit coefficients.
    """
    report = Report(f"expansion {shape}")
    q = {name: q_elem(name, shape) for name in AW_INDICES}
    common = compose(q["2"], q["123"]) + compose(q["1"], q["3"])
    report.add(
        "Q12 Q23 = Q2 Q123 - q Q13 - q^-1 Q~13 + Q1 Q3",
        compose(q["12"], q["23"]) - (common - q["13"] * Q(1) - q["13~"] * Q(-1)),
    )
    report.add(
        "Q23 Q12 = Q2 Q123 - q^-1 Q13 - q Q~13 + Q1 Q3",
        compose(q["23"], q["12"]) - (common - q["13"] * Q(-1) - q["13~"] * Q(1)),
    )
    return report


def verify_p_propositions() -> Report:
    """
    The 4x4 P-matrix layer: its quadratic law, its weighted trace, the
    split of the fundamental braiding into q^(1/2) - q^(-1/2) P, the
    sandwich identity P12 F23 P12 = P12 (x) tr(F), and the three exchange
    relations between P and the mixed matrices.
    """
    report = Report("p-propositions")
    p = p_matrix()
    two = Shape((HALF, HALF))
    id2 = identity(two)
    report.add("braiding = q^(1/2) - q^(-1/2) P", braided_r(HALF, HALF) - (id2 * V(1) - p * V(-1)))
    report.add("inverse braiding = q^(-1/2) - q^(1/2) P", braided_r_inv(HALF, HALF) - (id2 * V(-1) - p * V(1)))
    report.add("P^2 = (q + q^-1) P", compose(p, p) - p * (Q(1) + Q(-1)))
    report.add("weighted first-leg trace of P is the identity", partial_trace_first(p, m_matrix()) - identity(Shape((HALF,))))
    for tj in (1, 2):
        j = Spin(tj)
        shape = Shape((HALF, HALF, j))
        p12 = embed(p, (0, 1), shape)
        f = r_matrix(HALF, j)
        f23 = embed(f, (1, 2), shape)
        sandwich = compose(p12, compose(f23, p12))
        report.add(
            f"P12 F23 P12 = P12 (x) tr(F M) with F the mixed braiding, j={j}",
            sandwich - kron(p, partial_trace_first(f, m_matrix())),
        )
        lp13 = embed(l_plus(j), (0, 2), shape)
        lp23 = embed(l_plus(j), (1, 2), shape)
        lpi13 = embed(l_plus_inv(j), (0, 2), shape)
        lpi23 = embed(l_plus_inv(j), (1, 2), shape)
        lm13 = embed(l_minus(j), (0, 2), shape)
        lm23 = embed(l_minus(j), (1, 2), shape)
        lmi13 = embed(l_minus_inv(j), (0, 2), shape)
        lmi23 = embed(l_minus_inv(j), (1, 2), shape)
        report.add(f"RE1 j={j}", p12 - lp23 @ lp13 @ p12 @ lpi13 @ lpi23)
        report.add(f"RE2 j={j}", p12 - lmi23 @ lmi13 @ p12 @ lm13 @ lm23)
        report.add(f"RE3 j={j}", p12 - lp23 @ lp13 @ p12 @ lm13 @ lm23)
    return report


def verify_tl_iso() -> Report:
    """
    Both realizations of the three-strand diagram relations, and the bracket
    form of the quotient map sending the block Casimirs onto hook elements:
    on three fundamental legs Q12 = (q^3 + q^-3) - (q - q^-1)^2 P12 (and
    likewise Q23 with P23); in the diagram monoid the loop-around-two-strands
    tangle equals (q^3 + q^-3) id - (q - q^-1)^2 E1 after x -> i v.
    """
    report = Report("tl-iso")
    shape = Shape((HALF, HALF, HALF))
    p = p_matrix()
    p12 = embed(p, (0, 1), shape)
    p23 = embed(p, (1, 2), shape)
    loop = Q(1) + Q(-1)
    report.add("P12^2 = (q + q^-1) P12", compose(p12, p12) - p12 * loop)
    report.add("P23^2 = (q + q^-1) P23", compose(p23, p23) - p23 * loop)
    report.add("P12 P23 P12 = P12", p12 @ p23 @ p12 - p12)
    report.add("P23 P12 P23 = P23", p23 @ p12 @ p23 - p23)
    coeff = (Q(1) - Q(-1)) ** 2
    shift = Q(3) + Q(-3)
    report.add("Q12 = (q^3 + q^-3) - (q - q^-1)^2 P12", q_elem("12", shape) - (identity(shape) * shift - p12 * coeff))
    report.add("Q23 = (q^3 + q^-3) - (q - q^-1)^2 P23", q_elem("23", shape) - (identity(shape) * shift - p23 * coeff))

    # Diagram-monoid side.
    e1, e2 = TLElement.hook(3, 1), TLElement.hook(3, 2)
    from .tl import DELTA_X

    report.add_bool("E1 E1 = delta E1", tl_mul(e1, e1) == e1 * DELTA_X)
    report.add_bool("E2 E2 = delta E2", tl_mul(e2, e2) == e2 * DELTA_X)
    report.add_bool("loop value at x = i v is q + q^-1", subst_x_iv(DELTA_X) == loop)
    report.add_bool("E1 E2 E1 = E1", tl_mul(tl_mul(e1, e2), e1) == e1)
    report.add_bool("E2 E1 E2 = E2", tl_mul(tl_mul(e2, e1), e2) == e2)

    # The loop-around-two-strands tangle: close the auxiliary strand of the
    # four-strand word (1 2 2 1), then push the bracket onto the v axis.
    tangle = close_first(word_element(BraidWord(4, (1, 2, 2, 1))))
    tangle_v = tangle.map_coefficients(subst_x_iv)
    expected = TLElement.identity(3) * shift - e1 * coeff
    report.add_bool("loop-around-strands tangle matches the hook expansion", tangle_v == expected)
    return report


# ---------------------------------------------------------------------------
# Spectra.
# ---------------------------------------------------------------------------


def _pair_range(ta: int, tb: int) -> range:
    return range(abs(ta - tb), ta + tb + 1, 2)


def triple_twice_spins(shape: Shape) -> list[int]:
    """Twice-spins occurring in the full decomposition of a three-leg shape."""
    t1, t2, t3 = (s.twice_j for s in shape.factors)
    out = set()
    for t12 in _pair_range(t1, t2):
        out.update(_pair_range(t12, t3))
    return sorted(out)


def spectrum_twice_spins(index, shape: Shape) -> list[int]:
    name = _norm_index(index)
    t1, t2, t3 = (s.twice_j for s in shape.factors)
    if name == "12":
        return list(_pair_range(t1, t2))
    if name == "23":
        return list(_pair_range(t2, t3))
    if name in ("13", "13~"):
        return list(_pair_range(t1, t3))
    if name == "123":
        return triple_twice_spins(shape)
    raise ValueError(f"spectrum is only defined for block indices, not {index!r}")


def spectrum_report(index, shape: Shape) -> Report:
    """
    The block Casimir is annihilated by the product of (X - chi_j) over the
    decomposition range of its legs; an exact annihilating-product check, no
    eigen-decomposition over the polynomial ring.
    """
    name = _norm_index(index)
    report = Report(f"spectrum Q_{name} {shape}")
    op = q_elem(name, shape)
    prod = identity(shape)
    spins = spectrum_twice_spins(name, shape)
    for tj in spins:
        prod = compose(prod, op - identity(shape) * chi(Spin(tj)))
    report.add(
        "annihilating product over the decomposition range",
        prod,
        note=f"2j in {spins}",
    )
    return report


def verify_centrality(shape: Shape, indices: Optional[Iterable] = None) -> Report:
    """Every intermediate Casimir commutes with the diagonal generator action."""
    report = Report(f"centrality {shape}")
    gens = [E_SYM, F_SYM, GeneratorSymbol("QH", 2)]
    images = [(g.kind, delta_rep(g, shape)) for g in gens]
    for index in indices if indices is not None else AW_INDICES:
        op = q_elem(index, shape)
        for kind, img in images:
            report.add(f"Q_{_norm_index(index)} commutes with diagonal {kind}", compose(op, img) - compose(img, op))
    return report


def conjugation_dictionary(shape: Shape) -> Report:
    """
    The braiding conjugations relating the recoupled elements to the adjacent
    blocks: Q13 = Rhat12 Q23 Rhat12^-1, Q~13 = Rhat12^-1 Q23 Rhat12, and the
    two-step form Q23 = Rhat12^-1 Rhat23^-1 Q12 Rhat23 Rhat12, each read with
    the middle element built on the appropriately permuted shape.
    """
    report = Report(f"conjugation dictionary {shape}")
    j1, j2, j3 = shape.factors
    swapped12 = Shape((j2, j1, j3))
    q23_on_swapped = iterated_casimir(swapped12, (1, 2))

    # Q13 = Rhat12 Q23 Rhat12^-1: down . middle . up reading right to left.
    up = embed(braided_r_inv(j2, j1), (0, 1), shape)       # (j1,j2,j3) -> (j2,j1,j3)
    down = embed(braided_r(j2, j1), (0, 1), swapped12)     # back again
    report.add(
        "Q13 = Rhat12 Q23 Rhat12^-1 (shape-aware)",
        q_elem("13", shape) - compose(down, compose(q23_on_swapped, up)),
    )

    # Q~13 = Rhat12^-1 Q23 Rhat12.
    up2 = embed(braided_r(j1, j2), (0, 1), shape)          # (j1,j2,j3) -> (j2,j1,j3)
    down2 = embed(braided_r_inv(j1, j2), (0, 1), swapped12)
    report.add(
        "Q~13 = Rhat12^-1 Q23 Rhat12 (shape-aware)",
        q_elem("13~", shape) - compose(down2, compose(q23_on_swapped, up2)),
    )

    # Q23 = Rhat12^-1 Rhat23^-1 Q12 Rhat23 Rhat12, crossing two permuted shapes.
    mid_shape = Shape((j2, j3, j1))
    q12_on_mid = iterated_casimir(mid_shape, (0, 1))
    r12_up = embed(braided_r(j1, j2), (0, 1), shape)           # (j1,j2,j3) -> (j2,j1,j3)
    r23_up = embed(braided_r(j1, j3), (1, 2), swapped12)       # (j2,j1,j3) -> (j2,j3,j1)
    r23_down = embed(braided_r_inv(j1, j3), (1, 2), mid_shape)
    r12_down = embed(braided_r_inv(j1, j2), (0, 1), swapped12)
    conj = compose(r12_down, compose(r23_down, compose(q12_on_mid, compose(r23_up, r12_up))))
    report.add("Q23 = Rhat12^-1 Rhat23^-1 Q12 Rhat23 Rhat12 (shape-aware)", q_elem("23", shape) - conj)
    return report


def verify_all(shape: Shape) -> Report:
    """Every suite on one shape; the CLI's `--suite all`."""
    report = Report(f"aw all {shape}")
    report.extend(verify_aw(shape))
    report.extend(verify_routes(shape))
    report.extend(verify_expansion(shape))
    for index in ("12", "23", "13", "13~", "123"):
        report.extend(spectrum_report(index, shape))
    report.extend(verify_centrality(shape))
    return report
