"""
R-matrices on pairs of spin representations, and the boundary-matrix layer
built from them.

The two-leg braiding element is evaluated through its finite expansion

    R = sum_k  (q - q^-1)^k / [k]!  q^(-k(k+1)/2)  (F^k (x) E^k)
              (q^(kH) (x) q^(-kH))  q^(2 H (x) H),

which truncates at k = min(2 j_1, 2 j_2) because E and F are nilpotent on
finite-dimensional spaces; q^(2 H (x) H) is diagonal with entry q^(2 m1 m2),
an integer power of v.  The inverse is *not* obtained by matrix inversion but
by the bar substitution v -> v^-1 applied entrywise (the representation
matrices of E and F are bar-invariant, so this is the same as barring the
expansion coefficients); the construction asserts R R^-1 = id and raises if
that ever fails, which makes any upstream corruption loud.

Derived operators:

- braided form  Rhat = swap . R  (shape (a,b) -> (b,a)) and its inverse;
- opposite form R21 = swap . R(b,a) . swap on (a,b);
- L^- (j) = R on (1/2, j) and L^+(j) = R21 on (1/2, j): the mixed matrices
  with a distinguished spin-1/2 first leg, defined from R rather than
  transcribed, so there is a single source of truth (the written 2x2 block
  forms are asserted in the tests instead);
- the 4x4 projector-like P with middle block [[q^-1, -1], [-1, q]], satisfying
  Rhat = q^(1/2) - q^(-1/2) P on two spin-1/2 legs.

Results are memoized in a module-level table keyed by (variant, spins); the
cache is only ever written once per key and read elsewhere, so concurrent
readers are safe under the GIL.  `clear_cache` exists for tests that inject
corrupted matrices as negative controls.
"""

from __future__ import annotations

from .laurent import LaurentPoly, div_exact, qfact
from .report import Report
from .tensorop import (
    HALF,
    Operator,
    Shape,
    Spin,
    compose,
    embed,
    identity,
    kron,
    swap,
)
from .uqsu2 import mu as _mu, rep_e, rep_f, rep_qh

Q = LaurentPoly.q_power
V = LaurentPoly.v_power

_cache: dict[tuple, Operator] = {}


def clear_cache() -> None:
    _cache.clear()


def _cached(key: tuple, build) -> Operator:
    op = _cache.get(key)
    if op is None:
        op = build()
        _cache[key] = op
    return op


def _weight_diagonal(j1: Spin, j2: Spin) -> Operator:
    """q^(2 H (x) H): diagonal with entry q^(2 m1 m2) = v^((2m1)(2m2))."""
    shape = Shape((j1, j2))
    entries = {}
    i = 0
    for tm1 in j1.twice_weights():
        for tm2 in j2.twice_weights():
            entries[(i, i)] = V(tm1 * tm2)
            i += 1
    return Operator(shape, shape, entries)


def r_matrix(j1: Spin, j2: Spin) -> Operator:
    """The braiding element represented on V_j1 (x) V_j2 (shape-preserving)."""

    def build() -> Operator:
        shape = Shape((j1, j2))
        coeff = Q(1) - Q(-1)
        total = Operator(shape, shape, {})
        f_pow = identity(Shape((j1,)))
        e_pow = identity(Shape((j2,)))
        f_op, e_op = rep_f(j1), rep_e(j2)
        weight = _weight_diagonal(j1, j2)
        for k in range(min(j1.twice_j, j2.twice_j) + 1):
            if k:
                f_pow = compose(f_op, f_pow)
                e_pow = compose(e_op, e_pow)
            # Every entry of E^k is [k]! times a q-binomial, so dividing the
            # E^k leg entrywise keeps all arithmetic inside the Laurent ring.
            if k > 1:
                fk = qfact(k)
                e_leg = Operator._raw(
                    e_pow.shape_in,
                    e_pow.shape_out,
                    {rc: div_exact(p, fk) for rc, p in e_pow.entries.items()},
                )
            else:
                e_leg = e_pow
            term = kron(f_pow, e_leg)
            term = compose(term, kron(rep_qh(j1, k), rep_qh(j2, -k)))
            term = compose(term, weight)
            total = total + term * (coeff**k * V(-k * (k + 1)))
        return total

    return _cached(("R", j1.twice_j, j2.twice_j), build)


def r_inverse(j1: Spin, j2: Spin) -> Operator:
    """Inverse of `r_matrix`, built by the bar substitution and then verified."""

    def build() -> Operator:
        base = r_matrix(j1, j2)
        inv = Operator._raw(base.shape_in, base.shape_out, {rc: p.bar() for rc, p in base.entries.items()})
        if compose(base, inv) != identity(base.shape_in):
            raise RuntimeError(
                f"bar-substituted inverse failed the R R^-1 = id cross-check on {base.shape_in}; "
                "the braiding matrix construction is corrupted"
            )
        return inv

    return _cached(("Rinv", j1.twice_j, j2.twice_j), build)


def r_opposite(j1: Spin, j2: Spin) -> Operator:
    """R21 (the flipped braiding element) represented on V_j1 (x) V_j2."""

    def build() -> Operator:
        return compose(swap(j2, j1), compose(r_matrix(j2, j1), swap(j1, j2)))

    return _cached(("Rop", j1.twice_j, j2.twice_j), build)


def braided_r(j1: Spin, j2: Spin) -> Operator:
    """Rhat = swap . R, mapping (j1, j2) to (j2, j1)."""

    def build() -> Operator:
        return compose(swap(j1, j2), r_matrix(j1, j2))

    return _cached(("bR", j1.twice_j, j2.twice_j), build)


def braided_r_inv(j1: Spin, j2: Spin) -> Operator:
    """Inverse of braided_r(j1, j2), mapping (j2, j1) back to (j1, j2)."""

    def build() -> Operator:
        return compose(r_inverse(j1, j2), swap(j2, j1))

    return _cached(("bRinv", j1.twice_j, j2.twice_j), build)


def monodromy(j1: Spin, j2: Spin) -> Operator:
    """R21 R12 on (j1, j2): the square of the braiding."""
    return compose(r_opposite(j1, j2), r_matrix(j1, j2))


# ---------------------------------------------------------------------------
# The mixed matrices with a spin-1/2 first leg, and the 4x4 P matrix.
# ---------------------------------------------------------------------------


def l_minus(j: Spin) -> Operator:
    """R with the first leg in the fundamental: acts on (1/2, j)."""
    return r_matrix(HALF, j)


def l_plus(j: Spin) -> Operator:
    """R21 with the first leg in the fundamental: acts on (1/2, j)."""
    return _cached(("Lp", j.twice_j), lambda: r_opposite(HALF, j))


def l_minus_inv(j: Spin) -> Operator:
    return r_inverse(HALF, j)


def l_plus_inv(j: Spin) -> Operator:
    def build() -> Operator:
        return compose(swap(j, HALF), compose(r_inverse(j, HALF), swap(HALF, j)))

    return _cached(("Lpi", j.twice_j), build)


def m_matrix() -> Operator:
    """diag(q, q^-1): the weight element on the spin-1/2 space."""
    return _mu(HALF)


def p_matrix() -> Operator:
    """The 4x4 matrix with middle block [[q^-1, -1], [-1, q]] on (1/2, 1/2)."""

    def build() -> Operator:
        shape = Shape((HALF, HALF))
        one = LaurentPoly.one()
        entries = {
            (1, 1): Q(-1),
            (1, 2): -one,
            (2, 1): -one,
            (2, 2): Q(1),
        }
        return Operator(shape, shape, entries)

    return _cached(("P",), build)


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


def verify_yang_baxter(j1: Spin, j2: Spin, j3: Spin) -> Report:
    """R12 R13 R23 = R23 R13 R12 on (j1, j2, j3), with plain (non-braided) legs."""
    report = Report(f"yang-baxter {j1},{j2},{j3}")
    shape = Shape((j1, j2, j3))
    r12 = embed(r_matrix(j1, j2), (0, 1), shape)
    r13 = embed(r_matrix(j1, j3), (0, 2), shape)
    r23 = embed(r_matrix(j2, j3), (1, 2), shape)
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    report.add("R12 R13 R23 = R23 R13 R12", lhs - rhs)
    return report


def verify_frt(general_twice_spins: tuple[int, ...] = (1, 2, 3)) -> Report:
    """
    The six exchange relations between R and the mixed matrices, as exact
    matrix identities.  The three with two fundamental legs run with the
    remaining leg at each requested spin; the three one-leg variants place the
    fundamental leg at each of the three positions in turn.
    """
    report = Report("frt")
    for tj in general_twice_spins:
        j = Spin(tj)

        shape = Shape((HALF, HALF, j))
        r12 = embed(r_matrix(HALF, HALF), (0, 1), shape)
        lm13 = embed(l_minus(j), (0, 2), shape)
        lm23 = embed(l_minus(j), (1, 2), shape)
        lp13 = embed(l_plus(j), (0, 2), shape)
        lp23 = embed(l_plus(j), (1, 2), shape)
        report.add(f"FRT1 j={j}", r12 @ lm13 @ lm23 - lm23 @ lm13 @ r12)
        report.add(f"FRT2 j={j}", r12 @ lp23 @ lp13 - lp13 @ lp23 @ r12)
        report.add(f"FRT3 j={j}", lm13 @ r12 @ lp23 - lp23 @ r12 @ lm13)

        shape4 = Shape((HALF, j, j))
        r23 = embed(r_matrix(j, j), (1, 2), shape4)
        lm13 = embed(l_minus(j), (0, 2), shape4)
        lm12 = embed(l_minus(j), (0, 1), shape4)
        report.add(f"RLL4 j={j}", r23 @ lm13 @ lm12 - lm12 @ lm13 @ r23)

        shape5 = Shape((j, j, HALF))
        r12g = embed(r_matrix(j, j), (0, 1), shape5)
        lp31 = embed(l_plus(j), (2, 0), shape5)
        lp32 = embed(l_plus(j), (2, 1), shape5)
        report.add(f"RLL5 j={j}", r12g @ lp31 @ lp32 - lp32 @ lp31 @ r12g)

        shape6 = Shape((j, HALF, j))
        lp21 = embed(l_plus(j), (1, 0), shape6)
        r13g = embed(r_matrix(j, j), (0, 2), shape6)
        lm23 = embed(l_minus(j), (1, 2), shape6)
        report.add(f"RLL6 j={j}", lp21 @ r13g @ lm23 - lm23 @ r13g @ lp21)
    return report


def _twice_spin_range(ta: int, tb: int) -> range:
    """Twice-spins in the decomposition of a twice-ta by twice-tb product."""
    return range(abs(ta - tb), ta + tb + 1, 2)


def monodromy_annihilator(j1: Spin, j2: Spin) -> Report:
    """
    The squared braiding R21 R12 is annihilated by the product of
    (B - q^(-2j1(j1+1) - 2j2(j2+1) + 2j(j+1))) over the decomposition range of
    j; checked as an exact matrix identity.
    """
    report = Report(f"monodromy {j1},{j2}")
    b = monodromy(j1, j2)
    shape = b.shape_in
    ta, tb = j1.twice_j, j2.twice_j
    prod = identity(shape)
    for tj in _twice_spin_range(ta, tb):
        exponent = -ta * (ta + 2) - tb * (tb + 2) + tj * (tj + 2)  # v-exponent
        prod = compose(prod, b - identity(shape) * V(exponent))
    report.add("annihilating product", prod, note=f"eigenvalue exponents over 2j in {list(_twice_spin_range(ta, tb))}")
    return report
