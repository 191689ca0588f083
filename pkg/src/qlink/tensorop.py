"""
Shape-typed sparse linear operators between tensor products of spin spaces.

Conventions fixed here and relied on everywhere else:

- a spin is stored as its double `twice_j` (a non-negative int); the carrier
  space has dimension twice_j + 1;
- inside one factor the basis is ordered by descending weight,
  m = j, j-1, ..., -j, so the spin-1/2 weight matrix comes out as
  diag(q, q^-1) and the fundamental 4x4 braiding matrix matches its usual
  written form entry for entry;
- a multi-factor basis index is factor-major with the *first* factor slowest:
  index = ((i_0 * d_1 + i_1) * d_2 + i_2) * ...

Operators carry both an input and an output shape.  They usually coincide,
but braidings genuinely permute factors (V_a (x) V_b -> V_b (x) V_a), and the
shape bookkeeping is what keeps mixed-spin conjugations honest.

Entries are stored sparsely as {(row, col): LaurentPoly} with no zero entries,
so operator equality is exact.  Everything is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .laurent import (
    GaussRat,
    LaurentPoly,
    accumulate_product,
    finalize,
    poly_from_json,
    poly_to_json,
)


class ShapeError(ValueError):
    """Raised when operator shapes do not line up."""


@dataclass(frozen=True, order=True)
class Spin:
    """A spin j stored as twice_j; dimension of the carrier space is twice_j + 1."""

    twice_j: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError(f"twice_j must be non-negative, got {self.twice_j}")

    @property
    def dim(self) -> int:
        return self.twice_j + 1

    def twice_weights(self) -> list[int]:
        """Twice-weights 2m in basis order: 2j, 2j-2, ..., -2j."""
        return list(range(self.twice_j, -self.twice_j - 1, -2))

    @classmethod
    def parse(cls, text: str) -> Spin:
        """Parse '0', '1', '1/2', '3/2', ... into a Spin."""
        s = text.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            if den.strip() != "2":
                raise ValueError(f"spin denominator must be 2: {text!r}")
            return cls(int(num))
        return cls(2 * int(s))

    def __str__(self) -> str:
        return str(self.twice_j // 2) if self.twice_j % 2 == 0 else f"{self.twice_j}/2"


HALF = Spin(1)
ONE = Spin(2)


class Shape:
    """An ordered list of tensor factors with index (un)raveling helpers."""

    __slots__ = ("factors", "dims", "dim", "_strides")

    def __init__(self, factors: Iterable[Spin]):
        fs = tuple(factors)
        object.__setattr__(self, "factors", fs)
        dims = tuple(s.dim for s in fs)
        object.__setattr__(self, "dims", dims)
        strides = [1] * len(dims)
        total = 1
        for i in range(len(dims) - 1, -1, -1):
            strides[i] = total
            total *= dims[i]
        object.__setattr__(self, "_strides", tuple(strides))
        object.__setattr__(self, "dim", total)

    def __setattr__(self, name, value):
        raise AttributeError("Shape is immutable")

    @classmethod
    def of(cls, *twice_js: int) -> Shape:
        return cls(Spin(t) for t in twice_js)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Shape) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __add__(self, other: Shape) -> Shape:
        return Shape(self.factors + other.factors)

    def twice_list(self) -> list[int]:
        return [s.twice_j for s in self.factors]

    def strides(self) -> tuple[int, ...]:
        return self._strides

    def ravel(self, multi: Sequence[int]) -> int:
        return sum(i * s for i, s in zip(multi, self._strides))

    def unravel(self, index: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.dims):
            out.append(index % d)
            index //= d
        return tuple(reversed(out))

    def permuted(self, perm: Sequence[int]) -> Shape:
        return Shape(self.factors[p] for p in perm)

    def replace(self, positions: Sequence[int], spins: Sequence[Spin]) -> Shape:
        fs = list(self.factors)
        for pos, s in zip(positions, spins):
            fs[pos] = s
        return Shape(fs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.factors) + ")"

    def __repr__(self) -> str:
        return f"Shape.of({', '.join(str(s.twice_j) for s in self.factors)})"


EMPTY_SHAPE = Shape(())


class Operator:
    """A sparse matrix of LaurentPoly entries from shape_in to shape_out."""

    __slots__ = ("shape_in", "shape_out", "entries")

    def __init__(self, shape_in: Shape, shape_out: Shape, entries):
        canon: dict[tuple[int, int], LaurentPoly] = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for (r, c), p in items:
            if p:
                canon[(r, c)] = p
        object.__setattr__(self, "shape_in", shape_in)
        object.__setattr__(self, "shape_out", shape_out)
        object.__setattr__(self, "entries", canon)

    def __setattr__(self, name, value):
        raise AttributeError("Operator is immutable")

    @staticmethod
    def _raw(shape_in: Shape, shape_out: Shape, canon: dict[tuple[int, int], LaurentPoly]) -> Operator:
        op = Operator.__new__(Operator)
        object.__setattr__(op, "shape_in", shape_in)
        object.__setattr__(op, "shape_out", shape_out)
        object.__setattr__(op, "entries", canon)
        return op

    # -- queries -----------------------------------------------------------

    def is_square(self) -> bool:
        return self.shape_in == self.shape_out

    def is_zero(self) -> bool:
        return not self.entries

    def nnz(self) -> int:
        return len(self.entries)

    def entry(self, row: int, col: int) -> LaurentPoly:
        return self.entries.get((row, col), LaurentPoly.zero())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Operator)
            and self.shape_in == other.shape_in
            and self.shape_out == other.shape_out
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape_in, self.shape_out, frozenset(self.entries)))

    # -- linear structure ----------------------------------------------------

    def _check_same_shapes(self, other: Operator):
        if self.shape_in != other.shape_in or self.shape_out != other.shape_out:
            raise ShapeError(
                f"operator shapes differ: {self.shape_in}->{self.shape_out} "
                f"vs {other.shape_in}->{other.shape_out}"
            )

    def __add__(self, other: Operator) -> Operator:
        self._check_same_shapes(other)
        out = dict(self.entries)
        for rc, p in other.entries.items():
            prev = out.get(rc)
            if prev is None:
                out[rc] = p
            else:
                s = prev + p
                if s:
                    out[rc] = s
                else:
                    del out[rc]
        return Operator._raw(self.shape_in, self.shape_out, out)

    def __neg__(self) -> Operator:
        return Operator._raw(self.shape_in, self.shape_out, {rc: -p for rc, p in self.entries.items()})

    def __sub__(self, other: Operator) -> Operator:
        return self + (-other)

    def __mul__(self, scalar: Union[LaurentPoly, GaussRat, int]) -> Operator:
        if isinstance(scalar, int):
            scalar = LaurentPoly.const(scalar)
        if isinstance(scalar, GaussRat):
            scalar = LaurentPoly.monomial(0, scalar)
        if not isinstance(scalar, LaurentPoly):
            return NotImplemented
        if scalar.is_zero():
            return Operator._raw(self.shape_in, self.shape_out, {})
        out = {}
        for rc, p in self.entries.items():
            prod = p * scalar
            if prod:
                out[rc] = prod
        return Operator._raw(self.shape_in, self.shape_out, out)

    __rmul__ = __mul__

    def __matmul__(self, other: Operator) -> Operator:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"<Operator {self.shape_in}->{self.shape_out}, nnz={len(self.entries)}>"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "shape_in": self.shape_in.twice_list(),
            "shape_out": self.shape_out.twice_list(),
            "entries": [[r, c, poly_to_json(p)] for (r, c), p in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> Operator:
        shape_in = Shape.of(*data["shape_in"])
        shape_out = Shape.of(*data["shape_out"])
        entries = {(int(r), int(c)): poly_from_json(p) for r, c, p in data["entries"]}
        return cls(shape_in, shape_out, entries)


# ---------------------------------------------------------------------------
# Constructors and structural operations.
# ---------------------------------------------------------------------------


def identity(shape: Shape) -> Operator:
    one = LaurentPoly.one()
    return Operator._raw(shape, shape, {(i, i): one for i in range(shape.dim)})


def scalar_op(shape: Shape, c: LaurentPoly) -> Operator:
    return Operator._raw(shape, shape, {(i, i): c for i in range(shape.dim)} if c else {})


def diagonal(shape: Shape, diag: Sequence[LaurentPoly]) -> Operator:
    if len(diag) != shape.dim:
        raise ShapeError(f"diagonal length {len(diag)} != dim {shape.dim}")
    return Operator._raw(shape, shape, {(i, i): c for i, c in enumerate(diag) if c})


def kron(a: Operator, b: Operator) -> Operator:
    """Tensor product; output/input shapes are concatenated."""
    shape_in = a.shape_in + b.shape_in
    shape_out = a.shape_out + b.shape_out
    d_in_b = b.shape_in.dim
    d_out_b = b.shape_out.dim
    out: dict[tuple[int, int], LaurentPoly] = {}
    for (ra, ca), pa in a.entries.items():
        for (rb, cb), pb in b.entries.items():
            prod = pa * pb
            if prod:
                out[(ra * d_out_b + rb, ca * d_in_b + cb)] = prod
    return Operator._raw(shape_in, shape_out, out)


def compose(a: Operator, b: Operator) -> Operator:
    """Matrix product a @ b (b applied first to vectors)."""
    if a.shape_in != b.shape_out:
        raise ShapeError(f"cannot compose: left expects {a.shape_in}, right produces {b.shape_out}")
    rows_b: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for (r, c), p in b.entries.items():
        rows_b.setdefault(r, []).append((c, p))
    acc: dict[tuple[int, int], dict[int, GaussRat]] = {}
    for (r, k), pa in a.entries.items():
        row = rows_b.get(k)
        if not row:
            continue
        for c, pb in row:
            cell = acc.get((r, c))
            if cell is None:
                cell = {}
                acc[(r, c)] = cell
            accumulate_product(cell, pa, pb)
    out = {}
    for rc, cell in acc.items():
        p = finalize(cell)
        if p:
            out[rc] = p
    return Operator._raw(b.shape_in, a.shape_out, out)


def permute(shape: Shape, perm: Sequence[int]) -> Operator:
    """
    The permutation operator sending the basis vector labeled (m_0, ..., m_{n-1})
    to the vector whose slot t carries label m_{perm[t]}; shape_out is the
    correspondingly permuted shape.
    """
    perm = tuple(perm)
    if sorted(perm) != list(range(len(shape))):
        raise ShapeError(f"invalid permutation {perm} for {len(shape)} factors")
    shape_out = shape.permuted(perm)
    out_strides = shape_out.strides()
    one = LaurentPoly.one()
    entries = {}
    for col in range(shape.dim):
        multi = shape.unravel(col)
        row = sum(multi[perm[t]] * out_strides[t] for t in range(len(perm)))
        entries[(row, col)] = one
    return Operator._raw(shape, shape_out, entries)


def swap(a: Spin, b: Spin) -> Operator:
    """The two-factor exchange (V_a (x) V_b -> V_b (x) V_a)."""
    return permute(Shape((a, b)), (1, 0))


def embed(op: Operator, positions: Sequence[int], ambient: Shape) -> Operator:
    """
    Extend `op` by the identity to an operator on `ambient`, with factor t of
    `op` living at ambient position positions[t].  Positions must be distinct
    but need not be adjacent, sorted, or shape-preserving: the output ambient
    shape replaces each touched factor by the corresponding output factor of
    `op`.
    """
    positions = tuple(positions)
    n = len(ambient)
    if len(positions) != len(op.shape_in):
        raise ShapeError(f"{len(positions)} positions for a {len(op.shape_in)}-factor operator")
    if len(set(positions)) != len(positions):
        raise ShapeError(f"positions must be distinct, got {positions}")
    for t, pos in enumerate(positions):
        if not 0 <= pos < n:
            raise ShapeError(f"position {pos} outside ambient of {n} factors")
        if ambient[pos] != op.shape_in[t]:
            raise ShapeError(
                f"operator factor {t} has spin {op.shape_in[t]} but ambient slot {pos} has {ambient[pos]}"
            )
    ambient_out = ambient.replace(positions, op.shape_out.factors)
    in_strides = ambient.strides()
    out_strides = ambient_out.strides()
    others = [i for i in range(n) if i not in positions]
    # Offsets contributed by the untouched factors, common to row and column.
    offsets = [(0, 0)]
    for u in others:
        offsets = [
            (ro + i * out_strides[u], co + i * in_strides[u])
            for ro, co in offsets
            for i in range(ambient.dims[u])
        ]
    pos_in_strides = [in_strides[p] for p in positions]
    pos_out_strides = [out_strides[p] for p in positions]
    entries = {}
    for (r, c), p in op.entries.items():
        rm = op.shape_out.unravel(r)
        cm = op.shape_in.unravel(c)
        base_r = sum(i * s for i, s in zip(rm, pos_out_strides))
        base_c = sum(i * s for i, s in zip(cm, pos_in_strides))
        for ro, co in offsets:
            entries[(base_r + ro, base_c + co)] = p
    return Operator._raw(ambient, ambient_out, entries)


# ---------------------------------------------------------------------------
# Traces.
# ---------------------------------------------------------------------------


def _require_square(op: Operator, what: str):
    if not op.is_square():
        raise ShapeError(f"{what} requires a square operator, got {op.shape_in}->{op.shape_out}")


def _weight_entries(weight: Optional[Operator], spin: Spin, what: str) -> Optional[dict]:
    if weight is None:
        return None
    if weight.shape_in != Shape((spin,)) or not weight.is_square():
        raise ShapeError(f"{what} weight must act on ({spin},), got {weight.shape_in}->{weight.shape_out}")
    return weight.entries


def partial_trace_first(op: Operator, weight: Optional[Operator] = None) -> Operator:
    """
    Tr_1(op . (weight (x) id)): trace out the first factor against `weight`
    (identity if None); the result acts on the remaining factors.
    """
    _require_square(op, "partial_trace_first")
    shape = op.shape_in
    if len(shape) == 0:
        raise ShapeError("cannot trace a factorless operator")
    w = _weight_entries(weight, shape[0], "first-factor")
    rest = Shape(shape.factors[1:])
    d_rest = rest.dim
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (r, c), p in op.entries.items():
        a, rr = divmod(r, d_rest)
        k, cc = divmod(c, d_rest)
        if w is None:
            if a != k:
                continue
            contrib = p
        else:
            wp = w.get((k, a))
            if wp is None:
                continue
            contrib = p * wp
        prev = acc.get((rr, cc))
        s = contrib if prev is None else prev + contrib
        if s:
            acc[(rr, cc)] = s
        elif prev is not None:
            del acc[(rr, cc)]
    return Operator._raw(rest, rest, acc)


def partial_trace_last(op: Operator, weight: Optional[Operator] = None) -> Operator:
    """Mirror of `partial_trace_first` on the last factor."""
    _require_square(op, "partial_trace_last")
    shape = op.shape_in
    if len(shape) == 0:
        raise ShapeError("cannot trace a factorless operator")
    w = _weight_entries(weight, shape[-1], "last-factor")
    rest = Shape(shape.factors[:-1])
    d_last = shape.dims[-1]
    acc: dict[tuple[int, int], LaurentPoly] = {}
    for (r, c), p in op.entries.items():
        rr, a = divmod(r, d_last)
        cc, k = divmod(c, d_last)
        if w is None:
            if a != k:
                continue
            contrib = p
        else:
            wp = w.get((k, a))
            if wp is None:
                continue
            contrib = p * wp
        prev = acc.get((rr, cc))
        s = contrib if prev is None else prev + contrib
        if s:
            acc[(rr, cc)] = s
        elif prev is not None:
            del acc[(rr, cc)]
    return Operator._raw(rest, rest, acc)


def full_trace(op: Operator, weights: Sequence[Optional[Operator]]) -> LaurentPoly:
    """
    Tr(op . (w_0 (x) w_1 (x) ...)) with one weight per factor (None = identity).
    """
    _require_square(op, "full_trace")
    shape = op.shape_in
    if len(weights) != len(shape):
        raise ShapeError(f"{len(weights)} weights for {len(shape)} factors")
    w_entries = [_weight_entries(w, s, f"factor {t}") for t, (w, s) in enumerate(zip(weights, shape.factors))]
    total = LaurentPoly.zero()
    for (r, c), p in op.entries.items():
        rm = shape.unravel(r)
        cm = shape.unravel(c)
        contrib = p
        dead = False
        for t, w in enumerate(w_entries):
            if w is None:
                if rm[t] != cm[t]:
                    dead = True
                    break
            else:
                wp = w.get((cm[t], rm[t]))
                if wp is None:
                    dead = True
                    break
                contrib = contrib * wp
        if not dead:
            total = total + contrib
    return total


def as_scalar(op: Operator) -> Optional[LaurentPoly]:
    """Return c if op equals c*identity exactly, else None."""
    _require_square(op, "as_scalar")
    dim = op.shape_in.dim
    if not op.entries:
        return LaurentPoly.zero()
    c = op.entries.get((0, 0))
    if c is None or len(op.entries) != dim:
        return None
    for i in range(dim):
        if op.entries.get((i, i)) != c:
            return None
    return c
