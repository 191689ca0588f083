"""
The diagram monoid of planar matchings, the state space of the bracket
polynomial.

A diagram on n strands is a perfect noncrossing matching of 2n boundary
points: bottom points 0..n-1 and top points n..2n-1, both numbered left to
right.  Noncrossing is checked against the circular boundary order (bottom
left to right, then top right to left), where a planar matching is exactly a
balanced bracket sequence.

The product stacks the left operand on top of the right one; closed loops
formed in the middle are erased and counted, each contributing one factor of
the loop value delta = -x^2 - x^{-2} to the coefficient.  `close_first`
closes the leftmost strand around the left side of the diagram, which is how
braid closures and loop-around-strands tangles are evaluated; closing every
strand in turn computes the bracket of a braid closure.

Coefficients are Laurent polynomials whose variable is *read as* x here; the
`subst_x_iv` map in `laurent` converts finished bracket values onto the v
axis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .laurent import LaurentPoly
from .braid import BraidWord

# Loop value of one erased circle.
DELTA_X = LaurentPoly({2: -1, -2: -1})


@dataclass(frozen=True)
class PlanarMatching:
    """A noncrossing perfect matching of n bottom and n top points."""

    n: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairing", tuple(self.pairing))
        pts = 2 * self.n
        if len(self.pairing) != pts:
            raise ValueError(f"pairing on {len(self.pairing)} points, expected {pts}")
        for i, p in enumerate(self.pairing):
            if not 0 <= p < pts or p == i or self.pairing[p] != i:
                raise ValueError(f"pairing is not a fixed-point-free involution: {self.pairing}")
        if not self._is_noncrossing():
            raise ValueError(f"pairing is not planar: {self.pairing}")

    def _is_noncrossing(self) -> bool:
        # Circular positions: bottom i -> i, top i -> 3n - 1 - i.
        n = self.n
        circ = lambda i: i if i < n else 3 * n - 1 - i
        order = sorted(range(2 * n), key=circ)
        stack: list[int] = []
        for i in order:
            if stack and stack[-1] == i:
                stack.pop()
            else:
                stack.append(self.pairing[i])
        return not stack

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def hook(cls, n: int, i: int) -> PlanarMatching:
        """Cup joining bottom i, i+1 and cap joining top i, i+1 (1-based i < n)."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"hook index {i} out of range for {n} strands")
        pairing = list(range(n, 2 * n)) + list(range(n))
        a, b = i - 1, i
        pairing[a], pairing[b] = b, a
        pairing[n + a], pairing[n + b] = n + b, n + a
        return cls(n, tuple(pairing))


def compose_matchings(top: PlanarMatching, bottom: PlanarMatching) -> tuple[PlanarMatching, int]:
    """
    Stack `top` above `bottom` (gluing bottom's top row to top's bottom row);
    return the resulting matching and the number of erased middle loops.
    """
    if top.n != bottom.n:
        raise ValueError(f"cannot stack diagrams on {top.n} and {bottom.n} strands")
    n = top.n
    visited = [False] * n  # middle interface points, indexed 0..n-1
    result = [-1] * (2 * n)

    def walk(in_top: bool, point: int) -> tuple[bool, int]:
        # Follow arcs until a boundary point of the product is reached.
        while True:
            partner = (top if in_top else bottom).pairing[point]
            if in_top:
                if partner >= n:
                    return True, partner
                visited[partner] = True
                in_top, point = False, n + partner
            else:
                if partner < n:
                    return False, partner
                visited[partner - n] = True
                in_top, point = True, partner - n

    for start in range(2 * n):
        if result[start] != -1:
            continue
        # Bottom boundary points live in the bottom diagram; top boundary
        # points share their index with the top diagram's own numbering.
        _, end = walk(False, start) if start < n else walk(True, start)
        result[start] = end
        result[end] = start

    loops = 0
    for t in range(n):
        if visited[t]:
            continue
        loops += 1
        cur = t
        while not visited[cur]:
            visited[cur] = True
            step = top.pairing[cur]  # stays in the middle: step < n
            visited[step] = True
            nxt = bottom.pairing[n + step]  # back to the middle: nxt >= n
            cur = nxt - n
    return PlanarMatching(n, tuple(result)), loops


class TLElement:
    """A linear combination of planar matchings with LaurentPoly coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms):
        canon: dict[PlanarMatching, LaurentPoly] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for diag, coeff in items:
            if diag.n != n:
                raise ValueError(f"diagram on {diag.n} strands in a {n}-strand element")
            if coeff:
                prev = canon.get(diag)
                if prev is None:
                    canon[diag] = coeff
                else:
                    s = prev + coeff
                    if s:
                        canon[diag] = s
                    else:
                        del canon[diag]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):
        raise AttributeError("TLElement is immutable")

    @classmethod
    def identity(cls, n: int) -> TLElement:
        return cls(n, {PlanarMatching.identity(n): LaurentPoly.one()})

    @classmethod
    def hook(cls, n: int, i: int) -> TLElement:
        return cls(n, {PlanarMatching.hook(n, i): LaurentPoly.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, TLElement) and self.n == other.n and self.terms == other.terms

    def __add__(self, other: TLElement) -> TLElement:
        if self.n != other.n:
            raise ValueError("cannot add elements on different strand counts")
        out = dict(self.terms)
        for diag, coeff in other.terms.items():
            prev = out.get(diag)
            if prev is None:
                out[diag] = coeff
            else:
                s = prev + coeff
                if s:
                    out[diag] = s
                else:
                    del out[diag]
        return TLElement(self.n, out)

    def __neg__(self) -> TLElement:
        return TLElement(self.n, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: TLElement) -> TLElement:
        return self + (-other)

    def __mul__(self, scalar: Union[LaurentPoly, int]) -> TLElement:
        if isinstance(scalar, int):
            scalar = LaurentPoly.const(scalar)
        if not isinstance(scalar, LaurentPoly):
            return NotImplemented
        return TLElement(self.n, {d: c * scalar for d, c in self.terms.items()})

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> TLElement:
        return TLElement(self.n, {d: fn(c) for d, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"<TLElement n={self.n}, {len(self.terms)} diagrams>"


def tl_mul(a: TLElement, b: TLElement) -> TLElement:
    """Product with `a` stacked on top of `b`; erased loops contribute delta each."""
    if a.n != b.n:
        raise ValueError(f"cannot stack elements on {a.n} and {b.n} strands")
    acc: dict[PlanarMatching, LaurentPoly] = {}
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            diag, loops = compose_matchings(da, db)
            coeff = ca * cb
            if loops:
                coeff = coeff * DELTA_X**loops
            prev = acc.get(diag)
            acc[diag] = coeff if prev is None else prev + coeff
    return TLElement(a.n, acc)


def braid_letter(n: int, letter: int) -> TLElement:
    """
    The smoothing expansion of one crossing: a positive letter maps to
    x * id + x^-1 * hook, a negative one to x^-1 * id + x * hook.  The signs
    are fixed by requiring the closed positive kink to evaluate to -x^3.
    """
    if letter == 0 or not 1 <= abs(letter) <= n - 1:
        raise ValueError(f"letter {letter} out of range for {n} strands")
    x = LaurentPoly.v_power(1) if letter > 0 else LaurentPoly.v_power(-1)
    x_inv = LaurentPoly.v_power(-1) if letter > 0 else LaurentPoly.v_power(1)
    return TLElement(
        n,
        {
            PlanarMatching.identity(n): x,
            PlanarMatching.hook(n, abs(letter)): x_inv,
        },
    )


def word_element(word: BraidWord) -> TLElement:
    """The image of a braid word in the diagram monoid (letters read bottom-up)."""
    elem = TLElement.identity(word.n_strands)
    for letter in word.letters:
        elem = tl_mul(braid_letter(word.n_strands, letter), elem)
    return elem


def close_first(elem: TLElement) -> TLElement:
    """
    Close the leftmost strand (joining top 0 to bottom 0 around the left).
    A strand that ran straight through becomes an erased loop worth delta.
    """
    if elem.n == 0:
        raise ValueError("no strand left to close")
    n = elem.n

    def renumber(i: int) -> int:
        return i - 1 if i < n else i - 2

    acc: dict[PlanarMatching, LaurentPoly] = {}
    for diag, coeff in elem.terms.items():
        pairing = list(diag.pairing)
        if pairing[0] == n:
            new_pairs = {
                renumber(i): renumber(pairing[i]) for i in range(2 * n) if i not in (0, n)
            }
            coeff = coeff * DELTA_X
        else:
            a, b = pairing[0], pairing[n]
            new_pairs = {
                renumber(i): renumber(pairing[i])
                for i in range(2 * n)
                if i not in (0, n, a, b)
            }
            new_pairs[renumber(a)] = renumber(b)
            new_pairs[renumber(b)] = renumber(a)
        new_diag = PlanarMatching(n - 1, tuple(new_pairs[i] for i in range(2 * (n - 1))))
        prev = acc.get(new_diag)
        acc[new_diag] = coeff if prev is None else prev + coeff
    return TLElement(n - 1, acc)


def close_all(elem: TLElement) -> LaurentPoly:
    """Close every strand; the result is the scalar on the empty diagram."""
    while elem.n:
        elem = close_first(elem)
    if not elem.terms:
        return LaurentPoly.zero()
    ((_, coeff),) = elem.terms.items()
    return coeff
