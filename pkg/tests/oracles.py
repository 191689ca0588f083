"""
Independent brute-force oracles used to pin expected values.

These deliberately share no algorithmic machinery with the package internals
they check: the bracket oracle enumerates all 2^c crossing smoothings and
counts loops with a union-find over diagram segments (no diagram-monoid
composition), and the two-strand torus oracle evaluates closure traces from
the two braiding eigenvalues rather than from matrices.
"""

from __future__ import annotations

from itertools import product

from qlink.braid import BraidWord
from qlink.laurent import LaurentPoly, qint


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def bracket_state_sum(word: BraidWord) -> LaurentPoly:
    """
    The closure bracket of a braid word by full smoothing enumeration: each
    crossing resolves into the straight-through or the hook smoothing with
    weights x^(+-1), every closed loop contributes -x^2 - x^(-2).
    """
    n = word.n_strands
    k = len(word.letters)
    delta = LaurentPoly({2: -1, -2: -1})
    total = LaurentPoly.zero()

    def node(level: int, position: int) -> int:
        return level * n + position

    for state in product((0, 1), repeat=k):
        uf = _UnionFind((k + 1) * n)
        exponent = 0
        for level, (letter, choice) in enumerate(zip(word.letters, state)):
            i = abs(letter) - 1
            hook = choice == 1
            exponent += (1 if not hook else -1) * (1 if letter > 0 else -1)
            for p in range(n):
                if p in (i, i + 1):
                    continue
                uf.union(node(level, p), node(level + 1, p))
            if hook:
                uf.union(node(level, i), node(level, i + 1))
                uf.union(node(level + 1, i), node(level + 1, i + 1))
            else:
                uf.union(node(level, i), node(level + 1, i))
                uf.union(node(level, i + 1), node(level + 1, i + 1))
        for p in range(n):
            uf.union(node(k, p), node(0, p))
        loops = len({uf.find(x) for x in range((k + 1) * n)})
        total = total + LaurentPoly.v_power(exponent) * delta**loops
    return total


def two_strand_torus_value(crossings: int) -> LaurentPoly:
    """
    Closure value of the two-strand braid with `crossings` positive crossings,
    both strands fundamental: the braiding acts by q^(1/2) on the triplet part
    and -q^(-3/2) on the singlet part, and the weighted trace of the projector
    onto a spin-j part is [2j+1].
    """
    triplet = LaurentPoly.v_power(crossings) * qint(3)
    sign = 1 if crossings % 2 == 0 else -1
    singlet = LaurentPoly.v_power(-3 * crossings) * sign
    return triplet + singlet


def random_word(rng, n_strands: int, length: int) -> BraidWord:
    if n_strands < 2:
        return BraidWord(n_strands, ())
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, n_strands - 1) for _ in range(length)
    )
    return BraidWord(n_strands, letters)


def random_colored_braid(rng, n_strands: int, length: int, max_twice_spin: int):
    """A random word with one random color per closure component."""
    from qlink.braid import ColoredBraid, underlying_permutation
    from qlink.tensorop import Spin

    word = random_word(rng, n_strands, length)
    perm = underlying_permutation(word)
    colors: list = [None] * n_strands
    for s in range(n_strands):
        if colors[s] is None:
            spin = Spin(rng.randint(0, max_twice_spin))
            t = s
            while colors[t] is None:
                colors[t] = spin
                t = perm[t]
    return ColoredBraid(word, tuple(colors))
