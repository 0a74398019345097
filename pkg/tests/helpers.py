"""Random rational subspaces and derived objects for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from nlie.algebra import bracket_span
from nlie.linalg import full_space, span, sum_
from nlie.metric import Form


def random_vector(rng: random.Random, d: int, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3))) for _ in range(d))


def random_subspace(rng: random.Random, d: int, k: int | None = None):
    k = rng.randint(0, d) if k is None else k
    return span([random_vector(rng, d) for _ in range(k)], d)


def ideal_generated(A, W):
    """Smallest ideal containing W."""
    g = full_space(A.dim)
    while True:
        nxt = sum_(W, bracket_span(A, W, *([g] * (A.arity - 1))))
        if nxt == W:
            return W
        W = nxt


def isotropic_line(rng: random.Random, B: Form, f: tuple):
    """span{v} with B(v, v) = 0, obtained by pushing a random u along an isotropic f."""
    while True:
        u = random_vector(rng, B.dim)
        c = B(u, f)
        if c:
            a = B(u, u) / (2 * c)
            v = tuple(x - a * y for x, y in zip(u, f))
            if any(v):
                return span([v], B.dim)
