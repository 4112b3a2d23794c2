"""Root system combinatorics for sl_{n+1}.

Weights are tuples of integers in the fundamental weight basis, so
lam[i-1] = lam(h_i).  The bilinear form is normalized so that every root
has squared length 2; with that normalization the Gram matrix of the
fundamental weights is the inverse Cartan matrix.

Weyl group elements are permutations of {1, ..., n+1}, stored as tuples
perm[k-1] = image of k, acting on epsilon coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple  # tuple[int, ...] of length n, fundamental weight basis
WeylElt = tuple  # permutation of 1..n+1


def rank_of(lam) -> int:
    n = len(lam)
    if n < 1:
        raise ValueError("rank must be at least 1")
    return n


@lru_cache(maxsize=None)
def cartan_matrix(n: int):
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def gram_matrix(n: int):
    """(omega_i, omega_j) as Fractions; inverse of the A_n Cartan matrix."""
    return tuple(
        tuple(
            Fraction(min(i, j) * (n + 1 - max(i, j)), n + 1)
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )


def inner_product(lam, mu) -> Fraction:
    n = rank_of(lam)
    if len(mu) != n:
        raise ValueError("rank mismatch")
    g = gram_matrix(n)
    total = Fraction(0)
    for i, a in enumerate(lam):
        if not a:
            continue
        row = g[i]
        for j, b in enumerate(mu):
            if b:
                total += a * row[j] * b
    return total


@lru_cache(maxsize=None)
def simple_root(n: int, i: int) -> Weight:
    """alpha_i in the fundamental weight basis (column i of the Cartan matrix)."""
    if not 1 <= i <= n:
        raise ValueError("node out of range")
    return tuple(cartan_matrix(n)[j][i - 1] for j in range(n))


@lru_cache(maxsize=None)
def positive_roots(n: int):
    """Positive roots as intervals (a, b), meaning alpha_a + ... + alpha_b."""
    return tuple((a, b) for a in range(1, n + 1) for b in range(a, n + 1))


@lru_cache(maxsize=None)
def root_weight(n: int, a: int, b: int) -> Weight:
    v = [0] * n
    for j in range(a, b + 1):
        alpha = simple_root(n, j)
        for k in range(n):
            v[k] += alpha[k]
    return tuple(v)


def highest_root(n: int) -> Weight:
    return root_weight(n, 1, n)


def pair_h_alpha(lam, root) -> int:
    """lam(h_alpha) for a positive root given as an interval (a, b)."""
    a, b = root
    return sum(lam[a - 1 : b])


def weight_add(lam, mu):
    return tuple(a + b for a, b in zip(lam, mu, strict=True))


def weight_sub(lam, mu):
    return tuple(a - b for a, b in zip(lam, mu, strict=True))


def weight_scale(c, lam):
    return tuple(c * a for a in lam)


def zero_weight(n: int) -> Weight:
    return (0,) * n


def fundamental_weight(n: int, i: int) -> Weight:
    if not 1 <= i <= n:
        raise ValueError("node out of range")
    return tuple(1 if j == i else 0 for j in range(1, n + 1))


def rho(n: int) -> Weight:
    return (1,) * n


def is_dominant(lam) -> bool:
    return all(a >= 0 for a in lam)


def to_avec(lam):
    """Epsilon coordinates (a_1, ..., a_{n+1}) normalized by a_{n+1} = 0."""
    n = len(lam)
    a = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        a[i] = a[i + 1] + lam[i]
    return tuple(a)


def from_avec(a):
    return tuple(a[i] - a[i + 1] for i in range(len(a) - 1))


def weyl_elements(n: int):
    """All of W = S_{n+1}; fine at the ranks this package targets."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 2))]


def weyl_identity(n: int) -> WeylElt:
    return tuple(range(1, n + 2))


def weyl_longest(n: int) -> WeylElt:
    return tuple(range(n + 1, 0, -1))


def weyl_simple(n: int, i: int) -> WeylElt:
    p = list(range(1, n + 2))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def weyl_compose(p, q) -> WeylElt:
    """p∘q as maps, (p∘q)(k) = p(q(k))."""
    return tuple(p[q[k] - 1] for k in range(len(p)))


def weyl_inverse(p) -> WeylElt:
    out = [0] * len(p)
    for k, v in enumerate(p):
        out[v - 1] = k + 1
    return tuple(out)


def weyl_act(p, lam) -> Weight:
    """Permutation action on a weight: sigma(eps_k) = eps_{sigma(k)}."""
    a = to_avec(lam)
    out = [0] * len(a)
    for k in range(len(a)):
        out[p[k] - 1] = a[k]
    return from_avec(out)


def dominant_rep(lam) -> Weight:
    """The dominant weight in the W-orbit of lam."""
    return from_avec(tuple(sorted(to_avec(lam), reverse=True)))


def weyl_dim(lam) -> int:
    """Dimension of the simple module V(lam), by the Weyl formula.

    For type A this is the product over intervals [a, b] of
    (sum of lam_j + 1 over the interval) / (b - a + 1).
    """
    n = rank_of(lam)
    if not is_dominant(lam):
        raise ValueError("weight must be dominant")
    num = 1
    den = 1
    for a, b in positive_roots(n):
        num *= sum(lam[a - 1 : b]) + (b - a + 1)
        den *= b - a + 1
    d, r = divmod(num, den)
    assert r == 0
    return d


class Character:
    """Finite formal sum of weights with integer multiplicities."""

    def __init__(self, mult=None):
        self.mult = {w: m for w, m in (mult or {}).items() if m}

    def __eq__(self, other):
        return isinstance(other, Character) and self.mult == other.mult

    def __repr__(self):
        items = sorted(self.mult.items())
        return f"Character({dict(items)})"

    def mass(self) -> int:
        return sum(self.mult.values())

    def __mul__(self, other):
        """Product of characters = convolution of multiplicity functions."""
        out = {}
        for w1, m1 in self.mult.items():
            for w2, m2 in other.mult.items():
                w = weight_add(w1, w2)
                out[w] = out.get(w, 0) + m1 * m2
        return Character(out)

    def sub_scaled(self, other, c):
        out = dict(self.mult)
        for w, m in other.mult.items():
            v = out.get(w, 0) - c * m
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return Character(out)

    def is_weyl_invariant(self) -> bool:
        if not self.mult:
            return True
        n = len(next(iter(self.mult)))
        for w, m in self.mult.items():
            for i in range(1, n + 1):
                if self.mult.get(weyl_act(weyl_simple(n, i), w), 0) != m:
                    return False
        return True

    def to_json(self):
        n = len(next(iter(self.mult))) if self.mult else 0
        entries = [
            {"weight": list(w), "mult": m} for w, m in sorted(self.mult.items())
        ]
        return {"rank": n, "entries": entries}


def _expand_in_simple_roots(n, v):
    """Coordinates of a weight in the simple root basis (Fractions)."""
    g = gram_matrix(n)
    return tuple(
        sum((g[i][j] * v[j] for j in range(n)), Fraction(0)) for i in range(n)
    )


def _weight_set(lam):
    """All weights of V(lam): mu with dominant_rep(mu) <= lam in the root order.

    BFS along single simple root steps starting from lam reaches every
    weight, since any weight below the highest one has some mu + alpha_i
    still a weight.
    """
    n = rank_of(lam)
    roots = [simple_root(n, i) for i in range(1, n + 1)]

    def admissible(mu):
        diff = weight_sub(lam, dominant_rep(mu))
        ks = _expand_in_simple_roots(n, diff)
        return all(k.denominator == 1 and k >= 0 for k in ks)

    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in roots:
                cand = weight_sub(mu, alpha)
                if cand not in seen and admissible(cand):
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def char_simple(lam) -> Character:
    """Character of V(lam) by the Freudenthal multiplicity recursion.

    Exact rational arithmetic throughout; multiplicities are asserted to
    come out as positive integers.  An independent tableau-counting oracle
    lives in the test suite.
    """
    n = rank_of(lam)
    if not is_dominant(lam):
        raise ValueError("weight must be dominant")
    weights = _weight_set(lam)
    rho_w = rho(n)
    lam_rho = weight_add(lam, rho_w)
    norm_top = inner_product(lam_rho, lam_rho)
    roots = [root_weight(n, a, b) for a, b in positive_roots(n)]

    # Process by decreasing height so every mu + k*alpha is already done.
    order = sorted(weights, key=lambda mu: inner_product(mu, rho_w), reverse=True)
    mult = {}
    for mu in order:
        if mu == lam:
            mult[mu] = 1
            continue
        num = Fraction(0)
        for alpha in roots:
            nu = mu
            while True:
                nu = weight_add(nu, alpha)
                if nu not in weights:
                    break
                num += mult[nu] * inner_product(nu, alpha)
        mu_rho = weight_add(mu, rho_w)
        den = norm_top - inner_product(mu_rho, mu_rho)
        assert den > 0
        m = 2 * num / den
        assert m.denominator == 1 and m >= 1
        mult[mu] = int(m)
    ch = Character(mult)
    assert ch.mass() == weyl_dim(lam)
    return ch


def tensor_decompose(lam, mu) -> dict:
    """Multiplicities of simples in V(lam) ⊗ V(mu), by character division.

    Multiplies the two characters, then repeatedly strips the character of
    the highest surviving weight.  The Littlewood-Richardson rule is kept
    as an independent oracle in the tests.
    """
    n = rank_of(lam)
    if len(mu) != n:
        raise ValueError("rank mismatch")
    rho_w = rho(n)
    rem = char_simple(lam) * char_simple(mu)
    out = {}
    while rem.mult:
        top = max(rem.mult, key=lambda w: (inner_product(w, rho_w), w))
        c = rem.mult[top]
        assert is_dominant(top) and c > 0
        out[top] = out.get(top, 0) + c
        rem = rem.sub_scaled(char_simple(top), c)
    assert weyl_dim(lam) * weyl_dim(mu) == sum(
        m * weyl_dim(w) for w, m in out.items()
    )
    return out


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers; may be empty."""

    parts: tuple

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        if any(int(x) != x or x < 1 for x in p):
            raise ValueError("parts must be positive integers")
        if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
            raise ValueError("parts must be weakly decreasing")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def rle(self):
        """Run-length form ((m_1, b_1), ..., (m_s, b_s)) with m_1 < ... < m_s."""
        counts = {}
        for x in self.parts:
            counts[x] = counts.get(x, 0) + 1
        return tuple(sorted(counts.items()))

    @staticmethod
    def from_rle(rle) -> "Partition":
        parts = []
        for value, count in sorted(rle, reverse=True):
            parts.extend([value] * count)
        return Partition(tuple(parts))

    def conjugate(self) -> "Partition":
        """Transpose of the diagram, computed on the run-length form.

        With rle m_1^{b_1} ... m_s^{b_s} the conjugate is
        n_1^{l_1} ... n_s^{l_s} where n_j counts the rows of length at
        least m_{s-j+1} and l_j = m_{s-j+1} - m_{s-j} (with m_0 = 0).
        The direct column-count is an oracle in the tests.
        """
        r = self.rle()
        s = len(r)
        if s == 0:
            return Partition(())
        ms = [0] + [v for v, _ in r]
        bs = [b for _, b in r]
        out = []
        for j in range(1, s + 1):
            n_j = sum(bs[s - j :])
            l_j = ms[s - j + 1] - ms[s - j]
            out.append((n_j, l_j))
        return Partition.from_rle(out)

    def to_json(self):
        return list(self.parts)

    @staticmethod
    def from_json(data) -> "Partition":
        return Partition(tuple(int(x) for x in data))


def partitions_of(m: int):
    """All partitions of m, largest part first, in lexicographic order."""
    if m == 0:
        yield Partition(())
        return

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(m, m):
        yield Partition(parts)
