"""Cyclic current-algebra modules of Demazure type.

Three constructions, all concrete and exact:

  local_weyl(n, lam)    graded fusion of one fundamental evaluation
                        module per column of lam, at distinct points
  rect_demazure(n, l, lam)
                        level-l module with highest weight lam = l*mu,
                        realized as the closure of the l-fold tensor of
                        generators inside local_weyl(mu)^{tensor l}
  gen_demazure(n, i, xi)
                        closure of the joint generator in an ascending
                        tensor of rectangular modules read off the
                        run-length blocks of the partition xi

plus relation checkers that apply the expected defining relations to a
claimed generator and report every violation.  The checkers establish
the necessary direction only; completeness of a presentation is always
certified elsewhere by a dimension or character match against an
independently built module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .modules import (
    GtModule,
    apply_word,
    cyclic_submodule,
    default_points,
    fusion_of_simples,
    tensor_modules,
)
from .typea import (
    Partition,
    fundamental_weight,
    is_dominant,
    positive_roots,
    weight_scale,
    zero_weight,
)

ONE = Fraction(1)


def local_weyl(n: int, lam, points=None) -> GtModule:
    """Graded cyclic module with highest weight lam and the largest
    dimension among those, prod_i binom(n+1, i)^{lam_i} in type A.

    Built as the fusion of one fundamental evaluation module per unit
    of each coordinate of lam, at pairwise distinct points.
    """
    lam = tuple(int(c) for c in lam)
    if len(lam) != n or not is_dominant(lam):
        raise ValueError("weight must be dominant of matching rank")
    if points is not None:
        points = tuple(Fraction(z) for z in points)
    return _local_weyl(n, lam, points)


@lru_cache(maxsize=None)
def _local_weyl(n, lam, points):
    lams = []
    for i in range(1, n + 1):
        lams.extend([fundamental_weight(n, i)] * lam[i - 1])
    if not lams:
        lams = [zero_weight(n)]
    if points is None:
        points = default_points(len(lams))
    return fusion_of_simples(n, lams, points)


def rect_demazure(n: int, ell: int, lam, points=None) -> GtModule:
    """Level-ell Demazure-type module with highest weight lam.

    lam must be coordinatewise divisible by ell; with mu = lam/ell the
    module is the closure of the ell-fold tensor of generators inside
    local_weyl(mu)^{tensor ell}.
    """
    if ell < 1:
        raise ValueError("level must be positive")
    lam = tuple(int(c) for c in lam)
    if any(c % ell for c in lam):
        raise ValueError("weight must be divisible by the level")
    if points is not None:
        points = tuple(Fraction(z) for z in points)
    return _rect_demazure(n, ell, lam, points)


@lru_cache(maxsize=None)
def _rect_demazure(n, ell, lam, points):
    mu = tuple(c // ell for c in lam)
    base = local_weyl(n, mu, points)
    if ell == 1:
        return base
    amb = tensor_modules([base] * ell)
    return cyclic_submodule(amb, {amb.cyclic_index: ONE})


def gen_demazure(n: int, i: int, xi, descending=False) -> GtModule:
    """Closure of the joint generator in a tensor of rectangular modules.

    The run-length blocks of xi, ascending in part size, give one
    factor each: a block of b parts of size m contributes the level-b
    module with highest weight b*m*omega_i.  descending=True reverses
    the tensor order; the result is only guaranteed to match at the
    level of graded characters.
    """
    xi = xi if isinstance(xi, Partition) else Partition(xi)
    if not xi.parts:
        raise ValueError("partition must be nonempty")
    omega = fundamental_weight(n, i)
    blocks = list(xi.rle())
    if descending:
        blocks.reverse()
    factors = [
        rect_demazure(n, b, weight_scale(b * m, omega)) for m, b in blocks
    ]
    if len(factors) == 1:
        return factors[0]
    amb = tensor_modules(factors)
    return cyclic_submodule(amb, {amb.cyclic_index: ONE})


def level_exponents(ell: int, pairing: int):
    """The unique (s, m) with pairing = (s-1)*ell + m and 0 < m <= ell."""
    if pairing < 1:
        raise ValueError("pairing must be positive")
    s = -(-pairing // ell)
    return s, pairing - (s - 1) * ell


def check_demazure_relations(m: GtModule, vec, ell: int, lam) -> list:
    """Apply the defining relations of the level-ell module with highest
    weight lam to vec; returns one message per violated relation.

    Per positive root a, with lam(h_a) = (s-1)*ell + mm, 0 < mm <= ell:
    the lowering generator at t-power s kills vec, and the (mm+1)-st
    power of the one at t-power s-1 kills vec.  Roots with lam(h_a) = 0
    sit outside that parametrization; for them only the t-positive part
    of the lowering family is required to vanish.
    """
    report = []
    lam = tuple(int(c) for c in lam)
    if m.weight_of(vec) != lam:
        return ["generator does not have the claimed weight"]
    if m.graded and m.degree_of(vec) != 0:
        return ["generator is not in degree zero"]
    kmax = m.trunc
    for i in range(1, m.rank + 1):
        for k in range(kmax + 1):
            if apply_word(m, vec, [("e", i, k, 1)]):
                report.append(f"raising node {i} t^{k} does not kill the generator")
        for k in range(1, kmax + 1):
            if apply_word(m, vec, [("h", i, k, 1)]):
                report.append(f"torus node {i} t^{k} does not kill the generator")
        got = apply_word(m, vec, [("h", i, 0, 1)])
        want = {j: lam[i - 1] * c for j, c in vec.items()} if lam[i - 1] else {}
        if got != want:
            report.append(f"torus eigenvalue at node {i} is wrong")
    for a, b in positive_roots(m.rank):
        pairing = sum(lam[a - 1 : b])
        if pairing == 0:
            for k in range(1, kmax + 1):
                if apply_word(m, vec, [("f", (a, b), k, 1)]):
                    report.append(
                        f"lowering root ({a},{b}) t^{k} does not kill the generator"
                    )
            continue
        s, mm = level_exponents(ell, pairing)
        if apply_word(m, vec, [("f", (a, b), s, 1)]):
            report.append(f"lowering root ({a},{b}) t^{s} does not kill the generator")
        if apply_word(m, vec, [("f", (a, b), s - 1, mm + 1)]):
            report.append(
                f"power {mm + 1} of lowering root ({a},{b}) t^{s - 1} is nonzero"
            )
    return report


def _tail_sums(parts):
    """tail[j] = parts[j] + parts[j+1] + ... for the 0-indexed list."""
    tail = [0] * (len(parts) + 1)
    for j in range(len(parts) - 1, -1, -1):
        tail[j] = tail[j + 1] + parts[j]
    return tail


def gradrel_required(r: int, s: int, parts) -> bool:
    """Whether the pair (r, s) belongs to the defining family for the
    descending part list: some window index k in 1..len(parts) has
    r + s >= 1 + k*r + (parts[k] + parts[k+1] + ...)."""
    tail = _tail_sums(tuple(parts))
    return any(
        r + s >= 1 + k * r + tail[k] for k in range(1, len(parts) + 1)
    )


def check_gradrel_relations(m: GtModule, vec, i: int, xi) -> list:
    """Apply the graded defining relations of the fusion of one-node
    simples with part sizes xi to vec; returns violations.

    Families: every raising root generator at every stored t-power
    kills vec; lowering roots not containing node i are killed at every
    t-power; lowering roots containing i vanish at power |xi| + 1; and
    for each such root the mixed words (raise at t)^s (lower)^{r+s}
    vanish exactly on the pairs selected by gradrel_required.
    """
    xi = xi if isinstance(xi, Partition) else Partition(xi)
    parts = xi.parts
    report = []
    total = sum(parts)
    kmax = m.trunc
    for a, b in positive_roots(m.rank):
        for k in range(kmax + 1):
            if apply_word(m, vec, [("e", (a, b), k, 1)]):
                report.append(
                    f"raising root ({a},{b}) t^{k} does not kill the generator"
                )
        if a <= i <= b:
            if apply_word(m, vec, [("f", (a, b), 0, total + 1)]):
                report.append(
                    f"power {total + 1} of lowering root ({a},{b}) is nonzero"
                )
            bound = total + 1
            for r in range(1, bound + 1):
                for s in range(1, bound + 1):
                    if not gradrel_required(r, s, parts):
                        continue
                    w = apply_word(
                        m, vec, [("f", (a, b), 0, r + s), ("e", (a, b), 1, s)]
                    )
                    if w:
                        report.append(
                            f"mixed relation (r={r}, s={s}) at root ({a},{b}) is nonzero"
                        )
        else:
            for k in range(kmax + 1):
                if apply_word(m, vec, [("f", (a, b), k, 1)]):
                    report.append(
                        f"lowering root ({a},{b}) t^{k} does not kill the generator"
                    )
    return report


def find_nonrelation_witness(m: GtModule, vec, i: int, xi):
    """Smallest out-of-family pair that acts nonzero, or None.

    Scans pairs (r, s) with r + s <= |xi| that gradrel_required leaves
    out and returns (root, r, s) for the first one whose mixed word
    does not kill vec.  A witness shows the required family is sharp.
    """
    xi = xi if isinstance(xi, Partition) else Partition(xi)
    parts = xi.parts
    total = sum(parts)
    for a, b in positive_roots(m.rank):
        if not a <= i <= b:
            continue
        for q in range(2, total + 1):
            for s in range(1, q):
                r = q - s
                if gradrel_required(r, s, parts):
                    continue
                w = apply_word(
                    m, vec, [("f", (a, b), 0, r + s), ("e", (a, b), 1, s)]
                )
                if w:
                    return (a, b), r, s
    return None
