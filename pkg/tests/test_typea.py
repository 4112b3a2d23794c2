from fractions import Fraction

import pytest

from krfl.typea import (
    Character,
    Partition,
    char_simple,
    dominant_rep,
    fundamental_weight,
    highest_root,
    inner_product,
    pair_h_alpha,
    partitions_of,
    positive_roots,
    root_weight,
    simple_root,
    tensor_decompose,
    to_avec,
    weight_add,
    weight_sub,
    weyl_act,
    weyl_compose,
    weyl_dim,
    weyl_elements,
    weyl_inverse,
    weyl_longest,
    weyl_simple,
    zero_weight,
)

import oracles


def test_inner_product_sl2():
    assert inner_product((1,), (1,)) == Fraction(1, 2)
    a1 = simple_root(1, 1)
    assert a1 == (2,)
    assert inner_product(a1, a1) == 2


def test_roots_and_theta():
    assert simple_root(3, 2) == (-1, 2, -1)
    assert highest_root(3) == (1, 0, 1)
    assert highest_root(1) == (2,)
    for n in (1, 2, 3):
        for a, b in positive_roots(n):
            alpha = root_weight(n, a, b)
            assert inner_product(alpha, alpha) == 2
            # (omega_i, alpha) = 1 exactly when i lies in the interval
            for i in range(1, n + 1):
                expected = 1 if a <= i <= b else 0
                assert inner_product(fundamental_weight(n, i), alpha) == expected


def test_pair_h_alpha_matches_inner_product():
    for n in (1, 2, 3):
        lam = tuple(range(1, n + 1))
        for root in positive_roots(n):
            alpha = root_weight(n, *root)
            assert pair_h_alpha(lam, root) == inner_product(lam, alpha)


def test_weyl_longest_negates_and_flips():
    for n in (1, 2, 3):
        w0 = weyl_longest(n)
        for i in range(1, n + 1):
            assert weyl_act(w0, fundamental_weight(n, i)) == tuple(
                -x for x in fundamental_weight(n, n + 1 - i)
            )


def test_weyl_action_is_orthogonal_and_composes():
    n = 3
    lam = (1, 0, 2)
    mu = (0, 2, 1)
    for w in weyl_elements(n):
        assert inner_product(weyl_act(w, lam), weyl_act(w, mu)) == inner_product(
            lam, mu
        )
        assert weyl_act(weyl_inverse(w), weyl_act(w, lam)) == lam
    s1, s2 = weyl_simple(n, 1), weyl_simple(n, 2)
    assert weyl_act(weyl_compose(s1, s2), lam) == weyl_act(s1, weyl_act(s2, lam))


def test_simple_reflection_formula():
    # s_i(mu) = mu - mu(h_i) alpha_i
    for n in (2, 3):
        mu = tuple((-1) ** k * k for k in range(1, n + 1))
        for i in range(1, n + 1):
            expected = weight_sub(
                mu, tuple(mu[i - 1] * c for c in simple_root(n, i))
            )
            assert weyl_act(weyl_simple(n, i), mu) == expected


def test_dominant_rep():
    assert dominant_rep((-2,)) == (2,)
    assert dominant_rep((1, -3, 2)) == dominant_rep((2, -3, 1)[::-1] + ())
    lam = (2, 0, 1)
    for w in weyl_elements(3):
        assert dominant_rep(weyl_act(w, lam)) == lam


def test_weyl_dim_small():
    for m in range(0, 7):
        assert weyl_dim((m,)) == m + 1
    assert weyl_dim((0, 2, 0)) == 20
    assert weyl_dim((1, 0, 1)) == 15
    assert weyl_dim((0, 1, 0)) == 6
    assert weyl_dim(zero_weight(3)) == 1


def test_char_simple_sl2():
    assert char_simple((2,)) == Character({(2,): 1, (0,): 1, (-2,): 1})
    assert char_simple((0,)) == Character({(0,): 1})


@pytest.mark.parametrize("n", [1, 2, 3])
def test_char_simple_against_tableau_oracle(n):
    coords = range(0, 3) if n < 3 else range(0, 2)
    import itertools

    for lam in itertools.product(coords, repeat=n):
        if sum(lam) == 0 or sum(lam) > 4:
            continue
        ch = char_simple(lam)
        assert ch.mass() == weyl_dim(lam)
        assert ch.is_weyl_invariant()
        for mu, m in ch.mult.items():
            assert oracles.kostka_multiplicity(lam, mu) == m
        # and no weights are missing
        total = sum(
            oracles.kostka_multiplicity(lam, mu) for mu in ch.mult
        )
        assert total == ch.mass()


def test_tensor_decompose_examples():
    assert tensor_decompose((1,), (1,)) == {(2,): 1, (0,): 1}
    got = tensor_decompose((0, 1, 0), (0, 1, 0))
    assert got == {(0, 2, 0): 1, (1, 0, 1): 1, (0, 0, 0): 1}


def test_tensor_decompose_against_lr_oracle():
    cases = [
        ((2,), (3,)),
        ((1, 1), (1, 1)),
        ((2, 0), (0, 1)),
        ((0, 1, 0), (0, 1, 0)),
        ((1, 0, 1), (0, 1, 0)),
        ((1, 0, 0), (0, 0, 2)),
    ]
    for lam, mu in cases:
        assert tensor_decompose(lam, mu) == oracles.lr_tensor_decompose(lam, mu)


def test_tensor_decompose_character_product():
    for lam, mu in [((2,), (2,)), ((1, 1), (2, 0)), ((0, 1, 1), (1, 0, 0))]:
        prod = char_simple(lam) * char_simple(mu)
        rebuilt = Character({})
        for nu, c in tensor_decompose(lam, mu).items():
            rebuilt = rebuilt.sub_scaled(char_simple(nu), -c)
        assert rebuilt == prod


def test_partition_rle_and_conjugate():
    xi = Partition((3, 2, 2))
    assert xi.rle() == ((2, 2), (3, 1))
    assert xi.conjugate() == Partition((3, 3, 1))
    assert Partition.from_rle(((2, 2), (3, 1))) == xi
    assert Partition((2, 1)).conjugate() == Partition((2, 1))
    assert Partition(()).conjugate() == Partition(())


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_conjugate_is_involution_and_matches_columns():
    for m in range(0, 9):
        for xi in partitions_of(m):
            conj = xi.conjugate()
            assert conj.parts == oracles.conjugate_by_columns(xi.parts)
            assert conj.conjugate() == xi


def test_partitions_of_counts():
    assert sum(1 for _ in partitions_of(4)) == 5
    assert sum(1 for _ in partitions_of(6)) == 11
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_avec_roundtrip():
    lam = (1, -2, 3)
    assert to_avec(lam) == (2, 1, 3, 0)
    assert weight_add(lam, zero_weight(3)) == lam
