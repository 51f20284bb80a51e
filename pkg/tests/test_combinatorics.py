"""Partitions, characters, and symmetric group actions.

Standard tableaux counts are cross-checked against a corner-removal
recursion, and the recursive character values against the classical
S4 table and both orthogonality relations.
"""

from functools import lru_cache
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from kahlercheck.combinatorics import (
    CharVector,
    SizeMismatchError,
    adjacent_transposition,
    character_table,
    class_size,
    compositions,
    conjugate_partition,
    cycle_type_representative,
    hook_lengths,
    identity_perm,
    irreducible_character,
    is_partition,
    mn_character,
    partitions_of,
    perm_on_multiindex,
    perm_on_subset,
    standard_tableaux_count,
    subsets,
    zee,
)


@lru_cache(maxsize=None)
def syt_by_corner_removal(lam) -> int:
    """Independent tableau count: strip removable corners recursively."""
    if sum(lam) <= 1:
        return 1
    total = 0
    for i, part in enumerate(lam):
        if i + 1 < len(lam) and lam[i + 1] == part:
            continue  # not a corner
        smaller = tuple(p - (j == i) for j, p in enumerate(lam))
        smaller = tuple(p for p in smaller if p > 0)
        total += syt_by_corner_removal(smaller)
    return total


def cycle_type_of(perm) -> tuple[int, ...]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def compose(g, h):
    """g after h, acting on points 1..n."""
    return tuple(g[h[i] - 1] for i in range(len(g)))


@st.composite
def small_perm(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return tuple(draw(st.permutations(range(1, n + 1))))


def test_composition_order_frozen():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert compositions(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert compositions(1, 4) == [(4,)]


def test_partition_order_frozen():
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions_of(0) == [()]
    assert partitions_of(4, max_part=2) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n,m", [(1, 0), (1, 5), (2, 3), (3, 4), (4, 2)])
def test_composition_count(n, m):
    assert len(compositions(n, m)) == comb(n + m - 1, m)


@pytest.mark.parametrize("n,k", [(3, 0), (3, 2), (5, 3), (6, 6)])
def test_subset_count_and_order(n, k):
    ss = subsets(n, k)
    assert len(ss) == comb(n, k)
    assert ss == sorted(ss)
    assert all(s == tuple(sorted(s)) for s in ss)


def test_is_partition():
    assert is_partition((3, 1, 1))
    assert is_partition(())
    assert not is_partition((1, 2))
    assert not is_partition((2, 0))


def test_conjugate():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition((2, 2)) == (2, 2)
    assert conjugate_partition(()) == ()


def test_hooks_frozen():
    assert hook_lengths((3, 1)) == [[4, 2, 1], [1]]
    assert standard_tableaux_count((3, 1)) == 3
    assert standard_tableaux_count((2, 2)) == 2
    assert standard_tableaux_count((5,)) == 1


def test_hook_formula_matches_corner_recursion():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert standard_tableaux_count(lam) == syt_by_corner_removal(lam)


def test_dimension_squares_sum_to_group_order():
    for n in range(1, 9):
        assert sum(standard_tableaux_count(l) ** 2 for l in partitions_of(n)) == factorial(n)


def test_zee_and_class_sizes():
    assert zee((1, 1, 1)) == 6
    assert zee((2, 1)) == 2
    assert class_size((2, 1)) == 3
    for n in range(1, 8):
        assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


def test_character_values_hand_checked():
    assert mn_character((1, 1, 1), (2, 1)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (2, 1)) == 0


def test_s4_table_frozen():
    # rows: partitions of 4 in list order; columns: class types in the same order
    classical = {
        (4,): (1, 1, 1, 1, 1),
        (3, 1): (-1, 0, -1, 1, 3),
        (2, 2): (0, -1, 2, 0, 2),
        (2, 1, 1): (1, 0, -1, -1, 3),
        (1, 1, 1, 1): (-1, 1, 1, -1, 1),
    }
    mus = partitions_of(4)
    table = character_table(4)
    for lam, expected in classical.items():
        assert tuple(table[(lam, mu)] for mu in mus) == expected


def test_trivial_and_sign_rows():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert mn_character((n,), mu) == 1
            assert mn_character(tuple([1] * n), mu) == (-1) ** (n - len(mu))


def test_conjugate_twist():
    # tensoring with sign conjugates the shape
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                sign = (-1) ** (n - len(mu))
                assert mn_character(conjugate_partition(lam), mu) == sign * mn_character(lam, mu)


def test_row_orthogonality():
    for n in range(1, 8):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                dot = sum(
                    class_size(mu) * mn_character(a, mu) * mn_character(b, mu)
                    for mu in parts
                )
                assert dot == (factorial(n) if a == b else 0)


def test_column_orthogonality():
    n = 6
    parts = partitions_of(n)
    for mu in parts:
        for nu in parts:
            dot = sum(mn_character(lam, mu) * mn_character(lam, nu) for lam in parts)
            expected = zee(mu) if mu == nu else 0
            assert dot == expected


def test_cycle_type_representative():
    for n in range(1, 7):
        for mu in partitions_of(n):
            assert cycle_type_of(cycle_type_representative(mu)) == mu


def test_identity_and_transpositions():
    assert identity_perm(3) == (1, 2, 3)
    assert adjacent_transposition(4, 2) == (1, 3, 2, 4)
    assert cycle_type_of(adjacent_transposition(5, 1)) == (2, 1, 1, 1)


@given(small_perm(), small_perm())
def test_multiindex_action_is_an_action(g, h):
    if len(g) != len(h):
        return
    alpha = tuple(range(len(g)))
    assert perm_on_multiindex(g, perm_on_multiindex(h, alpha)) == perm_on_multiindex(
        compose(g, h), alpha
    )


@given(small_perm())
def test_multiindex_action_permutes(g):
    alpha = tuple(range(len(g)))
    assert sorted(perm_on_multiindex(g, alpha)) == sorted(alpha)
    assert perm_on_multiindex(identity_perm(len(g)), alpha) == alpha


@given(small_perm(), st.data())
def test_subset_action_signs_multiply(g, data):
    n = len(g)
    k = data.draw(st.integers(min_value=0, max_value=n))
    s = tuple(sorted(data.draw(st.permutations(range(1, n + 1)))[:k]))
    image, sign = perm_on_subset(g, s)
    assert image == tuple(sorted(g[x - 1] for x in s))
    assert sign in (-1, 1)
    # acting twice composes with multiplied signs
    image2, sign2 = perm_on_subset(g, image)
    composed_image, composed_sign = perm_on_subset(compose(g, g), s)
    assert composed_image == image2
    assert composed_sign == sign * sign2


def test_subset_action_character_is_exterior_power():
    # Signed fixed-subset count over size-k subsets is the character of the
    # k-th exterior power.  Independent route: eigenvalues of a permutation
    # matrix are roots of unity per cycle, and prod over a c-cycle of
    # (1 + t w) with w ranging over c-th roots of unity is 1 - (-t)^c, so
    # e_k(eigenvalues) = [t^k] prod_c (1 - (-t)^c).
    for n in range(1, 6):
        for mu in partitions_of(n):
            g = cycle_type_representative(mu)
            poly = [1]
            for c in mu:
                nxt = poly + [0] * c
                for i, a in enumerate(poly):
                    nxt[i + c] -= (-1) ** c * a
                poly = nxt
            for k in range(n + 1):
                tr = 0
                for s in subsets(n, k):
                    image, sign = perm_on_subset(g, s)
                    if image == s:
                        tr += sign
                assert tr == poly[k], (mu, k)


def test_char_vector_algebra():
    triv = irreducible_character(3, (3,))
    sign = irreducible_character(3, (1, 1, 1))
    std = irreducible_character(3, (2, 1))
    assert triv.dim == 1 and sign.dim == 1 and std.dim == 2
    assert (std * sign).values == std.values  # conjugate of (2,1) is itself
    assert (triv + sign).dim == 2
    assert std.value_at((3,)) == -1
    assert std.scaled(2).dim == 4


def test_char_vector_length_checked():
    with pytest.raises(ValueError):
        CharVector(3, (1, 1))


def test_character_size_mismatch_rejected():
    with pytest.raises(SizeMismatchError):
        mn_character((2, 1), (2, 2))


def test_identity_class_value_is_tableau_count():
    for n in range(1, 8):
        e = (1,) * n
        for lam in partitions_of(n):
            assert mn_character(lam, e) == standard_tableaux_count(lam)
