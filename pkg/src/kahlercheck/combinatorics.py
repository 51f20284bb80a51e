"""Indexing combinatorics and symmetric group characters.

Canonical orders used everywhere downstream (basis labels, serialization,
character vectors) are fixed here:

* ``compositions(n, m)``: multi-indices with n parts summing to m, listed
  with the leading entry largest first, so (2,0), (1,1), (0,2) for n = m = 2.
* ``subsets(n, k)``: k-subsets of {1..n} in ascending lexicographic order.
* ``partitions_of(n)``: reverse lexicographic, so (n) first and (1,...,1)
  last.  Conjugacy classes of the symmetric group are indexed by cycle type
  in this order.

Characters of irreducible symmetric group representations are computed by
the Murnaghan-Nakayama rule on beta-sets, with the full character table per
n memoized on first use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

Partition = tuple[int, ...]
MultiIndex = tuple[int, ...]
Perm = tuple[int, ...]  # perm[i] is the image of i+1; entries are 1..n


class SizeMismatchError(ValueError):
    """Raised when a character is requested for |shape| != |cycle type|."""


def compositions(n: int, m: int) -> list[MultiIndex]:
    """All weak compositions of m into n parts, leading part largest first."""
    if n == 0:
        return [()] if m == 0 else []
    if n == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        for rest in compositions(n - 1, m - first):
            out.append((first,) + rest)
    return out


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """Ascending k-subsets of {1..n} in lexicographic order."""
    from itertools import combinations

    return list(combinations(range(1, n + 1), k))


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def is_partition(lam: tuple[int, ...]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)) and all(p > 0 for p in lam)


def conjugate_partition(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate_partition(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    n = sum(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    count, rem = divmod(factorial(n), hooks)
    assert rem == 0
    return count


def zee(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    return prod(i**k * factorial(k) for i, k in mult.items())


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // zee(mu)


def _beta_set(lam: Partition) -> tuple[int, ...]:
    l = len(lam)
    return tuple(lam[i] + (l - 1 - i) for i in range(l))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    beta = tuple(sorted(beta, reverse=True))
    l = len(beta)
    lam = tuple(beta[i] - (l - 1 - i) for i in range(l))
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def mn_character_value(lam: Partition, mu: Partition) -> int:
    """Character of the irreducible indexed by lam at cycle type mu.

    Murnaghan-Nakayama on beta-sets: removing a border strip of length k
    is subtracting k from one beta number so the set stays distinct and
    non-negative; the strip height is the number of beta numbers jumped.
    """
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        jumped = sum(1 for c in beta if nb < c < b)
        newbeta = tuple(x for x in beta if x != b) + (nb,)
        total += (-1) ** jumped * mn_character_value(_partition_from_beta(newbeta), rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    return mn_character_value(tuple(lam), tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """Full character table of the symmetric group on n letters."""
    parts = partitions_of(n)
    return {(lam, mu): mn_character_value(lam, mu) for lam in parts for mu in parts}


@dataclass(frozen=True)
class CharVector:
    """Class function values, indexed by partitions_of(n) order."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        expected = len(partitions_of(self.n))
        if len(self.values) != expected:
            raise SizeMismatchError(
                f"character vector for n={self.n} needs {expected} values, got {len(self.values)}"
            )

    def value_at(self, mu: Partition) -> int:
        return self.values[partitions_of(self.n).index(tuple(mu))]

    @property
    def dim(self) -> int:
        # value at the identity class (1,...,1), which sits last in order
        return self.values[-1]

    def __mul__(self, other: "CharVector") -> "CharVector":
        # pointwise product: character of the tensor product
        if self.n != other.n:
            raise SizeMismatchError("character product across different n")
        return CharVector(self.n, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: "CharVector") -> "CharVector":
        if self.n != other.n:
            raise SizeMismatchError("character sum across different n")
        return CharVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, c: int) -> "CharVector":
        return CharVector(self.n, tuple(c * v for v in self.values))


def irreducible_character(n: int, lam: Partition) -> CharVector:
    return CharVector(n, tuple(mn_character_value(tuple(lam), mu) for mu in partitions_of(n)))


def cycle_type_representative(mu: Partition) -> Perm:
    """A permutation with the given cycle type: consecutive blocks cycled."""
    n = sum(mu)
    img = list(range(1, n + 1))
    start = 0
    for part in mu:
        for off in range(part):
            img[start + off] = start + 1 + (off + 1) % part
        start += part
    return tuple(img)


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def adjacent_transposition(n: int, i: int) -> Perm:
    """The transposition swapping i and i+1, 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"adjacent transposition index {i} out of range for n={n}")
    img = list(range(1, n + 1))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


def perm_on_multiindex(g: Perm, alpha: MultiIndex) -> MultiIndex:
    # exponent of variable g(i) in the image equals the exponent of i
    out = [0] * len(alpha)
    for i, a in enumerate(alpha):
        out[g[i] - 1] = a
    return tuple(out)


def perm_on_subset(g: Perm, s: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Image subset in ascending order together with the reordering sign."""
    image = [g[x - 1] for x in s]
    sign = 1
    # parity of the permutation sorting the image list ascending
    arr = list(image)
    for i in range(len(arr)):
        for j in range(i + 1, len(arr)):
            if arr[i] > arr[j]:
                sign = -sign
    return tuple(sorted(image)), sign
