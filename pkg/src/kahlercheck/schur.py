"""Schur polynomial expansions and product comparisons.

Two independent computational routes are kept separate on purpose:

* the monomial route expands a Schur polynomial in a fixed number of
  variables by enumerating semistandard tableaux and recording contents;
* the structure-constant route computes Littlewood-Richardson coefficients
  by counting lattice-word skew semistandard fillings.

Products of Schur polynomials can be formed along either route, and tests
require the two to agree; verification verdicts (Schur non-negativity of
differences, strip rules, log-concavity along a line of weights) use the
structure constants.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .combinatorics import Partition, is_partition, partitions_of

SchurExpansion = dict[Partition, int]


class OddPartsError(ValueError):
    """Raised when the pairwise sum of two partitions has an odd part."""


class NotDominantError(ValueError):
    """Raised when a weight on a line is not weakly decreasing and non-negative."""


@dataclass
class MonomialPoly:
    """Polynomial as a map from exponent vectors to integer coefficients."""

    nvars: int
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)
    truncated: bool = False  # set when a Schur expansion had more rows than variables

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return MonomialPoly(self.nvars, {k: v for k, v in out.items() if v})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_symmetric(self) -> bool:
        """Invariance under permuting the variables, checked orbit by orbit."""
        seen: dict[tuple[int, ...], int] = {}
        for expo, c in self.coeffs.items():
            key = tuple(sorted(expo, reverse=True))
            if self.coeffs.get(key) != c:
                return False
            seen[key] = seen.get(key, 0) + 1
        for key, hits in seen.items():
            orbit = factorial(self.nvars)
            for mult in Counter(key).values():
                orbit //= factorial(mult)
            if hits != orbit:
                return False
        return True

    def scaled_into(self, total: dict[tuple[int, ...], int], c: int) -> None:
        for e, v in self.coeffs.items():
            total[e] = total.get(e, 0) + c * v


_SSYT_CACHE: dict[tuple[Partition, int], dict[tuple[int, ...], int]] = {}


def _ssyt_contents(lam: Partition, nvars: int) -> dict[tuple[int, ...], int]:
    """Content multiset of semistandard tableaux of shape lam, entries <= nvars."""
    key = (lam, nvars)
    hit = _SSYT_CACHE.get(key)
    if hit is not None:
        return hit
    out: dict[tuple[int, ...], int] = {}
    nrows = len(lam)
    content = [0] * nvars
    rows: list[list[int]] = [[0] * l for l in lam]

    def fill_row(r: int, c: int, minval: int) -> None:
        if c == lam[r]:
            next_row(r + 1)
            return
        lo = minval
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, nvars + 1):
            rows[r][c] = v
            content[v - 1] += 1
            fill_row(r, c + 1, v)
            content[v - 1] -= 1

    def next_row(r: int) -> None:
        if r == nrows:
            k = tuple(content)
            out[k] = out.get(k, 0) + 1
            return
        fill_row(r, 0, 1)

    next_row(0)
    _SSYT_CACHE[key] = out
    return out


def schur_monomial_expansion(lam: Partition, nvars: int) -> MonomialPoly:
    """Schur polynomial in nvars variables as a monomial map.

    A shape with more rows than variables has no fillings; the zero
    polynomial is returned with the ``truncated`` flag set.
    """
    if any(p < 0 for p in lam) or list(lam) != sorted(lam, reverse=True):
        raise NotDominantError(f"{lam} is not a partition")
    lam = tuple(p for p in lam if p)
    if len(lam) > nvars:
        return MonomialPoly(nvars, {}, truncated=True)
    poly = MonomialPoly(nvars, dict(_ssyt_contents(lam, nvars)))
    assert poly.is_symmetric(), f"tableau count not symmetric for {lam}"
    return poly


def _contains(nu: Partition, lam: Partition) -> bool:
    return len(nu) >= len(lam) and all(nu[i] >= lam[i] for i in range(len(lam)))


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: lattice-word fillings of nu/lam
    with content mu.

    Fillings have weakly increasing rows, strictly increasing columns, and
    the reverse reading word (rows top to bottom, each read right to left)
    stays a lattice word.
    """
    if sum(nu) != sum(lam) + sum(mu) or not _contains(nu, lam):
        return 0
    if not mu:
        return 1 if nu == lam else 0
    lmu = len(mu)
    lamp = lam + (0,) * (len(nu) - len(lam))
    cells = [
        (r, c)
        for r in range(len(nu))
        for c in range(nu[r] - 1, lamp[r] - 1, -1)
    ]
    grid: dict[tuple[int, int], int] = {}
    seen = [0] * (lmu + 2)  # seen[v] counts v placed so far in reverse reading order
    count = 0

    def place(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        hi = lmu
        if c + 1 < nu[r] and c + 1 >= lamp[r]:
            hi = min(hi, grid[(r, c + 1)])
        lo = 1
        if r > 0 and c >= lamp[r - 1] and c < nu[r - 1]:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, hi + 1):
            if seen[v] >= mu[v - 1]:
                continue  # content bound
            if v > 1 and seen[v] >= seen[v - 1]:
                continue  # lattice condition
            grid[(r, c)] = v
            seen[v] += 1
            place(idx + 1)
            seen[v] -= 1
            del grid[(r, c)]

    place(0)
    return count


def lr_expand(lam: Partition, mu: Partition, max_length: int | None = None) -> SchurExpansion:
    """Expansion of the product of two Schur functions in the Schur basis.

    ``max_length`` truncates to partitions with at most that many parts,
    matching a computation in that many variables."""
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    total = sum(lam) + sum(mu)
    out: SchurExpansion = {}
    for nu in partitions_of(total):
        if len(nu) > len(lam) + len(mu):
            continue
        if max_length is not None and len(nu) > max_length:
            continue
        if not (_contains(nu, lam) and _contains(nu, mu)):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def expansion_difference(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    """a - b, keeping only nonzero entries."""
    out = dict(a)
    for nu, c in b.items():
        out[nu] = out.get(nu, 0) - c
    return {nu: c for nu, c in out.items() if c}


def _plabel(lam: Partition) -> str:
    return "+".join(map(str, lam)) if lam else "0"


def _expansion_dict(e: SchurExpansion) -> dict[str, int]:
    return {_plabel(nu): c for nu, c in sorted(e.items())}


@dataclass
class PieriVerdict:
    lam: Partition
    k: int
    mode: str
    passed: bool
    predicted: list[Partition]
    computed: SchurExpansion

    def to_dict(self) -> dict:
        return {
            "lam": list(self.lam),
            "k": self.k,
            "mode": self.mode,
            "pass": self.passed,
            "predicted": [list(p) for p in self.predicted],
            "computed": _expansion_dict(self.computed),
        }


def horizontal_strips(lam: Partition, k: int) -> list[Partition]:
    """Partitions obtained by adding k boxes, no two in a column."""
    lam = tuple(p for p in lam if p)
    rows = len(lam) + 1
    out: list[Partition] = []

    def rec(i: int, remaining: int, prev: int, built: tuple[int, ...]) -> None:
        if i == rows:
            if remaining == 0:
                out.append(tuple(p for p in built if p))
            return
        base = lam[i] if i < len(lam) else 0
        upper_bound = base + remaining
        if i > 0:
            upper_bound = min(upper_bound, prev)
        cap = lam[i - 1] if i > 0 else upper_bound  # no two added boxes per column
        for v in range(base, min(upper_bound, cap if i > 0 else upper_bound) + 1):
            rec(i + 1, remaining - (v - base), v, built + (v,))

    rec(0, k, 0, ())
    return sorted(set(out), reverse=True)


def vertical_strips(lam: Partition, k: int) -> list[Partition]:
    """Partitions obtained by adding k boxes, no two in a row."""
    lam = tuple(p for p in lam if p)
    rows = len(lam) + k
    out: list[Partition] = []

    def rec(i: int, remaining: int, prev: int, built: tuple[int, ...]) -> None:
        if i == rows:
            if remaining == 0:
                out.append(tuple(p for p in built if p))
            return
        base = lam[i] if i < len(lam) else 0
        for add in (0, 1):
            v = base + add
            if add > remaining:
                continue
            if i > 0 and v > prev:
                continue
            rec(i + 1, remaining - add, v, built + (v,))

    rec(0, k, 10**9, ())
    return sorted(set(out), reverse=True)


def verify_pieri(lam: Partition, k: int, mode: str = "row") -> PieriVerdict:
    """The product with a one-row (or one-column) shape expands with unit
    coefficients over exactly the predicted strips."""
    lam = tuple(p for p in lam if p)
    if mode == "row":
        predicted = horizontal_strips(lam, k)
        shape = (k,) if k else ()
    elif mode == "column":
        predicted = vertical_strips(lam, k)
        shape = (1,) * k
    else:
        raise ValueError(f"mode must be 'row' or 'column', got {mode!r}")
    computed = lr_expand(lam, shape)
    passed = set(computed) == set(predicted) and all(c == 1 for c in computed.values())
    return PieriVerdict(lam, k, mode, passed, predicted, computed)


@dataclass
class NonnegVerdict:
    lam: Partition
    mu: Partition
    half: Partition
    passed: bool
    difference: SchurExpansion

    def to_dict(self) -> dict:
        return {
            "lam": list(self.lam),
            "mu": list(self.mu),
            "half": list(self.half),
            "pass": self.passed,
            "difference": _expansion_dict(self.difference),
        }


def verify_schur_nonneg(lam: Partition, mu: Partition) -> NonnegVerdict:
    """The square of the halfway shape dominates the product, Schur-wise.

    Requires every part of lam + mu (padded with zeros) to be even; the
    difference expansion must have non-negative coefficients."""
    for shape in (lam, mu):
        if any(p < 0 for p in shape) or list(shape) != sorted(shape, reverse=True):
            raise NotDominantError(f"{shape} is not a partition")
    lam = tuple(p for p in lam if p)
    mu = tuple(p for p in mu if p)
    width = max(len(lam), len(mu), 1)
    pl = lam + (0,) * (width - len(lam))
    pm = mu + (0,) * (width - len(mu))
    if any((a + b) % 2 for a, b in zip(pl, pm)):
        raise OddPartsError(f"{lam} + {mu} has an odd part")
    half = tuple(p for p in ((a + b) // 2 for a, b in zip(pl, pm)) if p)
    square = lr_expand(half, half)
    product = lr_expand(lam, mu)
    diff = expansion_difference(square, product)
    return NonnegVerdict(lam, mu, half, all(c >= 0 for c in diff.values()), diff)


@dataclass
class LineStep:
    index: int
    passed: bool
    difference: SchurExpansion

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "pass": self.passed,
            "difference": _expansion_dict(self.difference),
        }


@dataclass
class LineVerdict:
    weights: list[tuple[int, ...]]
    nvars: int
    passed: bool
    steps: list[LineStep]

    def to_dict(self) -> dict:
        return {
            "weights": [list(w) for w in self.weights],
            "nvars": self.nvars,
            "pass": self.passed,
            "steps": [s.to_dict() for s in self.steps],
        }


def verify_line_logconcavity(start: tuple[int, ...], step: tuple[int, ...], count: int) -> LineVerdict:
    """Log-concavity of Schur products along weights on a line.

    The weights start + j*step for j < count must all be dominant
    (weakly decreasing, non-negative).  Products are compared in n
    variables where n is the common padded length, so expansions are
    truncated to partitions with at most n parts."""
    if count < 1:
        raise ValueError("need count >= 1")
    width = max(len(start), len(step), 1)
    ps = tuple(start) + (0,) * (width - len(start))
    pt = tuple(step) + (0,) * (width - len(step))
    weights = []
    for j in range(count):
        w = tuple(a + j * b for a, b in zip(ps, pt))
        if any(x < 0 for x in w) or any(w[i] < w[i + 1] for i in range(width - 1)):
            raise NotDominantError(f"weight {w} at index {j} is not dominant")
        weights.append(w)
    steps = []
    for j in range(1, count - 1):
        lo = tuple(p for p in weights[j - 1] if p)
        mid = tuple(p for p in weights[j] if p)
        hi = tuple(p for p in weights[j + 1] if p)
        square = lr_expand(mid, mid, max_length=width)
        product = lr_expand(lo, hi, max_length=width)
        diff = expansion_difference(square, product)
        steps.append(LineStep(j, all(c >= 0 for c in diff.values()), diff))
    return LineVerdict(weights, width, all(s.passed for s in steps), steps)
