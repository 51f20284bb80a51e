"""Graded spaces with raising and lowering operators, pairings, and
symmetric group actions, in explicit canonical bases.

Three families are built, all with exact integer or rational matrices.

Polynomial bigraded space (case "poly"), parameters n >= 1, m >= 0:
    the degree -m+2i piece has basis d^alpha (x) x^beta with |alpha| = i,
    |beta| = m-i, in lexicographic order on (alpha, beta) as produced by
    ``combinatorics.compositions``.  The raising operator is
    L = sum_k d_k (x) d/dx_k, the lowering operator F = sum_k d/dd_k (x) x_k,
    and the neutral operator h is the difference of the two number
    operators, so h acts on the degree-i piece as i times the identity.
    The pairing contracts d-polynomials against x-polynomials as constant
    coefficient differential operators:
        <d^a (x) x^b, d^b (x) x^a> = a! b!
    and all other pairs of basis vectors pair to zero.

Exterior bigraded space (case "ext"), parameters n >= 1, 0 <= m <= 2n:
    the degree -m+2i piece has basis theta_S (x) xi_T over subsets with
    |S| = i, |T| = m-i, ascending lexicographic on (S, T).  L inserts
    theta_k on the left factor while contracting it on the right,
    F contracts xi_k on the left while inserting it on the right.  The
    pairing is the determinant pairing on each factor, times a global sign
    epsilon(n, m) chosen so the Lefschetz form is positive definite on the
    lowest nonzero degree; theta_S pairs with xi_T as delta_{S,T} in these
    bases, so Gram blocks are signed sub-permutation matrices.

Singly graded exterior space (case "ext-usual"), parameter n >= 1:
    basis theta_S (x) xi_T, degree |S| + |T| - n, so degrees run from -n
    to n with both parities.  L inserts theta_k and xi_k simultaneously,
    F contracts both, and the pairing is the multiplication map into the
    top piece theta_{1..n} (x) xi_{1..n}, normalized to send it to 1.
    This pairing is symmetric on even degrees but skew on odd degrees when
    n is even; it is the standard example where duality and hard Lefschetz
    hold while the definiteness pattern fails.

Operators act on coordinates per degree; a ``DegreeBlockMap`` stores one
matrix per degree of the source.  All matrix entries are exact.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import comb, factorial, prod

from .combinatorics import (
    MultiIndex,
    Perm,
    compositions,
    perm_on_multiindex,
    perm_on_subset,
    subsets,
)
from .ratlin import RatMatrix, Scalar, scalar_str

SCHEMA_VERSION = "1"

DEFAULT_TOTAL_DIM_CAP = 200_000
DEFAULT_DEGREE_DIM_CAP = 5_000

TOTAL_DIM_CAP_ENV = "KAHLERCHECK_TOTAL_DIM_CAP"
DEGREE_DIM_CAP_ENV = "KAHLERCHECK_DEGREE_DIM_CAP"


class Case(str, Enum):
    POLY = "poly"
    EXT = "ext"
    EXT_USUAL = "ext-usual"


class OutOfRangeError(ValueError):
    """Raised for parameters outside the defined range, e.g. ext with m > 2n."""


class DimensionCapError(ValueError):
    """Raised when a requested space exceeds the configured dimension caps."""


@dataclass(frozen=True)
class DimCaps:
    total: int = DEFAULT_TOTAL_DIM_CAP
    per_degree: int = DEFAULT_DEGREE_DIM_CAP

    @classmethod
    def from_env(cls) -> "DimCaps":
        return cls(
            total=int(os.environ.get(TOTAL_DIM_CAP_ENV, DEFAULT_TOTAL_DIM_CAP)),
            per_degree=int(os.environ.get(DEGREE_DIM_CAP_ENV, DEFAULT_DEGREE_DIM_CAP)),
        )


def epsilon_sign(n: int, m: int) -> int:
    """Global pairing sign for the exterior bigraded space."""
    if 0 <= m <= n:
        return (-1) ** (m * (m - 1) // 2)
    if n < m <= 2 * n:
        k = 2 * n - m
        return (-1) ** (k * (k - 1) // 2)
    raise OutOfRangeError(f"ext case needs 0 <= m <= 2n, got n={n}, m={m}")


def shuffle_sign(s: tuple[int, ...], n: int) -> int:
    """Sign of the permutation sorting (s, complement of s) into 1..n."""
    comp = [x for x in range(1, n + 1) if x not in s]
    inversions = sum(1 for a in s for b in comp if a > b)
    return (-1) ** inversions


def complement_subset(s: tuple[int, ...], n: int) -> tuple[int, ...]:
    return tuple(x for x in range(1, n + 1) if x not in s)


def insert_index(s: tuple[int, ...], k: int) -> tuple[int, tuple[int, ...]] | None:
    """Wedge a generator with index k on the left: sign and new subset."""
    if k in s:
        return None
    pos = sum(1 for x in s if x < k)
    return (-1) ** pos, tuple(sorted(s + (k,)))


def remove_index(s: tuple[int, ...], k: int) -> tuple[int, tuple[int, ...]] | None:
    """Contract the generator with index k: sign and new subset."""
    if k not in s:
        return None
    pos = sum(1 for x in s if x < k)
    return (-1) ** pos, tuple(x for x in s if x != k)


def exterior_basis(n: int) -> list[tuple[int, ...]]:
    """All subsets of {1..n} ordered by size then ascending lex."""
    out: list[tuple[int, ...]] = []
    for k in range(n + 1):
        out.extend(subsets(n, k))
    return out


def _exterior_matrix(n: int, images) -> RatMatrix:
    basis = exterior_basis(n)
    index = {s: i for i, s in enumerate(basis)}
    cols = []
    for s in basis:
        col = [0] * len(basis)
        hit = images(s)
        if hit is not None:
            sign, t = hit
            col[index[t]] = sign
        cols.append(col)
    return RatMatrix.from_columns(cols, rows=len(basis))


def exterior_insert_matrix(n: int, k: int) -> RatMatrix:
    """Matrix of left wedge by generator k on the full exterior algebra."""
    return _exterior_matrix(n, lambda s: insert_index(s, k))


def exterior_contract_matrix(n: int, k: int) -> RatMatrix:
    """Matrix of contraction by the dual generator k on the full exterior algebra."""
    return _exterior_matrix(n, lambda s: remove_index(s, k))


# basis vectors: ("poly", alpha, beta) is spelled as the plain pair, same
# for subsets; the case on the owning space disambiguates
PolyVector = tuple[MultiIndex, MultiIndex]
ExtVector = tuple[tuple[int, ...], tuple[int, ...]]
BasisVector = PolyVector


class GradedSpace:
    """A finite dimensional graded vector space with a fixed ordered basis
    per degree.  Operators and pairings are built lazily and cached."""

    def __init__(self, case: Case, n: int, m: int | None,
                 basis: dict[int, list[BasisVector]]):
        self.case = case
        self.n = n
        self.m = m
        self.basis = basis
        self.degrees = sorted(d for d, b in basis.items() if b)
        self._index: dict[int, dict[BasisVector, int]] = {
            d: {bv: i for i, bv in enumerate(vs)} for d, vs in basis.items()
        }
        self._cache: dict[object, object] = {}

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    @property
    def total_dim(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def basis_at(self, degree: int) -> list[BasisVector]:
        return self.basis.get(degree, [])

    def index_at(self, degree: int) -> dict[BasisVector, int]:
        return self._index.get(degree, {})

    def __repr__(self) -> str:
        return f"GradedSpace({self.case.value}, n={self.n}, m={self.m}, dim={self.total_dim})"

    # lazy operator accessors; construction functions live below

    def L(self) -> "DegreeBlockMap":
        if "L" not in self._cache:
            self._cache["L"] = raising_L(self)
        return self._cache["L"]

    def F(self) -> "DegreeBlockMap":
        if "F" not in self._cache:
            self._cache["F"] = lowering_F(self)
        return self._cache["F"]

    def h(self) -> "DegreeBlockMap":
        if "h" not in self._cache:
            self._cache["h"] = grading_h(self)
        return self._cache["h"]

    def gram(self) -> "DegreeBlockMap":
        if "gram" not in self._cache:
            self._cache["gram"] = pairing_gram(self)
        return self._cache["gram"]

    def L_power(self, k: int) -> "DegreeBlockMap":
        key = ("Lpow", k)
        if key not in self._cache:
            if k == 0:
                self._cache[key] = identity_map(self)
            else:
                self._cache[key] = self.L().compose(self.L_power(k - 1))
        return self._cache[key]

    def action(self, g: Perm) -> "DegreeBlockMap":
        key = ("action", g)
        if key not in self._cache:
            self._cache[key] = sn_action(self, g)
        return self._cache[key]


class DegreeBlockMap:
    """A degree-homogeneous linear map (or pairing family) in block form.

    For an operator of degree ``shift`` the block at d maps coordinates of
    the degree-d piece to the degree d+shift piece.  For a pairing family
    (``kind="pairing"``) the block at d is the Gram matrix of degree d
    against degree -d: rows indexed by the basis at d, columns at -d.
    Blocks not stored are zero; ``block`` materializes them with the right
    shape on demand.
    """

    def __init__(self, space: GradedSpace, shift: int,
                 blocks: dict[int, RatMatrix], kind: str = "operator"):
        if kind not in ("operator", "pairing"):
            raise ValueError(f"unknown block map kind {kind!r}")
        if kind == "pairing" and shift != 0:
            raise ValueError("pairing families carry no degree shift")
        self.space = space
        self.shift = shift
        self.kind = kind
        self.blocks = dict(blocks)

    def block(self, degree: int) -> RatMatrix:
        b = self.blocks.get(degree)
        if b is not None:
            return b
        cols = self.space.dim(degree)
        rows = (
            self.space.dim(degree + self.shift)
            if self.kind == "operator"
            else self.space.dim(-degree)
        )
        return RatMatrix.zero(rows, cols)

    def compose(self, other: "DegreeBlockMap") -> "DegreeBlockMap":
        """self after other; both must be operators on the same space."""
        if self.kind != "operator" or other.kind != "operator":
            raise ValueError("compose is defined for operators only")
        if self.space is not other.space:
            raise ValueError("compose across different spaces")
        shift = self.shift + other.shift
        blocks = {}
        for d in self.space.degrees:
            if self.space.dim(d) and self.space.dim(d + shift):
                blocks[d] = self.block(d + other.shift) @ other.block(d)
        return DegreeBlockMap(self.space, shift, blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeBlockMap):
            return NotImplemented
        if self.space is not other.space or self.shift != other.shift or self.kind != other.kind:
            return False
        return all(self.block(d) == other.block(d) for d in self.space.degrees)

    def __sub__(self, other: "DegreeBlockMap") -> "DegreeBlockMap":
        if self.shift != other.shift or self.kind != other.kind:
            raise ValueError("mismatched block maps in subtraction")
        return DegreeBlockMap(
            self.space,
            self.shift,
            {d: self.block(d) - other.block(d) for d in self.space.degrees},
            self.kind,
        )

    def is_zero(self) -> bool:
        return all(self.block(d).is_zero() for d in self.space.degrees)


def identity_map(space: GradedSpace) -> DegreeBlockMap:
    return DegreeBlockMap(
        space, 0, {d: RatMatrix.identity(space.dim(d)) for d in space.degrees}
    )


def _check_caps(dims: list[int], caps: DimCaps) -> None:
    if dims and max(dims) > caps.per_degree:
        raise DimensionCapError(
            f"degree piece of dimension {max(dims)} exceeds cap {caps.per_degree}"
        )
    if sum(dims) > caps.total:
        raise DimensionCapError(
            f"total dimension {sum(dims)} exceeds cap {caps.total}"
        )


def build_space(case: Case | str, n: int, m: int | None = None,
                caps: DimCaps | None = None) -> GradedSpace:
    """Construct one of the three graded spaces in its canonical basis.

    Dimension caps guard against accidentally huge builds; they can be
    overridden explicitly or (in the command line layer) by environment
    variables.  Degrees whose piece is zero dimensional are omitted.
    """
    case = Case(case)
    caps = caps or DimCaps()
    if n < 1:
        raise OutOfRangeError(f"need n >= 1, got n={n}")

    if case is Case.POLY:
        if m is None or m < 0:
            raise OutOfRangeError(f"poly case needs m >= 0, got m={m}")
        dims = [comb(n + i - 1, i) * comb(n + m - i - 1, m - i) for i in range(m + 1)]
        _check_caps(dims, caps)
        basis = {
            -m + 2 * i: [
                (alpha, beta)
                for alpha in compositions(n, i)
                for beta in compositions(n, m - i)
            ]
            for i in range(m + 1)
        }
        return GradedSpace(case, n, m, basis)

    if case is Case.EXT:
        if m is None or m < 0 or m > 2 * n:
            raise OutOfRangeError(f"ext case needs 0 <= m <= 2n, got n={n}, m={m}")
        dims = [comb(n, i) * comb(n, m - i) for i in range(m + 1)]
        _check_caps(dims, caps)
        basis = {}
        for i in range(m + 1):
            vecs = [(s, t) for s in subsets(n, i) for t in subsets(n, m - i)]
            if vecs:
                basis[-m + 2 * i] = vecs
        return GradedSpace(case, n, m, basis)

    if case is Case.EXT_USUAL:
        dims = [comb(2 * n, i) for i in range(2 * n + 1)]
        _check_caps(dims, caps)
        basis = {}
        for i in range(2 * n + 1):
            vecs = [
                (s, t)
                for j in range(i + 1)
                if j <= n and i - j <= n
                for s in subsets(n, j)
                for t in subsets(n, i - j)
            ]
            if vecs:
                basis[-n + i] = vecs
        return GradedSpace(case, n, None, basis)

    raise OutOfRangeError(f"unknown case {case}")


def _operator_from_images(space: GradedSpace, shift: int, images) -> DegreeBlockMap:
    """Assemble per-degree blocks from a function mapping a basis vector to
    a list of (coefficient, target basis vector) terms."""
    blocks = {}
    for d in space.degrees:
        target = space.index_at(d + shift)
        rows = space.dim(d + shift)
        src = space.basis_at(d)
        cols = []
        for bv in src:
            col: list[Scalar] = [0] * rows
            for coeff, tv in images(bv):
                col[target[tv]] += coeff
            cols.append(col)
        blocks[d] = RatMatrix.from_columns(cols, rows=rows)
    return DegreeBlockMap(space, shift, blocks)


def raising_L(space: GradedSpace) -> DegreeBlockMap:
    """The degree +2 raising operator of the space."""
    n = space.n

    if space.case is Case.POLY:

        def images(bv):
            alpha, beta = bv
            out = []
            for k in range(n):
                if beta[k]:
                    a = list(alpha)
                    b = list(beta)
                    a[k] += 1
                    b[k] -= 1
                    out.append((beta[k], (tuple(a), tuple(b))))
            return out

        return _operator_from_images(space, 2, images)

    if space.case is Case.EXT:

        def images(bv):
            s, t = bv
            out = []
            for k in range(1, n + 1):
                ins = insert_index(s, k)
                rem = remove_index(t, k)
                if ins and rem:
                    out.append((ins[0] * rem[0], (ins[1], rem[1])))
            return out

        return _operator_from_images(space, 2, images)

    def images(bv):
        s, t = bv
        out = []
        for k in range(1, n + 1):
            ins_s = insert_index(s, k)
            ins_t = insert_index(t, k)
            if ins_s and ins_t:
                out.append((ins_s[0] * ins_t[0], (ins_s[1], ins_t[1])))
        return out

    return _operator_from_images(space, 2, images)


def lowering_F(space: GradedSpace) -> DegreeBlockMap:
    """The degree -2 lowering operator of the space."""
    n = space.n

    if space.case is Case.POLY:

        def images(bv):
            alpha, beta = bv
            out = []
            for k in range(n):
                if alpha[k]:
                    a = list(alpha)
                    b = list(beta)
                    a[k] -= 1
                    b[k] += 1
                    out.append((alpha[k], (tuple(a), tuple(b))))
            return out

        return _operator_from_images(space, -2, images)

    if space.case is Case.EXT:

        def images(bv):
            s, t = bv
            out = []
            for k in range(1, n + 1):
                rem = remove_index(s, k)
                ins = insert_index(t, k)
                if rem and ins:
                    out.append((rem[0] * ins[0], (rem[1], ins[1])))
            return out

        return _operator_from_images(space, -2, images)

    def images(bv):
        s, t = bv
        out = []
        for k in range(1, n + 1):
            rem_s = remove_index(s, k)
            rem_t = remove_index(t, k)
            if rem_s and rem_t:
                out.append((rem_s[0] * rem_t[0], (rem_s[1], rem_t[1])))
        return out

    return _operator_from_images(space, -2, images)


def grading_h(space: GradedSpace) -> DegreeBlockMap:
    """The neutral operator, built from the defining number operators.

    That it acts on the degree-d piece as d times the identity is verified
    downstream, not assumed here.
    """
    n = space.n

    if space.case is Case.POLY:

        def images(bv):
            alpha, beta = bv
            return [(sum(alpha) - sum(beta), bv)]

    elif space.case is Case.EXT:

        def images(bv):
            s, t = bv
            return [(len(s) - len(t), bv)]

    else:

        def images(bv):
            s, t = bv
            return [(len(s) + len(t) - n, bv)]

    return _operator_from_images(space, 0, images)


def _multi_factorial(alpha: MultiIndex) -> int:
    return prod(factorial(a) for a in alpha)


def pairing_gram(space: GradedSpace) -> DegreeBlockMap:
    """Gram blocks of the graded pairing: block d pairs degree d against -d."""
    n = space.n
    blocks = {}

    if space.case is Case.POLY:
        for d in space.degrees:
            rows = space.basis_at(d)
            colindex = space.index_at(-d)
            block = [[0] * len(colindex) for _ in rows]
            for r, (alpha, beta) in enumerate(rows):
                c = colindex.get((beta, alpha))
                if c is not None:
                    block[r][c] = _multi_factorial(alpha) * _multi_factorial(beta)
            blocks[d] = RatMatrix(block, cols=len(colindex))
        return DegreeBlockMap(space, 0, blocks, kind="pairing")

    if space.case is Case.EXT:
        eps = epsilon_sign(n, space.m)
        for d in space.degrees:
            rows = space.basis_at(d)
            colindex = space.index_at(-d)
            block = [[0] * len(colindex) for _ in rows]
            for r, (s, t) in enumerate(rows):
                c = colindex.get((t, s))
                if c is not None:
                    block[r][c] = eps
            blocks[d] = RatMatrix(block, cols=len(colindex))
        return DegreeBlockMap(space, 0, blocks, kind="pairing")

    for d in space.degrees:
        rows = space.basis_at(d)
        colindex = space.index_at(-d)
        block = [[0] * len(colindex) for _ in rows]
        for r, (s, t) in enumerate(rows):
            c = colindex.get((complement_subset(s, n), complement_subset(t, n)))
            if c is not None:
                block[r][c] = shuffle_sign(s, n) * shuffle_sign(t, n)
        blocks[d] = RatMatrix(block, cols=len(colindex))
    return DegreeBlockMap(space, 0, blocks, kind="pairing")


def sn_action(space: GradedSpace, g: Perm) -> DegreeBlockMap:
    """Block matrices of the permutation g acting on each degree piece.

    The polynomial case permutes monomial pairs; the exterior cases
    relabel subsets and pick up the sign that restores ascending order.
    """
    if len(g) != space.n:
        raise ValueError(f"permutation of {len(g)} letters on a space with n={space.n}")

    if space.case is Case.POLY:

        def images(bv):
            alpha, beta = bv
            return [(1, (perm_on_multiindex(g, alpha), perm_on_multiindex(g, beta)))]

    else:

        def images(bv):
            s, t = bv
            ns, sig_s = perm_on_subset(g, s)
            nt, sig_t = perm_on_subset(g, t)
            return [(sig_s * sig_t, (ns, nt))]

    return _operator_from_images(space, 0, images)


def _label(case: Case, bv: BasisVector) -> dict:
    if case is Case.POLY:
        return {"alpha": list(bv[0]), "beta": list(bv[1])}
    return {"s": list(bv[0]), "t": list(bv[1])}


def space_dump_dict(space: GradedSpace) -> dict:
    """JSON-ready description of the space: basis, operators, Gram blocks.

    Deterministic by construction; all matrix entries are "num/den" strings.
    """

    def blocks_of(bm: DegreeBlockMap) -> list[list[list[str]]]:
        return [
            [[scalar_str(x) for x in row] for row in bm.block(d).to_lists()]
            for d in space.degrees
        ]

    return {
        "schema_version": SCHEMA_VERSION,
        "case": space.case.value,
        "n": space.n,
        "m": space.m,
        "degrees": list(space.degrees),
        "dims": [space.dim(d) for d in space.degrees],
        "basis": [[_label(space.case, bv) for bv in space.basis_at(d)] for d in space.degrees],
        "operators": {
            "L": blocks_of(space.L()),
            "F": blocks_of(space.F()),
            "h": blocks_of(space.h()),
        },
        "gram": blocks_of(space.gram()),
    }
