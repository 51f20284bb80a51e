"""Symmetric group representation analysis of the graded spaces.

Characters are handled as exact integer class functions (``CharVector``)
and decomposed against the Murnaghan-Nakayama character table by
orthogonality.  The tensor product of representations corresponds to the
pointwise product of characters, which is how all log-concavity statements
are tested:

* a graded representation V_* is equivariantly log-concave at degree d if
  V_{d-s} (x) V_{d+s} embeds into V_d (x) V_d, i.e. the multiplicity of
  every irreducible in the first character is at most its multiplicity in
  the second;
* the chain form strengthens this to a nested chain of inclusions up to
  the middle degree, realized concretely by the raising operator, so the
  chain is verified twice: once by multiplicity comparison and once by an
  exact rank computation showing the raising blocks below the middle are
  injective.  The two routes must agree.

Also here: the graded character of the coinvariant quotient of the
polynomial ring by the ideal of positive-degree symmetric invariants
(computed from an explicit ideal basis, no Groebner machinery), and the
per-length-of-partition refinement summing f^lambda copies of each
irreducible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import (
    CharVector,
    Partition,
    Perm,
    class_size,
    compositions,
    cycle_type_representative,
    mn_character_value,
    partitions_of,
    perm_on_multiindex,
    perm_on_subset,
    standard_tableaux_count,
    subsets,
)
from .ratlin import RatMatrix, rank, reduced_echelon
from .spaces import DimensionCapError, GradedSpace

GradedCharacter = dict[int, CharVector]

DEFAULT_COINVARIANT_CAP = 5
DEFAULT_LENGTH_REFINEMENT_CAP = 7


class NotACharacterError(ValueError):
    """Raised when a class function has negative or fractional multiplicities."""


def character_of_piece(space: GradedSpace, degree: int) -> CharVector:
    """Trace of one representative per cycle type on a degree piece."""
    n = space.n
    values = []
    for mu in partitions_of(n):
        g = cycle_type_representative(mu)
        tr = space.action(g).block(degree).trace()
        assert isinstance(tr, int)
        values.append(tr)
    return CharVector(n, tuple(values))


def graded_character(space: GradedSpace) -> GradedCharacter:
    return {d: character_of_piece(space, d) for d in space.degrees}


def irr_multiplicities(chi: CharVector) -> dict[Partition, int]:
    """Decompose a character by orthogonality; irreducibles index the result.

    Raises ``NotACharacterError`` when the input is a class function that is
    not a genuine character (some multiplicity negative or non-integral).
    """
    n = chi.n
    parts = partitions_of(n)
    sizes = [class_size(mu) for mu in parts]
    order = factorial(n)
    out: dict[Partition, int] = {}
    for lam in parts:
        total = sum(
            size * v * mn_character_value(lam, mu)
            for size, v, mu in zip(sizes, chi.values, parts)
        )
        mult, rem = divmod(total, order)
        if rem != 0:
            raise NotACharacterError(f"non-integral multiplicity of {lam}")
        if mult < 0:
            raise NotACharacterError(f"negative multiplicity {mult} of {lam}")
        if mult:
            out[lam] = mult
    return out


@dataclass
class SubrepVerdict:
    passed: bool
    slack: dict[Partition, int]

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "slack": {_plabel(p): s for p, s in self.slack.items()},
        }


def _plabel(lam: Partition) -> str:
    return "+".join(map(str, lam)) if lam else "0"


def check_subrepresentation(sub: CharVector, sup: CharVector) -> SubrepVerdict:
    """Componentwise multiplicity comparison: sub embeds into sup."""
    msub = irr_multiplicities(sub)
    msup = irr_multiplicities(sup)
    slack = {}
    for lam in set(msub) | set(msup):
        s = msup.get(lam, 0) - msub.get(lam, 0)
        if s:
            slack[lam] = s
    return SubrepVerdict(all(s >= 0 for s in slack.values()), slack)


@dataclass
class LogConcavityStep:
    degree: int
    passed: bool
    slack: dict[Partition, int]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "pass": self.passed,
            "slack": {_plabel(p): s for p, s in self.slack.items()},
        }


@dataclass
class LogConcavityVerdict:
    passed: bool
    steps: list[LogConcavityStep]

    def to_dict(self) -> dict:
        return {"pass": self.passed, "steps": [s.to_dict() for s in self.steps]}


def verify_equivariant_logconcavity(gc: GradedCharacter) -> LogConcavityVerdict:
    """Check V_{d-s} (x) V_{d+s} embeds in V_d (x) V_d at every interior degree.

    The degrees present must form an arithmetic progression; s is its step.
    """
    degrees = sorted(gc)
    if len(degrees) < 3:
        return LogConcavityVerdict(True, [])
    diffs = {b - a for a, b in zip(degrees, degrees[1:])}
    if len(diffs) != 1:
        raise ValueError(f"degrees {degrees} are not an arithmetic progression")
    s = diffs.pop()
    steps = []
    for d in degrees[1:-1]:
        outer = gc[d - s] * gc[d + s]
        inner = gc[d] * gc[d]
        verdict = check_subrepresentation(outer, inner)
        steps.append(LogConcavityStep(d, verdict.passed, verdict.slack))
    return LogConcavityVerdict(all(st.passed for st in steps), steps)


@dataclass
class ChainStep:
    degree: int
    char_ok: bool
    slack: dict[Partition, int]
    rank: int
    dim: int

    @property
    def injective(self) -> bool:
        return self.rank == self.dim

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "multiplicities_nested": self.char_ok,
            "slack": {_plabel(p): s for p, s in self.slack.items()},
            "raising_rank": self.rank,
            "dim": self.dim,
            "raising_injective": self.injective,
        }


@dataclass
class ChainVerdict:
    passed: bool
    routes_agree: bool
    steps: list[ChainStep]

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "routes_agree": self.routes_agree,
            "steps": [s.to_dict() for s in self.steps],
        }


def verify_strong_chain(space: GradedSpace) -> ChainVerdict:
    """Nested chain of tensor-square inclusions up to the middle degree.

    Route one compares irreducible multiplicities of consecutive degree
    pieces; route two computes the exact rank of the raising block, which
    realizes the inclusion.  Verdicts of the two routes must agree step by
    step for the overall pass.
    """
    chi = {d: character_of_piece(space, d) for d in space.degrees if d <= 0}
    steps = []
    for d in space.degrees:
        if d >= 0 or d + 2 > 0:
            continue
        verdict = check_subrepresentation(chi[d], chi[d + 2])
        r = rank(space.L().block(d))
        steps.append(ChainStep(d, verdict.passed, verdict.slack, r, space.dim(d)))
    agree = all(st.char_ok == st.injective for st in steps)
    passed = agree and all(st.char_ok and st.injective for st in steps)
    return ChainVerdict(passed, agree, steps)


def polynomial_graded_character(n: int, max_degree: int) -> GradedCharacter:
    """Graded character of the polynomial ring in n permuted variables."""
    out = {}
    for d in range(max_degree + 1):
        values = []
        for mu in partitions_of(n):
            g = cycle_type_representative(mu)
            fixed = sum(1 for gamma in compositions(n, d) if perm_on_multiindex(g, gamma) == gamma)
            values.append(fixed)
        out[d] = CharVector(n, tuple(values))
    return out


def exterior_graded_character(n: int) -> GradedCharacter:
    """Graded character of the exterior algebra on n permuted generators."""
    out = {}
    for k in range(n + 1):
        values = []
        for mu in partitions_of(n):
            g = cycle_type_representative(mu)
            tr = 0
            for s in subsets(n, k):
                ns, sign = perm_on_subset(g, s)
                if ns == s:
                    tr += sign
            values.append(tr)
        out[k] = CharVector(n, tuple(values))
    return out


def _perm_inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, v in enumerate(g):
        inv[v - 1] = i + 1
    return tuple(inv)


@lru_cache(maxsize=None)
def _elementary_exponents(n: int, j: int) -> tuple[tuple[int, ...], ...]:
    # exponent vectors of the monomials of the j-th elementary symmetric poly
    out = []
    for s in subsets(n, j):
        e = [0] * n
        for x in s:
            e[x - 1] = 1
        out.append(tuple(e))
    return tuple(out)


def coinvariant_graded_character(n: int, cap: int = DEFAULT_COINVARIANT_CAP) -> GradedCharacter:
    """Graded character of the quotient of the polynomial ring by the ideal
    generated by the elementary symmetric polynomials.

    The degree-d piece of the ideal is spanned by e_j times all monomials of
    degree d-j; its character is the trace on the canonical row-space basis
    of that span, which is well defined because the span is stable under the
    permutation action.  The quotient character is the difference.
    """
    if n > cap:
        raise DimensionCapError(f"coinvariant computation capped at n <= {cap}, got {n}")
    top = n * (n - 1) // 2
    classes = partitions_of(n)
    reps = [cycle_type_representative(mu) for mu in classes]
    out: GradedCharacter = {}
    for d in range(top + 1):
        monos = compositions(n, d)
        index = {mono: i for i, mono in enumerate(monos)}
        rows = []
        for j in range(1, min(n, d) + 1):
            for gamma in compositions(n, d - j):
                row = [0] * len(monos)
                for e in _elementary_exponents(n, j):
                    term = tuple(a + b for a, b in zip(gamma, e))
                    row[index[term]] += 1
                rows.append(row)
        basis = pivots = None
        if rows:
            basis, pivots = reduced_echelon(RatMatrix(rows, cols=len(monos)))
        values = []
        for g in reps:
            fixed = sum(1 for gamma in monos if perm_on_multiindex(g, gamma) == gamma)
            if basis is None:
                values.append(fixed)
                continue
            ginv = _perm_inverse(g)
            ideal_trace = Fraction(0)
            for i, p in enumerate(pivots):
                source = perm_on_multiindex(ginv, monos[p])
                ideal_trace += Fraction(basis[i, index[source]])
            assert ideal_trace.denominator == 1
            values.append(fixed - int(ideal_trace))
        out[d] = CharVector(n, tuple(values))
    return out


def length_refined_characters(n: int, cap: int = DEFAULT_LENGTH_REFINEMENT_CAP) -> GradedCharacter:
    """Characters of the pieces summing f^lambda copies of each irreducible
    with a fixed number of parts; graded by the number of parts."""
    if n > cap:
        raise DimensionCapError(f"length refinement capped at n <= {cap}, got {n}")
    classes = partitions_of(n)
    zero = CharVector(n, (0,) * len(classes))
    out: GradedCharacter = {k: zero for k in range(1, n + 1)}
    for lam in classes:
        k = len(lam)
        contrib = CharVector(
            n, tuple(mn_character_value(lam, mu) for mu in classes)
        ).scaled(standard_tableaux_count(lam))
        out[k] = out[k] + contrib
    return out


def verify_flag_conjecture(n: int, cap: int = DEFAULT_COINVARIANT_CAP) -> LogConcavityVerdict:
    """Equivariant log-concavity of the coinvariant quotient grading."""
    return verify_equivariant_logconcavity(coinvariant_graded_character(n, cap))


def verify_novak_conjecture(n: int, cap: int = DEFAULT_LENGTH_REFINEMENT_CAP) -> LogConcavityVerdict:
    """Equivariant log-concavity of the length-of-partition refinement."""
    return verify_equivariant_logconcavity(length_refined_characters(n, cap))


@dataclass
class CGVerdict:
    k: int
    l: int
    passed: bool
    decomposition: dict[int, int]
    regroup_ok: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "pass": self.passed,
            "decomposition": {str(j): m for j, m in sorted(self.decomposition.items())},
            "regroup_ok": self.regroup_ok,
        }


def _string_weights(k: int) -> list[int]:
    # weights of the irreducible of highest weight k, each multiplicity one
    return list(range(-k, k + 1, 2))


def clebsch_gordan_check(k: int, l: int) -> CGVerdict:
    """Weight bookkeeping for the tensor product of two irreducible strings.

    Checks weights(V(k) (x) V(l)) match the direct sum V(k+l) + V(k+l-2)
    + ... + V(k-l), and (for l >= 1) the regrouping as
    V(k+1) (x) V(l-1) plus V(k-l)."""
    if not k >= l >= 0:
        raise ValueError(f"need k >= l >= 0, got k={k}, l={l}")
    tensor = Counter(a + b for a in _string_weights(k) for b in _string_weights(l))
    direct: Counter = Counter()
    for j in range(k - l, k + l + 1, 2):
        direct.update(_string_weights(j))
    decomposition = {}
    for j in range(k + l, -1, -2):
        mult = tensor.get(j, 0) - tensor.get(j + 2, 0)
        if mult:
            decomposition[j] = mult
    passed = tensor == direct
    if l >= 1:
        regroup = Counter(a + b for a in _string_weights(k + 1) for b in _string_weights(l - 1))
        regroup.update(_string_weights(k - l))
        regroup_ok = tensor == regroup
    else:
        regroup_ok = True
    return CGVerdict(k, l, passed and regroup_ok, decomposition, regroup_ok)


def multiplicity_table(gc: GradedCharacter) -> dict[int, dict[Partition, int]]:
    return {d: irr_multiplicities(chi) for d, chi in sorted(gc.items())}


def multiplicity_table_csv(gc: GradedCharacter) -> str:
    """CSV with one row per degree and one column per partition of n."""
    if not gc:
        return "degree\n"
    n = next(iter(gc.values())).n
    parts = partitions_of(n)
    lines = ["degree," + ",".join(_plabel(p) for p in parts)]
    table = multiplicity_table(gc)
    for d in sorted(table):
        lines.append(str(d) + "," + ",".join(str(table[d].get(p, 0)) for p in parts))
    return "\n".join(lines) + "\n"
