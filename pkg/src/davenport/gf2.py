"""Bit-packed linear algebra over the two-element field.

Group elements of C_2^r double as parity-check columns: a subset of columns
XORs to zero exactly when the corresponding coordinates support a codeword,
so the minimum distance of the checked code equals the minimum size of a
zero-sum column subset. Everything here stores vectors as Python ints, one
int per column, bit i = row i; Python ints are arbitrary precision, so no
width cap beyond dim >= 1 is imposed.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ComputationError, ParameterError, SearchBudgetError

INFINITE_DISTANCE = math.inf

DEFAULT_MAX_CODEWORDS = 1 << 28
DEFAULT_MAX_SUBSETS = 1 << 24


@dataclass(frozen=True)
class GroupElement:
    """Element of C_2^dim as a bitmask; addition is XOR, every element is an involution."""

    bits: int
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ParameterError(f"dimension must be >= 1, got {self.dim}")
        if not 0 <= self.bits < (1 << self.dim):
            raise ParameterError(f"bits {self.bits} out of range for dimension {self.dim}")

    @classmethod
    def unit(cls, i: int, dim: int) -> "GroupElement":
        if not 0 <= i < dim:
            raise ParameterError(f"unit index {i} out of range for dimension {dim}")
        return cls(1 << i, dim)

    @classmethod
    def zero(cls, dim: int) -> "GroupElement":
        return cls(0, dim)

    def __xor__(self, other: "GroupElement") -> "GroupElement":
        if self.dim != other.dim:
            raise ParameterError("cannot add elements of different dimensions")
        return GroupElement(self.bits ^ other.bits, self.dim)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def weight(self) -> int:
        return self.bits.bit_count()


def _rank_of_ints(vectors: Iterable[int]) -> int:
    # XOR basis kept sorted by descending leading bit so one reduction pass suffices
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def _nullspace_basis(cols: Sequence[int], nrows: int) -> list[int]:
    """Basis of {x : sum of cols[j] over bits j of x is 0}, as len(cols)-bit masks."""
    n = len(cols)
    reduced: list[int] = []
    pivot_cols: list[int] = []
    for i in range(nrows):
        row = 0
        for j, c in enumerate(cols):
            row |= ((c >> i) & 1) << j
        for pc, pr in zip(pivot_cols, reduced):
            if (row >> pc) & 1:
                row ^= pr
        if not row:
            continue
        pc = row.bit_length() - 1
        for k, pr in enumerate(reduced):
            if (pr >> pc) & 1:
                reduced[k] = pr ^ row
        reduced.append(row)
        pivot_cols.append(pc)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        x = 1 << f
        for pc, pr in zip(pivot_cols, reduced):
            if (pr >> f) & 1:
                x |= 1 << pc
        basis.append(x)
    return basis


def _min_weight_in_span(basis: Sequence[int], max_codewords: int) -> int | None:
    """Minimum Hamming weight over non-zero combinations, by Gray-code walk."""
    k = len(basis)
    if k == 0:
        return None
    if (1 << k) > max_codewords:
        raise SearchBudgetError(
            f"null space has 2^{k} words, over the {max_codewords} codeword limit"
        )
    best: int | None = None
    word = 0
    prev = 0
    for t in range(1, 1 << k):
        gray = t ^ (t >> 1)
        flipped = gray ^ prev
        word ^= basis[flipped.bit_length() - 1]
        prev = gray
        w = word.bit_count()
        if best is None or w < best:
            best = w
            if best == 1:
                break
    return best


def _min_zero_sum_subset(cols: Sequence[int], limit: int, max_subsets: int) -> int | None:
    """Smallest w <= limit with a w-subset of cols XOR-ing to zero, else None.

    Plain nested enumeration for w <= 4, meet-in-the-middle above that.
    Raises SearchBudgetError before starting any cardinality whose subset
    count would exceed the remaining budget.
    """
    n = len(cols)
    remaining = max_subsets
    for w in range(1, min(n, limit) + 1):
        if w <= 4:
            need = math.comb(n, w)
            if need > remaining:
                raise SearchBudgetError(
                    f"cardinality-{w} search needs {need} subsets, budget {remaining} left"
                )
            remaining -= need
            for combo in itertools.combinations(cols, w):
                acc = 0
                for c in combo:
                    acc ^= c
                if acc == 0:
                    return w
        else:
            a = w // 2
            b = w - a
            need = math.comb(n, a) + math.comb(n, b)
            if need > remaining:
                raise SearchBudgetError(
                    f"cardinality-{w} search needs {need} subsets, budget {remaining} left"
                )
            remaining -= need
            half: dict[int, list[int]] = {}
            for idx in itertools.combinations(range(n), a):
                acc = 0
                mask = 0
                for i in idx:
                    acc ^= cols[i]
                    mask |= 1 << i
                half.setdefault(acc, []).append(mask)
            for idx in itertools.combinations(range(n), b):
                acc = 0
                mask = 0
                for i in idx:
                    acc ^= cols[i]
                    mask |= 1 << i
                for other in half.get(acc, ()):
                    if other & mask == 0:
                        return w
    return None


@dataclass(frozen=True)
class GF2Matrix:
    """r x n matrix over GF(2), stored column-major as n bitmask ints."""

    nrows: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 1:
            raise ParameterError(f"matrix needs at least one row, got {self.nrows}")
        for c in self.cols:
            if not 0 <= c < (1 << self.nrows):
                raise ParameterError(f"column {c} out of range for {self.nrows} rows")

    @classmethod
    def from_columns(cls, columns: Sequence[GroupElement]) -> "GF2Matrix":
        if not columns:
            raise ParameterError("need at least one column element")
        dim = columns[0].dim
        for e in columns:
            if e.dim != dim:
                raise ParameterError("columns have mixed dimensions")
        return cls(dim, tuple(e.bits for e in columns))

    @classmethod
    def identity(cls, r: int) -> "GF2Matrix":
        return cls(r, tuple(1 << i for i in range(r)))

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @property
    def columns(self) -> tuple[GroupElement, ...]:
        return tuple(GroupElement(c, self.nrows) for c in self.cols)

    def rank(self) -> int:
        return _rank_of_ints(self.cols)

    def transpose(self) -> "GF2Matrix":
        if self.ncols < 1:
            raise ParameterError("cannot transpose a matrix with no columns")
        new_cols = []
        for i in range(self.nrows):
            col = 0
            for j, c in enumerate(self.cols):
                col |= ((c >> i) & 1) << j
            new_cols.append(col)
        return GF2Matrix(self.ncols, tuple(new_cols))

    def dump_rows(self) -> list[str]:
        """Debug form: one string per row, '0'/'1' characters, no separators."""
        return [
            "".join(str((c >> i) & 1) for c in self.cols)
            for i in range(self.nrows)
        ]


@dataclass(frozen=True)
class CodeParams:
    """Parameters [n, k, d] of the binary code a parity-check matrix cuts out."""

    length: int
    dimension: int
    distance: int | float

    def __post_init__(self) -> None:
        if not 0 <= self.dimension <= self.length:
            raise ParameterError("need 0 <= dimension <= length")
        if self.dimension >= 1 and self.distance < 1:
            raise ParameterError("a non-trivial code has distance >= 1")

    def as_dict(self) -> dict:
        d = self.distance
        return {
            "length": self.length,
            "dimension": self.dimension,
            "distance": None if d == INFINITE_DISTANCE else int(d),
        }


def rank(m: GF2Matrix) -> int:
    return m.rank()


def min_distance(
    m: GF2Matrix,
    *,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> int | float:
    """Minimum weight of a non-zero word in the code checked by m.

    Null-space enumeration when the code dimension allows it, otherwise an
    increasing-cardinality search for a zero-sum column subset; the two agree
    wherever both run. INFINITE_DISTANCE for the zero code.
    """
    n = m.ncols
    if n == 0:
        return INFINITE_DISTANCE
    r = m.rank()
    dim = n - r
    if dim == 0:
        return INFINITE_DISTANCE
    if dim <= 28 and (1 << dim) <= max_codewords:
        basis = _nullspace_basis(m.cols, m.nrows)
        best = _min_weight_in_span(basis, max_codewords)
        if best is None:
            return INFINITE_DISTANCE
        return best
    # dependency of size <= rank + 1 exists, so the bounded search is complete
    found = _min_zero_sum_subset(m.cols, r + 1, max_subsets)
    if found is None:
        raise ComputationError("dependent columns exist but the bounded search missed them")
    return found


def min_zero_sum_length(
    columns: Sequence[GroupElement],
    *,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> int | float:
    """Length of the shortest non-empty zero-sum sub-multiset of columns.

    INFINITE_DISTANCE when the columns are linearly independent.
    """
    if not columns:
        return INFINITE_DISTANCE
    dim = columns[0].dim
    for e in columns:
        if e.dim != dim:
            raise ParameterError("columns have mixed dimensions")
    cols = [e.bits for e in columns]
    r = _rank_of_ints(cols)
    if r == len(cols):
        return INFINITE_DISTANCE
    found = _min_zero_sum_subset(cols, r + 1, max_subsets)
    if found is None:
        raise ComputationError("dependent columns exist but the bounded search missed them")
    return found


def code_params(
    m: GF2Matrix,
    *,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> CodeParams:
    r = m.rank()
    return CodeParams(
        length=m.ncols,
        dimension=m.ncols - r,
        distance=min_distance(m, max_codewords=max_codewords, max_subsets=max_subsets),
    )


def random_parity_matrix(r: int, n: int, seed: int) -> GF2Matrix:
    """Uniformly random full-rank r x n matrix, deterministic per seed."""
    if r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    if n < r:
        raise ParameterError(f"need n >= r for full rank, got n={n}, r={r}")
    rng = random.Random(seed)
    for _ in range(1000):
        cols = tuple(rng.randrange(1 << r) for _ in range(n))
        if _rank_of_ints(cols) == r:
            return GF2Matrix(r, cols)
    raise ComputationError(f"no full-rank {r}x{n} sample in 1000 draws")
