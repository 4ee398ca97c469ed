"""Exact brute-force oracles for zero-sum problems over C_2^r.

Ground truth for everything the bound machinery produces. Over an elementary
2-group a minimal non-empty zero-sum multiset is the zero element alone, a
repeated element, or a set of distinct non-zero elements that is dependent
but has no dependent proper subset; searches below only ever branch on those.
Small parameters only: these are exponential searches with explicit node
budgets, not algorithms.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ParameterError, SearchBudgetError
from .gf2 import GroupElement

DEFAULT_DP_LIMIT = 22
DEFAULT_NODE_BUDGET = 5_000_000

DEFAULT_DAVENPORT_RANK_LIMIT = 4
DEFAULT_DAVENPORT_J_LIMIT = 4
DEFAULT_BOUNDED_RANK_LIMIT = 5


@dataclass(frozen=True)
class Sequence:
    """Multiset over C_2^dim in canonical form: values sorted ascending."""

    values: tuple[int, ...]
    dim: int

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ParameterError(f"dimension must be >= 1, got {self.dim}")
        for v in self.values:
            if not 0 <= v < (1 << self.dim):
                raise ParameterError(f"value {v} out of range for dimension {self.dim}")
        if tuple(sorted(self.values)) != self.values:
            raise ParameterError("sequence values must be in canonical sorted order")

    @classmethod
    def of(cls, items: Iterable[GroupElement | int], dim: int | None = None) -> "Sequence":
        values = []
        for x in items:
            if isinstance(x, GroupElement):
                if dim is None:
                    dim = x.dim
                elif x.dim != dim:
                    raise ParameterError("mixed dimensions in sequence")
                values.append(x.bits)
            else:
                values.append(int(x))
        if dim is None:
            raise ParameterError("dimension required when building from plain ints")
        return cls(tuple(sorted(values)), dim)

    @property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(GroupElement(v, self.dim) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class DecompositionReport:
    """Largest disjoint zero-sum family of a sequence, with one witness family."""

    max_disjoint: int
    witness: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "max_disjoint": self.max_disjoint,
            "witness": [list(part) for part in self.witness],
        }


@dataclass(frozen=True)
class OracleResult:
    """Exact constant plus an extremal sequence one element short of forcing it."""

    value: int
    witness: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"value": self.value, "witness": list(self.witness)}


def _sets_through_table(values: Iterable[int], dim: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    """For each non-zero value g: sorted tuples of distinct other non-zero values
    XOR-ing to g. Completing any of them with g gives a zero-sum set; every
    minimal zero-sum set of distinct non-zero values arises this way, since a
    minimal dependent set has at most dim + 1 elements."""
    pool = sorted({v for v in values if v})
    table: dict[int, list[tuple[int, ...]]] = {g: [] for g in pool}
    pool_set = set(pool)
    for size in range(2, min(dim, max(len(pool) - 1, 0)) + 1):
        for combo in itertools.combinations(pool, size):
            acc = 0
            for x in combo:
                acc ^= x
            if acc in pool_set and acc not in combo:
                table[acc].append(combo)
    return {g: tuple(sets) for g, sets in table.items()}


_GROUP_TABLE_CACHE: dict[int, dict[int, tuple[tuple[int, ...], ...]]] = {}


def _group_table(dim: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    if dim not in _GROUP_TABLE_CACHE:
        _GROUP_TABLE_CACHE[dim] = _sets_through_table(range(1, 1 << dim), dim)
    return _GROUP_TABLE_CACHE[dim]


def _remove(values: tuple[int, ...], part: tuple[int, ...]) -> tuple[int, ...]:
    out = list(values)
    for x in part:
        out.remove(x)
    return tuple(out)


class _ZeroSumEngine:
    """Memoized 'can this multiset be split into k disjoint zero-sums' oracle."""

    def __init__(
        self,
        dim: int,
        node_budget: int,
        table: dict[int, tuple[tuple[int, ...], ...]],
    ) -> None:
        self.dim = dim
        self.table = table
        self.memo: dict[tuple[tuple[int, ...], int], bool] = {}
        self.nodes = 0
        self.node_budget = node_budget

    def _spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise SearchBudgetError(f"zero-sum search exceeded {self.node_budget} nodes")

    def zero_sets_through(self, values: tuple[int, ...], v: int) -> list[tuple[int, ...]]:
        """Minimal-enough zero-sum sub-multisets of values containing v, sorted tuples."""
        if v == 0:
            return [(0,)]
        out: list[tuple[int, ...]] = []
        if values.count(v) >= 2:
            out.append((v, v))
        present = set(values)
        for combo in self.table.get(v, ()):
            if all(x in present for x in combo):
                out.append(tuple(sorted(combo + (v,))))
        return out

    def has_disjoint(self, values: tuple[int, ...], k: int) -> bool:
        if k <= 0:
            return True
        if len(values) < k:
            return False
        key = (values, k)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        self._spend()
        first = values[0]
        rest = values[1:]
        res = self.has_disjoint(rest, k)
        if not res:
            for part in self.zero_sets_through(values, first):
                if self.has_disjoint(_remove(values, part), k - 1):
                    res = True
                    break
        self.memo[key] = res
        return res


def max_disjoint_zero_sums(
    s: Sequence,
    *,
    dp_limit: int = DEFAULT_DP_LIMIT,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> DecompositionReport:
    """Exact maximum family of pairwise disjoint non-empty zero-sum subsequences.

    Witness index sets refer to positions in the canonical (sorted) sequence.
    """
    if len(s) > dp_limit:
        raise ParameterError(f"sequence length {len(s)} over the DP limit {dp_limit}")
    engine = _ZeroSumEngine(s.dim, node_budget, _sets_through_table(s.values, s.dim))
    count = 0
    while engine.has_disjoint(s.values, count + 1):
        count += 1
    witness = _reconstruct_witness(engine, s.values, count)
    return DecompositionReport(max_disjoint=count, witness=witness)


def _reconstruct_witness(
    engine: _ZeroSumEngine, values: tuple[int, ...], count: int
) -> tuple[tuple[int, ...], ...]:
    """Re-derive one maximum family, deterministically, as canonical index sets."""
    slots: dict[int, deque[int]] = {}
    for idx, v in enumerate(values):
        slots.setdefault(v, deque()).append(idx)
    parts: list[tuple[int, ...]] = []
    current = values
    k = count
    while k > 0:
        extracted, current = _extract_one(engine, current, k)
        parts.append(tuple(sorted(slots[v].popleft() for v in extracted)))
        k -= 1
    return tuple(parts)


def _extract_one(
    engine: _ZeroSumEngine, values: tuple[int, ...], k: int
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First zero-sum part, in search order, whose removal still allows k-1 more."""
    skipped: list[int] = []
    current = values
    while True:
        first = current[0]
        rest = current[1:]
        if engine.has_disjoint(rest, k):
            skipped.append(first)
            current = rest
            continue
        for part in engine.zero_sets_through(current, first):
            remainder = _remove(current, part)
            if engine.has_disjoint(remainder, k - 1):
                return part, tuple(sorted(skipped + list(remainder)))
        raise AssertionError("witness re-derivation lost a known decomposition")


def davenport_exact(
    r: int,
    j: int,
    *,
    rank_limit: int = DEFAULT_DAVENPORT_RANK_LIMIT,
    j_limit: int = DEFAULT_DAVENPORT_J_LIMIT,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OracleResult:
    """Exact D_j(C_2^r): least length forcing j disjoint non-empty zero-sum parts.

    Canonical non-decreasing multiset search. Multiplicity is capped at 2j-1
    (2j copies already contain j disjoint pairs) and at j-1 for the zero
    element; the first non-zero value may be fixed to e1 because the linear
    group acts transitively on non-zero elements.
    """
    if r < 1 or j < 1:
        raise ParameterError(f"need r >= 1 and j >= 1, got r={r}, j={j}")
    if r > rank_limit:
        raise ParameterError(f"rank {r} over the configured limit {rank_limit}")
    if j > j_limit:
        raise ParameterError(f"j={j} over the configured limit {j_limit}")

    engine = _ZeroSumEngine(r, node_budget, _group_table(r))
    size = 1 << r
    best_len = 0
    best_seq: tuple[int, ...] = ()

    def counts_of(seq: tuple[int, ...]) -> dict[int, int]:
        out: dict[int, int] = {}
        for v in seq:
            out[v] = out.get(v, 0) + 1
        return out

    def admissible(extended: tuple[int, ...], v: int) -> bool:
        # extended minus any zero-sum part through the new element must not
        # still carry j-1 disjoint parts
        for part in engine.zero_sets_through(extended, v):
            if engine.has_disjoint(_remove(extended, part), j - 1):
                return False
        return True

    def extend(seq: tuple[int, ...], last: int) -> None:
        nonlocal best_len, best_seq
        engine._spend()
        if len(seq) > best_len:
            best_len = len(seq)
            best_seq = seq
        counts = counts_of(seq)
        pair_count = counts.get(0, 0) + sum(c // 2 for v, c in counts.items() if v)
        slack = (j - 1) - pair_count
        start = max(last, 1)
        even_tops = sum(1 for v in range(start, size) if counts.get(v, 0) % 2 == 0)
        if len(seq) + even_tops + 2 * max(slack, 0) <= best_len:
            return
        if last == 0:
            candidates: Iterable[int] = (0, 1) if counts.get(0, 0) < j - 1 else (1,)
        else:
            candidates = range(last, size)
        for v in candidates:
            cap = j - 1 if v == 0 else 2 * j - 1
            if counts.get(v, 0) >= cap:
                continue
            extended = seq + (v,)
            if admissible(extended, v):
                extend(extended, v)

    extend((), 0)
    return OracleResult(value=best_len + 1, witness=best_seq)


def bounded_constant_exact(
    r: int,
    d: int,
    *,
    rank_limit: int = DEFAULT_BOUNDED_RANK_LIMIT,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> OracleResult:
    """Exact least length forcing a non-empty zero-sum subsequence of size <= d.

    Any sequence avoiding short zero-sums has distinct non-zero values (d >= 2
    kills the zero element and repeats), so the search runs over subsets in
    increasing value order, keeping for every group element the least number
    of chosen values XOR-ing to it; candidate v stays addable while that
    count for v itself is at least d.
    """
    if d < 2:
        raise ParameterError(f"need d >= 2 (a size-1 zero-sum needs the zero element), got {d}")
    if r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    if r > rank_limit:
        raise ParameterError(f"rank {r} over the configured limit {rank_limit}")

    size = 1 << r
    unreachable = size + 2
    best_len = 0
    best_set: tuple[int, ...] = ()
    nodes = 0

    def dfs(last: int, chosen: tuple[int, ...], reach: list[int]) -> None:
        nonlocal best_len, best_set, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetError(f"subset search exceeded {node_budget} nodes")
        if len(chosen) > best_len:
            best_len = len(chosen)
            best_set = chosen
        if len(chosen) + (size - 1 - last) <= best_len:
            return
        for v in range(last + 1, size):
            if reach[v] >= d:
                extended = [min(reach[x], reach[x ^ v] + 1) for x in range(size)]
                dfs(v, chosen + (v,), extended)

    base = [unreachable] * size
    base[0] = 0
    # linear-group symmetry: some maximum subset contains e1
    if size > 1:
        first = [min(base[x], base[x ^ 1] + 1) for x in range(size)]
        dfs(1, (1,), first)
    return OracleResult(value=best_len + 1, witness=best_set)


def next_davenport_upper(dj: int, s_table: Mapping[int, int | float]) -> int | float:
    """Upper bound for the next constant: min over i of max(dj + i, s_table[i] - 1).

    dj must be the exact value or an upper bound for the current constant, and
    each s_table entry an exact value or upper bound for the matching
    bounded-size constant.
    """
    if not s_table:
        raise ParameterError("need at least one bounded-constant entry")
    if dj < 1:
        raise ParameterError(f"need dj >= 1, got {dj}")
    best: int | float | None = None
    for i, s in sorted(s_table.items()):
        if i < 1:
            raise ParameterError(f"subset size {i} must be >= 1")
        candidate = max(dj + i, s - 1)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best
