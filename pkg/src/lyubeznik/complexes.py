"""Broken and preserved sets, the Lyubeznik complex, symbol predicates.

Fix an ideal and a total order on its generators.  A non-empty set D is
*broken* when some generator u outside D divides lcm(D) and strictly
precedes min(D); such u is a *court* of D.  A set is *preserved* when
none of its subsets is broken.  The preserved sets are closed under
taking subsets, so they form a simplicial complex: the Lyubeznik
complex of the ordered ideal.

Two predicates are deliberately implemented along independent routes
and compared by tests:

* ``is_preserved`` runs a memoized dynamic program over the subset
  lattice (a set is preserved iff it has no court and all its maximal
  proper subsets are preserved);
* ``is_admissible_symbol`` transcribes the resolution-side definition
  literally (for every member except the last, no strictly earlier
  generator divides the lcm of the tail), touching monomials directly.

The classification of a subset crosses preserved/unpreserved with
cover/non-cover; on the symbol side the same four classes appear as
admissible/inadmissible crossed with stable/non-stable, where a symbol
is *stable* when deleting any member strictly drops the lcm
(equivalently, its set is not a cover).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

from .monomials import MonomialIdeal, divides, lcm_of
from .orders import OrderedIdeal
from .subsets import indices_of, iter_bits, mask_of, tables_for


class _OrderAnalysis:
    """Per-order tables: min rank, court, and the preserved-set DP."""

    __slots__ = ("tables", "minrank", "court", "preserved")

    def __init__(self, ordered: OrderedIdeal) -> None:
        tables = tables_for(ordered.ideal)
        mu = tables.mu
        size = tables.size
        rank = [ordered.rank(b + 1) for b in range(mu)]

        minrank = [mu] * size
        for mask in range(1, size):
            low = mask & -mask
            r = rank[low.bit_length() - 1]
            rest_min = minrank[mask ^ low]
            minrank[mask] = r if r < rest_min else rest_min
        self.minrank = minrank

        # court[mask]: the least court of the subset, 0 if not broken
        court = [0] * size
        outside = tables.outside_mask
        word = ordered.order
        for mask in range(1, size):
            out = outside[mask]
            if out:
                r = minrank[out]
                if r < minrank[mask]:
                    court[mask] = word[r]
        self.court = court

        preserved = [False] * size
        preserved[0] = True
        for mask in range(1, size):
            if court[mask]:
                continue
            for b in iter_bits(mask):
                if not preserved[mask ^ (1 << b)]:
                    break
            else:
                preserved[mask] = True
        self.preserved = preserved
        self.tables = tables


@lru_cache(maxsize=128)
def order_analysis(ordered: OrderedIdeal) -> _OrderAnalysis:
    return _OrderAnalysis(ordered)


def is_broken(subset: Iterable[int], ordered: OrderedIdeal) -> int | None:
    """The least court of the subset, or None when it is not broken."""
    mask = mask_of(subset)
    if mask == 0:
        raise ValueError("the empty set cannot be broken")
    court = order_analysis(ordered).court[mask]
    return court if court else None


def is_preserved(subset: Iterable[int], ordered: OrderedIdeal) -> bool:
    """True iff no subset of the set is broken (the empty set is preserved)."""
    return order_analysis(ordered).preserved[mask_of(subset)]


@dataclass(frozen=True)
class LyubeznikComplex:
    """All preserved subsets of the generators, as a simplicial complex."""

    order: OrderedIdeal
    faces: frozenset[frozenset[int]]
    facets: frozenset[frozenset[int]]

    @cached_property
    def dim(self) -> int:
        """max |F| - 1; the empty complex {∅} has dimension -1."""
        return max(len(f) for f in self.faces) - 1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Entry t counts faces with t vertices (entry 0 is the empty face)."""
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    def faces_of_size(self, t: int) -> tuple[frozenset[int], ...]:
        return tuple(sorted((f for f in self.faces if len(f) == t),
                            key=lambda f: tuple(sorted(f))))


def lyubeznik_complex(ordered: OrderedIdeal) -> LyubeznikComplex:
    analysis = order_analysis(ordered)
    masks = [m for m in range(analysis.tables.size) if analysis.preserved[m]]
    mask_set = set(masks)
    mu = analysis.tables.mu
    full = (1 << mu) - 1
    facet_masks = []
    for m in masks:
        # downward closure makes maximality a one-bit test
        if all(m | (1 << b) not in mask_set for b in iter_bits(full & ~m)):
            facet_masks.append(m)
    faces = frozenset(frozenset(indices_of(m)) for m in masks)
    facets = frozenset(frozenset(indices_of(m)) for m in facet_masks)
    return LyubeznikComplex(ordered, faces, facets)


@dataclass(frozen=True)
class Symbol:
    """u(i1;...;it): generator indices listed in increasing rank."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.indices, tuple):
            object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise ValueError("symbols have dimension at least 1")
        if any(not isinstance(i, int) or i < 1 for i in self.indices):
            raise ValueError("symbol entries are 1-based generator indices")
        if len(set(self.indices)) != len(self.indices):
            raise ValueError(f"symbol {self.indices} repeats a generator")

    @property
    def dimension(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return "u(" + ";".join(str(i) for i in self.indices) + ")"


def symbol_of(subset: Iterable[int], ordered: OrderedIdeal) -> Symbol:
    """The symbol of a non-empty subset: members sorted by rank."""
    return Symbol(ordered.sorted_by_rank(subset))


def _check_increasing(symbol: Symbol, ordered: OrderedIdeal) -> None:
    ranks = [ordered.rank(i) for i in symbol.indices]
    if any(a >= b for a, b in zip(ranks, ranks[1:])):
        raise ValueError(
            f"symbol {symbol} is not strictly increasing under order {ordered}")


def is_admissible_symbol(symbol: Symbol, ordered: OrderedIdeal) -> bool:
    """Literal admissibility: for every position h before the last, no
    generator strictly preceding the h-th member divides
    lcm(m_{i_h},...,m_{i_t}).

    Independent of the preserved-set machinery by construction.
    """
    _check_increasing(symbol, ordered)
    ideal = ordered.ideal
    idx = symbol.indices
    t = len(idx)
    for h in range(t - 1):
        tail = lcm_of(ideal.gen(i) for i in idx[h:])
        bound = ordered.rank(idx[h])
        for q in ideal.indices():
            if ordered.rank(q) < bound and divides(ideal.gen(q), tail):
                return False
    return True


def is_stable_symbol(symbol: Symbol, ideal: MonomialIdeal) -> bool:
    """True iff deleting any member strictly drops the lcm.

    Singletons are stable: deleting the only member leaves the empty
    product 1, and no minimal generator is 1.  Stability does not depend
    on the order, only on the member set.
    """
    idx = symbol.indices
    if len(idx) == 1:
        return True
    full = lcm_of(ideal.gen(i) for i in idx)
    for q in idx:
        rest = lcm_of(ideal.gen(i) for i in idx if i != q)
        if rest == full:
            return False
    return True


class SubsetClass(Enum):
    PRESERVED_COVER = "PreservedCover"
    UNPRESERVED_COVER = "UnpreservedCover"
    PRESERVED_NONCOVER = "PreservedNonCover"
    UNPRESERVED_NONCOVER = "UnpreservedNonCover"


def classify_subset(subset: Iterable[int], ordered: OrderedIdeal) -> SubsetClass:
    """The unique class of a non-empty subset."""
    mask = mask_of(subset)
    if mask == 0:
        raise ValueError("classification applies to non-empty subsets")
    analysis = order_analysis(ordered)
    preserved = analysis.preserved[mask]
    cover = analysis.tables.covered_mask[mask] != 0
    if preserved:
        return SubsetClass.PRESERVED_COVER if cover else SubsetClass.PRESERVED_NONCOVER
    return SubsetClass.UNPRESERVED_COVER if cover else SubsetClass.UNPRESERVED_NONCOVER


def classification_census(ordered: OrderedIdeal) -> dict[int, dict[SubsetClass, int]]:
    """Counts of each class among the subsets of each size 1..mu."""
    analysis = order_analysis(ordered)
    mu = analysis.tables.mu
    census: dict[int, dict[SubsetClass, int]] = {
        t: {cls: 0 for cls in SubsetClass} for t in range(1, mu + 1)}
    for mask in range(1, analysis.tables.size):
        size = bin(mask).count("1")
        preserved = analysis.preserved[mask]
        cover = analysis.tables.covered_mask[mask] != 0
        if preserved:
            cls = SubsetClass.PRESERVED_COVER if cover else SubsetClass.PRESERVED_NONCOVER
        else:
            cls = SubsetClass.UNPRESERVED_COVER if cover else SubsetClass.UNPRESERVED_NONCOVER
        census[size][cls] += 1
    return census


def _rank_word_subsets(ordered: OrderedIdeal, size: int) -> Iterable[tuple[int, ...]]:
    # order.order is the rank-sorted generator word, so combinations come
    # out lexicographic in rank and already rank-increasing
    return combinations(ordered.order, size)


def admissible_symbols(ordered: OrderedIdeal, size: int) -> tuple[Symbol, ...]:
    """All admissible symbols of the given dimension, via the complex."""
    complex_ = lyubeznik_complex(ordered)
    face_sets = {f for f in complex_.faces if len(f) == size}
    return tuple(Symbol(word) for word in _rank_word_subsets(ordered, size)
                 if frozenset(word) in face_sets)


def inadmissible_symbols(ordered: OrderedIdeal, size: int) -> tuple[Symbol, ...]:
    complex_ = lyubeznik_complex(ordered)
    face_sets = {f for f in complex_.faces if len(f) == size}
    return tuple(Symbol(word) for word in _rank_word_subsets(ordered, size)
                 if frozenset(word) not in face_sets)
