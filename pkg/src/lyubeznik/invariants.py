"""Minimality tests, Betti tables from preserved sets, and order searches.

Per-order quantities (is the Lyubeznik resolution minimal, its length,
the largest preserved set, the obstruction) are computed by two
independent routes wherever the theory promises an identity, and a
disagreement raises ``RuntimeError`` rather than silently trusting
either side:

* minimality: every facet of the complex is stable, versus no
  E-minimal cover is preserved;
* length: largest face of the complex (downward-closed DP), versus the
  largest preserved set found by up-closing the broken sets with a
  subset-sum transform.

Order searches (total obstruction, minimal length, Lyubeznik /
almost / totally Lyubeznik classification) scan permutation words in
lexicographic order so witnesses are reproducible, optionally in
parallel; a vectorized scanner processes orders in batches and repeats
the dual-route length computation per order.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterator, Sequence

import numpy as np

from .betti import QUOTIENT, BettiTable
from .complexes import is_stable_symbol, lyubeznik_complex, order_analysis, symbol_of
from .covers import e_minimal_covers_of
from .monomials import MonomialIdeal, radical_ideal, support
from .oracle import taylor_betti
from .orders import (DEFAULT_MAX_EXHAUSTIVE, OrderedIdeal, orders_for_search)
from .subsets import iter_bits, mask_of, tables_for

DEFAULT_CHUNK = 4096


class NotMinimalError(ValueError):
    """Preserved-set counts were requested for a non-minimal resolution."""


@lru_cache(maxsize=128)
def _eminimal_cover_masks(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Bitmasks of all E-minimal covers (of any covered generator)."""
    masks = set()
    for u in ideal.indices():
        for cover in e_minimal_covers_of(u, ideal):
            masks.add(mask_of(cover.members))
    return tuple(sorted(masks))


@lru_cache(maxsize=128)
def _clutter_masks(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Bitmasks of the E-minimal cover clutter: inclusion-minimal covers.

    An E-minimal cover of one generator may strictly contain an
    E-minimal cover of another; the clutter keeps only the minimal
    sets.  Obstruction sizes are measured on the clutter, while the
    yes/no question "is some cover preserved" is insensitive to the
    difference because subsets of preserved sets are preserved.
    """
    masks = _eminimal_cover_masks(ideal)
    return tuple(m for m in masks
                 if not any(other != m and other & m == other
                            for other in masks))


# ---------------------------------------------------------------------------
# per-order invariants


def is_minimal_resolution(ordered: OrderedIdeal) -> bool:
    """Whether the Lyubeznik resolution of this order is minimal.

    Route one checks that every facet of the complex is a stable
    symbol; route two checks that no E-minimal cover is preserved.
    Both are computed and must agree.
    """
    ideal = ordered.ideal
    complex_ = lyubeznik_complex(ordered)
    via_facets = all(is_stable_symbol(symbol_of(f, ordered), ideal)
                     for f in complex_.facets)
    analysis = order_analysis(ordered)
    via_covers = not any(analysis.preserved[m]
                         for m in _eminimal_cover_masks(ideal))
    if via_facets != via_covers:
        raise RuntimeError(
            "internal disagreement: facet stability says "
            f"{via_facets}, preserved E-minimal covers say {via_covers}")
    return via_facets


def obstruction(ordered: OrderedIdeal) -> int:
    """Largest preserved element of the E-minimal cover clutter, else 0."""
    analysis = order_analysis(ordered)
    sizes = [bin(m).count("1") for m in _clutter_masks(ordered.ideal)
             if analysis.preserved[m]]
    return max(sizes, default=0)


def l_length(ordered: OrderedIdeal) -> int:
    """Length of the Lyubeznik resolution: the largest face size."""
    return max(len(f) for f in lyubeznik_complex(ordered).faces)


def preserved_size(ordered: OrderedIdeal) -> int:
    """Largest preserved subset, computed without the face machinery.

    Broken sets are found directly from the subset tables, then closed
    upward with a bitwise subset-sum transform; the answer is the
    largest subset that never lands in the closure.  Must equal
    ``l_length`` (checked wholesale by the test suite and per order by
    the search scanner).
    """
    tables = tables_for(ordered.ideal)
    mu = tables.mu
    rank = ordered.rank

    def minrank(mask: int) -> int:
        return min(rank(b + 1) for b in iter_bits(mask))

    bad = bytearray(tables.size)
    for mask in range(1, tables.size):
        out = tables.outside_mask[mask]
        if out and minrank(out) < minrank(mask):
            bad[mask] = 1
    for b in range(mu):
        bit = 1 << b
        for mask in range(tables.size):
            if mask & bit and bad[mask ^ bit]:
                bad[mask] = 1
    return max(bin(m).count("1") for m in range(tables.size) if not bad[m])


def betti_from_preserved(ordered: OrderedIdeal) -> BettiTable:
    """Multigraded Betti numbers of R/I read off the preserved sets.

    Each preserved set A contributes 1 to beta_{|A|, lcm(A)}(R/I);
    valid only when the resolution is minimal.
    """
    if not is_minimal_resolution(ordered):
        raise NotMinimalError(
            "the Lyubeznik resolution is not minimal for this order, so "
            "preserved-set counts are not Betti numbers; use the homology "
            "oracle (taylor_betti) instead")
    ideal = ordered.ideal
    tables = tables_for(ideal)
    analysis = order_analysis(ordered)
    zero = (0,) * len(ideal.context)
    counts: dict[tuple[int, tuple[int, ...]], int] = {}
    for mask in range(tables.size):
        if analysis.preserved[mask]:
            exps = tables.lcm_exps[mask] if mask else zero
            key = (bin(mask).count("1"), exps)
            counts[key] = counts.get(key, 0) + 1
    return BettiTable.from_multigraded(QUOTIENT, ideal.context, counts)


@dataclass(frozen=True)
class EquivalenceAudit:
    """The five minimality conditions, evaluated independently."""

    minimal: bool
    covers_unpreserved: bool
    cover_witness_condition: bool
    eminimal_covers_unpreserved: bool
    eminimal_witness_condition: bool

    @property
    def consistent(self) -> bool:
        return (self.minimal == self.covers_unpreserved ==
                self.cover_witness_condition ==
                self.eminimal_covers_unpreserved ==
                self.eminimal_witness_condition)


def equivalence_audit(ordered: OrderedIdeal) -> EquivalenceAudit:
    """Evaluate all five equivalent characterizations of minimality.

    The witness conditions are checked literally: for every (E-minimal)
    cover C there must be a non-empty D inside C whose complete cover
    reaches below min(D) — for the E-minimal variant, additionally via
    some v for which D plus v is an E-minimal cover of v.
    """
    ideal = ordered.ideal
    tables = tables_for(ideal)
    analysis = order_analysis(ordered)
    rank = ordered.rank

    def minrank(mask: int) -> int:
        return min(rank(b + 1) for b in iter_bits(mask))

    cover_masks = [m for m in range(1, tables.size) if tables.covered_mask[m]]
    emin_masks = _eminimal_cover_masks(ideal)
    emin_set = frozenset(emin_masks)

    def has_low_subset(cover: int, eminimal: bool) -> bool:
        sub = cover
        while sub:
            out = tables.outside_mask[sub]
            if out and minrank(out) < minrank(sub):
                if not eminimal:
                    return True
                if any(sub | (1 << v) in emin_set for v in iter_bits(out)):
                    return True
            sub = (sub - 1) & cover
        return False

    return EquivalenceAudit(
        minimal=is_minimal_resolution(ordered),
        covers_unpreserved=not any(analysis.preserved[m] for m in cover_masks),
        cover_witness_condition=all(has_low_subset(m, False)
                                    for m in cover_masks),
        eminimal_covers_unpreserved=not any(analysis.preserved[m]
                                            for m in emin_masks),
        eminimal_witness_condition=all(has_low_subset(m, True)
                                       for m in emin_masks),
    )


# ---------------------------------------------------------------------------
# order searches


@dataclass(frozen=True)
class SearchResult:
    """Aggregates of a scan over a stream of orders.

    ``exact`` records whether the stream covered all orders;
    ``stopped_early`` whether an early-exit policy cut the scan short.
    Witnesses are permutation words, always the lexicographically least
    achieving their value among the scanned prefix.
    """

    mode: str
    exact: bool
    scanned: int
    stopped_early: bool
    tobsl: int
    tobsl_witness: tuple[int, ...]
    min_l: int
    min_l_witness: tuple[int, ...]
    min_ps: int
    min_ps_witness: tuple[int, ...]
    minimal_count: int
    nonminimal_witness: tuple[int, ...] | None


def _scan_words(ideal: MonomialIdeal,
                words: Sequence[tuple[int, ...]]
                ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized per-order invariants for a batch of permutation words.

    Returns (obstruction, length, minimal) arrays indexed like
    ``words``.  The length is computed by both the face DP and the
    subset-sum closure; a mismatch raises.
    """
    tables = tables_for(ideal)
    mu, size = tables.mu, tables.size
    count = len(words)
    outside = tables.outside_mask
    sizes = np.array([bin(m).count("1") for m in range(size)], np.int8)

    word_arr = np.array(words, np.int8)
    pos = np.argsort(word_arr, axis=1).astype(np.int8)
    post = np.ascontiguousarray(pos.T)  # post[g-1][j] = rank of g in order j

    minpos = np.empty((size, count), np.int8)
    minpos[0] = mu
    for mask in range(1, size):
        low = mask & -mask
        rest = mask ^ low
        row = post[low.bit_length() - 1]
        if rest:
            np.minimum(row, minpos[rest], out=minpos[mask])
        else:
            minpos[mask] = row

    broken = np.zeros((size, count), bool)
    for mask in range(1, size):
        out = outside[mask]
        if out:
            np.less(minpos[out], minpos[mask], out=broken[mask])

    # route one: a set is preserved iff it is unbroken and all its
    # one-smaller subsets are preserved
    pres = np.empty((size, count), bool)
    pres[0] = True
    for mask in range(1, size):
        acc = ~broken[mask]
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            acc &= pres[mask ^ low]
        pres[mask] = acc

    # route two: up-close the broken sets, then take complements
    bad = broken.copy()
    idx = np.arange(size)
    for b in range(mu):
        bit = 1 << b
        has = (idx & bit) != 0
        bad[has] |= bad[idx[has] ^ bit]

    l_arr = np.where(pres, sizes[:, None], -1).max(axis=0)
    ps_arr = np.where(~bad, sizes[:, None], -1).max(axis=0)
    if not np.array_equal(l_arr, ps_arr):
        raise RuntimeError("internal disagreement: face DP length and "
                           "subset-closure preserved size differ")

    obs = np.zeros(count, np.int8)
    for m in _clutter_masks(ideal):
        np.maximum(obs, np.where(pres[m], sizes[m], 0), out=obs)
    return obs, l_arr.astype(np.int8), obs == 0


class _Agg:
    __slots__ = ("scanned", "tobsl", "tobsl_witness", "min_l", "min_l_witness",
                 "min_ps", "min_ps_witness", "minimal_count",
                 "nonminimal_witness")

    def __init__(self) -> None:
        self.scanned = 0
        self.tobsl = None
        self.tobsl_witness = None
        self.min_l = None
        self.min_l_witness = None
        self.min_ps = None
        self.min_ps_witness = None
        self.minimal_count = 0
        self.nonminimal_witness = None


def _merge(agg: _Agg, words: Sequence[tuple[int, ...]],
           result: tuple[np.ndarray, np.ndarray, np.ndarray],
           stop_when: str | None) -> bool:
    obs, lengths, minimal = result
    agg.scanned += len(words)
    agg.minimal_count += int(minimal.sum())

    j = int(np.argmin(obs))
    if agg.tobsl is None or int(obs[j]) < agg.tobsl:
        agg.tobsl = int(obs[j])
        agg.tobsl_witness = words[j]
    j = int(np.argmin(lengths))
    if agg.min_l is None or int(lengths[j]) < agg.min_l:
        agg.min_l = int(lengths[j])
        agg.min_l_witness = words[j]
        agg.min_ps = agg.min_l
        agg.min_ps_witness = agg.min_l_witness
    if agg.nonminimal_witness is None and not minimal.all():
        agg.nonminimal_witness = words[int(np.argmin(minimal))]

    if stop_when == "zero-obstruction":
        return agg.tobsl == 0
    if stop_when == "nonzero-obstruction":
        return agg.nonminimal_witness is not None
    return False


def _word_chunks(stream: Iterator[OrderedIdeal],
                 chunk_size: int) -> Iterator[list[tuple[int, ...]]]:
    while True:
        block = [o.order for o in islice(stream, chunk_size)]
        if not block:
            return
        yield block


def search_scan(ideal: MonomialIdeal, mode: str = "exhaustive", *,
                max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                force: bool = False, jobs: int = 1,
                chunk_size: int = DEFAULT_CHUNK,
                stop_when: str | None = None) -> SearchResult:
    """Scan an order stream and aggregate per-order invariants.

    ``stop_when`` may be ``"zero-obstruction"`` (stop once a minimal
    order is found; its witness is then exact) or
    ``"nonzero-obstruction"`` (stop once a non-minimal order is found).
    Chunks are merged in stream order regardless of ``jobs``, so every
    output is deterministic.
    """
    if stop_when not in (None, "zero-obstruction", "nonzero-obstruction"):
        raise ValueError(f"unknown stop policy {stop_when!r}")
    stream, exact = orders_for_search(ideal, mode,
                                      max_exhaustive=max_exhaustive,
                                      force=force)
    chunks = _word_chunks(stream, chunk_size)
    agg = _Agg()
    stopped = False

    if jobs <= 1:
        for words in chunks:
            if _merge(agg, words, _scan_words(ideal, words), stop_when):
                stopped = True
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending: deque = deque()
            try:
                for words in chunks:
                    pending.append((words, pool.submit(_scan_words, ideal, words)))
                    if len(pending) >= jobs + 2:
                        head_words, fut = pending.popleft()
                        if _merge(agg, head_words, fut.result(), stop_when):
                            stopped = True
                            break
                while not stopped and pending:
                    head_words, fut = pending.popleft()
                    if _merge(agg, head_words, fut.result(), stop_when):
                        stopped = True
            finally:
                while pending:
                    pending.popleft()[1].cancel()

    if agg.scanned == 0:
        raise RuntimeError("order stream was empty")
    return SearchResult(
        mode=mode, exact=exact, scanned=agg.scanned, stopped_early=stopped,
        tobsl=agg.tobsl, tobsl_witness=agg.tobsl_witness,
        min_l=agg.min_l, min_l_witness=agg.min_l_witness,
        min_ps=agg.min_ps, min_ps_witness=agg.min_ps_witness,
        minimal_count=agg.minimal_count,
        nonminimal_witness=agg.nonminimal_witness)


def total_obstruction(ideal: MonomialIdeal, search_mode: str = "exhaustive", *,
                      max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                      force: bool = False, jobs: int = 1
                      ) -> tuple[int, OrderedIdeal]:
    """Minimum obstruction over the searched orders, with its witness.

    Exact under exhaustive search; under the courts-first heuristic the
    value is only an upper bound (unless the stream was complete).  The
    witness is the lexicographically least minimizing order.
    """
    scan = search_scan(ideal, search_mode, max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs, stop_when="zero-obstruction")
    return scan.tobsl, OrderedIdeal(ideal, scan.tobsl_witness)


def min_l_length(ideal: MonomialIdeal, search_mode: str = "exhaustive", *,
                 max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                 force: bool = False, jobs: int = 1
                 ) -> tuple[int, OrderedIdeal]:
    """Minimum resolution length over the searched orders, with witness."""
    scan = search_scan(ideal, search_mode, max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs)
    return scan.min_l, OrderedIdeal(ideal, scan.min_l_witness)


def min_ps(ideal: MonomialIdeal, search_mode: str = "exhaustive", *,
           max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
           force: bool = False, jobs: int = 1) -> tuple[int, OrderedIdeal]:
    """Minimum preserved size over the searched orders, with witness."""
    scan = search_scan(ideal, search_mode, max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs)
    return scan.min_ps, OrderedIdeal(ideal, scan.min_ps_witness)


@dataclass(frozen=True)
class LyubeznikVerdict:
    """Outcome of the Lyubeznik-ideal test.

    ``verdict`` is ``None`` when a heuristic scan found no minimal
    order: the heuristic can certify success but not failure.
    Iterating yields ``(verdict, witness)``.
    """

    verdict: bool | None
    witness: OrderedIdeal | None
    mode: str
    exact: bool
    scanned: int

    def __iter__(self):
        return iter((self.verdict, self.witness))


def is_lyubeznik(ideal: MonomialIdeal, search_mode: str = "exhaustive", *,
                 max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                 force: bool = False, jobs: int = 1) -> LyubeznikVerdict:
    """Whether some order makes the Lyubeznik resolution minimal."""
    scan = search_scan(ideal, search_mode, max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs, stop_when="zero-obstruction")
    if scan.tobsl == 0:
        return LyubeznikVerdict(True, OrderedIdeal(ideal, scan.tobsl_witness),
                                scan.mode, scan.exact, scan.scanned)
    verdict = False if scan.exact else None
    return LyubeznikVerdict(verdict, None, scan.mode, scan.exact, scan.scanned)


def is_totally_lyubeznik(ideal: MonomialIdeal, *,
                         max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                         force: bool = False, jobs: int = 1) -> bool:
    """Whether every order makes the Lyubeznik resolution minimal."""
    scan = search_scan(ideal, "exhaustive", max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs, stop_when="nonzero-obstruction")
    return scan.nonminimal_witness is None


def is_almost_lyubeznik(ideal: MonomialIdeal, *,
                        max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                        force: bool = False, jobs: int = 1,
                        prime: int | None = None) -> bool:
    """Whether the best resolution length meets the projective dimension."""
    best, _ = min_l_length(ideal, "exhaustive", max_exhaustive=max_exhaustive,
                           force=force, jobs=jobs)
    return best == taylor_betti(ideal, prime=prime).projective_dimension


# ---------------------------------------------------------------------------
# ring-theoretic bounds


def height(ideal: MonomialIdeal) -> int:
    """Height: smallest variable set meeting every generator's support.

    Computed on the radical (the support hypergraph is the same) by
    increasing-size exhaustive search.
    """
    supports = [support(m) for m in radical_ideal(ideal).gens]
    universe = sorted(set().union(*supports))
    for k in range(1, len(universe) + 1):
        for combo in combinations(universe, k):
            chosen = set(combo)
            if all(chosen & s for s in supports):
                return k
    return len(universe)


@dataclass(frozen=True)
class AraBounds:
    """Bounds on the arithmetical rank.  Iterating yields (lower, upper)."""

    lower: int
    upper: int
    equality: bool

    def __iter__(self):
        return iter((self.lower, self.upper))


def ara_bounds(ideal: MonomialIdeal, search_mode: str = "exhaustive", *,
               max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
               force: bool = False, jobs: int = 1,
               prime: int | None = None) -> AraBounds:
    """Lower and upper bounds on the arithmetical rank.

    The upper bound is min(best resolution length, number of
    generators).  The lower bound is the projective dimension of R/I
    for squarefree ideals (where it equals the cohomological
    dimension), and the height otherwise.  ``equality`` flags bounds
    that pin the value exactly.
    """
    if ideal.is_squarefree():
        lower = taylor_betti(ideal, prime=prime).projective_dimension
    else:
        lower = height(ideal)
    best, _ = min_l_length(ideal, search_mode, max_exhaustive=max_exhaustive,
                           force=force, jobs=jobs)
    upper = min(best, ideal.mu)
    return AraBounds(lower, upper, lower == upper)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class InvariantReport:
    """Everything the analyzer knows about one (ideal, order) pair."""

    order: tuple[int, ...]
    minimal: bool
    obstruction: int
    l_length: int
    ps: int
    betti: BettiTable | None
    height: int
    ara: AraBounds
    lyubeznik: bool | None = None
    almost_lyubeznik: bool | None = None
    totally_lyubeznik: bool | None = None


def analyze(ordered: OrderedIdeal, *, search_mode: str | None = None,
            max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE, force: bool = False,
            jobs: int = 1, prime: int | None = None) -> InvariantReport:
    """Full per-order report, optionally with an order search on top.

    Without a search mode, the arithmetical-rank upper bound falls back
    to this order's resolution length (still valid, possibly loose),
    and the classification flags stay ``None``.
    """
    ideal = ordered.ideal
    minimal = is_minimal_resolution(ordered)
    obs = obstruction(ordered)
    if minimal != (obs == 0):
        raise RuntimeError("internal disagreement: minimality and "
                           "obstruction routes differ")
    length = l_length(ordered)
    ps = preserved_size(ordered)
    if length != ps:
        raise RuntimeError("internal disagreement: resolution length and "
                           "preserved size differ")
    betti = betti_from_preserved(ordered) if minimal else None
    ht = height(ideal)

    lyub = almost = totally = None
    if search_mode is None:
        if ideal.is_squarefree():
            lower = taylor_betti(ideal, prime=prime).projective_dimension
        else:
            lower = ht
        upper = min(length, ideal.mu)
        ara = AraBounds(lower, upper, lower == upper)
    else:
        ara = ara_bounds(ideal, search_mode, max_exhaustive=max_exhaustive,
                         force=force, jobs=jobs, prime=prime)
        scan = search_scan(ideal, search_mode, max_exhaustive=max_exhaustive,
                           force=force, jobs=jobs)
        if scan.tobsl == 0:
            lyub = True
        elif scan.exact:
            lyub = False
        if scan.exact:
            almost = scan.min_l == taylor_betti(
                ideal, prime=prime).projective_dimension
            totally = scan.minimal_count == scan.scanned
    return InvariantReport(order=ordered.order, minimal=minimal,
                           obstruction=obs, l_length=length, ps=ps,
                           betti=betti, height=ht, ara=ara, lyubeznik=lyub,
                           almost_lyubeznik=almost, totally_lyubeznik=totally)


def audit_courts_first(ideal: MonomialIdeal, *,
                       max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                       force: bool = False, jobs: int = 1
                       ) -> tuple[bool, OrderedIdeal | None]:
    """Empirically test the courts-first heuristic on one ideal.

    The heuristic claims that any order putting every possible court
    before every non-court yields a minimal resolution.  Returns
    (claim holds, first counterexample order or None).  The claim is
    known to fail for some ideals, which is why courts-first search
    results are flagged as inexact.
    """
    scan = search_scan(ideal, "courts-first", max_exhaustive=max_exhaustive,
                       force=force, jobs=jobs,
                       stop_when="nonzero-obstruction")
    if scan.nonminimal_witness is None:
        return True, None
    return False, OrderedIdeal(ideal, scan.nonminimal_witness)
