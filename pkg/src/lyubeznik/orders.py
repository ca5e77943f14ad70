"""Total orders on the generators of a monomial ideal.

An ``OrderedIdeal`` pairs an ideal with a permutation word: ``order[k]``
is the (1-based) index of the generator sitting at rank k.  The identity
order is the listing order of the generators.

Order enumeration is always lexicographic on the permutation word, so
witness orders are reproducible and searches can be partitioned into
disjoint prefix blocks.  Exhaustive enumeration is refused above a
threshold (mu! grows fast); the courts-first stream is the documented
heuristic alternative: it yields only the orders in which every
"possible court" precedes every non-court.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import islice, permutations
from math import factorial
from typing import Iterable, Iterator

from .monomials import BoundExceededError, MonomialIdeal, divides, lcm_of

DEFAULT_MAX_EXHAUSTIVE = 8


@dataclass(frozen=True)
class OrderedIdeal:
    """An ideal together with a total order on its generators."""

    ideal: MonomialIdeal
    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.order, tuple):
            object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(1, self.ideal.mu + 1)):
            raise ValueError(
                f"order {self.order} is not a permutation of 1..{self.ideal.mu}")

    @cached_property
    def _rank(self) -> tuple[int, ...]:
        ranks = [0] * len(self.order)
        for pos, gen in enumerate(self.order):
            ranks[gen - 1] = pos
        return tuple(ranks)

    def rank(self, i: int) -> int:
        """0-based rank of generator i; rank 0 is the least generator."""
        return self._rank[i - 1]

    def precedes(self, i: int, j: int) -> bool:
        return self._rank[i - 1] < self._rank[j - 1]

    def sorted_by_rank(self, indices: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(indices, key=lambda i: self._rank[i - 1]))

    def __str__(self) -> str:
        return "(" + ",".join(str(i) for i in self.order) + ")"


def identity_order(ideal: MonomialIdeal) -> OrderedIdeal:
    return OrderedIdeal(ideal, tuple(range(1, ideal.mu + 1)))


def min_of(subset: Iterable[int], ordered: OrderedIdeal) -> int:
    """The least generator index of a non-empty subset under the order."""
    best = None
    for i in subset:
        if best is None or ordered.precedes(i, best):
            best = i
    if best is None:
        raise ValueError("min of an empty subset is undefined")
    return best


def order_count(ideal: MonomialIdeal) -> int:
    return factorial(ideal.mu)


def all_orders(ideal: MonomialIdeal, *,
               max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
               force: bool = False) -> Iterator[OrderedIdeal]:
    """All mu! orders, lexicographic on the permutation word.

    Refuses when mu exceeds ``max_exhaustive`` unless ``force`` is set;
    the error names the courts-first heuristic as the alternative.
    """
    mu = ideal.mu
    if mu > max_exhaustive and not force:
        raise BoundExceededError(
            f"exhaustive search over {mu}! = {factorial(mu)} orders exceeds "
            f"the threshold mu <= {max_exhaustive}; raise --max-exhaustive "
            "(or force=True), or use the courts-first heuristic search")
    return (OrderedIdeal(ideal, word)
            for word in permutations(range(1, mu + 1)))


def possible_courts(ideal: MonomialIdeal) -> frozenset[int]:
    """Generators u that divide lcm(D) for some subset D not containing u.

    Checking D = G(I) minus {u} suffices: lcm is monotone under
    inclusion, so that single D is a witness exactly when any witness
    exists.  (The subset search the definition suggests is therefore
    redundant, but cheap enough that tests re-run it as an oracle.)
    """
    mu = ideal.mu
    if mu == 1:
        return frozenset()
    courts = set()
    for u in ideal.indices():
        rest = [ideal.gen(i) for i in ideal.indices() if i != u]
        if divides(ideal.gen(u), lcm_of(rest)):
            courts.add(u)
    return frozenset(courts)


def courts_first_orders(ideal: MonomialIdeal) -> Iterator[OrderedIdeal]:
    """Orders in which every possible court precedes every non-court.

    Yields |P|! * (mu - |P|)! orders, lexicographic on the word.  With
    P empty or P = G(I) this degenerates to the full order stream.
    """
    courts = sorted(possible_courts(ideal))
    rest = sorted(set(ideal.indices()) - set(courts))

    def stream() -> Iterator[OrderedIdeal]:
        for head in permutations(courts):
            for tail in permutations(rest):
                yield OrderedIdeal(ideal, head + tail)
    return stream()


def parse_order(text: str, ideal: MonomialIdeal) -> OrderedIdeal:
    """Parse a CLI-style order override like ``"3,1,2"``."""
    try:
        word = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"order override {text!r} is not a comma-separated "
                         "list of integers") from None
    return OrderedIdeal(ideal, word)


def orders_for_search(ideal: MonomialIdeal, mode: str, *,
                      max_exhaustive: int = DEFAULT_MAX_EXHAUSTIVE,
                      force: bool = False) -> tuple[Iterator[OrderedIdeal], bool]:
    """The order stream for a search mode, plus whether it is exhaustive.

    The courts-first stream is flagged exact when it coincides with the
    full stream (P empty or P = G(I)).
    """
    if mode == "exhaustive":
        return all_orders(ideal, max_exhaustive=max_exhaustive, force=force), True
    if mode == "courts-first":
        p = len(possible_courts(ideal))
        return courts_first_orders(ideal), p in (0, ideal.mu)
    raise ValueError(f"unknown search mode {mode!r}")


def order_block(ideal: MonomialIdeal, start: int, stop: int) -> list[tuple[int, ...]]:
    """Permutation words [start, stop) in lexicographic position order."""
    return list(islice(permutations(range(1, ideal.mu + 1)), start, stop))
