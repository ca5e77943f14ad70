"""Bitmask tables over the subset lattice of a generator set.

Subsets of the generators {1..mu} are encoded as mu-bit integers, bit
(i-1) standing for generator i.  Everything that depends only on the
ideal (lcms, divisor sets, cover membership) is tabulated once here and
shared by every total order: per-order work then reduces to rank
comparisons against these masks.

Tables cost O(2^mu) memory, so construction refuses ideals with more
than MAX_TABLE_GENERATORS generators.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .monomials import BoundExceededError, Monomial, MonomialIdeal

MAX_TABLE_GENERATORS = 16


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask for a collection of 1-based generator indices."""
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based generator indices of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """0-based bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SubsetTables:
    """Order-free per-ideal tables indexed by subset mask.

    lcm_exps[mask]   exponent tuple of lcm of the subset (None for mask 0)
    divisor_mask[m]  generators dividing lcm(m) (the complete cover of m)
    outside_mask[m]  divisor_mask[m] with the members removed (possible courts)
    covered_mask[m]  members u of m with m_u | lcm(m minus u)
    """

    __slots__ = ("ideal", "mu", "size", "lcm_exps", "divisor_mask",
                 "outside_mask", "covered_mask")

    def __init__(self, ideal: MonomialIdeal) -> None:
        mu = ideal.mu
        if mu > MAX_TABLE_GENERATORS:
            raise BoundExceededError(
                f"subset tables support at most {MAX_TABLE_GENERATORS} "
                f"generators, got {mu}")
        self.ideal = ideal
        self.mu = mu
        self.size = 1 << mu
        exps = [m.exponents for m in ideal.gens]

        lcm_exps: list[tuple[int, ...] | None] = [None] * self.size
        for mask in range(1, self.size):
            low = mask & -mask
            rest = mask ^ low
            e = exps[low.bit_length() - 1]
            if rest == 0:
                lcm_exps[mask] = e
            else:
                prev = lcm_exps[rest]
                lcm_exps[mask] = tuple(a if a >= b else b for a, b in zip(prev, e))
        self.lcm_exps = lcm_exps

        divisor_mask = [0] * self.size
        for mask in range(1, self.size):
            lm = lcm_exps[mask]
            dm = 0
            for g in range(mu):
                eg = exps[g]
                for a, b in zip(eg, lm):
                    if a > b:
                        break
                else:
                    dm |= 1 << g
            divisor_mask[mask] = dm
        self.divisor_mask = divisor_mask
        self.outside_mask = [divisor_mask[m] & ~m for m in range(self.size)]

        covered_mask = [0] * self.size
        for mask in range(1, self.size):
            cm = 0
            sub = mask
            while sub:
                low = sub & -sub
                sub ^= low
                rest = mask ^ low
                if rest and divisor_mask[rest] & low:
                    cm |= low
            covered_mask[mask] = cm
        self.covered_mask = covered_mask

    def lcm_monomial(self, mask: int) -> Monomial:
        exps = self.lcm_exps[mask]
        if exps is None:
            raise ValueError("lcm of the empty subset is undefined")
        return Monomial(self.ideal.context, exps)

    def is_cover(self, mask: int) -> bool:
        return self.covered_mask[mask] != 0


@lru_cache(maxsize=64)
def tables_for(ideal: MonomialIdeal) -> SubsetTables:
    return SubsetTables(ideal)
