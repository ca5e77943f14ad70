"""Bundled example ideals and graphs used by the property test suite.

Every worked example in the documentation plus a spread of small edge
ideals and mixed-degree ideals.  ``sweep_ideals`` restricts to the
sizes the all-orders property sweeps can afford (at most 6 generators
on at most 6 variables); the seven-generator ideal ships anyway for
the single-order tests.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .graphs import SimpleGraph, parse_graph
from .monomials import MonomialIdeal, parse_ideal

SWEEP_MAX_GENERATORS = 6
SWEEP_MAX_VARIABLES = 6


def _data_dir():
    return resources.files(__package__) / "data" / "corpus"


@lru_cache(maxsize=1)
def ideal_names() -> tuple[str, ...]:
    names = [p.name.removesuffix(".ideal")
             for p in _data_dir().iterdir() if p.name.endswith(".ideal")]
    return tuple(sorted(names))


@lru_cache(maxsize=1)
def graph_names() -> tuple[str, ...]:
    names = [p.name.removesuffix(".graph")
             for p in _data_dir().iterdir() if p.name.endswith(".graph")]
    return tuple(sorted(names))


@lru_cache(maxsize=64)
def load_ideal(name: str) -> MonomialIdeal:
    path = _data_dir() / f"{name}.ideal"
    if not path.is_file():
        raise KeyError(f"no bundled ideal named {name!r}")
    return parse_ideal(path.read_text(encoding="utf-8"))


@lru_cache(maxsize=64)
def load_graph(name: str) -> SimpleGraph:
    path = _data_dir() / f"{name}.graph"
    if not path.is_file():
        raise KeyError(f"no bundled graph named {name!r}")
    return parse_graph(path.read_text(encoding="utf-8"))


def all_ideals() -> tuple[tuple[str, MonomialIdeal], ...]:
    return tuple((name, load_ideal(name)) for name in ideal_names())


def sweep_ideals() -> tuple[tuple[str, MonomialIdeal], ...]:
    """The corpus subset small enough for exhaustive all-orders sweeps."""
    return tuple((name, ideal) for name, ideal in all_ideals()
                 if ideal.mu <= SWEEP_MAX_GENERATORS
                 and len(ideal.context) <= SWEEP_MAX_VARIABLES)


def all_graphs() -> tuple[tuple[str, SimpleGraph], ...]:
    return tuple((name, load_graph(name)) for name in graph_names())
