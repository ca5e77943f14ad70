"""Shared helpers for the test suite."""

from hypothesis import HealthCheck, settings

from lyubeznik import MonomialIdeal, VariableContext, parse_ideal

settings.register_profile(
    "suite", deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


def ideal(text: str) -> MonomialIdeal:
    """Parse an inline ideal description (same grammar as the files)."""
    return parse_ideal(text)


def xyz_ideal(*gens: str) -> MonomialIdeal:
    """Ideal over fixed variables x, y, z, t from generator strings."""
    lines = ["vars x y z t"] + [f"gen {g}" for g in gens]
    return parse_ideal("\n".join(lines))


def exponent_ideal(rows) -> MonomialIdeal:
    """Ideal over x1..xn from explicit exponent tuples."""
    n = len(rows[0])
    context = VariableContext(tuple(f"x{i}" for i in range(1, n + 1)))
    from lyubeznik import Monomial
    return MonomialIdeal.from_generators(
        [Monomial(context, tuple(row)) for row in rows])
