"""Serialization of exact rationals: "p/q" in lowest terms, bare "p" for integers."""

from __future__ import annotations

from fractions import Fraction


def format_rational(x: Fraction) -> str:
    # Fraction normalizes to lowest terms with positive denominator,
    # and str() renders exactly the wire format.
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text.strip()!r}") from exc


def parse_amounts(text: str) -> tuple[Fraction, ...]:
    """Parse a comma- or whitespace-separated list of rationals."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty list of amounts")
    return tuple(parse_rational(tok) for tok in tokens)
