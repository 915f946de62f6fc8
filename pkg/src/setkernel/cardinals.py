"""Finite and symbolic cardinal arithmetic.

Cardinals are either exact finite counts or symbols of the iterated-powerset
tower indexed by an ordinal notation.  Every finite cardinal sits below
every tower symbol, and tower symbols compare by index; this ordering is the
whole model, so the max rule for products and unions, strong limits, and
the rank function are all decidable at the symbol level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import ordinals
from .errors import ValidationError
from .ordinals import OrdinalCNF

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class SymCardinal:
    """Either Fin(n) for a natural n, or Beth(a) for a notation a."""

    tag: str  # "fin" | "beth"
    fin_value: Optional[int] = None
    beth_index: Optional[OrdinalCNF] = None

    def __post_init__(self):
        if self.tag == "fin":
            if self.fin_value is None or self.beth_index is not None or self.fin_value < 0:
                raise ValidationError("fin cardinal needs a single natural payload")
        elif self.tag == "beth":
            if self.beth_index is None or self.fin_value is not None:
                raise ValidationError("beth cardinal needs a single index payload")
        else:
            raise ValidationError("tag must be 'fin' or 'beth'", witness=(self.tag,))

    def __str__(self) -> str:
        if self.tag == "fin":
            return f"fin:{self.fin_value}"
        return f"beth:{ordinals.format_ordinal(self.beth_index)}"


def fin(n: int) -> SymCardinal:
    return SymCardinal("fin", fin_value=n)


def beth(a: Union[int, OrdinalCNF]) -> SymCardinal:
    """Tower symbol with the given index; index 0 is the first infinite cardinal."""
    if isinstance(a, int):
        a = OrdinalCNF.from_int(a)
    return SymCardinal("beth", beth_index=a)


def card_cmp(a: SymCardinal, b: SymCardinal) -> int:
    """Total order: finites by value, every finite below every tower symbol,
    tower symbols by index (the tower is strictly increasing)."""
    if a.tag == "fin" and b.tag == "fin":
        if a.fin_value == b.fin_value:
            return EQUAL
        return LESS if a.fin_value < b.fin_value else GREATER
    if a.tag == "fin":
        return LESS
    if b.tag == "fin":
        return GREATER
    return ordinals.cmp(a.beth_index, b.beth_index)


def card_max(a: SymCardinal, b: SymCardinal) -> SymCardinal:
    return a if card_cmp(a, b) != LESS else b


def card_product(a: SymCardinal, b: SymCardinal) -> SymCardinal:
    """Product cardinality: exact for finite pairs, max rule otherwise."""
    if a.tag == "fin" and b.tag == "fin":
        return fin(a.fin_value * b.fin_value)
    return card_max(a, b)


def card_union(a: SymCardinal, b: SymCardinal) -> SymCardinal:
    """Union cardinality: disjoint-union sum for finite pairs, max rule
    otherwise.  For overlapping finite sets the sum is only an upper bound;
    the deterministic disjoint value is returned."""
    if a.tag == "fin" and b.tag == "fin":
        return fin(a.fin_value + b.fin_value)
    return card_max(a, b)


def is_strong_limit(c: SymCardinal) -> bool:
    """Tower symbols at index 0 or at a limit index; never finite counts."""
    if c.tag != "beth":
        return False
    return c.beth_index.is_zero or ordinals.is_limit(c.beth_index)


def rank_of_cardinal(c: SymCardinal) -> OrdinalCNF:
    """Least tower index whose value strictly exceeds c.

    Finite counts have rank 0; Beth(a) has rank succ(a) since the tower is
    strictly increasing.
    """
    if c.tag == "fin":
        return ordinals.ZERO
    return ordinals.succ(c.beth_index)


def cofinality_transfer(b: OrdinalCNF) -> str:
    """Cofinality tag of the tower value at index b, which equals the
    cofinality of b itself."""
    return ordinals.cofinality(b)


def rank_law_1b(x_level: OrdinalCNF) -> OrdinalCNF:
    """Predecessor of a successor level; levels 0 and limits are rejected
    because element ranks are never limits."""
    if x_level.is_zero:
        raise ValidationError("level 0 has no predecessor", witness=(x_level,))
    if ordinals.is_limit(x_level):
        raise ValidationError(
            "element ranks cannot be limits", witness=(x_level,)
        )
    exp, coeff = x_level.terms[-1]
    if coeff == 1:
        return OrdinalCNF(x_level.terms[:-1])
    return OrdinalCNF(x_level.terms[:-1] + ((exp, coeff - 1),))


def parse_cardinal(text: str) -> SymCardinal:
    """Parse the ``fin:<n>`` / ``beth:<ordinal>`` text syntax."""
    stripped = text.strip()
    if stripped.startswith("fin:"):
        payload = stripped[4:]
        if not payload.isdigit():
            raise ValidationError("fin payload must be a natural", witness=(payload,))
        return fin(int(payload))
    if stripped.startswith("beth:"):
        return beth(ordinals.parse_ordinal(stripped[5:]))
    raise ValidationError(
        "cardinal syntax is fin:<n> or beth:<ordinal>", witness=(stripped,)
    )
