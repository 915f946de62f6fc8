"""Ordinal notations in Cantor normal form below epsilon_0.

A notation is a strictly-decreasing list of (exponent, coefficient) terms,
exponents themselves notations.  This is the desk-scale fragment of the
universal almost-well-ordered domain: comparison, successor, limits, sup,
cofinality tags, the canonical (partially symmetrized lexicographic) order
on pairs, and the finite pairing bijection it induces on naturals.

Text syntax: ``0``, decimal naturals, ``w``, ``w^<ord>*<k>`` joined by ``+``
with strictly decreasing exponents, e.g. ``w^2*3+w+1``.  Parenthesized
exponents are allowed for nested sums, e.g. ``w^(w+1)*2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import ParseError, ValidationError

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class OrdinalCNF:
    """Cantor-normal-form notation: sum of w^exponent * coefficient terms."""

    terms: tuple[tuple["OrdinalCNF", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, OrdinalCNF) or not isinstance(coeff, int):
                raise ValidationError("terms must be (OrdinalCNF, int) pairs")
            if coeff < 1:
                raise ValidationError("coefficients must be >= 1", witness=(coeff,))
            if prev is not None and cmp(prev, exp) != GREATER:
                raise ValidationError(
                    "exponents must be strictly decreasing", witness=(prev, exp)
                )
            prev = exp

    @staticmethod
    def from_int(n: int) -> "OrdinalCNF":
        if n < 0:
            raise ValidationError("notations denote naturals and beyond, not negatives")
        if n == 0:
            return ZERO
        return OrdinalCNF(((ZERO, n),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def to_int(self) -> int:
        if not self.is_finite:
            raise ValidationError("finite fragment only", witness=(self,))
        return self.terms[0][1] if self.terms else 0

    def __str__(self) -> str:
        return format_ordinal(self)

    def __lt__(self, other):
        return cmp(self, other) == LESS

    def __le__(self, other):
        return cmp(self, other) != GREATER

    def __gt__(self, other):
        return cmp(self, other) == GREATER

    def __ge__(self, other):
        return cmp(self, other) != LESS


ZERO = OrdinalCNF()
ONE = OrdinalCNF(((ZERO, 1),))
OMEGA = OrdinalCNF(((ONE, 1),))


def cmp(a: OrdinalCNF, b: OrdinalCNF) -> int:
    """Total order on notations: lexicographic on (exponent, coefficient)."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = cmp(ea, eb)
        if c != EQUAL:
            return c
        if ca != cb:
            return LESS if ca < cb else GREATER
    if len(a.terms) == len(b.terms):
        return EQUAL
    return GREATER if len(a.terms) > len(b.terms) else LESS


def succ(a: OrdinalCNF) -> OrdinalCNF:
    terms = a.terms
    if terms and terms[-1][0].is_zero:
        exp, coeff = terms[-1]
        return OrdinalCNF(terms[:-1] + ((exp, coeff + 1),))
    return OrdinalCNF(terms + ((ZERO, 1),))


def is_limit(a: OrdinalCNF) -> bool:
    return bool(a.terms) and not a.terms[-1][0].is_zero


def sup(hs: Sequence[OrdinalCNF]) -> OrdinalCNF:
    """Least upper bound of a finite nonempty family, i.e. its maximum."""
    if not hs:
        raise ValidationError("sup of an empty family is undefined")
    best = hs[0]
    for h in hs[1:]:
        if cmp(h, best) == GREATER:
            best = h
    return best


def cofinality(a: OrdinalCNF) -> str:
    """Cofinality tag: 'zero', 'one' (successors), or 'omega' (limits)."""
    if a.is_zero:
        return "zero"
    return "omega" if is_limit(a) else "one"


def fundamental_sequence(a: OrdinalCNF, n: int) -> OrdinalCNF:
    """n-th element of a canonical increasing sequence with sup a (a a limit)."""
    if not is_limit(a):
        raise ValidationError("fundamental sequences exist only for limits", witness=(a,))
    head, (exp, coeff) = a.terms[:-1], a.terms[-1]
    if coeff > 1:
        prefix = head + ((exp, coeff - 1),)
    else:
        prefix = head
    if is_limit(exp):
        tail = ((fundamental_sequence(exp, n), 1),)
    elif exp == ONE:
        tail = ((ZERO, n),) if n > 0 else ()
    else:
        pred = _pred_of_successor(exp)
        tail = ((pred, n),) if n > 0 else ()
    return OrdinalCNF(prefix + tail)


def _pred_of_successor(a: OrdinalCNF) -> OrdinalCNF:
    exp, coeff = a.terms[-1]
    assert exp.is_zero
    if coeff == 1:
        return OrdinalCNF(a.terms[:-1])
    return OrdinalCNF(a.terms[:-1] + ((exp, coeff - 1),))


@dataclass(frozen=True)
class PairCanonical:
    """A pair of notations ordered by the canonical product order."""

    first: OrdinalCNF
    second: OrdinalCNF


def cmp_canonical(p: PairCanonical, q: PairCanonical) -> int:
    """Canonical order on pairs: compare maxima, then first, then second.

    Pairs with equal maximum split into the block (<c, c) followed by the
    block (c, <=c); comparing the first then the second component realizes
    exactly that refinement.
    """
    mp = sup([p.first, p.second])
    mq = sup([q.first, q.second])
    c = cmp(mp, mq)
    if c != EQUAL:
        return c
    c = cmp(p.first, q.first)
    if c != EQUAL:
        return c
    return cmp(p.second, q.second)


OrdLike = Union[int, OrdinalCNF]


def _as_nat(x: OrdLike) -> int:
    if isinstance(x, OrdinalCNF):
        return x.to_int()
    if x < 0:
        raise ValidationError("finite fragment only", witness=(x,))
    return x


def pair_index(a: OrdLike, b: OrdLike) -> int:
    """Position of (a, b) in the canonical order on naturals x naturals.

    Closed form: with m = max(a, b), pairs below the (m, m) block occupy the
    m*m initial square; the block itself lists (0, m) .. (m-1, m) then
    (m, 0) .. (m, m).  Validated against brute-force enumeration of the
    canonical order in the test suite.
    """
    a, b = _as_nat(a), _as_nat(b)
    m = max(a, b)
    if b == m and a < m:
        return m * m + a
    return m * m + m + b


def unpair(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValidationError("finite fragment only", witness=(n,))
    m = math.isqrt(n)
    r = n - m * m
    if r < m:
        return (r, m)
    return (m, r - m)


def classify_finite(w) -> OrdinalCNF:
    """Order type of a finite well-order: the notation of its carrier size."""
    return OrdinalCNF.from_int(len(w.carrier))


# ---------------------------------------------------------------------------
# text syntax


def format_ordinal(a: OrdinalCNF) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exp, coeff in a.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        if exp == ONE:
            base = "w"
        elif exp.is_finite:
            base = f"w^{exp.to_int()}"
        elif exp == OMEGA:
            base = "w^w"
        else:
            base = f"w^({format_ordinal(exp)})"
        parts.append(base if coeff == 1 else f"{base}*{coeff}")
    return "+".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, position=self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def parse_nat(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def parse_ordinal(self) -> OrdinalCNF:
        if self.peek() == "0":
            self.pos += 1
            if self.peek().isdigit():
                raise self.error("no leading zeros")
            return ZERO
        terms = []
        while True:
            terms.append(self.parse_term())
            if self.peek() == "+":
                self.pos += 1
            else:
                break
        prev = None
        for exp, _ in terms:
            if prev is not None and cmp(prev, exp) != GREATER:
                raise self.error(
                    "non-canonical: exponents must strictly decrease "
                    f"({format_ordinal(prev)} then {format_ordinal(exp)})"
                )
            prev = exp
        return OrdinalCNF(tuple(terms))

    def parse_term(self) -> tuple[OrdinalCNF, int]:
        if self.peek() == "w":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                if self.peek() == "(":
                    self.pos += 1
                    exp = self.parse_ordinal()
                    self.expect(")")
                elif self.peek() == "w":
                    # only a bare w here; deeper nesting needs parentheses
                    self.pos += 1
                    exp = OMEGA
                else:
                    exp = OrdinalCNF.from_int(self.parse_nat())
                if exp.is_zero:
                    raise self.error("non-canonical: w^0 must be written as 1")
            else:
                exp = ONE
            coeff = 1
            if self.peek() == "*":
                self.pos += 1
                coeff = self.parse_nat()
                if coeff == 0:
                    raise self.error("coefficients must be >= 1")
            return (exp, coeff)
        value = self.parse_nat()
        if value == 0:
            raise self.error("0 may only appear alone")
        return (ZERO, value)


def parse_ordinal(text: str) -> OrdinalCNF:
    parser = _Parser(text.strip())
    if not parser.text:
        raise ParseError("empty ordinal", position=0)
    result = parser.parse_ordinal()
    if parser.pos != len(parser.text):
        raise parser.error("trailing input")
    return result
