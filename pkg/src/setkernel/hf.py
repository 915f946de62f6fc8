"""Hereditarily finite sets as arbitrary-precision natural numbers.

Every natural is a set code: m is a member of n exactly when bit m of n is
set.  The induced map from codes to finite subsets is the order isomorphism
between the natural order and the order on finite subsets that compares the
maximum of the symmetric difference; the test suite validates that reading
rather than assuming it.

All operations are pure functions on plain ints.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Callable, Iterator

from .errors import ParseError, ResourceLimitError, ValidationError

DEFAULT_POWERSET_BOUND = 20
POWERSET_BOUND_ENV = "RELAXED_POWERSET_BOUND"


def mem(n: int, m: int) -> bool:
    """m is a member of n iff bit m of n is set."""
    _check_code(n)
    _check_code(m)
    return bool(n >> m & 1)


def members(n: int) -> Iterator[int]:
    """Members of n in increasing code order."""
    _check_code(n)
    while n:
        low = n & -n
        yield low.bit_length() - 1
        n ^= low


def singleton(m: int) -> int:
    _check_code(m)
    return 1 << m


def _check_code(n: int) -> None:
    if n < 0:
        raise ValidationError("set codes are naturals", witness=(n,))


def decode(n: int) -> str:
    """Fully expanded braces notation, members in increasing code order."""
    _check_code(n)
    return "{" + ",".join(decode(m) for m in members(n)) + "}"


def encode(text: str) -> int:
    """Inverse of :func:`decode`; duplicate siblings collapse silently."""
    pos = 0

    def parse() -> int:
        nonlocal pos
        if pos >= len(text) or text[pos] != "{":
            raise ParseError("expected '{'", position=pos)
        pos += 1
        code = 0
        if pos < len(text) and text[pos] == "}":
            pos += 1
            return 0
        while True:
            code |= 1 << parse()
            if pos >= len(text):
                raise ParseError("unterminated set", position=pos)
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == "}":
                pos += 1
                return code
            raise ParseError("expected ',' or '}'", position=pos)

    stripped = text.strip()
    text = stripped
    result = parse()
    if pos != len(text):
        raise ParseError("trailing input", position=pos)
    return result


def set_union_axiom(a: int) -> int:
    """Code whose members are the members of members of a."""
    out = 0
    for m in members(a):
        out |= m
    return out


def powerset_bound() -> int:
    value = os.environ.get(POWERSET_BOUND_ENV)
    if value is None:
        return DEFAULT_POWERSET_BOUND
    try:
        return int(value)
    except ValueError:
        raise ValidationError(
            f"{POWERSET_BOUND_ENV} must be an integer", witness=(value,)
        ) from None


def powerset(a: int, bound: int | None = None) -> int:
    """Code of the set of all subsets of a.

    The member count is 2**popcount(a), so the popcount is guarded by a
    configurable bound (default 20, env RELAXED_POWERSET_BOUND).
    """
    _check_code(a)
    if bound is None:
        bound = powerset_bound()
    pc = a.bit_count()
    if pc > bound:
        raise ResourceLimitError(
            f"powerset would have 2**{pc} members (popcount bound {bound})"
        )
    out = 0
    sub = a
    while True:
        out |= 1 << sub
        if sub == 0:
            break
        sub = (sub - 1) & a
    return out


def separation(a: int, p: Callable[[int], bool]) -> int:
    """Members of a satisfying the predicate; always a bitwise subset of a."""
    out = 0
    for m in members(a):
        if p(m):
            out |= 1 << m
    return out


def replacement(a: int, f: Callable[[int], int]) -> int:
    """Image of a under f; duplicates collapse."""
    out = 0
    for m in members(a):
        fm = f(m)
        _check_code(fm)
        out |= 1 << fm
    return out


def foundation_witness(a: int) -> int:
    """Least member of a sharing no member with a (membership-minimal)."""
    _check_code(a)
    if a == 0:
        raise ValidationError("the empty set has no members", witness=(a,))
    for m in members(a):
        if m & a == 0:
            return m
    raise ValidationError("no minimal member found", witness=(a,))


def choice_fn(a: int) -> int:
    """Least code that is not a member of a."""
    _check_code(a)
    m = 0
    while a >> m & 1:
        m += 1
    return m


def transitive_closure(a: int) -> int:
    """Least bitwise-superset of a closed under taking members of members."""
    _check_code(a)
    closure = a
    while True:
        grown = closure
        for m in members(closure):
            grown |= m
        if grown == closure:
            return closure
        closure = grown


@lru_cache(maxsize=None)
def stage(a: int) -> int:
    """von Neumann stage within the finite hierarchy: 0 for the empty set,
    otherwise one more than the largest member stage."""
    _check_code(a)
    if a == 0:
        return 0
    return 1 + max(stage(m) for m in members(a))
