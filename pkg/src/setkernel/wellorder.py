"""Finite well-orders and the recursion engine built on them.

A finite well-order is a carrier domain with a rank bijection onto an
initial segment of the naturals.  Recursion conditions are pure step
functions receiving an immutable snapshot of the partial function built so
far; returning the ``UNDEFINED`` sentinel stops the recursion, which is the
ordinary success mode for partial results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterable, Mapping

from .domains import FinDomain
from .errors import ValidationError

#: Sentinel returned by a recursion step to signal "no value here".
UNDEFINED = object()

RecursionCondition = Callable[[Mapping[str, object], str], object]


@dataclass(frozen=True)
class FinWellOrder:
    """A carrier with a total order presented as a rank bijection."""

    carrier: FinDomain
    ranks: tuple[int, ...]

    def __post_init__(self):
        n = len(self.carrier)
        if len(self.ranks) != n or sorted(self.ranks) != list(range(n)):
            raise ValidationError(
                "ranks must be a bijection onto an initial segment",
                witness=(self.ranks,),
            )

    @classmethod
    def from_sequence(cls, labels: Iterable[str]) -> "FinWellOrder":
        """Build from labels listed in increasing rank order."""
        labels = tuple(labels)
        carrier = FinDomain(labels)
        return cls(carrier, tuple(range(len(labels))))

    def rank_of(self, label: str) -> int:
        return self.ranks[self.carrier.index(label)]

    def by_rank(self) -> tuple[str, ...]:
        ordered = sorted(self.carrier.elements, key=self.rank_of)
        return tuple(ordered)

    def ge(self, a: str, b: str) -> bool:
        return self.rank_of(a) >= self.rank_of(b)

    def to_json(self) -> str:
        return json.dumps(list(self.by_rank()))

    @classmethod
    def from_json(cls, text: str) -> "FinWellOrder":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
            raise ValidationError("well-order JSON must be a list of labels")
        return cls.from_sequence(data)


def is_saturated(w: FinWellOrder, subset: Iterable[str]) -> bool:
    """True iff the subset is a rank-initial segment of the order."""
    ranks = sorted(w.rank_of(x) for x in set(subset))
    return ranks == list(range(len(ranks)))


def recurse(w: FinWellOrder, step: RecursionCondition) -> dict[str, object]:
    """Maximal recursive partial function for the given step condition.

    Walks the carrier in increasing rank order, feeding each step an
    immutable snapshot of the values so far, and stops at the first element
    where the step reports ``UNDEFINED``.  The resulting domain is always
    saturated, and by the uniqueness of recursive functions this single pass
    reaches the maximal one.
    """
    values: dict[str, object] = {}
    for label in w.by_rank():
        result = step(MappingProxyType(dict(values)), label)
        if result is UNDEFINED:
            break
        values[label] = result
    return values


def recurse_topdown(w: FinWellOrder, step: RecursionCondition) -> dict[str, object]:
    """Demand-driven recomputation of :func:`recurse`, used as a cross-check.

    Evaluates from the top element down, recursively filling in everything
    below before each step call.  Must agree with the bottom-up pass.
    """
    ordered = w.by_rank()
    values: dict[str, object] = {}
    blocked = False

    def ensure(upto: int) -> bool:
        # Returns False once the recursion has stopped below position upto.
        nonlocal blocked
        for pos in range(upto + 1):
            label = ordered[pos]
            if label in values:
                continue
            if blocked:
                return False
            result = step(MappingProxyType(dict(values)), label)
            if result is UNDEFINED:
                blocked = True
                return False
            values[label] = result
        return True

    for pos in reversed(range(len(ordered))):
        if ensure(pos):
            break
    return values


def max_order_iso(a: FinWellOrder, b: FinWellOrder) -> dict[str, str]:
    """Maximal order-isomorphism between saturated segments of a and b.

    Realized by the recursion step "least element of b not yet in the
    image"; undefined once the image exhausts b.
    """
    b_ordered = b.by_rank()

    def step(partial: Mapping[str, object], _label: str):
        pos = len(partial)
        if pos >= len(b_ordered):
            return UNDEFINED
        return b_ordered[pos]

    return recurse(a, step)  # type: ignore[return-value]


def well_order_from_choice(d: FinDomain,
                           ch: Callable[[frozenset[str]], str]) -> FinWellOrder:
    """Enumerate a domain by repeatedly choosing outside the chosen set.

    ``ch`` must send every proper subset of the carrier to an element not in
    it; a violation aborts with the offending subset as witness.
    """
    chosen: list[str] = []
    chosen_set: set[str] = set()
    for _ in range(len(d)):
        pick = ch(frozenset(chosen_set))
        if pick not in d:
            raise ValidationError(
                "choice returned a stray element",
                witness=(frozenset(chosen_set), pick),
            )
        if pick in chosen_set:
            raise ValidationError(
                "choice returned an element of its argument",
                witness=(frozenset(chosen_set), pick),
            )
        chosen.append(pick)
        chosen_set.add(pick)
    return FinWellOrder.from_sequence(chosen)


def choice_table_from_json(text: str) -> Callable[[frozenset[str]], str]:
    """Choice function from a JSON map of comma-joined sorted subsets.

    The empty subset is keyed by the empty string.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValidationError("choice table JSON must be an object")

    def ch(subset: frozenset[str]) -> str:
        key = ",".join(sorted(subset))
        if key not in data:
            raise ValidationError("choice table is missing a subset", witness=(subset,))
        return data[key]

    return ch
