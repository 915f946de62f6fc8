"""Finite logical domains and boolean-valued pairings.

A domain is a finite sequence of distinct opaque labels; a pairing is a total
boolean matrix on a product of two domains.  Rows are stored as arbitrary
precision bitmasks (bit ``j`` of row ``i`` set iff left element ``i`` relates
to right element ``j``), which keeps every quantifier in the structural
operations decidable by cheap enumeration even for large carriers.

Also provides quotients by finite equivalences and the explicit
Cantor-Bernstein bijection built from the image chain of the composed
injection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .errors import ValidationError


@dataclass(frozen=True)
class FinDomain:
    """A finite carrier of pairwise distinct string labels."""

    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, elements: Iterable[str]):
        elems = tuple(elements)
        index = {}
        for i, label in enumerate(elems):
            if label in index:
                raise ValidationError("duplicate label in domain", witness=(label,))
            index[label] = i
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError("label not in domain", witness=(label,)) from None


@dataclass(frozen=True)
class FinPairing:
    """A total boolean-valued map on ``left x right``.

    ``rows[i]`` is the bitmask of right positions related to left element
    ``i``; the matrix is total by construction.
    """

    left: FinDomain
    right: FinDomain
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.left):
            raise ValidationError("row count must match left domain size")
        limit = 1 << len(self.right)
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValidationError(
                    "row mask out of range", witness=(self.left.elements[i],)
                )

    @classmethod
    def from_pairs(cls, left: FinDomain, right: FinDomain,
                   pairs: Iterable[tuple[str, str]]) -> "FinPairing":
        rows = [0] * len(left)
        for a, b in pairs:
            rows[left.index(a)] |= 1 << right.index(b)
        return cls(left, right, tuple(rows))

    @classmethod
    def from_predicate(cls, left: FinDomain, right: FinDomain,
                       pred: Callable[[str, str], bool]) -> "FinPairing":
        rows = []
        for a in left.elements:
            row = 0
            for j, b in enumerate(right.elements):
                if pred(a, b):
                    row |= 1 << j
            rows.append(row)
        return cls(left, right, tuple(rows))

    @classmethod
    def from_matrix(cls, left: FinDomain, right: FinDomain,
                    matrix: Iterable[Iterable[bool]]) -> "FinPairing":
        rows = []
        for line in matrix:
            row = 0
            for j, cell in enumerate(line):
                if j >= len(right):
                    raise ValidationError("matrix row wider than right domain")
                if cell:
                    row |= 1 << j
            rows.append(row)
        return cls(left, right, tuple(rows))

    def holds(self, a: str, b: str) -> bool:
        return bool(self.rows[self.left.index(a)] >> self.right.index(b) & 1)

    def pairs(self) -> list[tuple[str, str]]:
        out = []
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                out.append((self.left.elements[i], self.right.elements[j]))
        return out

    def to_json_dict(self) -> dict:
        n = len(self.right)
        return {
            "left": list(self.left.elements),
            "right": list(self.right.elements),
            "rel": [[bool(row >> j & 1) for j in range(n)] for row in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FinPairing":
        try:
            left = FinDomain(data["left"])
            right = FinDomain(data["right"])
            rel = data["rel"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed pairing JSON: {exc}") from None
        if len(rel) != len(left):
            raise ValidationError("rel must have one row per left element")
        for line in rel:
            if len(line) != len(right):
                raise ValidationError("rel rows must match right domain size")
        return cls.from_matrix(left, right, rel)

    @classmethod
    def from_json(cls, text: str) -> "FinPairing":
        return cls.from_json_dict(json.loads(text))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pairing_domain(p: FinPairing) -> tuple[str, ...]:
    """Left elements related to at least one right element."""
    return tuple(a for a, row in zip(p.left.elements, p.rows) if row)


def pairing_image(p: FinPairing) -> tuple[str, ...]:
    return pairing_domain(opposite(p))


def opposite(p: FinPairing) -> FinPairing:
    cols = [0] * len(p.right)
    for i, row in enumerate(p.rows):
        for j in _bits(row):
            cols[j] |= 1 << i
    return FinPairing(p.right, p.left, tuple(cols))


def is_single_valued(p: FinPairing) -> bool:
    return all(row & (row - 1) == 0 for row in p.rows)


def is_injective(p: FinPairing) -> bool:
    return is_single_valued(opposite(p))


def detect_injective(p: FinPairing) -> bool:
    """Literal evaluation of the quantified injectivity test.

    Enumerates all (a1, a2, b) triples; kept deliberately independent of
    :func:`is_injective` so the two paths can cross-check each other.
    """
    n_left = len(p.left)
    for b in range(len(p.right)):
        for a1 in range(n_left):
            if not p.rows[a1] >> b & 1:
                continue
            for a2 in range(n_left):
                if (p.rows[a2] >> b & 1) and a1 != a2:
                    return False
    return True


def compose(a: FinPairing, b: FinPairing) -> FinPairing:
    """Relational composition: (a*b)[x,z] iff some middle y witnesses both."""
    if a.right is not b.left and a.right.elements != b.left.elements:
        raise ValidationError(
            "composition requires a.right == b.left",
            witness=(a.right.elements, b.left.elements),
        )
    rows = []
    for row in a.rows:
        out = 0
        for j in _bits(row):
            out |= b.rows[j]
        rows.append(out)
    return FinPairing(a.left, b.right, tuple(rows))


def identity_pairing(d: FinDomain) -> FinPairing:
    return FinPairing(d, d, tuple(1 << i for i in range(len(d))))


def adjoint(p: FinPairing) -> dict[str, frozenset[str]]:
    """Each left element mapped to the set of right elements it relates to."""
    return {
        a: frozenset(p.right.elements[j] for j in _bits(row))
        for a, row in zip(p.left.elements, p.rows)
    }


@dataclass(frozen=True)
class FinEquivalence:
    """An equivalence pairing on a single base domain.

    Reflexivity, symmetry and transitivity are checked at construction; a
    violation raises with the offending law and a witness tuple.
    """

    base: FinDomain
    eqv: FinPairing

    def __post_init__(self):
        p = self.eqv
        if p.left.elements != self.base.elements or p.right.elements != self.base.elements:
            raise ValidationError("equivalence pairing must live on base x base")
        labels = self.base.elements
        for i, row in enumerate(p.rows):
            if not row >> i & 1:
                raise ValidationError(
                    "not reflexive", witness=(labels[i],)
                )
        for i, row in enumerate(p.rows):
            for j in _bits(row):
                if not p.rows[j] >> i & 1:
                    raise ValidationError(
                        "not symmetric", witness=(labels[i], labels[j])
                    )
        for i, row in enumerate(p.rows):
            for j in _bits(row):
                missing = p.rows[j] & ~row
                if missing:
                    k = next(_bits(missing))
                    raise ValidationError(
                        "not transitive", witness=(labels[i], labels[j], labels[k])
                    )


def quotient(e: FinEquivalence) -> tuple[FinDomain, dict[str, str]]:
    """Domain of equivalence classes plus the canonical projection.

    Each class is named after its first representative in base order; the
    projection is surjective and identifies x, y exactly when eqv says yes.
    """
    labels = e.base.elements
    rep_of: dict[int, str] = {}
    projection: dict[str, str] = {}
    class_names: list[str] = []
    seen_rows: dict[int, str] = {}
    for i, row in enumerate(e.eqv.rows):
        if row in seen_rows:
            projection[labels[i]] = seen_rows[row]
        else:
            seen_rows[row] = labels[i]
            class_names.append(labels[i])
            projection[labels[i]] = labels[i]
    return FinDomain(class_names), projection


def _validate_injection(dom: FinDomain, cod: FinDomain, f: Mapping[str, str],
                        name: str) -> None:
    seen: dict[str, str] = {}
    for a in dom.elements:
        if a not in f:
            raise ValidationError(f"{name} is not total", witness=(a,))
        b = f[a]
        cod.index(b)
        if b in seen:
            raise ValidationError(
                f"{name} is not injective", witness=(seen[b], a)
            )
        seen[b] = a


def is_bijection(dom: FinDomain, cod: FinDomain, h: Mapping[str, str]) -> bool:
    """Independent exhaustive bijectivity verifier."""
    if len(dom) != len(cod):
        return False
    hit = set()
    for a in dom.elements:
        b = h.get(a)
        if b is None or b not in cod or b in hit:
            return False
        hit.add(b)
    return len(hit) == len(cod)


def cantor_bernstein(a: FinDomain, b: FinDomain, f: Mapping[str, str],
                     g: Mapping[str, str]) -> dict[str, str]:
    """Bijection A -> B from injections f: A -> B and g: B -> A.

    Composes to J = g . f on A, marks the layers (image of g under J-iterates
    minus image of J under J-iterates), fixes those elements and applies J
    elsewhere, then transports back through g.  Iterating |A| times suffices:
    on a finite carrier the layer chain is strictly shrinking.
    """
    _validate_injection(a, b, f, "f")
    _validate_injection(b, a, g, "g")
    j_map = {x: g[f[x]] for x in a.elements}
    k_set = frozenset(g[y] for y in b.elements)
    j_set = frozenset(j_map.values())

    stay: set[str] = set()
    layer_k, layer_j = set(k_set), set(j_set)
    for _ in range(len(a) + 1):
        stay |= layer_k - layer_j
        layer_k = {j_map[x] for x in layer_k}
        layer_j = {j_map[x] for x in layer_j}

    g_inv = {g[y]: y for y in b.elements}
    result = {}
    for x in a.elements:
        target = x if x in stay else j_map[x]
        result[x] = g_inv[target]
    if not is_bijection(a, b, result):
        raise ValidationError("internal error: construction failed to produce a bijection")
    return result
