"""Well-founded membership graphs and their collapse into set codes.

A graph carries an edge pairing where an edge a -> b reads "b is a member
of a".  Acyclicity of the transitive closure is the executable form of
well-foundedness on a finite carrier; the equivalence with the
saturated-complement definition is exercised in the tests rather than
assumed.  Collapsing maps every vertex to the code whose bit set is the
image of its children, which is the unique morphism into the universal
membership pairing; non-extensional graphs are accepted and simply merge
bisimilar vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

from . import hf
from .domains import FinDomain, FinPairing, _bits
from .errors import ValidationError


@dataclass(frozen=True)
class WFGraph:
    """Finite carrier with a membership pairing on it."""

    vertices: FinDomain
    edges: FinPairing

    def __post_init__(self):
        e = self.edges
        if (e.left.elements != self.vertices.elements
                or e.right.elements != self.vertices.elements):
            raise ValidationError("edge pairing must live on vertices x vertices")

    @classmethod
    def from_children(cls, children: Mapping[str, list[str]],
                      order: Optional[list[str]] = None) -> "WFGraph":
        labels = list(order) if order is not None else list(children)
        for kids in children.values():
            for kid in kids:
                if kid not in labels:
                    labels.append(kid)
        dom = FinDomain(labels)
        pairs = [(v, c) for v, kids in children.items() for c in kids]
        return cls(dom, FinPairing.from_pairs(dom, dom, pairs))

    def children(self, label: str) -> tuple[str, ...]:
        row = self.edges.rows[self.vertices.index(label)]
        return tuple(self.vertices.elements[j] for j in _bits(row))


def transitive_closure_rel(g: WFGraph) -> FinPairing:
    """Smallest transitive pairing containing the edges (reachability)."""
    rows = list(g.edges.rows)
    n = len(rows)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            grown = rows[i]
            for j in _bits(rows[i]):
                grown |= rows[j]
            if grown != rows[i]:
                rows[i] = grown
                changed = True
    return FinPairing(g.vertices, g.vertices, tuple(rows))


def is_well_founded(g: WFGraph) -> tuple[bool, Optional[list[str]]]:
    """Acyclicity of the closure; on failure the witness is a cycle."""
    labels = g.vertices.elements
    n = len(labels)
    rows = g.edges.rows
    state = [0] * n  # 0 unvisited, 1 on stack, 2 done

    for start in range(n):
        if state[start]:
            continue
        path = [start]
        state[start] = 1
        iters = [iter(list(_bits(rows[start])))]
        while iters:
            try:
                nxt = next(iters[-1])
            except StopIteration:
                state[path.pop()] = 2
                iters.pop()
                continue
            if state[nxt] == 1:
                cycle_start = path.index(nxt)
                cycle = [labels[i] for i in path[cycle_start:]]
                return False, cycle
            if state[nxt] == 0:
                state[nxt] = 1
                path.append(nxt)
                iters.append(iter(list(_bits(rows[nxt]))))
    return True, None


def is_extensional(g: WFGraph) -> tuple[bool, Optional[tuple[str, str]]]:
    """Distinct vertices must have distinct member sets."""
    seen: dict[int, int] = {}
    for i, row in enumerate(g.edges.rows):
        if row in seen:
            return False, (g.vertices.elements[seen[row]], g.vertices.elements[i])
        seen[row] = i
    return True, None


def collapse(g: WFGraph) -> dict[str, int]:
    """Map each vertex to the code whose bits are its collapsed children.

    Computed in topological order of the membership edges; rejects graphs
    whose closure has a cycle, carrying the cycle as witness.
    """
    ok, cycle = is_well_founded(g)
    if not ok:
        raise ValidationError("graph is not well-founded", witness=cycle)
    labels = g.vertices.elements
    rows = g.edges.rows
    codes: dict[int, int] = {}

    # iterative DFS keeps deep membership chains off the Python stack
    for start in range(len(labels)):
        stack = [start]
        while stack:
            i = stack[-1]
            if i in codes:
                stack.pop()
                continue
            pending = [j for j in _bits(rows[i]) if j not in codes]
            if pending:
                stack.extend(pending)
                continue
            code = 0
            for j in _bits(rows[i]):
                code |= 1 << codes[j]
            codes[i] = code
            stack.pop()
    return {labels[i]: codes[i] for i in range(len(labels))}


def is_morphism(g: WFGraph, f: Mapping[str, int]) -> tuple[bool, Optional[tuple[str, int]]]:
    """Check the defining biconditional of a membership-graph morphism.

    For every vertex a and every code x that is either a member of f(a) or
    an image value: x is a member of f(a) iff some child b has f(b) = x.
    """
    labels = g.vertices.elements
    for a in labels:
        if a not in f:
            raise ValidationError("map is not total on vertices", witness=(a,))
    image = set(f[a] for a in labels)
    for a in labels:
        fa = f[a]
        child_codes = {f[b] for b in g.children(a)}
        candidates = set(hf.members(fa)) | image
        for x in candidates:
            if hf.mem(fa, x) != (x in child_codes):
                return False, (a, x)
    return True, None


def membership_graph(n: int) -> WFGraph:
    """Graph of the hereditary members of n, edges given by bit membership."""
    codes = sorted(set(hf.members(hf.transitive_closure(1 << n))))
    dom = FinDomain(tuple(str(c) for c in codes))
    rows = []
    pos = {c: i for i, c in enumerate(codes)}
    for c in codes:
        row = 0
        for m in hf.members(c):
            row |= 1 << pos[m]
        rows.append(row)
    return WFGraph(dom, FinPairing(dom, dom, tuple(rows)))


# ---------------------------------------------------------------------------
# text and JSON formats


def parse_graph_text(text: str) -> WFGraph:
    """One line per vertex: ``name: child1 child2 ...``."""
    children: dict[str, list[str]] = {}
    order: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValidationError("graph line needs 'name: children'", witness=(line,))
        name, _, rest = line.partition(":")
        name = name.strip()
        if name in children:
            raise ValidationError("duplicate vertex line", witness=(name,))
        children[name] = rest.split()
        order.append(name)
    return WFGraph.from_children(children, order=order)


def graph_from_json(text: str) -> WFGraph:
    pairing = FinPairing.from_json(text)
    dom = pairing.left
    return WFGraph(dom, pairing)


def collapse_to_json(g: WFGraph, mapping: Mapping[str, int]) -> str:
    return json.dumps(
        {v: {"code": mapping[v], "braces": hf.decode(mapping[v])}
         for v in g.vertices.elements},
        indent=2,
    )
