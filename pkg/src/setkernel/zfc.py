"""Audit a finite membership structure against the translated ZFC axioms.

The model is a pool of potential elements with a total membership pairing
(``row(a)`` is the set of members of a, stored as a bitmask over element
positions).  Each axiom check returns pass/fail with a structured witness;
failure is data, never an exception.  Infinity is always evaluated and is
simply false on a finite pool.

Separation is checked against all extensional subsets of each row up to a
popcount bound, the strong reading in which "property" means arbitrary
subset.  Replacement over all set functions is exponential, so beyond a
bound the checker samples with a fixed seed and says so in the report.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from . import hf
from .domains import FinDomain, FinPairing, _bits, compose
from .errors import ValidationError

AXIOM_ORDER = (
    "foundation",
    "sets-are-sets",
    "extensionality",
    "union",
    "powerset",
    "infinity",
    "choice",
    "separation",
    "replacement",
)


@dataclass(frozen=True)
class ModelDesc:
    """Element labels plus one membership bitmask per element."""

    sigma: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.sigma) != len(self.rows):
            raise ValidationError("one row per element required")
        limit = 1 << len(self.sigma)
        for label, row in zip(self.sigma, self.rows):
            if row < 0 or row >= limit:
                raise ValidationError("row mask out of range", witness=(label,))

    @classmethod
    def from_pairing(cls, p: FinPairing) -> "ModelDesc":
        if p.left.elements != p.right.elements:
            raise ValidationError("model pairing must be square")
        return cls(p.left.elements, p.rows)

    @classmethod
    def from_vk(cls, k: int) -> "ModelDesc":
        """Finite cumulative-hierarchy truncation: all codes of stage < k."""
        if k < 0:
            raise ValidationError("stage must be a natural", witness=(k,))
        size = 0
        for _ in range(k):
            if size > 20:
                raise ValidationError("truncation too large", witness=(k,))
            size = 1 << size
        return cls.from_codes(range(size))

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> "ModelDesc":
        """Model on explicit set codes with bit membership.

        Members outside the given pool are dropped from rows, matching the
        usual truncation semantics.
        """
        code_list = sorted(set(codes))
        pos = {c: i for i, c in enumerate(code_list)}
        rows = []
        for c in code_list:
            row = 0
            for m in hf.members(c):
                if m in pos:
                    row |= 1 << pos[m]
            rows.append(row)
        return cls(tuple(str(c) for c in code_list), tuple(rows))

    def row_labels(self, index: int) -> list[str]:
        return [self.sigma[j] for j in _bits(self.rows[index])]


@dataclass(frozen=True)
class CheckConfig:
    separation_bound: int = 12
    separation_samples: int = 64
    replacement_exhaustive_bound: int = 256
    replacement_samples: int = 64
    seed: int = 0
    extensionality_strict: bool = True
    # Optional restriction of the universally quantified element in the
    # powerset check (labels).  Used for truncations known to be
    # powerset-closed only below a stage.
    powerset_restrict: Optional[frozenset[str]] = None


@dataclass
class AxiomReport:
    axiom: str
    verdict: str  # "pass" | "fail" | "not-applicable"
    witness: Optional[dict] = None
    note: Optional[str] = None

    def __post_init__(self):
        if self.verdict == "fail" and self.witness is None:
            raise ValidationError("failing report requires a witness")

    def to_json_dict(self) -> dict:
        out = {"axiom": self.axiom, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note is not None:
            out["note"] = self.note
        return out


def check_all(m: ModelDesc, config: CheckConfig | None = None) -> list[AxiomReport]:
    """Run every axiom check in deterministic order."""
    cfg = config or CheckConfig()
    row_index = {row: i for i, row in enumerate(m.rows)}
    checks = {
        "foundation": lambda: _check_foundation(m),
        "sets-are-sets": lambda: AxiomReport(
            "sets-are-sets", "pass", note="rows are finite by construction"
        ),
        "extensionality": lambda: _check_extensionality(m, cfg),
        "union": lambda: _check_union(m, row_index),
        "powerset": lambda: _check_powerset(m, cfg, row_index),
        "infinity": lambda: AxiomReport(
            "infinity", "fail",
            witness={"reason": "no element has an infinite member set"},
            note="finite model",
        ),
        "choice": lambda: _check_choice(m),
        "separation": lambda: _check_separation(m, cfg, row_index),
        "replacement": lambda: _check_replacement(m, cfg, row_index),
    }
    return [checks[name]() for name in AXIOM_ORDER]


def _check_foundation(m: ModelDesc) -> AxiomReport:
    for i, row in enumerate(m.rows):
        if row == 0:
            continue
        if all(m.rows[j] & row for j in _bits(row)):
            return AxiomReport(
                "foundation", "fail",
                witness={"element": m.sigma[i], "members": m.row_labels(i)},
            )
    return AxiomReport("foundation", "pass")


def _check_extensionality(m: ModelDesc, cfg: CheckConfig) -> AxiomReport:
    in_some_row = 0
    for row in m.rows:
        in_some_row |= row
    seen: dict[int, int] = {}
    for i, row in enumerate(m.rows):
        if not cfg.extensionality_strict and not in_some_row >> i & 1:
            # lenient mode: only elements that occur inside rows are compared
            continue
        if row in seen:
            return AxiomReport(
                "extensionality", "fail",
                witness={"pair": [m.sigma[seen[row]], m.sigma[i]],
                         "members": m.row_labels(i)},
            )
        seen[row] = i
    note = None if cfg.extensionality_strict else "lenient (within-rows)"
    return AxiomReport("extensionality", "pass", note=note)


def _check_union(m: ModelDesc, row_index: dict[int, int]) -> AxiomReport:
    for i, row in enumerate(m.rows):
        target = 0
        for j in _bits(row):
            target |= m.rows[j]
        if target not in row_index:
            return AxiomReport(
                "union", "fail",
                witness={"element": m.sigma[i],
                         "missing_union": [m.sigma[j] for j in _bits(target)]},
            )
    return AxiomReport("union", "pass")


def _check_powerset(m: ModelDesc, cfg: CheckConfig,
                    row_index: dict[int, int]) -> AxiomReport:
    if cfg.powerset_restrict is not None:
        candidates = [i for i, lab in enumerate(m.sigma)
                      if lab in cfg.powerset_restrict]
    else:
        candidates = range(len(m.sigma))
    failing = []
    for i in candidates:
        row = m.rows[i]
        target = 0
        for j, other in enumerate(m.rows):
            if other & ~row == 0:
                target |= 1 << j
        if target not in row_index:
            failing.append(i)
    if failing:
        # report the witness latest in pool order: the top-stage failure
        i = failing[-1]
        return AxiomReport(
            "powerset", "fail",
            witness={"element": m.sigma[i], "members": m.row_labels(i)},
        )
    note = "restricted" if cfg.powerset_restrict is not None else None
    return AxiomReport("powerset", "pass", note=note)


def _check_choice(m: ModelDesc) -> AxiomReport:
    universe = (1 << len(m.sigma)) - 1
    for i, row in enumerate(m.rows):
        if row == universe and universe != 0:
            return AxiomReport(
                "choice", "fail",
                witness={"element": m.sigma[i],
                         "reason": "member set covers the whole pool"},
            )
    # constructed witness: each element maps to its least non-member
    witness_fn = None
    if len(m.sigma) <= 32:
        witness_fn = {}
        for i, row in enumerate(m.rows):
            free = next(j for j in range(len(m.sigma) + 1)
                        if not row >> j & 1)
            if free < len(m.sigma):
                witness_fn[m.sigma[i]] = m.sigma[free]
    note = None
    if witness_fn is not None:
        note = "choice function: " + json.dumps(witness_fn)
    return AxiomReport("choice", "pass", note=note)


def _check_separation(m: ModelDesc, cfg: CheckConfig,
                      row_index: dict[int, int]) -> AxiomReport:
    rng = random.Random(cfg.seed)
    sampled = False
    for i, row in enumerate(m.rows):
        pc = row.bit_count()
        if pc <= cfg.separation_bound:
            sub = row
            while True:
                if sub not in row_index:
                    return _separation_fail(m, i, sub)
                if sub == 0:
                    break
                sub = (sub - 1) & row
        else:
            sampled = True
            bits = list(_bits(row))
            for _ in range(cfg.separation_samples):
                sub = 0
                for b in bits:
                    if rng.random() < 0.5:
                        sub |= 1 << b
                if sub not in row_index:
                    return _separation_fail(m, i, sub)
    note = f"sampled beyond popcount {cfg.separation_bound} (seed {cfg.seed})" \
        if sampled else None
    return AxiomReport("separation", "pass", note=note)


def _separation_fail(m: ModelDesc, i: int, sub: int) -> AxiomReport:
    return AxiomReport(
        "separation", "fail",
        witness={"element": m.sigma[i],
                 "subset": [m.sigma[j] for j in _bits(sub)]},
    )


def _check_replacement(m: ModelDesc, cfg: CheckConfig,
                       row_index: dict[int, int]) -> AxiomReport:
    rng = random.Random(cfg.seed)
    n = len(m.sigma)
    sampled = False
    for i, row in enumerate(m.rows):
        domain = list(_bits(row))
        if not domain:
            if 0 not in row_index:
                return _replacement_fail(m, i, {}, 0)
            continue
        total = n ** len(domain)
        if total <= cfg.replacement_exhaustive_bound:
            images = itertools.product(range(n), repeat=len(domain))
        else:
            sampled = True
            images = (tuple(rng.randrange(n) for _ in domain)
                      for _ in range(cfg.replacement_samples))
        for image in images:
            target = 0
            for j in image:
                target |= 1 << j
            if target not in row_index:
                fmap = {m.sigma[d]: m.sigma[j] for d, j in zip(domain, image)}
                return _replacement_fail(m, i, fmap, target)
    note = f"sampled beyond {cfg.replacement_exhaustive_bound} maps (seed {cfg.seed})" \
        if sampled else None
    return AxiomReport("replacement", "pass", note=note)


def _replacement_fail(m: ModelDesc, i: int, fmap: dict, target: int) -> AxiomReport:
    return AxiomReport(
        "replacement", "fail",
        witness={"element": m.sigma[i], "map": fmap,
                 "image": [m.sigma[j] for j in _bits(target)]},
    )


def recheck_axiom(m: ModelDesc, axiom: str,
                  config: CheckConfig | None = None) -> AxiomReport:
    """Re-run a single axiom check in isolation (witness soundness probes)."""
    reports = {r.axiom: r for r in check_all(m, config)}
    return reports[axiom]


def union_via_compose(m: ModelDesc, label: str) -> list[str]:
    """Members-of-members computed through pairing composition.

    Independent route for the union check, only sensible at small scale.
    """
    dom = FinDomain(m.sigma)
    pairing = FinPairing(dom, dom, m.rows)
    composed = compose(pairing, pairing)
    i = dom.index(label)
    return [m.sigma[j] for j in _bits(composed.rows[i])]


def reports_to_json(reports: list[AxiomReport]) -> str:
    return json.dumps([r.to_json_dict() for r in reports], indent=2)


def reports_to_table(reports: list[AxiomReport]) -> str:
    lines = []
    for r in reports:
        line = f"{r.axiom:<16} {r.verdict}"
        if r.note:
            line += f"  ({r.note})"
        if r.witness is not None:
            line += f"  witness: {json.dumps(r.witness)}"
        lines.append(line)
    return "\n".join(lines)


def parse_model_spec(spec: str) -> ModelDesc:
    """``vk:<k>`` shorthand or a JSON pairing document."""
    stripped = spec.strip()
    if stripped.startswith("vk:"):
        payload = stripped[3:]
        if not payload.isdigit():
            raise ValidationError("vk:<k> needs a natural k", witness=(payload,))
        return ModelDesc.from_vk(int(payload))
    return ModelDesc.from_pairing(FinPairing.from_json(stripped))
