import json
import random

import pytest

from setkernel import hf
from setkernel.domains import FinDomain, FinPairing, _bits
from setkernel.errors import ValidationError
from setkernel.zfc import (
    AXIOM_ORDER,
    AxiomReport,
    CheckConfig,
    ModelDesc,
    check_all,
    parse_model_spec,
    recheck_axiom,
    reports_to_json,
    reports_to_table,
    union_via_compose,
)


def verdicts(m, config=None):
    return {r.axiom: r.verdict for r in check_all(m, config)}


def report(m, axiom, config=None):
    return recheck_axiom(m, axiom, config)


class TestModelDesc:
    def test_row_per_element_required(self):
        with pytest.raises(ValidationError):
            ModelDesc(("a", "b"), (0,))

    def test_row_mask_bounded(self):
        with pytest.raises(ValidationError):
            ModelDesc(("a",), (2,))

    def test_from_vk_sizes(self):
        for k, size in enumerate([0, 1, 2, 4, 16]):
            assert len(ModelDesc.from_vk(k).sigma) == size

    def test_from_vk_rows_are_codes(self):
        # every member of a stage-<4 code is itself of stage < 4, so the
        # bitmask row coincides with the code
        m = ModelDesc.from_vk(4)
        assert m.sigma == tuple(str(c) for c in range(16))
        assert m.rows == tuple(range(16))

    def test_from_vk_guard(self):
        with pytest.raises(ValidationError):
            ModelDesc.from_vk(6)

    def test_from_codes_drops_outside_members(self):
        # 4 = {2}; 2 is not in the pool, so its row is empty
        m = ModelDesc.from_codes([0, 1, 4])
        assert m.sigma == ("0", "1", "4")
        assert m.rows == (0, 1, 0)

    def test_from_pairing_must_be_square(self):
        p = FinPairing.from_matrix(
            FinDomain(["a"]), FinDomain(["x", "y"]), [[True, False]])
        with pytest.raises(ValidationError):
            ModelDesc.from_pairing(p)


class TestCheckAll:
    def test_reports_in_fixed_order(self):
        reports = check_all(ModelDesc.from_vk(2))
        assert tuple(r.axiom for r in reports) == AXIOM_ORDER

    def test_empty_model(self):
        v = verdicts(ModelDesc.from_vk(0))
        assert v["infinity"] == "fail"
        assert all(verdict == "pass"
                   for axiom, verdict in v.items() if axiom != "infinity")

    def test_vk3_matrix(self):
        v = verdicts(ModelDesc.from_vk(3))
        assert v == {
            "foundation": "pass",
            "sets-are-sets": "pass",
            "extensionality": "pass",
            "union": "pass",
            "powerset": "fail",
            "infinity": "fail",
            "choice": "pass",
            "separation": "pass",
            "replacement": "fail",
        }

    def test_vk4_same_matrix(self):
        assert verdicts(ModelDesc.from_vk(4)) == verdicts(ModelDesc.from_vk(3))

    def test_infinity_always_fails(self):
        for k in range(4):
            assert report(ModelDesc.from_vk(k), "infinity").verdict == "fail"


class TestFoundation:
    def test_self_loop_fails(self):
        r = report(ModelDesc(("a",), (1,)), "foundation")
        assert r.verdict == "fail"
        assert r.witness == {"element": "a", "members": ["a"]}

    def test_two_cycle_passes(self):
        # a = {b}, b = {a}: each element's sole member is disjoint from it
        # inside the model, so the element-wise axiom holds even though the
        # membership graph is cyclic
        assert report(ModelDesc(("a", "b"), (2, 1)), "foundation").verdict == "pass"

    def test_witness_has_no_internally_minimal_member(self):
        m = ModelDesc(("a", "b"), (3, 2))  # a = {a, b}, b = {b}
        r = report(m, "foundation")
        assert r.verdict == "fail"
        i = m.sigma.index(r.witness["element"])
        assert all(m.rows[j] & m.rows[i] for j in _bits(m.rows[i]))


class TestExtensionality:
    def test_duplicate_rows_fail(self):
        r = report(ModelDesc(("a", "b"), (0, 0)), "extensionality")
        assert r.verdict == "fail"
        assert r.witness["pair"] == ["a", "b"]

    def test_lenient_ignores_unreferenced_duplicates(self):
        # c = {a}; a and b are indistinguishable but only a occurs in a row
        m = ModelDesc(("a", "b", "c"), (0, 0, 1))
        strict = report(m, "extensionality")
        lenient = report(
            m, "extensionality", CheckConfig(extensionality_strict=False))
        assert strict.verdict == "fail"
        assert lenient.verdict == "pass"
        assert lenient.note == "lenient (within-rows)"


class TestUnion:
    def test_missing_union_witness(self):
        # a = {b, c}, b = {c}, c = {a}: union over a is {a, c}, which is
        # nobody's member set
        r = report(ModelDesc(("a", "b", "c"), (6, 4, 1)), "union")
        assert r.verdict == "fail"
        assert r.witness == {"element": "a", "missing_union": ["a", "c"]}

    def test_agrees_with_compose_route(self):
        rng = random.Random(51)
        for _ in range(50):
            n = rng.randrange(1, 6)
            m = ModelDesc(
                tuple(f"e{i}" for i in range(n)),
                tuple(rng.randrange(1 << n) for _ in range(n)))
            r = report(m, "union")
            for i, label in enumerate(m.sigma):
                target = 0
                for j in _bits(m.rows[i]):
                    target |= m.rows[j]
                expected = [m.sigma[j] for j in _bits(target)]
                assert union_via_compose(m, label) == expected
                if r.verdict == "fail" and r.witness["element"] == label:
                    assert expected == r.witness["missing_union"]
                    assert all(row != target for row in m.rows)


class TestPowerset:
    def test_vk3_witness_is_top_element(self):
        r = report(ModelDesc.from_vk(3), "powerset")
        assert r.verdict == "fail"
        assert r.witness["element"] == "3"

    def test_vk4_witness_is_top_element(self):
        r = report(ModelDesc.from_vk(4), "powerset")
        assert r.verdict == "fail"
        assert r.witness["element"] == "15"

    def test_witness_soundness(self):
        # no row collects exactly the subsets of the witness's row
        m = ModelDesc.from_vk(3)
        r = report(m, "powerset")
        i = m.sigma.index(r.witness["element"])
        target = 0
        for j, other in enumerate(m.rows):
            if other & ~m.rows[i] == 0:
                target |= 1 << j
        assert target not in m.rows

    def test_restriction_makes_vk4_pass(self):
        # stage-<3 elements of the stage-<4 truncation all have their
        # powersets present
        cfg = CheckConfig(powerset_restrict=frozenset(["0", "1", "2", "3"]))
        r = report(ModelDesc.from_vk(4), "powerset", cfg)
        assert r.verdict == "pass"
        assert r.note == "restricted"


class TestChoice:
    def test_covering_row_fails(self):
        r = report(ModelDesc(("a", "b"), (3, 0)), "choice")
        assert r.verdict == "fail"
        assert r.witness["element"] == "a"

    def test_witness_function_avoids_members(self):
        m = ModelDesc.from_vk(3)
        r = report(m, "choice")
        assert r.verdict == "pass"
        fn = json.loads(r.note.removeprefix("choice function: "))
        for label, chosen in fn.items():
            i = m.sigma.index(label)
            assert not m.rows[i] >> m.sigma.index(chosen) & 1


class TestSeparationReplacement:
    def test_separation_missing_subset(self):
        # a = {b, c} but {b} is nobody's member set
        m = ModelDesc(("a", "b", "c"), (6, 0, 0))
        r = report(m, "separation")
        assert r.verdict == "fail"
        assert r.witness["element"] == "a"
        target = 0
        for label in r.witness["subset"]:
            target |= 1 << m.sigma.index(label)
        assert target not in m.rows and target & m.rows[0] == target

    def test_separation_sampling_note(self):
        cfg = CheckConfig(separation_bound=3)
        r = report(ModelDesc.from_vk(4), "separation", cfg)
        assert r.verdict == "pass"
        assert "sampled" in r.note and "seed 0" in r.note

    def test_separation_deterministic_across_runs(self):
        cfg = CheckConfig(separation_bound=3)
        m = ModelDesc.from_vk(4)
        assert report(m, "separation", cfg) == report(m, "separation", cfg)

    def test_replacement_fail_witness_sound(self):
        m = ModelDesc.from_vk(3)
        r = report(m, "replacement")
        assert r.verdict == "fail"
        i = m.sigma.index(r.witness["element"])
        fmap = r.witness["map"]
        assert sorted(fmap) == sorted(m.row_labels(i))
        target = 0
        for label in r.witness["image"]:
            target |= 1 << m.sigma.index(label)
        assert set(fmap.values()) == set(r.witness["image"])
        assert target not in m.rows

    def test_replacement_passes_on_tiny_closed_model(self):
        # single empty element: the only map is empty with image {} present
        assert report(ModelDesc(("0",), (0,)), "replacement").verdict == "pass"


class TestReports:
    def test_fail_requires_witness(self):
        with pytest.raises(ValidationError):
            AxiomReport("union", "fail")

    def test_json_round_trip(self):
        reports = check_all(ModelDesc.from_vk(3))
        data = json.loads(reports_to_json(reports))
        assert [d["axiom"] for d in data] == list(AXIOM_ORDER)
        assert all("witness" in d for d in data
                   if d["verdict"] == "fail")

    def test_table_mentions_every_axiom(self):
        table = reports_to_table(check_all(ModelDesc.from_vk(2)))
        for axiom in AXIOM_ORDER:
            assert axiom in table


class TestParseModelSpec:
    def test_vk_shorthand(self):
        assert parse_model_spec("vk:2").sigma == ("0", "1")

    def test_vk_malformed(self):
        with pytest.raises(ValidationError):
            parse_model_spec("vk:x")

    def test_json_pairing(self):
        doc = json.dumps({
            "left": ["a", "b"],
            "right": ["a", "b"],
            "rel": [[False, False], [True, False]],
        })
        m = parse_model_spec(doc)
        assert m.sigma == ("a", "b")
        assert m.rows == (0, 1)
