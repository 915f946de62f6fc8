import random

import pytest

from setkernel import hf
from setkernel.errors import ParseError, ResourceLimitError, ValidationError


class TestMembership:
    def test_empty_set_has_no_members(self):
        assert all(not hf.mem(0, m) for m in range(64))

    def test_pair_code_three(self):
        assert hf.mem(3, 0) and hf.mem(3, 1)
        assert not hf.mem(3, 2)

    def test_singleton_codes(self):
        for k in range(20):
            code = 1 << k
            assert hf.mem(code, k)
            assert list(hf.members(code)) == [k]

    def test_negative_codes_rejected(self):
        with pytest.raises(ValidationError):
            hf.mem(-1, 0)

    def test_extensionality(self):
        # distinct codes have distinct member sets by construction
        rows = {tuple(hf.members(n)) for n in range(1 << 10)}
        assert len(rows) == 1 << 10


class TestBracesText:
    def test_empty(self):
        assert hf.decode(0) == "{}"
        assert hf.encode("{}") == 0

    def test_two_element_set(self):
        assert hf.decode(3) == "{{},{{}}}"

    def test_encode_singleton(self):
        assert hf.encode("{{}}") == 1

    def test_round_trip(self):
        for n in range(512):
            assert hf.encode(hf.decode(n)) == n

    def test_duplicate_siblings_collapse(self):
        assert hf.encode("{{},{}}") == 1

    @pytest.mark.parametrize("text", ["", "{", "{}}", "{,}", "{{}", "x"])
    def test_malformed_input(self, text):
        with pytest.raises(ParseError) as err:
            hf.encode(text)
        assert err.value.position is not None


class TestUnion:
    def test_examples(self):
        assert hf.set_union_axiom(0) == 0
        assert hf.set_union_axiom(2) == 1
        assert hf.set_union_axiom(3) == 1

    def test_union_is_bitwise_or_of_members(self):
        rng = random.Random(31)
        for _ in range(200):
            a = rng.randrange(1 << 16)
            expected = 0
            for m in hf.members(a):
                expected |= m
            assert hf.set_union_axiom(a) == expected

    def test_union_idempotence_via_singletons(self):
        for a in range(64):
            s = hf.singleton(a)
            assert hf.set_union_axiom(s) == a


class TestPowerset:
    def test_examples(self):
        assert hf.powerset(0) == 1
        assert hf.powerset(1) == 3

    def test_member_count_law(self):
        rng = random.Random(32)
        for _ in range(100):
            a = rng.randrange(1 << 12)
            assert hf.powerset(a).bit_count() == 1 << a.bit_count()

    def test_members_are_exactly_subsets(self):
        a = 0b10110
        for b in hf.members(hf.powerset(a)):
            assert b & ~a == 0
        assert set(hf.members(hf.powerset(a))) == {
            s for s in range(1 << 5) if s & ~a == 0}

    def test_popcount_guard(self):
        wide = (1 << 21) - 1  # 21 members
        with pytest.raises(ResourceLimitError) as err:
            hf.powerset(wide)
        assert "2**21" in str(err.value)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(hf.POWERSET_BOUND_ENV, "3")
        assert hf.powerset(0b111).bit_count() == 8
        with pytest.raises(ResourceLimitError):
            hf.powerset(0b1111)

    def test_explicit_bound_param(self):
        with pytest.raises(ResourceLimitError):
            hf.powerset(0b111, bound=2)


class TestSeparationReplacement:
    def test_separation_extremes(self):
        assert hf.separation(37, lambda m: True) == 37
        assert hf.separation(37, lambda m: False) == 0

    def test_separation_even_members(self):
        assert hf.separation(7, lambda m: m % 2 == 0) == 5

    def test_separation_is_bitwise_subset(self):
        rng = random.Random(33)
        for _ in range(200):
            a = rng.randrange(1 << 16)
            out = hf.separation(a, lambda m: rng.random() < 0.5)
            assert out & a == out

    def test_replacement_identity(self):
        for a in (0, 5, 123):
            assert hf.replacement(a, lambda m: m) == a

    def test_replacement_collapse(self):
        assert hf.replacement(3, lambda m: 0) == 1

    def test_replacement_singletons(self):
        assert hf.replacement(5, hf.singleton) == 18


class TestFoundationChoice:
    def test_foundation_examples(self):
        assert hf.foundation_witness(1) == 0
        assert hf.foundation_witness(2) == 1

    def test_foundation_rejects_empty(self):
        with pytest.raises(ValidationError):
            hf.foundation_witness(0)

    def test_every_small_code_has_witness(self):
        for a in range(1, 1 << 16):
            w = hf.foundation_witness(a)
            assert hf.mem(a, w)
            assert w & a == 0

    def test_choice_examples(self):
        assert hf.choice_fn(0) == 0
        assert hf.choice_fn(1) == 1
        assert hf.choice_fn(7) == 3

    def test_choice_never_a_member(self):
        rng = random.Random(34)
        for _ in range(500):
            a = rng.randrange(1 << 20)
            assert not hf.mem(a, hf.choice_fn(a))


class TestClosureStage:
    def test_closure_examples(self):
        assert hf.transitive_closure(0) == 0
        assert hf.transitive_closure(2) == 3

    def test_closure_is_saturated(self):
        for a in range(1 << 12):
            t = hf.transitive_closure(a)
            for m in hf.members(t):
                assert m & ~t == 0

    def test_closure_is_least(self):
        rng = random.Random(35)
        for _ in range(200):
            a = rng.randrange(1 << 12)
            t = hf.transitive_closure(a)
            assert t & a == a
            # removing any bit not in a breaks saturation or containment
            extras = t & ~a
            for m in hf.members(extras):
                smaller = t & ~(1 << m)
                saturated = all(x & ~smaller == 0 for x in hf.members(smaller))
                assert not saturated or smaller & a != a

    def test_stage_examples(self):
        assert hf.stage(0) == 0
        assert hf.stage(1) == 1
        assert hf.stage(1 << 15) == 1 + hf.stage(15)

    def test_stage_bounds_truncation(self):
        # stage < k exactly for the codes in the k-th truncation
        v4 = [a for a in range(1 << 16) if hf.stage(a) < 4]
        assert v4 == list(range(16))

    def test_membership_decreases_stage(self):
        rng = random.Random(36)
        for _ in range(300):
            a = rng.randrange(1, 1 << 16)
            for m in hf.members(a):
                assert hf.stage(m) < hf.stage(a)
