import dataclasses

import pytest

from hanoiseq.catalog import morphic_entry
from hanoiseq.nonuniform import (ConstructionError, construct_nonuniform,
                                 find_expanding_letter,
                                 validate_construction, validation_failures,
                                 verify_fixed_point_equality)
from hanoiseq.words import DomainError, Morphism, MorphicSpec, Word

UNIFORM_NAMES = ("classical-hanoi", "lazy-hanoi", "period-doubling",
                 "thue-morse", "z-uniform")


class TestFixedPointEquality:
    def test_classical_presentations_agree(self):
        assert verify_fixed_point_equality(
            morphic_entry("classical-hanoi-nonuniform"),
            morphic_entry("classical-hanoi"), 10 ** 4)

    def test_lazy_presentations_agree(self):
        assert verify_fixed_point_equality(
            morphic_entry("lazy-hanoi-nonuniform"),
            morphic_entry("lazy-hanoi"), 10 ** 4)

    def test_identity(self):
        spec = morphic_entry("period-doubling")
        assert verify_fixed_point_equality(spec, spec, 4096)

    def test_detects_difference(self):
        assert not verify_fixed_point_equality(
            morphic_entry("period-doubling"), morphic_entry("thue-morse"), 16)

    def test_alphabet_mismatch(self):
        with pytest.raises(DomainError):
            verify_fixed_point_equality(
                morphic_entry("classical-hanoi"), morphic_entry("thue-morse"), 16)

    def test_same_alphabet_as_uniform_counterparts(self):
        # the hand-built non-uniform morphisms add no letters, unlike the
        # generic two-letter extension
        assert morphic_entry("classical-hanoi-nonuniform").morphism.domain == \
            morphic_entry("classical-hanoi").morphism.domain
        assert morphic_entry("lazy-hanoi-nonuniform").morphism.domain == \
            morphic_entry("lazy-hanoi").morphism.domain


class TestFindExpandingLetter:
    def test_thue_morse(self):
        spec = morphic_entry("thue-morse")
        letter, power = find_expanding_letter(spec.morphism, "0")
        assert (letter, power) == ("1", 2)
        image = spec.morphism.power(power).image(letter)
        assert image.text() == "1 0 0 1"
        assert image.tokens().count("1") == 2

    def test_classical_skips_start_symbol(self):
        spec = morphic_entry("classical-hanoi")
        letter, power = find_expanding_letter(spec.morphism, "a")
        assert letter != "a"
        assert (letter, power) == ("b", 2)
        image = spec.morphism.power(power).image(letter)
        assert image.tokens().count("b") >= 2

    def test_period_doubling_needs_power_two(self):
        spec = morphic_entry("period-doubling")
        letter, power = find_expanding_letter(spec.morphism, "1")
        assert (letter, power) == ("0", 2)
        image = spec.morphism.power(power).image(letter)
        assert image.tokens().count("0") >= 2

    def test_rejects_nonuniform(self):
        with pytest.raises(ValueError):
            find_expanding_letter(morphic_entry("fibonacci").morphism, "a")


class TestConstruct:
    @pytest.mark.parametrize("name", UNIFORM_NAMES)
    def test_alphabet_grows_by_two(self, name):
        spec = morphic_entry(name)
        construction = construct_nonuniform(spec.morphism, spec.start)
        assert len(construction.morphism.domain.symbols) == \
            len(spec.morphism.domain.symbols) + 2

    @pytest.mark.parametrize("name", UNIFORM_NAMES)
    def test_validates_on_prefix(self, name):
        spec = morphic_entry(name)
        construction = construct_nonuniform(spec.morphism, spec.start)
        assert validate_construction(construction, 2 ** 12)

    def test_output_is_not_uniform(self):
        spec = morphic_entry("period-doubling")
        construction = construct_nonuniform(spec.morphism, spec.start)
        assert construction.morphism.uniform_width is None
        assert len(construction.z) == 1
        assert len(construction.t) == construction.block_length - 1

    def test_expanding_letter_differs_from_start(self):
        for name in UNIFORM_NAMES:
            spec = morphic_entry(name)
            construction = construct_nonuniform(spec.morphism, spec.start)
            assert construction.expanding != spec.start

    def test_split_lengths_must_differ(self):
        spec = morphic_entry("period-doubling")
        construction = construct_nonuniform(spec.morphism, spec.start)
        half = construction.block_length // 2
        glued = construction.z + construction.t
        with pytest.raises(ConstructionError):
            dataclasses.replace(construction, z=glued[:half], t=glued[half:])

    def test_flanks_must_be_nonempty(self):
        spec = morphic_entry("period-doubling")
        construction = construct_nonuniform(spec.morphism, spec.start)
        domain = spec.morphism.domain
        with pytest.raises(ConstructionError):
            dataclasses.replace(construction, w1=Word(domain))

    def test_coded_prefix_equals_source(self):
        spec = morphic_entry("thue-morse")
        construction = construct_nonuniform(spec.morphism, spec.start)
        primed = MorphicSpec(construction.morphism, spec.start).pure_prefix(4096)
        assert construction.coding.apply(primed) == spec.prefix(4096)

    def test_validation_diagnoses_broken_construction(self):
        # a garbled w3 keeps every shape invariant intact (z t still spells
        # w1 b c w3) but derails the coded fixed point
        spec = morphic_entry("thue-morse")
        good = construct_nonuniform(spec.morphism, spec.start)
        source_domain = spec.morphism.domain
        extended = good.morphism.domain
        bad_w3 = Word(source_domain, tuple(reversed(good.w3.indices)))
        assert bad_w3 != good.w3
        glued = (good.w1.indices
                 + (source_domain.index(good.expanding),
                    source_domain.index(good.companion))
                 + bad_w3.indices)
        images = list(good.morphism.images)
        images[-2] = Word(extended, glued[:1])
        images[-1] = Word(extended, glued[1:])
        broken = dataclasses.replace(
            good,
            w3=bad_w3,
            z=Word(source_domain, glued[:1]),
            t=Word(source_domain, glued[1:]),
            morphism=Morphism(extended, extended, tuple(images)))
        failures = validation_failures(broken, 2 ** 10)
        assert failures
        assert not validate_construction(broken, 2 ** 10)

    def test_json_provenance(self):
        spec = morphic_entry("period-doubling")
        construction = construct_nonuniform(spec.morphism, spec.start)
        data = construction.to_json()
        assert data["provenance"]["expanding"] == construction.expanding
        assert data["provenance"]["power"] == construction.power
        assert data["rules"][construction.primed_expanding] == \
            list(construction.z.tokens())
