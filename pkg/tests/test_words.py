import random

import pytest

from hanoiseq.catalog import BINARY_ALPHABET, HANOI_ALPHABET, morphic_entry
from hanoiseq.words import (Alphabet, DomainError, Morphism,
                            MorphicSpec, ProlongabilityError, Word,
                            apply_coding, is_prolongable, iterate_fixed_point,
                            morphism_apply, spec_from_json, spec_to_json)

PHI = morphic_entry("classical-hanoi").morphism
OMEGA = morphic_entry("period-doubling").morphism
LAMBDA = morphic_entry("lazy-hanoi").morphism


def hw(tokens):
    return Word.from_tokens(HANOI_ALPHABET, tokens)


class TestAlphabet:
    def test_rejects_duplicates_and_empty(self):
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))
        with pytest.raises(ValueError):
            Alphabet(())

    def test_barred_letters_are_distinct_symbols(self):
        assert HANOI_ALPHABET.index("a") != HANOI_ALPHABET.index("A")

    def test_unknown_symbol(self):
        with pytest.raises(DomainError):
            HANOI_ALPHABET.index("x")


class TestWord:
    def test_tokens_round_trip(self):
        w = hw("a C b")
        assert w.tokens() == ("a", "C", "b")
        assert w.text() == "a C b"
        assert len(w) == 3
        assert w[1] == "C"
        assert w[1:].tokens() == ("C", "b")

    def test_support(self):
        assert hw("a C a").support() == ("a", "C")

    def test_concat_needs_same_alphabet(self):
        with pytest.raises(DomainError):
            hw("a") + Word.from_tokens(BINARY_ALPHABET, "0")

    def test_bad_index_rejected(self):
        with pytest.raises(DomainError):
            Word(BINARY_ALPHABET, (0, 5))


class TestMorphismApply:
    def test_phi_on_a_cbar(self):
        assert morphism_apply(PHI, hw("a C")).text() == "a C b a"

    def test_empty_word(self):
        assert morphism_apply(PHI, Word(HANOI_ALPHABET)).text() == ""

    def test_omega_on_one_zero(self):
        w = Word.from_tokens(BINARY_ALPHABET, "1 0")
        assert morphism_apply(OMEGA, w).text() == "1 0 1 1"

    def test_domain_mismatch(self):
        with pytest.raises(DomainError):
            morphism_apply(PHI, Word.from_tokens(BINARY_ALPHABET, "0"))

    def test_homomorphism_law(self):
        rng = random.Random(1851)
        n = len(HANOI_ALPHABET.symbols)
        for _ in range(200):
            u = Word(HANOI_ALPHABET, tuple(rng.randrange(n) for _ in range(rng.randrange(8))))
            v = Word(HANOI_ALPHABET, tuple(rng.randrange(n) for _ in range(rng.randrange(8))))
            assert PHI.apply(u + v) == PHI.apply(u) + PHI.apply(v)

    def test_uniform_width(self):
        assert PHI.uniform_width == 2
        assert LAMBDA.uniform_width == 3
        assert morphic_entry("classical-hanoi-nonuniform").morphism.uniform_width is None
        assert morphic_entry("lazy-hanoi-nonuniform").morphism.uniform_width is None

    def test_power(self):
        phi2 = PHI.power(2)
        assert phi2.image("a").text() == "a C b a"
        assert phi2.uniform_width == 4


class TestProlongability:
    def test_phi_at_a(self):
        assert is_prolongable(PHI, "a")

    def test_omega(self):
        assert not is_prolongable(OMEGA, "0")
        assert is_prolongable(OMEGA, "1")

    def test_erasing_tail_is_not_prolongable(self):
        ab = Alphabet(("a", "b"))
        dying = Morphism.from_rules(ab, {"a": "a b", "b": ""})
        assert not is_prolongable(dying, "a")
        with pytest.raises(ProlongabilityError):
            MorphicSpec(dying, "a")

    def test_non_endomorphism_rejected(self):
        coding_like = Morphism.from_rules(HANOI_ALPHABET,
                                          {s: "0" for s in HANOI_ALPHABET.symbols},
                                          codomain=BINARY_ALPHABET)
        with pytest.raises(DomainError):
            is_prolongable(coding_like, "a")


class TestFixedPoint:
    def test_classical_prefix_8(self):
        spec = morphic_entry("classical-hanoi")
        assert iterate_fixed_point(spec, 8).text() == "a C b a c B a C"

    def test_fibonacci_prefix_8(self):
        spec = morphic_entry("fibonacci")
        assert "".join(iterate_fixed_point(spec, 8).tokens()) == "abaababa"

    def test_lazy_prefix_9(self):
        spec = morphic_entry("lazy-hanoi")
        assert iterate_fixed_point(spec, 9).text() == "a b a B A b a b a"

    def test_length_zero(self):
        assert len(morphic_entry("classical-hanoi").prefix(0)) == 0

    def test_prefix_stability(self):
        rng = random.Random(7)
        for name in ("classical-hanoi", "lazy-hanoi", "cyclic-hanoi", "fibonacci"):
            spec = morphic_entry(name)
            for _ in range(20):
                short = rng.randrange(1, 200)
                long = short + rng.randrange(0, 200)
                assert spec.prefix(long)[:short] == spec.prefix(short)

    def test_fixed_point_law(self):
        # applying the morphism to a prefix re-produces that prefix
        for name in ("classical-hanoi", "period-doubling", "fibonacci"):
            spec = morphic_entry(name)
            prefix = spec.pure_prefix(50)
            assert spec.morphism.apply(prefix).startswith(prefix)


class TestCoding:
    def test_cyclic_coding(self):
        spec = morphic_entry("cyclic-hanoi")
        w = Word.from_tokens(spec.morphism.domain, "f v f")
        assert apply_coding(spec.coding, w).text() == "a b a"

    def test_mod3_coding(self):
        spec = morphic_entry("z-uniform")
        w = Word.from_tokens(spec.morphism.domain, "0 4")
        assert apply_coding(spec.coding, w).text() == "0 1"

    def test_bar_projection(self):
        from hanoiseq.classicseq import BAR_PROJECTION
        assert apply_coding(BAR_PROJECTION, hw("a C b")).text() == "1 0 1"

    def test_length_preserving(self):
        spec = morphic_entry("cyclic-hanoi")
        w = spec.pure_prefix(100)
        assert len(apply_coding(spec.coding, w)) == 100

    def test_domain_mismatch(self):
        spec = morphic_entry("cyclic-hanoi")
        with pytest.raises(DomainError):
            apply_coding(spec.coding, hw("a"))


class TestJson:
    @pytest.mark.parametrize("name", ["classical-hanoi", "cyclic-hanoi", "z-uniform"])
    def test_round_trip_preserves_sequence(self, name):
        spec = morphic_entry(name)
        again = spec_from_json(spec_to_json(spec))
        assert again.prefix(200).tokens() == spec.prefix(200).tokens()

    def test_schema_keys(self):
        data = spec_to_json(morphic_entry("z-uniform"))
        assert set(data) == {"alphabet", "rules", "start", "coding"}
        assert data["coding"]["4"] == "1"
        plain = spec_to_json(morphic_entry("classical-hanoi"))
        assert "coding" not in plain
