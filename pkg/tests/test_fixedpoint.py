"""Tests for prolongability and fixed-point generation."""

import pytest
from hypothesis import given, strategies as st

from morphic_words.errors import DomainMismatch, NotProlongable
from morphic_words.fixedpoint import (
    FixedPointStream,
    MorphicPresentation,
    fixed_point_prefix,
    is_prolongable,
    mortal_letters,
    presented_prefix,
    prolongation_tail,
)
from morphic_words.morphism import Coding, Morphism
from morphic_words.words import Word
from strategies import morphisms, uniform_morphisms

MU = Morphism.from_rules({"0": "01", "1": "10"})
TAU = Morphism.from_rules({"a": "ab", "b": "a"})
SIGMA = Morphism.from_rules({"2": "210", "1": "20", "0": "1"})
PSI = Morphism.from_rules({"0": "01", "1": "20", "2": "23", "3": "02"})
KAPPA = Coding.from_pairs({"0": "2", "1": "1", "2": "0", "3": "1"})


class TestMortalLetters:
    def test_erasing_chain(self):
        m = Morphism.from_rules({"a": "ab", "b": "c", "c": ""})
        assert mortal_letters(m) == {"b", "c"}

    def test_uniform_has_none(self):
        assert mortal_letters(MU) == frozenset()

    @given(morphisms())
    def test_matches_iterated_images(self, m):
        iterated = m.power(len(m.domain))
        mortal = mortal_letters(m)
        for a in m.domain:
            assert (len(iterated[a]) == 0) == (a in mortal)


class TestProlongable:
    def test_examples(self):
        assert is_prolongable(MU, "0")
        assert not is_prolongable(TAU, "b")
        assert not is_prolongable(Morphism.from_rules({"a": "ab", "b": ""}), "a")

    def test_tail(self):
        assert prolongation_tail(MU, "0") == Word.of("1")
        assert prolongation_tail(TAU, "a") == Word.of("b")
        assert prolongation_tail(SIGMA, "2") == Word.of("10")

    def test_tail_of_non_prolongable(self):
        with pytest.raises(NotProlongable):
            prolongation_tail(TAU, "b")


class TestFixedPointPrefix:
    def test_examples(self):
        assert fixed_point_prefix(MU, "0", 16) == Word.of("0110100110010110")
        assert fixed_point_prefix(TAU, "a", 8) == Word.of("abaababa")
        assert fixed_point_prefix(SIGMA, "2", 7) == Word.of("2102012")

    def test_zero_length(self):
        assert fixed_point_prefix(MU, "0", 0) == Word()

    @given(uniform_morphisms(), st.integers(min_value=1, max_value=5))
    def test_prefix_of_iterate(self, m, exponent):
        image = m.power(exponent)["0"]
        assert fixed_point_prefix(m, "0", len(image)) == image

    @given(uniform_morphisms(), st.integers(min_value=0, max_value=200))
    def test_is_a_fixed_point(self, m, n):
        # m maps the prefix of length n onto a longer prefix
        prefix = fixed_point_prefix(m, "0", n)
        image = m.apply(prefix)
        assert fixed_point_prefix(m, "0", len(image)) == image

    def test_longer_prefix_extends_shorter(self):
        assert fixed_point_prefix(TAU, "a", 5).is_prefix_of(fixed_point_prefix(TAU, "a", 50))


class TestStream:
    def test_indexing_and_take(self):
        stream = FixedPointStream(MU, "0")
        assert stream[15] == "0"
        assert stream.take(4) == Word.of("0110")

    def test_iteration(self):
        stream = FixedPointStream(TAU, "a")
        letters = []
        for letter in stream:
            letters.append(letter)
            if len(letters) == 8:
                break
        assert Word(letters) == Word.of("abaababa")

    def test_streams_are_independent(self):
        a, b = FixedPointStream(MU, "0"), FixedPointStream(MU, "0")
        a.take(1000)
        assert len(b) == 2

    def test_lazy_generation(self):
        stream = FixedPointStream(MU, "0")
        stream.take(10)
        assert len(stream) <= 11

    def test_blocks_decompose_iterates(self):
        blocks = FixedPointStream(MU, "0").blocks()
        joined = Word()
        for _ in range(5):
            joined = joined + next(blocks)
        assert joined == MU.power(4)["0"]


class TestMorphicPresentation:
    def test_coded_prefix(self):
        p = MorphicPresentation(PSI, "0", KAPPA)
        assert presented_prefix(p, 7) == Word.of("2102012")
        assert p.underlying_prefix(8) == Word.of("01202301")

    def test_identity_coding_by_default(self):
        p = MorphicPresentation(MU, "0")
        assert p.prefix(4) == Word.of("0110")
        assert p.coding.is_identity
        assert p.is_automatic

    def test_non_uniform_is_not_automatic(self):
        p = MorphicPresentation(TAU, "a")
        assert p.uniform_arity is None
        assert not p.is_automatic

    def test_rejects_non_prolongable(self):
        with pytest.raises(NotProlongable):
            MorphicPresentation(TAU, "b")

    def test_coding_must_be_total(self):
        with pytest.raises(DomainMismatch):
            MorphicPresentation(PSI, "0", Coding.from_pairs({"0": "2"}))

    def test_equality(self):
        assert MorphicPresentation(MU, "0") == MorphicPresentation(Morphism.from_rules({"0": "01", "1": "10"}), "0")
        assert MorphicPresentation(PSI, "0", KAPPA) != MorphicPresentation(PSI, "0")
