"""Tests for morphisms, codings and incidence matrices."""

import numpy as np
import pandas as pd
import pytest
from hypothesis import given, strategies as st

from morphic_words.errors import AlienSymbol, DomainMismatch, NotProlongable
from morphic_words.morphism import Coding, IncidenceMatrix, Morphism, occurring_letters
from morphic_words.words import EMPTY, Word
from strategies import morphisms, uniform_morphisms, words

MU = Morphism.from_rules({"0": "01", "1": "10"})
TAU = Morphism.from_rules({"a": "ab", "b": "a"})
SIGMA = Morphism.from_rules({"2": "210", "1": "20", "0": "1"})
PSI = Morphism.from_rules({"0": "01", "1": "20", "2": "23", "3": "02"})
KAPPA = Coding.from_pairs({"0": "2", "1": "1", "2": "0", "3": "1"})


class TestConstruction:
    def test_from_rules_domain_order(self):
        assert list(SIGMA.domain) == ["2", "1", "0"]

    def test_missing_image(self):
        with pytest.raises(DomainMismatch):
            Morphism(["0", "1"], ["0", "1"], {"0": "01"})

    def test_image_outside_codomain(self):
        with pytest.raises(AlienSymbol):
            Morphism(["0"], ["0"], {"0": "01"})

    def test_coding_images_have_length_one(self):
        with pytest.raises(DomainMismatch):
            Coding(["0"], ["0"], {"0": "00"})


class TestApply:
    def test_examples(self):
        assert MU.apply(Word.of("01")) == Word.of("0110")
        assert TAU.apply(Word.of("ab")) == Word.of("aba")
        assert MU.apply(EMPTY) == EMPTY

    def test_alien_letter(self):
        with pytest.raises(AlienSymbol):
            MU.apply(Word.of("012"))

    @given(uniform_morphisms(), words(("0", "1"), 8), words(("0", "1"), 8))
    def test_is_a_monoid_morphism(self, m, a, b):
        assert m.apply(a + b) == m.apply(a) + m.apply(b)


class TestCompose:
    def test_coding_after_morphism(self):
        assert KAPPA.compose(PSI)["0"] == Word.of("21")

    def test_identity_is_neutral(self):
        assert MU.compose(Morphism.identity(MU.domain)) == MU

    def test_square(self):
        assert MU.compose(MU)["0"] == Word.of("0110")

    def test_codings_compose_to_codings(self):
        assert isinstance(KAPPA.compose(Coding.identity(KAPPA.domain)), Coding)

    def test_mismatched_alphabets(self):
        with pytest.raises(DomainMismatch):
            MU.compose(TAU)

    @given(morphisms(), morphisms(), words(("0", "1", "2"), 6))
    def test_apply_of_composite(self, f, g, w):
        assert f.compose(g).apply(w) == f.apply(g.apply(w))


class TestPower:
    def test_examples(self):
        assert MU.power(2)["0"] == Word.of("0110")
        assert MU.power(4)["0"] == Word.of("0110100110010110")
        assert MU.power(0) == Morphism.identity(MU.domain)

    def test_needs_endomorphism(self):
        with pytest.raises(DomainMismatch):
            Coding.from_pairs({"a": "x"}).power(2)

    @given(uniform_morphisms(), st.integers(min_value=0, max_value=5))
    def test_power_is_iterated_apply(self, m, exponent):
        w = Word.of("0")
        expected = w
        for _ in range(exponent):
            expected = m.apply(expected)
        assert m.power(exponent).apply(w) == expected


class TestUniformArity:
    def test_examples(self):
        assert MU.uniform_arity == 2
        assert TAU.uniform_arity is None
        assert PSI.uniform_arity == 2

    def test_coding_is_one_uniform(self):
        assert KAPPA.uniform_arity == 1


class TestRestrictAndExtend:
    def test_restrict_shrinks_codomain(self):
        junk = Morphism.from_rules({"0": "01", "1": "10", "2": "1101"})
        trimmed = junk.restrict({"0", "1"})
        assert trimmed == MU
        assert list(trimmed.codomain) == ["0", "1"]

    def test_extend_first(self):
        hat = MU.extend({"alpha": "alpha 1"}, first=True)
        assert list(hat.domain) == ["alpha", "0", "1"]
        assert hat.is_endomorphism
        assert hat["alpha"] == Word(["alpha", "1"])

    def test_extend_replaces_rule(self):
        assert MU.extend({"1": "1"})["1"] == Word.of("1")


class TestIncidenceMatrix:
    def test_thue_morse(self):
        assert MU.incidence_matrix().entries.tolist() == [[1, 1], [1, 1]]

    def test_sigma_column(self):
        inc = SIGMA.incidence_matrix()
        assert [inc[a, "2"] for a in "210"] == [1, 1, 1]

    def test_fibonacci(self):
        inc = TAU.incidence_matrix()
        assert (inc["a", "a"], inc["b", "a"], inc["a", "b"], inc["b", "b"]) == (1, 1, 1, 0)

    @given(uniform_morphisms(), st.integers(min_value=1, max_value=4))
    def test_power_matches_morphism_power(self, m, exponent):
        assert m.incidence_matrix().power(exponent) == IncidenceMatrix.of(m.power(exponent))

    @given(morphisms())
    def test_column_sums_are_image_lengths(self, m):
        assert m.incidence_matrix().column_sums() == {b: len(m[b]) for b in m.domain}

    def test_entries_do_not_overflow(self):
        big = MU.incidence_matrix().power(80)
        assert big["0", "0"] == 2**79

    def test_to_frame(self):
        df = TAU.incidence_matrix().to_frame()
        assert isinstance(df, pd.DataFrame)
        assert list(df.columns) == ["a", "b"]
        assert np.array_equal(df.to_numpy(dtype=int), [[1, 1], [1, 0]])

    def test_needs_endomorphism(self):
        with pytest.raises(DomainMismatch):
            Coding.from_pairs({"a": "x"}).incidence_matrix()


class TestOccurringLetters:
    def test_examples(self):
        assert occurring_letters(MU, "0") == {"0", "1"}
        junk = Morphism.from_rules({"0": "01", "1": "10", "2": "1101"})
        assert occurring_letters(junk, "0") == {"0", "1"}
        assert occurring_letters(PSI, "0") == {"0", "1", "2", "3"}

    def test_not_prolongable(self):
        with pytest.raises(NotProlongable):
            occurring_letters(TAU, "b")

    @given(uniform_morphisms(), st.data())
    def test_monotone_under_added_rules(self, m, data):
        image = data.draw(words((*m.domain, "4"), max_size=5))
        before = occurring_letters(m, "0")
        assert "0" in before
        assert before <= occurring_letters(m.extend({"4": image}), "0")
