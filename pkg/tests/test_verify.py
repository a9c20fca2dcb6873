"""Tests for the verification oracles and the periodicity guard."""

import pandas as pd
import pytest
from hypothesis import HealthCheck, assume, given, settings

from morphic_words.catalog import get
from morphic_words.errors import InsufficientOccurrences
from morphic_words.fixedpoint import FixedPointStream, MorphicPresentation
from morphic_words.morphism import Coding, Morphism
from morphic_words.nonuniformize import PeriodicForm, nonuniformize
from morphic_words.verify import (
    VerificationReport,
    bounded_period_check,
    marker_prefix_ends,
    pairing_violation,
    verify_commutation,
    verify_minimal_alphabet,
    verify_nonuniform_presentation,
    verify_prefix_equal,
    verify_result_commutation,
)
from morphic_words.words import Word
from strategies import presentations, words

MU = Morphism.from_rules({"0": "01", "1": "10"})
JUNK = Morphism.from_rules({"0": "01", "1": "10", "2": "1101"})


@pytest.fixture(scope="module")
def thue_morse():
    return MorphicPresentation(MU, "0")


@pytest.fixture(scope="module")
def tm_result(thue_morse):
    return nonuniformize(thue_morse)


class TestPrefixEqual:
    def test_two_presentations_of_z(self):
        report = verify_prefix_equal(get("z-nonuniform").presentation, get("z-automatic").presentation, 7)
        assert report.overall

    def test_same_presentation(self, thue_morse):
        assert verify_prefix_equal(thue_morse, thue_morse, 500).overall

    def test_witness_is_first_difference(self, thue_morse):
        fib = MorphicPresentation(
            Morphism.from_rules({"a": "ab", "b": "a"}), "a", Coding.from_pairs({"a": "0", "b": "1"})
        )
        report = verify_prefix_equal(thue_morse, fib, 8)
        assert not report.overall
        assert report.check("prefix equality").witness == 2


class TestMarkerPrefixEnds:
    def test_each_prefix_ends_with_the_marker(self, tm_result):
        ends = marker_prefix_ends(tm_result.gamma_prime, tm_result.start, "1'", 5)
        prefix = tm_result.presentation.underlying_prefix(ends[-1] + 1)
        for k, end in enumerate(ends, start=1):
            assert prefix[end] == "1'"
            assert len(prefix[: end + 1].occurrences("1'")) == k

    def test_budget(self):
        with pytest.raises(InsufficientOccurrences) as exc:
            marker_prefix_ends(MU, "0", "1", 5, budget=3)
        assert exc.value.found == 2


class TestCommutation:
    def test_thue_morse_pipeline(self, tm_result):
        report = verify_result_commutation(tm_result, 3)
        assert report.overall
        assert "commutation P_3" in report.names()

    def test_identity_coding(self):
        report = verify_commutation(MU, MU, Coding.identity(MU.domain), "0", 4)
        assert report.overall

    def test_corrupted_image_detected(self, tm_result):
        c_prime = tm_result.trace.c_prime
        image = tm_result.gamma_prime[c_prime]
        flipped = {"0": "1", "1": "0"}[image[-1]]
        corrupted = tm_result.gamma_prime.extend({c_prime: image[:-1] + Word([flipped])})
        d = Coding.from_pairs({s: {"0'": "0", "1'": "1"}.get(s, s) for s in corrupted.domain})
        report = verify_commutation(tm_result.gamma, corrupted, d, tm_result.start, 3)
        failed = report.check("commutation P_1")
        assert not failed.passed
        lhs, rhs = failed.witness
        assert lhs != rhs


class TestMinimalAlphabet:
    def test_unused_letter(self):
        report = verify_minimal_alphabet(JUNK, "0")
        assert not report.overall
        assert report.check("minimal alphabet").witness == frozenset({"2"})

    def test_thue_morse(self):
        assert verify_minimal_alphabet(MU, "0").overall

    def test_pipeline_output(self, tm_result):
        assert verify_minimal_alphabet(tm_result.gamma_prime, tm_result.start).overall


class TestPairing:
    def test_clean(self):
        assert pairing_violation(Word(["0", "b'", "c'", "1"]), "b'", "c'") is None

    def test_lonely_b_prime(self):
        assert pairing_violation(Word(["b'", "1", "c'"]), "b'", "c'") == 0

    def test_lonely_c_prime(self):
        assert pairing_violation(Word(["0", "c'"]), "b'", "c'") == 1

    def test_trailing_b_prime_is_allowed(self):
        assert pairing_violation(Word(["0", "b'"]), "b'", "c'") is None


class TestNonuniformPresentation:
    def test_thue_morse_result(self, tm_result, thue_morse):
        report = verify_nonuniform_presentation(tm_result, thue_morse, 10_000)
        assert report.overall
        assert report.names() == [
            "non-uniform",
            "prolongable",
            "minimal alphabet",
            "prefix equality",
            "pairing",
            "cardinality",
        ]

    def test_fibonacci_as_result(self, thue_morse):
        report = verify_nonuniform_presentation(get("fibonacci").presentation, thue_morse, 100)
        assert report.check("non-uniform").passed
        assert not report.check("prefix equality").passed
        assert not report.overall

    def test_report_frame(self, tm_result, thue_morse):
        df = verify_nonuniform_presentation(tm_result, thue_morse, 100).to_frame()
        assert isinstance(df, pd.DataFrame)
        assert list(df.columns) == ["check", "passed", "witness"]
        assert bool(df["passed"].all())

    def test_combine(self, tm_result, thue_morse):
        combined = VerificationReport.combine(
            [verify_nonuniform_presentation(tm_result, thue_morse, 100), verify_result_commutation(tm_result, 2)]
        )
        assert combined.overall
        assert "commutation P_2" in combined.names()


class TestBoundedPeriodCheck:
    def test_visible_period(self):
        assert bounded_period_check(Word.of("aababab"), 4, 4) == PeriodicForm(Word.of("a"), Word.of("ab"))

    def test_thue_morse_is_not_periodic(self, thue_morse):
        assert bounded_period_check(thue_morse.prefix(256), 16, 16) is None

    def test_constant(self):
        assert bounded_period_check(Word.of("000"), 0, 4) == PeriodicForm(Word(), Word.of("0"))

    def test_fibonacci_is_not_periodic(self):
        assert bounded_period_check(get("fibonacci").presentation.prefix(4096), 64, 64) is None

    def test_trailing_square_is_not_a_period(self, thue_morse):
        assert bounded_period_check(thue_morse.prefix(100), 64, 64) is None
        assert bounded_period_check(Word.of("0110"), 3, 3) is None

    @given(words(("0", "1"), max_size=40))
    def test_returned_form_rebuilds_the_word(self, w):
        form = bounded_period_check(w, 8, 8)
        if form is not None:
            assert form.prefix(len(w)) == w
            assert len(w) > len(form.preperiod) + 2 * len(form.period)

    @given(words(max_size=8), words(min_size=1, max_size=8))
    def test_visible_repetition_is_found(self, u, v):
        w = u + v * 3
        form = bounded_period_check(w, 8, 8)
        assert form is not None
        assert form.prefix(len(w)) == w


class TestOracleConsistency:
    @settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
    @given(presentations())
    def test_commutation_implies_prefix_equality(self, p):
        assume(bounded_period_check(p.prefix(4096), 64, 64) is None)
        result = nonuniformize(p)
        t = result.trace
        assert verify_result_commutation(result, 5).overall
        length = marker_prefix_ends(result.gamma_prime, result.start, t.c_prime, 5)[-1] + 1
        d = Coding.from_pairs(
            {s: (t.b if s == t.b_prime else t.c if s == t.c_prime else s) for s in result.gamma_prime.domain}
        )
        coded = MorphicPresentation(result.gamma_prime, result.start, d)
        assert verify_prefix_equal(coded, MorphicPresentation(result.gamma, result.start), length).overall

    @given(presentations(), presentations())
    def test_prefix_equality_is_symmetric(self, p1, p2):
        forward = verify_prefix_equal(p1, p2, 200).check("prefix equality")
        backward = verify_prefix_equal(p2, p1, 200).check("prefix equality")
        assert forward == backward


class TestWitnessReplay:
    @given(presentations(), presentations())
    def test_prefix_witness(self, p1, p2):
        check = verify_prefix_equal(p1, p2, 200).check("prefix equality")
        if not check.passed:
            i = check.witness
            assert p1.prefix(i) == p2.prefix(i)
            assert p1.prefix(i + 1) != p2.prefix(i + 1)

    def test_minimal_alphabet_witness(self):
        missing = verify_minimal_alphabet(JUNK, "0").check("minimal alphabet").witness
        assert verify_minimal_alphabet(JUNK.restrict(set(JUNK.domain) - missing), "0").overall

    def test_commutation_witness(self, tm_result):
        c_prime = tm_result.trace.c_prime
        image = tm_result.gamma_prime[c_prime]
        corrupted = tm_result.gamma_prime.extend({c_prime: image[:-1] + Word([{"0": "1", "1": "0"}[image[-1]]])})
        d = Coding.from_pairs({s: {"0'": "0", "1'": "1"}.get(s, s) for s in corrupted.domain})
        check = verify_commutation(tm_result.gamma, corrupted, d, tm_result.start, 1).check("commutation P_1")
        end = marker_prefix_ends(corrupted, tm_result.start, c_prime, 1)[0]
        prefix = FixedPointStream(corrupted, tm_result.start).take(end + 1)
        assert check.witness == (d.apply(corrupted.apply(prefix)), tm_result.gamma.apply(d.apply(prefix)))
        assert check.witness[0] != check.witness[1]
