import pytest

from grc.common.validators import SlpValidator
from grc.core.exceptions import OutOfRangeError, ValidationError
from grc.grammar.builder import build_slp, fibonacci_slp
from grc.grammar.slp import (
    Slp,
    compute_slp_vocc,
    expand_slp,
    require_valid,
    slp_lengths,
    validate_slp,
)
from grc.services import corpus

from conftest import A, B, SIGMA, codes


class TestValidateSlp:
    def test_minimal_well_formed(self, abab_slp):
        report = validate_slp(abab_slp)
        assert report.is_valid
        assert report.expanded_length == 4

    def test_forward_reference(self):
        slp = Slp(sigma=SIGMA, rules=[(SIGMA + 1, A), (A, B)])
        report = validate_slp(slp)
        assert not report.is_valid
        assert "forward reference at rule 0" in report.errors

    def test_minimal_length_two(self):
        assert validate_slp(Slp(sigma=SIGMA, rules=[(A, A)])).is_valid

    def test_empty_grammar(self):
        assert not validate_slp(Slp(sigma=SIGMA, rules=[])).is_valid

    def test_sentinel_codes_are_reserved(self):
        report = validate_slp(Slp(sigma=SIGMA, rules=[(A, 0xFFFFFFFE)]))
        assert not report.is_valid

    def test_unreachable_rule_is_a_warning(self):
        report = validate_slp(Slp(sigma=SIGMA, rules=[(B, B), (A, B), (SIGMA + 1, A)]))
        assert report.is_valid
        assert report.warnings

    def test_require_valid_raises(self):
        with pytest.raises(ValidationError) as exc:
            require_valid(Slp(sigma=SIGMA, rules=[(SIGMA, A)]))
        assert exc.value.exit_code == 2

    def test_generate_report(self, abab_slp):
        text = SlpValidator().generate_report(abab_slp.sigma, abab_slp.rules)
        assert "ALL VALIDATIONS PASSED" in text
        assert "expanded length: 4" in text


class TestExpand:
    def test_two_rule_expansion(self, abab_slp):
        assert expand_slp(abab_slp) == codes("abab")

    def test_fig1(self, fig1_slp):
        assert expand_slp(fig1_slp) == codes("aabababaabaaaba")

    def test_lengths(self, fig1_slp):
        assert slp_lengths(fig1_slp) == [2, 2, 4, 6, 5, 9, 15]

    def test_round_trip_abracadabra(self):
        text = codes("abracadabra")
        assert expand_slp(build_slp(text)) == text

    def test_round_trip_fibonacci(self):
        text = list(corpus.fibonacci_word(10))
        assert len(text) == 55
        assert expand_slp(build_slp(text)) == text


class TestVocc:
    def test_two_rules(self, abab_slp):
        assert compute_slp_vocc(abab_slp) == [2, 1]

    def test_fig1(self, fig1_slp):
        vocc = compute_slp_vocc(fig1_slp)
        assert vocc[2] == 3
        assert vocc[1] == 4
        assert vocc[4] == 1
        assert vocc[6] == 1


class TestBuilder:
    def test_abab(self):
        assert build_slp(codes("abab")).rules == [(A, B), (SIGMA, SIGMA)]

    def test_aaaa(self):
        assert build_slp(codes("aaaa")).rules == [(A, A), (SIGMA, SIGMA)]

    def test_odd_length_carries_last_symbol(self):
        slp = build_slp(codes("abc"))
        assert expand_slp(slp) == codes("abc")
        assert validate_slp(slp).is_valid

    def test_fibonacci_has_few_variables(self):
        text = list(corpus.fibonacci_word(20))
        assert len(text) == 6765
        slp = build_slp(text)
        assert slp.n < 6765 // 4
        assert expand_slp(slp) == text

    def test_too_short(self):
        with pytest.raises(ValidationError):
            build_slp(codes("a"))

    def test_symbol_outside_alphabet(self):
        with pytest.raises(ValidationError):
            build_slp([1, 300], sigma=256)


class TestFibonacciSlp:
    @pytest.mark.parametrize("k", range(3, 16))
    def test_matches_fibonacci_word(self, k):
        slp = fibonacci_slp(k)
        assert slp.n == k - 2
        assert bytes(expand_slp(slp)) == corpus.fibonacci_word(k)

    def test_rejects_small_k(self):
        with pytest.raises(OutOfRangeError):
            fibonacci_slp(2)
