import pytest

from grc.engines.text_repair import select_bigram
from grc.grammar.rlstring import RlRun, RlString, RunBuilder, merge_runs, strip_leading, strip_trailing
from grc.grammar.symbols import DOLLAR, HASH, Bigram, symbol_label, tie_break_key

A, B, C, D = (ord(ch) for ch in "abcd")


class TestTieBreak:
    def test_lexicographic_tie(self):
        assert select_bigram({Bigram(A, B): 2, Bigram(C, D): 2}) == Bigram(A, B)

    def test_frequency_dominates(self):
        assert select_bigram({Bigram(A, B): 2, Bigram(B, A): 1}) == Bigram(A, B)

    def test_second_component_tie(self):
        assert select_bigram({Bigram(A, A): 3, Bigram(A, B): 3}) == Bigram(A, A)

    def test_threshold(self):
        assert select_bigram({Bigram(A, B): 1, Bigram(B, A): 1}) is None
        assert select_bigram({}) is None

    def test_key_orders_higher_frequency_first(self):
        assert tie_break_key(Bigram(C, D), 5) < tie_break_key(Bigram(A, B), 4)


def test_sentinels_sort_after_letters():
    assert HASH < DOLLAR
    assert Bigram(A, HASH) < Bigram(HASH, A)
    assert symbol_label(HASH, 256) == "#"
    assert symbol_label(DOLLAR, 256) == "$"
    assert symbol_label(A, 256) == "a"
    assert symbol_label(258, 256) == "X2"


class TestRlString:
    def test_from_symbols_is_canonical(self):
        s = RlString.from_symbols([A, A, B, A, A, A])
        assert s.runs == [RlRun(A, 2), RlRun(B, 1), RlRun(A, 3)]
        assert len(s) == 3
        assert s.length == 6
        assert list(s.symbols()) == [A, A, B, A, A, A]

    def test_constructor_merges_adjacent_runs(self):
        s = RlString([RlRun(A, 1), RlRun(A, 2), RlRun(B, 1)])
        assert s.runs == [RlRun(A, 3), RlRun(B, 1)]
        assert s.head == RlRun(A, 3)
        assert s.tail == RlRun(B, 1)

    def test_empty(self):
        s = RlString()
        assert not s
        assert s.head is None and s.tail is None

    def test_run_rejects_non_positive_exponent(self):
        with pytest.raises(ValueError):
            RlRun(A, 0)

    def test_builder_skips_empty_pushes(self):
        builder = RunBuilder()
        builder.push(A, 0)
        builder.push(A, 2)
        builder.push(A)
        builder.push(B, -1)
        assert builder.runs() == [RlRun(A, 3)]

    def test_merge_skips_none(self):
        assert merge_runs([None, RlRun(A, 1), None, RlRun(A, 1)]) == [RlRun(A, 2)]

    def test_strip(self):
        runs = [RlRun(A, 2), RlRun(B, 1), RlRun(A, 4)]
        assert strip_leading(runs, A) == 2
        assert strip_leading(runs, A) == 0
        assert strip_trailing(runs, A) == 4
        assert runs == [RlRun(B, 1)]
