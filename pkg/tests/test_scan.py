import pytest

from grc.core.exceptions import InternalAssertionError
from grc.engines.scan import (
    ScanRecompressor,
    compute_frequencies,
    replace_explicit,
    run,
    step,
    uncross_nonrepeating,
    uncross_repeating,
)
from grc.engines.text_repair import freq_table_text, repair_naive, select_bigram
from grc.grammar.builder import build_slp
from grc.grammar.level import (
    LevelGrammar,
    LevelRule,
    attach_sentinels,
    compute_boundary_info,
    compute_level_vocc,
    expand_level,
)
from grc.grammar.rlstring import RlRun, RlString
from grc.grammar.symbols import DOLLAR, HASH, Bigram
from grc.services import corpus

from conftest import A, B, SIGMA, codes

NEW = 300


def frequencies(g: LevelGrammar):
    return compute_frequencies(g, compute_level_vocc(g), compute_boundary_info(g.rules))


class TestComputeFrequencies:
    def test_fig1(self, fig1_slp):
        table = frequencies(attach_sentinels(fig1_slp))
        assert table[Bigram(A, B)] == 5
        assert table[Bigram(B, A)] == 5
        assert table[Bigram(A, A)] == 3
        assert select_bigram(table) == Bigram(A, B)

    def test_abab(self, abab_slp):
        assert frequencies(attach_sentinels(abab_slp)) == {
            Bigram(A, B): 2,
            Bigram(B, A): 1,
            Bigram(HASH, A): 1,
            Bigram(B, DOLLAR): 1,
        }

    def test_aaaa_block_witnessed_once(self, aaaa_slp):
        assert frequencies(attach_sentinels(aaaa_slp)) == {
            Bigram(A, A): 2,
            Bigram(HASH, A): 1,
            Bigram(A, DOLLAR): 1,
        }

    def test_matches_brute_force(self, small_corpus):
        for name, text in small_corpus[:40]:
            g = attach_sentinels(build_slp(text))
            assert frequencies(g) == freq_table_text(expand_level(g)), name


class TestUncrossNonrepeating:
    def test_pop_out_nulls_inner_variable(self, abab_slp):
        g = attach_sentinels(abab_slp)
        nulled = uncross_nonrepeating(g, B, A)
        x1, x2, x_hash, x_dollar = g.rules
        assert nulled == [0]
        assert x1.null
        assert (x2.left, x2.mid.runs, x2.right) == (None, [RlRun(B, 1), RlRun(A, 1)], None)
        assert (x_hash.mid.runs, x_hash.right) == ([RlRun(HASH, 1), RlRun(A, 1)], 1)
        assert (x_dollar.left, x_dollar.mid.runs) == (2, [RlRun(B, 1), RlRun(DOLLAR, 1)])
        assert expand_level(g) == [HASH] + codes("abab") + [DOLLAR]

    def test_single_letter_variable_is_popped(self):
        # Y -> "b" exactly; Z -> "a" Y
        rules = [
            LevelRule(mid=RlString([RlRun(B, 1)])),
            LevelRule(mid=RlString([RlRun(A, 1)]), right=0),
            LevelRule(mid=RlString([RlRun(HASH, 1)]), right=1),
            LevelRule(left=2, mid=RlString([RlRun(DOLLAR, 1)])),
        ]
        g = LevelGrammar(sigma=SIGMA, n=2, rules=rules, text_len=4)
        uncross_nonrepeating(g, A, B)
        assert g.rules[0].null
        assert g.rules[1].mid.runs == [RlRun(A, 1), RlRun(B, 1)]
        assert g.rules[1].right is None

    def test_rejects_repeating_bigram(self, abab_slp):
        with pytest.raises(ValueError):
            uncross_nonrepeating(attach_sentinels(abab_slp), A, A)


class TestUncrossRepeating:
    def test_power_collapses_into_start(self, aaaa_slp):
        g = attach_sentinels(aaaa_slp)
        nulled = uncross_repeating(g, A)
        assert nulled == [0, 1]
        assert g.rules[2].mid.runs == [RlRun(HASH, 1)]
        assert g.rules[2].right is None
        assert g.rules[3].left == 2
        assert g.rules[3].mid.runs == [RlRun(A, 4), RlRun(DOLLAR, 1)]

    def test_explicit_blocks_unchanged(self):
        slp = build_slp(codes("abaaab"))
        g = attach_sentinels(slp)
        before = expand_level(g)
        uncross_repeating(g, A)
        assert expand_level(g) == before

    def test_single_run_child(self):
        # X -> "a"; P -> X "b" X
        rules = [
            LevelRule(mid=RlString([RlRun(A, 1)])),
            LevelRule(left=0, mid=RlString([RlRun(B, 1)]), right=0),
            LevelRule(mid=RlString([RlRun(HASH, 1)]), right=1),
            LevelRule(left=2, mid=RlString([RlRun(DOLLAR, 1)])),
        ]
        g = LevelGrammar(sigma=SIGMA, n=2, rules=rules, text_len=5)
        uncross_repeating(g, A)
        assert g.rules[0].null
        parent = g.rules[1]
        assert (parent.left, parent.right) == (None, None)
        assert expand_level(g, strip_sentinels=True) == codes("aba")
        # the a-blocks are prefix and suffix of the text, so they move out to the sentinel rules
        assert g.rules[2].mid.runs == [RlRun(HASH, 1), RlRun(A, 1)]
        assert g.rules[3].mid.runs == [RlRun(A, 1), RlRun(DOLLAR, 1)]


class TestReplaceExplicit:
    def test_continuation_of_pop_out(self, abab_slp):
        g = attach_sentinels(abab_slp)
        vocc = compute_level_vocc(g)
        uncross_nonrepeating(g, B, A)
        weighted, edits = replace_explicit(g, Bigram(B, A), NEW, vocc)
        assert (weighted, edits) == (1, 1)
        assert g.rules[1].mid.runs == [RlRun(NEW, 1)]
        assert g.text_len == 5

    def test_continuation_of_block_uncross(self, aaaa_slp):
        g = attach_sentinels(aaaa_slp)
        vocc = compute_level_vocc(g)
        uncross_repeating(g, A)
        weighted, _ = replace_explicit(g, Bigram(A, A), NEW, vocc)
        assert weighted == 2
        assert g.rules[3].mid.runs == [RlRun(NEW, 2), RlRun(DOLLAR, 1)]

    def test_greedy_left_to_right(self):
        rules = [
            LevelRule(mid=RlString.from_symbols(codes("ababa"))),
            LevelRule(mid=RlString([RlRun(HASH, 1)]), right=0),
            LevelRule(left=1, mid=RlString([RlRun(DOLLAR, 1)])),
        ]
        g = LevelGrammar(sigma=SIGMA, n=1, rules=rules, text_len=7)
        weighted, edits = replace_explicit(g, Bigram(A, B), NEW, compute_level_vocc(g))
        assert (weighted, edits) == (2, 2)
        assert g.rules[0].mid.runs == [RlRun(NEW, 2), RlRun(A, 1)]
        assert g.text_len == 5


class TestStep:
    def test_abab(self, abab_slp):
        engine = ScanRecompressor(abab_slp)
        assert step(engine)
        record = engine.records[0]
        assert (record.bigram_left, record.bigram_right, record.freq) == (A, B, 2)
        assert engine.expand(strip_sentinels=False) == [HASH, SIGMA, SIGMA, DOLLAR]
        assert not step(engine)
        assert engine.records[-1].terminal

    def test_aaaa(self, aaaa_slp):
        engine = ScanRecompressor(aaaa_slp)
        assert step(engine)
        assert engine.records[0].freq == 2
        assert engine.expand(strip_sentinels=False) == [HASH, SIGMA, SIGMA, DOLLAR]

    def test_unique_bigrams_terminate(self):
        engine = ScanRecompressor(build_slp(codes("abcde")))
        assert not step(engine)
        assert engine.finished


class TestRun:
    def test_abab(self, abab_slp):
        grammar, stats = run(abab_slp)
        assert grammar.pairs == [(A, B)]
        assert grammar.final == [SIGMA, SIGMA]
        assert stats.n == 2

    def test_unique_bigrams(self):
        grammar, _ = run(build_slp(codes("abcde")))
        assert grammar.pairs == []
        assert grammar.final == codes("abcde")

    def test_fibonacci_matches_naive(self):
        text = corpus.fibonacci_word(15)
        assert run(build_slp(text))[0] == repair_naive(text)[0]

    def test_fig1_with_debug_verify(self, fig1_slp):
        grammar, _ = run(fig1_slp, debug_verify=True)
        assert grammar == repair_naive(codes("aabababaabaaaba"))[0]

    def test_bookkeeping_laws_in_records(self, fig1_slp):
        _, stats = run(fig1_slp)
        n = fig1_slp.n
        for before, after in zip(stats.records, stats.records[1:]):
            assert after.text_len == before.text_len - before.freq
        for record in stats.records:
            assert record.grammar_size <= record.text_len + 2 + 2 * (n + 2)
            assert record.phase == "scan"

    def test_size_law_violation_is_internal_error(self, abab_slp, monkeypatch):
        engine = ScanRecompressor(abab_slp)
        monkeypatch.setattr(engine, "grammar_size", lambda: 10**9)
        with pytest.raises(InternalAssertionError):
            engine.step()
