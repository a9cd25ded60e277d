import pytest

from grc.engines.hybrid import run_hybrid, should_switch
from grc.engines.scan import run as run_scan
from grc.engines.text_repair import repair_fast, repair_naive
from grc.grammar.builder import build_slp
from grc.grammar.level import attach_sentinels
from grc.grammar.slp import expand_slp
from grc.models.run_config import HybridConfig
from grc.services import corpus

from conftest import codes

T_VALUES = (1, 2, 3, 4, 5)


class TestShouldSwitch:
    def test_t_one_always(self):
        assert should_switch(100, 100, 1)

    def test_threshold_is_strict(self):
        assert not should_switch(50, 100, 2)
        assert should_switch(49, 100, 2)

    def test_never_without_t(self):
        assert not should_switch(2, 10**6, None)

    def test_nothing_left_to_pair(self):
        assert not should_switch(1, 100, 3)


class TestRunHybrid:
    def test_t_one_is_plain_repair(self, fig1_slp):
        grammar, stats = run_hybrid(fig1_slp, HybridConfig(t=1))
        text = expand_slp(fig1_slp)
        expected, expected_stats = repair_fast(text)
        assert grammar == expected
        assert stats.hybrid.switch_level == 0
        assert stats.hybrid.switch_len == len(text)
        assert stats.hybrid.switch_grammar_size == attach_sentinels(fig1_slp).grammar_size()
        assert stats.hybrid.peak_metric == stats.hybrid.switch_grammar_size + len(text)
        assert stats.replacements == expected_stats.replacements
        assert all(record.phase == "text-fast" for record in stats.records)

    def test_unique_bigrams(self):
        slp = build_slp(codes("abcde"))
        for t in T_VALUES:
            grammar, stats = run_hybrid(slp, HybridConfig(t=t))
            assert grammar.pairs == []
            assert grammar.final == codes("abcde")
            if t >= 2:
                assert stats.hybrid.switch_level is None

    def test_fibonacci_three_way(self):
        text = corpus.fibonacci_word(18)
        slp = build_slp(text)
        hybrid, stats = run_hybrid(slp, HybridConfig(t=2))
        assert hybrid == run_scan(slp)[0] == repair_naive(text)[0]
        assert stats.hybrid.switch_level is not None
        assert stats.hybrid.switch_len * 2 < len(text)

    def test_never_switching_matches_scan(self, fig1_slp):
        grammar, stats = run_hybrid(fig1_slp, HybridConfig(t=None))
        scan, scan_stats = run_scan(fig1_slp)
        assert grammar == scan
        assert stats.hybrid.switch_level is None
        assert stats.hybrid.switch_len is None
        assert stats.hybrid.peak_metric == max(r.grammar_size for r in scan_stats.records)
        assert stats.replacements == scan_stats.replacements

    @pytest.mark.parametrize("phase1,phase2", [("scan", "fast"), ("fast", "fast"), ("scan", "naive")])
    def test_engine_choices_agree(self, phase1, phase2):
        text = corpus.thue_morse(9)
        expected = repair_naive(text)[0]
        for t in T_VALUES:
            cfg = HybridConfig(t=t, phase1=phase1, phase2=phase2)
            assert run_hybrid(build_slp(text), cfg)[0] == expected, t

    def test_corpus_subset(self, small_corpus):
        for name, text in small_corpus[::4]:
            expected = repair_naive(text)[0]
            slp = build_slp(text)
            for t in T_VALUES:
                assert run_hybrid(slp, HybridConfig(t=t))[0] == expected, (name, t)


class TestSwitchBookkeeping:
    def test_switch_is_the_first_short_level(self):
        text = corpus.fibonacci_word(16)
        n_total = len(text)
        for t in (2, 3, 4, 5):
            _, stats = run_hybrid(build_slp(text), HybridConfig(t=t))
            summary = stats.hybrid
            assert summary.switch_level is not None
            assert summary.switch_len * t < n_total
            phase1 = [r for r in stats.records if r.phase == "scan"]
            assert len(phase1) == summary.switch_level
            for record in phase1:
                assert record.text_len * t >= n_total
            assert summary.peak_metric == max(
                max(r.grammar_size for r in phase1), summary.switch_grammar_size + summary.switch_len
            )

    def test_switch_level_grammar_is_recorded(self):
        slp = build_slp(corpus.fibonacci_word(16))
        _, scan_stats = run_scan(slp)
        for phase1 in ("scan", "fast"):
            _, stats = run_hybrid(slp, HybridConfig(t=3, phase1=phase1))
            summary = stats.hybrid
            assert summary.switch_grammar_size == scan_stats.records[summary.switch_level].grammar_size
            assert summary.to_record()["switchGrammarSize"] == summary.switch_grammar_size

    def test_levels_and_costs_continue_across_the_switch(self):
        _, stats = run_hybrid(build_slp(corpus.fibonacci_word(14)), HybridConfig(t=3))
        assert [r.level for r in stats.records] == list(range(len(stats.records)))
        costs = [r.cumulative_r for r in stats.records]
        assert costs == sorted(costs)
        assert stats.records[-1].terminal
        assert stats.hybrid.total_replacements == stats.replacements
        assert not any(r.terminal for r in stats.records[:-1])

    def test_text_records_report_text_size(self):
        _, stats = run_hybrid(build_slp(corpus.unary(64)), HybridConfig(t=1, phase2="naive"))
        for record in stats.records:
            assert record.grammar_size == record.text_len
            assert record.live_vars == 0
