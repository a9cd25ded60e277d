from grc.grammar.level import (
    LevelGrammar,
    LevelRule,
    attach_sentinels,
    compute_boundary_info,
    compute_vocc,
    expand_level,
)
from grc.grammar.rlstring import RlRun, RlString
from grc.grammar.slp import Slp
from grc.grammar.symbols import DOLLAR, HASH

from conftest import A, B, SIGMA, codes


class TestAttachSentinels:
    def test_two_rule_grammar(self, abab_slp):
        g = attach_sentinels(abab_slp)
        assert g.n == 2
        assert g.text_len == 6
        assert g.level == 0
        x_hash, x_dollar = g.rules[2], g.rules[3]
        assert x_hash.left is None and x_hash.mid.runs == [RlRun(HASH, 1)] and x_hash.right == 1
        assert x_dollar.left == 2 and x_dollar.mid.runs == [RlRun(DOLLAR, 1)] and x_dollar.right is None
        assert expand_level(g) == [HASH] + codes("abab") + [DOLLAR]
        assert expand_level(g, strip_sentinels=True) == codes("abab")

    def test_terminal_rule_becomes_run_string(self, abab_slp):
        rule = attach_sentinels(abab_slp).rules[0]
        assert rule.left is None and rule.right is None
        assert rule.mid.runs == [RlRun(A, 1), RlRun(B, 1)]

    def test_mixed_rule(self):
        slp = Slp(sigma=SIGMA, rules=[(A, A), (SIGMA, B)])
        rule = attach_sentinels(slp).rules[1]
        assert rule.left == 0
        assert rule.mid.runs == [RlRun(B, 1)]
        assert rule.right is None

    def test_unreachable_rules_are_null(self):
        slp = Slp(sigma=SIGMA, rules=[(B, B), (A, B), (SIGMA + 1, A)])
        g = attach_sentinels(slp)
        assert g.rules[0].null
        assert g.live_count() == 4
        assert expand_level(g, strip_sentinels=True) == codes("aba")

    def test_size_bound_holds_at_level_zero(self, fig1_slp):
        g = attach_sentinels(fig1_slp)
        assert g.grammar_size() <= g.size_bound()


class TestBoundaryInfo:
    def test_two_distinct_letters(self, abab_slp):
        info = compute_boundary_info(attach_sentinels(abab_slp).rules)
        assert info.lmb[0] == RlRun(A, 1)
        assert info.rmb[0] == RlRun(B, 1)
        assert not info.is_sb(0)

    def test_single_block(self, aaaa_slp):
        info = compute_boundary_info(attach_sentinels(aaaa_slp).rules)
        assert info.lmb[0] == info.rmb[0] == RlRun(A, 2)
        assert info.is_sb(0)
        assert info.lmb[1] == RlRun(A, 4)
        assert info.is_sb(1)

    def test_composite_variable(self, abab_slp):
        info = compute_boundary_info(attach_sentinels(abab_slp).rules)
        assert info.lmb[1] == RlRun(A, 1)
        assert info.rmb[1] == RlRun(B, 1)
        assert not info.is_sb(1)
        assert info.first_letter(2) == HASH
        assert info.last_letter(3) == DOLLAR

    def test_blocks_merge_across_children(self, fig1_slp):
        # X5 = X4 X2 = "baaba" . "aaba": the trailing a of X4 meets aa of X2
        info = compute_boundary_info(attach_sentinels(fig1_slp).rules)
        assert info.lmb[5] == RlRun(B, 1)
        assert info.rmb[5] == RlRun(A, 1)
        assert info.lmb[2] == RlRun(A, 2)


class TestExpandLevel:
    def test_hand_built_grammar(self):
        rules = [
            LevelRule(mid=RlString.from_symbols(codes("aaaaa"))),
            LevelRule(mid=RlString([RlRun(HASH, 1)]), right=0),
            LevelRule(left=1, mid=RlString([RlRun(DOLLAR, 1)])),
        ]
        g = LevelGrammar(sigma=SIGMA, n=1, rules=rules, text_len=7)
        assert expand_level(g, strip_sentinels=True) == codes("aaaaa")
        assert g.grammar_size() == 5
        assert compute_vocc(g) == [1, 1, 1]

    def test_vocc_matches_slp_vocc_on_variables(self, fig1_slp):
        g = attach_sentinels(fig1_slp)
        vocc = compute_vocc(g)
        assert vocc[:7] == compute_vocc(fig1_slp)
        assert vocc[7] == vocc[8] == 1
