"""
Hybrid runs: recompression while the text is long, text RePair once it is short.

Phase 1 advances a recompression engine level by level. Before each level it
checks |T_h| against N/t; once the text has shrunk enough, T_h is
materialized and phase 2 finishes on the explicit sequence with the same
letter numbering, so the output equals plain RePair on the full text.

The peak working size counts G_h and T_h together at the switch, since the
grammar is still held while its text is expanded.
"""

from typing import Optional, Tuple

from grc.core.logging_config import get_logger
from grc.core.run_context import reset_current_engine, set_current_engine
from grc.engines.fast import FastRecompressor
from grc.engines.recompressor import Recompressor
from grc.engines.scan import ScanRecompressor
from grc.engines.text_repair import run_text_fast, run_text_naive
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp, require_valid
from grc.models.run_config import HybridConfig
from grc.models.stats import HybridSummary, RunStats

logger = get_logger(__name__)

PHASE_HYBRID = "hybrid"


def should_switch(plain_len: int, n_total: int, t: Optional[int]) -> bool:
    """
    Switch rule checked before each phase-1 level.

    t = 1 switches before level 0; larger t waits until |T_h| * t < N.
    t = None never switches. A text shorter than 2 has nothing left to pair.
    """
    if t is None or plain_len < 2:
        return False
    if t == 1:
        return True
    return plain_len * t < n_total


def _phase1_engine(slp: Slp, cfg: HybridConfig) -> Recompressor:
    if cfg.phase1 == "fast":
        return FastRecompressor(slp, debug_verify=cfg.debug_verify)
    return ScanRecompressor(slp, debug_verify=cfg.debug_verify)


def run_hybrid(slp: Slp, cfg: Optional[HybridConfig] = None) -> Tuple[RePairGrammar, RunStats]:
    """
    RePair grammar of val(slp) via recompression then text RePair.

    Returns:
        (grammar, stats) with ``stats.hybrid`` holding the switch summary
    """
    cfg = cfg or HybridConfig()
    n_total = require_valid(slp)
    token = set_current_engine(PHASE_HYBRID)
    try:
        engine = _phase1_engine(slp, cfg)
        switched = False
        while True:
            if should_switch(engine.plain_length, n_total, cfg.t):
                switched = True
                break
            if not engine.step():
                break

        phase1_peak = max((record.grammar_size for record in engine.records), default=0)
        if not switched:
            grammar, stats = engine.result()
            stats.hybrid = HybridSummary(
                t=cfg.t,
                peak_metric=phase1_peak,
                total_replacements=stats.replacements,
            )
            return grammar, stats

        switch_level = engine.level
        switch_size = engine.grammar_size()
        text = engine.expand(True)
        logger.info(
            f"switching to text RePair at level {switch_level}: |G|={switch_size} |T|={len(text)} "
            f"N={n_total} t={cfg.t}"
        )
        runner = run_text_fast if cfg.phase2 == "fast" else run_text_naive
        outcome = runner(
            text,
            first_letter=slp.sigma + len(engine.pairs),
            start_level=switch_level,
            start_r=engine.replacements,
        )
        grammar = RePairGrammar(
            sigma=slp.sigma,
            pairs=list(engine.pairs) + outcome.pairs,
            final=outcome.final,
        )
        stats = RunStats(
            n=slp.n,
            records=list(engine.records) + outcome.records,
            replacements=outcome.replacements,
        )
        stats.hybrid = HybridSummary(
            t=cfg.t,
            switch_level=switch_level,
            switch_len=len(text),
            switch_grammar_size=switch_size,
            peak_metric=max(phase1_peak, switch_size + len(text)),
            total_replacements=outcome.replacements,
        )
        logger.info(
            f"hybrid: m={grammar.m} final={len(grammar.final)} peak={stats.hybrid.peak_metric} "
            f"R={stats.replacements}"
        )
        return grammar, stats
    finally:
        reset_current_engine(token)
