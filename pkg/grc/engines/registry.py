"""
Engine lookup by name.

Text engines run on a symbol sequence; recompression engines run on an SLP.
Either kind can be fed either input: a text is paired into an SLP first, an
SLP is expanded before a text engine sees it.
"""

from typing import Optional, Sequence, Tuple

from grc.core.exceptions import ValidationError
from grc.engines.fast import run_fast
from grc.engines.hybrid import run_hybrid
from grc.engines.scan import run as run_scan
from grc.engines.text_repair import repair_fast, repair_naive
from grc.grammar.builder import build_slp
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp, expand_slp, require_valid
from grc.models.run_config import HybridConfig
from grc.models.stats import RunStats

TEXT_ENGINES = ("text-naive", "text-fast")
GRAMMAR_ENGINES = ("scan", "fast", "hybrid")
ENGINE_NAMES = TEXT_ENGINES + GRAMMAR_ENGINES

_SHORT_NAMES = {"naive": "text-naive"}


def resolve_engine(name: str) -> str:
    """Canonical engine name; ``naive`` is accepted for ``text-naive``"""
    name = _SHORT_NAMES.get(name, name)
    if name not in ENGINE_NAMES:
        raise ValidationError(
            f"unknown engine '{name}', expected one of {', '.join(ENGINE_NAMES)}",
            details={"engine": name},
        )
    return name


def compress_slp(
    slp: Slp,
    engine: str = "scan",
    debug_verify: Optional[bool] = None,
    hybrid: Optional[HybridConfig] = None,
) -> Tuple[RePairGrammar, RunStats]:
    """RePair grammar of val(slp) with the named engine"""
    engine = resolve_engine(engine)
    if engine == "scan":
        return run_scan(slp, debug_verify=debug_verify)
    if engine == "fast":
        return run_fast(slp, debug_verify=debug_verify)
    if engine == "hybrid":
        cfg = hybrid or HybridConfig()
        if debug_verify is not None:
            cfg = cfg.model_copy(update={"debug_verify": debug_verify})
        return run_hybrid(slp, cfg)
    require_valid(slp)
    grammar, stats = compress_text(expand_slp(slp), engine, sigma=slp.sigma)
    stats.n = slp.n
    return grammar, stats


def compress_text(
    text: Sequence[int],
    engine: str = "text-fast",
    sigma: int = 256,
    debug_verify: Optional[bool] = None,
    hybrid: Optional[HybridConfig] = None,
) -> Tuple[RePairGrammar, RunStats]:
    """RePair grammar of ``text`` with the named engine"""
    engine = resolve_engine(engine)
    if engine == "text-naive":
        return repair_naive(text, sigma=sigma)
    if engine == "text-fast":
        return repair_fast(text, sigma=sigma)
    return compress_slp(build_slp(text, sigma=sigma), engine, debug_verify=debug_verify, hybrid=hybrid)
