"""
Toolkit Service
File-level operations behind the command line: read inputs, run engines,
write grammars, texts and stats files.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from grc.common.utils import first_divergence, symbols_to_bytes
from grc.common.validators import RePairGrammarValidator
from grc.config.settings import get_settings
from grc.core.exceptions import NotFoundError, ValidationError, VerificationError
from grc.core.logging_config import get_logger
from grc.engines.registry import compress_slp, compress_text, resolve_engine
from grc.grammar.builder import build_slp, fibonacci_slp
from grc.grammar.formats import (
    load_grammar,
    serialize_repair,
    serialize_slp,
    slp_to_text,
)
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp, expand_slp, require_valid
from grc.models.run_config import HybridConfig
from grc.models.stats import RunStats, RunSummary
from grc.services import corpus
from grc.services.stats_tracker import StatsFile, StatsTracker, read_stats

logger = get_logger(__name__)

Grammar = Union[Slp, RePairGrammar]


class ToolkitService:
    """Service for corpus, grammar and verification operations"""

    def __init__(self):
        self.settings = get_settings()
        self.sigma = self.settings.alphabet_size

    # File I/O ----------------------------------------------------------------

    def read_bytes(self, path: Union[str, Path]) -> bytes:
        path = Path(path)
        if not path.is_file():
            raise NotFoundError(f"input file not found: {path}", resource=str(path))
        data = path.read_bytes()
        logger.info(f"read {len(data)} bytes from {path}")
        return data

    def write_bytes(self, path: Union[str, Path], data: bytes) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        logger.info(f"wrote {len(data)} bytes to {path}")

    def load(self, path: Union[str, Path]) -> Union[Grammar, bytes]:
        """Decode a grammar file by magic; raw text comes back as bytes"""
        data = self.read_bytes(path)
        grammar = load_grammar(data)
        return data if grammar is None else grammar

    def load_slp(self, path: Union[str, Path]) -> Slp:
        """An SLP from an SLP file, or built from a raw text file"""
        loaded = self.load(path)
        if isinstance(loaded, RePairGrammar):
            raise ValidationError(f"{path} holds a RePair grammar, expected an SLP or a text")
        if isinstance(loaded, bytes):
            logger.info(f"{path} is raw text, building an SLP first")
            return build_slp(loaded, sigma=self.sigma)
        return loaded

    def load_text(self, path: Union[str, Path]) -> List[int]:
        """Symbols of a text file or of any grammar file's expansion"""
        loaded = self.load(path)
        if isinstance(loaded, bytes):
            return list(loaded)
        return self.expand(loaded)

    @staticmethod
    def expand(grammar: Grammar) -> List[int]:
        if isinstance(grammar, Slp):
            require_valid(grammar)
            return expand_slp(grammar)
        return grammar.expand()

    # Commands ------------------------------------------------------------------

    def generate(
        self,
        family: str,
        param: int,
        output: Union[str, Path],
        sigma: int = 4,
        seed: Optional[int] = None,
        as_slp: bool = False,
        base_file: Optional[Union[str, Path]] = None,
    ) -> int:
        """Write one corpus text, or its SLP; returns the text length"""
        if as_slp and family == "fib":
            slp = fibonacci_slp(param, sigma=self.sigma)
            self.write_bytes(output, serialize_slp(slp))
            return require_valid(slp)
        base = self.read_bytes(base_file) if base_file is not None else None
        text = corpus.generate(family, param, sigma=sigma, seed=seed, base=base)
        if as_slp:
            self.write_bytes(output, serialize_slp(build_slp(text, sigma=self.sigma)))
        else:
            self.write_bytes(output, text)
        return len(text)

    def build_slp(self, source: Union[str, Path], output: Union[str, Path], text_format: bool = False) -> Slp:
        text = self.read_bytes(source)
        slp = build_slp(text, sigma=self.sigma)
        self.write_bytes(output, slp_to_text(slp) if text_format else serialize_slp(slp))
        logger.info(f"built SLP with n={slp.n} for N={len(text)}")
        return slp

    def recompress(
        self,
        source: Union[str, Path],
        output: Union[str, Path],
        engine: str = "scan",
        stats_path: Optional[Union[str, Path]] = None,
        debug_verify: Optional[bool] = None,
        hybrid: Optional[HybridConfig] = None,
    ) -> Tuple[RePairGrammar, RunStats]:
        """RePair grammar of an SLP (or raw text) with a recompression engine"""
        slp = self.load_slp(source)
        grammar, stats = compress_slp(slp, engine, debug_verify=debug_verify, hybrid=hybrid)
        self._finish(grammar, stats, output, stats_path)
        return grammar, stats

    def repair(
        self,
        source: Union[str, Path],
        output: Union[str, Path],
        engine: str = "fast",
        stats_path: Optional[Union[str, Path]] = None,
    ) -> Tuple[RePairGrammar, RunStats]:
        """RePair grammar of a raw text with a text engine"""
        name = resolve_engine(engine if engine.startswith("text-") else f"text-{engine}")
        grammar, stats = compress_text(self.read_bytes(source), name, sigma=self.sigma)
        self._finish(grammar, stats, output, stats_path)
        return grammar, stats

    def hybrid(
        self,
        source: Union[str, Path],
        output: Union[str, Path],
        cfg: HybridConfig,
    ) -> Tuple[RePairGrammar, RunStats]:
        return self.recompress(source, output, "hybrid", cfg.stats_path, cfg.debug_verify, cfg)

    def decompress(self, source: Union[str, Path], output: Union[str, Path]) -> int:
        loaded = self.load(source)
        if isinstance(loaded, bytes):
            raise ValidationError(f"{source} is not a grammar file")
        text = self.expand(loaded)
        self.write_bytes(output, symbols_to_bytes(text))
        return len(text)

    def verify(self, first: Union[str, Path], second: Union[str, Path]) -> int:
        """
        Compare the texts behind two files (grammars are expanded).

        Returns:
            Common length on success

        Raises:
            VerificationError: With the first divergence offset
        """
        a = self.load_text(first)
        b = self.load_text(second)
        offset = first_divergence(a, b)
        if offset is not None:
            raise VerificationError(
                f"{first} and {second} differ at offset {offset} (lengths {len(a)} and {len(b)})",
                offset=offset,
            )
        logger.info(f"{first} and {second} agree on {len(a)} symbols")
        return len(a)

    def stats(
        self,
        source: Union[str, Path],
        engine: str = "scan",
        stats_path: Optional[Union[str, Path]] = None,
    ) -> dict:
        """Aggregates of a run on an SLP, or the shape of a RePair grammar"""
        loaded = self.load(source)
        if isinstance(loaded, RePairGrammar):
            report = RePairGrammarValidator().report(
                loaded.sigma, loaded.pairs, loaded.final, check_maximality=False
            )
            if not report.is_valid:
                raise ValidationError(f"invalid RePair grammar: {report.errors[0]}")
            return {
                "sigma": loaded.sigma,
                "m": loaded.m,
                "finalLen": len(loaded.final),
                "expandedLen": loaded.expanded_length(),
            }
        if isinstance(loaded, bytes):
            _, stats = compress_text(loaded, engine, sigma=self.sigma)
        else:
            _, stats = compress_slp(loaded, engine)
        if stats_path is not None:
            StatsTracker(stats_path).write(stats)
        return stats.summary().to_record()

    def read_records(self, stats_path: Union[str, Path]) -> Tuple[StatsFile, RunSummary]:
        """Parse a stats file and recompute its aggregates"""
        parsed = read_stats(stats_path)
        recomputed = parsed.recompute()
        if not parsed.is_consistent():
            logger.warning(f"{stats_path}: stored summary differs from the recomputed aggregates")
        return parsed, recomputed

    def _finish(
        self,
        grammar: RePairGrammar,
        stats: RunStats,
        output: Union[str, Path],
        stats_path: Optional[Union[str, Path]],
    ) -> None:
        self.write_bytes(output, serialize_repair(grammar))
        if stats_path is not None:
            StatsTracker(stats_path).write(stats)
