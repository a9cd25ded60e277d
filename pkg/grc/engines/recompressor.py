"""
Level loop shared by the recompression engines.

An engine turns G_h into G_{h+1} one ``step`` at a time. The base class owns
the pair list, the replacement counter, the stats records and the cheap
bookkeeping laws; subclasses supply frequency selection and the uncross and
replace mechanics.
"""

from typing import List, Optional, Tuple

from grc.config.settings import get_settings
from grc.core.exceptions import InternalAssertionError
from grc.core.logging_config import get_logger
from grc.grammar.repair_grammar import RePairGrammar
from grc.grammar.slp import Slp
from grc.grammar.symbols import Bigram, symbol_label
from grc.models.stats import LevelStats, RunStats

logger = get_logger(__name__)


class Recompressor:
    """Base class of the level-by-level recompression engines"""

    phase = "recompress"

    def __init__(self, slp: Slp, debug_verify: Optional[bool] = None):
        settings = get_settings()
        self.debug_verify = settings.debug_verify if debug_verify is None else debug_verify
        self.sigma = slp.sigma
        self.n = slp.n
        self.pairs: List[Tuple[int, int]] = []
        self.replacements = 0
        self.records: List[LevelStats] = []
        self.finished = False

    # Engine-specific state -------------------------------------------------

    @property
    def level(self) -> int:
        raise NotImplementedError

    @property
    def text_len(self) -> int:
        """|#T_h$|"""
        raise NotImplementedError

    def grammar_size(self) -> int:
        raise NotImplementedError

    def live_count(self) -> int:
        raise NotImplementedError

    def select(self) -> Optional[Tuple[Bigram, int]]:
        """Refresh frequency state and return the tie-break maximum, if any"""
        raise NotImplementedError

    def apply(self, bigram: Bigram, new_letter: int) -> Tuple[int, int]:
        """Uncross and replace; returns (weighted count, rule-string edits)"""
        raise NotImplementedError

    def expand(self, strip_sentinels: bool = True) -> List[int]:
        raise NotImplementedError

    def counters(self) -> Tuple[int, int]:
        """(queue mutations, junction mutations) since the previous record"""
        return 0, 0

    # Shared loop -------------------------------------------------------------

    @property
    def plain_length(self) -> int:
        """|T_h| without sentinels"""
        return self.text_len - 2

    def _record(self, bigram: Optional[Bigram], freq: int) -> LevelStats:
        queue_mutations, junction_mutations = self.counters()
        record = LevelStats(
            level=self.level,
            bigram_left=bigram.left if bigram is not None else None,
            bigram_right=bigram.right if bigram is not None else None,
            freq=freq,
            grammar_size=self.grammar_size(),
            live_vars=self.live_count(),
            text_len=self.plain_length,
            cumulative_r=self.replacements,
            phase=self.phase,
            queue_mutations=queue_mutations,
            junction_mutations=junction_mutations,
        )
        self.records.append(record)
        return record

    def step(self) -> bool:
        """
        Advance one level.

        Returns:
            False once no bigram has frequency >= 2 (the terminal record is written)
        """
        if self.finished:
            return False
        top = self.select()
        if top is None or top[1] < 2:
            self._record(None, 0)
            self.finished = True
            return False

        bigram, freq = top
        record = self._record(bigram, freq)
        label = f"{symbol_label(bigram.left, self.sigma)}{symbol_label(bigram.right, self.sigma)}"
        logger.debug(
            f"level {record.level}: bigram={label} f={freq} "
            f"|G|={record.grammar_size} n_h={record.live_vars} |T|={record.text_len}"
        )
        before = self.text_len
        new_letter = self.sigma + len(self.pairs)
        weighted, edits = self.apply(bigram, new_letter)
        if weighted != freq:
            raise InternalAssertionError(
                f"level {record.level}: replaced {weighted} weighted occurrences, frequency was {freq}",
                details={"level": record.level, "freq": freq, "replaced": weighted},
            )
        if self.text_len != before - freq:
            raise InternalAssertionError(
                f"length law broken at level {record.level}: {before} - {freq} != {self.text_len}"
            )
        size, bound = self.grammar_size(), self.text_len + 2 * (self.n + 2)
        if size > bound:
            raise InternalAssertionError(
                f"size law broken at level {record.level + 1}: |G|={size} > {bound}",
                details={"grammarSize": size, "bound": bound},
            )
        self.pairs.append((bigram.left, bigram.right))
        self.replacements += edits
        return True

    def run_to_end(self) -> None:
        while self.step():
            pass

    def stats(self) -> RunStats:
        return RunStats(n=self.n, records=list(self.records), replacements=self.replacements)

    def result(self) -> Tuple[RePairGrammar, RunStats]:
        """Output grammar and stats; the final sequence is T_m without sentinels"""
        grammar = RePairGrammar(sigma=self.sigma, pairs=list(self.pairs), final=self.expand(True))
        logger.info(
            f"{self.phase}: n={self.n} m={grammar.m} final={len(grammar.final)} R={self.replacements}"
        )
        return grammar, self.stats()
