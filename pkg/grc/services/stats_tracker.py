"""
Stats files: one JSON object per line.

A file holds the per-level records in level order, then one summary record
and, for hybrid runs, one hybrid record. Key order is stable so stats files
diff cleanly between runs.
"""

import json
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError as PydanticValidationError

from grc.core.exceptions import FormatError, NotFoundError
from grc.core.logging_config import get_logger
from grc.models.stats import HybridSummary, LevelStats, RunStats, RunSummary, summarize_records

logger = get_logger(__name__)

SUMMARY_RECORD = "summary"
HYBRID_RECORD = "hybrid"


class StatsTracker:
    """Write the stats of one run to a line-delimited JSON file"""

    def __init__(self, stats_file: Union[str, Path]):
        self.stats_file = Path(stats_file)

    def write(self, stats: RunStats) -> RunSummary:
        """Write all records plus the summary; returns the summary written"""
        summary = stats.summary()
        lines = [record.to_record() for record in stats.records]
        lines.append(summary.to_record())
        if stats.hybrid is not None:
            lines.append(stats.hybrid.to_record())
        try:
            self.stats_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.stats_file, "w", encoding="utf-8") as file_handle:
                for line in lines:
                    file_handle.write(json.dumps(line, ensure_ascii=False) + "\n")
        except OSError:
            logger.exception("Failed to write stats to %s", self.stats_file)
            raise
        logger.info(f"wrote {len(stats.records)} stats records to {self.stats_file}")
        return summary


class StatsFile:
    """Parsed contents of a stats file"""

    def __init__(
        self,
        records: List[LevelStats],
        summary: Optional[RunSummary] = None,
        hybrid: Optional[HybridSummary] = None,
    ):
        self.records = records
        self.summary = summary
        self.hybrid = hybrid

    def recompute(self) -> RunSummary:
        """Aggregates recomputed from the level records alone"""
        n = self.summary.n if self.summary is not None else 0
        return summarize_records(self.records, n=n)

    def is_consistent(self) -> bool:
        """True when the stored summary equals the recomputed aggregates"""
        return self.summary is None or self.summary == self.recompute()


def read_stats(stats_file: Union[str, Path]) -> StatsFile:
    """
    Parse a stats file.

    Raises:
        NotFoundError: File does not exist
        FormatError: A line is not a valid record
    """
    path = Path(stats_file)
    if not path.exists():
        raise NotFoundError(f"stats file not found: {path}", resource=str(path))

    parsed = StatsFile(records=[])
    with open(path, "r", encoding="utf-8") as file_handle:
        for number, line in enumerate(file_handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                data = json.loads(line)
                kind = data.pop("record", None)
                if kind == SUMMARY_RECORD:
                    parsed.summary = RunSummary.model_validate(data)
                elif kind == HYBRID_RECORD:
                    parsed.hybrid = HybridSummary.model_validate(data)
                else:
                    parsed.records.append(LevelStats.model_validate(data))
            except (json.JSONDecodeError, AttributeError, TypeError, PydanticValidationError) as e:
                raise FormatError(
                    f"{path}:{number}: not a stats record: {e}",
                    details={"line": number},
                )
    return parsed
