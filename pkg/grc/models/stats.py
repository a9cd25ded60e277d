"""
Run statistics models.

Field names follow the line-delimited stats records; Python attributes are
snake_case and the serialized keys are the camelCase aliases.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class LevelStats(BaseModel):
    """One stats record: the state at level h and the bigram chosen there"""

    model_config = ConfigDict(populate_by_name=True)

    level: int = Field(..., ge=0, description="Level index h")
    bigram_left: Optional[int] = Field(None, alias="bigramLeft", description="Left symbol of the chosen bigram")
    bigram_right: Optional[int] = Field(None, alias="bigramRight", description="Right symbol of the chosen bigram")
    freq: int = Field(0, ge=0, description="Non-overlapping frequency f_h (0 on the terminal record)")
    grammar_size: int = Field(..., ge=0, alias="grammarSize", description="|G_h|, or |T_h| for text engines")
    live_vars: int = Field(..., ge=0, alias="liveVars", description="n_h, number of live variables")
    text_len: int = Field(..., ge=0, alias="textLen", description="|T_h| without sentinels")
    cumulative_r: int = Field(..., ge=0, alias="cumulativeR", description="Replacements executed before this level")
    phase: str = Field(..., description="Engine that produced the record")
    queue_mutations: int = Field(0, ge=0, alias="queueMutations", description="Queue updates since the previous record")
    junction_mutations: int = Field(0, ge=0, alias="junctionMutations", description="Queue updates from junction refresh")

    @property
    def terminal(self) -> bool:
        return self.bigram_left is None

    def to_record(self) -> dict:
        return self.model_dump(by_alias=True)


class RunSummary(BaseModel):
    """Aggregates over all records of a run"""

    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., ge=0, description="Variables of the input SLP (0 for text input)")
    m: int = Field(..., ge=0, description="Introduced pairs")
    max_grammar_size: int = Field(..., ge=0, alias="Max", description="max_h |G_h|")
    sum_grammar_size: int = Field(..., ge=0, alias="sumGrammarSize", description="Σ_h |G_h|")
    sum_live_vars: int = Field(..., ge=0, alias="sumLiveVars", description="Σ_h n_h")
    replacements: int = Field(..., ge=0, alias="R", description="Total replacements")

    def to_record(self) -> dict:
        record = {"record": "summary"}
        record.update(self.model_dump(by_alias=True))
        return record


class HybridSummary(BaseModel):
    """Switch-over summary of one hybrid run"""

    model_config = ConfigDict(populate_by_name=True)

    t: Optional[int] = Field(None, description="Shrink factor; None never switches")
    switch_level: Optional[int] = Field(None, alias="switchLevel", description="Level at which T_h was materialized")
    switch_len: Optional[int] = Field(None, alias="switchLen", description="|T_h| at materialization")
    switch_grammar_size: Optional[int] = Field(
        None, alias="switchGrammarSize", description="|G_h| at the switch level, held while T_h is expanded"
    )
    peak_metric: int = Field(
        ...,
        ge=0,
        alias="peakMetric",
        description=(
            "Peak working size: max over phase-1 levels of |G_h|, and switchGrammarSize + switchLen "
            "at materialization when both coexist (a sum, not a max)"
        ),
    )
    total_replacements: int = Field(..., ge=0, alias="totalReplacements")

    def to_record(self) -> dict:
        record = {"record": "hybrid"}
        record.update(self.model_dump(by_alias=True))
        return record


class RunStats(BaseModel):
    """Per-level records of one run plus its replacement total"""

    n: int = Field(0, ge=0, description="Variables of the input SLP")
    records: List[LevelStats] = Field(default_factory=list)
    replacements: int = Field(0, ge=0, description="Total replacements R")
    hybrid: Optional[HybridSummary] = Field(None, description="Set by hybrid runs")

    def summary(self) -> RunSummary:
        return summarize_records(self.records, n=self.n, replacements=self.replacements)


def summarize_records(
    records: List[LevelStats], n: int = 0, replacements: Optional[int] = None
) -> RunSummary:
    """
    Aggregate per-level records.

    Args:
        records: Stats records in level order, terminal record last
        n: Input SLP variable count
        replacements: Total R; defaults to the terminal record's cumulative R

    Returns:
        RunSummary
    """
    if replacements is None:
        replacements = records[-1].cumulative_r if records else 0
    return RunSummary(
        n=n,
        m=sum(1 for record in records if not record.terminal),
        max_grammar_size=max((record.grammar_size for record in records), default=0),
        sum_grammar_size=sum(record.grammar_size for record in records),
        sum_live_vars=sum(record.live_vars for record in records),
        replacements=replacements,
    )

