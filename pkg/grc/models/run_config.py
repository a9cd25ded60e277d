"""
Engine run configuration models
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class HybridConfig(BaseModel):
    """Configuration of a hybrid recompression/text run"""

    t: Optional[int] = Field(3, ge=1, description="Shrink factor; None runs pure recompression")
    phase1: Literal["scan", "fast"] = Field("scan", description="Recompression engine of phase 1")
    phase2: Literal["fast", "naive"] = Field("fast", description="Text engine of phase 2")
    stats_path: Optional[str] = Field(None, description="Where to write the stats records")
    debug_verify: Optional[bool] = Field(None, description="Full per-level re-verification in phase 1; None uses the settings")
