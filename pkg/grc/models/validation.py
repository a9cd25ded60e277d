"""
Validation report model
"""

from typing import List

from pydantic import BaseModel, Field


class ValidationReport(BaseModel):
    """Outcome of a structural check on an input grammar"""

    is_valid: bool = Field(..., description="True when no violation was found")
    errors: List[str] = Field(default_factory=list, description="Violations, each naming the offending rule")
    warnings: List[str] = Field(default_factory=list, description="Non-fatal observations")
    expanded_length: int = Field(default=0, description="Expansion length N when computable")
