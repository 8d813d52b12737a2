import hashlib
import json
from pydantic import BaseModel, Field
from typing import Any, List, Optional


class CommandResult(BaseModel):
    """Serialized outcome of one CLI command"""
    command: str
    inputs_digest: str
    result: Any
    breakdown: Optional[List[Any]] = None
    seed: Optional[int] = None
    notes: List[str] = Field(default_factory=list)

    @staticmethod
    def digest(inputs: Any) -> str:
        """Stable SHA-256 prefix of the command inputs"""
        payload = json.dumps(inputs, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_json(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), sort_keys=True, default=str)
