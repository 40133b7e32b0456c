"""
Result Documents

JSON documents written to stdout by every command, and read back by `verify`.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ...domain.errors import DocumentError

SCHEMA_VERSION = 1

OUTCOME_KINDS = ("coloring", "witness", "plan", "verdict", "instance", "embedding", "separation")


class Check(BaseModel):
    name: str
    ok: bool
    detail: Dict[str, Any] = Field(default_factory=dict)


class Verification(BaseModel):
    """Post-hoc verification embedded in the document that it certifies."""

    ok: bool
    checks: List[Check] = Field(default_factory=list)

    @classmethod
    def from_checks(cls, checks: List[Check]) -> "Verification":
        return cls(ok=all(c.ok for c in checks), checks=checks)


class ResultDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: int = SCHEMA_VERSION
    command: str
    input_digest: str = ""
    parameters: Dict[str, Any] = Field(default_factory=dict)
    outcome: str
    payload: Dict[str, Any] = Field(default_factory=dict)
    verification: Verification
    names: Dict[str, int] = Field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), indent=2, sort_keys=True, default=str)

    @classmethod
    def load(cls, file_path: Union[str, Path]) -> "ResultDocument":
        """
        Read a document written by an earlier run.

        Raises:
            DocumentError: unreadable JSON or a field that fails validation
        """
        try:
            data = json.loads(Path(file_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise DocumentError(f"cannot read result document: {exc}", {"path": str(file_path)}) from exc
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            raise DocumentError(
                "malformed result document",
                {"path": str(file_path), "errors": [e["msg"] for e in exc.errors()]},
            ) from exc


class ErrorDocument(BaseModel):
    command: str
    error: str
    message: str
    witness: Dict[str, Any] = Field(default_factory=dict)
    exit_code: int

    def to_json(self) -> str:
        return json.dumps(self.model_dump(), indent=2, sort_keys=True, default=str)
