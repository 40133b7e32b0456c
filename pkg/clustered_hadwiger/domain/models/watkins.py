"""
Tightness Construction Models

The cyclic chain of cliques C_n · K_p with an apex attached to one vertex per
copy, and the report produced when its claimed properties are re-checked.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Mapping, Tuple

from .graph import Graph


@dataclass(frozen=True)
class WatkinsInstance:
    """
    Copy H_i occupies the identities i*p .. i*p + p - 1 and its attachment
    w_i is the first of them; the apex is n*p.
    """

    k: int
    n: int
    p: int
    graph: Graph
    apex: int
    attachments: Tuple[int, ...]
    blocks: Tuple[FrozenSet[int], ...]

    def block(self, i: int) -> FrozenSet[int]:
        """H_i with the index taken mod n."""
        return self.blocks[i % self.n]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "n": self.n,
            "p": self.p,
            "apex": self.apex,
            "attachments": list(self.attachments),
            "blocks": [sorted(b) for b in self.blocks],
            "order": self.graph.order,
            "size": self.graph.size,
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "ok": self.ok, "detail": dict(self.detail)}


@dataclass(frozen=True)
class TightnessReport:
    k: int
    n: int
    checks: Tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    def failed(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.ok]

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "k": self.k,
            "n": self.n,
            "checks": [check.to_dict() for check in self.checks],
        }
