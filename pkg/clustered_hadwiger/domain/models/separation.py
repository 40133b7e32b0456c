"""
Separation Domain Model

A separation {A, B} covers the vertex set with no edge between the fragments
A - B and B - A. Relative to a vertex set Z it is Z-bad when one fragment lies
inside Z, and Z-good otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable

from .graph import Graph


class Classification(str, Enum):
    GOOD = "good"
    BAD = "bad"


@dataclass(frozen=True)
class Separation:
    """Ordered pair (a, b) of vertex sets over a fixed host graph."""

    a: FrozenSet[int]
    b: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "a", frozenset(self.a))
        object.__setattr__(self, "b", frozenset(self.b))

    @property
    def separator(self) -> FrozenSet[int]:
        return self.a & self.b

    @property
    def order(self) -> int:
        return len(self.separator)

    @property
    def fragment_a(self) -> FrozenSet[int]:
        return self.a - self.b

    @property
    def fragment_b(self) -> FrozenSet[int]:
        return self.b - self.a

    def swapped(self) -> "Separation":
        return Separation(self.b, self.a)

    def problems(self, host: Graph) -> Dict[str, Any]:
        """Return the first violated invariant with its witness, or an empty dict."""
        if not (self.a | self.b) <= host.vertices:
            return {"reason": "sides contain unknown vertices",
                    "vertices": sorted((self.a | self.b) - host.vertices)}
        if self.a | self.b != host.vertices:
            return {"reason": "sides do not cover the vertex set",
                    "vertices": sorted(host.vertices - self.a - self.b)}
        if not self.fragment_a or not self.fragment_b:
            return {"reason": "empty fragment"}
        for u, v in sorted(host.edges):
            crossing = (u in self.fragment_a and v in self.fragment_b) or (
                v in self.fragment_a and u in self.fragment_b
            )
            if crossing:
                return {"reason": "edge between fragments", "edge": [u, v]}
        return {}

    def is_bad_for(self, z: Iterable[int]) -> bool:
        zs = frozenset(z)
        return self.fragment_a <= zs or self.fragment_b <= zs

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "a": sorted(self.a),
            "b": sorted(self.b),
            "separator": sorted(self.separator),
        }


@dataclass(frozen=True)
class GoodnessVerdict:
    """Whether a separation survives deletion of Z on both sides."""

    separation: Separation
    good_for: FrozenSet[int]
    classification: Classification

    @property
    def is_good(self) -> bool:
        return self.classification is Classification.GOOD

    def to_dict(self) -> Dict[str, Any]:
        return {
            "separation": self.separation.to_dict(),
            "z": sorted(self.good_for),
            "classification": self.classification.value,
        }
