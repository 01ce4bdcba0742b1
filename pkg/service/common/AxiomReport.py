"""
校验报告
verdict 由失败列表和抽样标记推导，保证 pass 当且仅当没有失败项
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dao.VerdictType import VerdictType


@dataclass
class Failure:
    tag: str
    witness: Dict[str, Any]
    offending: Optional[List[str]] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"axiom": self.tag, "witness": self.witness}
        if self.offending is not None:
            result["sum"] = self.offending
        return result


@dataclass
class AxiomReport:
    mode: str
    failures: List[Failure] = field(default_factory=list)
    checked: int = 0
    sampled: bool = False
    inconclusive: bool = False
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> VerdictType:
        if self.failures:
            return VerdictType.FAIL
        if self.inconclusive:
            return VerdictType.INCONCLUSIVE
        if self.sampled:
            return VerdictType.SAMPLED_PASS
        return VerdictType.PASS

    @property
    def passed(self) -> bool:
        return self.verdict in (VerdictType.PASS, VerdictType.SAMPLED_PASS)

    def add_failure(self, tag: str, witness: Dict[str, Any], offending: Optional[List[str]] = None) -> None:
        self.failures.append(Failure(tag, witness, offending))

    def accepts(self, tract: Any, s: Any, weak: bool = False) -> bool:
        """
        按模式判定零和；数值 tract 上把通过判定的和的最大偏差记到 notes
        """
        null = tract.is_weakly_null(s) if weak else tract.is_null(s)
        if null and tract.numeric:
            deviation = tract.null_deviation(s)
            self.notes["max_deviation"] = max(self.notes.get("max_deviation", 0.0), deviation)
        return null

    def failed_tags(self) -> List[str]:
        return [f.tag for f in self.failures]

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.failures.extend(other.failures)
        self.checked += other.checked
        self.sampled = self.sampled or other.sampled
        self.inconclusive = self.inconclusive or other.inconclusive
        self.notes.update(other.notes)
        return self

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "verdict": self.verdict.value,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "notes": self.notes,
        }
