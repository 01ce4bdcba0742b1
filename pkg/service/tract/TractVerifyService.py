"""
tract 公理、双分配律与同态的校验
有限 tract 穷举，无限 tract 按 CheckBudget 以固定种子抽样，抽样结论记为 sampled-pass
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from dao.TractType import TractType
from dao.jsonfile.ElementCodec import ElementCodec
from service.common.AxiomReport import AxiomReport
from service.tract.FormalSum import FormalSum
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from service.tract.TractHom import TractHom
from service.tract.TractService import TractService
from util.ConfigUtil import ConfigUtil
from util.LogUtil import LogUtil

logger = LogUtil.get_logger(__name__)

# 公理校验中有限 tract 穷举的形式和项数上限
AXIOM_MAX_TERMS = 4

# 已知的双分配律反例 (x, y, z, t, w)
_STORED_DD_WITNESSES: Dict[str, Tuple] = {
    TractType.PHASE.value: (0.0, math.pi, 0.0, math.pi / 2, math.pi / 2),
    TractType.TRIANGLE.value: (Fraction(2), Fraction(1), Fraction(2), Fraction(1), None),
}


@dataclass(frozen=True)
class CheckBudget:
    """穷举项数上限、抽样次数、随机种子"""
    max_terms: int = 5
    samples: int = 10000
    seed: int = 0xB0B1

    @staticmethod
    def from_config(config_path: Optional[str] = None, seed: Optional[int] = None) -> "CheckBudget":
        config = ConfigUtil.load_check_budget_from_config(config_path)
        return CheckBudget(
            max_terms=config["max_terms"],
            samples=config["samples"],
            seed=config["seed"] if seed is None else seed,
        )

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _multisets(units, max_terms: int) -> Iterator[FormalSum]:
    for k in range(max_terms + 1):
        for combo in combinations_with_replacement(units, k):
            yield FormalSum.of(combo)


class TractVerifyService:

    def __init__(self, budget: Optional[CheckBudget] = None):
        self.budget = budget or CheckBudget.from_config()
        self.tract_service = TractService()

    # ---------- 公理 ----------

    def verify_tract_axioms(self, tract: Tract) -> AxiomReport:
        """
        校验 (T0)、(T1)、(T2) 的存在唯一性、(T3) 不变性、ε² = 1、G ∩ N_G = ∅、τ² = id，
        超域诱导的 tract 另校验可逆性 (H2)

        Returns:
            AxiomReport，失败项按公理给出第一个见证
        """
        logger.info("校验 tract 公理: %s", tract.tract_id)
        report = AxiomReport(mode="tract-axioms")
        fmt = lambda p: ElementCodec.format_payload(tract.tract_id, p)
        one, eps = tract.one_payload, tract.epsilon_payload

        report.checked += 4
        if not tract.is_null(FormalSum()):
            report.add_failure("T0", {})
        if tract.is_null(FormalSum.of([one])):
            report.add_failure("T1", {"sum": [fmt(one)]})
        if not tract.payload_close(tract._mul_payload(eps, eps), one):
            report.add_failure("epsilon-square", {"epsilon": fmt(eps)})
        if not tract.is_null(FormalSum.of([one, eps])):
            report.add_failure("T2", {"g": fmt(eps), "reason": "1 + ε 不是零和"})

        if tract.is_finite:
            self._verify_finite(tract, report, fmt)
        else:
            self._verify_sampled(tract, report, fmt)
        logger.info("tract %s 公理校验结束: %s", tract.tract_id, report.verdict.value)
        return report

    def _verify_finite(self, tract: Tract, report: AxiomReport, fmt) -> None:
        units = tract.units()
        one, eps = tract.one_payload, tract.epsilon_payload
        for g in units:
            report.checked += 1
            if g != eps and tract.is_null(FormalSum.of([one, g])):
                report.add_failure("T2", {"g": fmt(g), "reason": "1 + g 为零和但 g ≠ ε"})
                break
        for g in units:
            report.checked += 1
            if tract.is_null(FormalSum.of([g])):
                report.add_failure("G-disjoint-N", {"g": fmt(g)})
                break
        for g in units:
            report.checked += 1
            if tract._involution_payload(tract._involution_payload(g)) != g:
                report.add_failure("involution", {"g": fmt(g)})
                break
        t3_done = False
        for s in _multisets(units, AXIOM_MAX_TERMS):
            null = tract.is_null(s)
            for g in units:
                report.checked += 1
                if tract.is_null(tract.scale_sum(s, TractElement(g))) != null:
                    report.add_failure("T3", {"sum": [fmt(p) for p in s.payloads()], "g": fmt(g)})
                    t3_done = True
                    break
            if t3_done:
                break
        if tract.hyperfield:
            for x, y, z in product(units, repeat=3):
                report.checked += 1
                if not self._reversible(tract, x, y, z):
                    report.add_failure("H2", {"x": fmt(x), "y": fmt(y), "z": fmt(z)})
                    break

    def _verify_sampled(self, tract: Tract, report: AxiomReport, fmt) -> None:
        report.sampled = True
        rng = self.budget.rng()
        failed = set()
        for _ in range(self.budget.samples):
            g = tract.sample_unit(rng)
            if rng.integers(0, 2) == 0:
                s = tract.sample_null_sum(rng, AXIOM_MAX_TERMS)
            else:
                count = int(rng.integers(1, AXIOM_MAX_TERMS + 1))
                s = FormalSum.of([tract.sample_unit(rng) for _ in range(count)])
            report.checked += 1
            if "T3" not in failed and tract.is_null(s) != tract.is_null(tract.scale_sum(s, TractElement(g))):
                failed.add("T3")
                report.add_failure("T3", {"sum": [fmt(p) for p in s.payloads()], "g": fmt(g)})
            if "G-disjoint-N" not in failed and tract.is_null(FormalSum.of([g])):
                failed.add("G-disjoint-N")
                report.add_failure("G-disjoint-N", {"g": fmt(g)})
            if "involution" not in failed and not tract.payload_close(
                    tract._involution_payload(tract._involution_payload(g)), g):
                failed.add("involution")
                report.add_failure("involution", {"g": fmt(g)})
            if tract.hyperfield and "H2" not in failed:
                x, y = tract.sample_unit(rng), tract.sample_unit(rng)
                if not self._reversible(tract, x, y, g):
                    failed.add("H2")
                    report.add_failure("H2", {"x": fmt(x), "y": fmt(y), "z": fmt(g)})

    @staticmethod
    def _reversible(tract: Tract, x, y, z) -> bool:
        # z ∈ x ⊞ y ⟺ x ∈ z ⊞ (-y)
        minus_y = tract._mul_payload(tract.epsilon_payload, y)
        left = tract.contains(FormalSum.of([x, y]), TractElement(z))
        right = tract.contains(FormalSum.of([z, minus_y]), TractElement(x))
        return left == right

    # ---------- 双分配律 ----------

    @staticmethod
    def _in_product(tract: Tract, a: TractElement, pair: Tuple[TractElement, TractElement],
                    w: TractElement) -> bool:
        # w ∈ a·(z ⊞ t)
        if a.is_zero:
            return w.is_zero
        return tract.contains(FormalSum.of_elements(pair), tract.div(w, a) if not w.is_zero else w)

    def _lhs_contains(self, tract: Tract, x, y, z, t, w: TractElement) -> Optional[bool]:
        """w ∈ (x ⊞ y)(z ⊞ t)，两个因子都无法有限列举且 w ≠ 0 时返回 None"""
        first = tract.finite_hypersum(x, y)
        if first is not None:
            return any(self._in_product(tract, a, (z, t), w) for a in first)
        second = tract.finite_hypersum(z, t)
        if second is not None:
            return any(self._in_product(tract, b, (x, y), w) for b in second)
        if w.is_zero:
            return tract.contains(FormalSum.of_elements([x, y]), ZERO) or \
                tract.contains(FormalSum.of_elements([z, t]), ZERO)
        return None

    @staticmethod
    def _rhs_contains(tract: Tract, x, y, z, t, w: TractElement) -> bool:
        terms = [tract.mul(x, z), tract.mul(x, t), tract.mul(y, z), tract.mul(y, t)]
        return tract.contains(FormalSum.of_elements(terms), w)

    def _dd_mismatch(self, tract: Tract, quad, w: TractElement) -> Optional[Dict]:
        lhs = self._lhs_contains(tract, *quad, w)
        if lhs is None:
            return None
        rhs = self._rhs_contains(tract, *quad, w)
        if lhs == rhs:
            return {}
        fmt = lambda e: ElementCodec.format_element(tract.tract_id, e)
        return {
            "x": fmt(quad[0]), "y": fmt(quad[1]), "z": fmt(quad[2]), "t": fmt(quad[3]),
            "w": fmt(w), "in_lhs": lhs, "in_rhs": rhs,
        }

    def is_doubly_distributive(self, tract: Tract) -> AxiomReport:
        """
        (x ⊞ y)(z ⊞ t) = xz ⊞ xt ⊞ yz ⊞ yt
        有限 tract 穷举；无限 tract 先查已知反例，再抽样，见证为区分两边的 w
        """
        logger.info("校验双分配律: %s", tract.tract_id)
        report = AxiomReport(mode="double-distributivity")
        elements = tract.elements()
        if elements is not None:
            for quad in product(elements, repeat=4):
                for w in elements:
                    report.checked += 1
                    witness = self._dd_mismatch(tract, quad, w)
                    if witness:
                        report.add_failure("double-distributivity", witness)
                        return report
            return report

        stored = _STORED_DD_WITNESSES.get(tract.tract_id)
        if stored is not None:
            quad = tuple(tract.element(p) for p in stored[:4])
            report.checked += 1
            witness = self._dd_mismatch(tract, quad, tract.element(stored[4]))
            if witness:
                report.notes["source"] = "stored-witness"
                report.add_failure("double-distributivity", witness)
                return report

        report.sampled = True
        rng = self.budget.rng()
        decided = 0
        for _ in range(self.budget.samples):
            quad = tuple(TractElement(tract.sample_unit(rng)) for _ in range(4))
            x, y, z, t = quad
            products = [tract.mul(x, z), tract.mul(x, t), tract.mul(y, z), tract.mul(y, t)]
            candidates: List[TractElement] = [ZERO, TractElement(tract.sample_unit(rng))]
            candidates += products + [tract.negate(p) for p in products]
            for w in candidates:
                witness = self._dd_mismatch(tract, quad, w)
                if witness is None:
                    continue
                decided += 1
                if witness:
                    report.add_failure("double-distributivity", witness)
                    return report
        report.checked += decided
        if decided == 0:
            report.inconclusive = True
        logger.info("双分配律抽样结束: %s, 可判定样本 %d", tract.tract_id, decided)
        return report

    # ---------- 同态 ----------

    def verify_hom(self, hom: TractHom) -> AxiomReport:
        """
        校验 f(1) = 1、乘性与零和保持
        有限源 tract 穷举不超过 max_terms 项的形式和，无限源按预算抽样
        """
        logger.info("校验同态: %s", hom.hom_id)
        source, target = hom.source, hom.target
        report = AxiomReport(mode="hom")
        fmt_source = lambda p: ElementCodec.format_payload(source.tract_id, p)

        report.checked += 1
        if not target.is_close(hom(source.one), target.one):
            report.add_failure("unit", {"image_of_one": ElementCodec.format_element(target.tract_id, hom(source.one))})

        units = source.units()
        if units is not None:
            pairs = product(units, repeat=2)
            sums = (s for s in _multisets(units, self.budget.max_terms) if source.is_null(s))
        else:
            report.sampled = True
            rng = self.budget.rng()
            pairs = [(source.sample_unit(rng), source.sample_unit(rng)) for _ in range(self.budget.samples)]
            sums = (source.scale_sum(source.sample_null_sum(rng, self.budget.max_terms),
                                     TractElement(source.sample_unit(rng)))
                    for _ in range(self.budget.samples))

        for a, b in pairs:
            report.checked += 1
            fa, fb = hom(TractElement(a)), hom(TractElement(b))
            fab = hom(TractElement(source._mul_payload(a, b)))
            if fa.is_zero or fb.is_zero or not target.is_close(fab, target.mul(fa, fb)):
                report.add_failure("multiplicative", {"a": fmt_source(a), "b": fmt_source(b)})
                break

        for s in sums:
            report.checked += 1
            image = self.tract_service.apply_hom(hom, s)
            if not target.is_null(image):
                report.add_failure("null-preserving", {
                    "sum": [fmt_source(p) for p in s.payloads()],
                    "image": ElementCodec.format_sum(target.tract_id, image),
                })
                break
        logger.info("同态 %s 校验结束: %s", hom.hom_id, report.verdict.value)
        return report
