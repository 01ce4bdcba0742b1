"""
由超域诱导的 tract：Krasner 𝕂、符号 𝕊、弱符号 𝕎、热带 𝕋、三角 𝕍、相位 ℙ
零和判定都按超和含零的描述直接给出
"""
import math
from fractions import Fraction
from typing import Any, List, Optional, Tuple

import numpy as np

from dao.TractType import TractType
from service.tract.FormalSum import FormalSum
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from util.Constant import Constant
from util.TractException import InvalidElementError

TWO_PI = 2.0 * math.pi


class _SignGroupTract(Tract):
    """群为 {1, -1} 的 tract 的公共部分"""

    @property
    def one_payload(self) -> int:
        return 1

    @property
    def epsilon_payload(self) -> int:
        return -1

    def _mul_payload(self, a: int, b: int) -> int:
        return a * b

    def _inverse_payload(self, a: int) -> int:
        return a

    def normalize_payload(self, payload: Any) -> int:
        if isinstance(payload, bool) or payload not in (1, -1):
            raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}")
        return int(payload)

    def units(self) -> Tuple[int, ...]:
        return (1, -1)

    def sample_unit(self, rng: np.random.Generator) -> int:
        return 1 if rng.integers(0, 2) == 0 else -1

    @staticmethod
    def _sign_counts(s: FormalSum) -> Tuple[int, int]:
        counts = dict(s.terms)
        return counts.get(1, 0), counts.get(-1, 0)


class KrasnerTract(Tract):
    hyperfield = True

    def __init__(self):
        super().__init__(TractType.KRASNER.value)

    @property
    def one_payload(self) -> int:
        return 1

    @property
    def epsilon_payload(self) -> int:
        return 1

    def _mul_payload(self, a: int, b: int) -> int:
        return 1

    def _inverse_payload(self, a: int) -> int:
        return 1

    def normalize_payload(self, payload: Any) -> int:
        if isinstance(payload, bool) or payload != 1:
            raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}")
        return 1

    def units(self) -> Tuple[int, ...]:
        return (1,)

    def sample_unit(self, rng: np.random.Generator) -> int:
        return 1

    def _null(self, s: FormalSum) -> bool:
        # 1 ⊞ 1 = {0, 1}，只有恰好一项时不含零
        return s.count() != 1


class SignTract(_SignGroupTract):
    hyperfield = True

    def __init__(self):
        super().__init__(TractType.SIGN.value)

    def _null(self, s: FormalSum) -> bool:
        positive, negative = self._sign_counts(s)
        return (positive == 0 and negative == 0) or (positive > 0 and negative > 0)


class WeakSignTract(_SignGroupTract):
    hyperfield = True

    def __init__(self):
        super().__init__(TractType.WEAK_SIGN.value)

    def _null(self, s: FormalSum) -> bool:
        positive, negative = self._sign_counts(s)
        if positive == 0 and negative == 0:
            return True
        if positive > 0 and negative > 0:
            return True
        return max(positive, negative) >= 3


class _PositiveRationalTract(Tract):
    """群为正有理数乘法群的 tract，𝕋 与 𝕍 共用"""
    hyperfield = True

    @property
    def one_payload(self) -> Fraction:
        return Fraction(1)

    @property
    def epsilon_payload(self) -> Fraction:
        return Fraction(1)

    def _mul_payload(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _inverse_payload(self, a: Fraction) -> Fraction:
        return 1 / a

    def normalize_payload(self, payload: Any) -> Fraction:
        if isinstance(payload, (bool, float)):
            raise InvalidElementError(f"{self.tract_id}: 只接受精确有理数 {payload!r}")
        try:
            value = Fraction(payload)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}") from e
        if value <= 0:
            raise InvalidElementError(f"{self.tract_id}: 单位必须为正 {payload!r}")
        return value

    def sample_unit(self, rng: np.random.Generator) -> Fraction:
        return Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 4)))


class TropicalTract(_PositiveRationalTract):
    """
    乘法形式的热带超域：a ⊞ b = max(a, b)（a ≠ b），a ⊞ a = [0, a]
    零和当且仅当最大值至少出现两次
    """

    def __init__(self):
        super().__init__(TractType.TROPICAL.value)

    def _null(self, s: FormalSum) -> bool:
        if s.is_empty():
            return True
        # terms 按载荷升序
        return s.terms[-1][1] >= 2

    def finite_hypersum(self, x: TractElement, y: TractElement) -> Optional[List[TractElement]]:
        if x.is_zero:
            return [y]
        if y.is_zero:
            return [x]
        if x.value != y.value:
            return [TractElement(max(x.value, y.value))]
        return None

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        top = self.sample_unit(rng)
        extra = int(rng.integers(0, max(1, max_terms - 1)))
        smaller = [top * Fraction(1, int(rng.integers(2, 5))) for _ in range(extra)]
        return FormalSum.of([top, top] + smaller)


class TriangleTract(_PositiveRationalTract):
    """
    三角超域：a ⊞ b = [|a-b|, a+b]
    迭代超和含零当且仅当 2·max ≤ 总和
    """

    def __init__(self):
        super().__init__(TractType.TRIANGLE.value)

    def _null(self, s: FormalSum) -> bool:
        if s.is_empty():
            return True
        total = sum(p * m for p, m in s.terms)
        return 2 * s.terms[-1][0] <= total

    def finite_hypersum(self, x: TractElement, y: TractElement) -> Optional[List[TractElement]]:
        if x.is_zero:
            return [y]
        if y.is_zero:
            return [x]
        return None


class PhaseTract(Tract):
    """
    相位超域，单位为 [0, 2π) 中的角度，对合为共轭
    迭代超和含零当且仅当存在严格正系数的零组合，用几何方法判定：
    去重后的方向之间最大圆周间隙小于 π，或者恰好是两个相反方向
    弱模式另用 check_tol：原点到凸包的距离在容差内即视为零和
    """
    hyperfield = True
    numeric = True

    def __init__(self, tol: float = Constant.TOL, check_tol: float = Constant.CHECK_TOL):
        super().__init__(TractType.PHASE.value)
        self.tol = tol
        self.check_tol = max(check_tol, tol)

    @property
    def one_payload(self) -> float:
        return 0.0

    @property
    def epsilon_payload(self) -> float:
        return math.pi

    def _normalize(self, angle: float) -> float:
        angle = math.fmod(angle, TWO_PI)
        if angle < 0:
            angle += TWO_PI
        if angle <= self.tol or TWO_PI - angle <= self.tol:
            return 0.0
        return angle

    def _mul_payload(self, a: float, b: float) -> float:
        return self._normalize(a + b)

    def _inverse_payload(self, a: float) -> float:
        return self._normalize(-a)

    def _involution_payload(self, a: float) -> float:
        return self._normalize(-a)

    def normalize_payload(self, payload: Any) -> float:
        if isinstance(payload, bool):
            raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}")
        try:
            angle = float(payload)
        except (TypeError, ValueError) as e:
            raise InvalidElementError(f"{self.tract_id}: 非法角度 {payload!r}") from e
        if not math.isfinite(angle):
            raise InvalidElementError(f"{self.tract_id}: 角度必须有限 {payload!r}")
        return self._normalize(angle)

    def payload_close(self, a: float, b: float) -> bool:
        diff = abs(a - b) % TWO_PI
        return min(diff, TWO_PI - diff) <= self.tol

    def sample_unit(self, rng: np.random.Generator) -> float:
        return self._normalize(int(rng.integers(0, 8)) * math.pi / 4)

    def _directions(self, s: FormalSum) -> List[float]:
        directions: List[float] = []
        for angle in sorted(p for p, _ in s.terms):
            if not directions or not self.payload_close(directions[-1], angle):
                directions.append(angle)
        if len(directions) > 1 and self.payload_close(directions[0], directions[-1]):
            directions.pop()
        return directions

    @staticmethod
    def _max_gap(directions: List[float]) -> float:
        gaps = [b - a for a, b in zip(directions, directions[1:])]
        gaps.append(directions[0] + TWO_PI - directions[-1])
        return max(gaps)

    def _null(self, s: FormalSum) -> bool:
        if s.is_empty():
            return True
        directions = self._directions(s)
        if len(directions) == 1:
            return False
        max_gap = self._max_gap(directions)
        if abs(max_gap - math.pi) <= self.tol:
            return len(directions) == 2
        return max_gap < math.pi

    def is_weakly_null(self, s: FormalSum) -> bool:
        if self._null(s):
            return True
        directions = self._directions(s)
        return len(directions) > 1 and self._max_gap(directions) <= math.pi + self.check_tol

    def null_deviation(self, s: FormalSum) -> float:
        # 最大间隙超出 π 的部分；只有一个方向时原点离凸包最远
        if self._null(s):
            return 0.0
        directions = self._directions(s)
        if len(directions) == 1:
            return math.pi
        return max(self._max_gap(directions) - math.pi, 0.0)

    def finite_hypersum(self, x: TractElement, y: TractElement) -> Optional[List[TractElement]]:
        if x.is_zero:
            return [y]
        if y.is_zero:
            return [x]
        if self.payload_close(x.value, y.value):
            return [x]
        if self.payload_close(x.value, self._mul_payload(self.epsilon_payload, y.value)):
            # x ⊞ (-x) = {0, x, -x}
            return [ZERO, x, y]
        return None

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        g = self.sample_unit(rng)
        if max_terms >= 3 and rng.integers(0, 2) == 1:
            third = TWO_PI / 3
            return FormalSum.of([g, self._normalize(g + third), self._normalize(g + 2 * third)])
        return FormalSum.of([g, self._mul_payload(self.epsilon_payload, g)])
