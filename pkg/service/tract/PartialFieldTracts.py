"""
域、部分域与初始 tract
域与部分域的零和就是环中精确求和等于 0
"""
from fractions import Fraction
from typing import Any, List, Optional, Tuple

import numpy as np

from dao.TractType import TractType
from service.tract.FormalSum import FormalSum
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement, ZERO
from util.TractException import InvalidElementError


class PrimeFieldTract(Tract):
    hyperfield = True

    def __init__(self, p: int):
        super().__init__(f"field:gf{p}")
        self.p = p

    @property
    def one_payload(self) -> int:
        return 1

    @property
    def epsilon_payload(self) -> int:
        return self.p - 1

    def _mul_payload(self, a: int, b: int) -> int:
        return a * b % self.p

    def _inverse_payload(self, a: int) -> int:
        return pow(a, self.p - 2, self.p)

    def normalize_payload(self, payload: Any) -> int:
        if isinstance(payload, bool) or not isinstance(payload, int):
            if isinstance(payload, Fraction) and payload.denominator == 1:
                payload = payload.numerator
            else:
                raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}")
        residue = payload % self.p
        if residue == 0:
            raise InvalidElementError(f"{self.tract_id}: 单位不能为 0")
        return residue

    def units(self) -> Tuple[int, ...]:
        return tuple(range(1, self.p))

    def sample_unit(self, rng: np.random.Generator) -> int:
        return int(rng.integers(1, self.p))

    def _null(self, s: FormalSum) -> bool:
        return sum(p * m for p, m in s.terms) % self.p == 0

    def finite_hypersum(self, x: TractElement, y: TractElement) -> List[TractElement]:
        total = ((x.value or 0) + (y.value or 0)) % self.p
        return [ZERO if total == 0 else TractElement(total)]

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        terms = [self.sample_unit(rng) for _ in range(int(rng.integers(1, max(2, max_terms))))]
        closing = -sum(terms) % self.p
        if closing:
            terms.append(closing)
        return FormalSum.of(terms)


class RationalTract(Tract):
    hyperfield = True

    def __init__(self):
        super().__init__(TractType.RATIONAL.value)

    @property
    def one_payload(self) -> Fraction:
        return Fraction(1)

    @property
    def epsilon_payload(self) -> Fraction:
        return Fraction(-1)

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
        if value == 0:
            raise InvalidElementError(f"{self.tract_id}: 单位不能为 0")
        return value

    def sample_unit(self, rng: np.random.Generator) -> Fraction:
        numerator = int(rng.integers(1, 7)) * (1 if rng.integers(0, 2) == 0 else -1)
        return Fraction(numerator, int(rng.integers(1, 5)))

    def _null(self, s: FormalSum) -> bool:
        return sum(p * m for p, m in s.terms) == 0

    def finite_hypersum(self, x: TractElement, y: TractElement) -> List[TractElement]:
        total = (x.value or 0) + (y.value or 0)
        return [ZERO if total == 0 else TractElement(Fraction(total))]

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        terms = [self.sample_unit(rng) for _ in range(int(rng.integers(1, max(2, max_terms))))]
        closing = -sum(terms)
        if closing:
            terms.append(closing)
        return FormalSum.of(terms)


class RegularTract(Tract):
    """正则部分域 𝕌₀ = ({0, ±1}, ℤ)"""

    def __init__(self):
        super().__init__(TractType.REGULAR.value)

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

    def _null(self, s: FormalSum) -> bool:
        return sum(p * m for p, m in s.terms) == 0


class DyadicTract(Tract):
    """
    二进部分域 𝔻：群为 ±2^k，环为 ℤ[1/2]
    载荷用 Fraction 表示
    """

    def __init__(self):
        super().__init__(TractType.DYADIC.value)

    @property
    def one_payload(self) -> Fraction:
        return Fraction(1)

    @property
    def epsilon_payload(self) -> Fraction:
        return Fraction(-1)

    def _mul_payload(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def _inverse_payload(self, a: Fraction) -> Fraction:
        return 1 / a

    @staticmethod
    def is_unit_value(value: Fraction) -> bool:
        if value == 0:
            return False
        numerator, denominator = abs(value.numerator), value.denominator
        if numerator != 1 and denominator != 1:
            return False
        return numerator & (numerator - 1) == 0 and denominator & (denominator - 1) == 0

    def normalize_payload(self, payload: Any) -> Fraction:
        if isinstance(payload, (bool, float)):
            raise InvalidElementError(f"{self.tract_id}: 只接受精确有理数 {payload!r}")
        try:
            value = Fraction(payload)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidElementError(f"{self.tract_id}: 非法元素 {payload!r}") from e
        if not self.is_unit_value(value):
            raise InvalidElementError(f"{self.tract_id}: 单位必须形如 ±2^k {payload!r}")
        return value

    def sample_unit(self, rng: np.random.Generator) -> Fraction:
        sign = 1 if rng.integers(0, 2) == 0 else -1
        return sign * Fraction(2) ** int(rng.integers(-3, 4))

    def _null(self, s: FormalSum) -> bool:
        return sum(p * m for p, m in s.terms) == 0

    def finite_hypersum(self, x: TractElement, y: TractElement) -> List[TractElement]:
        total = Fraction((x.value or 0) + (y.value or 0))
        if total == 0:
            return [ZERO]
        # 和不在 G ∪ {0} 中时超和为空
        return [TractElement(total)] if self.is_unit_value(total) else []

    def sample_null_sum(self, rng: np.random.Generator, max_terms: int) -> FormalSum:
        g = self.sample_unit(rng)
        if max_terms >= 3 and rng.integers(0, 2) == 1:
            return FormalSum.of([g, g, -2 * g])
        return FormalSum.of([g, -g])


class InitialTract(Tract):
    """初始 tract 𝕀：群 {±1}，零和集只有空和与 1 + (-1)"""

    def __init__(self):
        super().__init__(TractType.INITIAL.value)

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

    def _null(self, s: FormalSum) -> bool:
        return s.is_empty() or s.terms == ((-1, 1), (1, 1))
