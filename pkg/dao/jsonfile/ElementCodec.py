"""
元素字面量编解码
零为 "0"；有限单位用名字（"1"、"-1"）；有理数 "p/q"；二进单位 "±2^k"；相位 "angle:<float>"
"""
import math
import re
from fractions import Fraction
from typing import Any, List

from dao.TractType import TractType
from util.TractException import InvalidElementError

_DYADIC_PATTERN = re.compile(r"^(-?)2\^(-?\d+)$")
_RATIONAL_TRACTS = (TractType.TROPICAL.value, TractType.TRIANGLE.value, TractType.RATIONAL.value)
_SIGN_TRACTS = (TractType.KRASNER.value, TractType.SIGN.value, TractType.WEAK_SIGN.value,
                TractType.REGULAR.value, TractType.INITIAL.value)


class ElementCodec:

    def __init__(self):
        pass

    @staticmethod
    def parse_payload(tract_id: str, literal: Any) -> Any:
        """把字面量解析成单位载荷，零返回 None；载荷合法性由 tract 再校验"""
        text = str(literal).strip()
        if text == "0":
            return None
        try:
            if tract_id == TractType.PHASE.value:
                if text.startswith("angle:"):
                    return float(text[len("angle:"):])
                if text in ("1", "-1"):
                    return 0.0 if text == "1" else math.pi
                raise InvalidElementError(f"{tract_id}: 相位元素须写成 angle:<float>，收到 {text}")
            if tract_id == TractType.DYADIC.value:
                if text in ("1", "-1"):
                    return Fraction(int(text))
                match = _DYADIC_PATTERN.match(text)
                if not match:
                    raise InvalidElementError(f"{tract_id}: 二进单位须写成 ±2^k，收到 {text}")
                sign = -1 if match.group(1) else 1
                return sign * Fraction(2) ** int(match.group(2))
            if tract_id in _RATIONAL_TRACTS:
                return Fraction(text)
            if tract_id in _SIGN_TRACTS or tract_id.startswith("field:gf"):
                return int(text)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidElementError(f"{tract_id}: 无法解析元素 {text}") from e
        raise InvalidElementError(f"未知的 tract: {tract_id}")

    @staticmethod
    def format_payload(tract_id: str, payload: Any) -> str:
        if payload is None:
            return "0"
        if tract_id == TractType.PHASE.value:
            return f"angle:{float(payload)!r}"
        if tract_id == TractType.DYADIC.value:
            value = Fraction(payload)
            sign = "-" if value < 0 else ""
            exponent = int(math.log2(abs(value.numerator))) - int(math.log2(value.denominator))
            return f"{sign}2^{exponent}"
        return str(payload)

    @staticmethod
    def format_element(tract_id: str, element) -> str:
        return ElementCodec.format_payload(tract_id, element.value)

    @staticmethod
    def format_sum(tract_id: str, s) -> List[str]:
        """形式和按重数展开成字面量列表"""
        return [ElementCodec.format_payload(tract_id, p) for p in s.payloads()]

    @staticmethod
    def format_vector(tract_id: str, vector) -> List[str]:
        return [ElementCodec.format_element(tract_id, x) for x in vector.entries]
