from typing import Union

from service.tract.FormalSum import FormalSum
from service.tract.Tract import Tract
from service.tract.TractElement import TractElement
from service.tract.TractHom import TractHom
from util.TractException import InvalidElementError


class TractService:
    """
    tract 上的基本运算入口，参数先校验再计算
    """

    def __init__(self):
        pass

    @staticmethod
    def mul(tract: Tract, a: TractElement, b: TractElement) -> TractElement:
        """
        a ⊙ b，任一为零则返回零

        Raises:
            InvalidElementError: 元素不属于该 tract

        Example:
            # >>> TractService.mul(SignTract(), TractElement(-1), TractElement(-1))
            # <1>
        """
        return tract.mul(tract.check(a), tract.check(b))

    @staticmethod
    def check_sum(tract: Tract, s: FormalSum) -> FormalSum:
        for payload, _ in s.terms:
            normalized = tract.normalize_payload(payload)
            if normalized != payload and not tract.payload_close(normalized, payload):
                raise InvalidElementError(f"{tract.tract_id}: 形式和含非规范元素 {payload!r}")
        return s

    @staticmethod
    def hypersum_contains(tract: Tract, s: FormalSum, w: TractElement) -> bool:
        """
        w 是否属于 s 的迭代超和
        w = 0 时即 s 是否为零和；w ≠ 0 时判定 s + ε·w 是否为零和
        """
        TractService.check_sum(tract, s)
        return tract.contains(s, tract.check(w))

    @staticmethod
    def apply_hom(hom: TractHom, x: Union[TractElement, FormalSum]) -> Union[TractElement, FormalSum]:
        """逐元素取像；形式和中像为零的项被丢弃"""
        if isinstance(x, FormalSum):
            TractService.check_sum(hom.source, x)
            images = [hom(TractElement(p)) for p in x.payloads()]
            return FormalSum.of_elements(images)
        return hom(x)
