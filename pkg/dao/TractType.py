from enum import Enum


class TractType(Enum):
    """
    内置 tract 标识
    用于序列化和命令行 --tract 参数
    """
    KRASNER = "krasner"
    SIGN = "sign"
    WEAK_SIGN = "weaksign"
    TROPICAL = "tropical"
    PHASE = "phase"
    TRIANGLE = "triangle"
    GF2 = "field:gf2"
    GF3 = "field:gf3"
    RATIONAL = "field:q"
    REGULAR = "pf:regular"
    DYADIC = "pf:dyadic"
    INITIAL = "initial"

    @classmethod
    def get_all_types(cls):
        """获取所有内置 tract 标识"""
        return [item.value for item in cls]
