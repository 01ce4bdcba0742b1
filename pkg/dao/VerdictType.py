from enum import Enum


class VerdictType(Enum):
    """
    校验结论
    SAMPLED_PASS 只表示抽样未发现反例，不是证明
    """
    PASS = "pass"
    FAIL = "fail"
    SAMPLED_PASS = "sampled-pass"
    INCONCLUSIVE = "inconclusive"

    def exit_code(self) -> int:
        """pass 与 sampled-pass 退出码为 0，其余为 1"""
        return 0 if self in (VerdictType.PASS, VerdictType.SAMPLED_PASS) else 1
