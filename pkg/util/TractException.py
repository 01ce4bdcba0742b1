"""
项目异常定义
全部继承 ValueError，命令行入口统一捕获 ValueError 并以退出码 2 结束
校验失败不是异常，而是报告内容
"""
from typing import Any, Dict, Optional


class TractError(ValueError):

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.witness: Dict[str, Any] = witness or {}


class InvalidElementError(TractError):
    """元素或载荷不属于该 tract"""


class InvalidInputError(TractError):
    """输入文档格式错误或参数不合法"""


class MismatchError(TractError):
    """两个操作数的 tract 或基础集不一致"""


class UnknownNameError(TractError):
    """未知的 tract、同态或示例名称"""


class UnsupportedScaleError(TractError):
    """超出穷举规模上限，或要求有限 tract 却给了无限 tract"""


class InconsistencyError(TractError):
    """比值不一致、消去元重复、策略结果不一致等内部矛盾"""


class NotRepresentableError(TractError):
    """基交换图上的闭合路径比值不一致"""


class MatroidAxiomError(TractError):
    """圈族不满足可比性或消去公理"""
