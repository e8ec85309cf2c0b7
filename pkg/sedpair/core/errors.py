"""
SED-pair 工具包 - 异常定义

所有领域错误都继承自 SedPairError，CLI 据此映射退出码：
- 领域错误（无效规格、越界拒绝、契约失败）→ 1
- 解析 / I/O 错误 → 2
"""


class SedPairError(Exception):
    """所有领域错误的基类"""


class InvalidGraphError(SedPairError, ValueError):
    """SignedGraph 不满足结构约束（自环、重边、越界、非 ±1 权重）"""


class InvalidSpecError(SedPairError, ValueError):
    """构造 / 搜索 / blow-up 规格无效，或 Pell 不变式不成立"""


class DomainError(SedPairError, ValueError):
    """实函数参数超出定义域"""


class SingularityError(DomainError):
    """在奇点处求值（例如 W(α)=0 时的 K₀）"""


class ContractError(SedPairError, AssertionError):
    """操作的前置条件或后置条件不成立"""


class SearchBoundError(SedPairError):
    """穷举规模超出配置的上限，拒绝执行"""


class BoundViolationError(SedPairError):
    """精确搜索得到的 g(n) 低于理论下界"""

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class PellOverflowError(SedPairError, OverflowError):
    """Pell 相关比值无法转换为浮点数"""


class EdgeListParseError(SedPairError, ValueError):
    """边表文本格式错误"""

    def __init__(self, message: str, line_no: int = 0):
        if line_no:
            message = f"第 {line_no} 行: {message}"
        super().__init__(message)
        self.line_no = line_no
