"""
边表文本格式读写

格式：
    # 以 # 开头的行为注释
    n m
    u v w      （共 m 行，w 为 +1 或 -1，顶点 0 起编号）

写出时使用 LF 换行，权重写作 +1 / -1，保证逐字节往返。
"""

from pathlib import Path
from typing import List, Optional, Union

from .errors import EdgeListParseError, InvalidGraphError
from .signed_graph import SignedGraph

_WEIGHT_TOKENS = {'+1': 1, '1': 1, '-1': -1}


def format_edge_list(g: SignedGraph, comments: Optional[List[str]] = None) -> str:
    """
    将图格式化为边表文本

    Args:
        g: 符号图
        comments: 可选的注释行（不含 #）
    """
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v} {'+1' if w == 1 else '-1'}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SignedGraph:
    """
    解析边表文本

    Raises:
        EdgeListParseError: 格式错误（附带行号）
    """
    header = None
    edges = []

    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue

        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise EdgeListParseError(f"首行应为 'n m'，实际为: {line!r}", line_no)
            try:
                header = (int(tokens[0]), int(tokens[1]))
            except ValueError:
                raise EdgeListParseError(f"首行必须是两个整数: {line!r}", line_no)
            if header[0] < 0 or header[1] < 0:
                raise EdgeListParseError(f"n 和 m 不能为负: {line!r}", line_no)
            continue

        if len(tokens) != 3:
            raise EdgeListParseError(f"边行应为 'u v w'，实际为: {line!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"顶点必须是整数: {line!r}", line_no)
        if tokens[2] not in _WEIGHT_TOKENS:
            raise EdgeListParseError(f"权重必须为 +1 或 -1: {tokens[2]!r}", line_no)
        edges.append((u, v, _WEIGHT_TOKENS[tokens[2]]))

    if header is None:
        raise EdgeListParseError("缺少首行 'n m'")

    n, m = header
    if len(edges) != m:
        raise EdgeListParseError(f"首行声明 {m} 条边，实际读到 {len(edges)} 条")

    try:
        return SignedGraph(n, tuple(edges))
    except InvalidGraphError as e:
        raise EdgeListParseError(str(e))


def read_edge_list(path: Union[str, Path]) -> SignedGraph:
    """从文件读取边表"""
    with open(path, 'r', encoding='utf-8', newline='') as f:
        return parse_edge_list(f.read())


def write_edge_list(g: SignedGraph, path: Union[str, Path], comments: Optional[List[str]] = None) -> None:
    """写出边表文件（LF 换行）"""
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(format_edge_list(g, comments))
