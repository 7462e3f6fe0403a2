"""
输出格式
JSON、CSV、DOT 与纯文本的序列化，以及写入文件或标准输出
"""

import csv
import io
import json
import os
from typing import Any, Iterable, Optional, Sequence

from .console import output


def dump_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def dump_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    序列化为CSV

    Args:
        header: 表头
        rows: 数据行

    Returns:
        以 \\n 换行的CSV文本
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def write_payload(text: str, out: Optional[str] = None):
    """
    写出结果

    out 为空时写到标准输出；否则写到文件，失败时抛出带路径的 OSError。
    """
    if not text.endswith("\n"):
        text += "\n"
    if not out:
        output.out(text, end="", highlight=False)
        return
    directory = os.path.dirname(out)
    try:
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise OSError(f"无法写入输出文件 {out}: {e.strerror or e}") from e
