"""
控制台输出
诊断信息写到 stderr，结果写到 stdout
"""

from rich.console import Console

console = Console(stderr=True, highlight=False)
output = Console(highlight=False, soft_wrap=True)


def log(name: str, message: str):
    console.print(f"[{name}] {message}", markup=False)


def log_error(name: str, message: str):
    console.print(f"[{name}] 错误: {message}", markup=False, style="red")


def banner(title: str):
    console.print("=" * 60)
    console.print(title, markup=False)
    console.print("=" * 60)
