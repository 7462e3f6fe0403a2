"""
qcartan 命令行入口
tables / quiver / torus / pair / verify 五个子命令
"""

import argparse
import os
import sys
from typing import Dict, List, Optional

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from pydantic import ValidationError

from src import Verifier
from src.cartan import build_datum
from src.checks import SUITES, VerifyContext
from src.cluster import (
    check_conjecture,
    check_transposed,
    gamma_forms_failure,
    pair_matrices,
    satisfies_length_condition,
)
from src.quivers import (
    ar_quiver,
    is_adapted,
    linear_quiver,
    longest_word,
    parse_height,
    repetition_quiver,
)
from src.tcartan import closed_formula, inverse_via_eta, inverse_via_series
from src.torus import (
    QuantumTorus,
    TorusElement,
    calN_failure,
    format_element,
    nnkr_cases,
    nnkr_failure,
    parse_element,
    ya_failure,
)
from src.utils import (
    RunConfig,
    dump_csv,
    dump_json,
    load_config,
    log,
    log_error,
    write_payload,
)
from src.weyl import hasse_quiver, parse_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


# 取值可能以 "-" 开头的选项，如 --window -12,12
SIGNED_OPTIONS = ("--window", "--height", "--element")


def join_signed_values(argv: List[str]) -> List[str]:
    """把 "--window -12,12" 改写为 "--window=-12,12"，避免 argparse 把负数当成选项"""
    result: List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in SIGNED_OPTIONS:
            value = next(tokens, None)
            if value is not None:
                token = f"{token}={value}"
        result.append(token)
    return result


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Cartan类型，如 B3、E8")
    common.add_argument("--height", help="高度函数：逗号分隔整数、linear 或 sink-source")
    common.add_argument("--word", help="逗号分隔的下标序列")
    common.add_argument("--window", help="p 窗口 lo,hi")
    common.add_argument("--format", default="json", help="json | csv | dot | text")
    common.add_argument("--out", help="输出文件路径，默认写到标准输出")
    common.add_argument("--seed", type=int, help="随机种子")
    common.add_argument("--threads", type=int, help="线程数，默认取环境变量 QCARTAN_THREADS")

    parser = argparse.ArgumentParser(
        prog="qcartan",
        description="量子Cartan矩阵、量子环面与相容对的计算与验证",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser("tables", parents=[common], help="δ̃、b̃ 与闭公式表")
    tables.add_argument("--what", choices=("delta", "tfb", "series", "closed"), default="delta")
    tables.add_argument("--max-u", type=int, dest="max_u", help="tfb/series 的最大次数")

    quiver = sub.add_parser("quiver", parents=[common], help="AR箭图、重复箭图与Hasse箭图")
    quiver.add_argument("--emit", choices=("ar", "rep", "hasse"), default="ar")

    torus = sub.add_parser("torus", parents=[common], help="量子环面的交换性检验与元素计算")
    torus.add_argument("--check", choices=("calN", "nnkr", "ya"), help="在窗口上检验的性质")
    torus.add_argument("--element", help='环面元素，如 "q^1*X[1,1] + q^-1*X[1,7]^-1"')

    pair = sub.add_parser("pair", parents=[common], help="下标序列上的 (Λ, B̃)")
    pair.add_argument("--check", action="store_true", help="不相容时以状态 1 退出")

    verify = sub.add_parser("verify", parents=[common], help="运行验证套件")
    verify.add_argument("--suite", default="all", help="逗号分隔的套件名，或 all")
    verify.add_argument("--list", action="store_true", help="列出全部套件")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    fields = {
        "command": args.command,
        "type": args.type,
        "height": args.height,
        "word": args.word,
        "window": args.window,
        "format": args.format,
        "out": args.out,
        "suites": getattr(args, "suite", None),
    }
    if args.seed is not None:
        fields["seed"] = args.seed
    if args.threads is not None:
        fields["threads"] = args.threads
    return RunConfig(**fields)


def _require_format(run: RunConfig, allowed: List[str]):
    if run.format not in allowed:
        raise ValueError(f"命令 {run.command} 不支持输出格式 {run.format}，可选: {', '.join(allowed)}")


def _quiver(run: RunConfig, datum):
    return parse_height(datum, run.height) if run.height else linear_quiver(datum)


def cmd_tables(run: RunConfig, args: argparse.Namespace) -> int:
    _require_format(run, ["json", "csv"])
    datum = build_datum(run.type)
    table = inverse_via_eta(linear_quiver(datum))
    if args.what == "delta":
        payload = table.to_dict()
    else:
        if args.max_u is not None and args.max_u < 0:
            raise ValueError(f"--max-u 必须 ≥ 0，当前为 {args.max_u}")
        if args.what == "tfb":
            max_u = 2 * datum.h if args.max_u is None else args.max_u
            entries = {pair: table.series(*pair, max_u) for pair in table.pairs()}
        elif args.what == "series":
            max_u = load_config().series_factor * datum.h if args.max_u is None else args.max_u
            entries = inverse_via_series(datum, max_u)
        else:
            entries = {
                pair: closed_formula(datum.ctype, *pair).coefficient_list(datum.h)
                for pair in table.pairs()
            }
        payload = {
            "type": str(datum.ctype),
            "h": datum.h,
            "what": args.what,
            "entries": {f"{i},{j}": [int(c) for c in v] for (i, j), v in sorted(entries.items())},
        }
    if run.format == "csv":
        rows = []
        for key, values in payload["entries"].items():
            i, j = key.split(",")
            rows.extend((i, j, u, coef) for u, coef in enumerate(values))
        write_payload(dump_csv(("i", "j", "u", "coef"), rows), run.out)
    else:
        write_payload(dump_json(payload), run.out)
    return EXIT_OK


def cmd_quiver(run: RunConfig, args: argparse.Namespace) -> int:
    datum = build_datum(run.type)
    quiver = _quiver(run, datum)
    if args.emit == "hasse":
        _require_format(run, ["json", "dot"])
        hasse = hasse_quiver(datum, longest_word(quiver))
        text = hasse.to_dot() if run.format == "dot" else dump_json(hasse.to_dict())
        write_payload(text, run.out)
        return EXIT_OK
    _require_format(run, ["json", "dot", "text"])
    if args.emit == "ar":
        graph = ar_quiver(quiver)
    else:
        lo, hi = run.window or (min(quiver.xi) - 2 * datum.h, max(quiver.xi) + 2 * datum.h)
        graph = repetition_quiver(quiver, lo, hi)
    if run.format == "dot":
        text = graph.to_dot()
    elif run.format == "text":
        text = graph.to_text()
    else:
        text = dump_json(graph.to_dict())
    write_payload(text, run.out)
    return EXIT_OK


def cmd_torus(run: RunConfig, args: argparse.Namespace) -> int:
    _require_format(run, ["json"])
    datum = build_datum(run.type)
    quiver = _quiver(run, datum)
    torus = QuantumTorus(quiver)
    payload: Dict = {"type": str(datum.ctype), "xi": list(quiver.xi)}
    status = EXIT_OK

    if args.element:
        element = parse_element(torus, args.element)
        payload["element"] = format_element(element)
        payload["bar"] = format_element(torus.bar(element))
        payload["bar_normalized"] = [
            format_element(TorusElement.of(torus.bar_normalize(m))) for m in element.monomials()
        ]
        payload["wtQ"] = [list(w.coords) for w in torus.element_weights(element)]

    if args.check or not args.element:
        lo, hi = run.window or (min(quiver.xi) - 2 * datum.h, max(quiver.xi) + 2 * datum.h)
        checks = [args.check] if args.check else ["calN", "nnkr", "ya"]
        results = {}
        for name in checks:
            if name == "calN":
                failure = calN_failure(torus, lo, hi)
            elif name == "nnkr":
                failure = nnkr_failure(torus, lo, hi)
            else:
                failure = ya_failure(torus, lo, hi)
            entry = {"passed": failure is None, "counterexample": failure}
            if name == "nnkr":
                entry["checked"] = sum(1 for _ in nnkr_cases(torus, lo, hi))
            results[name] = entry
            if failure:
                status = EXIT_FAILED
        payload["window"] = [lo, hi]
        payload["checks"] = results

    write_payload(dump_json(payload), run.out)
    return status


def cmd_pair(run: RunConfig, args: argparse.Namespace) -> int:
    _require_format(run, ["json"])
    datum = build_datum(run.type)
    word = parse_word(run.word) if run.word else longest_word(_quiver(run, datum))
    pm = pair_matrices(datum, word)
    payload = pm.to_dict()
    payload["transposed"] = check_transposed(pm)
    payload["length_condition"] = satisfies_length_condition(datum, word)
    if run.height:
        quiver = parse_height(datum, run.height)
        if is_adapted(quiver, word):
            payload["gamma_forms"] = gamma_forms_failure(quiver, word) is None
    status = EXIT_OK
    if args.check:
        failure = check_conjecture(datum, word) if payload["length_condition"] else None
        if failure or not payload["compatible"] or not payload["transposed"]:
            log_error("pair", failure or f"w̃={list(word)} 不相容")
            status = EXIT_FAILED
    write_payload(dump_json(payload), run.out)
    return status


def cmd_verify(run: RunConfig, args: argparse.Namespace) -> int:
    _require_format(run, ["json", "csv", "text"])
    if args.list:
        rows = [(name, check.description) for name, check in SUITES.items()]
        if run.format == "json":
            text = dump_json([{"suite": name, "description": text} for name, text in rows])
        elif run.format == "csv":
            text = dump_csv(("suite", "description"), rows)
        else:
            text = "\n".join(f"{name:16s} {description}" for name, description in rows)
        write_payload(text, run.out)
        return EXIT_OK

    config = load_config()
    if args.seed is not None:
        config.seed = run.seed
    if args.threads is not None:
        config.threads = run.threads
    context = VerifyContext(
        config=config,
        type_name=run.type,
        height=run.height,
        word=parse_word(run.word) if run.word else None,
        window=run.window,
    )
    report = Verifier(config, context).run(run.suites or list(SUITES), save_report=False)

    if run.format == "csv":
        rows = [
            (r.suite, r.case, r.passed, r.checked, r.counterexample or "")
            for r in report.results
        ]
        write_payload(dump_csv(("suite", "case", "passed", "checked", "counterexample"), rows))
    elif run.format == "text":
        lines = [
            f"{suite}: {'PASS' if row['passed'] else 'FAIL'} ({row['cases']} cases, {row['checked']} checks)"
            + (f"  {row['counterexample']}" if row["counterexample"] else "")
            for suite, row in report.get_summary().items()
        ]
        write_payload("\n".join(lines))
    else:
        write_payload(report.to_json(with_timestamps=False))

    if run.out:
        report.save_to_file(run.out)
        log("verify", f"报告已保存到: {run.out}")
    return EXIT_OK if report.all_passed() else EXIT_FAILED


COMMAND_HANDLERS = {
    "tables": cmd_tables,
    "quiver": cmd_quiver,
    "torus": cmd_torus,
    "pair": cmd_pair,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    Returns:
        退出状态：0 成功，1 存在失败的检验，2 用法错误，3 读写错误
    """
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(join_signed_values(list(argv)))
    try:
        run = _run_config(args)
    except ValidationError as e:
        for error in e.errors():
            log_error("qcartan", error["msg"])
        return EXIT_USAGE

    try:
        return COMMAND_HANDLERS[run.command](run, args)
    except (ValueError, KeyError) as e:
        log_error("qcartan", str(e))
        return EXIT_USAGE
    except OSError as e:
        log_error("qcartan", str(e))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
