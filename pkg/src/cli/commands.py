#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
命令行入口

    apply     对 PGM 文件执行形态学运算
    bench     扫描窗口大小，输出两种通道算法的计时 CSV
    calibrate 在本机标定调度阈值并写出配置文件

所有错误都以退出码 1 结束，并在 stderr 输出一行说明。
计时命令为单线程，运行期间进程内不应有其他负载。

@author: PankIns Team
@version: 3.0.0
"""

import argparse
import sys
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.bench.harness import (check_reps, parse_window_range, random_image, sweep_passes,
                               sweep_transpose, write_csv)
from src.config.settings import Settings
from src.core.errors import InvalidParameterError, MorphologyError, UsageError
from src.core.model import BorderPolicy, OpKind, make_se
from src.formats.pgm import PgmVariant, load_pgm, save_pgm
from src.morphology.calibration import calibrate
from src.morphology.compound import MorphOp, apply_operation
from src.morphology.dispatch import DEFAULT_CONFIG, DispatchConfig
from src.utils.error_codes import ErrorCode
from src.utils.logger_config import get_logger, setup_logging

logger = get_logger(__name__)

console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)


class _Parser(argparse.ArgumentParser):
    """参数错误时抛异常而不是以退出码 2 退出"""

    def error(self, message):
        raise UsageError(message)


def parse_se(text: str):
    """解析 WxH（W 为水平尺寸，H 为垂直尺寸）"""
    width, sep, height = text.lower().partition("x")
    if not sep or not width.isdigit() or not height.isdigit():
        raise InvalidParameterError(f"结构元素格式应为 WxH: {text}")
    return make_se(int(width), int(height))


def build_parser() -> argparse.ArgumentParser:
    """
    创建参数解析器

    @returns {argparse.ArgumentParser} 解析器
    """
    parser = _Parser(prog="pank-morph", description="快速可分离灰度形态学工具")
    parser.add_argument("--settings", help="JSON 设置文件")
    parser.add_argument("--log-level", help="根日志级别，如 DEBUG、INFO")
    parser.add_argument("--log-dir", help="日志目录，不指定则不写日志文件")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    apply = sub.add_parser("apply", help="对 PGM 文件执行形态学运算")
    apply.add_argument("--op", required=True, choices=[op.value for op in MorphOp])
    apply.add_argument("--se", required=True, help="结构元素 WxH，均为奇数")
    apply.add_argument("--border", default="replicate", help="replicate 或 constant:V")
    apply.add_argument("--config", help="调度配置文件（key=value）")
    apply.add_argument("input", help="输入 PGM")
    apply.add_argument("output", help="输出 PGM（P5）")

    bench = sub.add_parser("bench", help="通道算法计时扫描")
    bench.add_argument("--width", type=int)
    bench.add_argument("--height", type=int)
    bench.add_argument("--windows", help="窗口范围 MIN..MAX[:STEP]")
    bench.add_argument("--reps", type=int)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--op", default="erode", choices=[op.value for op in OpKind])
    bench.add_argument("--transpose", action="store_true", help="同时计时分块转置与逐元素转置")
    bench.add_argument("--scalar-baseline", action="store_true",
                       help="追加逐元素 van Herk（vanherk_scalar）计时行，耗时较长")
    bench.add_argument("--out", required=True, help="输出 CSV")

    cal = sub.add_parser("calibrate", help="标定调度阈值")
    cal.add_argument("--width", type=int)
    cal.add_argument("--height", type=int)
    cal.add_argument("--windows", help="窗口范围 MIN..MAX[:STEP]")
    cal.add_argument("--reps", type=int)
    cal.add_argument("--seed", type=int)
    cal.add_argument("--out", required=True, help="输出配置文件")
    return parser


def _positive(value: int, name: str) -> int:
    if value < 1:
        raise InvalidParameterError(f"{name} 必须 ≥1: {value}")
    return value


def cmd_apply(args, settings: Settings) -> int:
    """读取输入，执行运算，写出规范 P5"""
    op = MorphOp(args.op)
    se = parse_se(args.se)
    border = BorderPolicy.parse(args.border)

    config_path = args.config or settings.dispatch_config_file
    cfg = DispatchConfig.load(config_path) if config_path else DEFAULT_CONFIG

    src = load_pgm(args.input)
    result = apply_operation(op, src, se, border, cfg)
    save_pgm(args.output, result, PgmVariant.P5)
    logger.info(f"{op.value} se={se} border={border}: {args.input} -> {args.output}")
    return 0


def _sweep_image(args, settings: Settings):
    default_w, default_h = settings.bench_size
    width = _positive(args.width if args.width is not None else default_w, "--width")
    height = _positive(args.height if args.height is not None else default_h, "--height")
    windows = parse_window_range(args.windows or settings.bench_windows)
    reps = args.reps if args.reps is not None else settings.bench_reps
    seed = args.seed if args.seed is not None else settings.bench_seed
    check_reps(reps)
    return width, height, windows, reps, seed


def cmd_bench(args, settings: Settings) -> int:
    """扫描两个方向、两种算法的计时并写出 CSV"""
    width, height, windows, reps, seed = _sweep_image(args, settings)
    image = random_image(width, height, seed)

    records = list(sweep_passes(image, windows, reps, OpKind(args.op),
                                scalar_baseline=args.scalar_baseline))
    if args.transpose:
        records.extend(sweep_transpose(image, reps, seed))
    write_csv(records, args.out)

    console.print(f"已写出 {len(records)} 条计时记录: {args.out}")
    return 0


def cmd_calibrate(args, settings: Settings) -> int:
    """标定阈值，写出配置文件并打印结果"""
    width, height, windows, reps, seed = _sweep_image(args, settings)
    cfg = calibrate((width, height), windows, reps, seed)
    cfg.save(args.out)

    table = Table(title=f"调度阈值 ({width}x{height}, reps={reps})")
    table.add_column("通道")
    table.add_column("阈值", justify="right")
    table.add_row("horizontal", str(cfg.threshold_h))
    table.add_row("vertical", str(cfg.threshold_v))
    console.print(table)
    console.print(f"threshold_h={cfg.threshold_h} threshold_v={cfg.threshold_v} -> {args.out}")
    return 0


COMMANDS = {
    "apply": cmd_apply,
    "bench": cmd_bench,
    "calibrate": cmd_calibrate,
}


def _fail(message: str) -> int:
    err_console.print(f"错误: {message}", markup=False)
    return 1


def main(argv: Optional[List[str]] = None) -> int:
    """
    命令行主函数

    @param {List[str]} argv - 参数列表，默认 sys.argv[1:]
    @returns {int} 退出码
    """
    try:
        args = build_parser().parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        return _fail(str(e))
    if not args.command:
        return _fail(str(UsageError("缺少子命令（apply、bench、calibrate）")))

    try:
        settings = Settings(args.settings)
        setup_logging(
            level=args.log_level or settings.log_level,
            console_level=settings.console_level,
            file_level=settings.file_level,
            log_dir=args.log_dir or settings.log_dir,
        )
        return COMMANDS[args.command](args, settings)
    except MorphologyError as e:
        source = getattr(args, "input", None)
        suffix = f" (输入: {source})" if source and args.command == "apply" else ""
        logger.info(f"{args.command} 失败: {e}")
        return _fail(f"{e}{suffix}")
    except FileNotFoundError as e:
        return _fail(f"[{ErrorCode.IO_ERROR.name}] 文件不存在: {e.filename or e}")
    except OSError as e:
        return _fail(f"[{ErrorCode.IO_ERROR.name}] 读写失败: {e.filename or ''} {e.strerror or e}")


if __name__ == "__main__":
    sys.exit(main())
