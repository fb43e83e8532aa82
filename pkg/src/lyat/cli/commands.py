"""
命令行参数定义与校验
所有参数组合在任何计算开始前校验，不合法时抛出 InputError（退出码 2）
"""

import argparse
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from sympy import isprime

from ..exactlinalg import FieldSpec
from ..exceptions import InputError

BUILTINS = ("heisenberg", "gheisenberg", "heisenberg-lie", "embedding")
EXTENSION_ACTIONS = ("central", "build", "from-total")
ENUM_CHECKS = ("wells", "sequences", "inducible")
DEGREES = ("1", "23", "45")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class Command:
    """解析后的命令"""

    name: str
    action: Optional[str] = None
    paths: List[str] = field(default_factory=list)
    field_kind: str = "rational"
    p: Optional[int] = None
    n: Optional[int] = None
    out: Optional[str] = None
    fmt: Optional[str] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    degree: str = "23"
    check: Optional[str] = None
    samples: Optional[int] = None
    log_level: Optional[str] = None

    def field_spec(self) -> FieldSpec:
        return FieldSpec.prime(self.p) if self.field_kind == "prime" else FieldSpec.rational()


class _Parser(argparse.ArgumentParser):
    """参数错误统一转成 InputError，由 runner 决定退出码"""

    def error(self, message: str) -> None:
        raise InputError(f"参数错误: {message}")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', dest='fmt', choices=['text', 'json'], help='输出格式')
    parser.add_argument('--out', help='输出文件路径，缺省写到标准输出')
    parser.add_argument('--log-level', choices=LOG_LEVELS, help='日志级别')
    parser.add_argument('--seed', type=int, help='随机种子')


def build_parser() -> argparse.ArgumentParser:
    """构造 lyat 命令行解析器"""
    parser = _Parser(prog='lyat', description='Lie-Yamaguti 代数精确计算工具')
    sub = parser.add_subparsers(dest='name', required=True, parser_class=_Parser)

    p = sub.add_parser('validate', help='检验 LY1-LY6')
    p.add_argument('algebra')
    _common(p)

    p = sub.add_parser('info', help='维数、中心、下中心列与公理')
    p.add_argument('algebra')
    _common(p)

    p = sub.add_parser('cohomology', help='H^1、H^(2,3)、H^(4,5)')
    p.add_argument('rep')
    p.add_argument('--degree', choices=DEGREES, default='23')
    _common(p)

    p = sub.add_parser('extension', help='构造阿贝尔扩张')
    p.add_argument('action', choices=EXTENSION_ACTIONS)
    p.add_argument('paths', nargs='+')
    _common(p)

    for name, help_text in (
        ('compatible', '判定相容对'),
        ('wells', '计算 Wells 类'),
        ('induce', '判定可诱导并给出提升'),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument('ext')
        p.add_argument('pair')
        _common(p)

    p = sub.add_parser('relations', help='生成可诱导性的多项式关系')
    p.add_argument('algebra')
    _common(p)

    p = sub.add_parser('enumerate', help='有限域上的穷举验证')
    p.add_argument('ext')
    p.add_argument('--check', choices=ENUM_CHECKS, required=True)
    p.add_argument('--p', type=int, help='期望的素数，须与扩张文件一致')
    p.add_argument('--budget', type=int, help='搜索节点数上限')
    _common(p)

    p = sub.add_parser('builtin', help='内置代数')
    p.add_argument('action', choices=BUILTINS)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--field', dest='field_kind', choices=['rational', 'prime'], default='rational')
    p.add_argument('--p', type=int)
    _common(p)

    p = sub.add_parser('crosscheck', help='h_n 分块条件与直接判定的随机对照')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--samples', type=int)
    p.add_argument('--p', type=int, help='素域的 p')
    _common(p)
    return parser


_ARITY = {"central": 1, "build": 3, "from-total": 2}


def validate_command(cmd: Command) -> Command:
    """
    计算前的参数校验

    Args:
        cmd: 解析得到的命令

    Returns:
        Command: 原命令；不合法时抛出 InputError
    """
    if cmd.name == "extension" and len(cmd.paths) != _ARITY[cmd.action]:
        raise InputError(f"extension {cmd.action} 需要 {_ARITY[cmd.action]} 个文件，收到 {len(cmd.paths)} 个")
    if cmd.p is not None:
        if cmd.name == "builtin" and cmd.field_kind != "prime":
            raise InputError("--p 只能与 --field prime 一起使用")
        if not (1 < cmd.p < 2 ** 16) or not isprime(cmd.p):
            raise InputError(f"--p 必须是小于 2^16 的素数: {cmd.p}")
    if cmd.name == "builtin" and cmd.field_kind == "prime" and cmd.p is None:
        raise InputError("--field prime 需要 --p")
    if cmd.n is not None and cmd.n < 1:
        raise InputError(f"--n 必须 ≥ 1: {cmd.n}")
    if cmd.budget is not None and cmd.budget <= 0:
        raise InputError(f"--budget 必须为正: {cmd.budget}")
    if cmd.samples is not None and cmd.samples <= 0:
        raise InputError(f"--samples 必须为正: {cmd.samples}")
    return cmd


def parse_command(argv: Optional[Sequence[str]] = None) -> Command:
    """
    解析并校验命令行

    Args:
        argv: 参数列表，None 时取 sys.argv

    Returns:
        Command: 校验过的命令
    """
    args = build_parser().parse_args(argv)
    values = vars(args)
    paths: List[str] = list(values.pop('paths', None) or [])
    for key in ('algebra', 'rep', 'ext', 'pair'):
        if values.get(key) is not None:
            paths.append(values.pop(key))
    known = {f for f in Command.__dataclass_fields__ if f != 'paths'}
    cmd = Command(paths=paths, **{k: v for k, v in values.items() if k in known and v is not None})
    return validate_command(cmd)

