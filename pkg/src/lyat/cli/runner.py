"""
lyat 命令行入口
退出码：0 结论为真，1 结论为假，2 输入或前置条件错误，3 内部不变式被破坏
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from ..algebra import (
    LYAlgebra,
    center,
    check_axioms,
    generalized_heisenberg,
    heisenberg,
    heisenberg_embedding,
    heisenberg_lie,
    lower_central_series,
)
from ..cohomology import h1_cochains, h23, h45
from ..enumeration import (
    EnumBudget,
    compare_inducibility,
    verify_exact_sequences,
    wells_homomorphism_probe,
)
from ..exceptions import InputError, InvariantViolation, LyatError, PreconditionError
from ..extension import AbelianExtension, build_extension, central_extension, from_total, same_structure
from ..inducibility import AutPair, check_pair, decide_inducible, is_compatible, wells_class, wells_cocycle
from ..nilpotent2 import crosscheck, generate_relations
from ..report.generator import report_generator
from ..representation import check_representation
from ..storage import (
    certificate_codec,
    cochain1_codec,
    cochain_codec,
    load_store,
    pair_codec,
    store,
)
from ..utils.config import config_manager, get_config
from ..utils.logger import get_logger, setup_from_config
from .commands import Command, parse_command

logger = get_logger(__name__)

# 命令处理结果：(结论, 结果字典, {输入名: 路径})
Handled = Tuple[bool, Dict[str, Any], Dict[str, str]]


@dataclass
class Outcome:
    """一次运行的退出码与要输出的文本"""

    exit_code: int
    text: str


def _axiom_status(L: LYAlgebra, status) -> Dict[str, Any]:
    out: Dict[str, Any] = {"name": status.name, "passed": status.passed}
    if status.witness is not None:
        out["witness"] = [L.basis_names[i] for i in status.witness]
    if status.residual is not None:
        out["residual"] = [L.field.format(x) for x in status.residual]
    return out


class Application:
    """命令分发"""

    BUILTIN_ALGEBRAS = {
        "heisenberg": heisenberg,
        "gheisenberg": generalized_heisenberg,
        "heisenberg-lie": heisenberg_lie,
    }

    def __init__(self):
        """初始化应用程序"""
        self.config = get_config()
        self.reports = report_generator

    def run(self, cmd: Command) -> Outcome:
        """
        执行命令

        Args:
            cmd: 已校验的命令

        Returns:
            Outcome: 退出码与输出文本
        """
        handler = getattr(self, f"_cmd_{cmd.name}")
        try:
            handled = handler(cmd)
        except LyatError as e:
            logger.error(f"{cmd.name} 失败: {e}")
            report = self.reports.build(
                cmd.name, {}, False, {"error": type(e).__name__, "message": str(e)}
            )
            return Outcome(e.exit_code, self.reports.render(report, cmd.fmt))

        if isinstance(handled, Outcome):
            return handled
        success, result, inputs = handled
        report = self.reports.build(cmd.name, inputs, success, result)
        return Outcome(0 if success else 1, self.reports.render(report, cmd.fmt))

    @staticmethod
    def emit(cmd: Command, text: str) -> None:
        """写到 --out 指定的文件或标准输出"""
        if cmd.out:
            path = Path(cmd.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"输出已写入 {path}")
        else:
            sys.stdout.write(text)

    # ------------------------------------------------------------------
    # 读取
    # ------------------------------------------------------------------

    @staticmethod
    def _load_pair(cmd: Command) -> Tuple[AbelianExtension, AutPair]:
        ext_path, pair_path = cmd.paths
        e = load_store(ext_path, "extension")
        pr = load_store(pair_path, "pair", field=e.field)
        check_pair(e, pr)
        return e, pr

    # ------------------------------------------------------------------
    # 代数
    # ------------------------------------------------------------------

    def _cmd_validate(self, cmd: Command) -> Handled:
        path = cmd.paths[0]
        L = load_store(path, "algebra")
        report = check_axioms(L)
        result = {
            "dim": L.dim,
            "field": L.field.name,
            "passed": report.passed,
            "axioms": [_axiom_status(L, s) for s in report.statuses],
        }
        return report.passed, result, {"algebra": path}

    def _cmd_info(self, cmd: Command) -> Handled:
        path = cmd.paths[0]
        L = load_store(path, "algebra")
        z = center(L)
        series, index = lower_central_series(L)
        result = {
            "dim": L.dim,
            "field": L.field.name,
            "basis": list(L.basis_names),
            "abelian": L.is_abelian(),
            "center_dim": z.dim,
            "center_basis": [[L.field.format(x) for x in v] for v in z.vectors],
            "lower_central_series": [W.dim for W in series],
            "nilpotency_index": index,
            "axioms_pass": check_axioms(L).passed,
        }
        return True, result, {"algebra": path}

    def _cmd_cohomology(self, cmd: Command) -> Handled:
        path = cmd.paths[0]
        r = load_store(path, "representation")
        failures = check_representation(r).failures()
        if failures:
            raise PreconditionError(f"表示不满足 {failures[0].name}，无法计算上同调")

        result: Dict[str, Any] = {"degree": cmd.degree, "n": r.dim, "m": r.vdim}
        if cmd.degree == "1":
            basis = h1_cochains(r)
            result.update({"h_dim": len(basis), "basis": [cochain1_codec.to_dict(lam) for lam in basis]})
        elif cmd.degree == "23":
            groups = h23(r)
            result.update(groups.summary())
            result["representatives"] = [cochain_codec.to_dict(c) for c in groups.representatives()]
        else:
            result.update(h45(r).summary())
        return True, result, {"rep": path}

    def _cmd_relations(self, cmd: Command) -> Handled:
        path = cmd.paths[0]
        rs = generate_relations(load_store(path, "algebra"))
        result = rs.to_json()
        result["text"] = rs.to_text()
        return True, result, {"algebra": path}

    # ------------------------------------------------------------------
    # 扩张：直接输出扩张文件
    # ------------------------------------------------------------------

    def _cmd_extension(self, cmd: Command) -> Outcome:
        if cmd.action == "central":
            e = central_extension(load_store(cmd.paths[0], "algebra"))
        elif cmd.action == "build":
            base_path, rep_path, cocycle_path = cmd.paths
            base = load_store(base_path, "algebra")
            r = load_store(rep_path, "representation", field=base.field)
            if not same_structure(r.algebra, base):
                raise InputError("表示所在的代数与基代数不同")
            c = load_store(cocycle_path, "cochain", field=base.field)
            e = build_extension(base, r, c)
        else:
            total = load_store(cmd.paths[0], "algebra")
            V = load_store(cmd.paths[1], "subspace", field=total.field, ambient_dim=total.dim)
            e = from_total(total, V)
        return Outcome(0, store(e))

    # ------------------------------------------------------------------
    # 可诱导性
    # ------------------------------------------------------------------

    def _cmd_compatible(self, cmd: Command) -> Handled:
        e, pr = self._load_pair(cmd)
        ok = is_compatible(e, pr)
        return ok, {"compatible": ok}, {"ext": cmd.paths[0], "pair": cmd.paths[1]}

    def _cmd_wells(self, cmd: Command) -> Handled:
        e, pr = self._load_pair(cmd)
        cls = wells_class(e, pr)
        result = {
            "trivial": cls.trivial,
            "cocycle": cochain_codec.to_dict(wells_cocycle(e, pr)),
            "witness": cochain1_codec.to_dict(cls.witness) if cls.witness is not None else None,
        }
        return cls.trivial, result, {"ext": cmd.paths[0], "pair": cmd.paths[1]}

    def _cmd_induce(self, cmd: Command) -> Handled:
        e, pr = self._load_pair(cmd)
        decision = decide_inducible(e, pr)
        result = {
            "inducible": decision.inducible,
            "reason": decision.reason,
            "certificate": (
                certificate_codec.to_dict(decision.certificate) if decision.certificate is not None else None
            ),
        }
        return decision.inducible, result, {"ext": cmd.paths[0], "pair": cmd.paths[1]}

    # ------------------------------------------------------------------
    # 有限域穷举与随机对照
    # ------------------------------------------------------------------

    def _cmd_enumerate(self, cmd: Command) -> Any:
        path = cmd.paths[0]
        e = load_store(path, "extension")
        if cmd.p is not None and e.field.p != cmd.p:
            raise InputError(f"--p {cmd.p} 与扩张文件的域 {e.field.name} 不一致")
        budget = EnumBudget.from_config(cmd.budget)
        inputs = {"ext": path}

        if cmd.check == "sequences":
            seq = verify_exact_sequences(e, budget)
            return seq.passed, {"check": cmd.check, **seq.to_dict()}, inputs
        if cmd.check == "wells":
            probe = wells_homomorphism_probe(e, budget)
            result = {
                "check": cmd.check,
                "counts": {"checked": probe.checked, "witnesses": len(probe.witnesses)},
                "homomorphic": probe.homomorphic,
                "witnesses": [
                    {k: pair_codec.to_dict(v) for k, v in w.items()} for w in probe.witnesses
                ],
            }
            return probe.homomorphic, result, inputs

        comparison = compare_inducibility(e, budget)
        result = {"check": cmd.check, **comparison.to_dict()}
        if not comparison.agree:
            error = InvariantViolation("decide_inducible 与提升搜索结论不一致")
            report = self.reports.build(cmd.name, inputs, False, result)
            logger.error(str(error))
            return Outcome(error.exit_code, self.reports.render(report, cmd.fmt))
        return True, result, inputs

    def _cmd_crosscheck(self, cmd: Command) -> Handled:
        report = crosscheck(cmd.n, cmd.samples, seed=cmd.seed, prime=cmd.p)
        result = report.to_dict()
        exact = all(d["mode"] == "as_stated" for d in report.disagreements)
        return exact, result, {}

    # ------------------------------------------------------------------
    # 内置代数
    # ------------------------------------------------------------------

    def _cmd_builtin(self, cmd: Command) -> Any:
        f = cmd.field_spec()
        if cmd.action == "embedding":
            phi = heisenberg_embedding(cmd.n, f)
            result = {"n": cmd.n, "field": f.name, "shape": list(phi.shape), "matrix": phi.to_strings()}
            return True, result, {}
        return Outcome(0, store(self.BUILTIN_ALGEBRAS[cmd.action](cmd.n, f)))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    主函数

    Args:
        argv: 命令行参数，None 时取 sys.argv

    Returns:
        int: 退出码
    """
    try:
        cmd = parse_command(argv)
    except InputError as e:
        logger.error(str(e))
        return e.exit_code

    if cmd.log_level:
        config_manager.update_config({'log_level': cmd.log_level})
        setup_from_config(get_config())
    if cmd.seed is not None:
        config_manager.update_config({'sampling': {'default_seed': cmd.seed}})

    app = Application()
    try:
        outcome = app.run(cmd)
    except KeyboardInterrupt:
        logger.info("用户中断程序")
        return 130
    except Exception as e:
        logger.exception(f"程序执行出错: {e}")
        return InvariantViolation.exit_code
    app.emit(cmd, outcome.text)
    return outcome.exit_code


def cli() -> None:
    sys.exit(main())


if __name__ == '__main__':
    cli()
