"""
报告生成器
"""

from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

import jinja2
import pandas as pd

from .. import __version__
from ..storage import canonical_json, input_digest
from ..utils.config import get_config
from ..utils.logger import get_logger

logger = get_logger(__name__)

# 命令 -> 文本模板
TEMPLATE_FAMILIES = {
    "validate": "validate.txt.j2",
    "info": "info.txt.j2",
    "compatible": "induce.txt.j2",
    "wells": "induce.txt.j2",
    "induce": "induce.txt.j2",
    "relations": "relations.txt.j2",
    "enumerate": "enumerate.txt.j2",
    "crosscheck": "crosscheck.txt.j2",
}
GENERIC_TEMPLATE = "generic.txt.j2"


def _pretty(value: Any) -> str:
    """矩阵按行输出，其余按 JSON 风格压成一行"""
    if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
        return "; ".join(" ".join(str(x) for x in row) for row in value)
    if isinstance(value, bool):
        return "是" if value else "否"
    return str(value)


def records_table(records: List[Mapping[str, Any]], columns: Optional[List[str]] = None) -> str:
    """用 pandas 排版的纯文本表格"""
    if not records:
        return "(空)"
    df = pd.DataFrame.from_records(records, columns=columns)
    return df.to_string(index=False)


class ReportGenerator:
    """报告生成器"""

    def __init__(self, template_dir: Optional[Path] = None):
        """
        初始化报告生成器

        Args:
            template_dir: 模板目录，默认为包内 templates
        """
        self.template_env = jinja2.Environment(
            loader=jinja2.FileSystemLoader(template_dir or Path(__file__).parent / "templates"),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            undefined=jinja2.StrictUndefined,
        )
        self.template_env.filters["pretty"] = _pretty
        self.template_env.globals["records_table"] = records_table

    def build(
        self,
        command: str,
        inputs: Mapping[str, str],
        success: bool,
        result: Dict[str, Any],
    ) -> Dict[str, Any]:
        """
        组装报告

        Args:
            command: 子命令名
            inputs: {输入名: 文件路径}，报告中记录其 sha256
            success: 数学结论为真（退出码 0）
            result: 命令结果

        Returns:
            Dict[str, Any]: 不含时间戳的报告字典
        """
        return {
            "command": command,
            "version": __version__,
            "inputs": {name: input_digest(path) for name, path in sorted(inputs.items())},
            "success": success,
            "result": result,
        }

    def render(self, report: Dict[str, Any], fmt: Optional[str] = None) -> str:
        """
        渲染报告

        Args:
            report: build 的结果
            fmt: text 或 json，缺省取 report.default_format

        Returns:
            str: 以换行结尾的文本
        """
        fmt = fmt or get_config().report.default_format
        if fmt == "json":
            return canonical_json(report)
        name = TEMPLATE_FAMILIES.get(report["command"], GENERIC_TEMPLATE)
        if "error" in report["result"]:
            name = GENERIC_TEMPLATE
        try:
            template = self.template_env.get_template(name)
        except jinja2.TemplateNotFound:
            logger.warning(f"模板 {name} 不存在，改用通用模板")
            template = self.template_env.get_template(GENERIC_TEMPLATE)
        text = template.render(**report)
        return text if text.endswith("\n") else text + "\n"


# 创建全局报告生成器实例
report_generator = ReportGenerator()
