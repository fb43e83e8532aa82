#!/usr/bin/env python3
"""
lyat 启动脚本
"""

import sys
from pathlib import Path

# 添加 src 目录到路径
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

# 导入并运行主程序
if __name__ == '__main__':
    from lyat.cli.runner import main
    sys.exit(main())
