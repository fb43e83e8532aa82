"""
命令行模块
"""

from .commands import Command, build_parser, parse_command, validate_command
from .runner import Application, Outcome, main

__all__ = ['Command', 'build_parser', 'parse_command', 'validate_command', 'Application', 'Outcome', 'main']
