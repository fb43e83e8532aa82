"""
报告模块
"""

from .generator import ReportGenerator, records_table, report_generator

__all__ = ['ReportGenerator', 'records_table', 'report_generator']
