"""
Johnson Lab - Reporting Module
Renders command results as human-readable tables or machine-readable JSON.

A result is a dictionary with a ``command``, a ``title``, an optional
boolean ``holds`` for identity checks and an ordered ``fields`` mapping.
"""

import logging
from typing import Any, Dict, List

from src.algebra.poly import SparsePoly
from src.algebra.serialization import dumps_json, format_coefficient, poly_to_dict

FORMATS = ('table', 'json')


def to_json_value(value: Any) -> Any:
    """Convert a result value into plain JSON data."""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, SparsePoly):
        return poly_to_dict(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return format_coefficient(value)
    return str(value)


def _status(result: Dict) -> str:
    holds = result.get('holds')
    if holds is None:
        return ''
    return 'PASS' if holds else 'FAIL'


class TableReportGenerator:
    """
    Generates human-readable text reports.
    """

    def __init__(self, config: Dict):
        """
        Initialize table report generator.

        Args:
            config: Application configuration dictionary
        """
        self.config = config
        self.logger = logging.getLogger('johnsonlab.reporting.table')

    def _format_value(self, value: Any) -> List[str]:
        if isinstance(value, dict):
            lines = []
            for key, item in value.items():
                rendered = self._format_value(item)
                if len(rendered) == 1:
                    lines.append(f"{key}: {rendered[0]}")
                else:
                    lines.append(f"{key}:")
                    lines.extend(f"  {line}" for line in rendered)
            return lines or ['(none)']
        if isinstance(value, (list, tuple)):
            lines = []
            for item in value:
                lines.extend(self._format_value(item))
            return lines or ['(none)']
        if hasattr(value, 'numerator') and hasattr(value, 'denominator') and not isinstance(value, (bool, int)):
            return [format_coefficient(value)]
        return [str(value) if isinstance(value, (bool, int, str)) or value is None else repr(value)]

    def generate(self, result: Dict) -> str:
        """
        Generate a text report.

        Args:
            result: Command result dictionary

        Returns:
            Formatted text report
        """
        lines = []

        # Header
        lines.append("=" * 70)
        lines.append(result.get('title', result.get('command', 'Result')))
        lines.append("=" * 70)
        lines.append("")

        status = _status(result)
        if status:
            lines.append(f"Status: {status}")
            lines.append("")

        for name, value in result.get('fields', {}).items():
            lines.append(name.replace('_', ' ').upper())
            lines.append("-" * 70)
            lines.extend(self._format_value(value))
            lines.append("")

        # Footer
        lines.append("=" * 70)
        lines.append("Report generated by Johnson Lab")
        lines.append("=" * 70)

        return "\n".join(lines)


class JSONReportGenerator:
    """
    Generates machine-readable JSON reports.
    """

    def __init__(self, config: Dict):
        """
        Initialize JSON report generator.

        Args:
            config: Application configuration dictionary
        """
        self.config = config
        self.logger = logging.getLogger('johnsonlab.reporting.json')

    def generate(self, result: Dict) -> str:
        """
        Generate JSON report.

        Args:
            result: Command result dictionary

        Returns:
            JSON-formatted report string (sorted keys)
        """
        report: Dict[str, Any] = {
            'command': result.get('command'),
            'result': to_json_value(result.get('fields', {})),
        }
        if result.get('holds') is not None:
            report['holds'] = bool(result['holds'])
        return dumps_json(report)


class ReportOrchestrator:
    """
    Orchestrates report generation in multiple formats.
    """

    def __init__(self, config: Dict):
        """
        Initialize report orchestrator.

        Args:
            config: Application configuration dictionary
        """
        self.config = config
        self.logger = logging.getLogger('johnsonlab.reporting')

        self.table_generator = TableReportGenerator(config)
        self.json_generator = JSONReportGenerator(config)

        self.default_format = config.get('output', {}).get('format', 'table')

    def render(self, result: Dict, fmt: str = None) -> str:
        """
        Render a result in one format.

        Args:
            result: Command result dictionary
            fmt: 'table' or 'json' (defaults to the configured format)

        Returns:
            Report content
        """
        fmt = fmt or self.default_format
        self.logger.debug(f"Rendering {result.get('command')} as {fmt}")
        if fmt == 'json':
            return self.json_generator.generate(result)
        if fmt == 'table':
            return self.table_generator.generate(result)
        raise ValueError(f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}")


__all__ = [
    'FORMATS',
    'JSONReportGenerator',
    'ReportOrchestrator',
    'TableReportGenerator',
    'to_json_value',
]
