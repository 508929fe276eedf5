"""
HTML Report Generator for verification and selftest runs
Collects result rows, renders them as Markdown and converts to HTML
"""

import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

import markdown

from ..config import get_config

logger = logging.getLogger(__name__)

REPORT_STYLE = """
body { font-family: -apple-system, Segoe UI, Helvetica, Arial, sans-serif; margin: 2em; color: #222; }
table { border-collapse: collapse; margin: 1em 0; }
th, td { border: 1px solid #ccc; padding: 0.3em 0.8em; text-align: left; }
th { background: #f3f3f3; }
code, pre { background: #f6f8fa; }
.passed { color: #1a7f37; }
.failed { color: #cf222e; }
"""


class ReportGenerator:
    """Generate HTML reports for identity verification and selftest runs"""

    def __init__(self, title: str, output_dir: Optional[str] = None):
        self.title = title
        self.output_dir = output_dir or get_config().report_folder
        self.sections: List[Dict[str, Any]] = []
        self.start_time = datetime.now()
        self.config_info = get_config().to_dict()

    def add_result(self, name: str, passed: bool, rows: List[Dict[str, Any]], details: str = "") -> None:
        """Add a result section; rows become a Markdown table."""
        self.sections.append({
            'name': name,
            'passed': passed,
            'rows': rows,
            'details': details,
            'timestamp': datetime.now().isoformat(),
        })

    @property
    def passed(self) -> bool:
        return all(section['passed'] for section in self.sections)

    def generate_markdown(self) -> str:
        duration = (datetime.now() - self.start_time).total_seconds()
        verdict = "PASSED" if self.passed else "FAILED"
        lines = [
            f"# {self.title}",
            "",
            f"Generated {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} in {duration:.2f} s. "
            f"Overall result: **{verdict}**.",
            "",
        ]

        for section in self.sections:
            status = "passed" if section['passed'] else "failed"
            lines.append(f"## {section['name']} <span class=\"{status}\">({status})</span>")
            lines.append("")
            if section['rows']:
                headers = list(section['rows'][0])
                lines.append("| " + " | ".join(headers) + " |")
                lines.append("| " + " | ".join("---" for _ in headers) + " |")
                for row in section['rows']:
                    lines.append("| " + " | ".join(self._cell(row.get(h)) for h in headers) + " |")
                lines.append("")
            if section['details']:
                lines.extend(["```", section['details'], "```", ""])

        lines.extend(["## Configuration", "", "| setting | value |", "| --- | --- |"])
        for key, value in self.config_info.items():
            lines.append(f"| {key} | {self._cell(value)} |")
        return "\n".join(lines) + "\n"

    def generate_html_report(self) -> str:
        body = markdown.markdown(self.generate_markdown(), extensions=['tables', 'fenced_code'])
        return (
            "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
            f"<title>{self.title}</title>\n<style>{REPORT_STYLE}</style>\n</head>\n"
            f"<body>\n{body}\n</body>\n</html>\n"
        )

    def save_report(self, filename: Optional[str] = None) -> str:
        """Write the HTML report; returns the path written."""
        if filename is None:
            stamp = self.start_time.strftime('%Y%m%d_%H%M%S')
            slug = "".join(c if c.isalnum() else "_" for c in self.title.lower()).strip("_")
            filename = os.path.join(self.output_dir, f"{slug}_{stamp}.html")

        directory = os.path.dirname(filename)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(filename, 'w', encoding='utf-8') as f:
            f.write(self.generate_html_report())
        logger.info(f"Report saved: {filename}")
        return filename

    @staticmethod
    def _cell(value: Any) -> str:
        if value is None:
            return ""
        return str(value).replace("|", "\\|").replace("\n", " ")
