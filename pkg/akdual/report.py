"""Run reports: one dict of sections, rendered either as '=' * 80 framed blocks or as a single
YAML document. Both renderings carry the same sections in the same order.
"""

from dataclasses import dataclass, field

import pandas as pd
import yaml

REPORT_FORMAT = "akdual-report"
REPORT_VERSION = 1
RULE = '=' * 80


@dataclass
class RunReport:
    command: str
    sections: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    timings: dict = None

    def add(self, name, value):
        self.sections[name] = value

    def add_check(self, report):
        self.checks[report.name] = report

    @property
    def passed(self):
        if 'passed' in self.sections:
            return self.sections['passed']
        return all(c.passed for c in self.checks.values())

    def as_dict(self):
        d = {'format': REPORT_FORMAT, 'version': REPORT_VERSION, 'command': self.command}
        d.update(self.sections)
        if self.checks:
            d['checks'] = {name: c.as_dict() for name, c in self.checks.items()}
            d['passed'] = self.passed
        if self.timings is not None:
            d['timings'] = {k: round(v, 4) for k, v in self.timings.items()}
        return d


def _dump(value):
    return yaml.safe_dump(value, sort_keys=False, default_flow_style=None, width=100)


def render_human(report):
    blocks = []
    for name, value in report.as_dict().items():
        if name == 'sweep_table':
            body = sweep_table_frame(value).to_string(index=False)
        elif isinstance(value, (dict, list)):
            body = _dump(value).rstrip("\n")
        else:
            body = str(value)
        blocks.append('{0}\n{1}\n{0}\n{2}'.format(RULE, name.upper(), body))
    return "\n".join(blocks) + "\n"


def render_machine(report):
    return _dump(report.as_dict())


def render(report, fmt):
    if fmt == "machine":
        return render_machine(report)
    return render_human(report)


def sweep_table_frame(records):
    """One row per pattern, one boolean column per check."""
    return pd.DataFrame.from_records(records)


def sweep_table_records(rows):
    """DataFrame rows as plain python records for YAML output."""
    return sweep_table_frame(rows).astype(object).to_dict(orient='records')


def write_sweep_csv(rows, path):
    sweep_table_frame(rows).to_csv(path, index=False)
