from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one verification: how many cases were examined and which ones failed.

    Failures are plain dicts so they serialize straight into reports.
    """
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return len(self.failures) == 0

    def fail(self, **entry):
        self.failures.append(entry)

    def as_dict(self):
        d = {'passed': self.passed, 'checked': self.checked, 'failures': self.failures}
        if self.notes:
            d['notes'] = self.notes
        return d
