from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of an exhaustive or sampled check.

    ``violations`` holds one JSON-friendly descriptor per failed instance;
    the report passes exactly when it is empty.
    """

    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    exhaustive: bool = True

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def fail(self, **descriptor):
        self.violations.append(descriptor)

    def merge(self, other):
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.notes.extend(n for n in other.notes if n not in self.notes)
        self.exhaustive = self.exhaustive and other.exhaustive
        return self

    def to_dict(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "violations": self.violations,
            "notes": self.notes,
        }
