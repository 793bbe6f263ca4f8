import time
from dataclasses import dataclass, field

import pandas as pd


@dataclass
class VerificationReport:
    """
    Outcome of a verification sweep

    Parameters
    ----------
    name : str
        Name of the property that was checked

    checked : int
        Number of instances examined

    violations : pd.DataFrame
        One row per counterexample; empty when the property holds

    elapsed : float
        Wall-clock seconds spent in the sweep

    params : dict
        The parameters the sweep ran with
    """

    name: str
    checked: int = 0
    violations: pd.DataFrame = field(default_factory=pd.DataFrame)
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.violations) == 0

    @property
    def n_violations(self) -> int:
        return len(self.violations)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": self.violations.astype(str).to_dict(orient="records"),
            "elapsed": round(self.elapsed, 6),
            "params": {k: str(v) for k, v in self.params.items()},
            "notes": list(self.notes),
        }

    def __repr__(self):
        repr_str = ""
        repr_str += "Module: lyndonloop"
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Verification: {0}".format(self.name)
        repr_str += "\n"
        repr_str += "Parameters: {0}".format(
            ", ".join("{0}={1}".format(k, v) for k, v in self.params.items()) or "-"
        )
        repr_str += "\n"
        repr_str += "\n"

        repr_str += "Checked: {0}".format(self.checked)
        repr_str += "\n"
        repr_str += "Violations: {0}".format(self.n_violations)
        repr_str += "\n"
        repr_str += "Elapsed: {0:.3f}s".format(self.elapsed)
        repr_str += "\n"
        repr_str += "Result: {0}".format("PASS" if self.passed else "FAIL")
        repr_str += "\n"

        for note in self.notes:
            repr_str += "Note: {0}".format(note)
            repr_str += "\n"

        if not self.passed:
            repr_str += "\n"
            repr_str += self.violations.head(10).to_string(index=False)
            repr_str += "\n"

        return repr_str

    def __str__(self):
        return self.__repr__()


class ReportBuilder:
    """Collects checks and counterexamples, then produces a `VerificationReport`"""

    def __init__(self, name: str, **params):
        self.name = name
        self.params = params
        self.checked = 0
        self.rows = []
        self.notes = []
        self._start = time.perf_counter()

    def check(self, ok: bool, **row) -> bool:
        self.checked += 1
        if not ok:
            self.rows.append(row)
        return ok

    def violation(self, **row):
        self.rows.append(row)

    def note(self, text: str):
        self.notes.append(text)

    def absorb(self, report: "VerificationReport"):
        self.checked += report.checked
        if not report.passed:
            for row in report.violations.to_dict(orient="records"):
                row.setdefault("suite", report.name)
                self.rows.append(row)
        self.notes.extend(report.notes)

    def finish(self) -> VerificationReport:
        return VerificationReport(
            name=self.name,
            checked=self.checked,
            violations=pd.DataFrame(self.rows),
            elapsed=time.perf_counter() - self._start,
            params=dict(self.params),
            notes=list(self.notes),
        )
