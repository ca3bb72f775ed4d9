"""Pass/fail reports produced by the axiom verifiers."""
from dataclasses import dataclass, field


@dataclass
class Counterexample:
    inputs: str
    lhs: str
    rhs: str

    def to_json(self):
        return {"inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class LawResult:
    name: str
    checked: int = 0
    counterexample: Counterexample = None

    @property
    def passed(self):
        return self.counterexample is None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.checked} cases)"
        if not self.passed:
            c = self.counterexample
            text += f"\n    at {c.inputs}\n    lhs = {c.lhs}\n    rhs = {c.rhs}"
        return text

    def to_json(self):
        out = {"law": self.name, "passed": self.passed, "checked": self.checked}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out


@dataclass
class Report:
    suite: str
    max_degree: int
    laws: list = field(default_factory=list)

    @property
    def passed(self):
        return all(law.passed for law in self.laws)

    def law(self, name):
        for item in self.laws:
            if item.name == name:
                return item
        raise KeyError(name)

    def check(self, name, inputs, lhs, rhs, render):
        """Record one comparison; keep only the first failure per law."""
        try:
            law = self.law(name)
        except KeyError:
            law = LawResult(name)
            self.laws.append(law)
        law.checked += 1
        if law.counterexample is None and lhs != rhs:
            law.counterexample = Counterexample(inputs, render(lhs), render(rhs))
        return lhs == rhs

    def format(self):
        lines = [f"suite {self.suite}, max degree {self.max_degree}"]
        lines.extend(law.line() for law in self.laws)
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)

    def to_json(self):
        return {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "laws": [law.to_json() for law in self.laws],
        }
