"""Outcome records for universally quantified statements checked on one structure."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
COUNTEREXAMPLE = "counterexample"
VACUOUS = "vacuous"
ERROR = "error"

# witnesses kept per result; hypothesis_count is always exact
MAX_WITNESSES = 5


@dataclass
class TheoremResult:
    theorem_id: str
    structure: str
    expansion: str
    outcome: str
    hypothesis_count: int
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theoremId": self.theorem_id,
            "structure": self.structure,
            "expansion": self.expansion,
            "outcome": self.outcome,
            "hypothesisCount": self.hypothesis_count,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }


class Tally:
    """Accumulates bindings of one statement: how many met the hypothesis, which failed."""

    def __init__(self, theorem_id: str, structure: str, expansion: str):
        self.theorem_id = theorem_id
        self.structure = structure
        self.expansion = expansion
        self.hypothesis_count = 0
        self.failures = 0
        self.witnesses: list = []
        self.notes: list[str] = []

    def check(self, conclusion: bool, witness) -> bool:
        """Record one binding whose hypothesis holds."""
        self.hypothesis_count += 1
        if not conclusion:
            self.failures += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)
        return conclusion

    def check_many(self, conclusion: bool, witness, weight: int) -> bool:
        """Record ``weight`` bindings that share one outcome and one witness."""
        self.check(conclusion, witness)
        self.hypothesis_count += weight - 1
        if not conclusion:
            self.failures += weight - 1
        return conclusion

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def result(self) -> TheoremResult:
        if self.failures:
            outcome = COUNTEREXAMPLE
        elif self.hypothesis_count == 0:
            outcome = VACUOUS
        else:
            outcome = PASS
        return TheoremResult(self.theorem_id, self.structure, self.expansion, outcome,
                             self.hypothesis_count, self.witnesses, self.notes)
