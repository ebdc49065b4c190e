"""Grounded-program validation ahead of graph construction."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidProgramError
from .syntax import Program, Rule


@dataclass(frozen=True)
class ValidationIssue:
    category: str
    rule_index: int
    rule: Rule
    message: str

    def __str__(self) -> str:
        return f"rule {self.rule_index}: {self.message} [{self.category}]"


def validate_grounded(program: Program) -> list[ValidationIssue]:
    """Check a parsed program is solvable; an empty list means ok.

    The one structural rejection is the headed-constraint idiom: a rule whose
    head recurs negated in its own all-negative body (``p :- not q, not p.``).
    That shape is a constraint written through an odd self-loop, and only
    headless constraints are supported. A rule with at least one positive
    body literal keeps its head's self-negation as an ordinary (runtime
    detected) loop and passes validation.
    """
    issues: list[ValidationIssue] = []
    for idx, rule in enumerate(program.rules):
        if rule.head is None:
            continue
        has_positive = any(not l.negated for l in rule.body)
        self_negated = any(
            l.negated and l.atom.id == rule.head.id for l in rule.body
        )
        if self_negated and not has_positive:
            issues.append(
                ValidationIssue(
                    category="self-negating-head",
                    rule_index=idx,
                    rule=rule,
                    message=(
                        f"head {rule.head.name!r} appears negated in its own "
                        "all-negative body; write a headless constraint instead"
                    ),
                )
            )
    return issues


def ensure_valid(program: Program) -> Program:
    issues = validate_grounded(program)
    if issues:
        raise InvalidProgramError(issues)
    return program
