"""Exception types shared across the package."""

from __future__ import annotations


class PartaspError(Exception):
    """Base class for all package errors."""


class ParseError(PartaspError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.reason = message


class InvalidProgramError(PartaspError):
    """Raised when a program fails grounded validation; carries the issues."""

    def __init__(self, issues):
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = list(issues)


class GroundError(PartaspError):
    def __init__(self, reason: str, rule_text: str):
        super().__init__(f"{reason}: {rule_text}")
        self.reason = reason
        self.rule_text = rule_text


class UnknownAtomError(PartaspError):
    def __init__(self, name: str):
        super().__init__(f"unknown atom: {name}")
        self.name = name


class OddLoopError(PartaspError):
    def __init__(self, cycle_nodes):
        names = " -> ".join(str(n) for n in cycle_nodes)
        super().__init__(f"odd loop over negation on branch: {names}")
        self.cycle_nodes = list(cycle_nodes)


class NoModelError(PartaspError):
    def __init__(self, topic: str):
        super().__init__(f"no model supports topic: {topic}")
        self.topic = topic


class SizeLimitError(PartaspError):
    def __init__(self, atom_count: int, limit: int):
        super().__init__(f"vocabulary of {atom_count} atoms exceeds limit {limit}")
        self.atom_count = atom_count
        self.limit = limit


class UnreachableError(PartaspError):
    def __init__(self, target: str):
        super().__init__(f"no path to atom: {target}")
        self.target = target


class NoIntentError(PartaspError):
    """The utterance matched no known pattern or vocabulary entry."""


class NoTalkingPointError(PartaspError):
    """The topic neighborhood holds no unselected talking point."""
