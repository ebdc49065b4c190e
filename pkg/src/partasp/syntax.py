"""Core syntax objects for grounded propositional programs.

Atoms are interned into dense integer ids so the graph and solver layers can
work with plain ints. Everything here is immutable after construction and
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


@dataclass(frozen=True)
class Atom:
    """An interned propositional symbol, e.g. ``like_movie(john,titanic)``.

    The canonical name has no whitespace and carries only constant arguments.
    Interning is injective: equal names imply equal ids and vice versa.
    """

    name: str
    id: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Literal:
    """An atom with an optional default negation (``not a``)."""

    atom: Atom
    negated: bool = False

    def __str__(self) -> str:
        return f"not {self.atom.name}" if self.negated else self.atom.name


@dataclass(frozen=True)
class Rule:
    """``head :- body.``; ``head is None`` marks a headless constraint.

    A fact is a rule with a head and an empty body. Headless constraints
    always have a non-empty body (the parser enforces this).
    """

    head: Optional[Atom]
    body: tuple[Literal, ...]

    @property
    def is_fact(self) -> bool:
        return self.head is not None and not self.body

    @property
    def is_constraint(self) -> bool:
        return self.head is None

    def __str__(self) -> str:
        body = ", ".join(str(l) for l in self.body)
        if self.head is None:
            return f":- {body}."
        if not self.body:
            return f"{self.head.name}."
        return f"{self.head.name} :- {body}."


@dataclass(frozen=True)
class Program:
    """A grounded program: interned atoms, rules in source order, optional query."""

    atoms: tuple[Atom, ...]
    rules: tuple[Rule, ...]
    query: tuple[Literal, ...] = ()
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {a.name: a for a in self.atoms})

    def atom(self, name: str) -> Optional[Atom]:
        return self._index.get(name)

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    def defined(self, atom: Atom) -> bool:
        """True when the atom appears as some rule head (facts included)."""
        return any(r.head is not None and r.head.id == atom.id for r in self.rules)

    def head_atoms(self) -> set[int]:
        return {r.head.id for r in self.rules if r.head is not None}

    def fact_atoms(self) -> set[int]:
        return {r.head.id for r in self.rules if r.is_fact}

    def constraints(self) -> list[Rule]:
        return [r for r in self.rules if r.is_constraint]

    def pretty(self) -> str:
        """Canonical text form; re-parsing it reproduces this program."""
        lines = [str(r) for r in self.rules]
        if self.query:
            lines.append("?- " + ", ".join(str(l) for l in self.query) + ".")
        return "\n".join(lines) + ("\n" if lines else "")

    def with_query_constraints(self, query: Iterable[Literal]) -> "Program":
        """Return a program extended with one constraint per query literal.

        A positive query literal ``q`` adds ``:- not q.`` and a negated one
        adds ``:- q.``, so every literal of the conjunction becomes required.
        """
        extra = tuple(
            Rule(head=None, body=(Literal(l.atom, negated=not l.negated),))
            for l in query
        )
        return Program(atoms=self.atoms, rules=self.rules + extra, query=tuple(query))

    def structure(self):
        """Name-level shape used by structural-equality tests."""
        return (
            tuple(
                (
                    r.head.name if r.head else None,
                    tuple((l.atom.name, l.negated) for l in r.body),
                )
                for r in self.rules
            ),
            tuple((l.atom.name, l.negated) for l in self.query),
        )


class ProgramBuilder:
    """Mutable helper that interns atoms and accumulates rules."""

    def __init__(self):
        self._atoms: list[Atom] = []
        self._by_name: dict[str, Atom] = {}
        self._rules: list[Rule] = []
        self._query: list[Literal] = []

    def intern(self, name: str) -> Atom:
        atom = self._by_name.get(name)
        if atom is None:
            atom = Atom(name=name, id=len(self._atoms))
            self._atoms.append(atom)
            self._by_name[name] = atom
        return atom

    def add_rule(self, head: Optional[str], body: Iterable[tuple[str, bool]]) -> None:
        head_atom = self.intern(head) if head is not None else None
        literals: list[Literal] = []
        seen: set[tuple[str, bool]] = set()
        for name, negated in body:
            key = (name, negated)
            if key in seen:  # duplicate body literals are dropped
                continue
            seen.add(key)
            literals.append(Literal(self.intern(name), negated))
        self._rules.append(Rule(head=head_atom, body=tuple(literals)))

    def set_query(self, literals: Iterable[tuple[str, bool]]) -> None:
        self._query = [Literal(self.intern(n), neg) for n, neg in literals]

    def build(self) -> Program:
        return Program(
            atoms=tuple(self._atoms),
            rules=tuple(self._rules),
            query=tuple(self._query),
        )
