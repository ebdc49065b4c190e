"""Schematic rules and the substitution grounder.

The grounder is deliberately small: function-free, arithmetic-free and
aggregate-free rules, with ``!=`` guards between terms evaluated at ground
time. Substitutions are drawn from the facts plus every head instance that
becomes derivable when negation is ignored, which keeps the output finite
and mirrors what a standard grounder would emit for this fragment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import GroundError
from .syntax import Program, ProgramBuilder, Rule

_NAME_RE = re.compile(r"^([a-z_][a-zA-Z0-9_]*)(?:\((.*)\))?$")


@dataclass(frozen=True)
class Const:
    text: str

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Const, Var]


@dataclass(frozen=True)
class Struct:
    """A predicate with constant or variable arguments."""

    pred: str
    args: tuple[Term, ...] = ()

    def render(self) -> str:
        if not self.args:
            return self.pred
        return f"{self.pred}({','.join(str(a) for a in self.args)})"

    def variables(self) -> set[str]:
        return {a.name for a in self.args if isinstance(a, Var)}

    def substitute(self, binding: dict[str, str]) -> "Struct":
        args = tuple(
            Const(binding[a.name]) if isinstance(a, Var) else a for a in self.args
        )
        return Struct(self.pred, args)


@dataclass(frozen=True)
class SchematicLiteral:
    struct: Struct
    negated: bool = False

    def __str__(self) -> str:
        text = self.struct.render()
        return f"not {text}" if self.negated else text


@dataclass(frozen=True)
class Guard:
    """An inequality ``left != right`` checked once both sides are bound."""

    left: Term
    right: Term

    def __str__(self) -> str:
        return f"{self.left} != {self.right}"


@dataclass(frozen=True)
class NonGroundRule:
    head: Optional[Struct]
    body: tuple[SchematicLiteral, ...] = ()
    guards: tuple[Guard, ...] = ()

    def __str__(self) -> str:
        parts = [str(l) for l in self.body] + [str(g) for g in self.guards]
        if self.head is None:
            return f":- {', '.join(parts)}."
        if not parts:
            return f"{self.head.render()}."
        return f"{self.head.render()} :- {', '.join(parts)}."

    def safety_violations(self) -> list[str]:
        """Variables of the head, negated literals or guards must occur positively."""
        bound: set[str] = set()
        for lit in self.body:
            if not lit.negated:
                bound |= lit.struct.variables()
        unsafe: set[str] = set()
        if self.head is not None:
            unsafe |= self.head.variables() - bound
        for lit in self.body:
            if lit.negated:
                unsafe |= lit.struct.variables() - bound
        for g in self.guards:
            for t in (g.left, g.right):
                if isinstance(t, Var) and t.name not in bound:
                    unsafe.add(t.name)
        return sorted(unsafe)


def atom_struct(name: str) -> Struct:
    """Parse a canonical atom name back into its predicate/argument shape."""
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError(f"not a canonical atom name: {name!r}")
    pred, args = m.group(1), m.group(2)
    if args is None:
        return Struct(pred)
    return Struct(pred, tuple(Const(a) for a in args.split(",")))


def _match(struct: Struct, ground: tuple[str, ...], binding: dict[str, str]):
    """Extend ``binding`` so ``struct`` matches the ground argument tuple."""
    if len(struct.args) != len(ground):
        return None
    fresh: list[tuple[str, str]] = []
    for term, value in zip(struct.args, ground):
        if isinstance(term, Const):
            if term.text != value:
                return None
        else:
            bound = binding.get(term.name)
            if bound is None:
                fresh.append((term.name, value))
            elif bound != value:
                return None
    new = dict(binding)
    for name, value in fresh:
        current = new.get(name)
        if current is None:
            new[name] = value
        elif current != value:  # same variable twice in this literal
            return None
    return new


class _CandidateIndex:
    """Possible ground atoms per predicate with per-argument value indexes."""

    def __init__(self):
        self.by_pred: dict[str, list[tuple[str, ...]]] = {}
        self.by_value: dict[tuple[str, int, str], list[tuple[str, ...]]] = {}
        self.seen: set[tuple[str, tuple[str, ...]]] = set()
        self.versions: dict[str, int] = {}

    def add(self, struct: Struct) -> bool:
        args = tuple(t.text for t in struct.args)  # all Const once grounded
        key = (struct.pred, args)
        if key in self.seen:
            return False
        self.seen.add(key)
        self.by_pred.setdefault(struct.pred, []).append(args)
        for pos, value in enumerate(args):
            self.by_value.setdefault((struct.pred, pos, value), []).append(args)
        self.versions[struct.pred] = self.versions.get(struct.pred, 0) + 1
        return True

    def candidates(self, struct: Struct, binding: dict[str, str]):
        """Shortest candidate list given the already-bound arguments."""
        best = self.by_pred.get(struct.pred, [])
        for pos, term in enumerate(struct.args):
            if isinstance(term, Const):
                value = term.text
            else:
                value = binding.get(term.name)
                if value is None:
                    continue
            narrowed = self.by_value.get((struct.pred, pos, value), [])
            if len(narrowed) < len(best):
                best = narrowed
        return best


def _rule_instances(rule: NonGroundRule, index: _CandidateIndex):
    """All substitutions whose positive body atoms are possible, in sorted order."""
    positives = [l.struct for l in rule.body if not l.negated]
    bindings = [dict()]
    for struct in positives:
        nxt = []
        for binding in bindings:
            for args in index.candidates(struct, binding):
                extended = _match(struct, args, binding)
                if extended is not None:
                    nxt.append(extended)
        bindings = nxt
        if not bindings:
            return []
    out = []
    for binding in bindings:
        ok = True
        for g in rule.guards:
            left = binding[g.left.name] if isinstance(g.left, Var) else g.left.text
            right = binding[g.right.name] if isinstance(g.right, Var) else g.right.text
            if left == right:
                ok = False
                break
        if ok:
            out.append(binding)
    out.sort(key=lambda b: tuple(sorted(b.items())))
    return out


def ground(rules: Iterable[NonGroundRule], facts: Iterable[Rule]) -> Program:
    """Ground schematic rules against a fact base into a propositional program.

    Output order is deterministic: facts first in input order, then per input
    rule its instances in lexicographic substitution order. Raises
    :class:`GroundError` on a safety violation.
    """
    rules = list(rules)
    facts = list(facts)
    for r in rules:
        unsafe = r.safety_violations()
        if unsafe:
            raise GroundError(
                f"safety violation, unbound variables {', '.join(unsafe)}", str(r)
            )

    index = _CandidateIndex()
    for f in facts:
        if f.head is None or f.body:
            raise GroundError("fact base may contain facts only", str(f))
        index.add(atom_struct(f.head.name))

    # Fixpoint over derivable heads; a rule re-joins only when one of its
    # positive body predicates gained candidates since its last join. At the
    # fixpoint every cached join is current, so emission reuses it.
    joined_at: list[dict[str, int]] = [dict() for _ in rules]
    last_join: list[list[dict[str, str]]] = [[] for _ in rules]
    changed = True
    while changed:
        changed = False
        for ri, rule in enumerate(rules):
            if rule.head is None:
                continue
            preds = {l.struct.pred for l in rule.body if not l.negated}
            current = {p: index.versions.get(p, 0) for p in preds}
            if current == joined_at[ri]:
                continue
            joined_at[ri] = current
            last_join[ri] = _rule_instances(rule, index)
            for binding in last_join[ri]:
                if index.add(rule.head.substitute(binding)):
                    changed = True

    builder = ProgramBuilder()
    for f in facts:
        builder.add_rule(f.head.name, [])
    emitted: set[tuple] = set()
    for ri, rule in enumerate(rules):
        bindings = last_join[ri] if rule.head is not None else _rule_instances(rule, index)
        for binding in bindings:
            head = rule.head.substitute(binding).render() if rule.head else None
            body = tuple(
                (l.struct.substitute(binding).render(), l.negated) for l in rule.body
            )
            key = (head, body)
            if key in emitted:
                continue
            emitted.add(key)
            builder.add_rule(head, body)
    return builder.build()


def rules_as_nonground(program: Program) -> list[NonGroundRule]:
    """View a grounded program's non-fact rules as variable-free schematic rules."""
    out = []
    for r in program.rules:
        if r.is_fact:
            continue
        head = atom_struct(r.head.name) if r.head is not None else None
        body = tuple(
            SchematicLiteral(atom_struct(l.atom.name), l.negated) for l in r.body
        )
        out.append(NonGroundRule(head=head, body=body))
    return out
