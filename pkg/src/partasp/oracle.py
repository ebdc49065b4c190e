"""Brute-force stable-model machinery used as the ground-truth test oracle.

Candidates are enumerated as bitmasks over the atom vocabulary; each is
stable when it equals the least model of its own reduct and violates no
headless constraint. Deliberately simple and independent of the solver.
"""

from __future__ import annotations

from typing import Iterable

from .errors import SizeLimitError
from .solver import PartialModel
from .syntax import Program, ProgramBuilder

DEFAULT_ATOM_LIMIT = 20

TotalModel = frozenset  # frozenset of true atom names; all others are False


def gl_reduct(program: Program, model: Iterable[str]) -> Program:
    """The reduct of the program with respect to a candidate total model.

    Rules with a negated body literal whose atom is in the model are dropped;
    remaining rules lose their negated literals. Headless constraints are
    excluded here and checked separately against the candidate.
    """
    true_names = set(model)
    builder = ProgramBuilder()
    for atom in program.atoms:
        builder.intern(atom.name)
    for rule in program.rules:
        if rule.head is None:
            continue
        blocked = any(l.negated and l.atom.name in true_names for l in rule.body)
        if blocked:
            continue
        body = [(l.atom.name, False) for l in rule.body if not l.negated]
        builder.add_rule(rule.head.name, body)
    return builder.build()


def least_model(program: Program) -> TotalModel:
    """Least fixpoint of one-step derivation; requires a negation-free program."""
    for rule in program.rules:
        if any(l.negated for l in rule.body):
            raise ValueError("least_model expects a negation-free program")
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for rule in program.rules:
            if rule.head is None or rule.head.name in derived:
                continue
            if all(l.atom.name in derived for l in rule.body):
                derived.add(rule.head.name)
                changed = True
    return frozenset(derived)


def _violates_constraints(rules, mask: int) -> bool:
    for pos_mask, neg_mask in rules:
        if (pos_mask & mask) == pos_mask and (neg_mask & mask) == 0:
            return True
    return False


def enumerate_stable_models(
    program: Program, atom_limit: int = DEFAULT_ATOM_LIMIT
) -> set[TotalModel]:
    """All stable models of the program, by exhaustive candidate checking."""
    n = program.atom_count
    if n > atom_limit:
        raise SizeLimitError(n, atom_limit)

    # Bitmask compilation: rules as (head_bit, pos_mask, neg_mask).
    derivation = []
    constraints = []
    for rule in program.rules:
        pos_mask = 0
        neg_mask = 0
        for literal in rule.body:
            bit = 1 << literal.atom.id
            if literal.negated:
                neg_mask |= bit
            else:
                pos_mask |= bit
        if rule.head is None:
            constraints.append((pos_mask, neg_mask))
        else:
            derivation.append((1 << rule.head.id, pos_mask, neg_mask))

    stable: set[TotalModel] = set()
    names = [a.name for a in program.atoms]
    for mask in range(1 << n):
        if _violates_constraints(constraints, mask):
            continue
        active = [
            (head, pos)
            for head, pos, neg in derivation
            if (neg & mask) == 0
        ]
        derived = 0
        changed = True
        while changed:
            changed = False
            for head, pos in active:
                if (derived & head) == 0 and (pos & derived) == pos:
                    derived |= head
                    changed = True
        if derived == mask:
            stable.add(frozenset(names[i] for i in range(n) if mask & (1 << i)))
    return stable


def is_subset_of_some_stable(
    program: Program,
    model: PartialModel,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
    stable: set[TotalModel] | None = None,
) -> bool:
    """True when some stable model agrees with every assignment in ``model``.

    ``stable`` can carry a precomputed enumeration to amortize repeated
    checks against one program.
    """
    if stable is None:
        stable = enumerate_stable_models(program, atom_limit)
    trues = model.true_atoms
    falses = model.false_atoms
    return any(trues <= s and not (falses & s) for s in stable)
