"""Seeded random program generator for the solver-vs-oracle checks.

Programs stay inside the solver's contract: odd loops (any cycle with an odd
number of negations) and the headed-constraint idiom are regenerated away.
"""

from __future__ import annotations

import random
import string

from .graph import has_odd_loop
from .syntax import Program, ProgramBuilder
from .validate import validate_grounded

MAX_ATOMS = 12
MAX_RULES = 20
MAX_BODY = 3
NEGATION_PROBABILITY = 0.4


def random_program(
    seed: int,
    max_atoms: int = MAX_ATOMS,
    max_rules: int = MAX_RULES,
    max_body: int = MAX_BODY,
    p_negation: float = NEGATION_PROBABILITY,
    p_constraint: float = 0.15,
    p_fact: float = 0.2,
) -> Program:
    rng = random.Random(seed)
    for attempt in range(1000):
        program = _draw(rng, max_atoms, max_rules, max_body, p_negation, p_constraint, p_fact)
        if validate_grounded(program):
            continue
        if has_odd_loop(program):
            continue
        return program
    raise RuntimeError(f"could not draw an odd-loop-free program for seed {seed}")


def _draw(rng, max_atoms, max_rules, max_body, p_negation, p_constraint, p_fact):
    n_atoms = rng.randint(3, max_atoms)
    names = list(string.ascii_lowercase[:n_atoms])
    n_rules = rng.randint(2, max_rules)
    builder = ProgramBuilder()
    for name in names:
        builder.intern(name)
    for _ in range(n_rules):
        roll = rng.random()
        if roll < p_fact:
            builder.add_rule(rng.choice(names), [])
            continue
        body_len = rng.randint(1, max_body)
        body = [
            (rng.choice(names), rng.random() < p_negation) for _ in range(body_len)
        ]
        if roll < p_fact + p_constraint:
            builder.add_rule(None, body)
        else:
            builder.add_rule(rng.choice(names), body)
    return builder.build()
