"""Movie knowledge base: fact base plus schematic commonsense rules.

The KB grounds per user on demand: the movie-domain facts, the profile
facts of that single user, and the session's dynamic facts (stated likes,
``already_talked`` records) feed the grounder together. Grounded programs
are cached per (user, dynamic facts) and the cache invalidates itself
whenever the dynamic facts change, since they are part of the key.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Optional

from ..errors import GroundError
from ..grounding import NonGroundRule, atom_struct, ground
from ..parser import parse_program, parse_schematic
from ..syntax import Program, Rule

KB_DIR_ENV = "DISCASP_KB_DIR"

# Predicates whose first argument names a person; they are filtered to the
# session user when grounding.
PERSON_PREDICATES = {
    "age_category",
    "gender",
    "prefers_person_talk",
    "like_movie",
    "like_actor",
    "already_talked",
}


@dataclass
class MovieKB:
    facts: Program
    rules: list[NonGroundRule]
    facts_path: Optional[str] = None
    rules_path: Optional[str] = None
    _cache: dict = field(default_factory=dict, repr=False)
    _fact_names: Optional[frozenset] = field(default=None, repr=False)

    def fact_names(self) -> frozenset:
        if self._fact_names is None:
            self._fact_names = frozenset(
                r.head.name for r in self.facts.rules if r.is_fact
            )
        return self._fact_names

    def movie_titles(self) -> list[str]:
        return sorted(
            atom_struct(r.head.name).args[0].text
            for r in self.facts.rules
            if r.is_fact and r.head.name.startswith("movie(")
        )

    def actor_names(self) -> list[str]:
        return sorted(
            atom_struct(r.head.name).args[0].text
            for r in self.facts.rules
            if r.is_fact and atom_struct(r.head.name).pred == "actor"
        )

    def adult_titles(self) -> list[str]:
        return sorted(
            atom_struct(r.head.name).args[0].text
            for r in self.facts.rules
            if r.is_fact and atom_struct(r.head.name).pred == "is_adult_movie"
        )

    def _base_facts_for(self, user: str) -> list[Rule]:
        keep: list[Rule] = []
        for rule in self.facts.rules:
            if not rule.is_fact:
                continue
            struct = atom_struct(rule.head.name)
            if struct.pred in PERSON_PREDICATES:
                if struct.args and struct.args[0].text == user:
                    keep.append(rule)
            else:
                keep.append(rule)
        return keep

    def ground_for_user(
        self, user: str, dynamic_facts: Iterable[str] = ()
    ) -> Program:
        """Grounded propositional program for one user's session state."""
        dynamic = tuple(dict.fromkeys(dynamic_facts))  # de-dup, keep order
        key = (user, dynamic)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        fact_text = "".join(f"{name}.\n" for name in dynamic)
        dynamic_rules = parse_program(fact_text).rules if fact_text else ()
        program = ground(self.rules, self._base_facts_for(user) + list(dynamic_rules))
        self._cache[key] = program
        return program


def grounded_rule_count(program: Program) -> int:
    """Number of grounded rule instances, facts excluded."""
    return sum(1 for r in program.rules if not r.is_fact)


def load_kb(facts_path: str, rules_path: str) -> MovieKB:
    with open(facts_path, "r", encoding="utf-8") as fh:
        facts = parse_program(fh.read())
    for rule in facts.rules:
        if not rule.is_fact:
            raise GroundError("fact file may contain facts only", str(rule))
    with open(rules_path, "r", encoding="utf-8") as fh:
        rules = parse_schematic(fh.read())
    return MovieKB(
        facts=facts, rules=rules, facts_path=facts_path, rules_path=rules_path
    )


def bundled_kb() -> MovieKB:
    """The packaged synthetic movie KB, overridable via DISCASP_KB_DIR."""
    kb_dir = os.environ.get(KB_DIR_ENV)
    if kb_dir:
        return load_kb(
            os.path.join(kb_dir, "movies.lp"), os.path.join(kb_dir, "rules.lp")
        )
    data = resources.files("partasp").joinpath("data")
    facts = parse_program(data.joinpath("movies.lp").read_text(encoding="utf-8"))
    rules = parse_schematic(data.joinpath("rules.lp").read_text(encoding="utf-8"))
    return MovieKB(facts=facts, rules=rules)
