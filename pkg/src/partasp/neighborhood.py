"""Topic neighborhoods: the part of a partial model within a graph radius.

The distance metric is the one exposed by :func:`partasp.graph.atom_distances`:
undirected shortest path over atom nodes, one unit per rule traversal,
conjunction helper nodes transparent. It is a deliberate, documented choice;
callers needing another metric can filter a model against their own distance
map with :func:`restrict_model`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NoModelError, UnknownAtomError, UnreachableError
from .graph import DepGraph, atom_distances, dependency_graph
from .solver import PartialModel, solve
from .syntax import Program


@dataclass(frozen=True)
class Member:
    atom: str
    value: bool
    distance: Optional[int]  # None only under an unlimited radius

    def to_json_dict(self) -> dict:
        return {"atom": self.atom, "value": self.value, "distance": self.distance}


@dataclass(frozen=True)
class NeighborhoodResult:
    """Atoms of a partial model within ``radius`` of the topic atom."""

    topic: str
    radius: Optional[int]
    members: tuple[Member, ...]
    model: PartialModel

    def member_atoms(self) -> frozenset[str]:
        return frozenset(m.atom for m in self.members)

    def true_members(self, prefix: str = "") -> list[Member]:
        return [m for m in self.members if m.value and m.atom.startswith(prefix)]

    def to_json_dict(self) -> dict:
        return {
            "topic": self.topic,
            "radius": self.radius,
            "members": [m.to_json_dict() for m in self.members],
        }


@dataclass(frozen=True)
class PathStep:
    rule_index: int
    from_atom: str
    to_atom: str
    negated: bool

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule_index,
            "from": self.from_atom,
            "to": self.to_atom,
            "sign": "negative" if self.negated else "positive",
        }


@dataclass(frozen=True)
class ExplanationPath:
    """Rule-level chain from the topic to a target atom.

    Consecutive steps share an endpoint; an empty path means topic == target.
    """

    steps: tuple[PathStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def to_json_dict(self) -> list:
        return [s.to_json_dict() for s in self.steps]


def restrict_model(
    model: PartialModel,
    distances: dict,
    radius: Optional[int],
) -> tuple[Member, ...]:
    """Filter a model to members within the radius; None means no filter."""
    by_name = {atom.name: d for atom, d in distances.items()}
    members = []
    for name, value in model.items:
        d = by_name.get(name)
        if radius is None or (d is not None and d <= radius):
            members.append(Member(atom=name, value=value, distance=d))
    members.sort(key=lambda m: (m.distance if m.distance is not None else -1, m.atom))
    return tuple(members)


def relevant_concepts(
    program: Program,
    topic: str,
    radius: Optional[int],
    model_index: int = 0,
) -> NeighborhoodResult:
    """Solve for the topic and keep the model atoms within the radius.

    Uses the first model in the solver's deterministic order by default.
    Raises :class:`NoModelError` when the topic cannot be True and
    :class:`UnknownAtomError` when it is outside the vocabulary.
    """
    atom = program.atom(topic)
    if atom is None:
        raise UnknownAtomError(topic)
    if radius is not None and radius < 0:
        raise ValueError("radius must be non-negative")
    models = solve(program, [(topic, False)])
    if not models:
        raise NoModelError(topic)
    model = models[model_index]
    graph = dependency_graph(program)
    distances = atom_distances(graph, atom)
    members = restrict_model(model, distances, radius)
    return NeighborhoodResult(
        topic=topic, radius=radius, members=members, model=model
    )


def extract_path(graph: DepGraph, topic: str, target: str) -> ExplanationPath:
    """One shortest rule-level path from topic to target.

    Ties break toward the smallest rule index. Raises
    :class:`UnreachableError` when the target is in another component.
    """
    program = graph.program
    topic_atom = program.atom(topic)
    target_atom = program.atom(target)
    if topic_atom is None:
        raise UnknownAtomError(topic)
    if target_atom is None:
        raise UnknownAtomError(target)
    if topic_atom.id == target_atom.id:
        return ExplanationPath(steps=())

    # Neighbor map: (atom -> [(other_atom, rule_index, literal_negated)]).
    neighbors: dict[int, list[tuple[int, int, bool]]] = {}
    for idx, rule in enumerate(program.rules):
        if rule.head is None:
            continue
        h = rule.head.id
        for lit in rule.body:
            neighbors.setdefault(h, []).append((lit.atom.id, idx, lit.negated))
            neighbors.setdefault(lit.atom.id, []).append((h, idx, lit.negated))
    for lst in neighbors.values():
        lst.sort(key=lambda t: (t[1], t[0]))

    parent: dict[int, tuple[int, int, bool]] = {}
    seen = {topic_atom.id}
    frontier = [topic_atom.id]
    while frontier and target_atom.id not in seen:
        nxt = []
        for node in frontier:
            for other, rule_idx, negated in neighbors.get(node, ()):
                if other in seen:
                    continue
                seen.add(other)
                parent[other] = (node, rule_idx, negated)
                nxt.append(other)
        frontier = nxt
    if target_atom.id not in seen:
        raise UnreachableError(target)

    steps: list[PathStep] = []
    node = target_atom.id
    while node != topic_atom.id:
        prev, rule_idx, negated = parent[node]
        steps.append(
            PathStep(
                rule_index=rule_idx,
                from_atom=program.atoms[prev].name,
                to_atom=program.atoms[node].name,
                negated=negated,
            )
        )
        node = prev
    steps.reverse()
    return ExplanationPath(steps=tuple(steps))


def render_explanation(
    path: ExplanationPath, templates: Optional[dict] = None
) -> str:
    """Deterministic clause chain for a path; empty path renders empty.

    ``templates`` maps a predicate name to a format string receiving
    ``from_atom``, ``to_atom`` and the target atom's arguments as ``args``.
    Unknown predicates fall back to a generic connective.
    """
    templates = templates or {}
    clauses = []
    for step in path.steps:
        pred = step.to_atom.split("(", 1)[0]
        args: list[str] = []
        if "(" in step.to_atom:
            args = step.to_atom[step.to_atom.index("(") + 1 : -1].split(",")
        template = templates.get(pred)
        if template is None:
            clauses.append(f"{step.to_atom} relates to {step.from_atom}")
        else:
            clauses.append(
                template.format(from_atom=step.from_atom, to_atom=step.to_atom, args=args)
            )
    return "; ".join(clauses)
