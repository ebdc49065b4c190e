"""Dependency graphs with explicit conjunction nodes.

A program first becomes a conjunction graph: one node per atom, one helper
conjunction node per rule whose body has two or more literals, and a single
constraint-root node (fixed truth value False) that every headless
constraint feeds. Edges carry the literal signs as written.

Converting to the dependency graph flips the sign of every edge incident to
a conjunction node (a conjunction becomes a disjunction over negations), so
ordinary dependency-graph reasoning applies: a node is True exactly when
some in-edge is effective, False when none is. Conjunction nodes are helper
nodes only and never appear in reported models.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .errors import UnknownAtomError
from .syntax import Atom, Literal, Program

ATOM = "atom"
CONJ = "conj"
ROOT = "constraint_root"


@dataclass(frozen=True)
class SignedEdge:
    """Directed edge; ``positive`` is the dependency-graph sign.

    ``literal_negated`` preserves the sign of the source body literal as it
    was written in the rule (None for conjunction-to-head edges), which loop
    classification needs after the conjunction flip obscures it.
    """

    src: int
    dst: int
    positive: bool
    rule_index: int
    literal_negated: Optional[bool]


class LoopKind(Enum):
    EVEN = "even"
    POSITIVE = "positive"
    ODD = "odd"


@dataclass(frozen=True)
class LoopClass:
    kind: LoopKind
    cycle: tuple[int, ...]
    negative_literals: int


@dataclass(frozen=True)
class DepGraph:
    """Graph over node ids: atoms keep their intern ids, then one id per
    rule's conjunction slot, then the constraint root."""

    program: Program
    node_kinds: tuple[str, ...]
    edges: tuple[SignedEdge, ...]
    root_id: int
    fact_atoms: frozenset[int]
    undefined_atoms: frozenset[int]
    is_dependency: bool
    _in_edges: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index: dict[int, list[SignedEdge]] = {}
        for e in self.edges:
            index.setdefault(e.dst, []).append(e)
        for lst in index.values():
            lst.sort(key=lambda e: (e.src, e.rule_index))
        object.__setattr__(self, "_in_edges", index)

    @property
    def atom_count(self) -> int:
        return self.program.atom_count

    def in_edges(self, node: int) -> list[SignedEdge]:
        return self._in_edges.get(node, [])

    def kind(self, node: int) -> str:
        return self.node_kinds[node]

    def node_label(self, node: int) -> str:
        k = self.node_kinds[node]
        if k == ATOM:
            return self.program.atoms[node].name
        if k == ROOT:
            return "#false"
        return f"conj_{node - self.atom_count}"

    def to_json_dict(self) -> dict:
        return {
            "nodes": [
                {"id": i, "kind": self.node_kinds[i], "label": self.node_label(i)}
                for i in range(len(self.node_kinds))
            ],
            "edges": [
                {
                    "from": e.src,
                    "to": e.dst,
                    "sign": "positive" if e.positive else "negative",
                    "rule": e.rule_index,
                }
                for e in self.edges
            ],
            "facts": sorted(self.program.atoms[i].name for i in self.fact_atoms),
            "undefined": sorted(self.program.atoms[i].name for i in self.undefined_atoms),
            "dependency": self.is_dependency,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph program {"]
        for i in range(len(self.node_kinds)):
            k = self.node_kinds[i]
            shape = {"atom": "ellipse", "conj": "point", "constraint_root": "box"}[k]
            lines.append(f'  n{i} [label="{self.node_label(i)}" shape={shape}];')
        for e in self.edges:
            style = "solid" if e.positive else "dashed"
            lines.append(f"  n{e.src} -> n{e.dst} [style={style}];")
        lines.append("}")
        return "\n".join(lines)


def _build(program: Program, flip_conjunctions: bool) -> DepGraph:
    n_atoms = program.atom_count
    kinds = [ATOM] * n_atoms
    conj_of_rule: dict[int, int] = {}
    for idx, rule in enumerate(program.rules):
        if len(rule.body) >= 2:
            conj_of_rule[idx] = n_atoms + len(conj_of_rule)
    kinds.extend([CONJ] * len(conj_of_rule))
    root = len(kinds)
    kinds.append(ROOT)

    edges: list[SignedEdge] = []
    for idx, rule in enumerate(program.rules):
        target = root if rule.head is None else rule.head.id
        if not rule.body:
            continue  # facts carry no edges
        if len(rule.body) == 1:
            lit = rule.body[0]
            edges.append(
                SignedEdge(lit.atom.id, target, not lit.negated, idx, lit.negated)
            )
            continue
        conj = conj_of_rule[idx]
        for lit in rule.body:
            positive = not lit.negated
            if flip_conjunctions:
                positive = not positive
            edges.append(SignedEdge(lit.atom.id, conj, positive, idx, lit.negated))
        edges.append(SignedEdge(conj, target, not flip_conjunctions, idx, None))

    heads = program.head_atoms()
    undefined = frozenset(a.id for a in program.atoms if a.id not in heads)
    return DepGraph(
        program=program,
        node_kinds=tuple(kinds),
        edges=tuple(edges),
        root_id=root,
        fact_atoms=frozenset(program.fact_atoms()),
        undefined_atoms=undefined,
        is_dependency=flip_conjunctions,
    )


def build_cnr_graph(program: Program) -> DepGraph:
    """Conjunction graph with literal signs as written (pre-transformation)."""
    return _build(program, flip_conjunctions=False)


def cnr_to_dependency_graph(graph: DepGraph) -> DepGraph:
    """Flip all edges incident to conjunction nodes; other edges unchanged."""
    return _build(graph.program, flip_conjunctions=True)


def dependency_graph(program: Program) -> DepGraph:
    # memoized per program instance; programs are immutable
    cached = program.__dict__.get("_dep_graph")
    if cached is None:
        cached = _build(program, flip_conjunctions=True)
        object.__setattr__(program, "_dep_graph", cached)
    return cached


def attach_query(graph: DepGraph, query: Iterable[Literal]) -> DepGraph:
    """Return a new graph whose program requires every query literal.

    Each positive literal ``q`` contributes the constraint ``:- not q.`` and
    each negated literal contributes ``:- q.``; the input graph is untouched.
    Raises :class:`UnknownAtomError` for atoms outside the vocabulary.
    """
    query = list(query)
    for lit in query:
        if graph.program.atom(lit.atom.name) is None:
            raise UnknownAtomError(lit.atom.name)
    extended = graph.program.with_query_constraints(query)
    return _build(extended, flip_conjunctions=graph.is_dependency)


def atom_distances(graph: DepGraph, topic: Atom) -> dict[Atom, int]:
    """Breadth-first distances in the undirected atom-level graph.

    Each non-constraint rule links its head to each of its body atoms at
    cost 1; conjunction helper nodes are transparent. Unreachable atoms are
    absent from the result.
    """
    program = graph.program
    if program.atom(topic.name) is None:
        raise UnknownAtomError(topic.name)
    adjacency: dict[int, set[int]] = {}
    for rule in program.rules:
        if rule.head is None:
            continue
        h = rule.head.id
        for lit in rule.body:
            adjacency.setdefault(h, set()).add(lit.atom.id)
            adjacency.setdefault(lit.atom.id, set()).add(h)
    start = program.atom(topic.name).id
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for node in frontier:
            for nb in sorted(adjacency.get(node, ())):
                if nb not in dist:
                    dist[nb] = dist[node] + 1
                    nxt.append(nb)
        frontier = nxt
    return {program.atoms[i]: d for i, d in sorted(dist.items())}


def _edge_between(graph: DepGraph, src: int, dst: int) -> Optional[SignedEdge]:
    for e in graph.in_edges(dst):
        if e.src == src:
            return e
    return None


def negative_literal_count(graph: DepGraph, edges: Iterable[SignedEdge]) -> int:
    """Count default-negated source literals along a walk.

    Edges out of conjunction nodes carry no literal; edges into them carry
    the original literal sign, so parity matches the source rules even after
    the conjunction flip.
    """
    count = 0
    for e in edges:
        if e.literal_negated:
            count += 1
    return count


def classify_loop(cycle: Iterable[int], graph: DepGraph) -> LoopClass:
    """Classify a closed walk by the parity of its negated literals.

    ``cycle`` lists nodes in edge direction; the walk closes from the last
    node back to the first.
    """
    nodes = list(cycle)
    walk = nodes + [nodes[0]]
    edges = []
    for a, b in zip(walk, walk[1:]):
        e = _edge_between(graph, a, b)
        if e is None:
            raise ValueError(
                f"no edge {graph.node_label(a)} -> {graph.node_label(b)} in cycle"
            )
        edges.append(e)
    return classify_cycle_edges(tuple(nodes), edges, graph)


def classify_cycle_edges(
    nodes: tuple[int, ...], edges: Iterable[SignedEdge], graph: DepGraph
) -> LoopClass:
    negatives = negative_literal_count(graph, edges)
    if negatives == 0:
        kind = LoopKind.POSITIVE
    elif negatives % 2 == 0:
        kind = LoopKind.EVEN
    else:
        kind = LoopKind.ODD
    return LoopClass(kind=kind, cycle=nodes, negative_literals=negatives)


def has_odd_loop(program: Program) -> bool:
    """Structural check: some atom reaches itself through an odd number of
    negations in the atom-level dependency graph."""
    pos: dict[int, set[int]] = {}
    neg: dict[int, set[int]] = {}
    for rule in program.rules:
        if rule.head is None:
            continue
        for lit in rule.body:
            target = neg if lit.negated else pos
            target.setdefault(lit.atom.id, set()).add(rule.head.id)
    for start in range(program.atom_count):
        seen = {(start, 0)}
        frontier = [(start, 0)]
        while frontier:
            node, parity = frontier.pop()
            for nb in pos.get(node, ()):
                state = (nb, parity)
                if nb == start and parity == 1:
                    return True
                if state not in seen:
                    seen.add(state)
                    frontier.append(state)
            for nb in neg.get(node, ()):
                flipped = 1 - parity
                if nb == start and flipped == 1:
                    return True
                state = (nb, flipped)
                if state not in seen:
                    seen.add(state)
                    frontier.append(state)
    return False
