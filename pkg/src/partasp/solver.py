"""Constraint-driven recursive solver producing partial models.

Solving starts at the constraint root, which must come out False, and works
backward through the dependency graph assigning presumed values: a node
presumed False needs every in-edge non-effective (conjunctive over
predecessors), a node presumed True needs at least one effective in-edge
(disjunctive). An effective edge is a positive edge from a True node or a
negative edge from a False node. Branches stop at facts, at atoms with no
defining rule (globally False), or at loops; sub-models are merged and every
accepted merge is closed under forward propagation, which also rejects
models that violate a constraint or force an atom both ways.

Every model returned for a consistent program is a subset of some stable
model; the brute-force oracle in :mod:`partasp.oracle` checks exactly that
property in the test suite.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import OddLoopError, UnknownAtomError
from .graph import ATOM, DepGraph, LoopKind, SignedEdge, classify_cycle_edges, dependency_graph
from .syntax import Atom, Literal, Program
from .validate import ensure_valid

TruthValue = bool

Assignment = dict[int, bool]


class Conflict:
    """Sentinel returned by :func:`forward_propagate` on contradiction."""

    def __repr__(self) -> str:
        return "Conflict"


CONFLICT = Conflict()


@dataclass(frozen=True)
class PartialModel:
    """An immutable partial truth assignment over atom names.

    Helper (conjunction) nodes never appear; unassigned atoms are simply
    absent. Negative entries render as ``not a``.
    """

    items: tuple[tuple[str, bool], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, bool]) -> "PartialModel":
        return cls(tuple(sorted(mapping.items())))

    @classmethod
    def of(cls, **values: bool) -> "PartialModel":
        return cls.from_mapping(values)

    @property
    def assignment(self) -> dict[str, bool]:
        return dict(self.items)

    @property
    def true_atoms(self) -> frozenset[str]:
        return frozenset(n for n, v in self.items if v)

    @property
    def false_atoms(self) -> frozenset[str]:
        return frozenset(n for n, v in self.items if not v)

    def get(self, name: str) -> Optional[bool]:
        return dict(self.items).get(name)

    def merge(self, other: "PartialModel") -> Optional["PartialModel"]:
        merged = merge_assignments(self.assignment, other.assignment)
        return None if merged is None else PartialModel.from_mapping(merged)

    def agrees_with(self, other: "PartialModel") -> bool:
        return self.merge(other) is not None

    def __len__(self) -> int:
        return len(self.items)

    def __str__(self) -> str:
        parts = [n for n, v in self.items if v]
        parts += [f"not {n}" for n, v in self.items if not v]
        return "{" + ", ".join(parts) + "}"


def merge_assignments(a: Mapping, b: Mapping) -> Optional[dict]:
    """Union of two assignments, or None when they conflict on some key."""
    if len(b) < len(a):
        a, b = b, a
    out = dict(b)
    for k, v in a.items():
        cur = out.get(k)
        if cur is None:
            out[k] = v
        elif cur != v:
            return None
    return out


def _key(m: Mapping) -> frozenset:
    return frozenset(m.items())


def conj_merge(pools: Sequence[Sequence[dict]]) -> list[dict]:
    """Every consistent union of one sub-model per pool; conflicts dropped."""
    acc: list[dict] = [dict()]
    for pool in pools:
        nxt: list[dict] = []
        seen: set[frozenset] = set()
        for left in acc:
            for right in pool:
                merged = merge_assignments(left, right)
                if merged is None:
                    continue
                key = _key(merged)
                if key not in seen:
                    seen.add(key)
                    nxt.append(merged)
        acc = nxt
        if not acc:
            return []
    return acc


def disj_merge(pool: Sequence[dict]) -> list[dict]:
    """Close the pool under compatible unions and keep the maximal models.

    Compatible sub-models collapse into their union; incompatible ones stay
    as separate alternatives, so the result is pairwise conflicting.
    """
    models: list[dict] = []
    keys: set[frozenset] = set()
    for m in pool:
        key = _key(m)
        if key not in keys:
            keys.add(key)
            models.append(dict(m))
    changed = True
    while changed:
        changed = False
        for i in range(len(models)):
            for j in range(i + 1, len(models)):
                merged = merge_assignments(models[i], models[j])
                if merged is None:
                    continue
                key = _key(merged)
                if key not in keys:
                    keys.add(key)
                    models.append(merged)
                    changed = True
    model_keys = [_key(m) for m in models]
    out = []
    for i, m in enumerate(models):
        if any(i != j and model_keys[i] < model_keys[j] for j in range(len(models))):
            continue
        out.append(m)
    return out


def conjunctive_merge(pools: Iterable[Iterable[PartialModel]]) -> list[PartialModel]:
    raw = conj_merge([[pm.assignment for pm in pool] for pool in pools])
    return [PartialModel.from_mapping(m) for m in raw]


def disjunctive_merge(pool: Iterable[PartialModel]) -> list[PartialModel]:
    raw = disj_merge([pm.assignment for pm in pool])
    return [PartialModel.from_mapping(m) for m in raw]


@dataclass(frozen=True)
class _BranchEntry:
    node: int
    via: Optional[SignedEdge]  # edge from this node up to the node it supports


@dataclass(frozen=True)
class SolverState:
    """Per-branch solver bookkeeping.

    ``facts`` holds proved atom assignments; ``presumed`` the values assumed
    along the current branch (atoms and helper nodes); ``sequence`` the
    ordered branch stack used to reconstruct loops.
    """

    facts: Assignment = field(default_factory=dict)
    presumed: dict[int, bool] = field(default_factory=dict)
    sequence: tuple[_BranchEntry, ...] = ()

    @property
    def presumed_pos(self) -> frozenset[int]:
        return frozenset(n for n, v in self.presumed.items() if v)

    @property
    def presumed_neg(self) -> frozenset[int]:
        return frozenset(n for n, v in self.presumed.items() if not v)

    @property
    def node_sequence(self) -> tuple[int, ...]:
        return tuple(entry.node for entry in self.sequence)


class Solver:
    """Reasoning engine bound to one dependency graph."""

    def __init__(self, graph: DepGraph):
        if not graph.is_dependency:
            raise ValueError("solver needs the conjunction-flipped dependency graph")
        self.graph = graph
        # branch depth is bounded by the node count; keep headroom for it
        needed = 4 * len(graph.node_kinds) + 500
        if sys.getrecursionlimit() < needed:
            sys.setrecursionlimit(needed)
        program = graph.program
        self._rules: list[tuple[Optional[int], tuple[tuple[int, bool], ...]]] = []
        self._head_rule_count: dict[int, int] = {}
        self._watchers: dict[int, list[int]] = {}
        for idx, rule in enumerate(program.rules):
            head = rule.head.id if rule.head is not None else None
            body = tuple((l.atom.id, l.negated) for l in rule.body)
            self._rules.append((head, body))
            if head is not None:
                self._head_rule_count[head] = self._head_rule_count.get(head, 0) + 1
            for atom_id, _ in body:
                self._watchers.setdefault(atom_id, []).append(idx)
        self._undefined = graph.undefined_atoms

    # -- forward propagation ------------------------------------------------

    def propagate(self, assignment: Mapping[int, bool]) -> Optional[Assignment]:
        """Least fixpoint of value forcing; None signals a conflict.

        Facts force their heads True; an atom with all defining bodies
        falsified is forced False; atoms with no defining rule default to
        False. A fully satisfied constraint body, or an atom forced both
        ways, is a conflict.
        """
        values: Assignment = dict(assignment)
        for atom_id in self._undefined:
            values.setdefault(atom_id, False)

        n = len(self._rules)
        status = bytearray(n)  # 0 open, 1 satisfied, 2 falsified
        false_counts: dict[int, int] = {}
        queue = deque(range(n))
        queued = bytearray([1] * n)

        def force(atom_id: int, value: bool) -> bool:
            current = values.get(atom_id)
            if current is None:
                values[atom_id] = value
                for ri in self._watchers.get(atom_id, ()):
                    if not queued[ri]:
                        queued[ri] = 1
                        queue.append(ri)
                return True
            return current == value

        while queue:
            ri = queue.popleft()
            queued[ri] = 0
            if status[ri]:
                continue
            head, body = self._rules[ri]
            satisfied = True
            falsified = False
            for atom_id, negated in body:
                v = values.get(atom_id)
                if v is None:
                    satisfied = False
                elif v == negated:
                    falsified = True
                    break
            if falsified:
                status[ri] = 2
                if head is None:
                    continue
                count = false_counts.get(head, 0) + 1
                false_counts[head] = count
                if count == self._head_rule_count[head]:
                    if not force(head, False):
                        return None
            elif satisfied:
                status[ri] = 1
                if head is None:
                    return None  # constraint body holds
                if not force(head, True):
                    return None
        return values

    # -- recursive reasoning --------------------------------------------------

    def initial_state(self) -> Optional[SolverState]:
        base = self.propagate({})
        return None if base is None else SolverState(facts=base)

    def reasoning_rec(
        self,
        state: Optional[SolverState],
        node: Union[int, Atom, None],
        presumed: bool,
    ) -> list[PartialModel]:
        """Sub-models under which ``node`` provably carries ``presumed``.

        ``node`` may be an Atom, a raw node id, or None for the constraint
        root. Returns the empty list when the value is unprovable.
        """
        if state is None:
            state = SolverState()
        if node is None:
            node_id = self.graph.root_id
        elif isinstance(node, Atom):
            node_id = node.id
        else:
            node_id = node
        raw = self._prove(state, node_id, presumed, None)
        return [self._to_model(m) for m in raw]

    def _to_model(self, assignment: Assignment) -> PartialModel:
        atoms = self.graph.program.atoms
        return PartialModel.from_mapping(
            {atoms[i].name: v for i, v in assignment.items()}
        )

    def _settle(self, state: SolverState, node: int, value: bool) -> list[Assignment]:
        if state.facts.get(node) == (not value):
            return []
        extended = dict(state.facts)
        extended[node] = value
        result = self.propagate(extended)
        if result is None or result.get(node) != value:
            return []
        return [result]

    def _loop(
        self, state: SolverState, node: int, want: bool, via: SignedEdge
    ) -> list[Assignment]:
        index = next(
            i for i, entry in enumerate(state.sequence) if entry.node == node
        )
        nodes = tuple(entry.node for entry in state.sequence[index:])
        edges = [entry.via for entry in state.sequence[index + 1 :]]
        edges.append(via)
        labels = [self.graph.node_label(n) for n in nodes]
        if state.presumed[node] != want:
            raise OddLoopError(labels)
        loop = classify_cycle_edges(nodes, edges, self.graph)
        if loop.kind is LoopKind.ODD:
            raise OddLoopError(labels)
        if loop.kind is LoopKind.POSITIVE and want:
            return []  # True through a positive loop is unfounded
        if self.graph.kind(node) == ATOM:
            return self._settle(state, node, want)
        return [dict(state.facts)]

    def _prove(
        self, state: SolverState, node: int, want: bool, via: Optional[SignedEdge]
    ) -> list[Assignment]:
        graph = self.graph
        if graph.kind(node) == ATOM:
            current = state.facts.get(node)
            if current is not None:
                return [dict(state.facts)] if current == want else []
            if node in graph.fact_atoms:
                return self._settle(state, node, True) if want else []
            if not graph.in_edges(node):
                return [] if want else self._settle(state, node, False)
        if node in state.presumed:
            return self._loop(state, node, want, via)

        presumed = dict(state.presumed)
        presumed[node] = want
        sub = SolverState(
            facts=state.facts,
            presumed=presumed,
            sequence=state.sequence + (_BranchEntry(node, via),),
        )
        in_edges = graph.in_edges(node)

        if not want:
            pools: list[list[Assignment]] = [[dict(state.facts)]]
            for edge in in_edges:
                needed = not edge.positive  # neutralize the edge
                branch = self._prove(sub, edge.src, needed, edge)
                if not branch:
                    return []
                pools.append(branch)
            merged = conj_merge(pools)
        else:
            pool: list[Assignment] = []
            for edge in in_edges:
                needed = edge.positive  # make the edge effective
                pool.extend(self._prove(sub, edge.src, needed, edge))
            if not pool:
                return []
            merged = disj_merge(pool)

        out: list[Assignment] = []
        seen: set[frozenset] = set()
        is_atom = graph.kind(node) == ATOM
        for candidate in merged:
            closed = self.propagate(candidate)
            if closed is None:
                continue
            if is_atom and closed.get(node) != want:
                continue
            key = _key(closed)
            if key not in seen:
                seen.add(key)
                out.append(closed)
        return out


def _normalize_query(
    program: Program, query: Iterable
) -> list[Literal]:
    literals: list[Literal] = []
    seen = set()
    for item in query or ():
        if isinstance(item, Literal):
            name, negated = item.atom.name, item.negated
        elif isinstance(item, tuple):
            name, negated = item
        else:
            name, negated = str(item), False
        atom = program.atom(name)
        if atom is None:
            raise UnknownAtomError(name)
        if (name, negated) in seen:
            continue
        seen.add((name, negated))
        literals.append(Literal(atom, negated))
    return literals


def forward_propagate(
    program: Program, assignment: Union[PartialModel, Mapping[str, bool], None] = None
) -> Union[PartialModel, Conflict]:
    """Public fixpoint propagation over atom names; idempotent."""
    solver = Solver(dependency_graph(program))
    mapping = assignment.assignment if isinstance(assignment, PartialModel) else dict(assignment or {})
    by_id: Assignment = {}
    for name, value in mapping.items():
        atom = program.atom(name)
        if atom is None:
            raise UnknownAtomError(name)
        by_id[atom.id] = value
    result = solver.propagate(by_id)
    if result is None:
        return CONFLICT
    return solver._to_model(result)


def solve(program: Program, query: Iterable = ()) -> list[PartialModel]:
    """Partial models satisfying all constraints plus the query conjunction.

    Returns the empty list when the query is unsatisfiable; raises
    :class:`OddLoopError` when an odd loop is met on a proof branch and
    :class:`UnknownAtomError` for query atoms outside the vocabulary.
    Output order is deterministic: lexicographic by sorted positive atoms.
    """
    ensure_valid(program)
    literals = _normalize_query(program, query)
    extended = program.with_query_constraints(literals)
    graph = dependency_graph(extended)
    solver = Solver(graph)
    base = solver.propagate({})
    if base is None:
        return []
    state = SolverState(facts=base)
    raw = solver._prove(state, graph.root_id, False, None)

    models: list[PartialModel] = []
    seen: set[tuple] = set()
    for assignment in raw:
        pm = solver._to_model(assignment)
        if pm.items not in seen:
            seen.add(pm.items)
            models.append(pm)
    models.sort(key=lambda m: (sorted(m.true_atoms), sorted(m.false_atoms)))
    return models
