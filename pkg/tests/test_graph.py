import json

import pytest

from partasp import (
    LoopKind,
    UnknownAtomError,
    atom_distances,
    attach_query,
    build_cnr_graph,
    classify_loop,
    cnr_to_dependency_graph,
    dependency_graph,
    parse_program,
)
from partasp.graph import ATOM, CONJ, ROOT, has_odd_loop

PROGRAM_1 = "p :- q, not r, not p."
PROGRAM_2 = "p :- q, not p. p :- not r."
PROGRAM_6 = """
p :- q, r.  q :- s, not x. t :- s. j :- r. m :- t. k :- j. n :- p. o :- n.
r :- not u, not v. w :- not v. a :- not b. b :- not a. s.
"""


def edges_by_kind(graph):
    return [
        (graph.node_label(e.src), graph.node_label(e.dst), e.positive)
        for e in graph.edges
    ]


def test_program1_cnr_shape():
    prog = parse_program(PROGRAM_1)
    g = build_cnr_graph(prog)
    conj_nodes = [i for i, k in enumerate(g.node_kinds) if k == CONJ]
    assert len(conj_nodes) == 1
    conj = conj_nodes[0]
    incoming = {(g.node_label(e.src), e.positive) for e in g.in_edges(conj)}
    assert incoming == {("q", True), ("r", False), ("p", False)}
    out = [e for e in g.edges if e.src == conj]
    assert len(out) == 1 and g.node_label(out[0].dst) == "p" and out[0].positive


def test_program2_cnr_shape():
    prog = parse_program(PROGRAM_2)
    g = build_cnr_graph(prog)
    conj_nodes = [i for i, k in enumerate(g.node_kinds) if k == CONJ]
    assert len(conj_nodes) == 1  # only the two-literal rule gets a helper node
    direct = [
        e for e in g.edges
        if g.kind(e.src) == ATOM and g.kind(e.dst) == ATOM
    ]
    assert [(g.node_label(e.src), g.node_label(e.dst), e.positive) for e in direct] == [
        ("r", "p", False)
    ]


def test_fact_program_has_no_edges():
    prog = parse_program("s.")
    g = build_cnr_graph(prog)
    assert g.edges == ()
    assert g.fact_atoms == {prog.atom("s").id}


def test_programs_1_and_2_not_isomorphic():
    g1 = build_cnr_graph(parse_program(PROGRAM_1))
    g2 = build_cnr_graph(parse_program(PROGRAM_2))
    sig1 = sorted((g1.kind(e.src), g1.kind(e.dst), e.positive) for e in g1.edges)
    sig2 = sorted((g2.kind(e.src), g2.kind(e.dst), e.positive) for e in g2.edges)
    assert sig1 != sig2


def test_conjunction_flip():
    prog = parse_program("p :- q, not r.")
    cnr = build_cnr_graph(prog)
    dg = cnr_to_dependency_graph(cnr)
    conj = next(i for i, k in enumerate(dg.node_kinds) if k == CONJ)
    flipped = {(dg.node_label(e.src), e.positive) for e in dg.in_edges(conj)}
    assert flipped == {("q", False), ("r", True)}
    out = [e for e in dg.edges if e.src == conj][0]
    assert not out.positive  # realized as p :- not conj


def test_flip_is_identity_without_conjunctions():
    prog = parse_program("p :- q. r :- not p.")
    cnr = build_cnr_graph(prog)
    dg = cnr_to_dependency_graph(cnr)
    assert edges_by_kind(cnr) == edges_by_kind(dg)


def test_program5_constraint_wiring():
    prog = parse_program("m :- p. m :- not q. m :- r. :- not m. :- n.")
    dg = dependency_graph(prog)
    root_in = {(dg.node_label(e.src), e.positive) for e in dg.in_edges(dg.root_id)}
    assert root_in == {("m", False), ("n", True)}


def test_single_constraint_root():
    prog = parse_program(":- a. :- b, c.")
    dg = dependency_graph(prog)
    assert sum(1 for k in dg.node_kinds if k == ROOT) == 1


def test_edge_sign_conservation_through_conjunction():
    # two flipped signs through the helper node recover the literal polarity
    prog = parse_program("p :- q, not r.")
    dg = dependency_graph(prog)
    conj = next(i for i, k in enumerate(dg.node_kinds) if k == CONJ)
    head_edge = [e for e in dg.edges if e.src == conj][0]
    for e in dg.in_edges(conj):
        composed_positive = e.positive == head_edge.positive
        assert composed_positive == (not e.literal_negated)


def test_attach_query_functional_update():
    from partasp.syntax import Literal

    prog = parse_program("p :- not q. q :- not p. :- p, q.")
    g = dependency_graph(prog)
    before = len(g.edges)
    g2 = attach_query(g, [Literal(prog.atom("p"), False)])
    assert len(g.edges) == before  # original untouched
    root_in = {(g2.node_label(e.src), e.positive) for e in g2.in_edges(g2.root_id)}
    assert ("p", False) in root_in  # :- not p.
    assert g2.program.rules[-1].is_constraint


def test_attach_query_unknown_atom():
    prog = parse_program("p :- not q. q :- not p.")
    g = dependency_graph(prog)
    from partasp.syntax import Atom, Literal

    with pytest.raises(UnknownAtomError):
        attach_query(g, [Literal(Atom("zz", 99), False)])


def test_atom_distances_program6():
    prog = parse_program(PROGRAM_6)
    g = dependency_graph(prog)
    dist = {a.name: d for a, d in atom_distances(g, prog.atom("q")).items()}
    assert dist["q"] == 0
    assert {n for n, d in dist.items() if d == 1} == {"s", "x", "p"}
    assert {n for n, d in dist.items() if d == 2} == {"t", "r", "n"}
    assert "a" not in dist and "b" not in dist


def test_atom_distances_singleton():
    prog = parse_program("s.")
    g = dependency_graph(prog)
    assert {a.name: d for a, d in atom_distances(g, prog.atom("s")).items()} == {"s": 0}


def test_distance_symmetry():
    prog = parse_program(PROGRAM_6)
    g = dependency_graph(prog)
    atoms = list(prog.atoms)
    for a in atoms:
        da = atom_distances(g, a)
        for b, d in da.items():
            assert atom_distances(g, b)[a] == d


def test_classify_even_loop():
    prog = parse_program("p :- not q. q :- not p.")
    g = dependency_graph(prog)
    lc = classify_loop([prog.atom("p").id, prog.atom("q").id], g)
    assert lc.kind is LoopKind.EVEN


def test_classify_positive_loop():
    prog = parse_program("p :- q. q :- p.")
    g = dependency_graph(prog)
    lc = classify_loop([prog.atom("p").id, prog.atom("q").id], g)
    assert lc.kind is LoopKind.POSITIVE


def test_classify_odd_loop():
    prog = parse_program("p :- not q. q :- not r. r :- not p.")
    g = dependency_graph(prog)
    lc = classify_loop(
        [prog.atom("p").id, prog.atom("r").id, prog.atom("q").id], g
    )
    assert lc.kind is LoopKind.ODD


def test_classify_positive_loop_through_conjunctions():
    # conjunction transparency: parity follows the source literal signs
    prog = parse_program("p :- q, a. q :- p, b.")
    g = dependency_graph(prog)
    p, q = prog.atom("p").id, prog.atom("q").id
    conj_of = {}
    for e in g.edges:
        if g.kind(e.dst) == CONJ and g.kind(e.src) == ATOM:
            conj_of.setdefault(e.dst, set()).add(e.src)
    c_pq = next(c for c, srcs in conj_of.items() if q in srcs)  # body of rule for p
    c_qp = next(c for c, srcs in conj_of.items() if p in srcs)
    lc = classify_loop([p, c_qp, q, c_pq], g)
    assert lc.kind is LoopKind.POSITIVE
    assert lc.negative_literals == 0


def test_has_odd_loop():
    assert has_odd_loop(parse_program("p :- not q. q :- not r. r :- not p."))
    assert not has_odd_loop(parse_program("p :- not q. q :- not p."))
    assert not has_odd_loop(parse_program("p :- q. q :- p."))
    assert has_odd_loop(parse_program("p :- q, not p."))


def test_json_and_dot_exports():
    prog = parse_program(PROGRAM_6)
    g = dependency_graph(prog)
    doc = json.loads(g.to_json())
    assert {n["kind"] for n in doc["nodes"]} == {"atom", "conj", "constraint_root"}
    assert all(e["sign"] in ("positive", "negative") for e in doc["edges"])
    assert doc["facts"] == ["s"]
    assert set(doc["undefined"]) == {"x", "u", "v"}
    dot = g.to_dot()
    assert dot.startswith("digraph") and "->" in dot
