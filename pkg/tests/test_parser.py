import pytest

from partasp import ParseError, parse_program, parse_schematic

PROG6 = """
p :- q, r.  q :- s, not x. t :- s. j :- r. m :- t. k :- j. n :- p. o :- n.
r :- not u, not v. w :- not v. a :- not b. b :- not a. s.
"""


def test_basic_rule():
    prog = parse_program("p :- q, not r.")
    assert len(prog.rules) == 1
    rule = prog.rules[0]
    assert rule.head.name == "p"
    assert [(l.atom.name, l.negated) for l in rule.body] == [("q", False), ("r", True)]


def test_fact():
    prog = parse_program("s.")
    assert prog.rules[0].is_fact
    assert prog.rules[0].head.name == "s"


def test_interval_rejected():
    with pytest.raises(ParseError) as err:
        parse_program("ball(1..3).")
    assert "interval" in str(err.value)


def test_variables_rejected_in_grounded_mode():
    with pytest.raises(ParseError):
        parse_program("t(M) :- movie(M).")


def test_comments_and_whitespace():
    prog = parse_program("% a comment\np :- q. % trailing\n\n  s.\n")
    assert len(prog.rules) == 2


def test_query_directive():
    prog = parse_program("p :- not q. q :- not p. ?- p, not q.")
    assert [(l.atom.name, l.negated) for l in prog.query] == [("p", False), ("q", True)]


def test_constraint():
    prog = parse_program(":- not q, not r.")
    rule = prog.rules[0]
    assert rule.is_constraint
    assert len(rule.body) == 2


def test_empty_constraint_rejected():
    with pytest.raises(ParseError):
        parse_program(":- .")


def test_duplicate_body_literals_deduplicated():
    prog = parse_program("p :- q, q, not r, not r.")
    assert len(prog.rules[0].body) == 2


def test_duplicate_rules_kept():
    prog = parse_program("p :- q. p :- q.")
    assert len(prog.rules) == 2


def test_canonical_arguments():
    prog = parse_program("like_movie(john, titanic).")
    assert prog.rules[0].head.name == "like_movie(john,titanic)"


def test_atom_interning_injective():
    prog = parse_program(PROG6)
    names = [a.name for a in prog.atoms]
    assert len(names) == len(set(names))
    for atom in prog.atoms:
        assert prog.atom(atom.name).id == atom.id


def test_round_trip():
    prog = parse_program(PROG6 + "?- p.\n")
    again = parse_program(prog.pretty())
    assert again.structure() == prog.structure()
    assert again.pretty() == prog.pretty()


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_program("p :- q\nr.")
    assert err.value.line >= 1


def test_schematic_variables_and_guard():
    rules = parse_schematic(
        "t(M) :- movie(M). neg(P, X1) :- kind(X1), kind(X2), pick(P, X2), X1 != X2."
    )
    assert len(rules) == 2
    assert rules[1].guards


def test_schematic_rejects_query():
    with pytest.raises(ParseError):
        parse_schematic("?- p.")
