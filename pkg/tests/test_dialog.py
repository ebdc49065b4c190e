import pytest

from partasp.chat.dialog import DialogState, next_turn
from partasp.chat.kb import bundled_kb
from partasp.errors import NoModelError, NoTalkingPointError
from partasp.neighborhood import relevant_concepts

TITANIC_POINTS = {
    "talk_preference(john,titanic,trivia)",
    "talk_preference(john,titanic,awards)",
    "talk_preference(john,titanic,leonardo_dicaprio)",
}


@pytest.fixture(scope="module")
def kb():
    return bundled_kb()


def talk_points(result):
    return {
        m.atom
        for m in result.members
        if m.value and m.atom.startswith("talk_preference(")
    }


def test_titanic_radius3_points(kb):
    program = kb.ground_for_user("john", ["like_movie(john,titanic)"])
    result = relevant_concepts(program, "like_movie(john,titanic)", 3)
    assert talk_points(result) == TITANIC_POINTS


def test_turns_exhaust_titanic_in_priority_order(kb):
    state = DialogState(session_id="t", user="john")
    chosen = []
    for _ in range(3):
        turn = next_turn(kb, state, "like_movie(john,titanic)", radius=3)
        assert turn.chosen in TITANIC_POINTS
        assert turn.chosen not in chosen
        chosen.append(turn.chosen)
    assert chosen == [
        "talk_preference(john,titanic,leonardo_dicaprio)",  # main actor first
        "talk_preference(john,titanic,awards)",
        "talk_preference(john,titanic,trivia)",
    ]
    with pytest.raises(NoTalkingPointError):
        next_turn(kb, state, "like_movie(john,titanic)", radius=3)


def test_chosen_atom_is_member(kb):
    state = DialogState(session_id="m", user="john")
    turn = next_turn(kb, state, "like_movie(john,titanic)", radius=3)
    assert turn.chosen in {m.atom for m in turn.rcc.members}


def test_session_monotone_no_repeats(kb):
    state = DialogState(session_id="r", user="john")
    seen = []
    for topic in ("like_movie(john,titanic)", "like_movie(john,titanic)",
                  "like_movie(john,avatar)", "like_movie(john,titanic)"):
        try:
            turn = next_turn(kb, state, topic, radius=3)
        except NoTalkingPointError:
            continue
        assert turn.chosen not in seen
        seen.append(turn.chosen)


def test_already_talked_excludes_named_actor(kb):
    state = DialogState(
        session_id="a",
        user="john",
        dynamic_facts=["already_talked(john,avatar,sam_worthington)"],
    )
    turn = next_turn(kb, state, "like_movie(john,avatar)", radius=3)
    assert turn.chosen != "talk_preference(john,avatar,sam_worthington)"


def test_explanation_path_starts_at_topic(kb):
    state = DialogState(session_id="p", user="john")
    turn = next_turn(kb, state, "like_movie(john,titanic)", radius=3)
    assert turn.path.steps[0].from_atom == "like_movie(john,titanic)"
    assert turn.path.steps[-1].to_atom == turn.chosen
    assert turn.reply


def test_preference_exclusivity_oscar_director(kb):
    program = kb.ground_for_user("carol", ["like_movie(carol,silent_river)"])
    model = relevant_concepts(program, "like_movie(carol,silent_river)", None).model
    assert model.get("talk_preference(carol,silent_river,director)") is True
    assert model.get("talk_preference(carol,silent_river,actor)") is False


def test_preference_exclusivity_plain_director(kb):
    program = kb.ground_for_user("carol", ["like_movie(carol,golden_years)"])
    model = relevant_concepts(program, "like_movie(carol,golden_years)", None).model
    assert model.get("talk_preference(carol,golden_years,actor)") is True
    assert model.get("talk_preference(carol,golden_years,director)") is False


def test_generic_pair_never_both_selected(kb):
    for stated in ("like_movie(carol,silent_river)", "like_movie(carol,golden_years)"):
        program = kb.ground_for_user("carol", [stated])
        model = relevant_concepts(program, stated, None).model
        for title in kb.movie_titles():
            actor = model.get(f"talk_preference(carol,{title},actor)")
            director = model.get(f"talk_preference(carol,{title},director)")
            if actor is True and director is True:
                oscar = any(
                    r.head.name == f"director_award({d},oscar)"
                    for r in kb.facts.rules
                    for d in [r.head.name.split("(")[1].split(",")[0]]
                    if r.head.name.startswith("director_award(")
                )
                assert oscar, f"actor and director both picked for {title}"


def test_oscar_director_priority_tier(kb):
    state = DialogState(session_id="c", user="carol")
    turn = next_turn(kb, state, "like_movie(carol,silent_river)", radius=3)
    assert turn.chosen == "talk_preference(carol,silent_river,director)"


def test_child_user_stated_adult_like_has_no_model(kb):
    program = kb.ground_for_user("kid", ["like_movie(kid,blood_moon)"])
    with pytest.raises(NoModelError):
        relevant_concepts(program, "like_movie(kid,blood_moon)", 3)


def test_child_user_never_likes_adult_movies(kb):
    program = kb.ground_for_user("kid", ["like_movie(kid,toy_saga)"])
    result = relevant_concepts(program, "like_movie(kid,toy_saga)", None)
    for title in kb.adult_titles():
        atom = f"like_movie(kid,{title})"
        member = next((m for m in result.members if m.atom == atom), None)
        assert member is None or member.value is False
