"""Dialog management: utterance parsing, talking-point selection, replies."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from ..errors import NoIntentError, NoTalkingPointError
from ..graph import dependency_graph
from ..grounding import atom_struct
from ..neighborhood import (
    ExplanationPath,
    NeighborhoodResult,
    extract_path,
    relevant_concepts,
)
from .kb import MovieKB

DEFAULT_RADIUS = 3

_PATTERNS = [
    (re.compile(r"^i\s+like\s+(?:the\s+movie\s+)?(?P<title>.+)$"), "movie"),
    (re.compile(r"^my\s+favou?rite\s+movie\s+is\s+(?P<title>.+)$"), "movie"),
    (re.compile(r"^i\s+like\s+actor\s+(?P<title>.+)$"), "actor"),
    (re.compile(r"^my\s+favou?rite\s+actor\s+is\s+(?P<title>.+)$"), "actor"),
    (re.compile(r"^i\s+like\s+the\s+actor\s+(?P<title>.+)$"), "actor"),
]


def canonical_constant(text: str) -> str:
    cleaned = re.sub(r"[^a-z0-9\s_]", "", text.lower().strip())
    return re.sub(r"\s+", "_", cleaned).strip("_")


def parse_utterance(text: str, kb: MovieKB, user: str) -> str:
    """Map an utterance to a topic atom; raises NoIntentError otherwise.

    Actor patterns are matched before movie patterns so that "i like actor
    X" does not read X as a movie title.
    """
    normalized = re.sub(r"\s+", " ", text.strip().lower()).rstrip(".!?")
    movie_match: Optional[str] = None
    for pattern, kind in _PATTERNS:
        m = pattern.match(normalized)
        if not m:
            continue
        name = canonical_constant(m.group("title"))
        if kind == "actor":
            if name in kb.actor_names():
                return f"like_actor({user},{name})"
        else:
            if name in kb.movie_titles():
                movie_match = f"like_movie({user},{name})"
            elif name in kb.actor_names():
                # "I like Tom Hanks" with an actor name
                return f"like_actor({user},{name})"
    if movie_match:
        return movie_match
    raise NoIntentError(f"could not map utterance to a known movie or actor: {text!r}")


@dataclass
class TurnRecord:
    utterance: str
    topic: str
    chosen: Optional[str]
    reply: str
    path: list = field(default_factory=list)  # serialized explanation steps


@dataclass
class DialogState:
    """Per-session dialog memory; dynamic facts only ever grow."""

    session_id: str
    user: str
    dynamic_facts: list[str] = field(default_factory=list)
    turns: list[TurnRecord] = field(default_factory=list)

    def add_fact(self, atom: str) -> None:
        if atom not in self.dynamic_facts:
            self.dynamic_facts.append(atom)


@dataclass
class BotTurn:
    reply: str
    topic: str
    chosen: Optional[str]
    path: Optional[ExplanationPath]
    rcc: NeighborhoodResult


def _talking_points(result: NeighborhoodResult) -> list[str]:
    return [m.atom for m in result.members if m.value and m.atom.startswith("talk_preference(")]


def _selection_rank(kb: MovieKB, atom: str) -> tuple:
    """Priority: oscar director > main actor > famous actor (and other actor
    names) > awards > actor_award > trivia; ties break on the atom name."""
    struct = atom_struct(atom)
    person, movie, attr = (a.text for a in struct.args)
    facts = kb.fact_names()

    def fact(name: str) -> bool:
        return name in facts

    if attr == "director":
        tier = 0
    elif attr in ("awards", "actor_award", "trivia", "actor"):
        tier = {"actor": 2, "awards": 3, "actor_award": 4, "trivia": 5}[attr]
    elif fact(f"main_actor({attr},{movie})"):
        tier = 1
    else:
        tier = 2  # famous or award-winning co-actor
    return (tier, atom)


def _title_case(constant: str) -> str:
    return " ".join(part.capitalize() for part in constant.split("_"))


def _phrase_for(kb: MovieKB, atom: str) -> str:
    struct = atom_struct(atom)
    _, movie, attr = (a.text for a in struct.args)
    title = _title_case(movie)
    facts = kb.fact_names()
    if attr == "awards":
        return f"{title} picked up some big awards. Want to hear about them?"
    if attr == "trivia":
        return f"I know a fun piece of trivia about {title}."
    if attr == "actor_award":
        return f"{title} has award-winning actors in its cast."
    if attr == "director":
        return f"The director of {title} won an Oscar. Quite a filmmaker to talk about."
    if attr == "actor":
        return f"The cast of {title} is worth talking about."
    actor = _title_case(attr)
    if f"main_actor({attr},{movie})" in facts:
        return f"{actor} did a great job as the lead actor in {title}."
    return f"{actor} also acted in {title}. Did you see that movie?"


def next_turn(
    kb: MovieKB,
    state: DialogState,
    topic: str,
    radius: int = DEFAULT_RADIUS,
    utterance: str = "",
) -> BotTurn:
    """Advance the conversation one step around the topic atom.

    The stated topic joins the session's dynamic facts, the per-user
    grounding is solved, and one unselected talking point inside the radius
    is chosen by fixed priority. The chosen point is recorded as
    ``already_talked`` so the same session never repeats it.
    """
    struct = atom_struct(topic)
    if struct.pred in ("like_movie", "like_actor"):
        state.add_fact(topic)
    program = kb.ground_for_user(state.user, state.dynamic_facts)
    result = relevant_concepts(program, topic, radius)
    candidates = sorted(_talking_points(result), key=lambda a: _selection_rank(kb, a))
    if not candidates:
        raise NoTalkingPointError(topic)
    chosen = candidates[0]
    chosen_struct = atom_struct(chosen)
    person, movie, attr = (a.text for a in chosen_struct.args)
    state.add_fact(f"already_talked({person},{movie},{attr})")

    graph = dependency_graph(program)
    path = extract_path(graph, topic, chosen)
    reply = _phrase_for(kb, chosen)
    turn = BotTurn(reply=reply, topic=topic, chosen=chosen, path=path, rcc=result)
    state.turns.append(
        TurnRecord(
            utterance=utterance,
            topic=topic,
            chosen=chosen,
            reply=reply,
            path=path.to_json_dict(),
        )
    )
    return turn


def no_model_reply(topic: str) -> str:
    title = _title_case(atom_struct(topic).args[1].text) if "(" in topic else topic
    return (
        f"I'd rather not get into {title}. "
        "Is there another movie or actor you like?"
    )


def no_talking_point_reply() -> str:
    return (
        "I think we've covered everything I know there. "
        "What other movie or actor do you like?"
    )
