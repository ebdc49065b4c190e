"""Import adapter stub for external movie datasets.

The bundled knowledge base is synthetic; hooking up a real dataset means
producing a fact file in the schema below and pointing DISCASP_KB_DIR at it.
No importer ships here by design.
"""

from __future__ import annotations

FACT_SCHEMA = {
    "movie(title)": "one per movie; lowercase_snake_case title constant",
    "genre(title, genre)": "zero or more per movie",
    "director(name)": "declares a director constant",
    "movie_director(title, name)": "one per movie",
    "actor(name)": "declares an actor constant",
    "movie_actor(title, name)": "one per cast credit",
    "main_actor(name, title)": "the lead credit, at most a few per movie",
    "famous_actor(name)": "marks widely known actors",
    "award_won(name, oscar)": "actor award facts consulted by talking points",
    "actor_has_award(name)": "any notable actor award",
    "director_award(name, oscar)": "director award facts",
    "movie_award(title, award)": "awards won by the movie itself",
    "has_trivia(title)": "marks titles with trivia material",
    "is_adult_movie(title)": "age-restricted titles",
    "age_category(person, adult|young|children)": "user profile",
    "gender(person, male|female)": "user profile, optional",
    "prefers_person_talk(person)": "enables cast-versus-crew talking points",
}


def import_dataset(source_path: str, output_facts_path: str) -> None:
    """Placeholder for a real dataset importer.

    An implementation would read ``source_path`` and write ``.lp`` facts in
    the :data:`FACT_SCHEMA` layout to ``output_facts_path``.
    """
    raise NotImplementedError(
        "no dataset importer is bundled; write facts matching FACT_SCHEMA"
    )
