"""Movie socialbot: knowledge base, dialog manager, HTTP service."""

from .dialog import (
    BotTurn,
    DEFAULT_RADIUS,
    DialogState,
    next_turn,
    parse_utterance,
)
from .kb import MovieKB, bundled_kb, grounded_rule_count, load_kb

__all__ = [
    "BotTurn",
    "DEFAULT_RADIUS",
    "DialogState",
    "MovieKB",
    "bundled_kb",
    "grounded_rule_count",
    "load_kb",
    "next_turn",
    "parse_utterance",
]
