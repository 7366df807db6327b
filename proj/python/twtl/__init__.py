"""Time window temporal logic: automata, temporal relaxation and synthesis."""

from ._twtl import (
    Dfa,
    Error,
    Formula,
    TransitionSystem,
    __version__,
    learn_deadlines,
    load_dump,
    load_ts,
    parse,
    parse_word,
    synthesize,
    temporal_relaxation,
    translate,
    verify,
)

__all__ = [
    "Dfa",
    "Error",
    "Formula",
    "TransitionSystem",
    "__version__",
    "learn_deadlines",
    "load_dump",
    "load_ts",
    "parse",
    "parse_word",
    "synthesize",
    "temporal_relaxation",
    "translate",
    "verify",
]
