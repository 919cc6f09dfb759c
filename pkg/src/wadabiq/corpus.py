"""Named diagrams shipped with the package, and pairs of them known to be
related by Reidemeister or Markov moves."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .diagram import Diagram, diagram_from_text


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    text: str
    note: str

    def diagram(self, mirror: bool = False) -> Diagram:
        return diagram_from_text(self.text, mirror=mirror)


@lru_cache(maxsize=None)
def _load():
    raw = json.loads(resources.files(__package__).joinpath("data/corpus.json").read_text())
    entries = {e["name"]: CorpusEntry(e["name"], e["text"], e["note"]) for e in raw["entries"]}
    pairs = tuple(tuple(p) for p in raw["equivalent"])
    return entries, pairs


def names() -> list[str]:
    return list(_load()[0])


def entry(name: str) -> CorpusEntry:
    entries = _load()[0]
    if name not in entries:
        raise KeyError(f"no corpus entry {name!r}; known: {', '.join(entries)}")
    return entries[name]


def entries() -> list[CorpusEntry]:
    return list(_load()[0].values())


def load(name: str, mirror: bool = False) -> Diagram:
    return entry(name).diagram(mirror)


def equivalent_pairs() -> list[tuple[str, str, str]]:
    """``(name_a, name_b, move)`` for hand-curated equivalent diagrams."""
    return list(_load()[1])
