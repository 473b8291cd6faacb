from __future__ import annotations

from dataclasses import dataclass, fields


@dataclass
class BuildStats:
    """Counters collected while building.

    ``rr_visits`` counts replace-or-register decisions.  For the sorted builder
    it equals the number of trie states for the input *minus one*: the start
    state is never replaced or registered.
    """

    words_read: int = 0
    duplicates_skipped: int = 0
    final_states: int = 0
    live_states: int = 0
    transitions: int = 0
    peak_live_states: int = 0
    rr_visits: int = 0
    wall_time: float = 0.0

    def capture(self, automaton) -> None:
        self.final_states = automaton.num_finals()
        self.live_states = automaton.live_count
        self.transitions = automaton.num_transitions()
        self.peak_live_states = automaton.peak_live

    def as_lines(self) -> list[str]:
        out = []
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, float):
                value = f"{value:.6f}"
            out.append(f"{f.name}={value}")
        return out
