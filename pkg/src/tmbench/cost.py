"""Transition-cost models: which transition-table entries count toward the
length of a computation.

A cost model is a property of the transition table alone. It never looks at
tape contents, head position, or step index, so the counted set can be
computed once per (machine, model) pair and applied to any run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from tmbench.machine import Machine, RunResult

# predicate arguments: (source state, read symbol, write symbol, move, target state)
TransitionPredicate = Callable[[str, str, str, str, str], bool]

KIND_COUNT_ALL = "count-all"
KIND_FREE_BLIND = "free-blind"
KIND_FREE_STATES = "free-states"
KIND_CUSTOM = "custom"


@dataclass(frozen=True)
class CostModel:
    kind: str
    free_states: frozenset[str] = frozenset()
    predicate: Optional[TransitionPredicate] = None

    @staticmethod
    def count_all() -> "CostModel":
        return CostModel(kind=KIND_COUNT_ALL)

    @staticmethod
    def free_blind_moves() -> "CostModel":
        return CostModel(kind=KIND_FREE_BLIND)

    @staticmethod
    def free_states_model(states) -> "CostModel":
        return CostModel(kind=KIND_FREE_STATES, free_states=frozenset(states))

    @staticmethod
    def custom(predicate: TransitionPredicate) -> "CostModel":
        return CostModel(kind=KIND_CUSTOM, predicate=predicate)


COUNT_ALL = CostModel.count_all()
FREE_BLIND = CostModel.free_blind_moves()


def is_blind_state(m: Machine, q: str) -> bool:
    """True iff q only moves the head: a single target state and direction,
    and every symbol is written back unchanged, for all of the tape alphabet."""
    if q not in m.states:
        raise ValueError(f"unknown state {q!r}")
    if m.is_halting(q):
        raise ValueError(f"state {q!r} is halting, blindness is undefined")
    target_dir: Optional[tuple[str, str]] = None
    for sym in m.tape_alphabet:
        target, write, move = m.transitions[(q, sym)]
        if write != sym:
            return False
        if target_dir is None:
            target_dir = (target, move)
        elif (target, move) != target_dir:
            return False
    return True


def counted_set(m: Machine, cost: CostModel) -> frozenset[tuple[str, str]]:
    """The (state, symbol) table entries this model counts."""
    keys = m.transitions.keys()
    if cost.kind == KIND_COUNT_ALL:
        return frozenset(keys)
    if cost.kind == KIND_FREE_BLIND:
        non_halting = m.states - {m.accept_state, m.reject_state}
        blind = {q for q in non_halting if is_blind_state(m, q)}
        return frozenset(k for k in keys if k[0] not in blind)
    if cost.kind == KIND_FREE_STATES:
        unknown = cost.free_states - m.states
        if unknown:
            raise ValueError(f"free-states names unknown states: {sorted(unknown)}")
        return frozenset(k for k in keys if k[0] not in cost.free_states)
    if cost.kind == KIND_CUSTOM:
        assert cost.predicate is not None
        out = set()
        for (q, sym), (target, write, move) in m.transitions.items():
            if cost.predicate(q, sym, write, move, target):
                out.add((q, sym))
        return frozenset(out)
    raise ValueError(f"unknown cost model kind {cost.kind!r}")


def counted_length(result: RunResult) -> int:
    """Computation length under the active cost model."""
    return result.counted_steps


def parse_cost_model(text: str) -> CostModel:
    """Parse the command-line syntax: count-all | free-blind | free-states:q1,q2,..."""
    if text == "count-all":
        return COUNT_ALL
    if text == "free-blind":
        return FREE_BLIND
    if text.startswith("free-states:"):
        names = [s for s in text[len("free-states:"):].split(",") if s]
        if not names:
            raise ValueError("free-states: requires at least one state name")
        return CostModel.free_states_model(names)
    raise ValueError(f"unknown cost model {text!r}")
