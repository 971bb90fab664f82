"""Deterministic single-tape Turing machine model and simulator.

A machine halts exactly in its accept or reject state; every other
(state, symbol) pair must have a transition. The tape is two-way infinite;
the head starts on cell 0, which holds the first input symbol. Moves are
'L'/'R', i.e. head index -1/+1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

BLANK = "_"
LEFT = "L"
RIGHT = "R"

# transition value: (target state, written symbol, move)
Transition = tuple[str, str, str]


class InvalidInputError(ValueError):
    """Input word contains a symbol outside the machine's input alphabet."""


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    FUEL_EXHAUSTED = "fuel-exhausted"


@dataclass(frozen=True)
class Machine:
    input_alphabet: frozenset[str]
    tape_alphabet: frozenset[str]
    states: frozenset[str]
    start_state: str
    accept_state: str
    reject_state: str
    transitions: Mapping[tuple[str, str], Transition]

    @property
    def halting_states(self) -> frozenset[str]:
        return frozenset({self.accept_state, self.reject_state})

    def is_halting(self, state: str) -> bool:
        return state == self.accept_state or state == self.reject_state


@dataclass(frozen=True)
class StepRecord:
    """One applied transition: where it fired and what it did."""

    state: str
    head: int
    read: str
    write: str
    move: str
    target: str
    counted: bool


@dataclass
class Configuration:
    state: str
    tape: dict[int, str]  # only non-blank cells are stored
    head: int

    def scanned(self) -> str:
        return self.tape.get(self.head, BLANK)


@dataclass(frozen=True)
class RunResult:
    verdict: Verdict
    total_steps: int
    counted_steps: int
    trace: Optional[tuple[StepRecord, ...]] = None
    final: Optional[Configuration] = field(default=None, compare=False)


def validate_machine(m: Machine) -> list[str]:
    """Check all structural invariants; returns a list of defects (empty = ok)."""
    defects: list[str] = []

    if BLANK in m.input_alphabet:
        defects.append("input alphabet contains the blank symbol")
    if BLANK not in m.tape_alphabet:
        defects.append("tape alphabet missing the blank symbol")
    if not m.input_alphabet <= m.tape_alphabet:
        defects.append("input alphabet not a subset of tape alphabet")
    for sym in sorted(m.tape_alphabet):
        if len(sym) != 1:
            defects.append(f"symbol {sym!r} is not a single character")

    named = {"start": m.start_state, "accept": m.accept_state, "reject": m.reject_state}
    for role, q in named.items():
        if q not in m.states:
            defects.append(f"{role} state {q!r} not in state set")
    if len({m.start_state, m.accept_state, m.reject_state}) != 3:
        defects.append("halting states not distinct (start/accept/reject must differ)")

    non_halting = m.states - {m.accept_state, m.reject_state}
    for q in sorted(non_halting):
        for sym in sorted(m.tape_alphabet):
            if (q, sym) not in m.transitions:
                defects.append(f"transition table not total: missing ({q}, {sym})")
    for (q, sym), (target, write, move) in sorted(m.transitions.items()):
        if q in (m.accept_state, m.reject_state):
            defects.append(f"transition from halting state ({q}, {sym})")
        if q not in m.states:
            defects.append(f"transition from unknown state {q!r}")
        if sym not in m.tape_alphabet:
            defects.append(f"transition reads symbol {sym!r} outside tape alphabet")
        if target not in m.states:
            defects.append(f"transition ({q}, {sym}) targets unknown state {target!r}")
        if write not in m.tape_alphabet:
            defects.append(f"transition ({q}, {sym}) writes {write!r} outside tape alphabet")
        if move not in (LEFT, RIGHT):
            defects.append(f"transition ({q}, {sym}) has move {move!r}, expected L or R")
    return defects


def require_valid(m: Machine) -> None:
    defects = validate_machine(m)
    if defects:
        raise ValueError("invalid machine: " + "; ".join(defects))


def initial_configuration(m: Machine, input_word: str) -> Configuration:
    """Start configuration: input in cells 0..len-1, head at cell 0.

    The empty word leaves the tape all blank, so the head scans blank
    immediately.
    """
    for ch in input_word:
        if ch not in m.input_alphabet:
            raise InvalidInputError(f"symbol {ch!r} not in input alphabet")
    tape = {i: ch for i, ch in enumerate(input_word)}
    return Configuration(state=m.start_state, tape=tape, head=0)


def step(m: Machine, c: Configuration) -> Optional[tuple[Configuration, StepRecord]]:
    """Apply one transition in place; returns None when c is already halted."""
    if m.is_halting(c.state):
        return None
    read = c.scanned()
    target, write, move = m.transitions[(c.state, read)]
    record = StepRecord(
        state=c.state, head=c.head, read=read, write=write, move=move,
        target=target, counted=True,
    )
    if write == BLANK:
        c.tape.pop(c.head, None)
    else:
        c.tape[c.head] = write
    c.head += 1 if move == RIGHT else -1
    c.state = target
    return c, record


def run_configuration(
    m: Machine,
    config: Configuration,
    counted_keys: Optional[frozenset[tuple[str, str]]],
    fuel: int,
    record_trace: bool = True,
) -> RunResult:
    """Iterate from an arbitrary configuration until halt or fuel runs out.

    counted_keys is the set of (state, read symbol) table entries the active
    cost model counts; None counts everything.
    """
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    total = 0
    counted = 0
    trace: list[StepRecord] = []
    while total < fuel:
        result = step(m, config)
        if result is None:
            break
        _, record = result
        total += 1
        is_counted = counted_keys is None or (record.state, record.read) in counted_keys
        counted += is_counted
        if record_trace:
            trace.append(
                record if is_counted else
                StepRecord(record.state, record.head, record.read, record.write,
                           record.move, record.target, counted=False)
            )
    if config.state == m.accept_state:
        verdict = Verdict.ACCEPTED
    elif config.state == m.reject_state:
        verdict = Verdict.REJECTED
    else:
        verdict = Verdict.FUEL_EXHAUSTED
    return RunResult(
        verdict=verdict,
        total_steps=total,
        counted_steps=counted,
        trace=tuple(trace) if record_trace else None,
        final=config,
    )


def run(m: Machine, input_word: str, cost=None, fuel: int = 10_000,
        record_trace: bool = True) -> RunResult:
    """Simulate m on input_word under a cost model, bounded by fuel total steps."""
    # local import: cost depends on machine, not the other way around
    from tmbench.cost import COUNT_ALL, counted_set

    if fuel <= 0:
        raise ValueError("fuel must be positive")
    require_valid(m)
    cost = cost if cost is not None else COUNT_ALL
    keys = frozenset(counted_set(m, cost))
    config = initial_configuration(m, input_word)
    return run_configuration(m, config, keys, fuel, record_trace=record_trace)


def all_words(alphabet: Iterable[str], max_len: int) -> list[str]:
    """All words up to max_len in length-then-lexicographic order."""
    symbols = sorted(alphabet)
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + s for w in frontier for s in symbols]
        out.extend(frontier)
    return out
