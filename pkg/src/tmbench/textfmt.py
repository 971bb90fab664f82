"""Line-oriented machine file format.

    # comment
    states: q_scan q_accept q_reject
    start: q_scan
    accept: q_accept
    reject: q_reject
    input_alphabet: 0 1
    tape_alphabet: 0 1 _
    trans: q_scan 0 -> q_scan 0 R

Symbols are single characters; '_' is the blank and must appear in the tape
alphabet but not the input alphabet. One trans line per (state, symbol) pair.
"""

from __future__ import annotations

from tmbench.machine import BLANK, LEFT, RIGHT, Machine, validate_machine


class MachineParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_machine_file(text: str) -> Machine:
    """Parse the text format into a validated Machine."""
    headers: dict[str, tuple[int, list[str]]] = {}
    transitions: dict[tuple[str, str], tuple[str, str, str]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise MachineParseError(line_no, f"expected '<key>: ...', got {raw.strip()!r}")
        tokens = rest.split()
        if key == "trans":
            _parse_trans(line_no, tokens, transitions)
        elif key in ("states", "start", "accept", "reject", "input_alphabet",
                     "tape_alphabet"):
            if key in headers:
                raise MachineParseError(line_no, f"duplicate {key!r} line")
            headers[key] = (line_no, tokens)
        else:
            raise MachineParseError(line_no, f"unknown key {key!r}")

    for required in ("states", "start", "accept", "reject", "input_alphabet",
                     "tape_alphabet"):
        if required not in headers:
            raise MachineParseError(0, f"missing {required!r}")
    for single in ("start", "accept", "reject"):
        line_no, tokens = headers[single]
        if len(tokens) != 1:
            raise MachineParseError(line_no, f"{single!r} takes exactly one state")
    for alpha in ("input_alphabet", "tape_alphabet"):
        line_no, tokens = headers[alpha]
        for sym in tokens:
            if len(sym) != 1:
                raise MachineParseError(line_no, f"symbol {sym!r} is not a single character")
    line_no, tape_syms = headers["tape_alphabet"]
    if BLANK not in tape_syms:
        raise MachineParseError(line_no, "tape alphabet must include '_'")
    line_no, input_syms = headers["input_alphabet"]
    if BLANK in input_syms:
        raise MachineParseError(line_no, "input alphabet must not include '_'")

    machine = Machine(
        input_alphabet=frozenset(input_syms),
        tape_alphabet=frozenset(tape_syms),
        states=frozenset(headers["states"][1]),
        start_state=headers["start"][1][0],
        accept_state=headers["accept"][1][0],
        reject_state=headers["reject"][1][0],
        transitions=transitions,
    )
    defects = validate_machine(machine)
    if defects:
        raise MachineParseError(0, "invalid machine: " + "; ".join(defects))
    return machine


def _parse_trans(line_no, tokens, transitions):
    if len(tokens) != 6 or tokens[2] != "->":
        raise MachineParseError(
            line_no, "expected 'trans: <state> <sym> -> <state> <sym> <L|R>'")
    src, read, _, target, write, move = tokens
    if len(read) != 1 or len(write) != 1:
        raise MachineParseError(line_no, "symbols must be single characters")
    if move not in (LEFT, RIGHT):
        raise MachineParseError(line_no, f"move must be L or R, got {move!r}")
    if (src, read) in transitions:
        raise MachineParseError(line_no, f"duplicate transition for ({src}, {read})")
    transitions[(src, read)] = (target, write, move)


def emit_machine(m: Machine) -> str:
    """Render in the text format; output is canonical (sorted) so emitting the
    same machine twice is byte-identical."""
    lines = [
        "states: " + " ".join(sorted(m.states)),
        "start: " + m.start_state,
        "accept: " + m.accept_state,
        "reject: " + m.reject_state,
        "input_alphabet: " + " ".join(sorted(m.input_alphabet)),
        "tape_alphabet: " + " ".join(sorted(m.tape_alphabet)),
    ]
    for (src, read), (target, write, move) in sorted(m.transitions.items()):
        lines.append(f"trans: {src} {read} -> {target} {write} {move}")
    return "\n".join(lines) + "\n"
