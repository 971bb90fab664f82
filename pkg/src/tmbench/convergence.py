"""Lookup-trie machine synthesis and language-sequence convergence.

For a language L over {0,1} and a depth bound n, the trie machine has one
state per bit-string prefix of length <= n. It consumes the input left to
right, descending the trie one state per symbol; reading blank triggers a
membership lookup baked in at construction time. The machine accepts exactly
the words of L with length <= n, in |w| + 1 steps; longer words are rejected
on the (n+1)-th symbol.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from tmbench.machine import (
    BLANK,
    RIGHT,
    Machine,
    Verdict,
    all_words,
    initial_configuration,
    run_configuration,
)

MAX_TRIE_DEPTH = 20
LONG_WORD_SAMPLE = 256
LONG_WORD_SEED = 20260823


class TrieSizeError(ValueError):
    """Requested depth would exceed the state-table budget."""


def _contains_1(w: str) -> bool:
    return "1" in w


def _parity_even_ones(w: str) -> bool:
    return w.count("1") % 2 == 0


def _palindrome(w: str) -> bool:
    return w == w[::-1]


def _div3(w: str) -> bool:
    # the empty word reads as the numeral 0, which is divisible
    return int(w, 2) % 3 == 0 if w else True


BUILTIN_LANGUAGES: dict[str, Callable[[str], bool]] = {
    "contains-1": _contains_1,
    "parity-even-ones": _parity_even_ones,
    "palindrome": _palindrome,
    "all": lambda w: True,
    "empty": lambda w: False,
    "div3": _div3,
}


@dataclass(frozen=True)
class LanguageOracle:
    """Membership predicate over {0,1}*: a named built-in or a finite word set."""

    kind: str  # "builtin" or "finite"
    name: Optional[str] = None
    words: frozenset[str] = frozenset()

    @staticmethod
    def builtin(name: str) -> "LanguageOracle":
        if name not in BUILTIN_LANGUAGES:
            raise ValueError(f"unknown built-in language {name!r}; "
                             f"choose from {sorted(BUILTIN_LANGUAGES)}")
        return LanguageOracle(kind="builtin", name=name)

    @staticmethod
    def finite(words) -> "LanguageOracle":
        ws = frozenset(words)
        for w in ws:
            if any(ch not in "01" for ch in w):
                raise ValueError(f"word {w!r} is not over {{0,1}}")
        return LanguageOracle(kind="finite", words=ws)

    def __call__(self, word: str) -> bool:
        if self.kind == "builtin":
            assert self.name is not None
            return BUILTIN_LANGUAGES[self.name](word)
        return word in self.words

    def describe(self) -> str:
        return self.name if self.kind == "builtin" else f"finite({len(self.words)} words)"


@dataclass(frozen=True)
class TrieMachineReport:
    machine: Machine
    n: int
    oracle_queries: int
    state_count: int


@dataclass(frozen=True)
class ConvergenceReport:
    k: int
    n_k: Optional[int]
    verified_words: int


def _state_name(prefix: str) -> str:
    return "q_" + prefix


def build_trie_machine(L: LanguageOracle, n: int,
                       max_depth: int = MAX_TRIE_DEPTH) -> TrieMachineReport:
    """Compile the oracle into the depth-n trie machine.

    States are named after the prefix read so far ("q_" is the empty prefix
    and the start state), which keeps words with leading zeros distinct.
    Consumed symbols are overwritten with blank.
    """
    if n < 0:
        raise ValueError("depth must be nonnegative")
    if n > max_depth:
        raise TrieSizeError(
            f"depth {n} needs 2^{n + 1}+1 states, over the budget (max depth {max_depth})"
        )
    accept, reject = "q_accept", "q_reject"
    states = {accept, reject}
    transitions: dict[tuple[str, str], tuple[str, str, str]] = {}
    queries = 0

    prefixes = [""]
    frontier = [""]
    for _ in range(n):
        frontier = [p + bit for p in frontier for bit in "01"]
        prefixes.extend(frontier)

    for prefix in prefixes:
        q = _state_name(prefix)
        states.add(q)
        if len(prefix) < n:
            for bit in "01":
                transitions[(q, bit)] = (_state_name(prefix + bit), BLANK, RIGHT)
        else:
            # depth cap: an (n+1)-th symbol is a rejection
            for bit in "01":
                transitions[(q, bit)] = (reject, BLANK, RIGHT)
        queries += 1
        member = L(prefix)
        transitions[(q, BLANK)] = (accept if member else reject, BLANK, RIGHT)

    machine = Machine(
        input_alphabet=frozenset({"0", "1"}),
        tape_alphabet=frozenset({"0", "1", BLANK}),
        states=frozenset(states),
        start_state=_state_name(""),
        accept_state=accept,
        reject_state=reject,
        transitions=transitions,
    )
    return TrieMachineReport(
        machine=machine, n=n, oracle_queries=queries, state_count=len(states)
    )


def _long_word_sample(n: int) -> list[str]:
    """Words of length n+1 to probe past the depth cap: exhaustive for small
    n, a fixed-seed sample above."""
    if n <= 10:
        return ["".join(bits) for bits in _bit_tuples(n + 1)]
    rng = random.Random(LONG_WORD_SEED)
    return ["".join(rng.choice("01") for _ in range(n + 1))
            for _ in range(LONG_WORD_SAMPLE)]


def _bit_tuples(length: int):
    from itertools import product
    return product("01", repeat=length)


def _run_trie(machine: Machine, word: str, fuel: int):
    config = initial_configuration(machine, word)
    return run_configuration(machine, config, None, fuel, record_trace=False)


def verify_restriction(report: TrieMachineReport, L: LanguageOracle
                       ) -> tuple[bool, list[str]]:
    """Exhaustively check that the machine accepts exactly the oracle's words
    up to length n, and rejects the sampled words of length n+1."""
    machine, n = report.machine, report.n
    fuel = n + 4
    counterexamples = []
    for word in all_words("01", n):
        result = _run_trie(machine, word, fuel)
        if (result.verdict is Verdict.ACCEPTED) != L(word):
            counterexamples.append(word)
    for word in _long_word_sample(n):
        result = _run_trie(machine, word, fuel)
        if result.verdict is not Verdict.REJECTED:
            counterexamples.append(word)
    return not counterexamples, counterexamples


def verify_step_count(report: TrieMachineReport) -> bool:
    """Check |w| + 1 total steps for words within the depth bound, and n + 1
    for the sampled longer words (n consumptions to full depth, then the
    capped transition rejects on the (n+1)-th symbol)."""
    machine, n = report.machine, report.n
    fuel = n + 4
    for word in all_words("01", n):
        if _run_trie(machine, word, fuel).total_steps != len(word) + 1:
            return False
    for word in _long_word_sample(n):
        if _run_trie(machine, word, fuel).total_steps != n + 1:
            return False
    return True


def find_convergence_index(L: LanguageOracle, k: int, budget: int,
                           max_k: int = 12) -> ConvergenceReport:
    """Least sequence index n_k from which every trie machine agrees with L
    on all words of length <= k.

    Agreement is verified by running the machines; stability holds because
    agreement, once reached, persists for every later trie (checked up to
    index k, beyond which it is structural: the depth-n trie decides words of
    length <= k exactly as L whenever n >= k).
    """
    if k < 0 or k > max_k:
        raise ValueError(f"k must be in 0..{max_k}")
    if budget < k:
        raise ValueError("budget must be at least k")
    words = all_words("01", k)

    def agrees(n: int) -> bool:
        machine = build_trie_machine(L, n).machine
        fuel = n + 4
        return all(
            (_run_trie(machine, w, fuel).verdict is Verdict.ACCEPTED) == L(w)
            for w in words
        )

    agreement = [agrees(n) for n in range(min(budget, k) + 1)]
    n_k: Optional[int] = None
    for n in range(len(agreement)):
        if all(agreement[n:]):
            n_k = n
            break
    return ConvergenceReport(k=k, n_k=n_k, verified_words=len(words))
