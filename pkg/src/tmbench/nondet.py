"""Nondeterminism via checking relations: a deterministic checker machine
runs on (input, certificate) pairs and the decision procedure searches all
certificates within a length bound.

Two certificate deliveries:
  inline     — tape holds x '#' y, head at cell 0;
  positioned — tape holds x alone, head starts at the cell whose index is the
               base-2 value of y (empty y = cell 0). This models constant-cost
               array indexing: the seek is paid by the convention, not by steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Optional

from tmbench.cost import CostModel, COUNT_ALL, counted_set
from tmbench.machine import (
    BLANK,
    RIGHT,
    Configuration,
    Machine,
    Verdict,
    require_valid,
    run_configuration,
)
from tmbench.measures import EPS, MeasureFunction, evaluate

SEPARATOR = "#"

DELIVERY_INLINE = "inline"
DELIVERY_POSITIONED = "positioned"

DEFAULT_CERTIFICATE_BUDGET = 2 ** 20


class CertificateBudgetError(RuntimeError):
    """The certificate length bound admits more candidates than the budget."""


@dataclass(frozen=True)
class CheckingRelation:
    checker: Machine
    delivery: str
    certificate_alphabet: frozenset[str] = frozenset({"0", "1"})

    def __post_init__(self):
        if self.delivery not in (DELIVERY_INLINE, DELIVERY_POSITIONED):
            raise ValueError(f"unknown delivery {self.delivery!r}")
        if self.delivery == DELIVERY_INLINE:
            if SEPARATOR not in self.checker.tape_alphabet:
                raise ValueError("inline delivery requires '#' in the checker tape alphabet")
            if SEPARATOR in self.checker.input_alphabet:
                raise ValueError("'#' must not be an input symbol")
        else:
            if self.certificate_alphabet != frozenset({"0", "1"}):
                raise ValueError("positioned delivery requires certificates over {0,1}")


@dataclass(frozen=True)
class CertificateSearchReport:
    accepted: bool
    witness: Optional[str]
    certificates_tried: int
    max_checker_counted_steps: int


def deliver(rel: CheckingRelation, x: str, y: str) -> Configuration:
    """Initial checker configuration for the pair (x, y)."""
    m = rel.checker
    if rel.delivery == DELIVERY_INLINE:
        word = x + SEPARATOR + y
        tape = {i: ch for i, ch in enumerate(word) if ch != BLANK}
        return Configuration(state=m.start_state, tape=tape, head=0)
    position = int(y, 2) if y else 0
    tape = {i: ch for i, ch in enumerate(x)}
    return Configuration(state=m.start_state, tape=tape, head=position)


def certificates_up_to(alphabet: frozenset[str], max_len: int):
    """All certificates with length <= max_len, length-then-lexicographic."""
    symbols = sorted(alphabet)
    for length in range(max_len + 1):
        for tup in product(symbols, repeat=length):
            yield "".join(tup)


def _count_certificates(alphabet_size: int, max_len: int) -> int:
    return sum(alphabet_size ** l for l in range(max_len + 1))


def _search(
    rel: CheckingRelation,
    lengths_ok,
    max_len: int,
    x: str,
    cost: CostModel,
    fuel: int,
    budget: int,
) -> CertificateSearchReport:
    require_valid(rel.checker)
    total = _count_certificates(len(rel.certificate_alphabet), max_len)
    if total > budget:
        raise CertificateBudgetError(
            f"{total} certificates admitted by the length bound exceed the budget {budget}"
        )
    keys = counted_set(rel.checker, cost)
    tried = 0
    max_counted = 0
    witness = None
    for y in certificates_up_to(rel.certificate_alphabet, max_len):
        if not lengths_ok(len(y)):
            continue
        tried += 1
        result = run_configuration(rel.checker, deliver(rel, x, y), keys, fuel,
                                   record_trace=False)
        max_counted = max(max_counted, result.counted_steps)
        if result.verdict is Verdict.ACCEPTED:
            witness = y
            break
    return CertificateSearchReport(
        accepted=witness is not None,
        witness=witness,
        certificates_tried=tried,
        max_checker_counted_steps=max_counted,
    )


def decide_nc(
    rel: CheckingRelation,
    g: MeasureFunction,
    x: str,
    cost: CostModel = COUNT_ALL,
    fuel: int = 10_000,
    budget: int = DEFAULT_CERTIFICATE_BUDGET,
) -> CertificateSearchReport:
    """Membership by exhaustive certificate search: accept iff some y with
    |y| <= g(|x|) makes the checker accept (empty x is bounded at length 1).

    The witness is the first accepting certificate in canonical
    length-then-lexicographic order; acceptance itself is order-free.
    """
    max_len = math.floor(evaluate(g, max(len(x), 1)) + EPS)
    return _search(rel, lambda ly: True, max_len, x, cost, fuel, budget)


def decide_nt(
    rel: CheckingRelation,
    g: MeasureFunction,
    transform: MeasureFunction,
    x: str,
    cost: CostModel = COUNT_ALL,
    fuel: int = 10_000,
    budget: int = DEFAULT_CERTIFICATE_BUDGET,
) -> CertificateSearchReport:
    """Transformed search: certificate lengths admitted when
    T(max(|y|,1)) <= g(T(max(|x|,1))) + eps."""
    rhs = evaluate(g, evaluate(transform, max(len(x), 1))) + EPS

    def lengths_ok(ly: int) -> bool:
        return evaluate(transform, max(ly, 1)) <= rhs

    # T is strictly increasing, so admitted lengths form a prefix of 0,1,2,...
    max_len = 0
    while lengths_ok(max_len + 1):
        max_len += 1
        if _count_certificates(len(rel.certificate_alphabet), max_len) > budget:
            raise CertificateBudgetError(
                f"transformed length bound exceeds the certificate budget {budget}"
            )
    if not lengths_ok(0):
        # even the empty certificate is filtered out; vacuous search
        return CertificateSearchReport(False, None, 0, 0)
    return _search(rel, lengths_ok, max_len, x, cost, fuel, budget)


def _machine(states, start, accept, reject, trans) -> Machine:
    return Machine(
        input_alphabet=frozenset({"0", "1"}),
        tape_alphabet=frozenset({"0", "1", BLANK}),
        states=frozenset(states),
        start_state=start,
        accept_state=accept,
        reject_state=reject,
        transitions=trans,
    )


def build_scanner() -> Machine:
    """Left-to-right scanner for words containing a '1': accepts on the first
    '1', rejects when it falls off the right end. Worst case reads every cell."""
    trans = {
        ("q_scan", "0"): ("q_scan", "0", RIGHT),
        ("q_scan", "1"): ("q_accept", "1", RIGHT),
        ("q_scan", BLANK): ("q_reject", BLANK, RIGHT),
    }
    return _machine({"q_scan", "q_accept", "q_reject"}, "q_scan", "q_accept",
                    "q_reject", trans)


def build_positioned_checker() -> CheckingRelation:
    """Single-cell checker: accept iff the scanned cell holds '1'. Combined
    with positioned delivery its counted work is constant in the input length."""
    trans = {
        ("q_check", "1"): ("q_accept", "1", RIGHT),
        ("q_check", "0"): ("q_reject", "0", RIGHT),
        ("q_check", BLANK): ("q_reject", BLANK, RIGHT),
    }
    checker = _machine({"q_check", "q_accept", "q_reject"}, "q_check", "q_accept",
                       "q_reject", trans)
    return CheckingRelation(checker=checker, delivery=DELIVERY_POSITIONED)


def build_demo_machines() -> tuple[Machine, CheckingRelation]:
    """The linear-time scanner and the constant-work positioned checker for
    the contains-a-1 language."""
    return build_scanner(), build_positioned_checker()
