"""Strictly increasing positive measure functions and empirical bound checks.

A measure function serves two roles: as a runtime bound g and as a transform
T of the input length. Bound checking composes them in one of three modes:
plain g(x), outer g(T(x)), inner T(g(x)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from tmbench.cost import CostModel, counted_set
from tmbench.machine import (
    Machine,
    Verdict,
    initial_configuration,
    require_valid,
    run_configuration,
)

FAMILIES = ("identity", "linear", "log", "power", "exp2")

# slack for the integer step comparison; bounds computed through log/pow can
# land a hair under an exact integer
EPS = 1e-9


@dataclass(frozen=True)
class MeasureFunction:
    """One of: identity x; linear a*x+b; log a*log2(x+1)+b; power a*x^k; exp2 a*2^x."""

    family: str
    a: float = 1.0
    b: float = 0.0
    k: float = 1.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown measure family {self.family!r}")
        if self.a <= 0:
            raise ValueError("parameter a must be > 0")
        if self.b < 0:
            raise ValueError("parameter b must be >= 0")
        if self.k <= 0:
            raise ValueError("parameter k must be > 0")

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def describe(self) -> str:
        if self.family == "identity":
            return "identity"
        if self.family == "linear":
            return f"linear:a={self.a},b={self.b}"
        if self.family == "log":
            return f"log:a={self.a},b={self.b}"
        if self.family == "power":
            return f"power:a={self.a},k={self.k}"
        return f"exp2:a={self.a}"


IDENTITY = MeasureFunction("identity")


def evaluate(f: MeasureFunction, x: float) -> float:
    """Evaluate f at x > 0 in double precision."""
    if x <= 0:
        raise ValueError(f"measure functions are defined on (0, inf); got x={x}")
    if f.family == "identity":
        return float(x)
    if f.family == "linear":
        return f.a * x + f.b
    if f.family == "log":
        return f.a * math.log2(x + 1.0) + f.b
    if f.family == "power":
        return f.a * x ** f.k
    return f.a * 2.0 ** x


def check_monotone_sample(f: MeasureFunction, xs: Sequence[float]) -> bool:
    """Strict monotonicity probe on a strictly increasing positive sample."""
    if len(xs) < 2:
        raise ValueError("sample needs at least two points")
    if any(x <= 0 for x in xs):
        raise ValueError("sample points must be positive")
    if any(not (xs[i] < xs[i + 1]) for i in range(len(xs) - 1)):
        raise ValueError("sample must be strictly increasing")
    values = [evaluate(f, x) for x in xs]
    return all(values[i] < values[i + 1] for i in range(len(values) - 1))


MODE_PLAIN = "plain"
MODE_OUTER = "outer"
MODE_INNER = "inner"


@dataclass(frozen=True)
class BoundSpec:
    g: MeasureFunction
    mode: str = MODE_PLAIN
    transform: Optional[MeasureFunction] = None

    def __post_init__(self):
        if self.mode not in (MODE_PLAIN, MODE_OUTER, MODE_INNER):
            raise ValueError(f"unknown bound mode {self.mode!r}")
        if (self.transform is not None) != (self.mode != MODE_PLAIN):
            raise ValueError("transform must be present exactly when mode is outer/inner")

    def bound(self, x: float) -> float:
        if self.mode == MODE_PLAIN:
            return evaluate(self.g, x)
        assert self.transform is not None
        if self.mode == MODE_OUTER:
            return evaluate(self.g, evaluate(self.transform, x))
        return evaluate(self.transform, evaluate(self.g, x))


@dataclass(frozen=True)
class BoundRow:
    input: str
    length: int
    counted_steps: int
    bound: float
    passed: bool


@dataclass(frozen=True)
class BoundReport:
    per_input: tuple[BoundRow, ...]
    verdict: bool
    worst_margin: float


def bound_passes(counted: int, bound: float) -> bool:
    return counted <= math.floor(bound + EPS)


def check_bound(
    m: Machine,
    cost: CostModel,
    spec: BoundSpec,
    inputs: Sequence[str],
    fuel: int = 10_000,
) -> BoundReport:
    """Run m on each input and compare counted steps against the bound.

    The empty word lies outside the measure domain and is checked against the
    bound at length 1.
    """
    if not inputs:
        raise ValueError("inputs must be non-empty")
    require_valid(m)
    keys = counted_set(m, cost)
    rows = []
    worst = -math.inf
    for word in inputs:
        config = initial_configuration(m, word)
        result = run_configuration(m, config, keys, fuel, record_trace=False)
        bound = spec.bound(max(len(word), 1))
        if result.verdict is Verdict.FUEL_EXHAUSTED:
            rows.append(BoundRow(word, len(word), result.counted_steps, bound, False))
            worst = math.inf
            continue
        ok = bound_passes(result.counted_steps, bound)
        rows.append(BoundRow(word, len(word), result.counted_steps, bound, ok))
        worst = max(worst, result.counted_steps - bound)
    return BoundReport(
        per_input=tuple(rows),
        verdict=all(r.passed for r in rows),
        worst_margin=worst,
    )


def parse_measure(text: str) -> MeasureFunction:
    """Parse the command-line syntax: identity | linear:a=..,b=.. | log:a=..,b=..
    | power:a=..,k=.. | exp2:a=.."""
    if text == "identity":
        return IDENTITY
    if ":" not in text:
        raise ValueError(f"bad measure syntax {text!r}")
    family, _, argtext = text.partition(":")
    if family not in FAMILIES:
        raise ValueError(f"unknown measure family {family!r}")
    kwargs = {}
    for item in argtext.split(","):
        name, sep, value = item.partition("=")
        if not sep or name not in ("a", "b", "k"):
            raise ValueError(f"bad measure parameter {item!r}")
        kwargs[name] = float(value)
    allowed = {"linear": {"a", "b"}, "log": {"a", "b"}, "power": {"a", "k"}, "exp2": {"a"}}
    extra = set(kwargs) - allowed.get(family, set())
    if extra:
        raise ValueError(f"parameters {sorted(extra)} not valid for {family}")
    return MeasureFunction(family, **kwargs)
