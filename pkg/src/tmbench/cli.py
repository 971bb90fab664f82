"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 a verification command
found a counterexample. `run --exit-status` maps the verdict itself:
accepted 0, rejected 1, fuel exhausted 4.
"""

from __future__ import annotations

import argparse
import random
import sys

from tmbench.convergence import (
    LanguageOracle,
    build_trie_machine,
    find_convergence_index,
    verify_restriction,
    verify_step_count,
)
from tmbench.cost import COUNT_ALL, counted_set, parse_cost_model
from tmbench.machine import Verdict, initial_configuration, require_valid, run, run_configuration
from tmbench.measures import BoundSpec, check_bound, parse_measure
from tmbench.nondet import (
    DEFAULT_CERTIFICATE_BUDGET,
    CertificateBudgetError,
    CheckingRelation,
    build_demo_machines,
    decide_nc,
    decide_nt,
)
from tmbench.textfmt import MachineParseError, emit_machine, parse_machine_file

EMPTY_WORD_TOKEN = "eps"


def _word(text: str) -> str:
    return "" if text == EMPTY_WORD_TOKEN else text


def _render_word(word: str) -> str:
    return word if word else EMPTY_WORD_TOKEN


def load_language(spec: str) -> LanguageOracle:
    """A built-in name, or @file with one word per line ('eps' = empty word)."""
    if not spec.startswith("@"):
        return LanguageOracle.builtin(spec)
    words = []
    with open(spec[1:], encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                words.append(_word(line))
    return LanguageOracle.finite(words)


def _load_machine(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_machine_file(fh.read())


def _parse_lengths(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"lengths must be '<lo>..<hi>', got {text!r}")
    return range(int(lo), int(hi) + 1)


def _family_words(family: str, length: int) -> list[str]:
    if family == "zeros":
        return ["0" * length]
    if family == "ones":
        return ["1" * length]
    if family == "all":
        if length > 16:
            raise ValueError("family 'all' is capped at length 16")
        return [format(i, f"0{length}b") if length else ""
                for i in range(2 ** length)]
    raise ValueError(f"unknown family {family!r}")


def cmd_run(args) -> int:
    machine = _load_machine(args.machine)
    cost = parse_cost_model(args.cost)
    result = run(machine, _word(args.input), cost, fuel=args.fuel)
    print(f"verdict: {result.verdict.value}")
    print(f"total_steps: {result.total_steps}")
    print(f"counted_steps: {result.counted_steps}")
    if args.exit_status:
        return {Verdict.ACCEPTED: 0, Verdict.REJECTED: 1,
                Verdict.FUEL_EXHAUSTED: 4}[result.verdict]
    return 0


def cmd_gen_trie(args) -> int:
    report = build_trie_machine(load_language(args.lang), args.n)
    text = emit_machine(report.machine)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(f"# states={report.state_count} oracle_queries={report.oracle_queries}",
          file=sys.stderr)
    return 0


def cmd_verify_trie(args) -> int:
    oracle = load_language(args.lang)
    report = build_trie_machine(oracle, args.n)
    ok, counterexamples = verify_restriction(report, oracle)
    steps_ok = verify_step_count(report)
    print(f"restriction: {'pass' if ok else 'fail'}")
    for word in counterexamples:
        print(f"counterexample: {_render_word(word)}")
    print(f"step_count: {'pass' if steps_ok else 'fail'}")
    return 0 if ok and steps_ok else 3


def cmd_converge(args) -> int:
    report = find_convergence_index(load_language(args.lang), args.k, args.budget)
    if report.n_k is None:
        print(f"k={report.k} n_k=none verified_words={report.verified_words}")
        return 3
    print(f"k={report.k} n_k={report.n_k} verified_words={report.verified_words}")
    return 0


def cmd_profile(args) -> int:
    machine = _load_machine(args.machine)
    require_valid(machine)
    cost = parse_cost_model(args.cost)
    keys = counted_set(machine, cost)

    family, count, seed = args.family, None, None
    if family.startswith("random:"):
        params = dict(item.split("=", 1) for item in family[len("random:"):].split(","))
        count, seed = int(params["count"]), int(params["seed"])
        family = "random"

    print(f"# profile machine={args.machine} cost={args.cost} family={args.family}"
          + (f" seed={seed}" if seed is not None else ""))
    print("length,max_counted_steps,argmax_input")
    for length in _parse_lengths(args.lengths):
        if family == "random":
            rng = random.Random(seed * 1_000_003 + length)
            words = ["".join(rng.choice("01") for _ in range(length))
                     for _ in range(count)]
        else:
            words = _family_words(family, length)
        best, best_word = -1, ""
        for word in words:
            config = initial_configuration(machine, word)
            result = run_configuration(machine, config, keys, args.fuel,
                                       record_trace=False)
            if result.counted_steps > best:
                best, best_word = result.counted_steps, word
        print(f"{length},{best},{_render_word(best_word)}")
    return 0


def cmd_check_bound(args) -> int:
    machine = _load_machine(args.machine)
    cost = parse_cost_model(args.cost)
    g = parse_measure(args.g)
    transform = parse_measure(args.t) if args.t else None
    spec = BoundSpec(g=g, mode=args.mode, transform=transform)
    inputs = [_word(w) for w in args.input]
    if args.inputs_file:
        with open(args.inputs_file, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if line:
                    inputs.append(_word(line))
    report = check_bound(machine, cost, spec, inputs, fuel=args.fuel)
    print("input,length,counted_steps,bound,pass")
    for row in report.per_input:
        print(f"{_render_word(row.input)},{row.length},{row.counted_steps},"
              f"{row.bound!r},{str(row.passed).lower()}")
    print(f"# verdict={'pass' if report.verdict else 'fail'} "
          f"worst_margin={report.worst_margin!r}")
    return 0 if report.verdict else 3


def cmd_nsearch(args) -> int:
    checker = _load_machine(args.checker)
    rel = CheckingRelation(checker=checker, delivery=args.delivery)
    g = parse_measure(args.g)
    cost = parse_cost_model(args.cost)
    word = _word(args.input)
    if args.t:
        report = decide_nt(rel, g, parse_measure(args.t), word, cost,
                           fuel=args.fuel, budget=args.budget)
    else:
        report = decide_nc(rel, g, word, cost, fuel=args.fuel, budget=args.budget)
    print(f"accepted: {str(report.accepted).lower()}")
    print(f"witness: {_render_word(report.witness) if report.witness is not None else 'none'}")
    print(f"certificates_tried: {report.certificates_tried}")
    print(f"max_checker_counted_steps: {report.max_checker_counted_steps}")
    return 0


def cmd_demo_nlogtime(args) -> int:
    scanner, checker = build_demo_machines()
    g = parse_measure("log:a=1,b=1")
    print("n,scanner_counted,checker_max_counted,witness_len")
    for n in range(1, args.max_n + 1):
        scan = run(scanner, "0" * n, COUNT_ALL, fuel=4 * n + 16, record_trace=False)
        report = decide_nc(checker, g, "0" * (n - 1) + "1", COUNT_ALL, fuel=64)
        wlen = len(report.witness) if report.witness is not None else -1
        print(f"{n},{scan.counted_steps},{report.max_checker_counted_steps},{wlen}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmbench",
        description="Turing-machine workbench: simulation, cost models, "
                    "bound checking, certificate search, trie synthesis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(fn=fn)
        return p

    p = add("run", cmd_run, "simulate a machine on one input word")
    p.add_argument("--machine", required=True, help="machine file")
    p.add_argument("--input", required=True, help="input word ('eps' for the empty word)")
    p.add_argument("--cost", default="count-all",
                   help="count-all | free-blind | free-states:q1,q2,...")
    p.add_argument("--fuel", type=int, default=10_000)
    p.add_argument("--exit-status", action="store_true",
                   help="exit 0 accepted, 1 rejected, 4 fuel exhausted")

    p = add("gen-trie", cmd_gen_trie, "synthesize the depth-n lookup-trie machine")
    p.add_argument("--lang", required=True,
                   help="built-in language name or @file of words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="output machine file, '-' for stdout")

    p = add("verify-trie", cmd_verify_trie,
            "check the trie machine's language restriction and step counts")
    p.add_argument("--lang", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("converge", cmd_converge, "find the least agreeing sequence index")
    p.add_argument("--lang", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)

    p = add("profile", cmd_profile, "worst-case counted steps per input length, CSV")
    p.add_argument("--machine", required=True)
    p.add_argument("--cost", default="count-all")
    p.add_argument("--lengths", required=True, help="e.g. 1..8")
    p.add_argument("--family", default="zeros",
                   help="all | zeros | ones | random:count=<k>,seed=<s>")
    p.add_argument("--fuel", type=int, default=10_000)

    p = add("check-bound", cmd_check_bound, "empirical step-bound check, CSV report")
    p.add_argument("--machine", required=True)
    p.add_argument("--cost", default="count-all")
    p.add_argument("--g", required=True, help="bound measure, e.g. linear:a=1,b=1")
    p.add_argument("--mode", default="plain", choices=["plain", "outer", "inner"])
    p.add_argument("--t", default=None, help="transform measure for outer/inner mode")
    p.add_argument("--input", action="append", default=[],
                   help="input word, repeatable ('eps' for the empty word)")
    p.add_argument("--inputs-file", default=None, help="file of words, one per line")
    p.add_argument("--fuel", type=int, default=10_000)

    p = add("nsearch", cmd_nsearch, "exhaustive certificate search for one input")
    p.add_argument("--checker", required=True, help="checker machine file")
    p.add_argument("--delivery", required=True, choices=["inline", "positioned"])
    p.add_argument("--g", required=True, help="certificate length bound measure")
    p.add_argument("--t", default=None, help="transform measure (transformed bound)")
    p.add_argument("--input", required=True)
    p.add_argument("--cost", default="count-all")
    p.add_argument("--budget", type=int, default=DEFAULT_CERTIFICATE_BUDGET)
    p.add_argument("--fuel", type=int, default=10_000)

    p = add("demo-nlogtime", cmd_demo_nlogtime,
            "scanner vs positioned checker on the contains-a-1 language, CSV")
    p.add_argument("--max-n", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (MachineParseError, CertificateBudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
