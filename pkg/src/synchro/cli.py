"""Batch command-line surface.

Exit codes are a stable contract: 0 pass, 1 checked-false, 2 input
error, 3 inconclusive.  Word files are a single line over {a, b}.
"""

import argparse
import sys

from . import solver
from .automaton import (
    AutomatonFormatError,
    apply_word,
    export_dot,
    image_trace,
    is_eulerian,
    is_synchronizing,
    parse_automaton,
    serialize_automaton,
)
from .cnf import DimacsError, brute_force_sat, evaluate, parse_dimacs, satisfying_assignments
from .reduction import reduce_formula
from .witness import build_witness, check_word_structure, extract_assignment, verify_forward

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_UNKNOWN = 3


class InputError(Exception):
    pass


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc))


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_formula(path):
    try:
        return parse_dimacs(_read(path))
    except DimacsError as exc:
        raise InputError("bad CNF: %s" % exc)


def _load_automaton(path):
    try:
        return parse_automaton(_read(path))
    except AutomatonFormatError as exc:
        raise InputError("bad automaton: %s" % exc)


def _load_word(path):
    text = _read(path)
    word = text.rstrip("\n")
    if "\n" in word or any(c not in "ab" for c in word):
        raise InputError("word file must be a single line over {a, b}")
    return word


def cmd_reduce(args):
    formula = _load_formula(args.cnf)
    red = reduce_formula(formula)
    addresses = red.addresses if args.addresses else None
    _write(args.out, serialize_automaton(red.dfa, addresses))
    if args.dot:
        _write(args.dot, export_dot(red.dfa, red.addresses, clusters=True))
    print("states=%d" % red.dfa.state_count)
    print("d=%d" % red.d)
    print("gamma=%d" % red.gamma)
    return EXIT_OK


def cmd_witness(args):
    formula = _load_formula(args.cnf)
    red = reduce_formula(formula)
    if args.assignment:
        if len(args.assignment) != formula.n or set(args.assignment) - {"0", "1"}:
            raise InputError("assignment must be %d bits" % formula.n)
        assignment = tuple(int(c) for c in args.assignment)
        if not evaluate(formula, assignment):
            raise InputError("assignment does not satisfy the formula")
    else:
        assignment = brute_force_sat(formula)
        if assignment is None:
            print("unsatisfiable")
            return EXIT_FALSE
    word = build_witness(red, formula, assignment)
    if args.out:
        _write(args.out, word + "\n")
    else:
        print(word)
    return EXIT_OK


def cmd_check(args):
    dfa, addresses = _load_automaton(args.automaton)
    word = _load_word(args.word)
    trace = image_trace(dfa, word)
    final = trace[-1]
    reset = len(final) == 1
    print("RESET" if reset else "NOT-RESET")
    print("final-size=%d" % len(final))
    if args.trace:
        print(" ".join(str(len(s)) for s in trace))
    return EXIT_OK if reset else EXIT_FALSE


def cmd_solve(args):
    dfa, _ = _load_automaton(args.automaton)
    if args.decide is not None:
        answer, word = solver.decide_reset_leq(dfa, args.decide, args.mem_cap)
        print(answer if word is None else "%s %s" % (answer, word))
        return {"yes": EXIT_OK, "no": EXIT_FALSE, "unknown": EXIT_UNKNOWN}[answer]
    if args.method == "greedy":
        res = solver.greedy_reset(dfa)
    else:
        max_len = args.max_len if args.max_len is not None else 4 * dfa.state_count ** 2
        res = solver.shortest_reset_exact(dfa, max_len, args.mem_cap)
    print("outcome=%s" % res.outcome)
    if res.word is not None:
        print("word=%s" % res.word)
        print("length=%d" % len(res.word))
    if res.outcome == solver.FOUND:
        return EXIT_OK
    if res.outcome == solver.RESOURCE_EXHAUSTED:
        return EXIT_UNKNOWN
    return EXIT_FALSE


def cmd_validate(args):
    dfa, _ = _load_automaton(args.automaton)
    eulerian = is_eulerian(dfa)
    synchronizing = is_synchronizing(dfa)
    print("eulerian: %s" % str(eulerian).lower())
    print("synchronizing: %s" % str(synchronizing).lower())
    return EXIT_OK if eulerian and synchronizing else EXIT_FALSE


def cmd_export(args):
    dfa, addresses = _load_automaton(args.automaton)
    _write(args.out, export_dot(dfa, addresses, clusters=args.clusters))
    return EXIT_OK


def cmd_verify_reduction(args):
    formula = _load_formula(args.cnf)
    red = reduce_formula(formula)
    dfa = red.dfa
    if args.fault_inject:
        # flip one transition; every downstream check must notice
        da = list(dfa.delta_a)
        da[red.sink] = (da[red.sink] + 1) % dfa.state_count
        from .automaton import Dfa
        from dataclasses import replace
        red = replace(red, dfa=Dfa(tuple(da), dfa.delta_b))
        dfa = red.dfa
    failures = []
    if not is_eulerian(dfa):
        failures.append("not eulerian")
    assignment = brute_force_sat(formula)
    if assignment is not None:
        word = build_witness(red, formula, assignment)
        report = verify_forward(red, word)
        if args.report:
            sys.stdout.write(report.to_text())
        if not report.ok:
            failures.append("forward verification failed")
            if not args.report:
                sys.stdout.write(report.to_text())
        structure = check_word_structure(word, formula.n, formula.m)
        if not structure.ok:
            failures.append("witness violates word structure")
        for sat in satisfying_assignments(formula):
            w = build_witness(red, formula, sat)
            if extract_assignment(red, w) != sat:
                failures.append("round trip failed for %s" % (sat,))
                break
        print("satisfiable: yes")
    else:
        print("satisfiable: no")
        from itertools import product
        for bits in product((0, 1), repeat=formula.n):
            forced = build_witness(red, formula, bits, force=True)
            final = apply_word(dfa, dfa.full_set(), forced)
            if len(final) == 1:
                failures.append("forced word for %s resets the automaton" % (bits,))
    if failures:
        for f in failures:
            print("FAIL: %s" % f)
        return EXIT_FALSE
    print("all checks passed")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="synchro",
        description="Synchronizing automata toolkit and 3-SAT reduction compiler",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="compile a 3-CNF into an automaton file")
    p.add_argument("cnf")
    p.add_argument("out")
    p.add_argument("--addresses", action="store_true", help="emit addr lines")
    p.add_argument("--dot", help="also write a DOT rendering")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("witness", help="emit the reset word for a satisfying assignment")
    p.add_argument("cnf")
    p.add_argument("-o", "--out")
    p.add_argument("--assignment", help="bit string, e.g. 101")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("check", help="check whether a word resets an automaton")
    p.add_argument("automaton")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="print active-set sizes")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="search for a reset word")
    p.add_argument("automaton")
    p.add_argument("--method", choices=("exact", "greedy"), default="exact")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--mem-cap", type=int, default=None)
    p.add_argument("--decide", type=int, default=None, metavar="D",
                   help="decide existence of a reset word of length <= D")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="report eulerian/synchronizing")
    p.add_argument("automaton")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export", help="export DOT")
    p.add_argument("automaton")
    p.add_argument("out")
    p.add_argument("--clusters", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify-reduction", help="end-to-end reduction checks")
    p.add_argument("cnf")
    p.add_argument("--report", action="store_true",
                   help="print the per-window trace report")
    p.add_argument("--fault-inject", action="store_true",
                   help="corrupt one transition first (self-test)")
    p.set_defaults(func=cmd_verify_reduction)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        code = EXIT_INPUT
    except (DimacsError, AutomatonFormatError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        code = EXIT_INPUT
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
