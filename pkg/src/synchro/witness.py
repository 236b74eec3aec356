"""Witness words: construction from satisfying assignments, trace-level
verification of the inactivity windows, assignment extraction, and the
structural necessary conditions on any candidate reset word.
"""

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import engine
from .automaton import word_to_codes
from .cnf import evaluate, kappa


def choose_literals(formula, assignment, force=False):
    """The chosen satisfied literal per clause: smallest kappa among the
    satisfied ones.  With ``force`` (diagnostic path for non-satisfying
    assignments) an unsatisfied clause falls back to its smallest-kappa
    literal."""
    chosen = []
    for i in range(formula.m):
        picked = None
        for lit in formula.clause_literals(i):
            if (assignment[lit.variable - 1] == 0) == lit.negated:
                picked = lit
                break
        if picked is None:
            if not force:
                raise ValueError("assignment does not satisfy clause %d" % (i + 1))
            picked = formula.clause_literals(i)[0]
        chosen.append(picked)
    return chosen


@dataclass(frozen=True)
class WitnessPlan:
    """Structured decomposition of a witness word."""

    n: int
    m: int
    sigma: tuple  # letter per variable, sigma[j-1]
    chosen: tuple  # chosen literal per clause
    segments: tuple  # (name, word) pieces in order

    def word(self):
        return "".join(piece for _, piece in self.segments)


def witness_plan(formula, assignment, force=False):
    n, m = formula.n, formula.m
    if len(assignment) != n:
        raise ValueError("assignment length must equal n")
    if not force and not evaluate(formula, assignment):
        raise ValueError("assignment does not satisfy the formula")
    chosen = choose_literals(formula, assignment, force=force)
    sigma = tuple("a" if v == 1 else "b" for v in assignment)
    segments = [("prefix", "aa")]
    for j in range(n, 0, -1):
        segments.append(("sigma%d" % j, sigma[j - 1] + "a"))
    segments.append(("core", "ab" + "a" * (2 * n + 3) + "b"))
    for i in range(m):
        in_clause = set(formula.clauses[i])
        chosen_code = kappa(chosen[i], n)
        v = []
        for code in range(2 * n):
            if code in in_clause and code != chosen_code:
                v.append("baa")
            else:
                v.append("aaa")
        segments.append(("block%d" % (i + 1), "a" * (6 * n - 2) + "".join(v)))
    segments.append(("suffix", "bba" + "b" * (4 * n + m + 7)))
    return WitnessPlan(n, m, sigma, tuple(chosen), tuple(segments))


def build_witness(reduction, formula, assignment, force=False):
    """The reset word for a satisfying assignment; always of length d."""
    if (formula.n, formula.m) != (reduction.n, reduction.m):
        raise ValueError("formula does not match the reduction output")
    word = witness_plan(formula, assignment, force=force).word()
    assert len(word) == reduction.d
    return word


def extract_bits(word, n):
    """Positional extraction rule: xi_j = 1 iff letters 2n-2j+2 and
    2n-2j+3 (1-based) are equal."""
    if len(word) < 2 * n + 3:
        raise ValueError("word too short to carry an assignment")
    return tuple(
        1 if word[2 * n - 2 * j + 1] == word[2 * n - 2 * j + 2] else 0
        for j in range(1, n + 1)
    )


def extract_assignment(reduction, word):
    """Read the assignment back off the second letter of each sigma pair."""
    return extract_bits(word, reduction.n)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    window: tuple  # (t_lo, t_hi) inclusive, 0 means not time-indexed
    ok: bool
    violation: Optional[tuple]  # (address or detail, t)


@dataclass(frozen=True)
class TraceReport:
    records: tuple
    final_size: int
    final_states: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.records)

    def failures(self):
        return [r for r in self.records if not r.ok]

    def to_text(self):
        lines = []
        for r in self.records:
            status = "pass" if r.ok else "FAIL"
            extra = ""
            if r.violation is not None:
                extra = "  first violation: %s at t=%d" % r.violation
            lines.append("%-28s [%d, %d]  %s%s" % (r.name, r.window[0], r.window[1], status, extra))
        lines.append("final image size: %d" % self.final_size)
        if self.final_size <= 8:
            lines.append("final image: %s" % ", ".join(self.final_states))
        return "\n".join(lines) + "\n"

    def to_json(self):
        return json.dumps(
            {
                "records": [
                    {
                        "name": r.name,
                        "window": list(r.window),
                        "ok": r.ok,
                        "violation": list(r.violation) if r.violation else None,
                    }
                    for r in self.records
                ],
                "final_size": self.final_size,
                "final_states": list(self.final_states),
                "ok": self.ok,
            },
            indent=2,
        )


def _bool_trace(reduction, word):
    da, db = reduction.dfa.arrays()
    n = reduction.dfa.state_count
    masks = engine.trace_word(da, db, ((1 << n) - 1).to_bytes((n + 7) // 8, "little"),
                              word_to_codes(word))
    rows = [np.unpackbits(np.frombuffer(m, dtype=np.uint8), bitorder="little", count=n)
            for m in masks]
    return np.array(rows, dtype=bool)


def _part_of(address):
    comps = address.split("|")
    if comps[0].startswith("cl"):
        return comps[0], comps[1], comps[-1]
    return None, comps[0], comps[-1]


def _family_indices(reduction):
    fams = {}
    for idx, addr in reduction.addresses.items():
        clause, part, last = _part_of(addr)
        if part.startswith("abs") and last == "out":
            fams.setdefault(("absout", clause), []).append(idx)
        if clause is None:
            continue
        if part.startswith("sp"):
            key = "sp"
        elif part.startswith("bar_"):
            key = "bar"
        elif part.startswith("m_"):
            key = "m"
        elif part.startswith("abs"):
            continue
        else:
            key = part  # pipe1..pipe9, pipes1..pipes3, cca, cci, tester, forcer, limiter
        fams.setdefault((key, clause), []).append(idx)
    return fams


def verify_forward(reduction, word):
    """Run the trace and assert every inactivity window the forward
    direction relies on.  Violations accumulate into the report (with
    the earliest offending address and time); nothing is thrown."""
    if len(word) != reduction.d:
        raise ValueError("word length %d, expected d = %d" % (len(word), reduction.d))
    n, m = reduction.n, reduction.m
    gamma = reduction.gamma
    trace = _bool_trace(reduction, word)
    fams = _family_indices(reduction)
    records = []

    def window_dead(name, keys, lo, hi):
        indices = []
        for key in keys:
            indices.extend(fams.get(key, []))
        indices.sort()
        sub = trace[lo:hi + 1][:, indices]
        ok = not sub.any()
        violation = None
        if not ok:
            ts, cols = np.nonzero(sub)
            k = np.lexsort((cols, ts))[0]
            violation = (reduction.addresses[indices[cols[k]]], lo + int(ts[k]))
        records.append(CheckRecord(name, (lo, hi), ok, violation))

    def assert_active(name, idx, t):
        ok = bool(trace[t, idx])
        violation = None if ok else (reduction.addresses[idx], t)
        records.append(CheckRecord(name, (t, t), ok, violation))

    def assert_record(name, clause, part, expected_inactive, t):
        # a pipe of length len(expected_inactive) records the sequence:
        # entry k is 1 iff state s_k is inactive at time t
        ok = True
        violation = None
        for k, want_dead in enumerate(expected_inactive, start=1):
            idx = reduction.state_of("%s|%s|s%d" % (clause, part, k))
            if bool(trace[t, idx]) != (not want_dead):
                ok = False
                violation = (reduction.addresses[idx], t)
                break
        records.append(CheckRecord(name, (t, t), ok, violation))

    all_clauses = [None] + ["cl%d" % i for i in range(1, m + 1)]
    window_dead("abs-out [2,gamma]", [("absout", c) for c in all_clauses], 2, gamma)
    for i in range(1, m + 1):
        c = "cl%d" % i
        a_i = reduction.alpha[i - 1]
        window_dead("%s sp row" % c, [("sp", c)], 2, gamma)
        window_dead("%s feed pipes" % c,
                    [("pipe2", c), ("pipe3", c), ("pipe4", c)], 2 * n + 1, gamma)
        window_dead("%s coders+pipe5" % c,
                    [("cca", c), ("cci", c), ("pipe5", c)], 2 * n + 5, gamma)
        window_dead("%s recorders+forcer" % c,
                    [("pipe6", c), ("pipe7", c), ("forcer", c)], 4 * n + 7, gamma)
        window_dead("%s symbol row" % c, [("m", c)], 4 * n + 8, gamma)
        window_dead("%s padding+pipe8" % c,
                    [("pipes1", c), ("pipes2", c), ("pipe8", c)],
                    10 * n + a_i + 6, gamma)
        window_dead("%s limiter+tester" % c,
                    [("limiter", c), ("tester", c)], 16 * n + a_i + 6, gamma)
        window_dead("%s slow pipes" % c,
                    [("pipe1", c), ("pipe9", c), ("pipes3", c)], gamma - 1, gamma)
        window_dead("%s chosen-literal row" % c, [("bar", c)], gamma - 1, gamma)
        assert_active("%s pipe1 head active at t=2" % c,
                      reduction.state_of("%s|pipe1|s1" % c), 2)
        # the recording pipes hold 0,1,xi_1,xi_1,...,xi_n,xi_n (and the
        # inverted sequence) once the assignment prefix has been read
        bits = extract_assignment(reduction, word)
        record = [0, 1]
        for j in range(1, n + 1):
            record += [bits[j - 1], bits[j - 1]]
        assert_record("%s pipe6 record at 2n+5" % c, c, "pipe6", record, 2 * n + 5)
        assert_record("%s pipe7 record at 2n+5" % c, c, "pipe7",
                      [1 - x for x in record], 2 * n + 5)

    final = np.nonzero(trace[reduction.d])[0]
    final_ok = len(final) == 1 and int(final[0]) == reduction.sink
    records.append(
        CheckRecord(
            "final image is {s2}",
            (reduction.d, reduction.d),
            final_ok,
            None if final_ok else (
                ",".join(reduction.addresses[int(i)] for i in final[:6]),
                reduction.d,
            ),
        )
    )
    return TraceReport(
        tuple(records),
        int(len(final)),
        tuple(reduction.addresses[int(i)] for i in final[:16]),
    )


@dataclass(frozen=True)
class StructureReport:
    records: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.records)

    def to_text(self):
        lines = []
        for r in self.records:
            lines.append("%-32s %s" % (r.name, "pass" if r.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def check_word_structure(word, n, m):
    """Structural necessary conditions every length-d reset word obeys:
    the a^2 prefix, the b-block suffix, the forced a^{2n+1}b factor, and
    at most two b's inside each clause window v'_i."""
    d = 12 * m * n + 8 * n - m + 18
    if len(word) != d:
        raise ValueError("word length %d, expected d = %d" % (len(word), d))
    records = []

    def record(name, ok):
        records.append(CheckRecord(name, (0, 0), ok, None))

    record("starts with a^2", word[:2] == "aa")
    tail = 4 * n + m + 7
    record("ends with b^{4n+m+7}", set(word[-tail:]) == {"b"})
    # positions 2n+7 .. 4n+7 hold a^{2n+1}, then one b (1-based)
    factor = word[2 * n + 6:4 * n + 7]
    record("factor a^{2n+1}b after prefix",
           set(factor) == {"a"} and word[4 * n + 7] == "b")
    for i in range(1, m + 1):
        a_i = (i - 1) * (12 * n - 2)
        lo = 10 * n + a_i + 7
        hi = 16 * n + a_i + 5
        seg = word[lo - 1:hi]
        record("clause %d window has <= 2 b" % i, seg.count("b") <= 2)
    return StructureReport(tuple(records))
