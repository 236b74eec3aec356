import itertools

import pytest

from synchro.automaton import apply_word, is_eulerian, serialize_automaton
from synchro.cnf import Literal, formula_from_literals
from synchro.reduction import (
    build_g,
    build_template,
    closed_dfa,
    constants,
    expected_deficiencies,
    reduce_formula,
)

TAUT = formula_from_literals(
    2, [[Literal(1, False), Literal(2, False), Literal(1, True)]]
)


def test_constants_n2m1():
    c = constants(2, 1)
    assert c["d"] == 57
    assert c["gamma"] == 12 * 1 * 2 + 4 * 2 - 2 * 1 + 9
    assert c["dbar"] == c["gamma"] + 2
    assert c["alpha"] == [0] and c["beta"] == [0]
    assert c["d_i"] == [26]


def test_constants_n3m2():
    c = constants(3, 2)
    assert c["d"] == 112
    assert c["alpha"] == [0, 34]
    assert c["beta"] == [34, 0]


def test_constants_edges():
    for n, m in [(2, 1), (3, 4), (4, 3)]:
        c = constants(n, m)
        assert c["alpha"][0] == 0
        assert c["beta"][-1] == 0
    with pytest.raises(ValueError):
        constants(1, 1)


def test_pipe_template():
    t = build_template("PIPE", length=3)
    assert [s for s in t.states()] == [("s1",), ("s2",), ("s3",)]
    assert len(t.edges()) == 4
    assert t.graph.out_missing() == [(("s3",), "a"), (("s3",), "b")]


def test_pipes_template():
    t = build_template("PIPES", depth=2, width=3)
    assert len(t.states()) == 6
    assert len(t.edges()) == 6  # one both-letter hop per column


def test_inc_template_links():
    t = build_template("INC", literal=Literal(1, False), n=2)
    edges = {("|".join(s), l): "|".join(d) for s, l, d in t.edges()}
    assert len([s for s in t.states() if s != ("next",)]) == 36
    assert edges[("p1_r", "a")] == "p2_x1"
    assert edges[("p1_x1", "b")] == "p2_r"
    assert edges[("p2_r", "a")] == "p3_q"
    assert edges[("p2_q", "b")] == "p3_r"
    assert edges[("p2_y1", "a")] == "p3_y1"


def test_notinc_template_links():
    t = build_template("NOTINC", literal=Literal(2, True), n=2)
    edges = {("|".join(s), l): "|".join(d) for s, l, d in t.edges()}
    # row 1 behaves like INC; row 2 merges the q and lambda columns
    assert edges[("p1_nx2", "a")] == "p2_nx2"
    assert edges[("p1_r", "b")] == "p2_r"
    assert edges[("p2_nx2", "a")] == "p3_q"
    assert edges[("p2_nx2", "b")] == "p3_nx2"
    assert edges[("p2_q", "b")] == "p3_nx2"
    assert edges[("p2_r", "a")] == "p3_r"


def test_tester_level_types():
    t = build_template("TESTER", formula=TAUT, i=1)
    assert [k for k, _ in t.meta["level_types"]] == ["INC", "INC", "INC", "NOTINC"]
    assert [str(l) for _, l in t.meta["level_types"]] == ["x1", "x2", "~x1", "~x2"]
    # exactly three INC levels, at the kappa positions of the clause
    assert sum(1 for k, _ in t.meta["level_types"] if k == "INC") == 3


def test_abs_absorbs_without_bb():
    dfa, _, idx = closed_dfa(build_template("ABS"))
    out = idx["out"]
    for length in range(2, 7):
        for w in itertools.product("ab", repeat=length):
            word = "".join(w)
            if "bb" in word:
                continue
            assert out not in apply_word(dfa, dfa.full_set(), word), word


def test_coder_semantics():
    dfa, _, idx = closed_dfa(build_template("CODERS"))
    for u in "ab":
        for v in "ab":
            img = apply_word(dfa, dfa.full_set(), u + v)
            assert (idx["cca|out"] not in img) == (u == v)
            assert (idx["cci|out"] not in img) == (u != v)


def test_deficiency_counts_and_families():
    for formula in (TAUT, formula_from_literals(
            3, [[Literal(1, False), Literal(2, False), Literal(3, False)],
                [Literal(1, True), Literal(2, True), Literal(3, True)]])):
        n, m = formula.n, formula.m
        g, _, _ = build_g(formula)
        outs = g.out_missing()
        ins = g.in_missing()
        assert len(outs) == 8 * m * n + 4 * m
        assert len(ins) == 8 * m * n + 4 * m
        exp_outs, exp_ins = expected_deficiencies(formula)
        assert outs == exp_outs
        assert ins == exp_ins


def test_completion_makes_eulerian_and_is_idempotent():
    g, _, _ = build_g(TAUT)
    added = g.complete_missing_edges()
    assert added == 8 * 1 * 2 + 4 * 1 == 20
    assert all(deg == 2 for deg in g.indeg.values())
    assert g.complete_missing_edges() == 0


def test_reduce_output():
    red = reduce_formula(TAUT)
    assert is_eulerian(red.dfa)
    assert red.d == 57
    assert red.addresses[red.sink] == "s2"
    assert red.deficiency_count == 20
    # every state has in-degree exactly 2 (checked exhaustively)
    from synchro.automaton import in_degrees

    assert all(d == 2 for d in in_degrees(red.dfa))


def test_reduce_deterministic():
    a = reduce_formula(TAUT)
    b = reduce_formula(TAUT)
    assert serialize_automaton(a.dfa, a.addresses) == serialize_automaton(b.dfa, b.addresses)


def test_padding_elision():
    # alpha_1 = 0 and beta_m = 0: those PIPES parts are absent
    f = formula_from_literals(
        3, [[Literal(1, False), Literal(2, False), Literal(3, False)],
            [Literal(1, True), Literal(2, True), Literal(3, True)]])
    red = reduce_formula(f)
    addrs = set(red.addresses.values())
    assert not any(a.startswith("cl1|pipes1|") for a in addrs)
    assert any(a.startswith("cl2|pipes1|") for a in addrs)
    assert not any(a.startswith("cl2|pipes3|") for a in addrs)
    assert any(a.startswith("cl1|pipes3|") for a in addrs)
    assert not any(a.startswith("cl2|pipe9|") for a in addrs)
    assert any(a.startswith("cl1|pipe9|") for a in addrs)


def test_state_count_is_reproducible(corpus):
    for name, f in corpus[:4]:
        assert reduce_formula(f).dfa.state_count == reduce_formula(f).dfa.state_count


def test_merging_chain_exists():
    # cl_1|sp_{4n+6} -b-> q_1 -b-> q_2 -b-> q_3 -b-> s_1 -b-> s_2 -b-> s_2
    f = formula_from_literals(
        2, [[Literal(1, False), Literal(2, False), Literal(1, True)],
            [Literal(1, False), Literal(2, True), Literal(1, True)],
            [Literal(2, False), Literal(1, True), Literal(2, True)]])
    red = reduce_formula(f)
    n = f.n
    state = red.state_of("cl1|sp%d" % (4 * n + 6))
    for expected in ("q1", "q2", "q3", "s1", "s2", "s2"):
        state = red.dfa.step(state, "b")
        assert red.addresses[state] == expected
    for name in ("q1", "r1", "rp1", "s1", "s2"):
        assert name in red.index


def test_tester_has_three_inc_levels(corpus):
    for name, f in corpus[:6]:
        red = reduce_formula(f)
        for layout in red.clause_layouts:
            kinds = [k for k, _ in layout.level_types]
            assert kinds.count("INC") == 3
            clause = f.clauses[layout.index - 1]
            inc_positions = [i for i, k in enumerate(kinds) if k == "INC"]
            assert inc_positions == sorted(clause)
