import random

import pytest

from synchro.automaton import Dfa, cerny, is_reset_word
from synchro.solver import (
    FOUND,
    NONE_WITHIN_LIMITS,
    NOT_SYNCHRONIZING,
    RESOURCE_EXHAUSTED,
    decide_reset_leq,
    greedy_reset,
    shortest_reset_exact,
)

from .conftest import random_dfa

SWAP = Dfa((1, 0), (1, 0))


def test_one_state_found_empty():
    res = shortest_reset_exact(Dfa((0,), (0,)), 0)
    assert res.outcome == FOUND and res.word == ""
    assert greedy_reset(Dfa((0,), (0,))).word == ""


@pytest.mark.parametrize("n,opt", [(3, 4), (4, 9), (5, 16)])
def test_cerny_attains_conjecture_bound(n, opt):
    res = shortest_reset_exact(cerny(n), (n - 1) ** 2)
    assert res.outcome == FOUND
    assert len(res.word) == opt
    assert is_reset_word(cerny(n), res.word)


def test_swap_never_synchronizes():
    res = shortest_reset_exact(SWAP, 100)
    assert res.outcome == NONE_WITHIN_LIMITS
    assert greedy_reset(SWAP).outcome == NOT_SYNCHRONIZING


def test_max_len_cutoff():
    res = shortest_reset_exact(cerny(4), 8)
    assert res.outcome == NONE_WITHIN_LIMITS


def test_resource_exhaustion_is_inconclusive():
    res = shortest_reset_exact(cerny(12), 200, mem_cap=1000)
    assert res.outcome == RESOURCE_EXHAUSTED
    assert decide_reset_leq(cerny(12), 200, mem_cap=1000)[0] == "unknown"


def test_decide_cerny4():
    assert decide_reset_leq(cerny(4), 8) == ("no", None)
    answer, word = decide_reset_leq(cerny(4), 9)
    assert answer == "yes" and len(word) == 9 and is_reset_word(cerny(4), word)


def test_greedy_never_beats_exact():
    g = greedy_reset(cerny(4))
    assert g.outcome == FOUND and len(g.word) >= 9


def test_exact_is_deterministic():
    dfa = cerny(5)
    r1 = shortest_reset_exact(dfa, 20)
    r2 = shortest_reset_exact(dfa, 20)
    assert r1.word == r2.word
    assert r1.word == shortest_reset_exact(dfa, 20, workers=4).word


def test_exact_prefers_letter_a():
    # two automata with symmetric shortest reset words; the search must
    # return the lexicographically least
    dfa = Dfa((0, 0), (1, 1))  # letter a already resets
    res = shortest_reset_exact(dfa, 5)
    assert res.word == "a"


def test_oracle_agreement_small_sample():
    rng = random.Random(99)
    for _ in range(150):
        n = rng.randrange(1, 9)
        dfa = random_dfa(rng, n)
        exact = shortest_reset_exact(dfa, 2**n, mem_cap=1 << 30)
        greedy = greedy_reset(dfa)
        assert (exact.outcome == FOUND) == (greedy.outcome == FOUND)
        if exact.outcome == FOUND:
            assert len(exact.word) <= len(greedy.word)


def test_env_var_sets_default_cap(monkeypatch):
    from synchro import solver

    monkeypatch.setenv("SYNCHRO_MEM_CAP", "1234")
    assert solver.default_mem_cap() == 1234
    monkeypatch.delenv("SYNCHRO_MEM_CAP")
    assert solver.default_mem_cap() == solver.DEFAULT_MEM_CAP


def test_solver_on_reduction_output():
    from synchro.automaton import pair_merge_bound
    from synchro.cnf import Literal, formula_from_literals
    from synchro.reduction import reduce_formula

    f = formula_from_literals(
        2, [[Literal(1, False), Literal(2, False), Literal(1, True)]])
    red = reduce_formula(f)
    from synchro.automaton import is_synchronizing

    assert is_synchronizing(red.dfa)
    g = greedy_reset(red.dfa)
    assert g.outcome == FOUND  # greedy succeeds though its word may exceed d
    assert pair_merge_bound(red.dfa) <= red.d
    assert decide_reset_leq(red.dfa, red.d, mem_cap=1_000_000)[0] == "unknown"
