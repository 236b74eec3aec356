import itertools
import random

import pytest

from synchro.cnf import Literal, formula_from_literals, literal_from_kappa


def random_formula(rng, n, m):
    clauses = []
    for _ in range(m):
        codes = rng.sample(range(2 * n), 3)
        clauses.append([literal_from_kappa(c, n) for c in codes])
    return formula_from_literals(n, clauses)


def contradiction(n):
    """All eight sign patterns over the first three variables: unsat."""
    clauses = []
    for signs in itertools.product((False, True), repeat=3):
        clauses.append([Literal(v + 1, s) for v, s in enumerate(signs)])
    return formula_from_literals(n, clauses)


def build_corpus():
    """Deterministic test corpus: >= 20 formulas spanning n in {2,3,4},
    m in {1,2,3}, plus handcrafted edge cases and two unsatisfiable
    formulas (any 3-CNF with fewer than 8 clauses is satisfiable, so the
    unsatisfiable ones need m = 8)."""
    rng = random.Random(0xC3A)
    corpus = [
        ("taut_n2m1", formula_from_literals(
            2, [[Literal(1, False), Literal(2, False), Literal(1, True)]])),
        ("pair_n3m2", formula_from_literals(
            3, [[Literal(1, False), Literal(2, False), Literal(3, False)],
                [Literal(1, True), Literal(2, True), Literal(3, True)]])),
        ("dup_clause_n2m2", formula_from_literals(
            2, [[Literal(1, False), Literal(2, False), Literal(2, True)],
                [Literal(1, True), Literal(2, False), Literal(1, False)]])),
    ]
    for n in (2, 3, 4):
        for m in (1, 2, 3):
            for rep in range(2):
                corpus.append(
                    ("rand_n%dm%d_%d" % (n, m, rep), random_formula(rng, n, m))
                )
    corpus.append(("unsat_n3m8", contradiction(3)))
    corpus.append(("unsat_n4m8", contradiction(4)))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def reductions(corpus):
    """Reduction outputs, built once per session."""
    from synchro.reduction import reduce_formula

    return {name: reduce_formula(f) for name, f in corpus}


def random_dfa(rng, n):
    from synchro.automaton import Dfa

    return Dfa(
        tuple(rng.randrange(n) for _ in range(n)),
        tuple(rng.randrange(n) for _ in range(n)),
    )
