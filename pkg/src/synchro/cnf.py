"""3-CNF formulas, DIMACS ingestion, the literal/symbol index maps, and
a desk-scale satisfiability oracle.

Clauses are 3-element sets of literals; a clause may contain a variable
together with its negation (such a clause is simply always satisfied).
Internally a clause is a sorted 3-tuple of literal codes kappa(lit).
"""

from dataclasses import dataclass
from itertools import product

BRUTE_FORCE_VAR_LIMIT = 24


class DimacsError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Literal:
    variable: int  # 1-based
    negated: bool

    def __repr__(self):
        return ("~x%d" if self.negated else "x%d") % self.variable


def kappa(lit, n):
    """Literal index: x_j -> j-1, negated x_j -> n+j-1."""
    if not 1 <= lit.variable <= n:
        raise ValueError("variable %d out of range 1..%d" % (lit.variable, n))
    return lit.variable - 1 + (n if lit.negated else 0)


def literal_from_kappa(code, n):
    if not 0 <= code < 2 * n:
        raise ValueError("literal code %d out of range" % code)
    return Literal(code % n + 1, code >= n)


# The 4n+4 auxiliary symbols: literals plus y_j, z_j, q, q', r, r'.
# A symbol is a pair (kind, j) with j = 0 for the unindexed kinds.
SYMBOL_KINDS = ("q", "r", "qp", "rp", "y", "x", "z", "nx")


def mu(sym, n):
    """Symbol index in 1..4n+4 (q=1, r=2, y_j=2j+1, x_j=2j+2, q'=2n+3,
    r'=2n+4, z_j=2n+2j+3, negated x_j=2n+2j+4)."""
    kind, j = sym
    if kind in ("y", "x", "z", "nx") and not 1 <= j <= n:
        raise ValueError("symbol index %d out of range" % j)
    if kind == "q":
        return 1
    if kind == "r":
        return 2
    if kind == "y":
        return 2 * j + 1
    if kind == "x":
        return 2 * j + 2
    if kind == "qp":
        return 2 * n + 3
    if kind == "rp":
        return 2 * n + 4
    if kind == "z":
        return 2 * n + 2 * j + 3
    if kind == "nx":
        return 2 * n + 2 * j + 4
    raise ValueError("unknown symbol kind %r" % (kind,))


def mu_inverse(k, n):
    """Inverse of mu."""
    if not 1 <= k <= 4 * n + 4:
        raise ValueError("mu index %d out of range 1..%d" % (k, 4 * n + 4))
    if k == 1:
        return ("q", 0)
    if k == 2:
        return ("r", 0)
    if k == 2 * n + 3:
        return ("qp", 0)
    if k == 2 * n + 4:
        return ("rp", 0)
    if k <= 2 * n + 2:
        j, odd = divmod(k, 2)
        return ("y", j) if odd else ("x", j - 1)
    k2 = k - 2 * n - 2
    j, odd = divmod(k2, 2)
    return ("z", j) if odd else ("nx", j - 1)


def symbol_of_literal(lit):
    return ("nx" if lit.negated else "x", lit.variable)


def literal_of_symbol(sym):
    kind, j = sym
    if kind == "x":
        return Literal(j, False)
    if kind == "nx":
        return Literal(j, True)
    return None


def all_symbols(n):
    return [mu_inverse(k, n) for k in range(1, 4 * n + 5)]


@dataclass(frozen=True)
class Formula:
    n: int
    clauses: tuple  # of sorted 3-tuples of kappa codes

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("a 3-element literal set needs at least 2 variables")
        if not self.clauses:
            raise ValueError("formula needs at least one clause")
        for cl in self.clauses:
            if len(cl) != 3 or len(set(cl)) != 3:
                raise ValueError("clause must have exactly 3 distinct literals")
            if tuple(sorted(cl)) != cl:
                raise ValueError("clause codes must be sorted")
            for code in cl:
                literal_from_kappa(code, self.n)

    @property
    def m(self):
        return len(self.clauses)

    def clause_literals(self, i):
        """Literals of clause i (0-based), in kappa order."""
        return tuple(literal_from_kappa(c, self.n) for c in self.clauses[i])


def formula_from_literals(n, clauses):
    packed = []
    for lits in clauses:
        codes = sorted(kappa(l, n) for l in lits)
        if len(set(codes)) != 3:
            raise ValueError("clause must have exactly 3 distinct literals")
        packed.append(tuple(codes))
    return Formula(n, tuple(packed))


def parse_dimacs(text):
    """Parse a DIMACS CNF file whose clauses all have exactly 3 distinct
    literals (after set semantics collapse duplicates)."""
    n = m = None
    clauses = []
    current = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError("line %d: bad header %r" % (lineno, line))
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError("line %d: non-integer header counts" % lineno)
            continue
        if n is None:
            raise DimacsError("line %d: clause before header" % lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError("line %d: bad literal %r" % (lineno, tok))
            if lit == 0:
                lits = {Literal(abs(v), v < 0) for v in current}
                for l in lits:
                    if l.variable > n:
                        raise DimacsError(
                            "line %d: variable %d exceeds declared %d"
                            % (lineno, l.variable, n)
                        )
                if len(lits) != 3:
                    raise DimacsError(
                        "line %d: clause has %d distinct literals, need 3"
                        % (lineno, len(lits))
                    )
                clauses.append(lits)
                current = []
            else:
                current.append(lit)
    if current:
        raise DimacsError("last clause is missing its 0 terminator")
    if n is None:
        raise DimacsError("missing 'p cnf' header")
    if len(clauses) != m:
        raise DimacsError("header declares %d clauses, found %d" % (m, len(clauses)))
    return formula_from_literals(n, clauses)


def to_dimacs(formula):
    lines = ["p cnf %d %d" % (formula.n, formula.m)]
    for i in range(formula.m):
        lits = formula.clause_literals(i)
        lines.append(" ".join(str(-l.variable if l.negated else l.variable) for l in lits) + " 0")
    return "\n".join(lines) + "\n"


def evaluate(formula, assignment):
    """Standard CNF semantics; assignment is a tuple of 0/1 of length n."""
    if len(assignment) != formula.n:
        raise ValueError("assignment length must equal n")
    for i in range(formula.m):
        if not any(
            (assignment[l.variable - 1] == 0) == l.negated
            for l in formula.clause_literals(i)
        ):
            return False
    return True


def brute_force_sat(formula):
    """Lexicographically smallest satisfying assignment, or None."""
    if formula.n > BRUTE_FORCE_VAR_LIMIT:
        raise ValueError("brute force limited to %d variables" % BRUTE_FORCE_VAR_LIMIT)
    for bits in product((0, 1), repeat=formula.n):
        if evaluate(formula, bits):
            return bits
    return None


def satisfying_assignments(formula):
    """All satisfying assignments, lexicographic order (guarded like
    brute_force_sat)."""
    if formula.n > BRUTE_FORCE_VAR_LIMIT:
        raise ValueError("brute force limited to %d variables" % BRUTE_FORCE_VAR_LIMIT)
    return [bits for bits in product((0, 1), repeat=formula.n) if evaluate(formula, bits)]
