"""Compiler from a 3-CNF formula to an Eulerian binary automaton.

The automaton is described as a labeled directed multigraph over named
vertices (hierarchical addresses, rendered ``cl1|tester|lvl0_x1|p1_q``),
assembled from templates: a clause gadget per clause plus a small shared
top level that merges everything into the sink state s2.

Degree discipline drives the whole construction: after the canonical
completion of the deliberately-missing edges, every vertex has exactly
one outgoing edge per letter and total in-degree exactly 2, so the
automaton is complete and Eulerian.  Before completion, exactly
8mn + 4m vertices miss one outgoing edge (the absorber outs and the
middle of the sp row) and exactly 8mn + 4m miss one incoming edge (the
symbol row and the top row of the first padding block).
"""

from dataclasses import dataclass

from .automaton import Dfa
from .cnf import (
    all_symbols,
    literal_from_kappa,
    literal_of_symbol,
    mu,
    mu_inverse,
    symbol_of_literal,
)

SYM_Q = ("q", 0)
SYM_R = ("r", 0)
SYM_QP = ("qp", 0)
SYM_RP = ("rp", 0)


def sym_name(sym):
    kind, j = sym
    return kind if j == 0 else "%s%d" % (kind, j)


def lit_name(lit):
    return sym_name(symbol_of_literal(lit))


def constants(n, m):
    """All derived length constants of the reduction."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    alpha = [(i - 1) * (12 * n - 2) for i in range(1, m + 1)]
    beta = [(m - i) * (12 * n - 2) for i in range(1, m + 1)]
    return {
        "d": 12 * m * n + 8 * n - m + 18,
        "gamma": 12 * m * n + 4 * n - 2 * m + 9,
        "dbar": 12 * m * n + 4 * n - 2 * m + 11,
        "alpha": alpha,
        "beta": beta,
        "d_i": [10 * n + a + 6 for a in alpha],
    }


class GraphBuilder:
    """Named-vertex labeled multigraph with per-letter out slots."""

    def __init__(self):
        self.out = {}  # addr -> [a_target or None, b_target or None]
        self.indeg = {}

    def vertex(self, addr):
        if addr not in self.out:
            self.out[addr] = [None, None]
            self.indeg[addr] = 0
        return addr

    def edge(self, src, letter, dst):
        self.vertex(src)
        self.vertex(dst)
        slot = 0 if letter == "a" else 1
        if self.out[src][slot] is not None:
            raise ValueError("duplicate %s-edge out of %r" % (letter, src))
        self.out[src][slot] = dst
        self.indeg[dst] += 1

    def out_missing(self):
        """Vertices missing an outgoing edge, with the missing letter."""
        missing = []
        for addr in self.out:
            slots = self.out[addr]
            if slots[0] is None:
                missing.append((addr, "a"))
            if slots[1] is None:
                missing.append((addr, "b"))
        missing.sort()
        return missing

    def in_missing(self):
        """Vertices with in-degree below 2, once per missing edge."""
        missing = []
        for addr, deg in self.indeg.items():
            for _ in range(2 - deg):
                missing.append(addr)
        missing.sort()
        return missing

    def complete_missing_edges(self):
        """Canonical completion: sort both deficiency lists by address,
        pair positionally, label each new edge with the source's missing
        letter.  Returns the number of edges added."""
        outs = self.out_missing()
        ins = self.in_missing()
        for addr, _ in outs:
            if self.out[addr][0] is None and self.out[addr][1] is None:
                raise ValueError("vertex %r has no outgoing edges" % (addr,))
        if len(outs) != len(ins):
            raise ValueError(
                "deficiency mismatch: %d outgoing vs %d incoming"
                % (len(outs), len(ins))
            )
        for (src, letter), dst in zip(outs, ins):
            self.edge(src, letter, dst)
        return len(outs)


# ---------------------------------------------------------------------------
# template pieces; each writes into a GraphBuilder under an address prefix


def add_pipe(g, prefix, length):
    """PIPE(d): a chain s1..sd advanced by both letters; the last row's
    outgoing edges are links of the enclosing template."""
    if length < 1:
        raise ValueError("pipe length must be >= 1")
    for j in range(1, length + 1):
        g.vertex(prefix + ("s%d" % j,))
    for j in range(1, length):
        for c in "ab":
            g.edge(prefix + ("s%d" % j,), c, prefix + ("s%d" % (j + 1),))
    return prefix + ("s1",), prefix + ("s%d" % length,)


def add_pipes(g, prefix, depth, width):
    """PIPES(d,k): k parallel pipes of length d."""
    if depth < 1 or width < 1:
        raise ValueError("pipes dimensions must be >= 1")
    for k in range(1, width + 1):
        for j in range(1, depth + 1):
            g.vertex(prefix + ("s%d_%d" % (j, k),))
        for j in range(1, depth):
            for c in "ab":
                g.edge(
                    prefix + ("s%d_%d" % (j, k),), c, prefix + ("s%d_%d" % (j + 1, k),)
                )


def add_abs(g, prefix):
    """ABS: the absorber.

    Both edges into out, and both edges into out's predecessors r1/r2,
    are labeled b, so out can be active only when the last two letters
    were b^2.  The wing chain w1..w3 keeps the walls of the cylinder
    alive (w3 holds activity through a-runs) and everything reaches out
    within two b's, which is what rides b^2 a b^... out to the sink.
    """
    p = lambda s: prefix + (s,)
    for s in ("in", "w1", "w2", "w3", "r1", "r2", "out"):
        g.vertex(p(s))
    g.edge(p("in"), "a", p("w1"))
    g.edge(p("in"), "b", p("r1"))
    g.edge(p("w1"), "a", p("w2"))
    g.edge(p("w1"), "b", p("r1"))
    g.edge(p("w2"), "a", p("w3"))
    g.edge(p("w2"), "b", p("r2"))
    g.edge(p("w3"), "a", p("w3"))
    g.edge(p("w3"), "b", p("r2"))
    g.edge(p("r1"), "a", p("w1"))
    g.edge(p("r1"), "b", p("out"))
    g.edge(p("r2"), "a", p("w2"))
    g.edge(p("r2"), "b", p("out"))
    # out's edges are links of the enclosing template
    return p("in"), p("out")


def add_coder_pair(g, cca, cci):
    """CCA and CCI, the last-two-letters coders.

    The two coders share their letter-tracker stages (the in-degree
    budget of the clause admits exactly one feed pipe per coder), and
    differ only in how the trackers wire into their out states: CCA's
    out is hit on a letter change, CCI's on a repeat.
    """
    for s in ("in", "ga", "gb", "out"):
        g.vertex(cca + (s,))
    for s in ("in", "sa", "sb", "out"):
        g.vertex(cci + (s,))
    for entry in (cca + ("in",), cci + ("in",)):
        g.edge(entry, "a", cca + ("ga",))
        g.edge(entry, "b", cca + ("gb",))
    for gstage in (cca + ("ga",), cca + ("gb",)):
        g.edge(gstage, "a", cci + ("sa",))
        g.edge(gstage, "b", cci + ("sb",))
    g.edge(cci + ("sa",), "b", cca + ("out",))
    g.edge(cci + ("sb",), "a", cca + ("out",))
    g.edge(cci + ("sa",), "a", cci + ("out",))
    g.edge(cci + ("sb",), "b", cci + ("out",))
    # both out states' edges are links of the enclosing template


def add_two_lane(g, prefix, length, state="s"):
    """Shared shape of FORCER and LIMITER: a main lane advanced by a,
    with a side lane entered by b whose a-edges drop back one position
    (so every b costs extra letters).  Lane ends exit via links.

    State names: ``{state}{j}_0`` main lane, ``{state}{j}_1`` side lane.
    """
    if length < 2:
        raise ValueError("lane length must be >= 2")
    main = lambda j: prefix + ("%s%d_0" % (state, j),)
    side = lambda j: prefix + ("%s%d_1" % (state, j),)
    for j in range(1, length + 1):
        g.vertex(main(j))
        g.vertex(side(j))
    for j in range(1, length + 1):
        if j < length:
            g.edge(main(j), "a", main(j + 1))
            g.edge(side(j), "b", side(j + 1))
        g.edge(main(j), "b", side(j))
        if j >= 2:
            g.edge(side(j), "a", main(j - 1))
    g.edge(side(1), "a", main(length))  # corner wrap keeps degrees closed
    # boundary: main(1) and side(1) each take one feed edge;
    # main(length) 'a' and side(length) 'b' exit via links
    return main(1), side(1), main(length), side(length)


def tester_level_types(formula, i):
    """Level types of TESTER(i) in kappa order: INC for the clause's
    literals (always exactly three), NOTINC elsewhere."""
    n = formula.n
    in_clause = set(formula.clauses[i - 1])
    return [
        ("INC" if code in in_clause else "NOTINC", literal_from_kappa(code, n))
        for code in range(2 * n)
    ]


def add_level(g, prefix, lam_sym, inc, n, row3_target):
    """One tester level, INC(lam) or NOTINC(lam): three rows of the
    4n+4 symbol columns.  ``row3_target(sym)`` names where row 3 exits.

    Row 1 is shared by both types (the lam and r columns merge to lam
    under a and to r under b).  Row 2 is where they differ: INC merges
    the q/r columns, NOTINC merges the q/lam columns, leaving the lam
    column of row 3 reachable only by b -- the asymmetry the clause
    check rests on.
    """
    syms = all_symbols(n)
    name = {s: sym_name(s) for s in syms}
    st = lambda row, s: prefix + ("p%d_%s" % (row, name[s]),)
    for row in (1, 2, 3):
        for s in syms:
            g.vertex(st(row, s))
    for s in syms:
        special = s == lam_sym or s == SYM_R
        g.edge(st(1, s), "a", st(2, lam_sym if special else s))
        g.edge(st(1, s), "b", st(2, SYM_R if special else s))
    for s in syms:
        if inc:
            special = s == SYM_Q or s == SYM_R
            g.edge(st(2, s), "a", st(3, SYM_Q if special else s))
            g.edge(st(2, s), "b", st(3, SYM_R if special else s))
        else:
            special = s == SYM_Q or s == lam_sym
            g.edge(st(2, s), "a", st(3, SYM_Q if special else s))
            g.edge(st(2, s), "b", st(3, lam_sym if special else s))
    for s in syms:
        tgt = row3_target(s)
        g.edge(st(3, s), "a", tgt)
        g.edge(st(3, s), "b", tgt)


@dataclass(frozen=True)
class ClauseLayout:
    """Per-clause derived sizes, for tests and diagnostics."""

    index: int
    alpha: int
    beta: int
    pipe1_len: int
    pipe8_len: int
    lane_len: int  # limiter main-lane length
    level_types: tuple


def add_clause(g, formula, i, consts):
    """CLAUSE(i): the full clause gadget. Returns its layout record."""
    n, m = formula.n, formula.m
    alpha = consts["alpha"][i - 1]
    beta = consts["beta"][i - 1]
    c = ("cl%d" % i,)
    syms = all_symbols(n)
    width = 4 * n + 4
    lane = 6 * n - 6
    pipe1_len = 12 * m * n + 4 * n - 2 * m + 6
    pipe8_len = alpha + 6 * n - 1

    sp = lambda l: c + ("sp%d" % l,)
    absp = lambda k: c + ("abs%d" % k,)
    msym = lambda s: c + ("m_%s" % sym_name(s),)
    bar = lambda s: c + ("bar_%s" % sym_name(s),)

    # sp row: a b-chain along the bottom of the cylinder
    for l in range(1, 4 * n + 7):
        g.vertex(sp(l))
    for l in range(1, 4 * n + 6):
        g.edge(sp(l), "b", sp(l + 1))
    # the clause's outgoing edge (into the top-level q chain) is added by build_g

    # absorber barrier; out rides to the sp row on a
    for k in range(1, 4 * n + 7):
        _, out = add_abs(g, absp(k))
        g.edge(out, "a", sp(k))
        # out's b edge is deliberately missing (completion)

    # vertical pipes off the sp row
    p1_top, p1_bot = add_pipe(g, c + ("pipe1",), pipe1_len)
    p2_top, p2_bot = add_pipe(g, c + ("pipe2",), 2 * n - 1)
    p3_top, p3_bot = add_pipe(g, c + ("pipe3",), 2 * n - 1)
    p4_top, p4_bot = add_pipe(g, c + ("pipe4",), 2 * n - 1)
    p5_top, p5_bot = add_pipe(g, c + ("pipe5",), 4)
    p6_top, p6_bot = add_pipe(g, c + ("pipe6",), 2 * n + 2)
    p7_top, p7_bot = add_pipe(g, c + ("pipe7",), 2 * n + 2)
    p8_top, p8_bot = add_pipe(g, c + ("pipe8",), pipe8_len)
    feeds = [p1_top, p1_top, p2_top, p2_top, p3_top, p3_top, p4_top, p4_top]
    for l, top in zip((1, 2, 3, 4, 5, 6, 4 * n + 5, 4 * n + 6), feeds):
        g.edge(sp(l), "a", top)
    # sp7..sp(4n+4) have no a edge (completion)

    # coders between pipe2/pipe3 and the recording pipes
    cca, cci = c + ("cca",), c + ("cci",)
    add_coder_pair(g, cca, cci)
    for letter in "ab":
        g.edge(p2_bot, letter, cca + ("in",))
        g.edge(p3_bot, letter, cci + ("in",))
        g.edge(p4_bot, letter, p5_top)
        g.edge(cca + ("out",), letter, p6_top)
        g.edge(cci + ("out",), letter, p7_top)

    # forcer fed by pipe5, draining into pipe8
    fm1, fs1, fmL, fsL = add_two_lane(g, c + ("forcer",), 2 * n + 1, state="q")
    g.edge(p5_bot, "a", fm1)
    g.edge(p5_bot, "b", fs1)
    g.edge(fmL, "a", p8_top)
    g.edge(fsL, "b", p8_top)

    # limiter fed by pipe8
    lm1, ls1, lmL, lsL = add_two_lane(g, c + ("limiter",), lane, state="s")
    g.edge(p8_bot, "a", lm1)
    g.edge(p8_bot, "b", ls1)

    # padding geometry: the conveyor below the symbol row
    if alpha > 0:
        add_pipes(g, c + ("pipes1",), alpha, width)
    add_pipes(g, c + ("pipes2",), 6 * n - 2, width)
    if beta > 0:
        add_pipes(g, c + ("pipes3",), beta, width)

    def col_top(k):
        part = "pipes1" if alpha > 0 else "pipes2"
        return c + (part, "s1_%d" % k)

    def bot_target(k):
        lit = literal_of_symbol(mu_inverse(k, n))
        if lit is not None:
            return bar(symbol_of_literal(lit))
        return absp(k + 2) + ("in",)

    def after_tester(k):
        if beta > 0:
            return c + ("pipes3", "s1_%d" % k)
        return bot_target(k)

    # symbol row: a horizontal a-chain that dumps into the padding on b
    for s in syms:
        g.vertex(msym(s))
    for k in range(1, width + 1):
        s = mu_inverse(k, n)
        if k < width:
            g.edge(msym(s), "a", msym(mu_inverse(k + 1, n)))
        else:
            g.edge(msym(s), "a", col_top(k))
        g.edge(msym(s), "b", col_top(k))
    for letter in "ab":
        g.edge(p6_bot, letter, msym(SYM_Q))
    g.edge(p7_bot, "a", msym(SYM_QP))
    g.edge(p7_bot, "b", col_top(2 * n + 2))

    if alpha > 0:
        for k in range(1, width + 1):
            for letter in "ab":
                g.edge(c + ("pipes1", "s%d_%d" % (alpha, k)), letter,
                       c + ("pipes2", "s1_%d" % k))

    # tester levels in kappa order
    types = tester_level_types(formula, i)
    level_prefix = [
        c + ("tester", "lvl%d_%s" % (kap, lit_name(lit)))
        for kap, (_, lit) in enumerate(types)
    ]
    for kap, (kind, lit) in enumerate(types):
        lam_sym = symbol_of_literal(lit)
        if kap + 1 < 2 * n:
            nxt = level_prefix[kap + 1]
            target = lambda s, nxt=nxt: nxt + ("p1_%s" % sym_name(s),)
        else:
            target = lambda s: after_tester(mu(s, n))
        add_level(g, level_prefix[kap], lam_sym, kind == "INC", n, target)
    for k in range(1, width + 1):
        for letter in "ab":
            g.edge(c + ("pipes2", "s%d_%d" % (6 * n - 2, k)), letter,
                   level_prefix[0] + ("p1_%s" % sym_name(mu_inverse(k, n)),))

    if beta > 0:
        for k in range(1, width + 1):
            for letter in "ab":
                g.edge(c + ("pipes3", "s%d_%d" % (beta, k)), letter, bot_target(k))

    # chosen-literal watchdogs, one per literal column
    for code in range(2 * n):
        s = symbol_of_literal(literal_from_kappa(code, n))
        g.vertex(bar(s))
        for letter in "ab":
            g.edge(bar(s), letter, absp(mu(s, n) + 2) + ("in",))

    # clock and drain: pipe1 keeps abs1 boarding until the last moment,
    # the limiter drains through pipe9 into abs2
    for letter in "ab":
        g.edge(p1_bot, letter, absp(1) + ("in",))
    if beta > 0:
        p9_top, p9_bot = add_pipe(g, c + ("pipe9",), beta)
        g.edge(lmL, "a", p9_top)
        g.edge(lsL, "b", p9_top)
        for letter in "ab":
            g.edge(p9_bot, letter, absp(2) + ("in",))
    else:
        g.edge(lmL, "a", absp(2) + ("in",))
        g.edge(lsL, "b", absp(2) + ("in",))

    return ClauseLayout(i, alpha, beta, pipe1_len, pipe8_len, lane,
                        tuple((k, str(l)) for k, l in types))


def add_top_level(g, formula):
    """The shared top level: the q chain that the clause exits merge
    into, the r/rp relays, the sink s2, and one absorber per clause."""
    n, m = formula.n, formula.m
    q = lambda k: ("q%d" % k,)
    r = lambda k: ("r%d" % k,)
    rp = lambda k: ("rp%d" % k,)
    s1, s2 = ("s1",), ("s2",)
    tabs = lambda k: ("abs%d" % k,)

    g.vertex(s1)
    g.vertex(s2)
    for k in range(1, m + 1):
        g.vertex(q(k))
        g.vertex(r(k))
        g.vertex(rp(k))
        tin, tout = add_abs(g, tabs(k))
        g.edge(tout, "a", r(k))
        g.edge(tout, "b", rp(k))
    for k in range(1, m + 1):
        g.edge(q(k), "a", r(k))
        g.edge(q(k), "b", q(k + 1) if k < m else s1)
        g.edge(r(k), "a", tabs(k) + ("in",))
        g.edge(r(k), "b", rp(k))
        g.edge(rp(k), "a", ("cl%d" % k, "sp1"))
        g.edge(rp(k), "b", tabs(k + 1) + ("in",) if k < m else q(1))
        g.edge(("cl%d" % k, "sp%d" % (4 * n + 6)), "b", q(k))
    g.edge(s1, "a", s1)
    g.edge(s1, "b", s2)
    g.edge(s2, "a", tabs(1) + ("in",))
    g.edge(s2, "b", s2)


def expected_deficiencies(formula):
    """The deficiency families the construction promises (adjusted for
    elided padding blocks)."""
    n, m = formula.n, formula.m
    cs = constants(n, m)
    outs, ins = [], []
    for i in range(1, m + 1):
        c = ("cl%d" % i,)
        for k in range(1, 4 * n + 7):
            outs.append((c + ("abs%d" % k, "out"), "b"))
        for l in range(7, 4 * n + 5):
            outs.append((c + ("sp%d" % l,), "a"))
        part = "pipes1" if cs["alpha"][i - 1] > 0 else "pipes2"
        for k in range(1, 4 * n + 5):
            sym = mu_inverse(k, n)
            if sym not in (SYM_Q, SYM_QP):
                ins.append(c + ("m_%s" % sym_name(sym),))
            if k not in (2 * n + 2, 4 * n + 4):
                ins.append(c + (part, "s1_%d" % k))
    outs.sort()
    ins.sort()
    return outs, ins


@dataclass(frozen=True)
class ReductionOutput:
    dfa: Dfa
    addresses: dict  # state index -> address string
    index: dict  # address string -> state index
    n: int
    m: int
    d: int
    gamma: int
    dbar: int
    alpha: tuple
    beta: tuple
    d_i: tuple
    sink: int
    clause_layouts: tuple
    deficiency_count: int

    def state_of(self, addr):
        return self.index[addr if isinstance(addr, str) else "|".join(addr)]


def build_g(formula):
    """Assemble the pre-completion multigraph G."""
    consts = constants(formula.n, formula.m)
    g = GraphBuilder()
    layouts = []
    for i in range(1, formula.m + 1):
        layouts.append(add_clause(g, formula, i, consts))
    add_top_level(g, formula)
    return g, consts, layouts


def freeze(g):
    """Dense-index the vertices (sorted addresses) and build the Dfa."""
    order = sorted(g.out)
    index = {addr: i for i, addr in enumerate(order)}
    da, db = [], []
    for addr in order:
        ta, tb = g.out[addr]
        if ta is None or tb is None:
            raise ValueError("vertex %r is incomplete" % (addr,))
        da.append(index[ta])
        db.append(index[tb])
    dfa = Dfa(tuple(da), tuple(db))
    addresses = {i: "|".join(addr) for addr, i in index.items()}
    str_index = {a: i for i, a in addresses.items()}
    return dfa, addresses, str_index


def reduce_formula(formula):
    """The full reduction: build G, check the deficiency families,
    complete the missing edges canonically, freeze and validate."""
    g, consts, layouts = build_g(formula)
    exp_outs, exp_ins = expected_deficiencies(formula)
    got_outs = g.out_missing()
    got_ins = g.in_missing()
    if got_outs != exp_outs or got_ins != exp_ins:
        raise AssertionError("deficiency families do not match the construction")
    expected = 8 * formula.m * formula.n + 4 * formula.m
    if len(got_outs) != expected:
        raise AssertionError(
            "deficiency count %d, expected %d" % (len(got_outs), expected)
        )
    added = g.complete_missing_edges()
    for addr, deg in g.indeg.items():
        if deg != 2:
            raise AssertionError("vertex %r has in-degree %d" % (addr, deg))
    dfa, addresses, index = freeze(g)
    return ReductionOutput(
        dfa=dfa,
        addresses=addresses,
        index=index,
        n=formula.n,
        m=formula.m,
        d=consts["d"],
        gamma=consts["gamma"],
        dbar=consts["dbar"],
        alpha=tuple(consts["alpha"]),
        beta=tuple(consts["beta"]),
        d_i=tuple(consts["d_i"]),
        sink=index["s2"],
        clause_layouts=tuple(layouts),
        deficiency_count=added,
    )


# ---------------------------------------------------------------------------
# standalone template builders (used by tests and diagnostics)


@dataclass(frozen=True)
class Template:
    kind: str
    graph: GraphBuilder
    meta: dict

    def states(self):
        return sorted(self.graph.out)

    def edges(self):
        out = []
        for src in sorted(self.graph.out):
            ta, tb = self.graph.out[src]
            if ta is not None:
                out.append((src, "a", ta))
            if tb is not None:
                out.append((src, "b", tb))
        return out


def build_template(kind, **params):
    """Build one template in isolation; boundary edges stay missing."""
    g = GraphBuilder()
    meta = {}
    kind = kind.upper()
    if kind == "PIPE":
        add_pipe(g, (), params["length"])
    elif kind == "PIPES":
        add_pipes(g, (), params["depth"], params["width"])
    elif kind == "ABS":
        add_abs(g, ())
    elif kind in ("CCA", "CCI", "CODERS"):
        add_coder_pair(g, ("cca",), ("cci",))
    elif kind in ("INC", "NOTINC"):
        n = params["n"]
        lit = params["literal"]
        sink = ("next",)
        g.vertex(sink)
        add_level(g, (), symbol_of_literal(lit), kind == "INC", n, lambda s: sink)
    elif kind == "TESTER":
        formula, i = params["formula"], params["i"]
        n = formula.n
        types = tester_level_types(formula, i)
        meta["level_types"] = types
        sink = ("next",)
        g.vertex(sink)
        prefixes = [
            ("lvl%d_%s" % (kap, lit_name(lit)),) for kap, (_, lit) in enumerate(types)
        ]
        for kap, (tk, lit) in enumerate(types):
            if kap + 1 < 2 * n:
                nxt = prefixes[kap + 1]
                target = lambda s, nxt=nxt: nxt + ("p1_%s" % sym_name(s),)
            else:
                target = lambda s: sink
            add_level(g, prefixes[kap], symbol_of_literal(lit), tk == "INC", n, target)
    elif kind == "FORCER":
        add_two_lane(g, (), 2 * params["n"] + 1, state="q")
    elif kind == "LIMITER":
        add_two_lane(g, (), 6 * params["n"] - 6, state="s")
    elif kind == "CLAUSE":
        formula, i = params["formula"], params["i"]
        consts = constants(formula.n, formula.m)
        meta["layout"] = add_clause(g, formula, i, consts)
    else:
        raise ValueError("unknown template kind %r" % kind)
    return Template(kind, g, meta)


def closed_dfa(template):
    """Freeze a standalone template for simulation: dangling boundary
    edges are routed to a closure state that self-loops, so the gadget's
    own states keep exactly their internal in-edges.  Returns
    (dfa, addresses, index) like :func:`freeze`."""
    g = template.graph
    missing = g.out_missing()
    if missing:
        closure = ("_closure",)
        g.vertex(closure)
        g.edge(closure, "a", closure)
        g.edge(closure, "b", closure)
        for addr, letter in missing:
            if addr != closure:
                g.edge(addr, letter, closure)
    return freeze(g)
