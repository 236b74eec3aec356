"""Complete binary DFAs, subset images, and structural validators.

States are dense integers ``0..state_count-1``; the two letters are the
characters ``a`` and ``b`` (ordered ``a < b``).  Words are plain strings
over ``ab``.  Subsets of states are held in :class:`StateSet`, a fixed
width bit vector.  Hierarchical state names live in a separate address
map so the simulation core stays allocation-light.
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import engine

LETTERS = "ab"


class AutomatonFormatError(ValueError):
    """Malformed automaton text (reported with a line number)."""


def check_word(word):
    if any(c not in LETTERS for c in word):
        raise ValueError("word must be over the alphabet {a, b}: %r" % word)
    return word


def word_to_codes(word):
    return bytes(0 if c == "a" else 1 for c in check_word(word))


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton over the two-letter alphabet."""

    delta_a: tuple
    delta_b: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.delta_a)
        if n == 0:
            raise ValueError("automaton needs at least one state")
        if len(self.delta_b) != n:
            raise ValueError("transition tables must have equal length")
        for t in self.delta_a + self.delta_b:
            if not 0 <= t < n:
                raise ValueError("transition target %r out of range" % (t,))

    @property
    def state_count(self):
        return len(self.delta_a)

    def arrays(self):
        if "arr" not in self._cache:
            self._cache["arr"] = (
                np.asarray(self.delta_a, dtype=np.int32),
                np.asarray(self.delta_b, dtype=np.int32),
            )
        return self._cache["arr"]

    def step(self, state, letter):
        return (self.delta_a if letter == "a" else self.delta_b)[state]

    def run(self, state, word):
        for c in check_word(word):
            state = self.step(state, c)
        return state

    def full_set(self):
        return StateSet.full(self.state_count)


class StateSet:
    """Subset of states as a fixed-width bit vector."""

    __slots__ = ("n", "mask")

    def __init__(self, n, mask=0):
        if mask < 0 or mask >> n:
            raise ValueError("mask out of range for %d states" % n)
        self.n = n
        self.mask = mask

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_indices(cls, n, indices):
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError("state %r out of range" % (i,))
            mask |= 1 << i
        return cls(n, mask)

    def indices(self):
        return [i for i in range(self.n) if self.mask >> i & 1]

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __eq__(self, other):
        return isinstance(other, StateSet) and (self.n, self.mask) == (other.n, other.mask)

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return "StateSet(%d, {%s})" % (self.n, ", ".join(map(str, self.indices())))

    def to_bytes(self):
        return self.mask.to_bytes((self.n + 7) // 8, "little")

    @classmethod
    def from_bytes(cls, n, data):
        return cls(n, int.from_bytes(data, "little"))


def apply_word(dfa, s, word):
    """Image of the state set ``s`` under ``word``."""
    if s.n != dfa.state_count:
        raise ValueError("state set size does not match automaton")
    da, db = dfa.arrays()
    out = engine.run_word(da, db, s.to_bytes(), word_to_codes(word))
    return StateSet.from_bytes(s.n, out)


def image_trace(dfa, word):
    """All sets of active states: S_0 = Q, then one set per letter."""
    da, db = dfa.arrays()
    masks = engine.trace_word(da, db, dfa.full_set().to_bytes(), word_to_codes(word))
    return [StateSet.from_bytes(dfa.state_count, m) for m in masks]


def is_reset_word(dfa, word):
    """True iff ``word`` maps the full state set to a single state."""
    return len(apply_word(dfa, dfa.full_set(), word)) == 1


def in_degrees(dfa):
    counts = [0] * dfa.state_count
    for table in (dfa.delta_a, dfa.delta_b):
        for t in table:
            counts[t] += 1
    return counts


def is_eulerian(dfa):
    """True iff every state has exactly two incoming transitions in total."""
    return all(c == 2 for c in in_degrees(dfa))


def _pair_index(p, q, n):
    # unordered pair (p < q) -> dense index
    return p * n + q


def pair_merge_table(dfa):
    """Backward BFS over unordered state pairs.

    Returns ``(dist, letter)`` maps keyed by pair index: the length of a
    shortest merging word for each pair, and the first letter of one such
    word (ties broken toward ``a``).  Unreachable pairs are absent.
    """
    n = dfa.state_count
    preds_a = [[] for _ in range(n)]
    preds_b = [[] for _ in range(n)]
    for r in range(n):
        preds_a[dfa.delta_a[r]].append(r)
        preds_b[dfa.delta_b[r]].append(r)
    dist = {}
    letter = {}
    queue = deque()
    for q in range(n):
        idx = _pair_index(q, q, n)
        dist[idx] = 0
        queue.append((q, q))
    while queue:
        p, q = queue.popleft()
        d = dist[_pair_index(p, q, n)]
        for lt, preds in (("a", preds_a), ("b", preds_b)):
            for p2 in preds[p]:
                for q2 in preds[q]:
                    lo, hi = (p2, q2) if p2 <= q2 else (q2, p2)
                    idx = _pair_index(lo, hi, n)
                    if idx not in dist:
                        dist[idx] = d + 1
                        letter[idx] = lt
                        queue.append((lo, hi))
    return dist, letter


def is_synchronizing(dfa):
    """Pairwise-merging criterion: every state pair can be sent to a
    common state by some word."""
    n = dfa.state_count
    dist, _ = pair_merge_table(dfa)
    return all(
        _pair_index(p, q, n) in dist for p in range(n) for q in range(p + 1, n)
    )


def pair_merge_bound(dfa):
    """Max over pairs of the shortest merging-word length.

    Every reset word must merge the worst pair, so this is a lower bound
    on reset length.  Raises on non-synchronizing input.
    """
    n = dfa.state_count
    dist, _ = pair_merge_table(dfa)
    bound = 0
    for p in range(n):
        for q in range(p + 1, n):
            idx = _pair_index(p, q, n)
            if idx not in dist:
                raise ValueError("automaton is not synchronizing")
            bound = max(bound, dist[idx])
    return bound


def cerny(n):
    """The classical n-state automaton C_n whose shortest reset word has
    length (n-1)^2: letter a cycles the states, letter b maps n-1 to 0."""
    if n < 1:
        raise ValueError("n must be positive")
    da = tuple((i + 1) % n for i in range(n))
    db = tuple(0 if i == n - 1 else i for i in range(n))
    return Dfa(da, db)


def serialize_automaton(dfa, addresses=None):
    """Render the text format (see parse_automaton)."""
    lines = ["SYN 1", "states %d" % dfa.state_count, "letters 2"]
    for i in range(dfa.state_count):
        lines.append("%d %d" % (dfa.delta_a[i], dfa.delta_b[i]))
    if addresses:
        for i in sorted(addresses):
            lines.append("addr %d %s" % (i, addresses[i]))
    return "\n".join(lines) + "\n"


def parse_automaton(text):
    """Parse the automaton text format.

    Line 1 ``SYN 1``, line 2 ``states N``, line 3 ``letters 2``, then N
    lines ``ta tb`` with 0-based targets, then optional ``addr i name``
    lines.  Returns ``(dfa, addresses)`` where addresses maps state
    index to name (possibly empty).
    """
    lines = text.splitlines()

    def fail(lineno, msg):
        raise AutomatonFormatError("line %d: %s" % (lineno, msg))

    if len(lines) < 3:
        fail(1, "truncated header")
    if lines[0].strip() != "SYN 1":
        fail(1, "expected 'SYN 1'")
    parts = lines[1].split()
    if len(parts) != 2 or parts[0] != "states":
        fail(2, "expected 'states N'")
    try:
        n = int(parts[1])
    except ValueError:
        fail(2, "state count is not an integer")
    if n <= 0:
        fail(2, "state count must be positive")
    if lines[2].strip() != "letters 2":
        fail(3, "expected 'letters 2'")
    if len(lines) < 3 + n:
        fail(len(lines), "expected %d transition lines" % n)
    da, db = [], []
    for i in range(n):
        lineno = 4 + i
        parts = lines[3 + i].split()
        if len(parts) != 2:
            fail(lineno, "expected 'ta tb'")
        try:
            ta, tb = int(parts[0]), int(parts[1])
        except ValueError:
            fail(lineno, "targets must be integers")
        if not (0 <= ta < n and 0 <= tb < n):
            fail(lineno, "target out of range")
        da.append(ta)
        db.append(tb)
    addresses = {}
    for off, line in enumerate(lines[3 + n:]):
        lineno = 4 + n + off
        if not line.strip():
            continue
        parts = line.split(None, 2)
        if len(parts) != 3 or parts[0] != "addr":
            fail(lineno, "expected 'addr i name'")
        try:
            idx = int(parts[1])
        except ValueError:
            fail(lineno, "address index is not an integer")
        if not 0 <= idx < n:
            fail(lineno, "address index out of range")
        addresses[idx] = parts[2]
    return Dfa(tuple(da), tuple(db)), addresses


def export_dot(dfa, addresses=None, clusters=False):
    """Graphviz rendering: solid arrows for a, dashed for b.

    With ``clusters=True`` states sharing the first address component are
    grouped into a subgraph cluster.
    """
    addresses = addresses or {}

    def label(i):
        return addresses.get(i, str(i))

    lines = ["digraph dfa {"]
    if clusters and addresses:
        groups = {}
        for i in range(dfa.state_count):
            key = addresses.get(i, "").split("|")[0] if i in addresses else ""
            groups.setdefault(key, []).append(i)
        for gi, (key, members) in enumerate(sorted(groups.items())):
            if key:
                lines.append('  subgraph "cluster_%d" { label="%s";' % (gi, key))
            for i in members:
                lines.append('    n%d [label="%s"];' % (i, label(i)))
            if key:
                lines.append("  }")
    else:
        for i in range(dfa.state_count):
            lines.append('  n%d [label="%s"];' % (i, label(i)))
    for i in range(dfa.state_count):
        lines.append("  n%d -> n%d;" % (i, dfa.delta_a[i]))
        lines.append("  n%d -> n%d [style=dashed];" % (i, dfa.delta_b[i]))
    lines.append("}")
    return "\n".join(lines) + "\n"
