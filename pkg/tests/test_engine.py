import random

import pytest

from synchro import _fallback, engine
from synchro.automaton import word_to_codes

from .conftest import random_dfa

try:
    from synchro import _kernels
except ImportError:
    _kernels = None


def test_backend_reported():
    assert engine.backend_name() in ("cython", "numpy")
    assert "numpy" in engine.available_backends()


@pytest.mark.skipif(_kernels is None, reason="compiled kernel not built")
def test_backends_agree():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randrange(1, 40)
        dfa = random_dfa(rng, n)
        da, db = dfa.arrays()
        mask = rng.getrandbits(n).to_bytes((n + 7) // 8, "little")
        word = word_to_codes("".join(rng.choice("ab") for _ in range(rng.randrange(0, 30))))
        assert _kernels.run_word(da, db, mask, word) == _fallback.run_word(da, db, mask, word)
        assert _kernels.trace_word(da, db, mask, word) == _fallback.trace_word(da, db, mask, word)
