"""Pure-numpy subset-image kernels, used when the compiled core is absent."""

import numpy as np


def backend_name():
    return "numpy"


def _unpack(mask, n):
    arr = np.frombuffer(mask, dtype=np.uint8)
    return np.unpackbits(arr, bitorder="little", count=n).astype(bool)


def _pack(bits):
    return np.packbits(bits, bitorder="little").tobytes()


def run_word(da, db, mask, word):
    n = da.shape[0]
    cur = _unpack(mask, n)
    deltas = (da, db)
    for c in word:
        nxt = np.zeros(n, dtype=bool)
        nxt[deltas[c][cur]] = True
        cur = nxt
    return _pack(cur)


def trace_word(da, db, mask, word):
    n = da.shape[0]
    cur = _unpack(mask, n)
    deltas = (da, db)
    out = [_pack(cur)]
    for c in word:
        nxt = np.zeros(n, dtype=bool)
        nxt[deltas[c][cur]] = True
        cur = nxt
        out.append(_pack(cur))
    return out
