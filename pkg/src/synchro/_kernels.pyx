# cython: boundscheck=False, wraparound=False, cdivision=True
"""Packed-bitset subset-image kernels (compiled core).

A subset of states is a little-endian packed bit vector (one bit per
state).  ``run_word`` applies a word to a subset, ``trace_word`` also
returns every intermediate subset.  Both mirror synchro._fallback.
"""

import numpy as np

cimport numpy as cnp


def backend_name():
    return "cython"


cdef void _step(const cnp.int32_t[:] delta, const unsigned char[:] cur,
                unsigned char[:] nxt, int n, int nbytes) noexcept nogil:
    cdef int i, t
    for i in range(nbytes):
        nxt[i] = 0
    for i in range(n):
        if cur[i >> 3] & (1 << (i & 7)):
            t = delta[i]
            nxt[t >> 3] |= 1 << (t & 7)


def run_word(cnp.ndarray[cnp.int32_t, ndim=1] da,
             cnp.ndarray[cnp.int32_t, ndim=1] db,
             bytes mask, bytes word):
    cdef int n = da.shape[0]
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray cur_b = bytearray(mask)
    cdef bytearray nxt_b = bytearray(nbytes)
    cdef unsigned char[:] cur = cur_b
    cdef unsigned char[:] nxt = nxt_b
    cdef const cnp.int32_t[:] va = da
    cdef const cnp.int32_t[:] vb = db
    cdef const unsigned char* w = word
    cdef Py_ssize_t k
    for k in range(len(word)):
        _step(vb if w[k] else va, cur, nxt, n, nbytes)
        cur[:] = nxt
    return bytes(cur_b)


def trace_word(cnp.ndarray[cnp.int32_t, ndim=1] da,
               cnp.ndarray[cnp.int32_t, ndim=1] db,
               bytes mask, bytes word):
    cdef int n = da.shape[0]
    cdef int nbytes = (n + 7) >> 3
    cdef bytearray cur_b = bytearray(mask)
    cdef bytearray nxt_b = bytearray(nbytes)
    cdef unsigned char[:] cur = cur_b
    cdef unsigned char[:] nxt = nxt_b
    cdef const cnp.int32_t[:] va = da
    cdef const cnp.int32_t[:] vb = db
    cdef const unsigned char* w = word
    cdef Py_ssize_t k
    cdef list out = [bytes(cur_b)]
    for k in range(len(word)):
        _step(vb if w[k] else va, cur, nxt, n, nbytes)
        cur[:] = nxt
        out.append(bytes(cur_b))
    return out
