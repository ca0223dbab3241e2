# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the kernels in ``_pykernels``."""
from libc.stdlib cimport malloc, free

import numpy as np


cdef int _fill(object seq, long *buf, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return 0


cdef void _power(const long *p, long *out, char *seen, long *cyc, Py_ssize_t n, long k) noexcept nogil:
    cdef Py_ssize_t start, length, i
    cdef long x, shift
    for i in range(n):
        seen[i] = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while True:
            cyc[length] = x
            length += 1
            seen[x] = 1
            x = p[x]
            if x == start:
                break
        shift = k % length
        if shift < 0:
            shift += length
        for i in range(length):
            out[cyc[i]] = cyc[(i + shift) % length]


def compose_images(a, b):
    return tuple([b[x] for x in a])


def power_images(images, long k):
    cdef Py_ssize_t n = len(images), i
    cdef long *p = <long *> malloc(n * sizeof(long))
    cdef long *out = <long *> malloc(n * sizeof(long))
    cdef long *cyc = <long *> malloc(n * sizeof(long))
    cdef char *seen = <char *> malloc(n)
    try:
        _fill(images, p, n)
        _power(p, out, seen, cyc, n, k)
        return tuple([out[i] for i in range(n)])
    finally:
        free(p); free(out); free(cyc); free(seen)


def word_images(factors, images_l, images_r):
    cdef Py_ssize_t n = len(images_l), i
    cdef long *gl = <long *> malloc(n * sizeof(long))
    cdef long *gr = <long *> malloc(n * sizeof(long))
    cdef long *res = <long *> malloc(n * sizeof(long))
    cdef long *step = <long *> malloc(n * sizeof(long))
    cdef long *cyc = <long *> malloc(n * sizeof(long))
    cdef char *seen = <char *> malloc(n)
    cdef long exp
    cdef int gen
    try:
        _fill(images_l, gl, n)
        _fill(images_r, gr, n)
        for i in range(n):
            res[i] = i
        for gen, exp in factors:
            _power(gl if gen == 0 else gr, step, seen, cyc, n, exp)
            for i in range(n):
                res[i] = step[res[i]]
        return tuple([res[i] for i in range(n)])
    finally:
        free(gl); free(gr); free(res); free(step); free(cyc); free(seen)


def bfs_relabel(images_l, images_r):
    cdef Py_ssize_t n = len(images_l), head = 0, tail = 1, x, y, nxt = 1
    cdef long *gl = <long *> malloc(n * sizeof(long))
    cdef long *gr = <long *> malloc(n * sizeof(long))
    cdef long *new = <long *> malloc(n * sizeof(long))
    cdef long *queue = <long *> malloc(n * sizeof(long))
    try:
        _fill(images_l, gl, n)
        _fill(images_r, gr, n)
        for x in range(n):
            new[x] = -1
        new[0] = 0
        queue[0] = 0
        while head < tail:
            x = queue[head]
            head += 1
            y = gl[x]
            if new[y] < 0:
                new[y] = nxt; nxt += 1
                queue[tail] = y; tail += 1
            y = gr[x]
            if new[y] < 0:
                new[y] = nxt; nxt += 1
                queue[tail] = y; tail += 1
        return [new[x] for x in range(n)]
    finally:
        free(gl); free(gr); free(new); free(queue)


def labels_consistent(table, images_l, images_r):
    cdef const int[::1] order = table.order
    cdef const int[::1] parent = table.parent
    cdef const signed char[::1] via = table.via
    cdef const int[::1] next_l = table.next_l
    cdef const int[::1] next_r = table.next_r
    cdef Py_ssize_t size = order.shape[0], deg = len(images_l), i, v
    cdef long p
    cdef long *sig = <long *> malloc(2 * deg * sizeof(long))
    cdef long *lab = <long *> malloc(size * sizeof(long))
    cdef bint ok = True
    try:
        _fill(images_l, sig, deg)
        _fill(images_r, sig + deg, deg)
        with nogil:
            for p in range(deg):
                lab[order[0]] = p
                for i in range(1, size):
                    v = order[i]
                    lab[v] = sig[via[v] * deg + lab[parent[v]]]
                for v in range(size):
                    if lab[next_l[v]] != sig[lab[v]] or lab[next_r[v]] != sig[deg + lab[v]]:
                        ok = False
                        break
                if not ok:
                    break
        return ok
    finally:
        free(sig); free(lab)
