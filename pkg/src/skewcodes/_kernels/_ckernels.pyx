# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same signatures, same results."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

ctypedef long long i64

cnp.import_array()


cdef class Tables:
    cdef public long long p, q, n, r
    cdef i64[::1] exp
    cdef i64[::1] log
    cdef i64[::1] zech
    cdef i64[:, ::1] frob

    def __init__(self, p, q, r, exp, log, zech, frob):
        self.p = p
        self.q = q
        self.n = q - 1
        self.r = r
        self.exp = np.ascontiguousarray(exp, dtype=np.int64)
        self.log = np.ascontiguousarray(log, dtype=np.int64)
        self.zech = np.ascontiguousarray(zech, dtype=np.int64)
        self.frob = np.ascontiguousarray(frob, dtype=np.int64)


def make_tables(p, q, r, exp, log, zech, frob):
    return Tables(p, q, r, exp, log, zech, frob)


cdef inline i64 f_add(Tables T, i64 x, i64 y) noexcept nogil:
    cdef i64 lx, d, z
    if T.p == 2:
        return x ^ y
    if x == 0:
        return y
    if y == 0:
        return x
    lx = T.log[x]
    d = T.log[y] - lx
    if d < 0:
        d += T.n
    z = T.zech[d]
    if z < 0:
        return 0
    z += lx
    if z >= T.n:
        z -= T.n
    return T.exp[z]


cdef inline i64 f_mul(Tables T, i64 x, i64 y) noexcept nogil:
    cdef i64 e
    if x == 0 or y == 0:
        return 0
    e = T.log[x] + T.log[y]
    if e >= T.n:
        e -= T.n
    return T.exp[e]


cdef inline i64 f_inv(Tables T, i64 x) noexcept nogil:
    return T.exp[(T.n - T.log[x]) % T.n]


cdef void c_petit_mul(Tables T, i64 sig, i64* f0, i64 m, i64* g, i64* h,
                      i64* out, i64* work) noexcept nogil:
    # work must hold 2*m - 1 entries
    cdef i64 i, j, d, e, c, gi, row, r = T.r
    for i in range(2 * m - 1):
        work[i] = 0
    for i in range(m):
        gi = g[i]
        if gi == 0:
            continue
        row = (i * sig) % r
        for j in range(m):
            if h[j] != 0:
                work[i + j] = f_add(T, work[i + j], f_mul(T, gi, T.frob[row, h[j]]))
    d = 2 * m - 2
    while d >= m:
        c = work[d]
        if c != 0:
            work[d] = 0
            e = d - m
            row = (e * sig) % r
            for j in range(m):
                if f0[j] != 0:
                    work[e + j] = f_add(T, work[e + j], f_mul(T, c, T.frob[row, f0[j]]))
        d -= 1
    for i in range(m):
        out[i] = work[i]


cdef i64 c_rank(Tables T, i64* mat, i64 nrows, i64 ncols) noexcept nogil:
    # destroys mat
    cdef i64 rank = 0, col, i, u, piv, pinv, c, tmp, neg1 = T.p - 1
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if mat[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for u in range(ncols):
                tmp = mat[rank * ncols + u]
                mat[rank * ncols + u] = mat[piv * ncols + u]
                mat[piv * ncols + u] = tmp
        pinv = f_inv(T, mat[rank * ncols + col])
        for u in range(ncols):
            mat[rank * ncols + u] = f_mul(T, pinv, mat[rank * ncols + u])
        for i in range(nrows):
            if i != rank and mat[i * ncols + col] != 0:
                c = f_mul(T, neg1, mat[i * ncols + col])
                for u in range(ncols):
                    mat[i * ncols + u] = f_add(T, mat[i * ncols + u],
                                               f_mul(T, c, mat[rank * ncols + u]))
        rank += 1
    return rank


cdef i64* _to_buf(seq, i64 size) except NULL:
    cdef i64* buf = <i64*> malloc(max(size, 1) * sizeof(i64))
    cdef i64 i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


def petit_mul(Tables T, sig, f0, g, h):
    cdef i64 m = len(f0)
    cdef i64* bf = _to_buf(f0, m)
    cdef i64* bg = _to_buf(g, m)
    cdef i64* bh = _to_buf(h, m)
    cdef i64* out = <i64*> malloc(m * sizeof(i64))
    cdef i64* work = <i64*> malloc((2 * m) * sizeof(i64))
    try:
        c_petit_mul(T, sig, bf, m, bg, bh, out, work)
        return [out[i] for i in range(m)]
    finally:
        free(bf); free(bg); free(bh); free(out); free(work)


def left_powers(Tables T, sig_, f0, g, count_):
    cdef i64 sig = sig_, count = count_, m = len(f0), i, u
    if count <= 0:
        return []
    cdef i64* bf = _to_buf(f0, m)
    cdef i64* X = <i64*> malloc(max(count, 2) * m * sizeof(i64))
    cdef i64* work = <i64*> malloc(2 * m * sizeof(i64))
    try:
        memset(X, 0, max(count, 2) * m * sizeof(i64))
        X[0] = 1
        for u in range(m):
            X[m + u] = g[u]
        for i in range(2, count):
            c_petit_mul(T, sig, bf, m, &X[m], &X[(i - 1) * m], &X[i * m], work)
        return [[X[i * m + u] for u in range(m)] for i in range(count)]
    finally:
        free(bf); free(X); free(work)


def rank(Tables T, rows):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    cdef i64 nr = len(rows), nc = len(rows[0]), i, j
    cdef i64* mat = <i64*> malloc(nr * nc * sizeof(i64))
    try:
        for i in range(nr):
            for j in range(nc):
                mat[i * nc + j] = rows[i][j]
        return c_rank(T, mat, nr, nc)
    finally:
        free(mat)


def scan_homs(Tables T, sig_, tau_, gen_, src_f0, tgt_f0, cands):
    cdef i64 sig = sig_, tau = tau_, gen = gen_
    cdef i64 m = len(src_f0)
    cdef cnp.ndarray[i64, ndim=2, mode="c"] C = np.ascontiguousarray(
        np.asarray(cands, dtype=np.int64).reshape(-1, m))
    cdef i64 N = C.shape[0]
    verdict_a = np.zeros(N, dtype=np.int8)
    wit_i_a = np.full(N, -1, dtype=np.int64)
    wit_j_a = np.full(N, -1, dtype=np.int64)
    cdef signed char[::1] verdict = verdict_a
    cdef i64[::1] wit_i = wit_i_a
    cdef i64[::1] wit_j = wit_j_a

    cdef i64* sf = _to_buf(src_f0, m)
    cdef i64* tf = _to_buf(tgt_f0, m)
    cdef i64* X = <i64*> malloc(m * m * sizeof(i64))
    cdef i64* S = <i64*> malloc(m * m * m * sizeof(i64))
    cdef i64* ei = <i64*> malloc(m * sizeof(i64))
    cdef i64* ej = <i64*> malloc(m * sizeof(i64))
    cdef i64* lhs = <i64*> malloc(m * sizeof(i64))
    cdef i64* rhs = <i64*> malloc(m * sizeof(i64))
    cdef i64* work = <i64*> malloc(2 * m * sizeof(i64))
    cdef i64* mat = <i64*> malloc(m * m * sizeof(i64))
    cdef i64* twist_lhs = <i64*> malloc(m * sizeof(i64))
    cdef i64* twist_rhs = <i64*> malloc(m * sizeof(i64))
    cdef i64 idx, i, j, l, u, c, x, tc, r = T.r
    cdef bint failed
    try:
        for i in range(1, m):
            for j in range(1, m):
                memset(ei, 0, m * sizeof(i64))
                memset(ej, 0, m * sizeof(i64))
                ei[i] = 1
                ej[j] = 1
                c_petit_mul(T, sig, sf, m, ei, ej, lhs, work)
                for l in range(m):
                    S[(i * m + j) * m + l] = T.frob[tau, lhs[l]]
        tc = T.frob[tau, gen]
        for i in range(m):
            twist_rhs[i] = T.frob[tau, T.frob[(i * sig) % r, gen]]
            twist_lhs[i] = T.frob[(i * sig) % r, tc]
        with nogil:
            for idx in range(N):
                memset(X, 0, m * m * sizeof(i64))
                X[0] = 1
                if m > 1:
                    for l in range(m):
                        X[m + l] = C[idx, l]
                for i in range(2, m):
                    c_petit_mul(T, sig, tf, m, &X[m], &X[(i - 1) * m], &X[i * m], work)
                failed = False
                for i in range(1, m):
                    for l in range(m):
                        x = X[i * m + l]
                        if x != 0 and f_mul(T, x, twist_lhs[l]) != f_mul(T, twist_rhs[i], x):
                            failed = True
                            break
                    if failed:
                        wit_i[idx] = i
                        break
                if failed:
                    continue
                for i in range(1, m):
                    for j in range(1, m):
                        c_petit_mul(T, sig, tf, m, &X[i * m], &X[j * m], lhs, work)
                        for u in range(m):
                            rhs[u] = 0
                        for l in range(m):
                            c = S[(i * m + j) * m + l]
                            if c != 0:
                                for u in range(m):
                                    if X[l * m + u] != 0:
                                        rhs[u] = f_add(T, rhs[u], f_mul(T, c, X[l * m + u]))
                        for u in range(m):
                            if lhs[u] != rhs[u]:
                                failed = True
                                break
                        if failed:
                            wit_i[idx] = i
                            wit_j[idx] = j
                            break
                    if failed:
                        break
                if failed:
                    continue
                memcpy(mat, X, m * m * sizeof(i64))
                verdict[idx] = 2 if c_rank(T, mat, m, m) == m else 1
    finally:
        free(sf); free(tf); free(X); free(S); free(ei); free(ej); free(lhs)
        free(rhs); free(work); free(mat); free(twist_lhs); free(twist_rhs)
    return verdict_a, wit_i_a, wit_j_a


def scan_weight(Tables T, tau_, X_):
    cdef i64 tau = tau_
    rows = [list(r) for r in X_]
    cdef i64 m = len(rows), q = T.q, i, u, wt, wimg, c, idx, total = q ** m
    cdef i64* X = <i64*> malloc(m * m * sizeof(i64))
    cdef i64* x = <i64*> malloc(m * sizeof(i64))
    cdef i64* img = <i64*> malloc(m * sizeof(i64))
    cdef i64 found = -1
    try:
        for i in range(m):
            x[i] = 0
            for u in range(m):
                X[i * m + u] = rows[i][u]
        with nogil:
            for idx in range(total):
                wt = 0
                for u in range(m):
                    img[u] = 0
                for i in range(m):
                    if x[i] != 0:
                        wt += 1
                        c = T.frob[tau, x[i]]
                        for u in range(m):
                            if X[i * m + u] != 0:
                                img[u] = f_add(T, img[u], f_mul(T, c, X[i * m + u]))
                wimg = 0
                for u in range(m):
                    if img[u] != 0:
                        wimg += 1
                if wimg != wt:
                    found = idx
                    break
                i = 0
                while i < m:
                    x[i] += 1
                    if x[i] < q:
                        break
                    x[i] = 0
                    i += 1
    finally:
        free(X); free(x); free(img)
    return found


def weight_distribution(Tables T, rows_, length_):
    rows = [list(r) for r in rows_]
    cdef i64 k = len(rows), length = length_, q = T.q, i, l, w, it, total = q ** k
    cdef i64* R = <i64*> malloc(max(k, 1) * max(length, 1) * sizeof(i64))
    cdef i64* u = <i64*> malloc(max(k, 1) * sizeof(i64))
    cdef i64* word = <i64*> malloc(max(length, 1) * sizeof(i64))
    counts_a = np.zeros(length + 1, dtype=np.int64)
    cdef i64[::1] counts = counts_a
    try:
        for i in range(k):
            u[i] = 0
            for l in range(length):
                R[i * length + l] = rows[i][l]
        with nogil:
            for it in range(total):
                for l in range(length):
                    word[l] = 0
                for i in range(k):
                    if u[i] != 0:
                        for l in range(length):
                            if R[i * length + l] != 0:
                                word[l] = f_add(T, word[l], f_mul(T, u[i], R[i * length + l]))
                w = 0
                for l in range(length):
                    if word[l] != 0:
                        w += 1
                counts[w] += 1
                i = 0
                while i < k:
                    u[i] += 1
                    if u[i] < q:
                        break
                    u[i] = 0
                    i += 1
    finally:
        free(R); free(u); free(word)
    return [int(v) for v in counts_a]
