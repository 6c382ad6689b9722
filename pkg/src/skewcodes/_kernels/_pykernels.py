"""Pure-Python reference implementation of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same results; the package picks the compiled one when it imports.

Field elements are ints in ``range(q)`` (polynomial-basis digits).  ``sig`` and
``tau`` are Frobenius exponents: ``sigma^i`` is row ``(i*sig) % r`` of ``frob``.
A Petit algebra is given by ``f0`` (length ``m``) with ``f = t^m - sum f0[j] t^j``.
"""

import numpy as np


class Tables:
    __slots__ = ("p", "q", "n", "r", "exp", "log", "zech", "frob")

    def __init__(self, p, q, r, exp, log, zech, frob):
        self.p = int(p)
        self.q = int(q)
        self.n = self.q - 1
        self.r = int(r)
        self.exp = [int(v) for v in exp]
        self.log = [int(v) for v in log]
        self.zech = [int(v) for v in zech]
        self.frob = [[int(v) for v in row] for row in frob]


def make_tables(p, q, r, exp, log, zech, frob):
    return Tables(p, q, r, exp, log, zech, frob)


def _ops(T):
    exp, log, zech, n = T.exp, T.log, T.zech, T.n

    if T.p == 2:

        def add(x, y):
            return x ^ y

    else:

        def add(x, y):
            if not x:
                return y
            if not y:
                return x
            lx = log[x]
            d = log[y] - lx
            if d < 0:
                d += n
            z = zech[d]
            if z < 0:
                return 0
            z += lx
            if z >= n:
                z -= n
            return exp[z]

    def mul(x, y):
        if not x or not y:
            return 0
        e = log[x] + log[y]
        if e >= n:
            e -= n
        return exp[e]

    def inv(x):
        return exp[(n - log[x]) % n]

    return add, mul, inv


def _neg_one(T):
    return T.p - 1


def _petit_mul(T, add, mul, sig, f0, g, h):
    m = len(f0)
    r = T.r
    frob = T.frob
    prod = [0] * (2 * m - 1)
    for i in range(m):
        gi = g[i]
        if not gi:
            continue
        row = frob[(i * sig) % r]
        for j in range(m):
            hj = h[j]
            if hj:
                prod[i + j] = add(prod[i + j], mul(gi, row[hj]))
    for d in range(2 * m - 2, m - 1, -1):
        c = prod[d]
        if not c:
            continue
        prod[d] = 0
        e = d - m
        row = frob[(e * sig) % r]
        for j in range(m):
            a = f0[j]
            if a:
                prod[e + j] = add(prod[e + j], mul(c, row[a]))
    return prod[:m]


def petit_mul(T, sig, f0, g, h):
    """``g o h = g h mod_r f`` in the Petit algebra given by ``f0``."""
    add, mul, _ = _ops(T)
    return _petit_mul(T, add, mul, int(sig), [int(v) for v in f0], [int(v) for v in g], [int(v) for v in h])


def left_powers(T, sig, f0, g, count):
    """``[1, g, g(g), g(g(g)), ...]``: the first ``count`` left-nested powers."""
    add, mul, _ = _ops(T)
    f0 = [int(v) for v in f0]
    g = [int(v) for v in g]
    m = len(f0)
    out = [[1] + [0] * (m - 1)]
    if count > 1:
        out.append(list(g))
    while len(out) < count:
        out.append(_petit_mul(T, add, mul, sig, f0, g, out[-1]))
    return out[:count]


def _rank(T, add, mul, inv, rows):
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    neg1 = _neg_one(T)
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pinv = inv(mat[rank][col])
        prow = [mul(pinv, v) for v in mat[rank]]
        mat[rank] = prow
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mul(neg1, mat[i][col])
                mat[i] = [add(a, mul(c, b)) for a, b in zip(mat[i], prow)]
        rank += 1
    return rank


def rank(T, rows):
    add, mul, inv = _ops(T)
    return _rank(T, add, mul, inv, [[int(v) for v in r] for r in rows])


def scan_homs(T, sig, tau, gen, src_f0, tgt_f0, cands):
    """Brute-force homomorphism test for a batch of images of ``t``.

    For each row ``g`` of ``cands`` the map acts by ``tau`` on scalars and sends
    ``t^i`` to the left-nested power ``L(g, i)``.  It is a homomorphism iff

    * ``G(t^i) tau(c) == tau(sigma^i(c)) G(t^i)`` for ``c = gen`` and all ``i``
      (the scalars satisfying this form a subfield, so a field generator
      suffices), and
    * ``G(t^i) o G(t^j) == G(t^i o t^j)`` for all ``0 < i, j < m``.

    Returns ``(verdict, wit_i, wit_j)`` arrays; verdict 0 = not a homomorphism,
    1 = homomorphism, 2 = isomorphism.  For a failing twist the witness is
    ``(i, -1)``, for a failing product ``(i, j)``; ``(-1, -1)`` otherwise.
    """
    add, mul, inv = _ops(T)
    sig = int(sig)
    tau = int(tau)
    r = T.r
    frob = T.frob
    src_f0 = [int(v) for v in src_f0]
    tgt_f0 = [int(v) for v in tgt_f0]
    m = len(src_f0)
    cands = np.asarray(cands, dtype=np.int64).reshape(-1, m)
    N = cands.shape[0]
    verdict = np.zeros(N, dtype=np.int8)
    wit_i = np.full(N, -1, dtype=np.int64)
    wit_j = np.full(N, -1, dtype=np.int64)

    basis = [[1 if l == i else 0 for l in range(m)] for i in range(m)]
    src_prod = [[None] * m for _ in range(m)]
    for i in range(1, m):
        for j in range(1, m):
            src_prod[i][j] = [frob[tau][v] for v in _petit_mul(T, add, mul, sig, src_f0, basis[i], basis[j])]

    tau_row = frob[tau]
    tc = tau_row[int(gen)]
    twist_rhs = [tau_row[frob[(i * sig) % r][int(gen)]] for i in range(m)]
    twist_lhs = [frob[(l * sig) % r][tc] for l in range(m)]

    for idx in range(N):
        g = [int(v) for v in cands[idx]]
        X = [basis[0]]
        if m > 1:
            X.append(g)
        for i in range(2, m):
            X.append(_petit_mul(T, add, mul, sig, tgt_f0, g, X[i - 1]))
        failed = False
        for i in range(1, m):
            rhs = twist_rhs[i]
            Xi = X[i]
            for l in range(m):
                x = Xi[l]
                if x and mul(x, twist_lhs[l]) != mul(rhs, x):
                    failed = True
                    break
            if failed:
                wit_i[idx] = i
                break
        if failed:
            continue
        for i in range(1, m):
            for j in range(1, m):
                lhs = _petit_mul(T, add, mul, sig, tgt_f0, X[i], X[j])
                h = src_prod[i][j]
                rhs = [0] * m
                for l in range(m):
                    c = h[l]
                    if c:
                        Xl = X[l]
                        for u in range(m):
                            if Xl[u]:
                                rhs[u] = add(rhs[u], mul(c, Xl[u]))
                if lhs != rhs:
                    failed = True
                    wit_i[idx] = i
                    wit_j[idx] = j
                    break
            if failed:
                break
        if failed:
            continue
        verdict[idx] = 2 if _rank(T, add, mul, inv, X) == m else 1
    return verdict, wit_i, wit_j


def scan_weight(T, tau, X):
    """Index of the first ``x`` with ``wt(G(x)) != wt(x)``, else -1.

    ``G(sum x_i t^i) = sum tau(x_i) X[i]``; ``x`` runs over all ``q^m`` vectors
    with index ``sum x_i q^i``.
    """
    add, mul, _ = _ops(T)
    X = [[int(v) for v in row] for row in X]
    m = len(X)
    q = T.q
    tau_row = T.frob[int(tau)]
    x = [0] * m
    total = q**m
    for idx in range(total):
        img = [0] * m
        wt = 0
        for i in range(m):
            xi = x[i]
            if xi:
                wt += 1
                c = tau_row[xi]
                row = X[i]
                for u in range(m):
                    if row[u]:
                        img[u] = add(img[u], mul(c, row[u]))
        if sum(1 for v in img if v) != wt:
            return idx
        i = 0
        while i < m:
            x[i] += 1
            if x[i] < q:
                break
            x[i] = 0
            i += 1
    return -1


def weight_distribution(T, rows, length):
    """Hamming weight counts of the left span of ``rows`` (all ``q^k`` codewords)."""
    add, mul, _ = _ops(T)
    rows = [[int(v) for v in row] for row in rows]
    k = len(rows)
    q = T.q
    counts = [0] * (length + 1)
    u = [0] * k
    for _ in range(q**k):
        word = [0] * length
        for i in range(k):
            ui = u[i]
            if ui:
                row = rows[i]
                for l in range(length):
                    if row[l]:
                        word[l] = add(word[l], mul(ui, row[l]))
        counts[sum(1 for v in word if v)] += 1
        i = 0
        while i < k:
            u[i] += 1
            if u[i] < q:
                break
            u[i] = 0
            i += 1
    return counts
