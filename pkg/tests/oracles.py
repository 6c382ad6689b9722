"""Independent reference implementations used as test oracles.

Nothing here touches the package's log tables, Zech tables or kernels:
field elements are coordinate vectors reduced by the modulus polynomial,
automorphisms are computed by repeated multiplication, and the Petit product
is schoolbook multiplication followed by leading-term elimination.
"""

import itertools


class PolyField:
    """F_p[x]/(modulus) on coordinate tuples, using the same int encoding as the package."""

    def __init__(self, p, modulus):
        self.p = p
        self.mod = list(modulus)
        self.r = len(modulus) - 1
        self.q = p**self.r

    def vec(self, x):
        return [(x // self.p**i) % self.p for i in range(self.r)]

    def num(self, v):
        return sum(c * self.p**i for i, c in enumerate(v))

    def add(self, x, y):
        return self.num([(a + b) % self.p for a, b in zip(self.vec(x), self.vec(y))])

    def neg(self, x):
        return self.num([(-a) % self.p for a in self.vec(x)])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        a, b, p, r = self.vec(x), self.vec(y), self.p, self.r
        prod = [0] * (2 * r - 1)
        for i in range(r):
            for j in range(r):
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p
        for d in range(2 * r - 2, r - 1, -1):
            c = prod[d]
            if c:
                for j in range(r + 1):
                    prod[d - r + j] = (prod[d - r + j] - c * self.mod[j]) % p
        return self.num(prod[:r])

    def pow(self, x, e):
        out = 1
        for _ in range(e):
            out = self.mul(out, x)
        return out

    def inv(self, x):
        return next(y for y in range(1, self.q) if self.mul(x, y) == 1)

    def frob(self, x, s):
        for _ in range(s % self.r):
            x = self.pow(x, self.p)
        return x

    def order(self, x):
        y, k = x, 1
        while y != 1:
            y = self.mul(y, x)
            k += 1
        return k


class NaiveSkew:
    """S[t; sigma] on coefficient lists with automorphisms by repeated powering."""

    def __init__(self, F, s):
        self.F = F
        self.s = s

    def sig(self, x, j):
        return self.F.frob(x, self.s * j)

    def mul(self, g, h):
        F = self.F
        if not g or not h:
            return []
        out = [0] * (len(g) + len(h) - 1)
        for i, gi in enumerate(g):
            for j, hj in enumerate(h):
                out[i + j] = F.add(out[i + j], F.mul(gi, self.sig(hj, i)))
        return strip(out)

    def add(self, g, h):
        n = max(len(g), len(h))
        g = g + [0] * (n - len(g))
        h = h + [0] * (n - len(h))
        return strip([self.F.add(a, b) for a, b in zip(g, h)])

    def rem(self, g, f):
        """Remainder of right division by monic ``f``: kill leading terms with ``c t^e f``."""
        F = self.F
        g = strip(list(g))
        m = len(f) - 1
        while len(g) - 1 >= m:
            c = g[-1]
            e = len(g) - 1 - m
            sub = [0] * e + [F.mul(c, self.sig(fj, e)) for fj in f]
            g = strip([F.sub(x, y) for x, y in zip(g, sub)])
        return g

    def petit(self, g, h, f):
        m = len(f) - 1
        r = self.rem(self.mul(g, h), f)
        return r + [0] * (m - len(r))


def strip(v):
    v = list(v)
    while v and not v[-1]:
        v.pop()
    return v


def naive_is_hom_full(F, s, tau, f_src, f_tgt, g_image):
    """Check ``G(xy) == G(x)G(y)`` on every pair of elements (tiny fields only).

    Images of ``t^i`` are left-nested powers of ``g_image``.
    """
    R = NaiveSkew(F, s)
    m = len(f_src) - 1
    X = [[1] + [0] * (m - 1)]
    g = list(g_image) + [0] * (m - len(g_image))
    for _ in range(1, m):
        X.append(R.petit(g, X[-1], f_tgt))

    def G(x):
        out = [0] * m
        for i, c in enumerate(x):
            if c:
                tc = F.frob(c, tau)
                for u in range(m):
                    out[u] = F.add(out[u], F.mul(tc, X[i][u]))
        return out

    elems = [list(v) for v in itertools.product(range(F.q), repeat=m)]
    imgs = {tuple(x): G(x) for x in elems}
    for x in elems:
        for y in elems:
            if G(R.petit(x, y, f_src)) != R.petit(imgs[tuple(x)], imgs[tuple(y)], f_tgt):
                return False, None
    # bijective iff injective on a finite set
    bij = len({tuple(v) for v in imgs.values()}) == len(elems)
    return True, bij


def constacyclic_f(F, m, a):
    return [F.neg(a)] + [0] * (m - 1) + [1]


def cosets(F, s, m):
    """Cosets of the image of ``x -> x sigma(x) ... sigma^(m-1)(x)`` in ``K^x``."""
    def norm(x):
        out = 1
        for j in range(m):
            out = F.mul(out, F.frob(x, s * j))
        return out

    H = {norm(x) for x in range(1, F.q)}
    seen, out = set(), []
    for a in range(1, F.q):
        if a in seen:
            continue
        c = {F.mul(a, h) for h in H}
        seen |= c
        out.append(c)
    return out
