"""Brute-force verdicts for the dialgebra and tensor-square checks.

Independent of the Rust crate. Each identity is written out as a plain
triple loop over basis vectors; the first failing triple in lexicographic
order is recorded. Output goes to crates/core/tests/golden/axioms.json.
"""

import itertools
import json
from fractions import Fraction as F


def vec(n, i):
    v = [F(0)] * n
    v[i] = F(1)
    return v


def mul(t, u, v):
    n = len(t[0][0])
    out = [F(0)] * n
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            if a and b:
                for k in range(n):
                    out[k] += a * b * t[i][j][k]
    return out


def ap(mat, v):
    return [sum((mat[r][c] * v[c] for c in range(len(v))), F(0)) for r in range(len(mat))]


def sub(a, *bs):
    out = list(a)
    for b in bs:
        out = [x - y for x, y in zip(out, b)]
    return out


def first_failure(n, f):
    for t in itertools.product(range(n), repeat=3):
        x, y, z = (vec(n, i) for i in t)
        if any(f(x, y, z)):
            return list(t)
    return None


def dialgebra_verdicts(dashv, vdash, alpha):
    n = len(alpha)
    a = lambda v: ap(alpha, v)
    L = lambda u, v: mul(dashv, u, v)
    R = lambda u, v: mul(vdash, u, v)
    eqs = {
        "vdash-left-leibniz": lambda x, y, z: sub(R(a(x), R(y, z)), R(R(x, y), a(z)), R(a(y), R(x, z))),
        "dashv-right-leibniz": lambda x, y, z: sub(L(L(x, y), a(z)), L(L(x, z), a(y)), L(a(x), L(y, z))),
        "D1": lambda x, y, z: sub(R(a(x), L(y, z)), L(R(x, y), a(z)), L(a(y), R(x, z))),
        "D2": lambda x, y, z: sub(L(R(x, y), a(z)), R(a(x), L(y, z)), R(L(x, z), a(y))),
        "DL2": lambda x, y, z: sub(R(a(x), R(y, z)), R(L(x, y), a(z)), R(a(y), R(x, z))),
        "DL3": lambda x, y, z: sub(L(a(x), R(y, z)), L(L(x, y), a(z)), R(a(y), L(x, z))),
        "DR2": lambda x, y, z: sub(L(L(x, y), a(z)), L(a(x), R(y, z)), L(L(x, z), a(y))),
        "DR3": lambda x, y, z: sub(R(L(x, y), a(z)), R(a(x), R(y, z)), L(R(x, z), a(y))),
    }
    return {k: first_failure(n, f) for k, f in eqs.items()}


def l2():
    t = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
    t[0][0] = [F(0), F(1)]
    return t


def leibniz_a():
    t = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
    t[1][0] = [F(1), F(0)]
    return t


def r2():
    t = [[[F(0)] * 2 for _ in range(2)] for _ in range(2)]
    t[0][1] = [F(0), F(1)]
    t[1][0] = [F(0), F(-1)]
    return t


def tensor_square(prod):
    # basis (i, j) -> i*n + j; x.(a(x)b) = xa (x) b, (a(x)b).x = a (x) bx (identity twist)
    n = len(prod)
    N = n * n
    left = [[[F(0)] * N for _ in range(N)] for _ in range(n)]
    right = [[[F(0)] * N for _ in range(n)] for _ in range(N)]
    anchor = [[F(0)] * N for _ in range(n)]
    for x in range(n):
        for i in range(n):
            for j in range(n):
                xa = prod[x][i]
                bx = prod[j][x]
                for k in range(n):
                    left[x][i * n + j][k * n + j] += xa[k]
                    right[i * n + j][x][i * n + k] += bx[k]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                anchor[k][i * n + j] = prod[i][j][k]
    return left, right, anchor


def tensor_square_l2_checks():
    prod = l2()
    n = 2
    N = 4
    left, right, anchor = tensor_square(prod)
    g = lambda i: vec(n, i)
    m = lambda i: vec(N, i)
    xm = lambda x, u: mul(left, x, u)
    mx = lambda u, x: mul(right, u, x)
    xy = lambda x, y: mul(prod, x, y)
    out = {}
    # identity twists, so the bimodule conditions read without alpha
    def scan(name, shape, f):
        for t in itertools.product(*[range(d) for d in shape]):
            if any(f(*t)):
                out[name] = list(t)
                return
        out[name] = None
    scan("L1", (n, n, N), lambda a, b, c: sub(xm(g(a), xm(g(b), m(c))), xm(xy(g(a), g(b)), m(c)), xm(g(b), xm(g(a), m(c)))))
    scan("L2", (N, n, n), lambda c, a, b: sub(mx(m(c), xy(g(a), g(b))), mx(mx(m(c), g(a)), g(b)), xm(g(a), mx(m(c), g(b)))))
    scan("L3", (n, N, n), lambda a, c, b: sub(xm(g(a), mx(m(c), g(b))), mx(xm(g(a), m(c)), g(b)), mx(m(c), xy(g(a), g(b)))))
    scan("anchor-left", (n, N), lambda a, c: sub(ap(anchor, xm(g(a), m(c))), xy(g(a), ap(anchor, m(c)))))
    scan("anchor-right", (N, n), lambda c, a: sub(ap(anchor, mx(m(c), g(a))), xy(ap(anchor, m(c)), g(a))))
    dashv = [[ap_right(right, anchor, i, j) for j in range(N)] for i in range(N)]
    vdash = [[ap_left(left, anchor, i, j) for j in range(N)] for i in range(N)]
    out["dialgebra"] = dialgebra_verdicts(dashv, vdash, [vec(N, i) for i in range(N)])
    return out


def ap_right(right, anchor, i, j):
    # e_i -| e_j = e_i . f(e_j)
    fj = [anchor[k][j] for k in range(len(anchor))]
    return mul(right, vec(len(right), i), fj)


def ap_left(left, anchor, i, j):
    fi = [anchor[k][i] for k in range(len(anchor))]
    return mul(left, fi, vec(len(left[0]), j))


def pmul(a, b, order):
    out = [F(0)] * (order + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= order:
                out[i + j] += x * y
    return out


def crafted_deformation(order=3):
    """zero(2,1) deformed by omega(e1,e1) = e2, theta(m) = e1, mu = nu = 0.

    Structures are tables of polynomials in lambda (coefficient lists).
    Returns the first failing (x, m) tuple of each anchor identity and the
    lambda coefficients of each component of its defect.
    """
    n, m = 2, 1
    zero = [F(0)] * (order + 1)
    lam = [F(0), F(1)] + [F(0)] * (order - 1)
    # product[i][j][k]: lambda * omega
    prod = [[[list(zero) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    prod[0][0][1] = list(lam)
    anchor = [[list(zero) for _ in range(m)] for _ in range(n)]  # anchor[k][j]
    anchor[0][0] = list(lam)

    def padd(a, b):
        return [x + y for x, y in zip(a, b)]

    def f(j):
        return [anchor[k][j] for k in range(n)]

    def xmul(i, vec_):
        # e_i * (polynomial vector)
        out = [list(zero) for _ in range(n)]
        for j in range(n):
            for k in range(n):
                out[k] = padd(out[k], pmul(vec_[j], prod[i][j][k], order))
        return out

    def vmul(vec_, i):
        out = [list(zero) for _ in range(n)]
        for j in range(n):
            for k in range(n):
                out[k] = padd(out[k], pmul(vec_[j], prod[j][i][k], order))
        return out

    out = {}
    # the actions vanish, so f(x.m) = f(m.x) = 0
    for name, res in [
        ("anchor-left", lambda x, j: [[-c for c in p] for p in xmul(x, f(j))]),
        ("anchor-right", lambda x, j: [[-c for c in p] for p in vmul(f(j), x)]),
    ]:
        out[name] = None
        for x in range(n):
            for j in range(m):
                d = res(x, j)
                if any(any(p) for p in d):
                    tup = [x, j] if name == "anchor-left" else [j, x]
                    out[name] = {"tuple": tup, "defect": [[str(c) for c in p] for p in d]}
                    break
            if out[name]:
                break
    return out


def main():
    n = 2
    ident = [vec(n, i) for i in range(n)]
    zero = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    out = {
        "l2-vdash-only": dialgebra_verdicts(zero, l2(), ident),
        "l2-dashv-only": dialgebra_verdicts(l2(), zero, ident),
        "leibniz-a-vdash-only": dialgebra_verdicts(zero, leibniz_a(), ident),
        "leibniz-a-dashv-only": dialgebra_verdicts(leibniz_a(), zero, ident),
        "r2-both": dialgebra_verdicts(r2(), r2(), ident),
        "r2-vdash-leibniz-a-dashv": dialgebra_verdicts(leibniz_a(), r2(), ident),
        "tensor-square-l2": tensor_square_l2_checks(),
        "crafted-deformation": crafted_deformation(),
    }
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
