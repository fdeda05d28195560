"""Brute-force reference computations for the golden files.

Written independently of the Rust crate: structures are nested lists of
Fractions, every map is evaluated by explicit index sums, and ranks come
from a plain fraction Gaussian elimination. Run with `python3 oracle.py`;
it prints JSON that is stored under crates/core/tests/golden/.
"""

import itertools
import json
from fractions import Fraction as F


def zeros(*shape):
    if len(shape) == 1:
        return [F(0)] * shape[0]
    return [zeros(*shape[1:]) for _ in range(shape[0])]


def ident(n):
    return [[F(int(i == j)) for j in range(n)] for i in range(n)]


def lin(mat, v):
    # mat[row][col], column j is the image of e_j
    return [sum((mat[r][c] * v[c] for c in range(len(v))), F(0)) for r in range(len(mat))]


def bil(t, u, v, out):
    # t[i][j] is the image of (e_i, e_j)
    res = [F(0)] * out
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            if b == 0:
                continue
            for k, c in enumerate(t[i][j]):
                res[k] += a * b * c
    return res


def add(*vs):
    return [sum(c, F(0)) for c in zip(*vs)]


def neg(v):
    return [-c for c in v]


def e(n, i):
    v = [F(0)] * n
    v[i] = F(1)
    return v


def rank(rows):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][c]
        rows[rk] = [x / p for x in rows[rk]]
        for r in range(len(rows)):
            if r != rk and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def nullspace(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    rk = 0
    for c in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][c]
        rows[rk] = [x / p for x in rows[rk]]
        for r in range(len(rows)):
            if r != rk and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        pivots.append(c)
        rk += 1
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        v = [F(0)] * ncols
        v[fc] = F(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def transpose(cols):
    return [list(r) for r in zip(*cols)] if cols else []


class Obj:
    """n, m, alpha, alphaM, prod[i][j], left[i][a], right[a][i], f (n x m)."""

    def __init__(self, n, m, alpha, alpham, prod, left, right, f):
        self.n, self.m = n, m
        self.alpha, self.alpham = alpha, alpham
        self.prod, self.left, self.right, self.f = prod, left, right, f


class Rep:
    def __init__(self, v, w, alv, alw, vl, vr, wl, wr, phi, cr, cl):
        self.v, self.w = v, w
        self.alv, self.alw = alv, alw
        self.vl, self.vr, self.wl, self.wr = vl, vr, wl, wr
        self.phi, self.cr, self.cl = phi, cr, cl


def adjoint_rep(o):
    return Rep(o.m, o.n, o.alpham, o.alpha, o.left, o.right, o.prod, o.prod, o.f, o.left, o.right)


def algebra(n, products):
    prod = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), v in products.items():
        prod[i][j] = [F(c) for c in v]
    return prod


def yau(prod, endo):
    n = len(prod)
    return [[lin(endo, prod[i][j]) for j in range(n)] for i in range(n)]


def adjoint_obj(prod, alpha):
    n = len(prod)
    return Obj(n, n, alpha, alpha, prod, prod, prod, ident(n))


def zero_obj(n, m):
    return Obj(n, m, ident(n), ident(m), zeros(n, n, n), zeros(n, m, m), zeros(m, n, m), zeros(n, m))


# cochain layout: C1 = [n0 (g->W), n1 (M->V)]
# C2 = [omega (g,g->W), nu (M,g->V), mu (g,M->V), theta (M->W)]
# C3 = [xyz->W, mxy->V, xmy->V, xym->V, mx->W, xm->W]
# flat: row-major over arguments, target coordinate last


def shapes(k, o, r):
    n, m, v, w = o.n, o.m, r.v, r.w
    return {
        1: [([n], w), ([m], v)],
        2: [([n, n], w), ([m, n], v), ([n, m], v), ([m], w)],
        3: [([n, n, n], w), ([m, n, n], v), ([n, m, n], v), ([n, n, m], v), ([m, n], w), ([n, m], w)],
    }[k]


def unflatten(vec, shp):
    out = []
    at = 0
    for dims, od in shp:
        table = {}
        for t in itertools.product(*[range(d) for d in dims]):
            table[t] = vec[at:at + od]
            at += od
        out.append((dims, od, table))
    return out


def flatten(pieces):
    out = []
    for dims, od, table in pieces:
        for t in itertools.product(*[range(d) for d in dims]):
            out.extend(table[t])
    return out


def multi(piece, *args):
    dims, od, table = piece
    res = [F(0)] * od
    supports = [[(i, c) for i, c in enumerate(a) if c != 0] for a in args]
    for combo in itertools.product(*supports):
        coeff = F(1)
        for _, c in combo:
            coeff *= c
        val = table[tuple(i for i, _ in combo)]
        for k in range(od):
            res[k] += coeff * val[k]
    return res


def d1(o, r, vec):
    n0, n1 = unflatten(vec, shapes(1, o, r))
    N0 = lambda x: multi(n0, x)
    N1 = lambda u: multi(n1, u)
    n, m = o.n, o.m
    mul = lambda x, y: bil(o.prod, x, y, n)
    xm = lambda x, u: bil(o.left, x, u, m)
    mx = lambda u, x: bil(o.right, u, x, m)
    om, nu, mu, th = {}, {}, {}, {}
    for i, j in itertools.product(range(n), repeat=2):
        x, y = e(n, i), e(n, j)
        om[(i, j)] = add(bil(r.wr, N0(x), y, r.w), bil(r.wl, x, N0(y), r.w), neg(N0(mul(x, y))))
    for a, i in itertools.product(range(m), range(n)):
        u, x = e(m, a), e(n, i)
        nu[(a, i)] = add(bil(r.vr, N1(u), x, r.v), bil(r.cl, u, N0(x), r.v), neg(N1(mx(u, x))))
    for i, a in itertools.product(range(n), range(m)):
        x, u = e(n, i), e(m, a)
        mu[(i, a)] = add(bil(r.cr, N0(x), u, r.v), bil(r.vl, x, N1(u), r.v), neg(N1(xm(x, u))))
    for a in range(m):
        u = e(m, a)
        th[(a,)] = add(lin(r.phi, N1(u)), neg(N0(lin(o.f, u))))
    shp = shapes(2, o, r)
    return flatten([(shp[0][0], shp[0][1], om), (shp[1][0], shp[1][1], nu), (shp[2][0], shp[2][1], mu), (shp[3][0], shp[3][1], th)])


def d2(o, r, vec):
    pom, pnu, pmu, pth = unflatten(vec, shapes(2, o, r))
    n, m, V, W = o.n, o.m, r.v, r.w
    om = lambda x, y: multi(pom, x, y)
    nu = lambda u, x: multi(pnu, u, x)
    mu = lambda x, u: multi(pmu, x, u)
    th = lambda u: multi(pth, u)
    al = lambda x: lin(o.alpha, x)
    alm = lambda u: lin(o.alpham, u)
    mul = lambda x, y: bil(o.prod, x, y, n)
    xm = lambda x, u: bil(o.left, x, u, m)
    mx = lambda u, x: bil(o.right, u, x, m)
    xv = lambda x, v: bil(r.vl, x, v, V)
    vx = lambda v, x: bil(r.vr, v, x, V)
    xw = lambda x, w: bil(r.wl, x, w, W)
    wx = lambda w, x: bil(r.wr, w, x, W)
    tr = lambda w, u: bil(r.cr, w, u, V)
    tl = lambda u, w: bil(r.cl, u, w, V)
    f = lambda u: lin(o.f, u)
    phi = lambda v: lin(r.phi, v)
    g = lambda i: e(n, i)
    mm = lambda a: e(m, a)
    out = {k: {} for k in range(6)}
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = g(i), g(j), g(k)
        out[0][(i, j, k)] = add(xw(al(x), om(y, z)), om(al(x), mul(y, z)), neg(om(mul(x, y), al(z))),
                                neg(wx(om(x, y), al(z))), neg(xw(al(y), om(x, z))), neg(om(al(y), mul(x, z))))
    for a, i, j in itertools.product(range(m), range(n), range(n)):
        u, x, y = mm(a), g(i), g(j)
        out[1][(a, i, j)] = add(tl(alm(u), om(x, y)), nu(alm(u), mul(x, y)), neg(vx(nu(u, x), al(y))),
                                neg(nu(mx(u, x), al(y))), neg(xv(al(x), nu(u, y))), neg(mu(al(x), mx(u, y))))
    for i, a, j in itertools.product(range(n), range(m), range(n)):
        x, u, y = g(i), mm(a), g(j)
        out[2][(i, a, j)] = add(xv(al(x), nu(u, y)), mu(al(x), mx(u, y)), neg(nu(xm(x, u), al(y))),
                                neg(vx(mu(x, u), al(y))), neg(tl(alm(u), om(x, y))), neg(nu(alm(u), mul(x, y))))
    for i, j, a in itertools.product(range(n), range(n), range(m)):
        x, y, u = g(i), g(j), mm(a)
        out[3][(i, j, a)] = add(xv(al(x), mu(y, u)), mu(al(x), xm(y, u)), neg(tr(om(x, y), alm(u))),
                                neg(mu(mul(x, y), alm(u))), neg(xv(al(y), mu(x, u))), neg(mu(al(y), xm(x, u))))
    for a, i in itertools.product(range(m), range(n)):
        u, x = mm(a), g(i)
        out[4][(a, i)] = add(th(mx(u, x)), phi(nu(u, x)), neg(om(f(u), x)), neg(wx(th(u), x)))
    for i, a in itertools.product(range(n), range(m)):
        x, u = g(i), mm(a)
        out[5][(i, a)] = add(th(xm(x, u)), phi(mu(x, u)), neg(om(x, f(u))), neg(xw(x, th(u))))
    shp = shapes(3, o, r)
    return flatten([(shp[k][0], shp[k][1], out[k]) for k in range(6)])


def compat_basis(k, o, r):
    """Basis of cochains commuting with the twists, as flat vectors."""
    shp = shapes(k, o, r)
    slot_twist = {o.n: None}
    piece_twists = {
        1: [([o.alpha], r.alw), ([o.alpham], r.alv)],
        2: [([o.alpha, o.alpha], r.alw), ([o.alpham, o.alpha], r.alv), ([o.alpha, o.alpham], r.alv), ([o.alpham], r.alw)],
        3: [([o.alpha] * 3, r.alw), ([o.alpham, o.alpha, o.alpha], r.alv), ([o.alpha, o.alpham, o.alpha], r.alv),
            ([o.alpha, o.alpha, o.alpham], r.alv), ([o.alpham, o.alpha], r.alw), ([o.alpha, o.alpham], r.alw)],
    }[k]
    total = sum(len(list(itertools.product(*[range(d) for d in dims]))) * od for dims, od in shp)
    gens = []
    at = 0
    for (dims, od), (srcs, tgt) in zip(shp, piece_twists):
        size = len(list(itertools.product(*[range(d) for d in dims]))) * od
        cols = []
        for b in range(size):
            vec = [F(0)] * size
            vec[b] = F(1)
            (piece,) = unflatten(vec, [(dims, od)])
            img = {}
            for t in itertools.product(*[range(d) for d in dims]):
                args = [[row[t[p]] for row in srcs[p]] for p in range(len(dims))]
                img[t] = add(lin(tgt, piece[2][t]), neg(multi(piece, *args)))
            cols.append(flatten([(dims, od, img)]))
        for v in nullspace(transpose(cols), size):
            full = [F(0)] * total
            full[at:at + size] = v
            gens.append(full)
        at += size
    return gens


def analyse(o, r):
    res = {}
    dim = {k: sum(len(list(itertools.product(*[range(d) for d in dims]))) * od for dims, od in shapes(k, o, r)) for k in (1, 2, 3)}
    res["rawDims"] = [dim[1], dim[2], dim[3]]
    D1 = [d1(o, r, e(dim[1], i)) for i in range(dim[1])]
    D2 = [d2(o, r, e(dim[2], i)) for i in range(dim[2])]
    res["rawRanks"] = [rank(D1), rank(D2)]
    # D2 D1 on raw basis
    res["rawD2D1Zero"] = all(all(c == 0 for c in d2(o, r, col)) for col in D1)
    B1 = compat_basis(1, o, r)
    B2 = compat_basis(2, o, r)
    res["compatDims"] = [len(B1), len(B2), len(compat_basis(3, o, r))]
    img1 = [d1(o, r, b) for b in B1]
    img2 = [d2(o, r, b) for b in B2]
    res["compatD2D1Zero"] = all(all(c == 0 for c in d2(o, r, col)) for col in img1)
    b2 = rank(img1)
    z2 = len(B2) - rank(img2)
    res["H2compat"] = [z2, b2, z2 - b2]
    z1 = len(B1) - rank(img1)
    res["H1compat"] = [z1, 0, z1]
    rz2 = dim[2] - rank(D2)
    rb2 = rank(D1)
    res["H2raw"] = [rz2, rb2, rz2 - rb2]
    return res


def main():
    l2 = algebra(2, {(0, 0): [0, 1]})
    r2 = algebra(2, {(0, 1): [0, 1], (1, 0): [0, -1]})
    la = algebra(2, {(1, 0): [1, 0]})
    sl2 = algebra(3, {(1, 0): [2, 0, 0], (0, 1): [-2, 0, 0], (1, 2): [0, 0, -2], (2, 1): [0, 0, 2], (0, 2): [0, 1, 0], (2, 0): [0, -1, 0]})
    d24 = [[F(2), F(0)], [F(0), F(4)]]
    cases = {
        "zero(1,1)": zero_obj(1, 1),
        "zero(2,1)": zero_obj(2, 1),
        "l2-adjoint": adjoint_obj(l2, ident(2)),
        "l2-yau-adjoint": adjoint_obj(yau(l2, d24), d24),
        "r2-adjoint": adjoint_obj(r2, ident(2)),
        "leibniz-a-adjoint": adjoint_obj(la, ident(2)),
        "sl2-bare": Obj(3, 0, ident(3), [], sl2, [[[] for _ in range(0)] for _ in range(3)], [], [[] for _ in range(3)]),
        "sl2-adjoint": adjoint_obj(sl2, ident(3)),
    }
    out = {name: analyse(o, adjoint_rep(o)) for name, o in cases.items()}
    print(json.dumps(out, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
