"""Writes the bundled CLI instances and the test fixtures.

Run from the workspace root. Tables are written out densely from the
structure constants below.
"""

import json
import os

INST = "crates/cli/instances"
FIX = "crates/cli/tests/fixtures"


def s(x):
    return str(x)


def mat(rows):
    return [[s(x) for x in r] for r in rows]


def ident(n, c=1):
    return mat([[c if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(r, c):
    return mat([[0] * c for _ in range(r)])


def table(a, b, out, entries):
    t = [[[0] * out for _ in range(b)] for _ in range(a)]
    for (i, j), v in entries.items():
        t[i][j] = list(v)
    return [[[s(x) for x in cell] for cell in row] for row in t]


def adjoint(n, alpha, prod):
    return {
        "field": "Q",
        "g": {"dim": n, "alpha": alpha, "product": table(n, n, n, prod)},
        "M": {"dim": n, "alphaM": alpha, "left": table(n, n, n, prod), "right": table(n, n, n, prod)},
        "f": ident(n),
    }


def zero(n, m):
    return {
        "field": "Q",
        "g": {"dim": n, "alpha": ident(n), "product": table(n, n, n, {})},
        "M": {"dim": m, "alphaM": ident(m), "left": table(n, m, m, {}), "right": table(m, n, m, {})},
        "f": zeros(n, m),
    }


def cochain(n, m, v, w, omega=None, mu=None, nu=None, theta=None):
    return {
        "omega": table(n, n, w, omega or {}),
        "mu": table(n, m, v, mu or {}),
        "nu": table(m, n, v, nu or {}),
        "theta": mat(theta) if theta else zeros(w, m),
    }


def write(d, name, obj):
    with open(os.path.join(d, name), "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


L2 = {(0, 0): (0, 1)}
L2_YAU = {(0, 0): (0, 4)}
R2 = {(0, 1): (0, 1), (1, 0): (0, -1)}
SL2 = {(1, 0): (2, 0, 0), (0, 1): (-2, 0, 0), (1, 2): (0, 0, -2), (2, 1): (0, 0, 2), (0, 2): (0, 1, 0), (2, 0): (0, -1, 0)}


def main():
    write(INST, "zero.json", zero(1, 1))
    write(INST, "zero21.json", zero(2, 1))
    write(INST, "r2adjoint.json", adjoint(2, ident(2), R2))
    write(INST, "l2yau.json", adjoint(2, mat([[2, 0], [0, 4]]), L2_YAU))
    sl2 = adjoint(3, ident(3), SL2)
    sl2["M"] = {"dim": 0, "alphaM": [], "left": [[] for _ in range(3)], "right": []}
    sl2["f"] = [[] for _ in range(3)]
    write(INST, "sl2bare.json", sl2)

    # l2 adjoint with the coboundary of the identity pair, and the pair itself
    l2 = adjoint(2, ident(2), L2)
    l2["cochain"] = cochain(2, 2, 2, 2, omega=L2, mu=L2, nu=L2)
    l2["pair"] = {"n0": ident(2), "n1": ident(2)}
    write(INST, "l2adjoint.json", l2)
    # the same with the adjoint coefficients spelled out
    l2r = adjoint(2, ident(2), L2)
    l2r["rep"] = {
        "V": {"dim": 2, "alpha": ident(2)},
        "W": {"dim": 2, "alpha": ident(2)},
        "phi": ident(2),
        "vLeft": table(2, 2, 2, L2), "vRight": table(2, 2, 2, L2),
        "wLeft": table(2, 2, 2, L2), "wRight": table(2, 2, 2, L2),
        "crossR": table(2, 2, 2, L2), "crossL": table(2, 2, 2, L2),
    }
    write(INST, "l2adjoint-rep.json", l2r)
    write(INST, "id.json", {"n0": ident(2), "n1": ident(2)})
    write(INST, "zero-cochain-l2.json", cochain(2, 2, 2, 2))

    # zero(2,1): a cocycle that is not an object structure
    crafted = zero(2, 1)
    crafted["cochain"] = cochain(2, 1, 1, 2, omega={(0, 0): (0, 1)}, theta=[[1], [0]])
    write(INST, "crafted.json", crafted)
    # zero(1,1): two cocycles in different classes
    z = zero(1, 1)
    z["cochain"] = cochain(1, 1, 1, 1, omega={(0, 0): (1,)})
    write(INST, "zero-omega.json", z)
    write(INST, "zero-cochain-11.json", cochain(1, 1, 1, 1))

    # failing and malformed fixtures
    broken = adjoint(2, ident(2), L2)
    broken["f"] = mat([[0, 1], [0, 0]])
    write(FIX, "broken-anchor.json", broken)
    bad = zero(1, 1)
    bad["f"] = [["1/0"]]
    write(FIX, "bad-rational.json", bad)
    extra = zero(1, 1)
    extra["comment"] = "not allowed"
    write(FIX, "unknown-field.json", extra)
    short = zero(1, 1)
    short["g"]["product"] = [[["0", "0"]]]
    write(FIX, "bad-shape.json", short)


if __name__ == "__main__":
    main()
