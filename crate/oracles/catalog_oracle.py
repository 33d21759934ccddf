"""Independent oracle for the catalog expectations.

Works directly with sympy matrices: structure constants come from matrix
commutators solved by Gaussian elimination, the metric is -Killing plus the
identity on the center, and every subspace is a sympy column space. The
semisimple part is taken as the derived algebra [g, g], not via an ideal
decomposition.

Usage: python3 oracles/catalog_oracle.py > crates/core/data/catalog_expected.json
"""

import json
import sys

import sympy as sp


def so(n):
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = sp.zeros(n, n)
            m[i, j] = 1
            m[j, i] = -1
            mats.append(m)
    return mats


def su(n):
    def real(entries):
        m = sp.zeros(2 * n, 2 * n)
        for i, j, z in entries:
            a, b = sp.re(z), sp.im(z)
            m[2 * i, 2 * j] = a
            m[2 * i, 2 * j + 1] = -b
            m[2 * i + 1, 2 * j] = b
            m[2 * i + 1, 2 * j + 1] = a
        return m

    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(real([(i, j, 1), (j, i, -1)]))
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(real([(i, j, sp.I), (j, i, sp.I)]))
    for k in range(n - 1):
        mats.append(real([(k, k, sp.I), (k + 1, k + 1, -sp.I)]))
    return mats


def abelian(d):
    mats = []
    for i in range(d):
        m = sp.zeros(d, d)
        m[i, i] = 1
        mats.append(m)
    return mats


def block_sum(*factors):
    size = sum(f[0].shape[0] for f in factors)
    out = []
    off = 0
    for f in factors:
        s = f[0].shape[0]
        for m in f:
            big = sp.zeros(size, size)
            big[off:off + s, off:off + s] = m
            out.append(big)
        off += s
    return out


def structure(mats):
    d = len(mats)
    flat = sp.Matrix.hstack(*[m.reshape(m.shape[0] ** 2, 1) for m in mats])

    def coords(m):
        sol, params = flat.gauss_jordan_solve(m.reshape(m.shape[0] ** 2, 1))
        assert params.shape[0] == 0
        return sol

    ad = [sp.zeros(d, d) for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c = coords(mats[i] * mats[j] - mats[j] * mats[i])
            ad[i][:, j] = c
    return ad


class Algebra:
    def __init__(self, mats):
        self.d = len(mats)
        self.ad_basis = structure(mats)

    def ad(self, x):
        out = sp.zeros(self.d, self.d)
        for i in range(self.d):
            if x[i] != 0:
                out += x[i] * self.ad_basis[i]
        return out

    def br(self, x, y):
        return self.ad(x) * y

    def killing(self):
        return sp.Matrix(self.d, self.d, lambda i, j: (self.ad_basis[i] * self.ad_basis[j]).trace())


def span(vectors, d):
    if not vectors:
        return []
    m = sp.Matrix.hstack(*vectors)
    return m.columnspace()


def rank(vectors, d):
    return len(span(vectors, d))


def contains(basis, v, d):
    return rank(basis + [v], d) == rank(basis, d)


def analyze(mats, h_vecs, center_coords):
    g = Algebra(mats)
    d = g.d
    e = [sp.eye(d)[:, i] for i in range(d)]
    B = g.killing()
    G = -B
    for c in center_coords:
        G[c, c] += 1
    assert all(ev > 0 for ev in G.eigenvals()), "metric not positive definite"
    for i in range(d):
        a = g.ad_basis[i]
        assert a.T * G + G * a == sp.zeros(d, d), "metric not invariant"

    h = span(h_vecs, d)
    if h:
        m = (sp.Matrix.hstack(*h).T * G).nullspace()
    else:
        m = list(e)
    reductive = all(contains(m, g.br(x, y), d) for x in h for y in m)
    assert reductive

    hm = h + m
    P = sp.Matrix.hstack(*hm).inv()

    def proj_m(v):
        c = P * v
        out = sp.zeros(d, 1)
        for i, y in enumerate(m):
            out += c[len(h) + i] * y
        return out

    nat_red = all(
        (proj_m(g.br(x, y)).T * G * z)[0] + (y.T * G * proj_m(g.br(x, z)))[0] == 0
        for x in m for y in m for z in m
    )

    # m^h: X in m with [h, X] = 0
    if h and m:
        mm = sp.Matrix.hstack(*m)
        A = sp.Matrix.vstack(*[g.ad(y) * mm for y in h])
        m_h = [mm * c for c in A.nullspace()]
    else:
        m_h = list(m)

    tr = span(m + [g.br(x, y) for x in m for y in m], d)

    # invariant-field center: X in m_h with proj_m[X, Y] = 0 for Y in m_h
    if m_h:
        K = sp.Matrix.hstack(*m_h)
        rows = [sp.Matrix.hstack(*[proj_m(g.br(K[:, a], y)) for a in range(len(m_h))]) for y in m_h]
        k_center = len(sp.Matrix.vstack(*rows).nullspace())
    else:
        k_center = 0

    # largest ideal inside h by descending chain
    ideal = list(h)
    while True:
        nxt = []
        if ideal:
            I = sp.Matrix.hstack(*ideal)
            # x = I c with [e_i, x] in span(I) for every i
            if len(ideal) < d:
                ann = (I.T).nullspace()
                A = sp.Matrix.vstack(*[sp.Matrix.hstack(*ann).T * g.ad_basis[i] * I for i in range(d)])
                nxt = [I * c for c in A.nullspace()]
            else:
                nxt = list(ideal)
        if rank(nxt, d) == rank(ideal, d):
            break
        ideal = span(nxt, d)
    effective = rank(ideal, d) == 0

    g1 = rank([g.br(x, y) for x in e for y in e], d)

    out = {
        "dims": {
            "g": d,
            "h": len(h),
            "m": len(m),
            "m_h": len(m_h),
            "k": len(m_h),
            "k_center": k_center,
            "transvection": len(tr),
        },
        "flags": {
            "reductive": reductive,
            "normal": True,
            "naturally_reductive": nat_red,
            "effective": effective,
            "transvection_equals_g": len(tr) == d,
        },
        "torus_dim": k_center,
    }
    if effective:
        out["dims"]["g1"] = g1
        out["dims"]["affine"] = g1 + len(m_h)
    return out


def unit(d, i):
    return sp.eye(d)[:, i]


def corner(n, k):
    d = n * (n - 1) // 2
    out = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if j < k:
                out.append(unit(d, idx))
            idx += 1
    return out


def entries():
    yield "so3_mod_so2", so(3), corner(3, 2), []
    yield "so4_mod_so2", so(4), corner(4, 2), []
    yield "so4_mod_so3", so(4), corner(4, 3), []
    yield "so5_mod_so4", so(5), corner(5, 4), []
    yield "so6_mod_so5", so(6), corner(6, 5), []
    yield "so5_mod_so3", so(5), corner(5, 3), []
    yield "so3_mod_0", so(3), [], []
    yield "so4_mod_0", so(4), [], []
    yield "su2_mod_u1", su(2), [unit(3, 2)], []
    yield "su3_mod_su2", su(3), [unit(8, 0), unit(8, 3), unit(8, 6)], []
    for n in (3, 4):
        d = n * (n - 1) // 2
        diag = [unit(2 * d, i) + unit(2 * d, d + i) for i in range(d)]
        yield f"so{n}so{n}_mod_diag", block_sum(so(n), so(n)), diag, []
    yield "so3so3_mod_second_factor", block_sum(so(3), so(3)), [unit(6, 3 + i) for i in range(3)], []
    yield "so3r_mod_so2", block_sum(so(3), abelian(1)), [unit(4, 0)], [3]
    yield "r2_mod_0", abelian(2), [], [0, 1]


def main():
    report = {}
    for name, mats, h, center in entries():
        print(name, file=sys.stderr)
        report[name] = analyze(mats, h, center)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
