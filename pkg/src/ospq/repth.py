"""Finite-dimensional irreducible representations and their coupling.

An irreducible module of the enveloping algebra is labelled by a
non-negative integer highest weight ell and a parity bit lam for the
highest-weight vector; it has dimension 2*ell+1 with weight basis
ordered m = ell, ell-1, ..., -ell, and basis-vector parity
(ell - m + lam) mod 2.  Matrices are dense lists of Scalar rows.

The action on a graded tensor product inserts the usual interchange
sign, (X (x) Y)(v1 (x) v2) = (-1)^(p(Y) p(v1)) X v1 (x) Y v2; every
tensor-product matrix here is built through ``gkron`` so that sign
lives in exactly one place.

Clebsch-Gordan tables are constructed, not transcribed: the coupled
highest-weight vector is solved from Delta(V+), normalized against the
graded inner product, and lowered with Delta(V-).  The overall phase
makes the top coefficient C(l1 l2 l; l1, l-l1, l) positive at q = 1/2.
"""

from fractions import Fraction

from .scalar import (
    ONE,
    ZERO,
    Scalar,
    bracket,
    eval_numeric,
    qh,
    scalar_to_json,
    sqrt_kbracket,
    sqrt_rational,
)
from .ualg import UElement, UTensor, u_E, u_antipode, u_coproduct, u_g, u_mul, u_Vm, u_Vp


# ---------------------------------------------------------------------------
# Dense Scalar matrices.


def mat_zero(n, m=None):
    if m is None:
        m = n
    return [[ZERO for _ in range(m)] for _ in range(n)]


def mat_eye(n):
    out = mat_zero(n)
    for i in range(n):
        out[i][i] = ONE
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = mat_zero(n, m)
    for i in range(n):
        ai, oi = a[i], out[i]
        for t in range(k):
            x = ai[t]
            if x.is_zero():
                continue
            bt = b[t]
            for j in range(m):
                y = bt[j]
                if not y.is_zero():
                    oi[j] = oi[j] + x * y
    return out


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_zero(a):
    return all(x.is_zero() for row in a for x in row)


def kron_plain(a, b):
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = mat_zero(na * nb, ma * mb)
    for i in range(na):
        for j in range(nb):
            row = out[i * nb + j]
            for p in range(ma):
                x = a[i][p]
                if x.is_zero():
                    continue
                for r in range(mb):
                    y = b[j][r]
                    if not y.is_zero():
                        row[p * mb + r] = x * y
    return out


def gkron(a, b, parity_b, par1):
    """Matrix of the graded tensor operator a (x) b, where parity_b is the
    parity of the operator b and par1[column] the parity of the first-leg
    basis vector the column feeds."""
    if not parity_b:
        return kron_plain(a, b)
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = mat_zero(na * nb, ma * mb)
    for i in range(na):
        for j in range(nb):
            row = out[i * nb + j]
            for p in range(ma):
                x = a[i][p]
                if x.is_zero():
                    continue
                if par1[p]:
                    x = -x
                for r in range(mb):
                    y = b[j][r]
                    if not y.is_zero():
                        row[p * mb + r] = x * y
    return out


# ---------------------------------------------------------------------------
# Irreducible representations.

_INV_SQRT2 = None


def _inv_sqrt2():
    global _INV_SQRT2
    if _INV_SQRT2 is None:
        _INV_SQRT2 = sqrt_kbracket(2).inv()
    return _INV_SQRT2


def _a_plus(l, m):
    """Raising matrix element ((1/{2}) {l-m} {l+m+1})^(1/2)."""
    return sqrt_kbracket(l - m) * sqrt_kbracket(l + m + 1) * _inv_sqrt2()


def _a_minus(l, m):
    """Lowering matrix element with its (-1)^(l-m-1) sign."""
    v = sqrt_kbracket(l + m) * sqrt_kbracket(l - m + 1) * _inv_sqrt2()
    return -v if (l - m - 1) % 2 else v


class Irrep:
    def __init__(self, ell, lam):
        if ell < 0 or int(ell) != ell:
            raise ValueError("highest weight must be a non-negative integer")
        if lam not in (0, 1):
            raise ValueError("parity bit must be 0 or 1")
        self.ell = int(ell)
        self.lam = lam
        self.dim = 2 * self.ell + 1
        self.weights = [self.ell - i for i in range(self.dim)]
        self.parities = [(i + lam) % 2 for i in range(self.dim)]
        n = self.dim
        self.matH = mat_zero(n)
        self.matVp = mat_zero(n)
        self.matVm = mat_zero(n)
        for i, m in enumerate(self.weights):
            self.matH[i][i] = Scalar.from_fraction(Fraction(m, 2))
            if i >= 1:
                self.matVp[i - 1][i] = _a_plus(self.ell, m)
            if i + 1 < n:
                self.matVm[i + 1][i] = _a_minus(self.ell, m)
        self._pow = {}

    def parity(self, i):
        return self.parities[i]

    def mat_g(self, j=1):
        out = mat_zero(self.dim)
        for i, m in enumerate(self.weights):
            out[i][i] = qh(j * m)
        return out

    def _power(self, gen, n):
        key = (gen, n)
        out = self._pow.get(key)
        if out is not None:
            return out
        if n == 0:
            out = mat_eye(self.dim)
        else:
            base = {"Vp": self.matVp, "H": self.matH, "Vm": self.matVm}[gen]
            out = mat_mul(self._power(gen, n - 1), base)
        self._pow[key] = out
        return out

    def __repr__(self):
        return "Irrep(ell=%d, lam=%d)" % (self.ell, self.lam)


def irrep(ell, lam=0):
    return Irrep(ell, lam)


def rep_apply(u, rho):
    """Evaluate a UElement in the representation; returns a Scalar matrix."""
    out = mat_zero(rho.dim)
    for (a, b, j, d), c in u.terms.items():
        m = rho._power("Vp", a)
        if b:
            m = mat_mul(m, rho._power("H", b))
        if j:
            m = mat_mul(m, rho.mat_g(j))
        if d:
            m = mat_mul(m, rho._power("Vm", d))
        out = mat_add(out, mat_scale(m, c))
    return out


def rep_tensor_apply(ut, rho1, rho2):
    """Evaluate a UTensor on the graded tensor product of two irreps."""
    dim = rho1.dim * rho2.dim
    out = mat_zero(dim)
    for (m1, m2), c in ut.terms.items():
        a = rep_apply(UElement({m1: ONE}), rho1)
        b = rep_apply(UElement({m2: ONE}), rho2)
        pb = (m2[0] + m2[3]) % 2
        out = mat_add(out, mat_scale(gkron(a, b, pb, rho1.parities), c))
    return out


def flip_tensor(ut):
    """Graded flip sigma(u (x) v) = (-1)^(p(u)p(v)) v (x) u, termwise."""
    out = {}
    for (m1, m2), c in ut.terms.items():
        p1 = (m1[0] + m1[3]) % 2
        p2 = (m2[0] + m2[3]) % 2
        s = -c if (p1 and p2) else c
        key = (m2, m1)
        prev = out.get(key)
        if prev is not None:
            s = prev + s
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s
    return UTensor(out)


# ---------------------------------------------------------------------------
# Clebsch-Gordan tables.


class CgcTable:
    """Coupling coefficients C(l1 l2 l; m1 m2 m) for one (l1, l2, l, lam)."""

    def __init__(self, l1, l2, l, lam, table):
        self.l1 = l1
        self.l2 = l2
        self.l = l
        self.lam = lam
        self.Lam = (l1 + l2 + l) % 2
        self.table = table

    def get(self, m1, m2, m):
        return self.table.get((m1, m2, m), ZERO)

    def __repr__(self):
        return "CgcTable(l1=%d, l2=%d, l=%d, lam=%d, %d entries)" % (
            self.l1,
            self.l2,
            self.l,
            self.lam,
            len(self.table),
        )


_cgc_cache = {}


def cgc(l1, l2, l, lam=0):
    if not abs(l1 - l2) <= l <= l1 + l2:
        raise ValueError("highest weights violate the triangle condition")
    hit = _cgc_cache.get((l1, l2, l, lam))
    if hit is not None:
        return hit

    # coefficients of the coupled highest-weight vector, annihilated by
    # Delta(V+) = V+ (x) q^-H + q^H (x) V+
    m1_lo = max(-l1, l - l2)
    c = {m1_lo: ONE}
    for m1 in range(m1_lo, l1):
        m2 = l - m1
        val = c[m1] * _a_plus(l1, m1) * qh(-m2) * qh(-(m1 + 1)) * _a_plus(l2, m2 - 1).inv()
        if (l1 - m1 - 1 + lam) % 2 == 0:
            val = -val
        c[m1 + 1] = val

    # normalize against the graded inner product and fix the phase
    norm = Scalar.zero()
    for m1, v in c.items():
        m2 = l - m1
        t = v * v
        if ((l1 - m1 + lam) * (l2 - m2 + lam)) % 2:
            t = -t
        norm = norm + t
    target_neg = (lam * (l1 + l2 + l + lam)) % 2
    scale_sq = norm.inv()
    if target_neg:
        scale_sq = -scale_sq
    scale = sqrt_rational(scale_sq)
    if float(eval_numeric(scale * c[l1], Fraction(1, 2))) < 0:
        scale = -scale

    table = {}
    vec = {}
    for m1, v in c.items():
        coeff = scale * v
        vec[(m1, l - m1)] = coeff
        table[(m1, l - m1, l)] = coeff

    # lower with Delta(V-) = V- (x) q^-H + q^H (x) V-
    for m in range(l, -l, -1):
        nxt = {}
        for (m1, m2), v in vec.items():
            if m1 > -l1:
                w = v * _a_minus(l1, m1) * qh(-m2)
                key = (m1 - 1, m2)
                nxt[key] = nxt.get(key, ZERO) + w
            if m2 > -l2:
                w = v * qh(m1) * _a_minus(l2, m2)
                if (l1 - m1 + lam) % 2:
                    w = -w
                key = (m1, m2 - 1)
                nxt[key] = nxt.get(key, ZERO) + w
        inv = _a_minus(l, m).inv()
        vec = {}
        for key, v in nxt.items():
            w = v * inv
            if not w.is_zero():
                vec[key] = w
                table[key + (m - 1,)] = w
    out = CgcTable(l1, l2, l, lam, table)
    _cgc_cache[(l1, l2, l, lam)] = out
    return out


def cgc_to_json(tab):
    entries = [
        {"m1": m1, "m2": m2, "m": m, "value": scalar_to_json(v)}
        for (m1, m2, m), v in sorted(tab.table.items())
    ]
    return {
        "l1": tab.l1,
        "l2": tab.l2,
        "l": tab.l,
        "lambda": tab.lam,
        "Lambda": tab.Lam,
        "entries": entries,
    }


# ---------------------------------------------------------------------------
# The R-matrix on a tensor product of irreps.


def _r_coeff(k):
    v = (qh(2) - qh(-2)) ** k * qh(-k) * bracket("super_inv_fact", k).inv()
    return v


def _cartan_diag(rho1, rho2, sign=1):
    dim = rho1.dim * rho2.dim
    out = mat_zero(dim)
    for i, m1 in enumerate(rho1.weights):
        for j, m2 in enumerate(rho2.weights):
            out[i * rho2.dim + j][i * rho2.dim + j] = qh(sign * 2 * m1 * m2)
    return out


def r_matrix(l1, l2):
    """Tensor-product R-matrix: q^(4 H(x)H) sum_k c_k (q^H V+ (x) q^-H V-)^k
    with c_k = (q - q^-1)^k q^(-k/2) / [[k]]_{q^-1}!."""
    rho1, rho2 = irrep(l1, 0), irrep(l2, 0)
    raise_m = rep_apply(u_mul(u_g(), u_Vp()), rho1)
    lower_m = rep_apply(u_mul(u_g(-1), u_Vm()), rho2)
    step = gkron(raise_m, lower_m, 1, rho1.parities)
    dim = rho1.dim * rho2.dim
    acc = mat_eye(dim)
    total = mat_eye(dim)
    for k in range(1, min(2 * l1, 2 * l2) + 1):
        acc = mat_mul(acc, step)
        total = mat_add(total, mat_scale(acc, _r_coeff(k)))
    return mat_mul(_cartan_diag(rho1, rho2), total)


def r_matrix_inverse(l1, l2):
    """Inverse R-matrix, built by applying the antipode to the second
    tensor leg of each term and flipping q^(4 H(x)H) to q^(-4 H(x)H)."""
    rho1, rho2 = irrep(l1, 0), irrep(l2, 0)
    dim = rho1.dim * rho2.dim
    dinv = _cartan_diag(rho1, rho2, sign=-1)
    raise_el = u_mul(u_g(), u_Vp())
    lower_el = u_mul(u_g(-1), u_Vm())
    eye1, eye2 = mat_eye(rho1.dim), mat_eye(rho2.dim)
    out = mat_zero(dim)
    for k in range(min(2 * l1, 2 * l2) + 1):
        coeff = _r_coeff(k)
        # (y (x) w)^k = (-1)^(k(k-1)/2) y^k (x) w^k, then the odd antipode
        # leg hops over the odd raising leg: another (-1)^k.
        if (k * (k - 1) // 2 + k) % 2:
            coeff = -coeff
        left = gkron(eye1, rep_apply(u_antipode(lower_el**k), rho2), k % 2, rho1.parities)
        right = kron_plain(rep_apply(raise_el**k, rho1), eye2)
        out = mat_add(out, mat_scale(mat_mul(mat_mul(left, dinv), right), coeff))
    return out


def r_matrix_to_json(l1, l2):
    m = r_matrix(l1, l2)
    rho1, rho2 = irrep(l1, 0), irrep(l2, 0)
    labels = [
        {"m1": m1, "m2": m2} for m1 in rho1.weights for m2 in rho2.weights
    ]
    return {
        "l1": l1,
        "l2": l2,
        "basis": labels,
        "entries": [
            {"row": i, "col": j, "value": scalar_to_json(v)}
            for i, row in enumerate(m)
            for j, v in enumerate(row)
            if not v.is_zero()
        ],
    }


def _embed_13(r2, rho1, rho2, rho3):
    d1, d2, d3 = rho1.dim, rho2.dim, rho3.dim
    out = mat_zero(d1 * d2 * d3)
    for i in range(d1):
        for a in range(d1):
            for k in range(d3):
                for cc in range(d3):
                    v = r2[i * d3 + k][a * d3 + cc]
                    if v.is_zero():
                        continue
                    py = (rho3.parities[k] + rho3.parities[cc]) % 2
                    for j in range(d2):
                        w = v
                        if py and rho2.parities[j]:
                            w = -w
                        out[(i * d2 + j) * d3 + k][(a * d2 + j) * d3 + cc] = w
    return out


# ---------------------------------------------------------------------------
# Verification suites.


def _report(suite, case, ok, lhs="", rhs=""):
    return {
        "suite": suite,
        "case": case,
        "status": "pass" if ok else "fail",
        "lhs": lhs,
        "rhs": rhs,
    }


def _verify_relations(l_max):
    reports = []
    half = Scalar.from_fraction(Fraction(1, 2))
    for l in range(l_max + 1):
        for lam in (0, 1):
            rho = irrep(l, lam)
            h, vp, vm = rho.matH, rho.matVp, rho.matVm
            ok = mat_eq(mat_sub(mat_mul(h, vp), mat_mul(vp, h)), mat_scale(vp, half))
            reports.append(_report("relations", "[H,V+] = V+/2 (l=%d,lam=%d)" % (l, lam), ok))
            ok = mat_eq(mat_sub(mat_mul(h, vm), mat_mul(vm, h)), mat_scale(vm, -half))
            reports.append(_report("relations", "[H,V-] = -V-/2 (l=%d,lam=%d)" % (l, lam), ok))
            anti = mat_add(mat_mul(vp, vm), mat_mul(vm, vp))
            super_2h = mat_scale(
                mat_sub(rho.mat_g(2), rho.mat_g(-2)), (qh(2) - qh(-2)).inv()
            )
            ok = mat_is_zero(mat_add(anti, super_2h))
            reports.append(
                _report("relations", "{V+,V-} = -[2H] (l=%d,lam=%d)" % (l, lam), ok)
            )
            ok = mat_eq(
                mat_mul(rho.mat_g(), vp), mat_scale(mat_mul(vp, rho.mat_g()), qh(1))
            )
            reports.append(
                _report("relations", "g V+ = q^(1/2) V+ g (l=%d,lam=%d)" % (l, lam), ok)
            )
            # the evaluation map respects the normal-ordered product
            for name, x, y in (
                ("V-.V+", u_Vm(), u_Vp()),
                ("g.V+", u_g(), u_Vp()),
                ("V-.g", u_Vm(), u_g()),
                ("H.V+", u_E(0, 1, 0), u_Vp()),
                ("V-.H", u_Vm(), u_E(0, 1, 0)),
            ):
                ok = mat_eq(
                    rep_apply(u_mul(x, y), rho),
                    mat_mul(rep_apply(x, rho), rep_apply(y, rho)),
                )
                reports.append(
                    _report(
                        "relations",
                        "evaluation hom on %s (l=%d,lam=%d)" % (name, l, lam),
                        ok,
                    )
                )
    return reports


def _triangle(l1, l2):
    return range(abs(l1 - l2), l1 + l2 + 1)


def _verify_cgc_ortho(l_max):
    reports = []
    for l1 in range(l_max + 1):
        for l2 in range(l_max + 1):
            for lam in (0, 1):
                tabs = {l: cgc(l1, l2, l, lam) for l in _triangle(l1, l2)}
                ok1 = True
                for l in tabs:
                    for lp in tabs:
                        for m in range(-l, l + 1):
                            for mp in range(-lp, lp + 1):
                                s = Scalar.zero()
                                for m1 in range(-l1, l1 + 1):
                                    v1 = tabs[l].get(m1, m - m1, m)
                                    v2 = tabs[lp].get(m1, m - m1, mp)
                                    if v1.is_zero() or v2.is_zero():
                                        continue
                                    t = v1 * v2
                                    if ((l1 - m1 + lam) * (l2 - (m - m1) + lam)) % 2:
                                        t = -t
                                    s = s + t
                                if l == lp and m == mp:
                                    want = ONE
                                    if ((l - m + lam) * (l1 + l2 + l + lam)) % 2:
                                        want = -ONE
                                else:
                                    want = ZERO
                                if s != want:
                                    ok1 = False
                reports.append(
                    _report(
                        "cgc_ortho",
                        "first pseudo-orthogonality (l1=%d,l2=%d,lam=%d)" % (l1, l2, lam),
                        ok1,
                    )
                )
                ok2 = True
                for m1 in range(-l1, l1 + 1):
                    for m2 in range(-l2, l2 + 1):
                        for m1p in range(-l1, l1 + 1):
                            for m2p in range(-l2, l2 + 1):
                                if m1 + m2 != m1p + m2p:
                                    continue
                                m = m1 + m2
                                s = Scalar.zero()
                                for l in tabs:
                                    v1 = tabs[l].get(m1, m2, m)
                                    v2 = tabs[l].get(m1p, m2p, m)
                                    if v1.is_zero() or v2.is_zero():
                                        continue
                                    t = v1 * v2
                                    if ((l - m + lam) * (l1 + l2 + l + lam)) % 2:
                                        t = -t
                                    s = s + t
                                if (m1, m2) == (m1p, m2p):
                                    want = ONE
                                    if ((l1 - m1 + lam) * (l2 - m2 + lam)) % 2:
                                        want = -ONE
                                else:
                                    want = ZERO
                                if s != want:
                                    ok2 = False
                reports.append(
                    _report(
                        "cgc_ortho",
                        "second pseudo-orthogonality (l1=%d,l2=%d,lam=%d)" % (l1, l2, lam),
                        ok2,
                    )
                )
    return reports


def _verify_cgc_reverse(l_max):
    reports = []
    for l1 in range(l_max + 1):
        for l2 in range(l_max + 1):
            for lam in (0, 1):
                tabs = {l: cgc(l1, l2, l, lam) for l in _triangle(l1, l2)}
                ok = True
                for m1 in range(-l1, l1 + 1):
                    for m2 in range(-l2, l2 + 1):
                        m = m1 + m2
                        outer = ((l1 - m1) * (l2 - m2)) % 2
                        for m1p in range(-l1, l1 + 1):
                            m2p = m - m1p
                            if abs(m2p) > l2:
                                continue
                            s = Scalar.zero()
                            for l in tabs:
                                v1 = tabs[l].get(m1, m2, m)
                                v2 = tabs[l].get(m1p, m2p, m)
                                if v1.is_zero() or v2.is_zero():
                                    continue
                                t = v1 * v2
                                if (outer + (l - m) * (l1 + l2 + l)) % 2:
                                    t = -t
                                s = s + t
                            want = ONE if m1p == m1 else ZERO
                            if s != want:
                                ok = False
                reports.append(
                    _report(
                        "cgc_reverse",
                        "round trip (l1=%d,l2=%d,lam=%d)" % (l1, l2, lam),
                        ok,
                    )
                )
    return reports


def _verify_ybe(bounds):
    l1, l2, l3 = bounds
    reports = []
    rho1, rho2, rho3 = irrep(l1, 0), irrep(l2, 0), irrep(l3, 0)
    r12 = kron_plain(r_matrix(l1, l2), mat_eye(rho3.dim))
    r23 = kron_plain(mat_eye(rho1.dim), r_matrix(l2, l3))
    r13 = _embed_13(r_matrix(l1, l3), rho1, rho2, rho3)
    lhs = mat_mul(mat_mul(r12, r13), r23)
    rhs = mat_mul(mat_mul(r23, r13), r12)
    reports.append(
        _report(
            "ybe",
            "R12 R13 R23 = R23 R13 R12 (%d,%d,%d)" % (l1, l2, l3),
            mat_eq(lhs, rhs),
        )
    )
    return reports


def _verify_intertwine(bounds):
    l1, l2 = bounds
    reports = []
    rho1, rho2 = irrep(l1, 0), irrep(l2, 0)
    r = r_matrix(l1, l2)
    for name, u in (("H", u_E(0, 1, 0)), ("V+", u_Vp()), ("V-", u_Vm()), ("g", u_g())):
        cop = u_coproduct(u)
        lhs = mat_mul(rep_tensor_apply(cop, rho1, rho2), r)
        rhs = mat_mul(r, rep_tensor_apply(flip_tensor(cop), rho1, rho2))
        reports.append(
            _report(
                "intertwine",
                "Delta(%s) R = R Delta'(%s) (%d,%d)" % (name, name, l1, l2),
                mat_eq(lhs, rhs),
            )
        )
    x = r_matrix_inverse(l1, l2)
    eye = mat_eye(rho1.dim * rho2.dim)
    ok = mat_eq(mat_mul(x, r), eye) and mat_eq(mat_mul(r, x), eye)
    reports.append(
        _report("intertwine", "(id (x) S)R = R^-1 (%d,%d)" % (l1, l2), ok)
    )
    return reports


def verify_rep_identity(name, bounds=None):
    """Run one verification suite; returns a list of report dicts."""
    if name == "relations":
        return _verify_relations(bounds if bounds is not None else 3)
    if name == "cgc_ortho":
        return _verify_cgc_ortho(bounds if bounds is not None else 2)
    if name == "cgc_reverse":
        return _verify_cgc_reverse(bounds if bounds is not None else 2)
    if name == "ybe":
        return _verify_ybe(bounds or (1, 1, 1))
    if name == "intertwine":
        return _verify_intertwine(bounds or (1, 1))
    raise ValueError("unknown suite: %r" % (name,))
