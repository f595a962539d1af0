"""Seminormal matrix models on updown-tableau bases, with verification suites.

The coefficient layer is exact: diagonal contraction coefficients, swap
coefficients and squared off-diagonal entries are all Fractions.  Square
roots enter only when the concrete symmetric matrices are assembled, so the
matrices live at a chosen binary working precision (mpmath), while every
polynomial identity between the coefficients themselves is checked with
zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import mpmath

from . import _linalg, combinat, params
from .params import ParamSet

# ---------------------------------------------------------------------------
# exact coefficient tables
# ---------------------------------------------------------------------------


def _prev(t, k: int):
    """Shape after step k-1 (the empty multipartition when k = 1)."""
    return t[k - 2] if k >= 2 else combinat.empty_mp(len(t[0]))


def returns_at(t, k: int) -> bool:
    """Steps k, k+1 of t leave and re-enter the same shape."""
    return 1 <= k < len(t) and _prev(t, k) == t[k]


def e_diag(t, k: int, ps: ParamSet) -> Fraction:
    """Diagonal coefficient of the contraction generator at position k,
    defined when steps k, k+1 return: (2c - (-1)^r) times the product of
    (c + c(alpha))/(c - c(alpha)) over the other boundary nodes."""
    assert returns_at(t, k)
    c = combinat.content_sequence(t, ps.u)[k - 1]
    sign = -1 if ps.r % 2 else 1
    out = Fraction(2 * c - sign)
    for _, ca, _ in combinat.addable_removable(_prev(t, k), ps.u):
        if ca != c:
            out *= (c + ca) / (c - ca)
    return out


def swap_a(t, k: int, ps: ParamSet) -> Fraction:
    """Diagonal swap coefficient 1/(c_t(k+1) - c_t(k)) at a non-returning k."""
    cs = combinat.content_sequence(t, ps.u)
    d = cs[k] - cs[k - 1]
    if d == 0:
        raise ValueError(f"equal adjacent contents at k={k}: "
                         "parameters not generic")
    return 1 / d


def swap_b_squared(t, k: int, ps: ParamSet) -> Fraction:
    return 1 - swap_a(t, k, ps) ** 2


# ---------------------------------------------------------------------------
# matrix backends: exact Fractions vs mpmath at working precision
# ---------------------------------------------------------------------------


def _mpf(x) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


class _ExactOps:
    @staticmethod
    def mul(a, b):
        return _linalg.mat_mul(a, b)

    @staticmethod
    def add(a, b):
        return _linalg.mat_add(a, b)

    @staticmethod
    def sub(a, b):
        return _linalg.mat_sub(a, b)

    @staticmethod
    def eye(d):
        return _linalg.identity(d)

    @staticmethod
    def scale(c, a):
        return _linalg.mat_scale(a, c)

    @staticmethod
    def dim(a):
        return len(a)

    @staticmethod
    def maxabs(a):
        return max((abs(x) for row in a for x in row), default=Fraction(0))


class _FloatOps:
    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def eye(d):
        return mpmath.eye(d)

    @staticmethod
    def scale(c, a):
        return _mpf(c) * a

    @staticmethod
    def dim(a):
        return a.rows

    @staticmethod
    def maxabs(a):
        out = mpmath.mpf(0)
        for i in range(a.rows):
            for j in range(a.cols):
                v = abs(a[i, j])
                if v > out:
                    out = v
        return out


# ---------------------------------------------------------------------------
# the seminormal representation
# ---------------------------------------------------------------------------


@dataclass
class SeminormalRep:
    """Generator matrices over the updown basis of one shape.

    S[i-1], E[i-1] act at position i (1 <= i < n); X[j-1] is diagonal with
    the step-j contents.  All matrices are mpmath matrices created at
    ``ps.precision_bits`` bits.
    """

    ps: ParamSet
    n: int
    shape: tuple
    basis: tuple
    S: list = field(repr=False)
    E: list = field(repr=False)
    X: list = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)


def build_rep(ps: ParamSet, n: int, shape) -> SeminormalRep:
    """Assemble the symmetric generator matrices for one shape.

    Raises ValueError outside the positivity regime: a nonpositive diagonal
    contraction coefficient, a squared off-diagonal below zero, or a
    non-unit swap coefficient where the swapped tableau leaves the lattice.
    """
    if not ps.u:
        raise ValueError("a seminormal model needs the roots u")
    basis = tuple(combinat.enumerate_updown(n, shape, ps.u))
    assert len(basis) == combinat.count_updown(n, shape)
    idx = {t: i for i, t in enumerate(basis)}
    d = len(basis)
    contents = {t: combinat.content_sequence(t, ps.u) for t in basis}

    with mpmath.workprec(ps.precision_bits):
        X = []
        for j in range(1, n + 1):
            M = mpmath.matrix(d, d)
            for t, i in idx.items():
                M[i, i] = _mpf(contents[t][j - 1])
            X.append(M)

        S, E = [], []
        for k in range(1, n):
            Sm = mpmath.matrix(d, d)
            Em = mpmath.matrix(d, d)
            seen: set[int] = set()
            for t, i in idx.items():
                if returns_at(t, k):
                    if i in seen:
                        continue
                    cls = combinat.k_neighbors(t, k)
                    evals = {}
                    for m in cls:
                        seen.add(idx[m])
                        ev = e_diag(m, k, ps)
                        if ev <= 0:
                            raise ValueError(
                                f"contraction coefficient {ev} <= 0 at k={k}: "
                                "parameters outside the positivity regime")
                        evals[m] = ev
                    roots = {m: mpmath.sqrt(_mpf(ev)) for m, ev in evals.items()}
                    for s in cls:
                        cs = contents[s][k - 1]
                        for tt in cls:
                            ct = contents[tt][k - 1]
                            est = roots[s] * roots[tt]
                            Em[idx[tt], idx[s]] = est
                            denom = cs + ct
                            if denom == 0:
                                raise ValueError(
                                    "opposite contents in one class: "
                                    "parameters not generic")
                            delta = 1 if s == tt else 0
                            Sm[idx[tt], idx[s]] = (est - delta) / _mpf(denom)
                else:
                    a = swap_a(t, k, ps)
                    partner = combinat.sk_action(t, k)
                    if partner is None:
                        if a * a != 1:
                            raise ValueError(
                                f"swap at k={k} undefined but coefficient "
                                f"{a} is not a unit: outside the regime")
                        Sm[i, i] = _mpf(a)
                    else:
                        b2 = 1 - a * a
                        if b2 < 0:
                            raise ValueError(
                                f"squared off-diagonal {b2} < 0 at k={k}: "
                                "outside the positivity regime")
                        Sm[i, i] = _mpf(a)
                        Sm[idx[partner], i] = mpmath.sqrt(_mpf(b2))
            S.append(Sm)
            E.append(Em)

    return SeminormalRep(ps, n, shape, basis, S, E, X)


def build_all(ps: ParamSet, n: int) -> list[SeminormalRep]:
    return [build_rep(ps, n, shape)
            for shape in combinat.reachable_shapes(ps.r, n)]


# ---------------------------------------------------------------------------
# relation suite (shared between exact modules and seminormal matrices)
# ---------------------------------------------------------------------------

RELATION_FAMILIES = (
    "involution", "braid", "contraction-scalar", "commutation", "skein",
    "unwrapping", "tangle", "untwisting", "antisymmetry", "cyclotomic",
)


def _relation_residuals(S, E, X, ps: ParamSet, ops, unwrap_order: int) -> dict:
    """Max-abs residual of every defining relation family for generator
    matrices S_1..S_{n-1}, E_1..E_{n-1}, X_1..X_n over either backend."""
    n = len(X)
    assert len(S) == len(E) == n - 1
    d = ops.dim(X[0])
    I = ops.eye(d)
    res: dict = {name: 0 for name in RELATION_FAMILIES}

    def upd(name, M):
        v = ops.maxabs(M)
        if v > res[name]:
            res[name] = v

    for i in range(1, n):
        Si, Ei = S[i - 1], E[i - 1]
        upd("involution", ops.sub(ops.mul(Si, Si), I))
        upd("contraction-scalar",
            ops.sub(ops.mul(Ei, Ei), ops.scale(ps.omega[0], Ei)))
        upd("tangle", ops.sub(ops.mul(Ei, Si), Ei))
        upd("tangle", ops.sub(ops.mul(Si, Ei), Ei))
        rhs = ops.sub(Ei, I)
        upd("skein", ops.sub(ops.sub(ops.mul(Si, X[i - 1]),
                                     ops.mul(X[i], Si)), rhs))
        upd("skein", ops.sub(ops.sub(ops.mul(X[i - 1], Si),
                                     ops.mul(Si, X[i])), rhs))
        Xsum = ops.add(X[i - 1], X[i])
        upd("antisymmetry", ops.mul(Ei, Xsum))
        upd("antisymmetry", ops.mul(Xsum, Ei))
        if i <= n - 2:
            Sj, Ej = S[i], E[i]
            upd("braid", ops.sub(ops.mul(ops.mul(Si, Sj), Si),
                                 ops.mul(ops.mul(Sj, Si), Sj)))
            upd("untwisting", ops.sub(ops.mul(ops.mul(Ej, Ei), Ej), Ej))
            upd("untwisting", ops.sub(ops.mul(ops.mul(Ei, Ej), Ei), Ei))
            upd("tangle", ops.sub(ops.mul(ops.mul(Si, Ej), Ei),
                                  ops.mul(Sj, Ei)))
            upd("tangle", ops.sub(ops.mul(ops.mul(Ej, Ei), Sj),
                                  ops.mul(Ej, Si)))
        for j in range(1, n):
            if abs(i - j) > 1:
                Sj, Ej = S[j - 1], E[j - 1]
                upd("commutation", ops.sub(ops.mul(Si, Sj), ops.mul(Sj, Si)))
                upd("commutation", ops.sub(ops.mul(Si, Ej), ops.mul(Ej, Si)))
                upd("commutation", ops.sub(ops.mul(Ei, Ej), ops.mul(Ej, Ei)))
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                Xj = X[j - 1]
                upd("braid", ops.sub(ops.mul(Si, Xj), ops.mul(Xj, Si)))
                upd("commutation", ops.sub(ops.mul(Ei, Xj), ops.mul(Xj, Ei)))
    for a in range(n):
        for b in range(a):
            upd("commutation", ops.sub(ops.mul(X[a], X[b]),
                                       ops.mul(X[b], X[a])))
    if n >= 2:
        E1, X1 = E[0], X[0]
        P = I
        for a in range(unwrap_order + 1):
            upd("unwrapping", ops.sub(ops.mul(ops.mul(E1, P), E1),
                                      ops.scale(ps.omega[a], E1)))
            P = ops.mul(P, X1)
    if ps.u:
        P = I
        for ui in ps.u:
            P = ops.mul(P, ops.sub(X[0], ops.scale(ui, I)))
        upd("cyclotomic", P)
    return res


def check_module(S, E, X, ps: ParamSet, unwrap_order: int | None = None) -> dict:
    """Exact relation residuals for a module given by Fraction matrices.
    Every value should be Fraction(0) for a genuine module."""
    if unwrap_order is None:
        unwrap_order = min(ps.N, ps.r + 2)
    return _relation_residuals(S, E, X, ps, _ExactOps, unwrap_order)


def tower_scalar_residual(rep: SeminormalRep, order: int | None = None):
    """Residual of E_k X_k^a E_k = omega_k^(a) E_k for every position k and
    0 <= a <= order, the scalars taken from the truncated-series recursion.
    The scalar depends only on the shape before step k, so it is applied
    blockwise through a diagonal matrix."""
    ps = rep.ps
    if order is None:
        order = ps.r + 1
    worst = mpmath.mpf(0)
    with mpmath.workprec(ps.precision_bits):
        for k in range(1, rep.n):
            by_shape: dict = {}
            rows = []
            for t in rep.basis:
                sh = _prev(t, k)
                if sh not in by_shape:
                    by_shape[sh] = [_mpf(v) for v in
                                    params.omega_k_values(t, k, ps, order)]
                rows.append(by_shape[sh])
            Ek, Xk = rep.E[k - 1], rep.X[k - 1]
            P = mpmath.eye(rep.dim)
            for a in range(order + 1):
                M = Ek * P * Ek
                for i in range(rep.dim):
                    wa = rows[i][a]
                    for j in range(rep.dim):
                        v = abs(M[i, j] - wa * Ek[i, j])
                        if v > worst:
                            worst = v
                P = P * Xk
    return worst


def verify_relations(rep: SeminormalRep, unwrap_order: int | None = None) -> dict:
    """Max-abs residuals of the full defining-relation suite on a seminormal
    model, plus symmetry of every generator matrix and the blockwise
    scalar tower."""
    ps = rep.ps
    if unwrap_order is None:
        unwrap_order = min(ps.N, ps.r + 2)
    with mpmath.workprec(ps.precision_bits):
        res = _relation_residuals(rep.S, rep.E, rep.X, ps, _FloatOps,
                                  unwrap_order)
        sym = mpmath.mpf(0)
        for M in (*rep.S, *rep.E, *rep.X):
            v = _FloatOps.maxabs(M - M.transpose())
            if v > sym:
                sym = v
        res["star-symmetry"] = sym
        res["tower-scalars"] = tower_scalar_residual(rep)
    return res


# ---------------------------------------------------------------------------
# zero-tolerance identities between the exact coefficients
# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    counts: dict
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_identities(ps: ParamSet, n: int) -> IdentityReport:
    """Every exact coefficient identity, checked with zero tolerance over all
    updown tableaux of every reachable shape at n strands."""
    counts: dict[str, int] = {}
    failures: list[str] = []

    def record(name: str, ok: bool, ctx: str = ""):
        counts[name] = counts.get(name, 0) + 1
        if not ok:
            failures.append(f"{name}: {ctx}")

    seen_classes: set = set()
    seen_prefixes: set = set()

    for shape in combinat.reachable_shapes(ps.r, n):
        for t in combinat.enumerate_updown(n, shape, ps.u):
            cs = combinat.content_sequence(t, ps.u)
            for k in range(1, n):
                if returns_at(t, k):
                    key = (k, t[:k - 1] + t[k:])
                    if key in seen_classes:
                        continue
                    seen_classes.add(key)
                    cls = combinat.k_neighbors(t, k)
                    e = {m: e_diag(m, k, ps) for m in cls}
                    c = {m: combinat.content_sequence(m, ps.u)[k - 1]
                         for m in cls}
                    for s in cls:
                        csk = c[s]
                        lhs = sum(e[m] / (csk + c[m]) for m in cls)
                        record("class-sum-linear",
                               lhs == 1 + Fraction(1, 2) / csk,
                               f"s={s}, k={k}")
                        lhs = sum(e[m] / (csk + c[m]) ** 2 for m in cls)
                        rhs = ((1 - Fraction(1, 4) / csk ** 2) / e[s]
                               + Fraction(1, 2) / csk ** 2)
                        record("class-sum-quadratic", lhs == rhs,
                               f"s={s}, k={k}")
                        for tp in cls:
                            if tp == s:
                                continue
                            lhs = sum(e[m] / ((csk + c[m]) * (c[m] + c[tp]))
                                      for m in cls)
                            record("class-sum-cross",
                                   lhs == Fraction(1, 2) / (csk * c[tp]),
                                   f"s={s}, t'={tp}, k={k}")
                    # partial fractions of W_k(y)/y over the class
                    w = params.wk_rational(t, k, ps)
                    record("w-vanishes-at-zero", w(Fraction(0)) == 0,
                           f"k={k}, prefix={t[:k - 1]}")
                    lhs_rf = params.RationalFunction(
                        w.num, w.den * params.Poly((Fraction(0), Fraction(1))))
                    rhs_rf = params.RationalFunction(params.Poly())
                    for m in cls:
                        rhs_rf = rhs_rf + params.RationalFunction(
                            params.Poly.const(e[m]), params.Poly.y_plus(-c[m]))
                    record("w-partial-fractions", lhs_rf == rhs_rf,
                           f"k={k}, prefix={t[:k - 1]}")
                    if k <= n - 2 and t[k - 1] == t[k + 1]:
                        record("contraction-inverse",
                               e_diag(t, k, ps) * e_diag(t, k + 1, ps) == 1,
                               f"t={t}, k={k}")
                else:
                    a = swap_a(t, k, ps)
                    u = combinat.sk_action(t, k)
                    if u is None:
                        record("swap-degenerate-unit", a * a == 1,
                               f"t={t}, k={k}")
                    else:
                        cu = combinat.content_sequence(u, ps.u)
                        ok = (cu[k] == cs[k - 1] and cu[k - 1] == cs[k]
                              and swap_a(u, k, ps) == -a)
                        record("content-swap", ok, f"t={t}, k={k}")
            # the recursion matches the closed rational form at every level
            for k in range(1, n + 1):
                key = (k, t[:k - 1])
                if key in seen_prefixes:
                    continue
                seen_prefixes.add(key)
                direct = params.wk_rational(t, k, ps)
                rec = params.wk_recursive_rational(t, k, ps)
                record("w-recursion",
                       direct.num * rec.den == rec.num * direct.den,
                       f"k={k}, prefix={t[:k - 1]}")
            # matching products of squared off-diagonals with contractions
            for k in range(1, n - 1):
                if not (returns_at(t, k) and t[k - 1] == t[k + 1]):
                    continue
                for tt in combinat.k_neighbors(t, k + 1):
                    if returns_at(tt, k):
                        continue
                    target = combinat.sk_action(tt, k)
                    if target is None:
                        continue
                    for uu in combinat.k_neighbors(t, k):
                        if returns_at(uu, k + 1):
                            continue
                        if combinat.sk_action(uu, k + 1) != target:
                            continue
                        lhs = swap_b_squared(tt, k, ps) * e_diag(tt, k + 1, ps)
                        rhs = swap_b_squared(uu, k + 1, ps) * e_diag(uu, k, ps)
                        record("square-root-matching", lhs == rhs,
                               f"t={tt}, u={uu}, k={k}")
    return IdentityReport(counts, failures)


# ---------------------------------------------------------------------------
# branching: restriction to one strand fewer
# ---------------------------------------------------------------------------


def branching_blocks(rep: SeminormalRep) -> dict:
    """Group the basis by the next-to-last shape and check that the smaller
    algebra's generators act block-diagonally with the predicted block sizes."""
    n = rep.n
    groups: dict = {}
    for i, t in enumerate(rep.basis):
        mu = t[n - 2] if n >= 2 else combinat.empty_mp(rep.ps.r)
        groups.setdefault(mu, []).append(i)

    shape = rep.shape
    expected = set()
    for node in combinat.addable_nodes(shape):
        mu = combinat.add_box(shape, node)
        if combinat.mp_size(mu) <= n - 1:
            expected.add(mu)
    for node in combinat.removable_nodes(shape):
        expected.add(combinat.remove_box(shape, node))

    sizes_ok = (set(groups) == expected and
                all(len(ix) == combinat.count_updown(n - 1, mu)
                    for mu, ix in groups.items()))

    block_of = {}
    for mu, ix in groups.items():
        for i in ix:
            block_of[i] = mu
    off = mpmath.mpf(0)
    with mpmath.workprec(rep.ps.precision_bits):
        for M in (*rep.S[:n - 2], *rep.E[:n - 2], *rep.X[:n - 1]):
            for i in range(rep.dim):
                for j in range(rep.dim):
                    if block_of[i] != block_of[j]:
                        v = abs(M[i, j])
                        if v > off:
                            off = v
    return {
        "sizes": {mu: len(ix) for mu, ix in groups.items()},
        "sizes_ok": sizes_ok,
        "max_offblock": off,
    }


# ---------------------------------------------------------------------------
# small exact modules (two strands) used as ground-truth fixtures
# ---------------------------------------------------------------------------


class ModuleFixture(NamedTuple):
    S: list
    E: list
    X: list
    ps: ParamSet


def module_rank_one(u1=Fraction(2), sign: int = 1) -> ModuleFixture:
    """One-dimensional module at r = 1: the contraction acts by zero, the
    swap by +-1, and the second eigenvalue sits one step away."""
    assert sign in (1, -1)
    u1 = Fraction(u1)
    ps = ParamSet.from_u((u1,), n_hint=2)
    F = Fraction
    return ModuleFixture(
        S=[[[F(sign)]]],
        E=[[[F(0)]]],
        X=[[[u1]], [[u1 + sign]]],
        ps=ps,
    )


def module_contraction_free() -> ModuleFixture:
    """Two-dimensional module at r = 2, u = (3, 1), with E = 0: the skein
    relation alone forces the off-diagonal swap."""
    ps = ParamSet.from_u((3, 1), n_hint=2)
    F = Fraction
    S = [[F(-1, 2), F(3, 2)], [F(1, 2), F(1, 2)]]
    E = [[F(0), F(0)], [F(0), F(0)]]
    X1 = [[F(3), F(0)], [F(0), F(1)]]
    X2 = [[F(1), F(0)], [F(0), F(3)]]
    return ModuleFixture([S], [E], [X1, X2], ps)


def module_nonsplit() -> ModuleFixture:
    """Two-dimensional module at r = 2 with equal roots u = (1/4, 1/4):
    X_1 - 1/4 is nonzero nilpotent, so X_1 is not semisimple, yet every
    relation holds exactly for the matching admissible sequence."""
    q = Fraction(1, 4)
    omega = params.nilpotent_example_omega(6)
    ps = ParamSet.with_omega((q, q), omega)
    F = Fraction
    S = [[F(1), F(0)], [F(0), F(-1)]]
    E = [[F(1), F(0)], [F(0), F(0)]]
    X1 = [[F(0), q], [-q, F(1, 2)]]
    X2 = [[F(0), -q], [q, F(-1, 2)]]
    return ModuleFixture([S], [E], [X1, X2], ps)


def module_residue_family(v) -> ModuleFixture:
    """The d-dimensional two-strand module with X_1 = diag(v), X_2 = -X_1,
    contraction columns proportional to the residue coefficients, and the
    swap determined by the skein relation."""
    v = [Fraction(x) for x in v]
    d = len(v)
    g = params.ene0_gammas(v)
    omega = [params.omega_residue_form(v, a) for a in range(d + 3)]
    ps = ParamSet.with_omega(v, omega)
    F = Fraction
    E = [[g[i] for i in range(d)] for _ in range(d)]
    S = _linalg.zeros(d, d)
    for i in range(d):
        for j in range(d):
            if i == j:
                S[i][i] = (g[i] - 1) / (2 * v[i])
            else:
                S[j][i] = g[i] / (v[i] + v[j])
    X1 = _linalg.zeros(d, d)
    X2 = _linalg.zeros(d, d)
    for i in range(d):
        X1[i][i] = v[i]
        X2[i][i] = -v[i]
    return ModuleFixture([S], [E], [X1, X2], ps)
