"""Finite-dimensional restricted Lie algebras by structure constants.

An algebra is given by a field descriptor, bracket structure constants
c[i][j] (the coordinate vector of [e_i, e_j]) and the images e_i^[p] of the
basis under the p-operation.  The p-operation on arbitrary elements is the
unique extension by Jacobson's formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import PolynomialRing, UnsupportedKindError
from .linalg import Subspace, mat_pow, vec_add, vec_is_zero, vec_zero


class NotPIdealError(ValueError):
    """Raised when a quotient or series step needs a p-ideal and got none."""


@dataclass
class ValidationReport:
    passed: bool
    failures: list = dc_field(default_factory=list)

    def __bool__(self):
        return self.passed

    def first(self):
        return self.failures[0] if self.failures else None


class RLieAlgebra:

    def __init__(self, field, dim, brackets, ppowers, labels=None):
        """brackets: full antisymmetric table c[i][j] -> coordinate tuple;
        ppowers: tuple of coordinate tuples e_i^[p]."""
        self.field = field
        self.dim = dim
        self.brackets = tuple(tuple(tuple(v) for v in row) for row in brackets)
        self.ppowers = tuple(tuple(v) for v in ppowers)
        self.labels = tuple(labels) if labels else tuple(
            "e%d" % (i + 1) for i in range(dim))
        self._ad_basis = None
        self._validated = None

    @classmethod
    def from_upper(cls, field, dim, upper, ppowers, labels=None):
        """Build the full bracket table from {(i, j): vector} with i < j."""
        zero = vec_zero(field, dim)
        table = [[zero for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in upper.items():
            if not i < j:
                raise ValueError("upper bracket keys need i < j, got (%d,%d)" % (i, j))
            v = tuple(v)
            table[i][j] = v
            table[j][i] = tuple(field.neg(c) for c in v)
        return cls(field, dim, table, ppowers, labels)

    @property
    def p(self):
        return self.field.p

    def __repr__(self):
        return "RLieAlgebra(dim=%d over %r)" % (self.dim, self.field)

    # -- basic structure ----------------------------------------------------

    def ad_basis(self):
        """ad(e_i) matrices: column j of ad(e_i) is [e_i, e_j]."""
        if self._ad_basis is None:
            n = self.dim
            self._ad_basis = tuple(
                tuple(tuple(self.brackets[i][j][k] for j in range(n))
                      for k in range(n))
                for i in range(n))
        return self._ad_basis

    def bracket(self, x, y, ring=None):
        R = ring or self.field
        emb = (lambda c: c) if ring is None else ring.embed
        n = self.dim
        out = [R.zero] * n
        for i in range(n):
            if R.is_zero(x[i]):
                continue
            for j in range(n):
                if R.is_zero(y[j]):
                    continue
                c = R.mul(x[i], y[j])
                row = self.brackets[i][j]
                for k in range(n):
                    if not self.field.is_zero(row[k]):
                        out[k] = R.add(out[k], R.mul(c, emb(row[k])))
        return tuple(out)

    def ad_matrix(self, x):
        F = self.field
        n = self.dim
        ads = self.ad_basis()
        out = [[F.zero] * n for _ in range(n)]
        for i in range(n):
            if F.is_zero(x[i]):
                continue
            A = ads[i]
            for k in range(n):
                for j in range(n):
                    out[k][j] = F.add(out[k][j], F.mul(x[i], A[k][j]))
        return tuple(tuple(r) for r in out)

    def basis_vector(self, i, ring=None):
        R = ring or self.field
        return tuple(R.one if j == i else R.zero for j in range(self.dim))

    # -- validation ----------------------------------------------------------

    def validate(self):
        """Check alternation, Jacobi and the restrictedness identity."""
        if self._validated is not None:
            return self._validated
        F = self.field
        n = self.dim
        failures = []
        zero = vec_zero(F, n)
        for i in range(n):
            if self.brackets[i][i] != zero:
                failures.append(("alternating", (i, i),
                                 "[%s,%s] != 0" % (self.labels[i], self.labels[i])))
        for i in range(n):
            for j in range(i + 1, n):
                neg = tuple(F.neg(c) for c in self.brackets[j][i])
                if self.brackets[i][j] != neg:
                    failures.append(("antisymmetry", (i, j), "c_ij != -c_ji"))
        if not failures:
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(j + 1, n):
                        ei, ej, ek = (self.basis_vector(a) for a in (i, j, k))
                        s = vec_add(F, vec_add(
                            F,
                            self.bracket(self.bracket(ei, ej), ek),
                            self.bracket(self.bracket(ej, ek), ei)),
                            self.bracket(self.bracket(ek, ei), ej))
                        if not vec_is_zero(F, s):
                            failures.append(("jacobi", (i, j, k),
                                             "Jacobi fails on (%s,%s,%s)" %
                                             (self.labels[i], self.labels[j],
                                              self.labels[k])))
        if not failures:
            ads = self.ad_basis()
            for i in range(n):
                lhs = self.ad_matrix(self.ppowers[i])
                rhs = mat_pow(F, ads[i], self.p)
                if lhs != rhs:
                    failures.append(("restricted", (i,),
                                     "ad(%s^[p]) != ad(%s)^p" %
                                     (self.labels[i], self.labels[i])))
        self._validated = ValidationReport(not failures, failures)
        return self._validated

    def require_valid(self):
        rep = self.validate()
        if not rep:
            raise ValueError("invalid restricted Lie algebra: %r" % (rep.first(),))

    # -- p-operation ---------------------------------------------------------

    def p_power(self, x, ring=None):
        """(sum x_i e_i)^[p] via Jacobson's expansion, term by term."""
        self.require_valid()
        R = ring or self.field
        emb = (lambda c: c) if ring is None else ring.embed
        n = self.dim
        p = self.p
        total = [R.zero] * n
        acc = [R.zero] * n
        acc_nonzero = False
        for i in range(n):
            c = x[i]
            if R.is_zero(c):
                continue
            term = tuple(R.mul(c, R.one) if j == i else R.zero for j in range(n))
            cp = R.pow_int(c, p)
            pv = self.ppowers[i]
            for k in range(n):
                if not self.field.is_zero(pv[k]):
                    total[k] = R.add(total[k], R.mul(cp, emb(pv[k])))
            if acc_nonzero:
                cross = self._jacobson_cross(term, tuple(acc), R, ring is not None)
                for k in range(n):
                    total[k] = R.add(total[k], cross[k])
            acc[i] = R.add(acc[i], c)
            acc_nonzero = True
        return tuple(total)

    def _jacobson_cross(self, a, b, R, embedded):
        """sum_{i=1}^{p-1} s_i(a, b) with i*s_i = [lambda^(i-1)] ad(la+b)^(p-1)(a)."""
        p = self.p
        if p == 2:
            return self.bracket(b, a, None if not embedded else R)
        S = PolynomialRing(R, ("@l",))
        lam = S.var(0)
        aS = tuple(S.embed(c) for c in a)
        bS = tuple(S.embed(c) for c in b)
        u = tuple(S.add(S.mul(lam, ca), cb) for ca, cb in zip(aS, bS))
        # bracket over S with structure constants pushed through R
        push = (lambda c: S.embed(c)) if not embedded else (
            lambda c: S.embed(R.embed(c)))
        n = self.dim

        def brk(xv, yv):
            out = [S.zero] * n
            for i in range(n):
                if xv[i] == S.zero:
                    continue
                for j in range(n):
                    if yv[j] == S.zero:
                        continue
                    c = S.mul(xv[i], yv[j])
                    row = self.brackets[i][j]
                    for k in range(n):
                        if not self.field.is_zero(row[k]):
                            out[k] = S.add(out[k], S.mul(c, push(row[k])))
            return tuple(out)

        w = aS
        for _ in range(p - 1):
            w = brk(u, w)
        out = []
        for k in range(n):
            val = R.zero
            for i in range(1, p):
                coeff = S.univariate_coeff(w[k], i - 1)
                inv_i = pow(i, p - 2, p)
                val = R.add(val, R.scale_int(coeff, inv_i))
            out.append(val)
        return tuple(out)

    def generic_p_power(self):
        """p-power of the generic element sum x_i e_i, over the coordinate ring."""
        self.require_valid()
        names = tuple("x%d" % (i + 1) for i in range(self.dim))
        R = PolynomialRing(self.field, names)
        x = tuple(R.var(i) for i in range(self.dim))
        return self.p_power(x, ring=R), R

    def is_p_nilpotent(self, x):
        """Some iterated p-power of x is zero; dim iterations suffice."""
        if not self.field.is_field:
            raise UnsupportedKindError("p-nilpotency needs field coefficients")
        v = tuple(x)
        for _ in range(max(self.dim, 1)):
            if vec_is_zero(self.field, v):
                return True
            v = self.p_power(v)
        return vec_is_zero(self.field, v)

    # -- subspaces -----------------------------------------------------------

    def subspace(self, vectors):
        return Subspace.from_vectors(self.field, self.dim, list(vectors))

    def zero_subspace(self):
        return Subspace.zero(self.field, self.dim)

    def full_subspace(self):
        return Subspace.full(self.field, self.dim)

    def bracket_span(self, S, T):
        """Span of [s, t] for s, t running over the bases."""
        vecs = [self.bracket(s, t) for s in S.basis for t in T.basis]
        return self.subspace(vecs)

    def is_subalgebra(self, S):
        return all(S.contains_vector(self.bracket(u, v))
                   for u in S.basis for v in S.basis)

    def is_ideal(self, S):
        n = self.dim
        return all(S.contains_vector(self.bracket(self.basis_vector(i), v))
                   for i in range(n) for v in S.basis)

    def is_p_closed(self, S):
        """Basis p-powers land in S (enough once S is a subalgebra)."""
        return all(S.contains_vector(self.p_power(v)) for v in S.basis)

    def is_restricted_subalgebra(self, S):
        return self.is_subalgebra(S) and self.is_p_closed(S)

    def is_p_ideal(self, S):
        return self.is_ideal(S) and self.is_p_closed(S)

    def spin_p_ideal(self, S):
        """Smallest p-ideal containing S: close under all ad(e_i) and p-powers."""
        self.require_valid()
        cur = S
        for _ in range(self.dim + 1):
            vecs = list(cur.basis)
            for i in range(self.dim):
                ei = self.basis_vector(i)
                vecs.extend(self.bracket(ei, v) for v in cur.basis)
            vecs.extend(self.p_power(v) for v in cur.basis)
            nxt = self.subspace(vecs)
            if nxt == cur:
                return cur
            cur = nxt
        return cur

    def spin_subalgebra(self, S):
        """Smallest restricted subalgebra containing S."""
        self.require_valid()
        cur = S
        for _ in range(self.dim + 1):
            vecs = list(cur.basis)
            vecs.extend(self.bracket(u, v)
                        for u in cur.basis for v in cur.basis)
            vecs.extend(self.p_power(v) for v in cur.basis)
            nxt = self.subspace(vecs)
            if nxt == cur:
                return cur
            cur = nxt
        return cur

    # -- characteristic series ------------------------------------------------

    def center(self):
        """{x : [e_i, x] = 0 for all i}; closed under the p-operation."""
        F = self.field
        n = self.dim
        rows = []
        for A in self.ad_basis():
            rows.extend(A)
        if not rows:
            return self.full_subspace()
        from .linalg import nullspace
        return nullspace(F, rows, n)

    def derived_subalgebra(self, S=None):
        S = S if S is not None else self.full_subspace()
        return self.bracket_span(S, S)

    def characteristic_series(self):
        full = self.full_subspace()
        derived = [full]
        while True:
            nxt = self.bracket_span(derived[-1], derived[-1])
            if nxt == derived[-1]:
                break
            derived.append(nxt)
            if nxt.dim == 0:
                break
        lower = [full]
        while True:
            nxt = self.bracket_span(full, lower[-1])
            if nxt == lower[-1]:
                break
            lower.append(nxt)
            if nxt.dim == 0:
                break
        return {
            "center": self.center(),
            "derived_series": derived,
            "lower_central_series": lower,
            "solvable": derived[-1].dim == 0,
            "nilpotent": lower[-1].dim == 0,
        }

    # -- unipotency ------------------------------------------------------------

    def is_unipotent(self, S=None):
        """Descending chain S, [S,S] + S^[p], ... reaches 0."""
        self.require_valid()
        S = S if S is not None else self.full_subspace()
        if not self.is_restricted_subalgebra(S):
            raise ValueError("is_unipotent needs a restricted subalgebra")
        cur = S
        for _ in range(self.dim + 1):
            if cur.dim == 0:
                return True
            vecs = [self.bracket(u, v) for u in cur.basis for v in cur.basis]
            vecs.extend(self.p_power(v) for v in cur.basis)
            nxt = self.subspace(vecs)
            if nxt == cur:
                return False
            cur = nxt
        return cur.dim == 0

    def is_abelian(self, S=None):
        S = S if S is not None else self.full_subspace()
        F = self.field
        return all(vec_is_zero(F, self.bracket(u, v))
                   for u in S.basis for v in S.basis)

    def p_power_matrix(self, S=None):
        """Semilinear matrix of the p-operation on an abelian (sub)algebra,
        in the coordinates of S's basis."""
        S = S if S is not None else self.full_subspace()
        if not self.is_abelian(S):
            raise ValueError("p-power matrix needs an abelian (sub)algebra")
        F = self.field
        cols = []
        for v in S.basis:
            pv = self.p_power(v)
            if not S.contains_vector(pv):
                raise ValueError("p-operation does not preserve the subspace")
            rem = pv
            # coordinates of pv in S's basis (pivot-read off the RREF basis)
            coords = []
            for row, pc in zip(S.basis, S.pivots):
                coords.append(rem[pc])
                rem = tuple(F.sub(a, F.mul(rem[pc], b)) for a, b in zip(rem, row))
            cols.append(coords)
        d = S.dim
        return tuple(tuple(cols[j][k] for j in range(d)) for k in range(d))

    # -- quotients --------------------------------------------------------------

    def quotient(self, I):
        """Quotient by a p-ideal; returns (algebra, project, section)."""
        self.require_valid()
        if not self.is_p_ideal(I):
            witness = self._p_ideal_witness(I)
            raise NotPIdealError("not a p-ideal: %s" % witness)
        comp, project, section = I.quotient_data()
        m = len(comp)
        F = self.field
        reps = [tuple(F.one if j == comp[a] else F.zero for j in range(self.dim))
                for a in range(m)]
        table = [[None] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                table[a][b] = project(self.bracket(reps[a], reps[b]))
        ppow = [project(self.p_power(reps[a])) for a in range(m)]
        labels = tuple(self.labels[c] + "~" for c in comp)
        q = RLieAlgebra(F, m, table, ppow, labels)
        q.require_valid()
        return q, project, section

    def _p_ideal_witness(self, S):
        F = self.field
        for i in range(self.dim):
            for v in S.basis:
                w = self.bracket(self.basis_vector(i), v)
                if not S.contains_vector(w):
                    return "[%s, v] escapes the subspace" % self.labels[i]
        for v in S.basis:
            if not S.contains_vector(self.p_power(v)):
                return "v^[p] escapes the subspace"
        return "unknown"

    # -- series classification -----------------------------------------------

    def verify_subnormal_series(self, chain):
        """Classify successive quotients of an ascending chain 0 = S_0 ⊆ ... ⊆ g.

        Each step must be a p-ideal of its successor; 1-dimensional quotients
        are 'alpha-type' (p-power zero) or 'mu-form(c)' (p-power scalar c).
        """
        self.require_valid()
        F = self.field
        if not chain or chain[0].dim != 0 or chain[-1].dim != self.dim:
            raise ValueError("chain must ascend from 0 to the whole algebra")
        out = []
        for lo, hi in zip(chain, chain[1:]):
            if not hi.contains(lo):
                raise ValueError("chain does not ascend")
            # lo must be a p-ideal inside hi
            for u in hi.basis:
                for v in lo.basis:
                    if not lo.contains_vector(self.bracket(u, v)):
                        raise NotPIdealError(
                            "chain step is not an ideal in its successor")
            for v in lo.basis:
                if not lo.contains_vector(self.p_power(v)):
                    raise NotPIdealError(
                        "chain step is not p-closed in its successor")
            d = hi.dim - lo.dim
            if d != 1:
                out.append({"kind": "unclassified", "dim": d})
                continue
            # representative of the quotient line: a basis vector of hi not in lo
            rep = None
            for v in hi.basis:
                if not lo.contains_vector(v):
                    rep = lo.reduce(v)
                    break
            pv = lo.reduce(self.p_power(rep))
            if vec_is_zero(F, pv):
                out.append({"kind": "alpha-type", "dim": 1})
                continue
            # pv must be proportional to rep (quotient is 1-dimensional)
            c = None
            for a, b in zip(pv, rep):
                if not F.is_zero(b):
                    c = F.div(a, b)
                    break
            if c is None or tuple(F.mul(c, b) for b in rep) != pv:
                raise NotPIdealError("p-power escapes the 1-dimensional quotient")
            out.append({"kind": "mu-form", "scalar": c, "dim": 1})
        return out

    # -- base change ------------------------------------------------------------

    def base_change(self, hom):
        """Transport structure constants and p-powers along a FieldHom."""
        if hom.source != self.field:
            raise ValueError("homomorphism source %r does not match %r"
                             % (hom.source, self.field))
        n = self.dim
        table = tuple(tuple(tuple(hom(c) for c in self.brackets[i][j])
                            for j in range(n)) for i in range(n))
        ppow = tuple(tuple(hom(c) for c in v) for v in self.ppowers)
        out = RLieAlgebra(hom.target, n, table, ppow, self.labels)
        out.require_valid()
        return out

    def base_change_subspace(self, hom, S):
        return Subspace.from_vectors(
            hom.target, self.dim, [tuple(hom(c) for c in v) for v in S.basis])


def direct_sum(a, b):
    """Direct sum of restricted Lie algebras over the same field."""
    if a.field != b.field:
        raise ValueError("direct sum needs a common field")
    F = a.field
    n = a.dim + b.dim
    zero = vec_zero(F, n)

    def embed_a(v):
        return tuple(v) + vec_zero(F, b.dim)

    def embed_b(v):
        return vec_zero(F, a.dim) + tuple(v)

    table = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            table[i][j] = embed_a(a.brackets[i][j])
    for i in range(b.dim):
        for j in range(b.dim):
            table[a.dim + i][a.dim + j] = embed_b(b.brackets[i][j])
    ppow = [embed_a(v) for v in a.ppowers] + [embed_b(v) for v in b.ppowers]
    labels = tuple(a.labels) + tuple(b.labels)
    return RLieAlgebra(F, n, table, ppow, labels)
