"""Exact linear and Frobenius-semilinear algebra over the scalar domains.

Vectors are tuples of field elements, matrices are tuples of row tuples.
Subspaces are stored as reduced-row-echelon bases, which makes equality
syntactic and all set operations canonical.
"""

from __future__ import annotations

import itertools


# ---------------------------------------------------------------------------
# vectors and matrices, generic over a descriptor
# ---------------------------------------------------------------------------

def vec_zero(F, n):
    return (F.zero,) * n


def vec_add(F, a, b):
    return tuple(F.add(x, y) for x, y in zip(a, b))


def vec_sub(F, a, b):
    return tuple(F.sub(x, y) for x, y in zip(a, b))


def vec_scale(F, a, c):
    return tuple(F.mul(c, x) for x in a)


def vec_is_zero(F, a):
    return all(F.is_zero(x) for x in a)


def mat_identity(F, n):
    return tuple(tuple(F.one if i == j else F.zero for j in range(n))
                 for i in range(n))


def mat_vec(F, M, v):
    return tuple(F.sum(F.mul(M[i][j], v[j]) for j in range(len(v)))
                 for i in range(len(M)))


def mat_mul(F, A, B):
    n, m, k = len(A), len(B[0]) if B else 0, len(B)
    return tuple(tuple(F.sum(F.mul(A[i][l], B[l][j]) for l in range(k))
                       for j in range(m)) for i in range(n))


def mat_add(F, A, B):
    return tuple(vec_add(F, ra, rb) for ra, rb in zip(A, B))


def mat_sub(F, A, B):
    return tuple(vec_sub(F, ra, rb) for ra, rb in zip(A, B))


def mat_pow(F, A, e):
    out = mat_identity(F, len(A))
    for _ in range(e):
        out = mat_mul(F, out, A)
    return out


def mat_frobenius(F, A, e=1):
    """Entrywise p^e-th power."""
    q = F.p ** e
    return tuple(tuple(F.pow_int(x, q) for x in row) for row in A)


def rref(F, rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if not F.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    basis = tuple(tuple(row) for row in rows[:r])
    return basis, tuple(pivots)


def mat_rank(F, A):
    return len(rref(F, A)[0])


def nullspace(F, A, ncols):
    """Solutions x (as row vectors) of A x = 0, returned as a Subspace."""
    basis, pivots = rref(F, A)
    free = [c for c in range(ncols) if c not in pivots]
    vecs = []
    for fc in free:
        v = [F.zero] * ncols
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(basis[r][fc])
        vecs.append(tuple(v))
    return Subspace.from_vectors(F, ncols, vecs)


class Subspace:
    """A subspace of F^n held as a canonical RREF basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        for v in vectors:
            if len(v) != ambient:
                raise ValueError("vector length %d != ambient %d" % (len(v), ambient))
        basis, pivots = rref(field, list(vectors))
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, mat_identity(field, ambient),
                   tuple(range(ambient)))

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)

    def _check(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspace mismatch: %r vs %r" % (self, other))

    def reduce(self, v):
        """Reduce v modulo the basis (kill pivot coordinates)."""
        F = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            if not F.is_zero(v[pc]):
                c = v[pc]
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains_vector(self, v):
        return vec_is_zero(self.field, self.reduce(v))

    def contains(self, other):
        self._check(other)
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other):
        self._check(other)
        return Subspace.from_vectors(self.field, self.ambient,
                                     list(self.basis) + list(other.basis))

    def annihilator(self):
        """{y : <b, y> = 0 for all basis rows b}."""
        if not self.basis:
            return Subspace.full(self.field, self.ambient)
        return nullspace(self.field, self.basis, self.ambient)

    def intersect(self, other):
        self._check(other)
        return self.annihilator().sum(other.annihilator()).annihilator()

    def quotient_data(self):
        """Complement coordinates and projection onto them.

        Returns (complement_indices, project, section): `project` maps an
        ambient vector to its coordinates along the standard-basis complement,
        `section` embeds complement coordinates back into the ambient space.
        """
        comp = tuple(c for c in range(self.ambient) if c not in self.pivots)

        def project(v):
            red = self.reduce(v)
            return tuple(red[c] for c in comp)

        def section(coords):
            v = [self.field.zero] * self.ambient
            for c, x in zip(comp, coords):
                v[c] = x
            return tuple(v)

        return comp, project, section

    def constraint_matrix(self):
        """A matrix whose nullspace is exactly this subspace."""
        ann = self.annihilator()
        return ann.basis if ann.basis else ((self.field.zero,) * self.ambient,)


def all_subspaces(F, n):
    """All subspaces of F^n (finite field), via RREF enumeration."""
    elems = list(F.elements())
    yield Subspace.zero(F, n)
    for r in range(1, n + 1):
        for pivots in itertools.combinations(range(n), r):
            free_positions = []
            for i in range(r):
                for c in range(pivots[i] + 1, n):
                    if c not in pivots:
                        free_positions.append((i, c))
            for fill in itertools.product(elems, repeat=len(free_positions)):
                rows = [[F.zero] * n for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = F.one
                for (i, c), val in zip(free_positions, fill):
                    rows[i][c] = val
                basis = tuple(tuple(row) for row in rows)
                yield Subspace(F, n, basis, pivots)


def projective_points(F, n):
    """Nonzero vectors of F^n up to scalars, first nonzero coordinate 1."""
    elems = list(F.elements())
    for lead in range(n):
        for tail in itertools.product(elems, repeat=n - lead - 1):
            v = [F.zero] * lead + [F.one] + list(tail)
            yield tuple(v)


# ---------------------------------------------------------------------------
# Frobenius-semilinear maps
# ---------------------------------------------------------------------------

class SemilinearMap:
    """v |-> B . v^(p): additive, scaling twisted by the Frobenius."""

    def __init__(self, field, matrix):
        self.field = field
        self.matrix = tuple(tuple(row) for row in matrix)
        self.n = len(self.matrix)

    def __repr__(self):
        return "SemilinearMap(n=%d over %r)" % (self.n, self.field)

    def apply(self, v):
        F = self.field
        vp = tuple(F.pow_int(x, F.p) for x in v)
        return mat_vec(F, self.matrix, vp)

    def kernel(self):
        return semilinear_kernel(self.field, self.matrix)

    def rational_unipotent_part(self):
        """Ascending union of ker(phi^i), i = 1..n; a genuine subspace."""
        F = self.field
        K = Subspace.zero(F, self.n)
        for _ in range(self.n):
            A = K.constraint_matrix()
            nxt = semilinear_kernel(F, mat_mul(F, A, self.matrix))
            if nxt == K:
                break
            K = nxt
        return K

    def stable_rank(self):
        """Rank of B . B^(p) . B^(p^2) ... at stabilization (m <= n steps)."""
        F = self.field
        M = self.matrix
        r = mat_rank(F, M)
        for i in range(1, self.n + 1):
            M = mat_mul(F, M, mat_frobenius(F, self.matrix, i))
            r2 = mat_rank(F, M)
            if r2 == r:
                return r
            r = r2
        return r


def semilinear_kernel(F, B):
    """{v : B . v^(p) = 0} over the base field.

    Solve B u = 0 linearly, then cut the solution space down to vectors whose
    entries are all p-th powers, using the decomposition of the field over
    its subfield of p-th powers; take entrywise p-th roots at the end.
    """
    n = len(B[0]) if B else 0
    W = nullspace(F, B, n)
    if W.dim == 0:
        return W
    basis = W.basis  # u = sum_l c_l w_l, with c_l the pivot coordinates of u
    d = W.dim
    pivots = set(W.pivots)
    nb = len(F.pth_basis)
    # components[l][j] = [m_0, ..., m_{nb-1}] with w_lj = sum_i basis_i * m_i^p
    comps = [[F.pth_components(x) for x in row] for row in basis]
    constraints = []
    for j in range(n):
        if j in pivots:
            continue
        for i in range(1, nb):
            constraints.append(tuple(comps[l][j][i] for l in range(d)))
    if constraints:
        sols = nullspace(F, constraints, d)
        s_vectors = sols.basis
    else:
        s_vectors = mat_identity(F, d)
    out = []
    for s in s_vectors:
        v = [F.zero] * n
        for l, pc in enumerate(W.pivots):
            v[pc] = s[l]
        for j in range(n):
            if j not in pivots:
                v[j] = F.sum(F.mul(comps[l][j][0], s[l]) for l in range(d))
        out.append(tuple(v))
    return Subspace.from_vectors(F, n, out)
