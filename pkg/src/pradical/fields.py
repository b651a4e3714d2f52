"""Exact scalar arithmetic in characteristic p.

Provides descriptor objects for GF(p), GF(p)(t), GF(p^m) and multivariate
polynomial coordinate rings over these.  Elements are plain immutable Python
values (ints / tuples); all operations go through the descriptor so that
linear algebra and Lie-algebra code can stay generic.  Every representation
is canonical: two elements are equal iff their representations are equal.
"""

from __future__ import annotations

import itertools


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# univariate polynomials over Z/p, as tuples of ints (low degree first)
# ---------------------------------------------------------------------------

def ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b, p):
    n = max(len(a), len(b))
    return ptrim(((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                 for i in range(n))


def pneg(a, p):
    return tuple((-c) % p for c in a)


def psub(a, b, p):
    return padd(a, pneg(b, p), p)


def pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] = (out[i + j] + ca * cb) % p
    return ptrim(out)


def pdivmod(a, b, p):
    """Quotient and remainder; b nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(ptrim(a)) >= len(b):
        a = list(ptrim(a))
        d = len(a) - len(b)
        c = (a[-1] * binv) % p
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] = (a[d + i] - c * cb) % p
    return ptrim(q), ptrim(a)


def pgcd(a, b, p):
    while b:
        _, a = pdivmod(a, b, p)
        a, b = b, a
    return pmonic(a, p)


def pmonic(a, p):
    if not a:
        return ()
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def psubst(a, image, p):
    """Substitute the variable of a by the polynomial `image`."""
    out = ()
    power = (1,)
    for c in a:
        if c:
            out = padd(out, pmul((c,), power, p), p)
        power = pmul(power, image, p)
    return out


def ppow_var(e):
    """The monomial t^e as a coefficient tuple."""
    return tuple([0] * e + [1])


def poly_str(a, var):
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append(var if c == 1 else "%d*%s" % (c, var))
        else:
            parts.append("%s^%d" % (var, e) if c == 1 else "%d*%s^%d" % (c, var, e))
    return " + ".join(parts)


def _irreducible(poly, p):
    """Brute-force irreducibility for small degree (trial division)."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            f = tail + (1,)
            _, r = pdivmod(poly, f, p)
            if not r:
                return False
    return True


def find_irreducible(p, m):
    """Lexicographically-first monic irreducible of degree m over GF(p)."""
    for tail in itertools.product(range(p), repeat=m):
        f = tail + (1,)
        if _irreducible(f, p):
            return f
    raise ValueError("no irreducible found (degree %d over GF(%d))" % (m, p))


# ---------------------------------------------------------------------------
# field / ring descriptors
# ---------------------------------------------------------------------------

class UnsupportedKindError(TypeError):
    """Raised when an operation needs a field but got a coordinate ring."""


class Ring:
    """Descriptor base: characteristic-p ring with opaque canonical elements."""

    kind = "ring"
    is_field = False

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return a == self.zero

    def eq(self, a, b):
        return a == b

    def pow_int(self, a, e):
        if e < 0:
            raise ValueError("negative exponent in a ring")
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def scale_int(self, a, n):
        return self.mul(self.from_int(n), a)

    def sum(self, xs):
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out


class PrimeField(Ring):
    """GF(p); elements are ints in [0, p)."""

    kind = "prime"
    is_field = True

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def pth_root(self, a):
        # Frobenius is the identity on the prime field.
        return a

    def pth_components(self, a):
        return [a]

    @property
    def pth_basis(self):
        return [self.one]

    def elements(self):
        return range(self.p)

    def order(self):
        return self.p

    def random_element(self, rng):
        return rng.randrange(self.p)

    def to_str(self, a):
        return str(a)


class RationalFunctionField(Ring):
    """GF(p)(t); elements are reduced fractions (num, den) of coefficient
    tuples with monic denominator."""

    kind = "rational-function"
    is_field = True

    def __init__(self, p, var="t"):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        self.p = p
        self.var = var
        self.zero = ((), (1,))
        self.one = ((1,), (1,))

    def __repr__(self):
        return "GF(%d)(%s)" % (self.p, self.var)

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.p == self.p and other.var == self.var)

    def __hash__(self):
        return hash(("ratfunc", self.p, self.var))

    def frac(self, num, den):
        p = self.p
        num, den = ptrim(num), ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in %r" % self)
        if not num:
            return self.zero
        g = pgcd(num, den, p)
        if len(g) > 1:
            num, _ = pdivmod(num, g, p)
            den, _ = pdivmod(den, g, p)
        lead = den[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            num = tuple((c * inv) % p for c in num)
            den = tuple((c * inv) % p for c in den)
        return (num, den)

    @property
    def t(self):
        return ((0, 1), (1,))

    def from_poly(self, coeffs):
        return self.frac(tuple(c % self.p for c in coeffs), (1,))

    def add(self, a, b):
        p = self.p
        (an, ad), (bn, bd) = a, b
        return self.frac(padd(pmul(an, bd, p), pmul(bn, ad, p), p), pmul(ad, bd, p))

    def neg(self, a):
        return (pneg(a[0], self.p), a[1])

    def mul(self, a, b):
        p = self.p
        return self.frac(pmul(a[0], b[0], p), pmul(a[1], b[1], p))

    def inv(self, a):
        if not a[0]:
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        return self.frac(a[1], a[0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        n %= self.p
        return ((n,), (1,)) if n else self.zero

    def pth_root(self, a):
        comps = self.pth_components(a)
        if any(c != self.zero for c in comps[1:]):
            return None
        return comps[0]

    def pth_components(self, a):
        """Return [c_0, ..., c_{p-1}] with a = sum t^i * c_i^p."""
        p = self.p
        num, den = a
        # a = num * den^(p-1) / den^p ; split the numerator by exponent mod p
        top = pmul(num, _ppow(den, p - 1, p), p)
        buckets = [[] for _ in range(p)]
        for e, c in enumerate(top):
            if c:
                bucket = buckets[e % p]
                while len(bucket) <= e // p:
                    bucket.append(0)
                bucket[e // p] = c
        return [self.frac(ptrim(buckets[i]), den) for i in range(p)]

    def elements(self):
        raise UnsupportedKindError("%r is infinite" % self)

    def random_element(self, rng, max_deg=3):
        num = ptrim([rng.randrange(self.p) for _ in range(max_deg + 1)])
        den = ()
        while not den:
            den = ptrim([rng.randrange(self.p) for _ in range(max_deg + 1)])
        return self.frac(num, den)

    @property
    def pth_basis(self):
        return [self.frac(ppow_var(i), (1,)) for i in range(self.p)]

    def to_str(self, a):
        num, den = a
        ns = poly_str(num, self.var)
        if den == (1,):
            return ns
        ns = "(%s)" % ns if ("+" in ns or len(ptrim(num)) > 1) else ns
        ds = poly_str(den, self.var)
        ds = "(%s)" % ds if "+" in ds else ds
        return "%s/%s" % (ns, ds)


def _ppow(a, e, p):
    out = (1,)
    for _ in range(e):
        out = pmul(out, a, p)
    return out


class ExtensionField(Ring):
    """GF(p^m) = GF(p)[u]/(f); elements are length-m coefficient tuples."""

    kind = "extension"
    is_field = True

    def __init__(self, p, m, var="u"):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if m < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.m = m
        self.var = var
        self.modulus = find_irreducible(p, m) if m > 1 else (0, 1)
        self.zero = (0,) * m
        self.one = tuple([1 % p] + [0] * (m - 1))

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.m)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField)
                and other.p == self.p and other.m == self.m)

    def __hash__(self):
        return hash(("ext", self.p, self.m))

    def _pad(self, c):
        c = list(ptrim(c))
        return tuple(c + [0] * (self.m - len(c)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = pmul(ptrim(a), ptrim(b), self.p)
        _, r = pdivmod(prod, self.modulus, self.p)
        return self._pad(r)

    def inv(self, a):
        if not ptrim(a):
            raise ZeroDivisionError("inverse of 0 in %r" % self)
        # extended Euclid on (a, modulus)
        p = self.p
        r0, r1 = ptrim(a), self.modulus
        s0, s1 = (1,), ()
        while r1:
            q, r = pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        lead_inv = pow(r0[-1], p - 2, p)
        s0 = tuple((c * lead_inv) % p for c in s0)
        _, s0 = pdivmod(s0, self.modulus, p)
        return self._pad(s0)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return self._pad(((n % self.p),))

    def frobenius(self, a):
        return self.pow_int(a, self.p)

    def pth_root(self, a):
        out = a
        for _ in range(self.m - 1):
            out = self.frobenius(out)
        return out

    def pth_components(self, a):
        return [self.pth_root(a)]

    @property
    def pth_basis(self):
        return [self.one]

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.m):
            yield tup

    def order(self):
        return self.p ** self.m

    def random_element(self, rng):
        return tuple(rng.randrange(self.p) for _ in range(self.m))

    def to_str(self, a):
        return poly_str(ptrim(a), self.var)


class PolynomialRing(Ring):
    """Multivariate polynomials in graded-lex order over any of the above.

    Elements are tuples of (exponent-tuple, coefficient) pairs with nonzero
    coefficients, sorted descending by (total degree, exponents).  Supports
    ring operations and equality, no division.
    """

    kind = "coordinate-ring"
    is_field = False

    def __init__(self, base, varnames):
        self.base = base
        self.varnames = tuple(varnames)
        self.nvars = len(self.varnames)
        self.p = base.p
        self.zero = ()
        self.one = (((0,) * self.nvars, base.one),)

    def __repr__(self):
        return "%r[%s]" % (self.base, ", ".join(self.varnames))

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing)
                and other.base == self.base and other.varnames == self.varnames)

    def __hash__(self):
        return hash(("polyring", self.base, self.varnames))

    @staticmethod
    def _key(exps):
        return (sum(exps), exps)

    def _canon(self, terms):
        return tuple(sorted(
            ((e, c) for e, c in terms.items() if not self.base.is_zero(c)),
            key=lambda t: self._key(t[0]), reverse=True))

    def embed(self, c):
        if self.base.is_zero(c):
            return ()
        return (((0,) * self.nvars, c),)

    def var(self, i):
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return ((exps, self.base.one),)

    def add(self, a, b):
        terms = dict(a)
        for e, c in b:
            terms[e] = self.base.add(terms.get(e, self.base.zero), c)
        return self._canon(terms)

    def neg(self, a):
        return tuple((e, self.base.neg(c)) for e, c in a)

    def mul(self, a, b):
        terms = {}
        for ea, ca in a:
            for eb, cb in b:
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = self.base.mul(ca, cb)
                if e in terms:
                    terms[e] = self.base.add(terms[e], prod)
                else:
                    terms[e] = prod
        return self._canon(terms)

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def scale(self, a, c):
        if self.base.is_zero(c):
            return ()
        return self._canon({e: self.base.mul(cc, c) for e, cc in a})

    def univariate_coeff(self, a, d):
        """Coefficient of var^d; only for univariate rings."""
        if self.nvars != 1:
            raise ValueError("univariate_coeff needs a univariate ring")
        for e, c in a:
            if e[0] == d:
                return c
        return self.base.zero

    def evaluate(self, a, values):
        """Evaluate at base-ring values (full specialization)."""
        out = self.base.zero
        for e, c in a:
            term = c
            for v, exp in zip(values, e):
                term = self.base.mul(term, self.base.pow_int(v, exp))
            out = self.base.add(out, term)
        return out

    def random_element(self, rng, max_deg=2):
        terms = {}
        for _ in range(3):
            e = tuple(rng.randrange(max_deg + 1) for _ in range(self.nvars))
            terms[e] = self.base.random_element(rng)
        return self._canon(terms)

    def to_str(self, a):
        if not a:
            return "0"
        parts = []
        for e, c in a:
            factors = []
            cs = self.base.to_str(c)
            if any(e):
                if cs != "1":
                    factors.append("(%s)" % cs if ("+" in cs or "/" in cs) else cs)
                for name, exp in zip(self.varnames, e):
                    if exp == 1:
                        factors.append(name)
                    elif exp > 1:
                        factors.append("%s^%d" % (name, exp))
            else:
                factors.append("(%s)" % cs if "+" in cs else cs)
            parts.append("*".join(factors))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# pth root (public op) and base-change homomorphisms
# ---------------------------------------------------------------------------

def pth_root(field, x):
    """r with r^p = x in the same field, or None.  Field kinds only."""
    if not field.is_field:
        raise UnsupportedKindError("pth_root needs a field, got %r" % field)
    return field.pth_root(x)


class FieldHom:
    """An injective ring homomorphism between scalar domains."""

    def __init__(self, source, target, fn, description):
        self.source = source
        self.target = target
        self._fn = fn
        self.description = description

    def __call__(self, x):
        return self._fn(x)

    def __repr__(self):
        return "FieldHom(%s)" % self.description

    def compose(self, other):
        """self after other (other first)."""
        if other.target != self.source:
            raise ValueError("homomorphisms do not compose")
        return FieldHom(other.source, self.target,
                        lambda x: self(other(x)),
                        "%s ; %s" % (other.description, self.description))


def base_change_map(source, target, m=0):
    """Transport map between scalar domains.

    GF(p)(t) -> GF(p)(s) sends t to s^(p^m); GF(p) embeds into GF(p),
    GF(p^m) or GF(p)(t) with the identity rule (m must be 0).
    """
    if source.p != target.p:
        raise ValueError("incompatible characteristics: %r vs %r" % (source, target))
    p = source.p
    if isinstance(source, PrimeField):
        if m != 0:
            raise ValueError("prime-field base change takes the identity rule")
        if isinstance(target, PrimeField):
            return FieldHom(source, target, lambda x: x, "id on GF(%d)" % p)
        if isinstance(target, ExtensionField):
            return FieldHom(source, target, target.from_int,
                            "GF(%d) -> GF(%d^%d)" % (p, p, target.m))
        if isinstance(target, RationalFunctionField):
            return FieldHom(source, target, target.from_int,
                            "GF(%d) -> %r" % (p, target))
        raise ValueError("unsupported target %r" % target)
    if isinstance(source, RationalFunctionField):
        if not isinstance(target, RationalFunctionField):
            raise ValueError("unsupported target %r" % target)
        q = p ** m
        image = ppow_var(q)

        def fn(x):
            num, den = x
            return target.frac(psubst(num, image, p), psubst(den, image, p))

        return FieldHom(source, target, fn,
                        "%s -> %s, %s -> %s^%d" % (source.var, target.var,
                                                   source.var, target.var, q))
    raise ValueError("unsupported source %r" % source)
