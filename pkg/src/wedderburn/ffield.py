"""Exact arithmetic over F_p and F_{p^k}, dense polynomials, factorization,
and linear algebra.

Field elements are coefficient vectors modulo a monic irreducible modulus
found by seeded search; there are no Conway-polynomial tables and no
discrete-log tables.  Polynomial factorization runs the classical pipeline:
squarefree split via gcd with the derivative (with p-th root extraction in
characteristic p), distinct-degree split via iterated Frobenius, and seeded
Cantor-Zassenhaus equal-degree splitting.  Row reduction and kernels are
computed in exact field arithmetic; rank() additionally has a vectorized
path that rewrites each entry as its k x k multiplication matrix over F_p
and eliminates modulo p with numpy int64 arithmetic.
"""

from __future__ import annotations

import random
from functools import lru_cache

import numpy as np

__all__ = [
    "is_prime",
    "FieldSpec",
    "FieldElement",
    "Polynomial",
    "MatrixFq",
    "make_field",
    "factor",
    "minpoly",
    "minpoly_operator",
    "poly_gcd",
    "poly_lcm",
]

QMAX_BITS = 63  # p**k must stay below 2**63

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for sp in _MR_WITNESSES:
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """The field F_q, q = p**k, presented as F_p[x] modulo a monic irreducible
    polynomial of degree k.  For k = 1 the modulus is x itself and elements
    are length-1 coefficient vectors."""

    __slots__ = ("p", "k", "q", "modulus", "_pow_reds", "_zero", "_one")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p < 5:
            raise ValueError(f"p = {p} is below the supported minimum of 5")
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        if p**k >= 2**QMAX_BITS:
            raise ValueError(f"q = {p}^{k} exceeds the 2^{QMAX_BITS} bound")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        # x^d mod modulus for d = k .. 2k-2, used to fold products back below degree k
        reds = []
        cur = tuple((-modulus[i]) % p for i in range(k))
        for _ in range(k - 1):
            reds.append(cur)
            top = cur[-1]
            shifted = [0] + list(cur[:-1])
            if top:
                for i in range(k):
                    shifted[i] = (shifted[i] + top * reds[0][i]) % p
            cur = tuple(shifted)
        self._pow_reds = reds if k > 1 else []
        self._zero = FieldElement(self, (0,) * k)
        self._one = FieldElement(self, (1,) + (0,) * (k - 1))
        if k > 1 and not _is_irreducible_mod_p(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")

    # tuple-level arithmetic -------------------------------------------------

    def add_t(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub_t(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg_t(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul_t(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        if k == 2:
            a0, a1 = a
            b0, b1 = b
            c0 = a0 * b0
            c1 = a0 * b1 + a1 * b0
            c2 = (a1 * b1) % p
            if c2:
                r0, r1 = self._pow_reds[0]
                c0 += c2 * r0
                c1 += c2 * r1
            return (c0 % p, c1 % p)
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        for d in range(2 * k - 2, k - 1, -1):
            c = conv[d] % p
            if c:
                red = self._pow_reds[d - k]
                for i in range(k):
                    conv[i] += c * red[i]
        return tuple(conv[i] % p for i in range(k))

    def pow_t(self, a, e: int):
        if e < 0:
            return self.pow_t(self.inv_t(a), -e)
        result = self._one.coeffs
        base = a
        while e:
            if e & 1:
                result = self.mul_t(result, base)
            base = self.mul_t(base, base)
            e >>= 1
        return result

    def inv_t(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        if self.k == 1:
            return (pow(a[0], -1, self.p),)
        return self.pow_t(a, self.q - 2)

    def shift_t(self, a):
        """Coefficients of a * x reduced below degree k."""
        p, k = self.p, self.k
        if k == 1:
            # the modulus is x itself, so multiplying by x kills everything
            return ((a[0] * ((-self.modulus[0]) % p)) % p,)
        top = a[-1]
        out = [0] + list(a[:-1])
        if top:
            red = self._pow_reds[0]
            for i in range(k):
                out[i] = (out[i] + top * red[i]) % p
        return tuple(out)

    # element constructors ---------------------------------------------------

    @property
    def zero(self) -> "FieldElement":
        return self._zero

    @property
    def one(self) -> "FieldElement":
        return self._one

    def scalar(self, n: int) -> "FieldElement":
        """Image of the integer n under the canonical map Z -> F_q."""
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec is not self and value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return self.scalar(value)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.k:
            raise ValueError(f"coefficient vector must have length {self.k}")
        return FieldElement(self, coeffs)

    def from_index(self, idx: int) -> "FieldElement":
        """The element whose little-endian base-p digit vector is idx in 0..q-1."""
        if not 0 <= idx < self.q:
            raise ValueError(f"index {idx} out of range 0..{self.q - 1}")
        coeffs = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def iter_elements(self):
        for idx in range(self.q):
            yield self.from_index(idx)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}; mod {self.modulus})"


class FieldElement:
    """An element of F_{p^k}: a length-k coefficient vector over F_p."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, int):
            return self.spec.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add_t(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_t(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub_t(o.coeffs, self.coeffs))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg_t(self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_t(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_t(self.coeffs, self.spec.inv_t(o.coeffs)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul_t(o.coeffs, self.spec.inv_t(self.coeffs)))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow_t(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv_t(self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.spec.scalar(other).coeffs
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.spec.p, self.spec.k))

    def index(self) -> int:
        """Little-endian base-p encoding, the inverse of FieldSpec.from_index."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.spec.p + c
        return out

    def __repr__(self) -> str:
        if self.spec.k == 1:
            return str(self.coeffs[0])
        return str(list(self.coeffs))


def _is_irreducible_mod_p(modulus: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over the prime field, tested on
    raw coefficient lists (used to validate a FieldSpec modulus)."""
    prime = _prime_field(p)
    f = Polynomial.from_coeffs(prime, [prime.scalar(c) for c in modulus])
    return f.is_irreducible()


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FieldSpec:
    return FieldSpec(p, 1, (0, 1))


def make_field(p: int, k: int = 1, seed: int = 0) -> FieldSpec:
    """Build F_{p^k} with a seeded search for a monic irreducible modulus.

    Different seeds may select different moduli; all decomposition outputs
    are independent of that choice.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if p < 5:
        raise ValueError(f"p = {p} is below the supported minimum of 5")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if p**k >= 2**QMAX_BITS:
        raise ValueError(f"q = {p}^{k} exceeds the 2^{QMAX_BITS} bound")
    if k == 1:
        return _prime_field(p)
    prime = _prime_field(p)
    rng = random.Random(f"modulus:{seed}:{p}:{k}")
    for _ in range(4000):
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        f = Polynomial.from_coeffs(prime, [prime.scalar(c) for c in coeffs])
        if f.is_irreducible():
            return FieldSpec(p, k, tuple(coeffs))
    raise RuntimeError(f"no irreducible modulus of degree {k} over F_{p} found (bug)")


class Polynomial:
    """Dense polynomial over F_q; coefficient 0 is the constant term and
    trailing zeros are trimmed (the zero polynomial has no coefficients)."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, spec) -> "Polynomial":
        return cls(spec, ())

    @classmethod
    def one(cls, spec) -> "Polynomial":
        return cls(spec, (spec.one,))

    @classmethod
    def x(cls, spec) -> "Polynomial":
        return cls(spec, (spec.zero, spec.one))

    @classmethod
    def from_coeffs(cls, spec, coeffs) -> "Polynomial":
        return cls(spec, [spec.element(c) for c in coeffs])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> "FieldElement":
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == self.spec.one:
            return self
        inv = lc.inverse()
        return Polynomial(self.spec, [c * inv for c in self.coeffs])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.spec, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = list(self.coeffs) + [self.spec.zero] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return Polynomial(self.spec, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.spec, [-c for c in self.coeffs])

    def _tuples(self) -> list[tuple[int, ...]]:
        return [c.coeffs for c in self.coeffs]

    @classmethod
    def _from_tuples(cls, spec, tuples) -> "Polynomial":
        return cls(spec, [FieldElement(spec, t) for t in tuples])

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, FieldElement):
            return Polynomial(self.spec, [c * other for c in self.coeffs])
        return Polynomial._from_tuples(self.spec, _poly_mul_t(self.spec, self._tuples(), other._tuples()))

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self * other
        return NotImplemented

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo, rem = _poly_divmod_t(self.spec, self._tuples(), other._tuples())
        return Polynomial._from_tuples(self.spec, quo), Polynomial._from_tuples(self.spec, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Polynomial":
        spec = self.spec
        result = [spec.one.coeffs]
        base = self._tuples()
        while e:
            if e & 1:
                result = _poly_mul_t(spec, result, base)
            base = _poly_mul_t(spec, base, base)
            e >>= 1
        return Polynomial._from_tuples(spec, result)

    def pow_mod(self, e: int, m: "Polynomial") -> "Polynomial":
        spec = self.spec
        mt = m._tuples()
        if not mt:
            raise ZeroDivisionError("polynomial modulus is zero")
        inv_lc = spec.inv_t(mt[-1])
        result = _poly_divmod_t(spec, [spec.one.coeffs], mt, inv_lc)[1]
        base = _poly_divmod_t(spec, self._tuples(), mt, inv_lc)[1]
        while e:
            if e & 1:
                result = _poly_divmod_t(spec, _poly_mul_t(spec, result, base), mt, inv_lc)[1]
            base = _poly_divmod_t(spec, _poly_mul_t(spec, base, base), mt, inv_lc)[1]
            e >>= 1
        return Polynomial._from_tuples(spec, result)

    def derivative(self) -> "Polynomial":
        spec = self.spec
        return Polynomial(spec, [spec.scalar(i) * c for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: "FieldElement") -> "FieldElement":
        acc = self.spec.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def pth_root(self) -> "Polynomial":
        """For f with zero derivative, the unique g with g**p = f."""
        spec = self.spec
        p = spec.p
        root_exp = spec.q // p  # a -> a**(q/p) inverts the Frobenius a -> a**p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p == 0:
                out.append(c**root_exp)
            elif c:
                raise ValueError("polynomial is not a p-th power")
        return Polynomial(spec, out)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def xgcd(self, other: "Polynomial"):
        """Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic."""
        spec = self.spec
        r0, r1 = self, other
        s0, s1 = Polynomial.one(spec), Polynomial.zero(spec)
        t0, t1 = Polynomial.zero(spec), Polynomial.one(spec)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        inv = r0.leading().inverse()
        return r0 * inv, s0 * inv, t0 * inv

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        d = self.derivative()
        if d.is_zero():
            return self.degree() == 0
        return self.gcd(d).degree() == 0

    def frobenius_iterates(self, count: int) -> list["Polynomial"]:
        """[x^(q^1), ..., x^(q^count)] all reduced modulo self."""
        out = []
        cur = Polynomial.x(self.spec)
        for _ in range(count):
            cur = cur.pow_mod(self.spec.q, self)
            out.append(cur)
        return out

    def is_irreducible(self) -> bool:
        """Rabin's test: x^(q^n) = x mod f, and x^(q^(n/t)) - x coprime to f
        for every prime t dividing n = deg f."""
        n = self.degree()
        if n <= 0:
            return False
        if n == 1:
            return True
        frob = self.frobenius_iterates(n)
        xpoly = Polynomial.x(self.spec)
        if frob[-1] % self != xpoly % self:
            return False
        for t in _prime_divisors(n):
            g = (frob[n // t - 1] - xpoly).gcd(self)
            if g.degree() != 0:
                return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(tuple(c.coeffs for c in self.coeffs))

    def sort_key(self):
        return (self.degree(), tuple(c.index() for c in self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly[0]"
        terms = []
        for i in range(self.degree(), -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = repr(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*x" if cs != "1" else "x")
            else:
                terms.append(f"{cs}*x^{i}" if cs != "1" else f"x^{i}")
        return "Poly[" + " + ".join(terms) + "]"


def _poly_mul_t(spec: FieldSpec, a, b):
    """Product of two coefficient-tuple lists, trimmed."""
    if not a or not b:
        return []
    mul_t, add_t = spec.mul_t, spec.add_t
    zero = spec.zero.coeffs
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if any(ai):
            for j, bj in enumerate(b):
                if any(bj):
                    out[i + j] = add_t(out[i + j], mul_t(ai, bj))
    while out and not any(out[-1]):
        out.pop()
    return out


def _poly_divmod_t(spec: FieldSpec, num, den, inv_lc=None):
    """Long division on coefficient-tuple lists; den must be trimmed nonzero."""
    dd = len(den) - 1
    rem = list(num)
    if len(rem) - 1 < dd:
        return [], rem
    mul_t, sub_t = spec.mul_t, spec.sub_t
    if inv_lc is None:
        inv_lc = spec.inv_t(den[-1])
    quo = [spec.zero.coeffs] * (len(rem) - dd)
    for i in range(len(rem) - 1 - dd, -1, -1):
        c = mul_t(rem[i + dd], inv_lc)
        if any(c):
            quo[i] = c
            for j, b in enumerate(den):
                if any(b):
                    rem[i + j] = sub_t(rem[i + j], mul_t(c, b))
    del rem[dd:]
    while rem and not any(rem[-1]):
        rem.pop()
    return quo, rem


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    return a.gcd(b)


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.spec)
    return ((a * b) // a.gcd(b)).monic()


# factorization ---------------------------------------------------------------


def factor(f: Polynomial, seed: int = 0) -> list[tuple[Polynomial, int]]:
    """Full factorization of a nonzero polynomial into monic irreducibles with
    multiplicities, sorted by (degree, coefficient encoding).  The product of
    the factors with multiplicities equals f up to its leading coefficient."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(f"factor:{seed}:{f.spec.p}:{f.spec.k}:{f.degree()}")
    out = _factor_monic(f.monic(), rng)
    out.sort(key=lambda t: t[0].sort_key())
    return out


def _factor_monic(f: Polynomial, rng: random.Random) -> list[tuple[Polynomial, int]]:
    if f.degree() <= 0:
        return []
    der = f.derivative()
    if der.is_zero():
        root = f.pth_root()
        return [(g, m * f.spec.p) for g, m in _factor_monic(root, rng)]
    c = f.gcd(der)
    w = f // c if c.degree() > 0 else f
    # w is the product of the distinct irreducible factors whose multiplicity
    # in f is not divisible by p
    out = []
    rest = f
    for g in _factor_squarefree(w, rng):
        m = 0
        while True:
            quo, rem = divmod(rest, g)
            if not rem.is_zero():
                break
            rest = quo
            m += 1
        out.append((g, m))
    if rest.degree() > 0:
        # what is left is a p-th power (all multiplicities divisible by p)
        out.extend(_factor_monic(rest, rng))
    return out


def _factor_squarefree(f: Polynomial, rng: random.Random) -> list[Polynomial]:
    """Irreducible factors of a monic squarefree polynomial."""
    if f.degree() <= 0:
        return []
    spec = f.spec
    factors: list[Polynomial] = []
    xpoly = Polynomial.x(spec)
    rem = f
    frob = xpoly
    d = 0
    while rem.degree() > 0:
        d += 1
        if 2 * d > rem.degree():
            factors.append(rem)
            break
        frob = frob.pow_mod(spec.q, rem)
        g = (frob - xpoly).gcd(rem)
        if g.degree() > 0:
            factors.extend(_equal_degree_split(g, d, rng))
            rem = rem // g
            frob = frob % rem
    return factors


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus: split a monic squarefree product of degree-d
    irreducibles (q odd)."""
    if f.degree() == d:
        return [f]
    spec = f.spec
    n = f.degree()
    half = (spec.q**d - 1) // 2
    while True:
        a = Polynomial(spec, [spec.random_element(rng) for _ in range(n)])
        if a.degree() < 1:
            continue
        g = a.gcd(f)
        if 0 < g.degree() < n:
            break
        b = a.pow_mod(half, f) - Polynomial.one(spec)
        g = b.gcd(f)
        if 0 < g.degree() < n:
            break
    return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


# Krylov minimal polynomials ---------------------------------------------------


def minpoly(spec: FieldSpec, apply, v, dim: int) -> Polynomial:
    """Monic minimal polynomial m of a linear operator relative to the start
    vector v: the least-degree monic m with m(operator) applied to v = 0.

    ``apply`` maps a length-dim list of field elements to another; the Krylov
    sequence v, Av, A^2 v, ... is reduced incrementally until dependence.
    """
    v = [spec.element(c) for c in v]
    if len(v) != dim:
        raise ValueError("start vector has wrong dimension")
    rows: list[tuple[int, list[FieldElement], list[FieldElement]]] = []
    raw = v
    for step in range(dim + 1):
        w = list(raw)
        combo = [spec.zero] * (dim + 1)
        combo[step] = spec.one
        for piv, rvec, rcombo in rows:
            c = w[piv]
            if c:
                for i in range(dim):
                    w[i] = w[i] - c * rvec[i]
                for i in range(dim + 1):
                    combo[i] = combo[i] - c * rcombo[i]
        piv = next((i for i, c in enumerate(w) if c), None)
        if piv is None:
            return Polynomial(spec, combo[: step + 1])
        inv = w[piv].inverse()
        w = [c * inv for c in w]
        combo = [c * inv for c in combo]
        rows.append((piv, w, combo))
        raw = list(apply(raw))
        if len(raw) != dim:
            raise ValueError("operator changed the dimension")
    raise AssertionError("no linear dependence within dim+1 Krylov steps (operator not linear?)")


def minpoly_operator(spec: FieldSpec, apply, dim: int) -> Polynomial:
    """Minimal polynomial of the operator itself: the lcm of per-vector
    minimal polynomials over the standard basis, with early exit at degree dim."""
    acc = Polynomial.one(spec)
    for i in range(dim):
        e = [spec.zero] * dim
        e[i] = spec.one
        acc = poly_lcm(acc, minpoly(spec, apply, e, dim))
        if acc.degree() == dim:
            break
    return acc


# exact linear algebra ---------------------------------------------------------


class MatrixFq:
    """Dense matrix over F_q with exact row reduction, kernel, and rank."""

    __slots__ = ("spec", "nrows", "ncols", "rows")

    def __init__(self, spec: FieldSpec, rows):
        self.spec = spec
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, spec, nrows: int, ncols: int) -> "MatrixFq":
        z = spec.zero
        return cls(spec, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, spec, n: int) -> "MatrixFq":
        m = cls.zeros(spec, n, n)
        for i in range(n):
            m.rows[i][i] = spec.one
        return m

    def copy(self) -> "MatrixFq":
        return MatrixFq(self.spec, self.rows)

    def row_reduce(self) -> tuple["MatrixFq", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        out = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            pr = next((i for i in range(r, self.nrows) if out[i][c]), None)
            if pr is None:
                continue
            out[r], out[pr] = out[pr], out[r]
            inv = out[r][c].inverse()
            out[r] = [x * inv for x in out[r]]
            prow = out[r]
            for i in range(self.nrows):
                if i != r and out[i][c]:
                    f = out[i][c]
                    row = out[i]
                    out[i] = [row[j] - f * prow[j] for j in range(self.ncols)]
            pivots.append(c)
            r += 1
        return MatrixFq(self.spec, out), tuple(pivots)

    def kernel(self) -> list[list["FieldElement"]]:
        """Basis of the right null space, one vector per free column."""
        rref, pivots = self.row_reduce()
        spec = self.spec
        pivot_set = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [spec.zero] * self.ncols
            vec[free] = spec.one
            for r, pc in enumerate(pivots):
                vec[pc] = -rref.rows[r][free]
            basis.append(vec)
        return basis

    def rank(self) -> int:
        """Exact rank.  When p fits in int64 arithmetic the matrix is rewritten
        over F_p (each entry becomes its k x k multiplication matrix) and
        eliminated with vectorized numpy operations; rank over F_q is the F_p
        rank divided by k."""
        if self.nrows == 0 or self.ncols == 0:
            return 0
        p, k = self.spec.p, self.spec.k
        if p >= 2**31:
            return len(self.row_reduce()[1])
        if k == 1:
            arr = np.array([[e.coeffs[0] for e in row] for row in self.rows], dtype=np.int64)
            return _rank_mod_p(arr, p)
        arr = np.zeros((k * self.nrows, k * self.ncols), dtype=np.int64)
        spec = self.spec
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                if not e:
                    continue
                col = e.coeffs
                for c in range(k):
                    for r in range(k):
                        arr[k * i + r, k * j + c] = col[r]
                    col = spec.shift_t(col)
        rk = _rank_mod_p(arr, p)
        if rk % k:
            raise AssertionError("blown-up rank not divisible by extension degree (bug)")
        return rk // k

    def __repr__(self) -> str:
        return f"MatrixFq({self.nrows}x{self.ncols} over {self.spec!r})"


def _rank_mod_p(arr: np.ndarray, p: int) -> int:
    """In-place Gaussian elimination rank of an int64 matrix modulo p."""
    a = arr % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            sel = r + 1 + below
            a[sel, c:] = (a[sel, c:] - np.outer(a[sel, c], a[r, c:])) % p
        r += 1
    return r
