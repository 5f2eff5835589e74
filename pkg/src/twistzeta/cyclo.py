"""Exact arithmetic in cyclotomic fields and in the group of roots of unity.

Values are represented in the power basis 1, z, ..., z^(phi(M)-1) of Q(z) for
z a primitive M-th root of unity, with Fraction coefficients reduced modulo
the M-th cyclotomic polynomial.  This gives canonical representatives within
a fixed modulus; values with different moduli are compared after rebasing to
the lcm.  No floating point is used anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    count, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            count *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        count *= m - 1
    return count


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _int_poly_divexact(a, b):
    # exact division of integer polynomials, b monic-leading after sign fix
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(a[i + len(b) - 1], b[-1])
        assert r == 0, "non-exact cyclotomic division"
        out[i] = q
        for j, y in enumerate(b):
            a[i + j] -= q * y
    assert all(x == 0 for x in a), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant first."""
    if m == 1:
        return (-1, 1)
    # (x^m - 1) / prod_{d | m, d < m} Phi_d
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _int_poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _reduce_mod_phi(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in z_m (any degree) modulo Phi_m; pad to phi(m)."""
    phi = list(cyclotomic_polynomial(m))
    deg = len(phi) - 1
    c = list(coeffs)
    _trim_frac(c)
    for i in range(len(c) - 1, deg - 1, -1):
        q = c[i]  # phi is monic
        if q:
            for j, y in enumerate(phi):
                c[i - deg + j] -= q * y
        c.pop()
    c += [Fraction(0)] * (deg - len(c))
    return tuple(c)


def _trim_frac(c: list[Fraction]) -> None:
    while c and c[-1] == 0:
        c.pop()


class Cyclotomic:
    """An exact element of Q(z_m) in the reduced power basis."""

    __slots__ = ("m", "coeffs", "_min")

    def __init__(self, m: int, coeffs) -> None:
        if m < 1:
            raise ValueError("modulus must be a positive integer")
        self.m = m
        self.coeffs = _reduce_mod_phi([Fraction(x) for x in coeffs], m)
        self._min = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyclotomic":
        return Cyclotomic(1, [Fraction(q)])

    @staticmethod
    def zero() -> "Cyclotomic":
        return Cyclotomic(1, [0])

    @staticmethod
    def one() -> "Cyclotomic":
        return Cyclotomic(1, [1])

    @staticmethod
    def root(m: int, k: int = 1) -> "Cyclotomic":
        """z_m^k as an element of Q(z_m)."""
        k %= m
        raw = [Fraction(0)] * (k + 1)
        raw[k] = Fraction(1)
        return Cyclotomic(m, raw)

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.coeffs[0]

    def rebase(self, m2: int) -> "Cyclotomic":
        """Rewrite in Q(z_(m2)); m must divide m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError("can only rebase to a multiple modulus")
        step = m2 // self.m
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 or 1)
        for i, c in enumerate(self.coeffs):
            raw[i * step] = c
        return Cyclotomic(m2, raw)

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return None, None
        m = _lcm(self.m, other.m)
        return self.rebase(m), other.rebase(m)

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        out = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return Cyclotomic(a.m, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # extended euclid in Q[x] against Phi_m (irreducible over Q)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi, list(self.coeffs)
        _trim_frac(r1)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            _trim_frac(r1)
            if len(r1) == 1:
                break
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        c = r1[0]
        inv = [x / c for x in s1]
        return Cyclotomic(self.m, inv)

    def __truediv__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism z -> z^a (a coprime to the modulus)."""
        a %= self.m
        if gcd(a, self.m) != 1:
            raise ValueError("not a Galois exponent")
        mono = Cyclotomic.root(self.m, a)
        out = Cyclotomic(self.m, [0])
        for c in reversed(self.coeffs):
            out = out * mono + Cyclotomic.rational(c)
        return out

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, z -> z^(-1)."""
        if self.m == 1:
            return self
        return self.galois(self.m - 1)

    # -- comparisons and canonical form ---------------------------------

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.minimal_form())

    def minimal_form(self) -> tuple:
        """(d, coeffs) over the smallest cyclotomic field containing the value."""
        if self._min is not None:
            return self._min
        m = self.m
        best = None
        for d in sorted(_divisors(m)):
            fixers = [a for a in range(1, m + 1) if gcd(a, m) == 1 and a % d == 1 % d]
            if all(self.galois(a) == self for a in fixers):
                down = self._express_in(d)
                if down is not None:
                    best = (d, down)
                    break
        assert best is not None  # d = m always works
        self._min = best
        return best

    def _express_in(self, d: int):
        """Coefficients over the z_d power basis, or None if not in Q(z_d)."""
        if d == self.m:
            return self.coeffs
        cols = [Cyclotomic.root(d, 0).rebase(self.m).coeffs]
        for j in range(1, euler_phi(d)):
            cols.append(Cyclotomic.root(d, j).rebase(self.m).coeffs)
        return _solve_frac_columns(cols, list(self.coeffs))

    def sort_key(self) -> tuple:
        d, coeffs = self.minimal_form()
        return (d, tuple((c.numerator, c.denominator) for c in coeffs))

    def __repr__(self):
        d, coeffs = self.minimal_form()
        if d == 1:
            return f"Cyc({coeffs[0]})"
        terms = ",".join(str(c) for c in coeffs)
        return f"Cyc(z{d};{terms})"

    def to_json(self) -> dict:
        return {"m": self.m, "c": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @staticmethod
    def from_json(obj: dict) -> "Cyclotomic":
        return Cyclotomic(obj["m"], [Fraction(s) for s in obj["c"]])


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _frac_poly_divmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(out) - 1, -1, -1):
        q = a[i + len(b) - 1] / b[-1]
        out[i] = q
        if q:
            for j, y in enumerate(b):
                a[i + j] -= q * y
    del a[len(b) - 1:]
    _trim_frac(a)
    if not a:
        a = [Fraction(0)]
    return out, a


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for j, y in enumerate(b):
        a[j] -= y
    return a


def _solve_frac_columns(cols, target):
    """Solve sum x_j * cols[j] = target exactly; None if inconsistent."""
    nrows = len(target)
    ncols = len(cols)
    mat = [[cols[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if mat[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = mat[i][ncols]
    return tuple(x)


class RootOfUnity:
    """z_m^k, stored as the reduced fraction k/m (mod 1)."""

    __slots__ = ("m", "k")

    def __init__(self, m: int, k: int) -> None:
        if m < 1:
            raise ValueError("modulus must be positive")
        k %= m
        g = gcd(k, m) if k else m
        self.m = m // g
        self.k = k // g

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        m = _lcm(self.m, other.m)
        return RootOfUnity(m, self.k * (m // self.m) + other.k * (m // other.m))

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity(self.m, -self.k)

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.m, self.k * n)

    def order(self) -> int:
        return self.m

    def is_one(self) -> bool:
        return self.m == 1

    def q_part(self, q: int) -> "RootOfUnity":
        """The q-primary component under the CRT splitting of exponents."""
        v = 1
        m = self.m
        while m % q == 0:
            m //= q
            v *= q
        if v == 1:
            return RootOfUnity(1, 0)
        # 1/self.m = c/v + d/m with c*m + d*v = 1
        c = pow(m, -1, v)
        return RootOfUnity(v, self.k * c)

    def as_cyclotomic(self) -> Cyclotomic:
        return Cyclotomic.root(self.m, self.k)

    def exponent_in(self, modulus: int) -> int:
        """k' with value = z_modulus^(k'); modulus must be a multiple of the order."""
        if modulus % self.m:
            raise ValueError("order does not divide target modulus")
        return self.k * (modulus // self.m) % modulus

    def __eq__(self, other):
        return isinstance(other, RootOfUnity) and self.m == other.m and self.k == other.k

    def __hash__(self):
        return hash((self.m, self.k))

    def __repr__(self):
        return f"Rou({self.k}/{self.m})"

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k}


def as_root_of_unity(c: Cyclotomic):
    """The root of unity equal to c, or None.

    Roots of unity inside Q(z_m) have order dividing lcm(m, 2), so a bounded
    exhaustive search over those candidates decides the question.
    """
    bound = _lcm(c.m, 2)
    for k in range(bound):
        if c == Cyclotomic.root(bound, k):
            return RootOfUnity(bound, k)
    return None


def rou_qpart(w: RootOfUnity, q: int) -> RootOfUnity:
    return w.q_part(q)
