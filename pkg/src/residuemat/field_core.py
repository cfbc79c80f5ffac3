"""Finite field construction and the exponent-index encoding of roots of unity.

A field GF(p^m) is built deterministically: the modulus is the first monic
irreducible polynomial of degree m over GF(p) in the lexicographic order of
coefficient vectors (constant coefficient most significant), and the
multiplicative generator g is the smallest element of order q - 1.  For
m = 1 the modulus is the degree-1 identity polynomial and the field is the
plain prime field.

Field elements are encoded as integers in [0, q): the base-p digits of the
code are the coefficients of the residue, least significant digit = constant
term.  Prime-field elements are therefore just integers mod p.

A d-th root of unity is handled as an exponent index: index k stands for
zeta^k with zeta = g^((q-1)/d).  Everything downstream works with these
indices mod d in exact integer arithmetic; no complex numbers appear
anywhere.
"""

import math
from typing import NamedTuple

DEFAULT_MAX_Q = 1 << 20

# Full q*q addition tables are only built for small extension fields;
# larger ones fall back to digit-wise addition.
_ADD_TABLE_MAX_Q = 512


class RootIndex(NamedTuple):
    """Exponent k of a d-th root of unity: stands for zeta^k, 0 <= k < d."""

    k: int
    d: int

    def conjugate(self) -> "RootIndex":
        """Complex conjugation: inversion of the root, i.e. negation mod d."""
        return RootIndex((-self.k) % self.d, self.d)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _prime_factors(n: int) -> list:
    """Distinct prime factors by trial division (n stays small here)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _fp_rem(r, b, p):
    """Remainder of r by monic b, both ascending coefficient lists over F_p."""
    r = list(r)
    while len(r) >= len(b):
        c = r[-1]
        if c:
            off = len(r) - len(b)
            for i in range(len(b) - 1):
                r[off + i] = (r[off + i] - c * b[i]) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _fp_irreducible(a, p) -> bool:
    """Trial division over F_p; only used for modulus search at build time."""
    deg = len(a) - 1
    for ddeg in range(1, deg // 2 + 1):
        for code in range(p**ddeg):
            div, x = [], code
            for _ in range(ddeg):
                x, digit = divmod(x, p)
                div.append(digit)
            div.append(1)
            if not _fp_rem(a, div, p):
                return False
    return True


class Field:
    """An immutable GF(p^m) with exp/log tables for its fixed generator.

    All operations take and return integer element codes.  Instances are
    safe to share across threads once constructed.
    """

    def __init__(self, p: int, m: int, max_q: int | None = None):
        if max_q is None:
            max_q = DEFAULT_MAX_Q
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > max_q:
            raise ValueError(f"q = p^m = {q} exceeds the configured bound {max_q}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = self._find_modulus()
        self._addt = None
        self._negt = None
        if m > 1:
            self._negt = [self._neg_digitwise(a) for a in range(q)]
            if q <= _ADD_TABLE_MAX_Q:
                self._addt = [
                    self._add_digitwise(a, b) for a in range(q) for b in range(q)
                ]
        self.g = self._find_generator()
        self.exp, self.log = self._build_tables()

    # -- construction helpers ------------------------------------------

    def _find_modulus(self):
        if self.m == 1:
            return (0, 1)
        p, m = self.p, self.m
        for code in range(p**m):
            tail, x = [], code
            for _ in range(m):
                x, digit = divmod(x, p)
                tail.append(digit)
            # lexicographic with constant coefficient most significant
            cand = list(reversed(tail)) + [1]
            if _fp_irreducible(cand, p):
                return tuple(cand)
        raise AssertionError("no irreducible modulus found")  # unreachable

    def _add_digitwise(self, a: int, b: int) -> int:
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * mult
            mult *= p
        return out

    def _neg_digitwise(self, a: int) -> int:
        p = self.p
        out, mult = 0, 1
        for _ in range(self.m):
            a, da = divmod(a, p)
            out += (-da % p) * mult
            mult *= p
        return out

    def _mul_raw(self, a: int, b: int) -> int:
        """Product via digit convolution and modulus reduction; table-free."""
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da = [0] * m
        db = [0] * m
        for i in range(m):
            a, da[i] = divmod(a, p)
            b, db[i] = divmod(b, p)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for pos in range(2 * m - 2, m - 1, -1):
            c = prod[pos]
            if c:
                off = pos - m
                for i in range(m):
                    prod[off + i] = (prod[off + i] - c * mod[i]) % p
        out = 0
        for digit in reversed(prod[:m]):
            out = out * p + digit
        return out

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._mul_raw(out, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        n = self.q - 1
        factors = _prime_factors(n)
        for x in range(1, self.q):
            if all(self._pow_raw(x, n // f) != 1 for f in factors):
                return x
        raise AssertionError("no generator found")  # unreachable

    def _build_tables(self):
        n = self.q - 1
        exp = [0] * max(n, 1)
        log = [-1] * self.q
        y = 1
        for i in range(max(n, 1)):
            exp[i] = y
            log[y] = i
            y = self._mul_raw(y, self.g)
        if y != 1:
            raise AssertionError("generator order mismatch")  # unreachable
        return exp, log

    # -- arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self._addt is not None:
            return self._addt[a * self.q + b]
        return self._add_digitwise(a, b)

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self._negt[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent; use inv() first")
        if a == 0:
            return 1 if e == 0 else 0
        return self.exp[self.log[a] * (e % (self.q - 1)) % (self.q - 1)]

    # -- element coding --------------------------------------------------

    def element_from_coeffs(self, coeffs) -> int:
        """Code of the element with the given coefficient vector (constant first)."""
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError(f"at most {self.m} coefficients expected")
        out = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} out of range [0, {self.p})")
            out = out * self.p + c
        return out

    def coeffs_of(self, a: int) -> tuple:
        """Length-m coefficient vector of an element code, constant term first."""
        if not 0 <= a < self.q:
            raise ValueError(f"element code {a} out of range [0, {self.q})")
        out = []
        for _ in range(self.m):
            a, digit = divmod(a, self.p)
            out.append(digit)
        return tuple(out)

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def __eq__(self, other):
        return (
            isinstance(other, Field) and self.p == other.p and self.m == other.m
        )

    def __hash__(self):
        return hash((self.p, self.m))

    def __repr__(self):
        if self.m == 1:
            return f"Field(GF({self.p}))"
        return f"Field(GF({self.p}^{self.m}))"


def field_build(p: int, m: int = 1, max_q: int | None = None) -> Field:
    """Construct GF(p^m) deterministically; same inputs give the same field."""
    return Field(p, m, max_q=max_q)


def root_index_of(field: Field, d: int, x: int) -> RootIndex:
    """Index k with x = zeta^k for zeta = g^((q-1)/d); errors if x not in mu_d."""
    _check_d(field, d)
    if not 1 <= x < field.q:
        raise ValueError(f"element code {x} is not a unit of {field!r}")
    step = (field.q - 1) // d
    k, rem = divmod(field.log[x], step)
    if rem:
        raise ValueError(f"element {x} is not a {d}-th root of unity")
    return RootIndex(k, d)


def index_to_element(field: Field, d: int, k: int) -> int:
    """Element code of zeta^k; inverse of root_index_of on mu_d."""
    _check_d(field, d)
    if not 0 <= k < d:
        raise ValueError(f"root index {k} out of range [0, {d})")
    return field.exp[k * ((field.q - 1) // d) % (field.q - 1)]


def _check_d(field: Field, d: int):
    if d < 1 or (field.q - 1) % d != 0:
        raise ValueError(f"d = {d} does not divide q - 1 = {field.q - 1}")


def unit_scalings(d: int):
    """The units mod d: the index rescalings that change the fixed isomorphism."""
    return [c for c in range(1, d + 1) if math.gcd(c, d) == 1]
