"""Exact scalar domains and exact linear algebra.

Four fields are provided behind one small protocol: the rationals Q, prime
fields F_p, the rational function field Q(q) in a formal variable q, and
cyclotomic fields Q(zeta_p).  Payloads are plain immutable hashable values
(Fraction, int, tuple pairs, Fraction tuples); all arithmetic goes through
the domain object, which is a stateless singleton per field.

Dense univariate polynomials over Z are represented as tuples of ints in
ascending degree with no trailing zeros; the zero polynomial is ().
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

# ---------------------------------------------------------------------------
# dense integer polynomial kernels


def ptrim(c):
    """Strip trailing zeros, return a tuple."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return ptrim(out)


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return ptrim(out)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def pscale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def pcontent(a):
    """gcd of coefficients, nonnegative; 0 for the zero polynomial."""
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def pprimitive(a):
    """Divide out the content.  Sign of the leading coefficient is kept."""
    g = pcontent(a)
    if g <= 1:
        return a
    return tuple(x // g for x in a)


def ppseudo_rem(a, b):
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    if not b:
        raise DomainError("pseudo-remainder by zero polynomial")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        a = [lb * x for x in a]
        for i in range(db + 1):
            a[da - db + i] -= la * b[i]
        a = list(ptrim(a))
    return tuple(a)


def pgcd(a, b):
    """Primitive gcd in Z[x] with positive leading coefficient."""
    a, b = pprimitive(a), pprimitive(b)
    while b:
        a, b = b, pprimitive(ppseudo_rem(a, b))
    if a and a[-1] < 0:
        a = pneg(a)
    return a


def pdiv_exact(a, b):
    """Quotient of a by b when b divides a in Q[x] and both are in Z[x].

    The quotient has integer coefficients whenever b is primitive (Gauss);
    exactness is asserted.
    """
    if not b:
        raise DomainError("division by zero polynomial")
    if not a:
        return ()
    q = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    db, lb = len(b) - 1, b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = rem[db + k]
        if c % lb:
            raise DomainError("inexact polynomial division")
        c //= lb
        q[k] = c
        if c:
            for i in range(db + 1):
                rem[k + i] -= c * b[i]
    if any(rem):
        raise DomainError("inexact polynomial division")
    return ptrim(q)


def _poly_str(a, var):
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        if e == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            term = f"{mag}{var}" if e == 1 else f"{mag}{var}^{e}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# domains


class Rationals:
    """The field Q with Fraction payloads."""

    name = "Q"
    char = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise DomainError("division by zero in Q")
        return 1 / a

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def row_primitive(self, vec):
        return vec

    def __repr__(self):
        return "Q"


class PrimeField:
    """F_p with int payloads in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError(f"division by zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def row_primitive(self, vec):
        return vec

    def __repr__(self):
        return self.name


class RationalFunctions:
    """Q(q), payloads are canonical pairs (num, den) of Z[q] tuples.

    Canonical means: den nonzero with positive leading coefficient, the
    primitive parts of num and den are coprime in Z[q], and the integer
    contents of num and den are coprime.  Zero is ((), (1,)).
    """

    name = "Q(q)"
    char = 0

    def __init__(self):
        self.zero = ((), (1,))
        self.one = ((1,), (1,))
        self.q = ((0, 1), (1,))

    def make(self, num, den):
        num, den = ptrim(num), ptrim(den)
        if not den:
            raise DomainError("zero denominator in Q(q)")
        if not num:
            return self.zero
        g = pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num, den = pdiv_exact(num, g), pdiv_exact(den, g)
        k = math.gcd(pcontent(num), pcontent(den))
        if k > 1:
            num = tuple(x // k for x in num)
            den = tuple(x // k for x in den)
        if den[-1] < 0:
            num, den = pneg(num), pneg(den)
        return (num, den)

    def from_int(self, n):
        return ((n,), (1,)) if n else self.zero

    def q_power(self, g):
        """q^g for any integer g, negative powers included."""
        mono = (0,) * abs(g) + (1,)
        return (mono, (1,)) if g >= 0 else ((1,), mono)

    def add(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == (1,) and bd == (1,):
            return (padd(an, bn), (1,))
        return self.make(padd(pmul(an, bd), pmul(bn, ad)), pmul(ad, bd))

    def sub(self, a, b):
        an, ad = a
        bn, bd = b
        if ad == (1,) and bd == (1,):
            return (psub(an, bn), (1,))
        return self.make(psub(pmul(an, bd), pmul(bn, ad)), pmul(ad, bd))

    def neg(self, a):
        return (pneg(a[0]), a[1])

    def mul(self, a, b):
        an, ad = a
        bn, bd = b
        if not an or not bn:
            return self.zero
        if ad == (1,) and bd == (1,):
            if an == (1,):
                return (bn, (1,))
            if bn == (1,):
                return (an, (1,))
            return (pmul(an, bn), (1,))
        return self.make(pmul(an, bn), pmul(ad, bd))

    def inv(self, a):
        an, ad = a
        if not an:
            raise DomainError("division by zero in Q(q)")
        if an[-1] < 0:
            an, ad = pneg(an), pneg(ad)
        return (ad, an)

    def is_zero(self, a):
        return not a[0]

    def eq(self, a, b):
        return a == b

    def sort_key(self, a):
        return a

    def to_str(self, a):
        num, den = a
        if den == (1,):
            return _poly_str(num, "q")
        return f"({_poly_str(num, 'q')})/({_poly_str(den, 'q')})"

    def row_primitive(self, vec):
        """The row rescaled by a nonzero scalar to keep entries small.

        Clears denominators with one common multiple, then divides out the
        gcd of the numerators (polynomial part and integer content).
        Scaling a row never changes spans, ranks, or which entries are
        zero, which is all the elimination code asks of it.
        """
        lcm_prim = (1,)
        lcm_cont = 1
        has_den = False
        for n, d in vec:
            if n and d != (1,):
                has_den = True
                c = pcontent(d)
                lcm_cont = lcm_cont * c // math.gcd(lcm_cont, c)
                dp = pprimitive(d)
                g = pgcd(lcm_prim, dp)
                lcm_prim = pdiv_exact(pmul(lcm_prim, dp), g)
        if has_den:
            scale = (pscale(lcm_prim, lcm_cont), (1,))
            vec = [self.mul(x, scale) for x in vec]
        nums = [n for n, _ in vec if n]
        if not nums:
            return vec
        content = 0
        g = ()
        for n in nums:
            if content != 1:
                content = math.gcd(content, pcontent(n))
            if g != (1,):
                g = pgcd(g, n)
        if content <= 1 and g == (1,):
            return vec
        out = []
        for n, d in vec:
            if not n:
                out.append(self.zero)
                continue
            if g != (1,):
                n = pdiv_exact(n, g)
            if content > 1:
                n = tuple(c // content for c in n)
            out.append((n, (1,)))
        return out

    def __repr__(self):
        return "Q(q)"


class CyclotomicField:
    """Q(zeta_p) for prime p, reduced modulo the p-th cyclotomic polynomial.

    Payloads are tuples of p-1 Fractions, coefficients of 1, z, ..., z^(p-2)
    where z is a primitive p-th root of unity.  For p = 2 this is Q with
    z = -1 wearing a length-1 tuple.
    """

    char = 0

    def __init__(self, p):
        PrimeField(p)  # primality check
        self.p = p
        self.name = f"Q(zeta_{p})"
        n = p - 1
        self.zero = (Fraction(0),) * n
        self.one = (Fraction(1),) + (Fraction(0),) * (n - 1)

    def from_int(self, k):
        n = self.p - 1
        return (Fraction(k),) + (Fraction(0),) * (n - 1)

    def q_power(self, g):
        """zeta^g; any integer g, taken mod p."""
        g %= self.p
        n = self.p - 1
        if g < n:
            return tuple(Fraction(1 if i == g else 0) for i in range(n))
        # z^(p-1) = -(1 + z + ... + z^(p-2))
        return (Fraction(-1),) * n

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        n = self.p - 1
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        # reduce z^k for k >= n using z^n = -(1 + ... + z^(n-1))
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c:
                prod[k] = Fraction(0)
                for i in range(n):
                    prod[k - n + i] -= c
        return tuple(prod[:n])

    def inv(self, a):
        if all(x == 0 for x in a):
            raise DomainError(f"division by zero in {self.name}")
        # extended Euclid in Q[z] against Phi_p = 1 + z + ... + z^(p-1)
        phi = [Fraction(1)] * self.p
        r0, s0 = phi, [Fraction(0)]
        r1, s1 = [Fraction(x) for x in a], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                inv = [x / c for x in s1]
                inv += [Fraction(0)] * (self.p - 1 - len(inv))
                return tuple(inv[: self.p - 1])
            q, rem = self._qdivmod(r0, r1)
            s_new = self._qsub(s0, self._qmul(q, s1))
            r0, s0, r1, s1 = r1, s1, rem, s_new

    @staticmethod
    def _qmul(a, b):
        if not a or not b:
            return []
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    @staticmethod
    def _qsub(a, b):
        out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
        for i, y in enumerate(b):
            out[i] -= y
        while out and out[-1] == 0:
            out.pop()
        return out

    @staticmethod
    def _qdivmod(a, b):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
        lb = b[-1]
        while len(a) >= len(b) and a:
            c = a[-1] / lb
            k = len(a) - len(b)
            q[k] = c
            for i in range(len(b)):
                a[k + i] -= c * b[i]
            while a and a[-1] == 0:
                a.pop()
        return q, a

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def eq(self, a, b):
        return a == b

    def sort_key(self, a):
        return a

    def to_str(self, a):
        n = self.p - 1
        parts = []
        for e in range(n):
            c = a[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                v = "z" if e == 1 else f"z^{e}"
                parts.append(v if c == 1 else f"{c}*{v}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def row_primitive(self, vec):
        return vec

    def __repr__(self):
        return self.name


QQ = Rationals()
QQ_Q = RationalFunctions()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


@lru_cache(maxsize=None)
def cyclotomic(p):
    return CyclotomicField(p)


# ---------------------------------------------------------------------------
# exact linear algebra


@dataclass(frozen=True)
class Matrix:
    """An immutable exact matrix over a domain."""

    domain: object
    rows: tuple

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DomainError("ragged matrix rows")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


class SpanTracker:
    """Incremental row-space tracker using fraction-free elimination.

    Rows are reduced by cross-multiplication only (r' = p*r - c*pivot_row),
    which is valid over any integral domain and never divides, so Q(q)
    entries stay denominator-free when the inputs are.  Supports rank,
    membership, and incremental extension.  Scaling a row never changes
    the answers this class gives.
    """

    def __init__(self, domain, width):
        self.domain = domain
        self.width = width
        self.rows = []  # kept sorted by pivot column
        self.pivots = []

    def copy(self):
        t = SpanTracker.__new__(SpanTracker)
        t.domain = self.domain
        t.width = self.width
        t.rows = [list(r) for r in self.rows]
        t.pivots = list(self.pivots)
        return t

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Eliminate against all tracked rows; returns a scaled residual."""
        D = self.domain
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not D.is_zero(c):
                lead = row[p]
                v = D.row_primitive(
                    [D.sub(D.mul(lead, x), D.mul(c, y)) for x, y in zip(v, row)]
                )
        return v

    def add(self, vec):
        """Insert a row; returns True if it enlarged the span."""
        D = self.domain
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if not D.is_zero(x)), None)
        if piv is None:
            return False
        v = D.row_primitive(v)
        # back-eliminate so reduce() stays a single pass
        for k, row in enumerate(self.rows):
            c = row[piv]
            if not D.is_zero(c):
                lead = v[piv]
                self.rows[k] = D.row_primitive(
                    [D.sub(D.mul(lead, x), D.mul(c, y)) for x, y in zip(row, v)]
                )
        at = next((k for k, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, piv)
        return True

    def contains(self, vec):
        D = self.domain
        return all(D.is_zero(x) for x in self.reduce(vec))


def rank_of_rows(domain, rows):
    if not rows:
        return 0
    t = SpanTracker(domain, len(rows[0]))
    for r in rows:
        t.add(r)
    return t.rank


def matrix_rank(m: Matrix) -> int:
    """Exact rank by elimination over the matrix's own domain."""
    return rank_of_rows(m.domain, m.rows)


def rref(domain, rows):
    """Reduced row echelon form with field division.

    Returns (rows, pivot_columns); output rows have 1 in their pivot column
    and zeros in every other pivot column.
    """
    D = domain
    work = [list(r) for r in rows]
    out, pivots = [], []
    width = len(work[0]) if work else 0
    for col in range(width):
        target = None
        for r in work:
            if not D.is_zero(r[col]) and all(D.is_zero(r[c]) for c in range(col)):
                target = r
                break
        if target is None:
            continue
        work.remove(target)
        inv = D.inv(target[col])
        target = [D.mul(inv, x) for x in target]
        for rows_list in (work, out):
            for k, r in enumerate(rows_list):
                c = r[col]
                if not D.is_zero(c):
                    rows_list[k] = [D.sub(x, D.mul(c, y)) for x, y in zip(r, target)]
        out.append(target)
        pivots.append(col)
    return out, pivots


def nullspace(domain, rows, width):
    """Basis of the right kernel of the given row list."""
    D = domain
    red, pivots = rref(domain, rows)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [D.zero] * width
        v[f] = D.one
        for row, p in zip(red, pivots):
            v[p] = D.neg(row[f])
        basis.append(v)
    return basis


def det(domain, rows):
    """Determinant by field elimination."""
    D = domain
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("determinant of a non-square matrix")
    work = [list(r) for r in rows]
    result = D.one
    for col in range(n):
        piv = next(
            (k for k in range(col, n) if not D.is_zero(work[k][col])), None
        )
        if piv is None:
            return D.zero
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
            result = D.neg(result)
        lead = work[col][col]
        result = D.mul(result, lead)
        inv = D.inv(lead)
        for k in range(col + 1, n):
            c = work[k][col]
            if not D.is_zero(c):
                f = D.mul(c, inv)
                work[k] = [
                    D.sub(x, D.mul(f, y)) for x, y in zip(work[k], work[col])
                ]
    return result
