"""Dense integer polynomials in one variable t.

This is the value type for characteristic polynomials: immutable, hashable,
exact.  Coefficients are stored ascending with no trailing zeros.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .errors import DomainError
from .scalars import _poly_str, padd, pmul, pneg, psub, ptrim


def _divisors(n):
    """Positive divisors of n > 0, ascending."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(coeffs, r):
    """Synthetic division by (t - r); returns (quotient, remainder)."""
    n = len(coeffs) - 1
    q = [0] * n
    acc = coeffs[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = coeffs[k] + r * acc
    return q, acc


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", ptrim(tuple(coeffs)))

    def __setattr__(self, *a):
        raise AttributeError("IntPolynomial is immutable")

    @staticmethod
    def t_power(n):
        return IntPolynomial((0,) * n + (1,))

    @staticmethod
    def from_roots(roots):
        """Monic product of (t - r) over the given integer roots."""
        c = (1,)
        for r in roots:
            c = pmul(c, (-r, 1))
        return IntPolynomial(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return IntPolynomial(padd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return IntPolynomial(psub(self.coeffs, other.coeffs))

    def __neg__(self):
        return IntPolynomial(pneg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        return IntPolynomial(pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def shift(self, a):
        """p(t + a), expanded exactly."""
        out = ()
        for c in reversed(self.coeffs):
            out = padd(pmul(out, (a, 1)), (c,))
        return IntPolynomial(out)

    def divmod_exact(self, other):
        """(quotient, remainder) over Q[t], or None if either leaves Z[t]."""
        if other.is_zero:
            raise DomainError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.coeffs
        q = [Fraction(0)] * max(0, len(rem) - len(d) + 1)
        lead = Fraction(d[-1])
        while len(rem) >= len(d) and rem:
            c = rem[-1] / lead
            k = len(rem) - len(d)
            q[k] = c
            for i in range(len(d)):
                rem[k + i] -= c * d[i]
            while rem and rem[-1] == 0:
                rem.pop()
        if any(x.denominator != 1 for x in q) or any(x.denominator != 1 for x in rem):
            return None
        return (
            IntPolynomial(tuple(int(x) for x in q)),
            IntPolynomial(tuple(int(x) for x in rem)),
        )

    def divides(self, other):
        """True when self divides other exactly in Z[t]."""
        if self.is_zero:
            return other.is_zero
        dm = other.divmod_exact(self)
        return dm is not None and dm[1].is_zero

    def integer_roots(self):
        """All roots with multiplicity, ascending, when the polynomial is
        lc * product of (t - r) with every r a nonnegative integer.

        Returns None when it does not split in that form.
        """
        if self.is_zero:
            return None
        coeffs = list(self.coeffs)
        roots = []
        while len(coeffs) > 1 and coeffs[0] == 0:
            roots.append(0)
            coeffs.pop(0)
        while len(coeffs) > 1:
            found = False
            for r in _divisors(abs(coeffs[0])):
                q, rem = _deflate(coeffs, r)
                if rem == 0:
                    roots.append(r)
                    coeffs = q
                    found = True
                    break
            if not found:
                return None
        return sorted(roots)

    def factored_str(self):
        """Product form over integer roots, or None if it does not split."""
        roots = self.integer_roots()
        if roots is None:
            return None
        lc = self.coeffs[-1]
        parts = [] if lc == 1 else [str(lc)]
        for r, m in sorted(Counter(roots).items()):
            base = "t" if r == 0 else f"(t - {r})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return "".join(parts) if parts else "1"

    def __str__(self):
        return _poly_str(self.coeffs, "t")

    def __repr__(self):
        return f"IntPolynomial({self.coeffs!r})"


ONE = IntPolynomial((1,))
T = IntPolynomial((0, 1))
T_MINUS_1 = IntPolynomial((-1, 1))
