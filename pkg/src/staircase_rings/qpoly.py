"""
Exact polynomials in the single variable q with integer coefficients,
plus the standard q-analogues ([n]_q, q-binomials, q-Stirling numbers)
and coefficient reversal.

>>> print(q_int(3))
1 + q + q^2
>>> print(q_binomial(4, 2))
1 + q + 2*q^2 + q^3 + q^4
>>> print(rev_q(QPoly((2, 3, 1))))
1 + 3*q + 2*q^2
"""

from __future__ import annotations

from functools import cache


class QPoly:
    """
    A polynomial in q with arbitrary-precision integer coefficients.

    Stored as a tuple of coefficients indexed by power of q, with no
    trailing zeros (the zero polynomial is the empty tuple).  Immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @staticmethod
    def zero() -> "QPoly":
        return QPoly(())

    @staticmethod
    def one() -> "QPoly":
        return QPoly((1,))

    @staticmethod
    def monomial(d: int, c: int = 1) -> "QPoly":
        """c * q^d"""
        if d < 0:
            raise ValueError("negative power of q")
        return QPoly((0,) * d + (c,))

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __add__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "QPoly":
        if isinstance(other, int):
            other = QPoly((other,))
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        return (-self) + other

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, d: int) -> "QPoly":
        """Multiply by q^d."""
        if not self.coeffs:
            return self
        return QPoly((0,) * d + self.coeffs)

    def __call__(self, value):
        """Evaluate at a numeric value (q=1 gives the total count)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def leq_coefficientwise(self, other: "QPoly") -> bool:
        """True iff every coefficient of self is <= the matching one of other."""
        top = max(len(self.coeffs), len(other.coeffs))
        return all(self.coefficient(d) <= other.coefficient(d) for d in range(top))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                qd = "q" if d == 1 else f"q^{d}"
                parts.append(qd if c == 1 else f"-{qd}" if c == -1 else f"{c}*{qd}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPoly({self.coeffs!r})"

    def to_json(self) -> list[str]:
        """Coefficients as decimal strings, ascending by power."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data) -> "QPoly":
        return QPoly(int(c) for c in data)


ZERO = QPoly.zero()
ONE = QPoly.one()
Q = QPoly.monomial(1)


def rev_q(f: QPoly) -> QPoly:
    """Reverse the coefficient sequence at the polynomial's own degree.

    Zero maps to zero; constants are fixed points.
    """
    return QPoly(tuple(reversed(f.coeffs)))


def rev_at(f: QPoly, d: int) -> QPoly:
    """q^d * f(1/q): reversal at the stated degree d >= degree(f)."""
    if f.degree > d:
        raise ValueError("reversal degree below actual degree")
    if not f:
        return f
    return QPoly(tuple(f.coefficient(d - i) for i in range(d + 1)))


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    if n < 0:
        raise ValueError("q_int of negative integer")
    return QPoly((1,) * n)


@cache
def q_factorial(n: int) -> QPoly:
    """[n]!_q = [1]_q [2]_q ... [n]_q."""
    if n < 0:
        raise ValueError("q_factorial of negative integer")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@cache
def q_binomial(a: int, b: int) -> QPoly:
    """Gaussian binomial [a choose b]_q; zero when b < 0 or b > a."""
    if a < 0:
        raise ValueError("q_binomial with negative top argument")
    if b < 0 or b > a:
        return ZERO
    if b == 0 or b == a:
        return ONE
    # Pascal recurrence [a, b] = [a-1, b-1] + q^b [a-1, b]
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b)


def q_multinomial(parts) -> QPoly:
    """[a1+...+ak choose a1, ..., ak]_q as iterated q-binomials."""
    parts = list(parts)
    total = sum(parts)
    out = ONE
    for p in parts:
        out = out * q_binomial(total, p)
        total -= p
    return out


@cache
def q_stirling(n: int, k: int) -> QPoly:
    """q-Stirling number of the second kind:
    Stir_q(n, k) = Stir_q(n-1, k-1) + [k]_q Stir_q(n-1, k).
    """
    if n == 0:
        return ONE if k == 0 else ZERO
    if k <= 0 or k > n:
        return ZERO
    return q_stirling(n - 1, k - 1) + q_int(k) * q_stirling(n - 1, k)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
