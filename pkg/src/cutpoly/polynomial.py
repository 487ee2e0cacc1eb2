"""Exact univariate integer polynomials and the combinatorial polynomials built on them.

Covers dense big-integer polynomial arithmetic, Stirling numbers of the second
kind, Eulerian polynomials (by identity and by descent enumeration), the
f-polynomial to h-polynomial transform, and the closed-form h*-polynomial
(x+1) * A_{n-2}(x)^2 of cut polytopes of K_{2,n-2}.
"""

from __future__ import annotations

import itertools
import json
import math

from .errors import CostGuardError


class IntPolynomial:
    """Dense integer-coefficient polynomial; index = exponent, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        """self(inner(x)), exact."""
        acc = IntPolynomial(())
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial((c,))
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return format_polynomial(self)


def format_polynomial(p: IntPolynomial) -> str:
    """Descending-degree text form, e.g. 'x^5 + 9x^4 + 26x^3 + 26x^2 + 9x + 1'."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in range(p.degree, -1, -1):
        c = p.coefficient(e)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}{xpart}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def poly_to_json(p: IntPolynomial) -> str:
    """JSON coefficient array, constant term first."""
    return json.dumps(list(p.coeffs))


def poly_from_json(text: str) -> IntPolynomial:
    return IntPolynomial([int(c) for c in json.loads(text)])


# ---------------------------------------------------------------------------
# combinatorial polynomials
# ---------------------------------------------------------------------------

def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k), via the alternating sum.

    Conventions: S(0, 0) = 1, S(n, 0) = 0 for n > 0, and 0 whenever k < 0 or
    k > n.  The alternating sum counts surjections, so the result is the sum
    divided (exactly) by k!.
    """
    if n < 0 or k < 0:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    total = sum((-1) ** (k - m) * m**n * math.comb(k, m) for m in range(1, k + 1))
    quotient, remainder = divmod(total, math.factorial(k))
    if remainder:
        raise ArithmeticError(f"surjection count {total} not divisible by {k}!")
    return quotient


def eulerian(n: int) -> IntPolynomial:
    """Eulerian polynomial A_n(x) = sum_k k! S(n,k) (x-1)^(n-k); degree n-1."""
    if n < 1:
        raise ValueError("eulerian(n) needs n >= 1")
    x_minus_1 = IntPolynomial((-1, 1))
    total = IntPolynomial(())
    for k in range(1, n + 1):
        term = math.factorial(k) * stirling2(n, k)
        if term:
            total = total + term * x_minus_1 ** (n - k)
    return total


def eulerian_by_descents(n: int) -> IntPolynomial:
    """Descent-count enumeration over all n! permutations; oracle for eulerian()."""
    if n < 1:
        raise ValueError("needs n >= 1")
    if n > 10:
        raise CostGuardError(f"descent enumeration over {n}! permutations refused")
    counts = [0] * n
    for w in itertools.permutations(range(n)):
        descents = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        counts[descents] += 1
    return IntPolynomial(counts)


def f_to_h(f_coeffs, d: int) -> IntPolynomial:
    """h-polynomial of a d-dimensional complex from its f-vector.

    f_coeffs lists (f_{-1}, f_0, ..., f_{d}); the result is
    sum_i f_{i-1} x^i (1-x)^(d+1-i), expanded exactly.
    """
    f_coeffs = list(f_coeffs)
    if not f_coeffs or f_coeffs[0] != 1:
        raise ValueError("f-vector must start with f_{-1} = 1")
    if len(f_coeffs) > d + 2:
        raise ValueError(f"f-vector of length {len(f_coeffs)} too long for dimension {d}")
    one_minus_x = IntPolynomial((1, -1))
    total = IntPolynomial(())
    for i, f in enumerate(f_coeffs):
        if f:
            total = total + (f * one_minus_x ** (d + 1 - i)).shifted(i)
    return total


def hstar_closed_form_k2m(n: int) -> IntPolynomial:
    """Closed-form h*-polynomial (x+1) * A_{n-2}(x)^2 of the cut polytope of K_{2,n-2}."""
    if n < 4:
        raise ValueError("closed form needs n >= 4")
    a = eulerian(n - 2)
    return IntPolynomial((1, 1)) * a * a


def is_palindromic(p: IntPolynomial) -> bool:
    """True iff p(x) = x^deg(p) * p(1/x); the zero polynomial passes vacuously."""
    return p.coeffs == tuple(reversed(p.coeffs))


def is_unimodal(p: IntPolynomial) -> bool:
    """True iff the coefficients rise (weakly) then fall (weakly)."""
    coeffs = p.coeffs
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i == len(coeffs) - 1 or not coeffs


def hibi_lower_bound_ok(p: IntPolynomial) -> bool:
    """Check h_i >= h_1 for 1 <= i <= deg(p) - 1 on a candidate h*-polynomial."""
    if p.degree < 2:
        return True
    h1 = p.coefficient(1)
    return all(p.coefficient(i) >= h1 for i in range(1, p.degree))
