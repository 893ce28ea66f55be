"""Tiny exact univariate integer polynomials (characteristic / chromatic)."""

from __future__ import annotations


class IntPoly:
    """Immutable polynomial in one variable t with integer coefficients."""

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        if any(not isinstance(c, int) or isinstance(c, bool) for c in cs):
            raise TypeError("coefficients must be ints")
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t_power(cls, k, coeff=1):
        return cls((0,) * k + (coeff,))

    @property
    def coeffs(self):
        """Coefficients in ascending degree order."""
        return self._coeffs

    def coeff(self, k):
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def degree(self):
        return len(self._coeffs) - 1

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return IntPoly(-c for c in self._coeffs)

    def __add__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPoly(c * other for c in self._coeffs)
        if not isinstance(other, IntPoly):
            return NotImplemented
        out = [0] * (len(self._coeffs) + len(other._coeffs))
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift_down(self):
        """Exact division by t; requires a zero constant term."""
        if self._coeffs and self._coeffs[0] != 0:
            raise ValueError("constant term is nonzero; not divisible by t")
        return IntPoly(self._coeffs[1:])

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for k in range(self.degree(), -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "t" if mag == 1 else f"{mag}t"
            else:
                body = f"t^{k}" if mag == 1 else f"{mag}t^{k}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"IntPoly({self._coeffs!r})"
