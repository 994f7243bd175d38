"""Integer Laurent polynomials in one variable q.

Just enough arithmetic for graded Euler characteristics and Burau matrices:
addition, multiplication, bar involution q -> 1/q, and a printer that writes
terms in descending powers ("-q^2+1").  Coefficients are plain ints.
"""

from __future__ import annotations


class Laurent:
    """Immutable sparse Laurent polynomial {exponent: coefficient}."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self.c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def q_power(e: int, coeff: int = 1) -> "Laurent":
        return Laurent({e: coeff})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self.c)
        for e, a in other.c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            else:
                c.pop(e, None)
        return Laurent(c)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -a for e, a in self.c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        c = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                e = e1 + e2
                b = c.get(e, 0) + a1 * a2
                if b:
                    c[e] = b
                else:
                    c.pop(e, None)
        return Laurent(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            # only unit monomials are invertible in Z[q, q^-1]
            if len(self.c) != 1:
                raise ValueError("negative powers only for monomials")
            ((e, a),) = self.c.items()
            if a * a != 1:
                raise ValueError("negative powers only for unit monomials")
            return Laurent({e * n: a if n % 2 else 1})
        out = Laurent.one()
        for _ in range(n):
            out = out * self
        return out

    def bar(self) -> "Laurent":
        """The involution q -> q^-1."""
        return Laurent({-e: a for e, a in self.c.items()})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c, reverse=True):
            a = self.c[e]
            sign = "-" if a < 0 else ("+" if parts else "")
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self):
        return f"Laurent({self})"


def _coerce(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    if isinstance(x, int):
        return Laurent({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to Laurent")


Q = Laurent({1: 1})
