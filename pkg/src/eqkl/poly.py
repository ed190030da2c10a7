"""Sparse univariate Laurent polynomials with exact integer coefficients."""


class IntPoly:
    """Finite map exponent -> nonzero integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls, e: int = 1, c: int = 1):
        return cls({e: c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly({0: other})
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            new = out.get(e, 0) + c
            if new:
                out[e] = new
            else:
                del out[e]
        res = IntPoly.__new__(IntPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = IntPoly.__new__(IntPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPoly()
            res = IntPoly.__new__(IntPoly)
            res.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return res
        if not isinstance(other, IntPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                new = out.get(e, 0) + c1 * c2
                if new:
                    out[e] = new
                else:
                    del out[e]
        res = IntPoly.__new__(IntPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def coeff(self, e: int):
        return self.coeffs.get(e, 0)

    def support(self):
        return set(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def reverse(self, d: int):
        """t^d * p(1/t): exponent e maps to d - e."""
        return IntPoly({d - e: c for e, c in self.coeffs.items()})

    def __call__(self, x):
        return sum(c * x ** e for e, c in self.coeffs.items())

    def __repr__(self):
        from .render import intpoly_text
        return f"IntPoly({intpoly_text(self)})"


def falling_factorial(n: int) -> IntPoly:
    """(t-1)(t-2)...(t-n+1); equals 1 for n <= 1."""
    out = IntPoly.one()
    for i in range(1, n):
        out = out * IntPoly({1: 1, 0: -i})
    return out
