"""Laurent polynomials in a grading variable t with Schur-expansion
coefficients.  Houses equivariant characteristic and Kazhdan-Lusztig
polynomials and everything between them."""

from .characters import kronecker
from .poly import IntPoly
from .schur import SchurExpansion


class GradedSchur:
    """Finite map t-exponent -> nonzero SchurExpansion."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, v in dict(coeffs).items():
                if not isinstance(v, SchurExpansion):
                    v = SchurExpansion(v)
                if v:
                    clean[int(e)] = v
        self.coeffs = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, value: SchurExpansion):
        return cls({0: value})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GradedSchur):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            new = out.get(e, SchurExpansion()) + v
            if new:
                out[e] = new
            else:
                out.pop(e, None)
        res = GradedSchur.__new__(GradedSchur)
        res.coeffs = out
        return res

    def __neg__(self):
        res = GradedSchur.__new__(GradedSchur)
        res.coeffs = {e: -v for e, v in self.coeffs.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, SchurExpansion):
            other = GradedSchur.constant(other)
        if not isinstance(other, GradedSchur):
            return NotImplemented
        out = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                term = v1 * v2
                new = out.get(e, SchurExpansion()) + term
                if new:
                    out[e] = new
                else:
                    out.pop(e, None)
        res = GradedSchur.__new__(GradedSchur)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def scale(self, c: int):
        if not c:
            return GradedSchur()
        res = GradedSchur.__new__(GradedSchur)
        res.coeffs = {e: v.scale(c) for e, v in self.coeffs.items()}
        return res

    def t_shift(self, k: int):
        res = GradedSchur.__new__(GradedSchur)
        res.coeffs = {e + k: v for e, v in self.coeffs.items()}
        return res

    def coeff(self, e: int) -> SchurExpansion:
        return self.coeffs.get(e, SchurExpansion())

    def support(self):
        return set(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def reverse(self, d: int):
        """t^d * f(1/t)."""
        return GradedSchur({d - e: v for e, v in self.coeffs.items()})

    def eval_at_one(self) -> SchurExpansion:
        total = SchurExpansion()
        for v in self.coeffs.values():
            total = total + v
        return total

    def dimension(self) -> IntPoly:
        """Apply the hook-length dimension to every coefficient."""
        return IntPoly({e: v.dimension() for e, v in self.coeffs.items()})

    def is_effective(self) -> bool:
        return all(v.is_effective() for v in self.coeffs.values())

    def sf_degree_part(self, n: int):
        """Keep only Schur terms of symmetric-function degree n."""
        return GradedSchur(
            {e: v.homogeneous_part(n) for e, v in self.coeffs.items()})

    def __repr__(self):
        from .render import graded_text
        return f"GradedSchur({graded_text(self)})"


def reverse(f, d: int):
    """t^d * f(1/t) for either payload kind."""
    return f.reverse(d)


def eval_at_one(f: GradedSchur) -> SchurExpansion:
    return f.eval_at_one()


def coeff(f: GradedSchur, i: int) -> SchurExpansion:
    return f.coeff(i)


def kronecker_graded(f: GradedSchur, g: GradedSchur) -> GradedSchur:
    """Tensor product of graded representations: convolution in t with
    kronecker on the coefficients."""
    out = GradedSchur()
    for e1, v1 in f.coeffs.items():
        for e2, v2 in g.coeffs.items():
            term = kronecker(v1, v2)
            if term:
                out = out + GradedSchur({e1 + e2: term})
    return out
