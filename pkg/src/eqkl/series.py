"""Truncated multivariate formal series over an exact coefficient ring.

Exponents are tuples, one slot per variable; truncation keeps terms whose
weighted total degree stays within a bound.  Weight 0 lets a variable ride
along untruncated (used for the grading variable t, whose exponents are
bounded by the weighted ones in every series this package builds).
Coefficients may be Fractions, ints, or SchurExpansions; anything with
+, unary -, * and truthiness-as-nonzero works.
"""


class TruncSeries:
    __slots__ = ("nvars", "bound", "weights", "terms")

    def __init__(self, nvars, bound, terms=None, weights=None):
        self.nvars = nvars
        self.bound = bound
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        self.terms = {}
        if terms:
            for exps, c in dict(terms).items():
                self.add_term(exps, c)

    def _weight(self, exps):
        return sum(w * e for w, e in zip(self.weights, exps))

    def add_term(self, exps, c):
        exps = tuple(exps)
        if not c or self._weight(exps) > self.bound:
            return
        cur = self.terms.get(exps)
        new = c if cur is None else cur + c
        if new:
            self.terms[exps] = new
        else:
            self.terms.pop(exps, None)

    def copy(self):
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        out.terms = dict(self.terms)
        return out

    def compatible(self, other):
        return (self.nvars == other.nvars and self.bound == other.bound
                and self.weights == other.weights)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.compatible(other) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = self.copy()
        for exps, c in other.terms.items():
            out.add_term(exps, c)
        return out

    def __neg__(self):
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        out.terms = {exps: -c for exps, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if out._weight(exps) > self.bound:
                    continue
                out.add_term(exps, c1 * c2)
        return out

    def scale(self, c):
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        for exps, v in self.terms.items():
            out.add_term(exps, v * c)
        return out

    def power(self, k: int):
        out = self.monomial((0,) * self.nvars, self._one_like())
        for _ in range(k):
            out = out * self
        return out

    def _one_like(self):
        """A multiplicative unit matching the coefficient ring in use."""
        for c in self.terms.values():
            try:
                return type(c).one()          # SchurExpansion
            except AttributeError:
                return type(c)(1)             # Fraction / int
        return 1

    def monomial(self, exps, c):
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        out.add_term(exps, c)
        return out

    def coefficient(self, exps):
        return self.terms.get(tuple(exps))

    def map_exponents(self, fn):
        """Reindex every monomial; fn returns the new exponent tuple.
        Negative exponents are rejected (these series are polynomial)."""
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        for exps, c in self.terms.items():
            new = tuple(fn(exps))
            if any(e < 0 for e in new):
                raise ValueError(f"substitution left negative exponent {new}")
            out.add_term(new, c)
        return out

    def weight_part(self, w: int):
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        for exps, c in self.terms.items():
            if self._weight(exps) == w:
                out.add_term(exps, c)
        return out

    def inverse(self, one):
        """Multiplicative inverse of a series whose constant term is `one`,
        by homogeneous-weight recursion."""
        zero_exp = (0,) * self.nvars
        if self.terms.get(zero_exp) != one:
            raise ValueError("inverse requires constant term equal to one")
        parts = [self.weight_part(w) for w in range(self.bound + 1)]
        inv = [self.monomial(zero_exp, one)]
        for w in range(1, self.bound + 1):
            acc = TruncSeries(self.nvars, self.bound, weights=self.weights)
            for k in range(1, w + 1):
                if parts[k]:
                    acc = acc + parts[k] * inv[w - k]
            inv.append(-acc)
        total = inv[0]
        for piece in inv[1:]:
            total = total + piece
        return total

    def compose_var(self, var: int, inner):
        """Substitute `inner` (weight >= 1 in each term) for one variable."""
        if any(exps[var] > 0 and self._weight(exps) == 0
               for exps in inner.terms):
            raise ValueError("substituted series must have positive weight")
        slices: dict = {}
        for exps, c in self.terms.items():
            k = exps[var]
            rest = exps[:var] + (0,) + exps[var + 1:]
            sl = slices.setdefault(k, TruncSeries(
                self.nvars, self.bound, weights=self.weights))
            sl.add_term(rest, c)
        out = TruncSeries(self.nvars, self.bound, weights=self.weights)
        if not slices:
            return out
        one = self._one_like()
        power = self.monomial((0,) * self.nvars, one)
        for k in range(0, max(slices) + 1):
            if k:
                power = power * inner
            if k in slices:
                out = out + slices[k] * power
        return out

    def exp(self, one):
        """exp of a series with zero constant term (Fraction-like ring)."""
        from fractions import Fraction
        zero_exp = (0,) * self.nvars
        if zero_exp in self.terms:
            raise ValueError("exp needs zero constant term")
        out = self.monomial(zero_exp, one)
        term = self.monomial(zero_exp, one)
        for k in range(1, self.bound + 1):
            term = term * self
            term = term.scale(Fraction(1, k))
            if not term:
                break
            out = out + term
        return out

    def __repr__(self):
        keys = sorted(self.terms)[:6]
        shown = ", ".join(f"{k}: {self.terms[k]!r}" for k in keys)
        more = "..." if len(self.terms) > 6 else ""
        return f"TruncSeries({shown}{more})"
