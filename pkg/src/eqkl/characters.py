"""Symmetric-group characters and the basis changes built on them.

Character values come from the Murnaghan-Nakayama rule, run on beta-sets
(first-column hook lengths): removing a border strip of size k from lam
is replacing some beta entry b by b-k, with sign (-1)^(number of beta
entries strictly between b-k and b).  Values are memoized per
(lam, sorted mu); the cache is never evicted at the sizes this engine
targets (degree <= ~16).
"""

from fractions import Fraction
from math import factorial

from .partitions import class_size, partitions_of, z_factor
from .schur import SchurExpansion

_CHAR_CACHE: dict = {}


class IntegralityError(ArithmeticError):
    """A conversion that must land in integers produced a fraction."""


def character(lam: tuple, mu: tuple) -> int:
    """Character of the irreducible indexed by lam at cycle type mu."""
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam} vs {mu}")
    return _char(lam, tuple(sorted(mu, reverse=True)))


def _char(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    hit = _CHAR_CACHE.get(key)
    if hit is not None:
        return hit
    k, rest = mu[0], mu[1:]
    nrows = len(lam)
    beta = [lam[i] + (nrows - 1 - i) for i in range(nrows)]
    present = set(beta)
    total = 0
    for i, b in enumerate(beta):
        b2 = b - k
        if b2 < 0 or b2 in present:
            continue
        height = sum(1 for c in beta if b2 < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(b2)
        newbeta.sort(reverse=True)
        newlam = tuple(c - (nrows - 1 - j) for j, c in enumerate(newbeta))
        newlam = tuple(p for p in newlam if p)
        total += (-1) ** height * _char(newlam, rest)
    _CHAR_CACHE[key] = total
    return total


class PowerSumExpansion:
    """Finite map partition -> exact rational, indexing power-sum monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mu, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[tuple(mu)] = c
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, PowerSumExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for mu, c in other.terms.items():
            new = out.get(mu, 0) + c
            if new:
                out[mu] = new
            else:
                out.pop(mu, None)
        return PowerSumExpansion(out)

    def __repr__(self):
        return f"PowerSumExpansion({self.terms!r})"


def to_power_sums(f: SchurExpansion) -> PowerSumExpansion:
    """Expand in the power-sum basis: s[lam] = sum_mu chi^lam(mu)/z_mu p_mu."""
    out: dict = {}
    for lam, mult in f.terms.items():
        n = sum(lam)
        for mu in partitions_of(n):
            val = character(lam, mu)
            if not val:
                continue
            c = out.get(mu, Fraction(0)) + Fraction(mult * val, z_factor(mu))
            if c:
                out[mu] = c
            else:
                out.pop(mu, None)
    return PowerSumExpansion(out)


def from_power_sums(p: PowerSumExpansion) -> SchurExpansion:
    """Inverse basis change; raises IntegralityError on fractional output."""
    by_degree: dict = {}
    for mu, c in p.terms.items():
        by_degree.setdefault(sum(mu), {})[mu] = c
    out: dict = {}
    for n, terms in by_degree.items():
        for lam in partitions_of(n):
            val = Fraction(0)
            for mu, c in terms.items():
                chi = character(lam, mu)
                if chi:
                    val += c * chi
            if not val:
                continue
            if val.denominator != 1:
                raise IntegralityError(
                    f"multiplicity of s[{list(lam)}] is {val}, not an integer")
            out[lam] = val.numerator
    return SchurExpansion(out)


def _character_vector(f: SchurExpansion, n: int) -> dict:
    """Class function of the degree-n part of f, as mu -> integer."""
    vec = {}
    for mu in partitions_of(n):
        val = 0
        for lam, mult in f.terms.items():
            if sum(lam) == n:
                val += mult * character(lam, mu)
        if val:
            vec[mu] = val
    return vec


def kronecker(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Internal (tensor) product of same-degree pieces.

    Mismatched homogeneous degrees contribute zero, so mixed inputs are
    handled componentwise.  Multiply pointwise as class functions and
    decompose; n! divides every projection exactly.
    """
    out = SchurExpansion()
    for n in f.degrees() & g.degrees():
        cf = _character_vector(f, n)
        cg = _character_vector(g, n)
        prod = {mu: cf[mu] * cg[mu] for mu in cf if mu in cg}
        if not prod:
            continue
        nfact = factorial(n)
        res = {}
        for lam in partitions_of(n):
            val = 0
            for mu, c in prod.items():
                chi = character(lam, mu)
                if chi:
                    val += class_size(mu) * c * chi
            if val % nfact:
                raise IntegralityError(
                    f"kronecker projection onto s[{list(lam)}] not integral")
            if val:
                res[lam] = val // nfact
        out = out + SchurExpansion(res)
    return out
