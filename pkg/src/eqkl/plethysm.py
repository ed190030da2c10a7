"""Plethysm of graded symmetric functions.

Everything runs through a sparse power-sum representation: a map
(t-exponent, power-sum partition) -> exact rational.  Substituting into
p_r sends every p_s to p_{rs} and the grading variable t to t^r, which is
composition of graded species; linearity over the t-Laurent coefficients
of the outer function does the rest.
"""

from fractions import Fraction

from .characters import from_power_sums, to_power_sums
from .graded import GradedSchur
from .schur import SchurExpansion

# p-series: dict[(t_exp, mu)] -> Fraction, no zero values stored.


def graded_to_p(f: GradedSchur) -> dict:
    out = {}
    for e, v in f.coeffs.items():
        for mu, c in to_power_sums(v).terms.items():
            out[(e, mu)] = out.get((e, mu), Fraction(0)) + c
    return {k: c for k, c in out.items() if c}


def p_to_graded(ps: dict) -> GradedSchur:
    """Convert back to Schur coefficients; integrality is asserted."""
    from .characters import PowerSumExpansion
    by_t: dict = {}
    for (e, mu), c in ps.items():
        by_t.setdefault(e, {})[mu] = c
    return GradedSchur({
        e: from_power_sums(PowerSumExpansion(terms))
        for e, terms in by_t.items()})


def p_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        new = out.get(k, Fraction(0)) + c
        if new:
            out[k] = new
        else:
            out.pop(k, None)
    return out


def p_scale(a: dict, c) -> dict:
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def p_mul(a: dict, b: dict, max_deg: int) -> dict:
    """Product truncated to symmetric-function degree <= max_deg."""
    out: dict = {}
    for (e1, mu1), c1 in a.items():
        d1 = sum(mu1)
        for (e2, mu2), c2 in b.items():
            if d1 + sum(mu2) > max_deg:
                continue
            key = (e1 + e2, tuple(sorted(mu1 + mu2, reverse=True)))
            new = out.get(key, Fraction(0)) + c1 * c2
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def p_substitute(ps: dict, r: int, max_deg: int) -> dict:
    """p_r applied to a p-series: parts and t-exponents scale by r."""
    out = {}
    for (e, mu), c in ps.items():
        if r * sum(mu) > max_deg:
            continue
        out[(r * e, tuple(r * part for part in mu))] = c
    return out


def p_truncate(ps: dict, max_deg: int) -> dict:
    return {k: c for k, c in ps.items() if sum(k[1]) <= max_deg}


def p_sf_degree_part(ps: dict, n: int) -> dict:
    return {k: c for k, c in ps.items() if sum(k[1]) == n}


def p_compose(fp: dict, gp: dict, max_deg: int) -> dict:
    """Plethysm at the p-series level: substitute gp into each p-monomial
    of fp.  Power products over partitions are memoized per call."""
    subs = {}

    def g_at(r):
        if r not in subs:
            subs[r] = p_substitute(gp, r, max_deg)
        return subs[r]

    prods: dict = {(): {(0, ()): Fraction(1)}}

    def prod_for(mu):
        if mu in prods:
            return prods[mu]
        head, rest = mu[0], mu[1:]
        res = p_mul(g_at(head), prod_for(rest), max_deg)
        prods[mu] = res
        return res

    out: dict = {}
    for (e, mu), c in fp.items():
        for (e2, nu), c2 in prod_for(mu).items():
            key = (e + e2, nu)
            new = out.get(key, Fraction(0)) + c * c2
            if new:
                out[key] = new
            else:
                del out[key]
    return out


def plethysm(f: GradedSchur, g: GradedSchur, max_deg: int) -> GradedSchur:
    """f[g] truncated to symmetric-function degree <= max_deg."""
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    gp = graded_to_p(g)
    if any(not mu for (_, mu) in gp):
        raise ValueError("plethysm into a series with a constant term")
    fp = graded_to_p(f)
    return p_to_graded(p_compose(fp, gp, max_deg))


def h_sum(max_deg: int) -> GradedSchur:
    """1-free sum of complete homogeneous functions h_1 + ... + h_max."""
    return GradedSchur(
        {0: SchurExpansion({(k,): 1 for k in range(1, max_deg + 1)})})
