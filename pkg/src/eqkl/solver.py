"""The palindromic solver shared by every Kazhdan-Lusztig computation.

Payload-generic: works for integer Laurent polynomials and for graded
Schur expansions alike, needing only coeff/support/reverse and the
abelian-group operators on both the polynomial and its coefficients.
"""


class AntipalindromicityError(ValueError):
    """t^d R(1/t) != -R(t); carries the first offending exponent."""

    def __init__(self, exponent, detail=""):
        self.exponent = exponent
        super().__init__(
            f"antipalindromicity fails at t^{exponent}"
            + (f": {detail}" if detail else ""))


def check_antipalindromic(d: int, R) -> None:
    exps = sorted(R.support())
    for e in exps:
        if R.coeff(d - e) != -R.coeff(e):
            raise AntipalindromicityError(
                e, f"coeff at t^{d - e} is not the negated coeff at t^{e}")


def palindromic_solve(d: int, R):
    """The unique P with deg P < d/2 and t^d P(1/t) - P(t) = R(t).

    Concretely coeff(P, i) = coeff(R, d - i) for 0 <= 2i < d.  The defect
    identity is re-verified exactly on the way out, so any upstream bug
    surfaces here rather than in downstream tables.
    """
    if d < 1:
        raise ValueError("solver needs d >= 1")
    check_antipalindromic(d, R)
    kind = type(R)
    P = kind({i: R.coeff(d - i) for i in range(0, (d + 1) // 2)})
    if P.reverse(d) - P != R:
        raise AntipalindromicityError(-1, "defect identity failed on output")
    return P


def coefficient_recursion(i: int, rank: int, orbits):
    """Single-coefficient recursion: C_i as an alternating sum of induced
    products over orbit classes of flats.

    Each orbit is (crk, max_j, induced) where induced(j, idx) returns the
    character of the induction of the degree-j piece tensored with the
    recursively known coefficient at index idx, or a falsy value when that
    coefficient vanishes.
    """
    if rank > 0 and 2 * i >= rank:
        raise ValueError(f"need i < rank/2, got i={i}, rank={rank}")
    total = None
    for crk, max_j, induced in orbits:
        for j in range(max_j + 1):
            idx = crk - i + j
            if idx < 0:
                continue
            term = induced(j, idx)
            if not term:
                continue
            if j % 2:
                term = -term
            total = term if total is None else total + term
    if total is None:
        from .schur import SchurExpansion
        return SchurExpansion()
    return total
