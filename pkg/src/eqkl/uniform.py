"""Equivariant computations for uniform matroids U_{m,d} (rank d on m+d
elements) under the full symmetric group.

Two independent routes to the Kazhdan-Lusztig coefficients are exposed:
the graded recursion through the palindromic solver, and the closed-form
multiplicity-free sum; the generating-function verifiers tie both to the
characteristic-polynomial side.
"""

from fractions import Fraction
from math import factorial

from .graded import GradedSchur
from .schur import SchurExpansion, pieri_col, pieri_row, schur_multiply
from .series import TruncSeries
from .solver import coefficient_recursion, palindromic_solve

DEFAULT_GF_ORDER = 8


def os_uniform(m: int, d: int, i: int) -> SchurExpansion:
    """Degree-i piece of the Orlik-Solomon algebra of U_{m,d}.

    Below the top degree this is the i-th exterior power of the
    permutation representation, i.e. s[1^i] * s[m+d-i]; the top piece is
    the single hook s[m+1, 1^(d-1)].
    """
    if i < 0 or i > d:
        raise ValueError(f"need 0 <= i <= d, got i={i}, d={d}")
    if i == 0:
        return SchurExpansion.single((m + d,)) if m + d else \
            SchurExpansion.one()
    if i < d:
        return pieri_col(SchurExpansion.single((m + d - i,)), i)
    return SchurExpansion.single((m + 1,) + (1,) * (d - 1))


def char_poly_uniform(m: int, d: int) -> GradedSchur:
    """Equivariant characteristic polynomial of U_{m,d}."""
    out = GradedSchur()
    for p in range(d + 1):
        term = os_uniform(m, d, p)
        if p % 2:
            term = -term
        out = out + GradedSchur({d - p: term})
    return out


_KL_UNIFORM: dict = {}


def kl_uniform_recursive(m: int, d: int) -> GradedSchur:
    """Solve the uniform-family recursion
    t^d P_{m,d}(1/t) = H_{m,d}(t) + sum_{k=1}^{d} H_{0,d-k}(t) P_{m,k}(t)
    for P_{m,d}; the k = d term is P_{m,d} itself."""
    if d < 0 or m < 0:
        raise ValueError("need m, d >= 0")
    key = (m, d)
    hit = _KL_UNIFORM.get(key)
    if hit is not None:
        return hit
    if d == 0:
        result = GradedSchur({0: os_uniform(m, 0, 0)})
    else:
        R = char_poly_uniform(m, d)
        for k in range(1, d):
            R = R + char_poly_uniform(0, d - k) * kl_uniform_recursive(m, k)
        result = palindromic_solve(d, R)
    _KL_UNIFORM[key] = result
    return result


def closed_coefficient(m: int, d: int, i: int) -> SchurExpansion:
    """Closed-form coefficient of t^i: for i > 0 the multiplicity-free sum
    of s[d+m-2i-b+1, b+1, 2^(i-1)] over 1 <= b <= min(m, d-2i)."""
    if i == 0:
        return SchurExpansion.single((m + d,)) if m + d else \
            SchurExpansion.one()
    out = {}
    for b in range(1, min(m, d - 2 * i) + 1):
        lam = (d + m - 2 * i - b + 1, b + 1) + (2,) * (i - 1)
        out[lam] = 1
    return SchurExpansion(out)


def kl_uniform_closed(m: int, d: int) -> GradedSchur:
    if d < 0 or m < 0:
        raise ValueError("need m, d >= 0")
    out = {0: closed_coefficient(m, d, 0)}
    i = 1
    while 2 * i < d:
        c = closed_coefficient(m, d, i)
        if c:
            out[i] = c
        i += 1
    return GradedSchur(out)


def kl_uniform_coefficient(m: int, d: int, i: int) -> SchurExpansion:
    """Third route: the coefficient-level recursion over flat orbits.

    Orbits are the ranks p < d (p-subsets, localization boolean, restriction
    U_{m,d-p}) plus the top flat; inductions from the Young stabilizers are
    plain Schur products.
    """
    if d == 0:
        return closed_coefficient(m, 0, i) if i == 0 else SchurExpansion()
    if 2 * i >= d:
        return SchurExpansion()

    def known(mm, dd, idx):
        if dd == 0:
            return closed_coefficient(mm, 0, 0) if idx == 0 else None
        if idx < 0 or 2 * idx >= dd:
            return None
        return kl_uniform_coefficient(mm, dd, idx)

    def orbit(p):
        def induced(j, idx):
            c = known(m, d - p, idx)
            if not c:
                return None
            return schur_multiply(os_uniform(0, p, j), c)
        return (d - p, p, induced)

    def top(j, idx):
        if idx != 0:
            return None
        return os_uniform(m, d, j)

    orbits = [orbit(p) for p in range(d)] + [(0, d, top)]
    return coefficient_recursion(i, d, orbits)


def _tail_shape(first: int, second: int, twos: int):
    """Normalize the generalized tuple [first, second, 2^twos]: a negative
    exponent strips that many trailing 2s (here only -1 occurs), killing
    the term unless the stripped entries equal 2."""
    if twos >= 0:
        parts = (first, second) + (2,) * twos
    elif twos == -1:
        if second != 2:
            return None
        parts = (first,) if first else ()
    else:
        return None
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        return None
    if parts and parts[-1] < 1:
        return None
    return parts


def psi_expansion(i: int, r: int, m: int) -> SchurExpansion:
    """Brute-force Pieri expansion of the interlacing sum
    Psi(i,r,m) = sum_b sum_k s[k] s[r+k+m-b+1, b+1, 2^(i-k-1)]."""
    total = SchurExpansion()
    for b in range(1, m + 1):
        for k in range(max(0, b - r), i + 1):
            lam = _tail_shape(r + k + m - b + 1, b + 1, i - k - 1)
            if lam is None:
                continue
            total = total + pieri_row(SchurExpansion.single(lam), k)
    return total


def phi_expansion(i: int, r: int, m: int) -> SchurExpansion:
    return psi_expansion(i + r, -r, m)


def interlace_count(A: int, B: int, C: int, D: int,
                    i: int, r: int, m: int) -> int:
    """Multiplicity of s[A, B, C, 2^D] in Psi(i, r, m), by the two
    interlacing-interval counts (strip sizes k = i-D-2 and k = i-D-1)."""
    if D < 0 or not (A >= B >= C >= 2):
        raise ValueError(f"malformed shape ({A},{B},{C},2^{D})")
    if A + B + C + 2 * D != 2 * i + r + m:
        return 0
    eps1 = min(m, r + i - D - 1 + m - B, B - 1, i - D - 2 + r)
    eps2 = min(m, r + i - D + m - B, B - 1, i - D - 1 + r)
    ups1 = max(C - 1, r + i - D - 1 + m - A)
    ups2 = max(C - 1, r + i - D + m - A)
    return max(0, eps1 - ups1 + 1) + max(0, eps2 - ups2 + 1)


def symmetry_and_stability(m: int, d: int, i: int) -> dict:
    """The (m,d) <-> (d-2i, m+2i) coefficient symmetry, and the stable-range
    description: for d >= m+2i the partitions of the coefficient grow from
    those at d = m+2i by first-row padding only."""
    if i < 1:
        raise ValueError("need i >= 1")
    report = {}
    here = closed_coefficient(m, d, i)
    if d - 2 * i >= 0:
        mirror = closed_coefficient(d - 2 * i, m + 2 * i, i)
        report["symmetry"] = here == mirror
    if d >= m + 2 * i:
        base = closed_coefficient(m, m + 2 * i, i)
        shift = d - (m + 2 * i)
        padded = SchurExpansion(
            {(lam[0] + shift,) + lam[1:]: mult
             for lam, mult in base.terms.items()})
        report["stable_range_padding"] = here == padded
    return report


# ---------------------------------------------------------------------------
# Generating-function verifiers.  Series live in exponents (t, u, x) with
# the grading variable unweighted; every identity is checked with cleared
# denominators except where the divisor is a unit.

def _schur_series(nvars, bound, weights):
    return TruncSeries(nvars, bound, weights=weights)


def _s_of(monomial_exps, nvars, bound, weights):
    """s(w) = sum_n w^n s[n] for the monomial w given by exponents."""
    out = _schur_series(nvars, bound, weights)
    n = 0
    while True:
        exps = tuple(e * n for e in monomial_exps)
        if sum(w * e for w, e in zip(weights, exps)) > bound:
            break
        out.add_term(exps, SchurExpansion.single((n,)) if n else
                     SchurExpansion.one())
        n += 1
    return out


def _e_series(bound):
    """sum_n t^n s[1^n] in variables (t, u)."""
    out = TruncSeries(2, bound, weights=(1, 1))
    for n in range(bound + 1):
        val = SchurExpansion.single((1,) * n) if n else SchurExpansion.one()
        out.add_term((n, 0), val)
    return out


def _hook_generating_check(order: int) -> bool:
    """(t+u) * sum t^e u^m s[m+1,1^e]  ==  -1 + s(u) * (sum t^j s[1^j])."""
    bound = order
    lhs = TruncSeries(2, bound, weights=(1, 1))
    for e in range(bound):
        for m in range(bound - e):
            lhs.add_term((e, m),
                         SchurExpansion.single((m + 1,) + (1,) * e))
    t_plus_u = TruncSeries(2, bound, weights=(1, 1))
    t_plus_u.add_term((1, 0), SchurExpansion.one())
    t_plus_u.add_term((0, 1), SchurExpansion.one())
    s_u = _s_of((0, 1), 2, bound, (1, 1))
    rhs = s_u * _e_series(bound)
    rhs.add_term((0, 0), -SchurExpansion.one())
    return t_plus_u * lhs == rhs


def _assemble_h(order: int) -> TruncSeries:
    """H(t,u,x) = sum_{d>=1, m>=0} H_{m,d}(t) u^d x^m, truncated by d+m."""
    out = TruncSeries(3, order, weights=(0, 1, 1))
    for d in range(1, order + 1):
        for m in range(order - d + 1):
            for e, v in char_poly_uniform(m, d).coeffs.items():
                out.add_term((e, d, m), v)
    return out


def _assemble_p(order: int, closed: bool) -> TruncSeries:
    """P(t,u,x) from the computed KL polynomials (d >= 1)."""
    out = TruncSeries(3, order, weights=(0, 1, 1))
    for d in range(1, order + 1):
        for m in range(order - d + 1):
            poly = kl_uniform_closed(m, d) if closed else \
                kl_uniform_recursive(m, d)
            for e, v in poly.coeffs.items():
                out.add_term((e, d, m), v)
    return out


def _char_series_check(order: int) -> bool:
    """H(t,u,x)(u-x)(tu-x)s(u) == u(tu-x)(s(x)-s(u)) + tu(u-x)(s(tu)-s(x))."""
    w = (0, 1, 1)
    H = _assemble_h(order)
    one = SchurExpansion.one()
    u_minus_x = TruncSeries(3, order, {(0, 1, 0): one, (0, 0, 1): -one}, w)
    tu_minus_x = TruncSeries(3, order, {(1, 1, 0): one, (0, 0, 1): -one}, w)
    mono_u = TruncSeries(3, order, {(0, 1, 0): one}, w)
    mono_tu = TruncSeries(3, order, {(1, 1, 0): one}, w)
    s_u = _s_of((0, 1, 0), 3, order, w)
    s_x = _s_of((0, 0, 1), 3, order, w)
    s_tu = _s_of((1, 1, 0), 3, order, w)
    lhs = H * u_minus_x * tu_minus_x * s_u
    rhs = mono_u * tu_minus_x * (s_x - s_u) + mono_tu * u_minus_x * (s_tu - s_x)
    return lhs == rhs


def _char_series_at_x0_check(order: int) -> bool:
    """1 + H(t,u,0) == s(tu)/s(u), via the series inverse of s(u)."""
    w = (0, 1)
    out = TruncSeries(2, order, weights=w)
    for d in range(1, order + 1):
        for e, v in char_poly_uniform(0, d).coeffs.items():
            out.add_term((e, d), v)
    out.add_term((0, 0), SchurExpansion.one())
    s_u = _s_of((0, 1), 2, order, w)
    s_tu = _s_of((1, 1), 2, order, w)
    return out == s_tu * s_u.inverse(SchurExpansion.one())


def _recursion_series_check(order: int) -> bool:
    """P(1/t, tu, x) == H(t,u,x) + (1 + H(t,u,0)) P(t,u,x)."""
    P = _assemble_p(order, closed=False)
    H = _assemble_h(order)
    H0 = TruncSeries(3, order, weights=(0, 1, 1))
    for (e, d, m), v in H.terms.items():
        if m == 0:
            H0.add_term((e, d, 0), v)
    H0.add_term((0, 0, 0), SchurExpansion.one())
    lhs = P.map_exponents(lambda exps: (exps[1] - exps[0],) + exps[1:])
    rhs = H + H0 * P
    return lhs == rhs


def _palindromy_series_check(order: int) -> bool:
    """R(1/t, tu, x) == R(t,u,x) with the closed-form P'."""
    w = (0, 1, 1)
    one = SchurExpansion.one()
    P = _assemble_p(order, closed=True)
    s_tu = _s_of((1, 1, 0), 3, order, w)
    R = P * s_tu
    # tu (s(tu) - s(x)) / (tu - x) = sum_{n>=1} s[n] sum_{a+b=n-1} (tu)^(a+1) x^b
    for n in range(1, order + 1):
        val = SchurExpansion.single((n,))
        for a in range(n):
            b = n - 1 - a
            R.add_term((a + 1, a + 1, b), val)
    flipped = R.map_exponents(lambda exps: (exps[1] - exps[0],) + exps[1:])
    return flipped == R


def _dimension_series_check(order: int) -> bool:
    """Exponential shadow: H(t,u,x)(u-x)(tu-x) ==
    u(tu-x)(exp(x-u)-1) + tu(u-x)(exp(tu-u)-exp(x-u))."""
    w = (0, 1, 1)
    one = Fraction(1)
    H = TruncSeries(3, order, weights=w)
    for d in range(1, order + 1):
        for m in range(order - d + 1):
            dim_poly = char_poly_uniform(m, d).dimension()
            scale = Fraction(1, factorial(d + m))
            for e, c in dim_poly.coeffs.items():
                H.add_term((e, d, m), c * scale)
    u_minus_x = TruncSeries(3, order, {(0, 1, 0): one, (0, 0, 1): -one}, w)
    tu_minus_x = TruncSeries(3, order, {(1, 1, 0): one, (0, 0, 1): -one}, w)
    mono_u = TruncSeries(3, order, {(0, 1, 0): one}, w)
    mono_tu = TruncSeries(3, order, {(1, 1, 0): one}, w)
    x_minus_u = TruncSeries(3, order, {(0, 0, 1): one, (0, 1, 0): -one}, w)
    tu_minus_u = TruncSeries(3, order, {(1, 1, 0): one, (0, 1, 0): -one}, w)
    exp_xu = x_minus_u.exp(one)
    exp_tuu = tu_minus_u.exp(one)
    neg_one = TruncSeries(3, order, {(0, 0, 0): -one}, w)
    lhs = H * u_minus_x * tu_minus_x
    rhs = mono_u * tu_minus_x * (exp_xu + neg_one) + \
        mono_tu * u_minus_x * (exp_tuu - exp_xu)
    return lhs == rhs


def gf_checks(max_order: int = DEFAULT_GF_ORDER) -> dict:
    """All generating-function identities at truncation <= max_order."""
    return {
        "hook_series": _hook_generating_check(max_order),
        "char_series": _char_series_check(max_order),
        "char_series_x0": _char_series_at_x0_check(max_order),
        "recursion_series": _recursion_series_check(max_order),
        "palindromy_series": _palindromy_series_check(max_order),
        "dimension_series": _dimension_series_check(max_order),
    }
