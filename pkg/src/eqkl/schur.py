"""Virtual symmetric functions in the Schur basis, with exact integers.

A SchurExpansion is a finite map partition -> nonzero integer multiplicity.
Products use the honest Littlewood-Richardson rule (layered horizontal
strips with the ballot condition); multiplication by a single row or
column goes through the Pieri fast paths.
"""

from .partitions import check_partition, dim_irrep

# LR products are memoized per ordered pair of partitions; the table is
# deterministic, so concurrent idempotent inserts are harmless.
_LR_CACHE: dict = {}


class SchurExpansion:
    """Integer combination of Schur functions, possibly inhomogeneous."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for lam, mult in dict(terms).items():
                if mult:
                    clean[tuple(lam)] = int(mult)
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def single(cls, lam, mult: int = 1):
        return cls({check_partition(lam): mult})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for lam, mult in other.terms.items():
            new = out.get(lam, 0) + mult
            if new:
                out[lam] = new
            else:
                out.pop(lam, None)
        res = SchurExpansion.__new__(SchurExpansion)
        res.terms = out
        return res

    def __neg__(self):
        res = SchurExpansion.__new__(SchurExpansion)
        res.terms = {lam: -m for lam, m in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, SchurExpansion):
            return schur_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int):
        if c == 0:
            return SchurExpansion()
        res = SchurExpansion.__new__(SchurExpansion)
        res.terms = {lam: c * m for lam, m in self.terms.items()}
        return res

    def degrees(self) -> set:
        return {sum(lam) for lam in self.terms}

    def homogeneous_part(self, n: int):
        return SchurExpansion(
            {lam: m for lam, m in self.terms.items() if sum(lam) == n})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def dimension(self) -> int:
        """Replace each s[lam] by the hook-length dimension."""
        return sum(m * dim_irrep(lam) for lam, m in self.terms.items())

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.terms.values())

    def multiplicity(self, lam) -> int:
        return self.terms.get(tuple(lam), 0)

    def __repr__(self):
        from .render import schur_text
        return f"SchurExpansion({schur_text(self)})"


def _horizontal_strips(shape, k):
    """All shapes obtained from `shape` (a tuple) by adding a horizontal
    strip of k boxes, together with per-row added counts."""
    rows = len(shape)
    results = []

    def grow(idx, remaining, acc):
        # row idx of the new shape; may extend one row past the old shape
        if idx > rows:
            if remaining == 0:
                results.append(acc)
            return
        old = shape[idx] if idx < rows else 0
        cap = shape[idx - 1] if idx > 0 else old + remaining
        hi = min(cap - old, remaining)
        if hi < 0:
            return
        # boxes added in rows > idx cannot exceed what later rows admit;
        # cheap prune: give everything remaining a chance, recursion trims
        for add in range(hi, -1, -1):
            grow(idx + 1, remaining - add, acc + (add,))

    grow(0, k, ())
    return results


def pieri_row(f: SchurExpansion, k: int) -> SchurExpansion:
    """Multiply by the one-row Schur function s[k] (= h_k)."""
    if k < 0:
        raise ValueError("strip size must be nonnegative")
    if k == 0:
        return f
    out = {}
    for lam, mult in f.terms.items():
        for counts in _horizontal_strips(lam, k):
            nu = _apply_counts(lam, counts)
            out[nu] = out.get(nu, 0) + mult
    return SchurExpansion(out)


def pieri_col(f: SchurExpansion, k: int) -> SchurExpansion:
    """Multiply by the one-column Schur function s[1^k] (= e_k)."""
    if k < 0:
        raise ValueError("strip size must be nonnegative")
    if k == 0:
        return f
    out = {}
    for lam, mult in f.terms.items():
        for nu in _vertical_strips(lam, k):
            out[nu] = out.get(nu, 0) + mult
    return SchurExpansion(out)


def _vertical_strips(shape, k):
    rows = len(shape)
    results = []

    def grow(idx, remaining, acc):
        if idx > rows + k:
            return
        if remaining == 0:
            nu = tuple(
                (shape[i] if i < rows else 0) + (acc[i] if i < len(acc) else 0)
                for i in range(max(rows, len(acc))))
            results.append(tuple(p for p in nu if p))
            return
        old = shape[idx] if idx < rows else 0
        prev = (shape[idx - 1] if idx - 1 < rows else 0) + \
            (acc[idx - 1] if idx >= 1 and idx - 1 < len(acc) else 0)
        for add in (1, 0):
            new = old + add
            if add and (idx > 0 and new > prev):
                continue
            if not add and idx >= rows and remaining:
                # no more rows can ever receive a box
                return
            grow(idx + 1, remaining - add, acc + (add,))

    grow(0, k, ())
    return results


def _apply_counts(shape, counts):
    nu = []
    for i in range(len(counts)):
        old = shape[i] if i < len(shape) else 0
        new = old + counts[i]
        if new:
            nu.append(new)
    return tuple(nu)


def _lr_pair(lam: tuple, mu: tuple) -> dict:
    """Expansion of s[lam]*s[mu]: map nu -> LR coefficient.

    Enumerates layered horizontal strips of sizes mu_1, mu_2, ... on top of
    lam.  The ballot condition between consecutive layers j, j+1 is
    (#j in rows <= r) >= (#j+1 in rows <= r+1) for every r, which is the
    worst reading-word prefix.
    """
    key = (lam, mu)
    hit = _LR_CACHE.get(key)
    if hit is not None:
        return hit
    if len(mu) == 1:
        out = {}
        for counts in _horizontal_strips(lam, mu[0]):
            nu = _apply_counts(lam, counts)
            out[nu] = out.get(nu, 0) + 1
        _LR_CACHE[key] = out
        return out

    result: dict = {}

    def place(shape, prev_counts, idx):
        if idx == len(mu):
            result[shape] = result.get(shape, 0) + 1
            return
        k = mu[idx]
        for counts in _horizontal_strips(shape, k):
            if idx > 0 and not _ballot_ok(prev_counts, counts):
                continue
            place(_apply_counts(shape, counts), counts, idx + 1)

    place(lam, (), 0)
    _LR_CACHE[key] = result
    return result


def _ballot_ok(upper, lower):
    """Prefix condition between consecutive strip layers (see _lr_pair).

    Needed for every r >= -1, the r = -1 instance forcing the deeper layer
    out of row 0 entirely.
    """
    up = 0
    low = lower[0] if lower else 0
    if up < low:
        return False
    rows = max(len(upper), len(lower))
    for r in range(rows):
        up += upper[r] if r < len(upper) else 0
        low += lower[r + 1] if r + 1 < len(lower) else 0
        if up < low:
            return False
    return True


def schur_multiply(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    """Bilinear Littlewood-Richardson product."""
    out = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            # enumerate strips from the smaller content partition
            if (sum(mu), len(mu)) <= (sum(lam), len(lam)):
                table = _lr_pair(lam, mu)
            else:
                table = _lr_pair(mu, lam)
            c = a * b
            for nu, coef in table.items():
                new = out.get(nu, 0) + c * coef
                if new:
                    out[nu] = new
                else:
                    del out[nu]
    return SchurExpansion(out)


def is_effective(f) -> bool:
    """True iff every stored multiplicity is nonnegative.

    Accepts a SchurExpansion or anything exposing .is_effective().
    """
    return f.is_effective()


def dimension(f):
    """Dimension specialization; defers to the argument's own method."""
    return f.dimension()
