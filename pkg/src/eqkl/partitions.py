"""Integer partitions: validation, conjugation, hooks, enumeration.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Tuples double as dict keys for
all the sparse expansions built on top of them.
"""

from math import factorial


def check_partition(parts) -> tuple:
    """Validate and normalize a partition given as any iterable."""
    lam = tuple(int(p) for p in parts)
    for k in range(len(lam) - 1):
        if lam[k] < lam[k + 1]:
            raise ValueError(f"parts not weakly decreasing: {lam}")
    if lam and lam[-1] < 1:
        raise ValueError(f"parts must be positive: {lam}")
    return lam


def degree(lam: tuple) -> int:
    return sum(lam)


def conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def hook_lengths(lam: tuple) -> list:
    """Hook length of every cell, row by row."""
    conj = conjugate(lam)
    return [
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


def dim_irrep(lam: tuple) -> int:
    """Dimension of the symmetric-group irreducible indexed by lam.

    Hook-length formula; exact integer division.
    """
    n = sum(lam)
    num = factorial(n)
    for h in hook_lengths(lam):
        num //= h
    return num


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n (descending lexicographic order)."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def z_factor(mu: tuple) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    mult = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part ** m * factorial(m)
    return z


def class_size(mu: tuple) -> int:
    """Number of permutations of cycle type mu in S_{|mu|}."""
    return factorial(sum(mu)) // z_factor(mu)


def multiplicities(lam: tuple) -> dict:
    """Map part -> multiplicity."""
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    return mult
