"""Matroids, lattices of flats, Mobius functions, characteristic
polynomials, and the nonequivariant Kazhdan-Lusztig recursion.

Input formats: explicit bases, a graph (graphic matroid), or a uniform
(m, d) shortcut -- everything the computations downstream touch, plus
arbitrary small examples.  The KL recursion works entirely at the level
of the lattice of flats; minors of uniform and graphic matroids stay in
their families, which is what makes the memoization keys cheap and safe.
"""

import warnings
from math import factorial

from .partitions import multiplicities, partitions_of
from .poly import IntPoly, falling_factorial
from .solver import palindromic_solve

DEFAULT_GROUND_LIMIT = 16
DEFAULT_FLAT_LIMIT = 5000


class Matroid:
    """Base class: an ordered ground set plus a rank oracle."""

    ground: tuple

    def rank_of(self, subset) -> int:
        raise NotImplementedError

    @property
    def rank(self) -> int:
        return self.rank_of(frozenset(self.ground))

    def closure(self, subset) -> frozenset:
        subset = frozenset(subset)
        r = self.rank_of(subset)
        return frozenset(
            e for e in self.ground
            if e in subset or self.rank_of(subset | {e}) == r)

    def loops(self) -> frozenset:
        return self.closure(frozenset())

    def is_flat(self, subset) -> bool:
        return self.closure(subset) == frozenset(subset)

    def simplified(self) -> "Matroid":
        """Drop loops and keep one representative per parallel class."""
        loops = self.loops()
        reps = {}
        order = {e: i for i, e in enumerate(self.ground)}
        for e in self.ground:
            if e in loops:
                continue
            key = self.closure({e})
            if key not in reps or order[e] < order[reps[key]]:
                reps[key] = e
        kept = tuple(sorted(reps.values(), key=order.get))
        if kept == self.ground:
            return self
        return RankMatroid(kept, self.rank_of)

    def iso_key(self):
        """Hashable isomorphism-class key, or None when unknown."""
        return None

    def localize(self, flat):
        """Matroid on the flat; its lattice is the lower interval."""
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError(f"{sorted(map(repr, flat))} is not a flat")
        order = {e: i for i, e in enumerate(self.ground)}
        kept = tuple(sorted(flat, key=order.get))
        return RankMatroid(kept, self.rank_of)

    def restrict(self, flat):
        """Matroid on the complement; its lattice is the upper interval."""
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError(f"{sorted(map(repr, flat))} is not a flat")
        kept = tuple(e for e in self.ground if e not in flat)
        base = self.rank_of(flat)

        def contracted_rank(subset, _flat=flat, _base=base):
            return self.rank_of(frozenset(subset) | _flat) - _base

        return RankMatroid(kept, contracted_rank)


class RankMatroid(Matroid):
    """Matroid given by a bare rank oracle (minors, simplifications)."""

    def __init__(self, ground, rank_fn):
        self.ground = tuple(ground)
        self._rank_fn = rank_fn

    def rank_of(self, subset) -> int:
        return self._rank_fn(frozenset(subset))


class BasisMatroid(Matroid):
    """Explicit list of bases; the exchange axiom is validated up front."""

    def __init__(self, ground, bases):
        self.ground = tuple(ground)
        self.bases = frozenset(frozenset(b) for b in bases)
        if not self.bases:
            raise ValueError("need at least one basis")
        sizes = {len(b) for b in self.bases}
        if len(sizes) != 1:
            raise ValueError("bases of unequal cardinality")
        universe = frozenset(self.ground)
        for b in self.bases:
            if not b <= universe:
                raise ValueError("basis not contained in ground set")
        self._check_exchange()

    def _check_exchange(self):
        for b1 in self.bases:
            for b2 in self.bases:
                for x in b1 - b2:
                    cut = b1 - {x}
                    if not any(cut | {y} in self.bases for y in b2 - b1):
                        raise ValueError(
                            f"basis exchange fails for {sorted(b1)}, "
                            f"{sorted(b2)} at {x!r}")

    def rank_of(self, subset) -> int:
        subset = frozenset(subset)
        return max(len(subset & b) for b in self.bases)


class UniformMatroid(Matroid):
    """U_{m,d}: rank d, corank m, every d-subset a basis."""

    def __init__(self, m: int, d: int, ground=None):
        if m < 0 or d < 0:
            raise ValueError("need m >= 0 and d >= 0")
        self.m = m
        self.d = d
        self.ground = tuple(ground) if ground is not None else \
            tuple(range(m + d))
        if len(self.ground) != m + d:
            raise ValueError("ground size must be m + d")

    def rank_of(self, subset) -> int:
        return min(len(frozenset(subset)), self.d)

    def closure(self, subset) -> frozenset:
        subset = frozenset(subset)
        if len(subset) < self.d:
            return subset
        return frozenset(self.ground)

    def simplified(self):
        if self.d == 0:
            return UniformMatroid(0, 0, ())
        if self.d == 1 and self.m > 0:
            return UniformMatroid(0, 1, self.ground[:1])
        return self

    def iso_key(self):
        return ("U", self.m, self.d)

    def localize(self, flat):
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError("not a flat")
        kept = tuple(e for e in self.ground if e in flat)
        if len(flat) == self.m + self.d:
            return UniformMatroid(self.m, self.d, kept)
        return UniformMatroid(0, len(flat), kept)

    def restrict(self, flat):
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError("not a flat")
        kept = tuple(e for e in self.ground if e not in flat)
        if len(flat) == self.m + self.d:
            return UniformMatroid(0, 0, ())
        return UniformMatroid(self.m, self.d - len(flat), kept)


class GraphicMatroid(Matroid):
    """Cycle matroid of a (multi)graph; ground elements are edge ids."""

    def __init__(self, edges, ground=None):
        edges = {k: (u, v) for k, (u, v) in
                 (edges.items() if isinstance(edges, dict)
                  else enumerate(edges))}
        self.edge_map = edges
        self.ground = tuple(ground) if ground is not None else \
            tuple(sorted(edges))
        if set(self.ground) != set(edges):
            raise ValueError("ground ids must match edge ids")

    def _components(self, subset):
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        merges = 0
        for e in subset:
            u, v = self.edge_map[e]
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                merges += 1
        return merges, find

    def rank_of(self, subset) -> int:
        merges, _ = self._components(frozenset(subset))
        return merges

    def closure(self, subset) -> frozenset:
        subset = frozenset(subset)
        _, find = self._components(subset)
        out = set(subset)
        for e in self.ground:
            if e in out:
                continue
            u, v = self.edge_map[e]
            if u == v:
                out.add(e)
            elif find(u) == find(v):
                out.add(e)
        return frozenset(out)

    def simplified(self):
        seen = {}
        for e in self.ground:
            u, v = self.edge_map[e]
            if u == v:
                continue
            key = frozenset((u, v))
            seen.setdefault(key, e)
        kept = sorted(seen.values(), key=self.ground.index)
        if tuple(kept) == self.ground:
            return self
        return GraphicMatroid({e: self.edge_map[e] for e in kept}, kept)

    def iso_key(self):
        pairs = set()
        touched = set()
        for e in self.ground:
            u, v = self.edge_map[e]
            if u == v:
                return None
            key = frozenset((u, v))
            if key in pairs:
                return None
            pairs.add(key)
            touched.update((u, v))
        n = len(touched)
        if not self.ground:
            return ("B", 1)
        if len(pairs) == n * (n - 1) // 2:
            return ("B", n)
        return None

    def localize(self, flat):
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError("not a flat")
        kept = [e for e in self.ground if e in flat]
        return GraphicMatroid({e: self.edge_map[e] for e in kept}, kept)

    def restrict(self, flat):
        flat = frozenset(flat)
        if not self.is_flat(flat):
            raise ValueError("not a flat")
        _, find = self._components(flat)
        kept = [e for e in self.ground if e not in flat]
        edges = {e: (find(self.edge_map[e][0]), find(self.edge_map[e][1]))
                 for e in kept}
        return GraphicMatroid(edges, kept)


def matroid_from_json(obj) -> Matroid:
    """The documented JSON input formats: bases / graph / uniform."""
    kind = obj.get("type")
    if kind == "bases":
        return BasisMatroid(obj["ground"], obj["bases"])
    if kind == "graph":
        return GraphicMatroid([tuple(e) for e in obj["edges"]])
    if kind == "uniform":
        return UniformMatroid(int(obj["m"]), int(obj["d"]))
    raise ValueError(f"unknown matroid input type: {kind!r}")


def localize(M: Matroid, flat):
    return M.localize(flat)


def restrict(M: Matroid, flat):
    return M.restrict(flat)


class FlatLattice:
    """All flats with ranks, order relation, and Mobius data."""

    def __init__(self, flats, ranks, rank):
        self.flats = flats            # list of frozensets, sorted
        self.ranks = ranks
        self.rank = rank              # rank of the whole matroid
        n = len(flats)
        self.below = [
            [j for j in range(n) if ranks[j] < ranks[i] and
             flats[j] < flats[i]]
            for i in range(n)]
        self._mobius_bottom = None
        self._mobius_top = None

    def __len__(self):
        return len(self.flats)

    def mobius_bottom(self):
        """mu(empty flat, F) for every F."""
        if self._mobius_bottom is None:
            mob = [0] * len(self.flats)
            mob[0] = 1
            for i in range(1, len(self.flats)):
                mob[i] = -sum(mob[j] for j in self.below[i])
            self._mobius_bottom = mob
        return self._mobius_bottom

    def mobius_top(self):
        """mu(F, top flat) for every F."""
        if self._mobius_top is None:
            n = len(self.flats)
            above = [[] for _ in range(n)]
            for i in range(n):
                for j in self.below[i]:
                    above[j].append(i)
            mob = [0] * n
            mob[n - 1] = 1
            for i in range(n - 2, -1, -1):
                mob[i] = -sum(mob[j] for j in above[i])
            self._mobius_top = mob
        return self._mobius_top

    def char_poly(self) -> IntPoly:
        mob = self.mobius_bottom()
        out = {}
        for i, m in enumerate(mob):
            e = self.rank - self.ranks[i]
            out[e] = out.get(e, 0) + m
        return IntPoly(out)

    def lower_char_poly(self, i: int) -> IntPoly:
        """Characteristic polynomial of the localization at flats[i]."""
        mob = self.mobius_bottom()
        out = {}
        for j in self.below[i] + [i]:
            e = self.ranks[i] - self.ranks[j]
            out[e] = out.get(e, 0) + mob[j]
        return IntPoly(out)

    def upper_char_poly(self, i: int) -> IntPoly:
        """Characteristic polynomial of the restriction at flats[i]."""
        n = len(self.flats)
        upper = [j for j in range(n)
                 if j == i or (self.ranks[j] > self.ranks[i]
                               and self.flats[i] < self.flats[j])]
        mob = {i: 1}
        for j in sorted(upper, key=lambda j: self.ranks[j]):
            if j == i:
                continue
            mob[j] = -sum(
                mob[h] for h in upper
                if h in mob and h != j and
                (h == i or self.flats[h] < self.flats[j]))
        out = {}
        for j, m in mob.items():
            e = self.rank - self.ranks[j]
            out[e] = out.get(e, 0) + m
        return IntPoly(out)


def lattice_of_flats(M: Matroid, ground_limit: int = DEFAULT_GROUND_LIMIT,
                     flat_limit: int = DEFAULT_FLAT_LIMIT) -> FlatLattice:
    """Enumerate every flat by closure BFS, rank by rank."""
    if len(M.ground) > ground_limit:
        raise ValueError(
            f"ground set of size {len(M.ground)} exceeds limit {ground_limit}")
    order = {e: i for i, e in enumerate(M.ground)}
    bottom = M.closure(frozenset())
    seen = {bottom}
    current = [bottom]
    while current:
        nxt = set()
        for F in current:
            for e in M.ground:
                if e in F:
                    continue
                G = M.closure(F | {e})
                if G not in seen:
                    nxt.add(G)
        seen.update(nxt)
        if len(seen) > flat_limit:
            raise ValueError(f"more than {flat_limit} flats")
        current = list(nxt)
    flats = sorted(seen, key=lambda F: (len(F), sorted(order[e] for e in F)))
    ranks = [M.rank_of(F) for F in flats]
    pairs = sorted(zip(ranks, flats),
                   key=lambda rf: (rf[0], sorted(order[e] for e in rf[1])))
    ranks = [r for r, _ in pairs]
    flats = [F for _, F in pairs]
    return FlatLattice(flats, ranks, M.rank)


def flats(M: Matroid, **kwargs) -> FlatLattice:
    return lattice_of_flats(M, **kwargs)


def characteristic_polynomial(M: Matroid, **kwargs) -> IntPoly:
    """Mobius sum over the lattice; a loop forces the zero polynomial."""
    if M.loops():
        warnings.warn("matroid has a loop; characteristic polynomial is 0")
        return IntPoly.zero()
    return lattice_of_flats(M, **kwargs).char_poly()


_KL_MEMO: dict = {}


def kl_polynomial(M: Matroid, **kwargs) -> IntPoly:
    """Nonequivariant Kazhdan-Lusztig polynomial.

    Simplification first (the polynomial only sees the lattice of flats);
    the recursion solves t^rk P(1/t) - P(t) = sum over proper flats of
    chi_{M_F} P_{M^F}, and minors that stay inside the uniform or braid
    families are memoized by family key.
    """
    Ms = M.simplified()
    if Ms.rank == 0:
        return IntPoly.one()
    key = Ms.iso_key()
    if key is not None and key in _KL_MEMO:
        return _KL_MEMO[key]
    if key is not None and key[0] == "B":
        return braid_kl_polynomial(key[1])
    L = lattice_of_flats(Ms, **kwargs)
    R = IntPoly.zero()
    for i in range(1, len(L)):
        chi = L.lower_char_poly(i)
        R = R + chi * kl_polynomial(Ms.restrict(L.flats[i]), **kwargs)
    P = palindromic_solve(Ms.rank, R)
    if key is not None:
        _KL_MEMO[key] = P
    return P


def set_partition_count(lam: tuple) -> int:
    """Number of set partitions of [n] with block sizes lam."""
    n = sum(lam)
    count = factorial(n)
    for part in lam:
        count //= factorial(part)
    for mult in multiplicities(lam).values():
        count //= factorial(mult)
    return count


def braid_characteristic_polynomial(n: int) -> IntPoly:
    """chi of the rank n-1 braid matroid: (t-1)(t-2)...(t-n+1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return falling_factorial(n)


def braid_kl_polynomial(n: int) -> IntPoly:
    """KL polynomial of the braid matroid, by the partition-type orbit
    recursion over the lattice of set partitions.

    Flats of type lam contribute N_lam * prod_i chi_{B_{lam_i}} * P_{B_ell};
    the all-singletons flat is the bottom and moves to the other side.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    key = ("B", n)
    if key in _KL_MEMO:
        return _KL_MEMO[key]
    if n <= 2:
        P = IntPoly.one()
    else:
        R = IntPoly.zero()
        for lam in partitions_of(n):
            if lam == (1,) * n:
                continue
            chi = IntPoly.one()
            for part in lam:
                chi = chi * falling_factorial(part)
            term = chi * braid_kl_polynomial(len(lam))
            R = R + term * set_partition_count(lam)
        P = palindromic_solve(n - 1, R)
    _KL_MEMO[key] = P
    return P


def lattice_identity_checks(M: Matroid, **kwargs) -> dict:
    """Zero-sum and counting identities on the lattice of flats."""
    L = lattice_of_flats(M, **kwargs)
    report = {}
    if M.rank > 0:
        report["mobius_bottom_sum_zero"] = sum(L.mobius_bottom()) == 0
        report["mobius_top_sum_zero"] = sum(L.mobius_top()) == 0
    chi_sum = IntPoly.zero()
    for i in range(len(L)):
        chi_sum = chi_sum + L.upper_char_poly(i)
    report["restriction_char_sum_is_t_rank"] = \
        chi_sum == IntPoly({M.rank: 1})
    if M.rank > 0 and not M.loops():
        report["char_at_one_zero"] = L.char_poly()(1) == 0
    return report
