"""Dilate counting for cut-polytope configurations, by two independent routes.

Route one counts degree-m semigroup elements (iterated sumsets of the
configuration columns).  Route two counts integer points of the dilated
polytope inside the column lattice, deciding polytope membership by an exact
rational phase-1 simplex.  The two agree exactly when the toric ring is
normal; disagreements are surfaced, never masked.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from operator import add

from .errors import CostGuardError, VerificationError
from .graph import fundamental_cycles
from .lattice import LatticeBasis, lattice_basis, polytope_dimension
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class CountSequence:
    """Counts (i(P,0), ..., i(P,M)) for a d-dimensional lattice polytope."""

    dimension: int
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        object.__setattr__(self, "counts", counts)
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative")
        if not counts or counts[0] != 1:
            raise ValueError("counts must start with i(P,0) = 1")
        if len(counts) < self.dimension + 1:
            raise ValueError(
                f"need counts through dilate {self.dimension}, have {len(counts) - 1}")
        if any(b < a for a, b in zip(counts, counts[1:])):
            raise ValueError("dilate counts must be nondecreasing")

    @property
    def dilate_max(self) -> int:
        return len(self.counts) - 1

    def to_json(self) -> str:
        return json.dumps({"dimension": self.dimension, "counts": list(self.counts)})

    @classmethod
    def from_json(cls, text: str) -> "CountSequence":
        data = json.loads(text)
        try:
            return cls(dimension=int(data["dimension"]),
                       counts=tuple(int(c) for c in data["counts"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed count-sequence JSON: {exc}") from None


# ---------------------------------------------------------------------------
# route one: semigroup sums
# ---------------------------------------------------------------------------

def _semigroup_layer_sizes(columns, max_dilate: int) -> list[int]:
    zero = (0,) * len(columns[0])
    layer = {zero}
    sizes = [1]
    for _ in range(max_dilate):
        layer = {tuple(map(add, s, c)) for s in layer for c in columns}
        sizes.append(len(layer))
    return sizes


def count_semigroup(cfg, m: int) -> int:
    """Number of distinct sums of exactly m configuration columns (with repetition)."""
    if m < 0:
        raise ValueError("dilate must be nonnegative")
    return _semigroup_layer_sizes(cfg.columns, m)[m]


def semigroup_counts(cfg, max_dilate: int | None = None) -> CountSequence:
    """One sumset sweep giving all counts for m = 0..max_dilate (default d+1)."""
    d = polytope_dimension(cfg)
    M = d + 1 if max_dilate is None else max_dilate
    return CountSequence(dimension=d, counts=tuple(_semigroup_layer_sizes(cfg.columns, M)))


# ---------------------------------------------------------------------------
# route two: lattice points of the dilate, decided point by point
# ---------------------------------------------------------------------------

def _nonneg_combination_exists(columns, rhs) -> bool:
    """Exact feasibility of { lam >= 0 : sum_j lam_j * column_j = rhs }.

    Phase-1 simplex minimizing the artificial sum, with Bland's rule for
    termination.  The rational tableau is carried fraction-free: an integer
    matrix over a positive common denominator, pivoted exactly.
    """
    ncols = len(columns)
    nrows = len(rhs)
    rows = []
    for i in range(nrows):
        row = [col[i] for col in columns]
        row.append(rhs[i])
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)
    # objective row (reduced costs | -w) for minimizing w = sum of artificials
    obj = [0] * (ncols + 1)
    for row in rows:
        for j in range(ncols + 1):
            obj[j] -= row[j]
    rows.append(obj)
    if obj[ncols] == 0:
        return True
    basis = [ncols + i for i in range(nrows)]  # artificial ids follow the lambda ids
    den = 1
    objrow = nrows
    while True:
        entering = -1
        objc = rows[objrow]
        for j in range(ncols):
            if objc[j] < 0:
                entering = j
                break
        if entering < 0:
            return rows[objrow][ncols] == 0
        # ratio test over rows with positive entry in the entering column
        leave = -1
        for i in range(nrows):
            piv = rows[i][entering]
            if piv <= 0:
                continue
            if leave < 0:
                leave = i
                continue
            lhs = rows[i][ncols] * rows[leave][entering]
            rhs_ = rows[leave][ncols] * piv
            if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[leave]):
                leave = i
        if leave < 0:
            raise VerificationError("phase-1 objective unbounded; tableau corrupted")
        pivot_row = rows[leave]
        pivot = pivot_row[entering]
        for i in range(nrows + 1):
            if i == leave:
                continue
            row = rows[i]
            factor = row[entering]
            if factor:
                rows[i] = [(pivot * a - factor * b) // den
                           for a, b in zip(row, pivot_row)]
            elif den != 1:
                rows[i] = [(pivot * a) // den for a in row]
            elif pivot != 1:
                rows[i] = [pivot * a for a in row]
        den = pivot
        basis[leave] = entering
        if rows[objrow][ncols] == 0:
            return True


def membership_in_dilate(point, cfg, m: int) -> bool:
    """True iff `point` is a nonnegative rational combination of columns summing to m.

    `point` must have length r+1 and last coordinate m (the homogenizing row of
    the configuration already encodes the combination-weight constraint).
    """
    columns = cfg.columns
    point = tuple(int(x) for x in point)
    if len(point) != len(columns[0]):
        raise ValueError(f"point length {len(point)} != configuration row count {len(columns[0])}")
    if m < 0:
        raise ValueError("dilate must be nonnegative")
    if point[-1] != m:
        raise ValueError(f"last coordinate {point[-1]} must equal the dilate {m}")
    return _nonneg_combination_exists(columns, point)


class _DilatePruner:
    """Cheap necessary conditions for membership in a dilated cut polytope.

    Every cut vector meets a cycle in an even edge set, so for any cycle C and
    odd F within it, z(F) - z(C minus F) <= (|F| - 1) * m holds on the whole
    dilate.  Violations are rejected before the simplex runs; survivors still
    go to the exact test.
    """

    def __init__(self, g):
        self._quads = []
        self._general = []
        for cyc in fundamental_cycles(g):
            if len(cyc) == 4:
                self._quads.append(tuple(cyc))
            elif len(cyc) <= 12:
                k = len(cyc)
                subsets = [(F, size - 1)
                           for size in range(1, k + 1, 2)
                           for F in itertools.combinations(range(k), size)]
                self._general.append((tuple(cyc), subsets))

    def admits(self, z, m: int) -> bool:
        for a, b, c, d in self._quads:
            za, zb, zc, zd = z[a], z[b], z[c], z[d]
            s = za + zb + zc + zd
            if 2 * max(za, zb, zc, zd) > s:
                return False
            if s - 2 * min(za, zb, zc, zd) > 2 * m:
                return False
        for idx, subsets in self._general:
            vals = [z[i] for i in idx]
            s = sum(vals)
            for F, bound in subsets:
                if 2 * sum(vals[i] for i in F) - s > bound * m:
                    return False
        return True


def count_lattice_points(cfg, basis: LatticeBasis, m: int) -> int:
    """|m P' intersect ZA|: integer points of the dilate lying in the column lattice.

    Candidates range over the box [0,m]^r on the slice with last coordinate m;
    each surviving candidate is decided exactly (lattice membership by
    back-substitution, polytope membership by the phase-1 simplex).
    """
    if m < 0:
        raise ValueError("dilate must be nonnegative")
    columns = cfg.columns
    r = len(columns[0]) - 1
    graph = getattr(cfg, "graph", None)
    pruner = _DilatePruner(graph) if graph is not None else None
    contains = basis.contains
    total = 0
    for prefix in itertools.product(range(m + 1), repeat=r):
        if pruner is not None and not pruner.admits(prefix, m):
            continue
        z = prefix + (m,)
        if not contains(z):
            continue
        if _nonneg_combination_exists(columns, z):
            total += 1
    return total


def lattice_point_counts(cfg, max_dilate: int | None = None,
                         basis: LatticeBasis | None = None) -> CountSequence:
    """CountSequence via the lattice-point route (independent of normality)."""
    d = polytope_dimension(cfg)
    M = d + 1 if max_dilate is None else max_dilate
    if basis is None:
        basis = lattice_basis(cfg)
    counts = tuple(count_lattice_points(cfg, basis, m) for m in range(M + 1))
    return CountSequence(dimension=d, counts=counts)


# ---------------------------------------------------------------------------
# counts <-> h*-polynomial
# ---------------------------------------------------------------------------

def hstar_from_counts(cs: CountSequence) -> IntPolynomial:
    """h*-polynomial from dilate counts: the numerator of the Ehrhart series.

    h*_i = sum_j (-1)^j C(d+1, j) i(P, i-j) for i = 0..d.  Counts beyond the
    dimension must transform to zero; a negative coefficient or a nonzero
    trailing value signals a counting bug or insufficient data and raises.
    """
    d = cs.dimension
    counts = cs.counts
    if cs.dilate_max < d:
        raise ValueError(f"need counts through dilate {d}, have {cs.dilate_max}")
    coeffs = []
    for i in range(cs.dilate_max + 1):
        value = sum((-1) ** j * math.comb(d + 1, j) * counts[i - j]
                    for j in range(0, min(i, d + 1) + 1))
        if i <= d:
            if value < 0:
                raise VerificationError(f"h*_{i} = {value} negative; counts inconsistent")
            coeffs.append(value)
        elif value != 0:
            raise VerificationError(
                f"transform of count at dilate {i} is {value}, expected 0; counts inconsistent")
    return IntPolynomial(coeffs)


def ehrhart_from_hstar(h: IntPolynomial, d: int, m: int) -> int:
    """i(P, m) from h*: sum_i h*_i C(m+d-i, d); exact inverse of hstar_from_counts."""
    if h.degree > d:
        raise ValueError(f"h* degree {h.degree} exceeds dimension {d}")
    if m < 0:
        raise ValueError("dilate must be nonnegative")
    return sum(h.coefficient(i) * math.comb(m + d - i, d) for i in range(d + 1))


def hstar_polynomial(cfg, method: str = "semigroup",
                     max_dilate: int | None = None) -> tuple[IntPolynomial, CountSequence]:
    """Full pipeline: dilate counts by the requested route, then the h*-polynomial.

    The dilate budget defaults to d+1 (the minimum d plus one vanish check);
    an explicit smaller budget is refused with the required count.
    """
    d = polytope_dimension(cfg)
    needed = d + 1
    M = needed if max_dilate is None else max_dilate
    if M < needed:
        raise CostGuardError(
            f"dilate budget {M} too small: need counts through dilate {needed}")
    if method == "semigroup":
        cs = semigroup_counts(cfg, M)
    elif method == "lp":
        cs = lattice_point_counts(cfg, M)
    else:
        raise ValueError(f"unknown counting method {method!r}")
    return hstar_from_counts(cs), cs
