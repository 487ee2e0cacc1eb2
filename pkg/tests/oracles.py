"""Independent slow-but-obvious oracles used to pin expected values.

Everything here deliberately avoids the library's own algorithms: ranks and
determinants run rational Gaussian elimination, Stirling numbers enumerate set
partitions, lattice membership does a bounded exhaustive coefficient search,
and the basis-binomial oracle rebuilds every relation from ordered partition
pairs.
"""

from fractions import Fraction
import itertools


def rational_rank(columns) -> int:
    """Rank by fraction-exact Gaussian elimination over the rows."""
    rows = [list(map(Fraction, row)) for row in zip(*[list(c) for c in columns])]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        rows[rank] = [x / pivot for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rational_determinant(matrix) -> Fraction:
    """Determinant of a square matrix (list of rows) by fraction-exact elimination."""
    rows = [list(map(Fraction, row)) for row in matrix]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for i in range(col + 1, n):
            if rows[i][col]:
                factor = rows[i][col] / pivot
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[col])]
    return det


def stirling2_by_partitions(n: int, k: int) -> int:
    """Count partitions of {1..n} into k nonempty blocks by direct enumeration."""
    if n == 0:
        return 1 if k == 0 else 0

    def rec(element, blocks):
        if element > n:
            return 1 if len(blocks) == k else 0
        total = 0
        for b in blocks:
            b.append(element)
            total += rec(element + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([element])
            total += rec(element + 1, blocks)
            blocks.pop()
        return total

    return rec(1, [])


def bounded_membership_search(columns, target, bound: int) -> bool:
    """Is target an integer combination of columns with coefficients in [-bound, bound]?

    A True answer is a certificate; False only means no small-coefficient
    combination exists, so callers pair it with an independent argument.
    """
    columns = [tuple(c) for c in columns]
    target = tuple(target)
    coeffs = range(-bound, bound + 1)
    for combo in itertools.product(coeffs, repeat=len(columns)):
        candidate = tuple(sum(c * col[i] for c, col in zip(combo, columns))
                          for i in range(len(target)))
        if candidate == target:
            return True
    return False


def fraction_simplex_feasible(columns, rhs) -> bool:
    """Textbook phase-1 simplex over Fractions, Bland's rule, no shortcuts.

    Decides whether rhs is a nonnegative rational combination of the columns;
    cross-validates the library's fraction-free tableau implementation.
    """
    ncols = len(columns)
    nrows = len(rhs)
    rows = []
    for i in range(nrows):
        row = [Fraction(col[i]) for col in columns] + [Fraction(rhs[i])]
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row)
    obj = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for j in range(ncols + 1):
            obj[j] -= row[j]
    rows.append(obj)
    basis = [ncols + i for i in range(nrows)]
    while True:
        entering = next((j for j in range(ncols) if rows[nrows][j] < 0), None)
        if entering is None:
            return rows[nrows][ncols] == 0
        leave = None
        best = None
        for i in range(nrows):
            if rows[i][entering] > 0:
                ratio = rows[i][ncols] / rows[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            raise RuntimeError("phase-1 objective unbounded")
        pivot = rows[leave][entering]
        rows[leave] = [x / pivot for x in rows[leave]]
        for i in range(nrows + 1):
            if i != leave and rows[i][entering]:
                factor = rows[i][entering]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[leave])]
        basis[leave] = entering


def cut_ideal_basis_by_pairs(n: int):
    """Rebuild the three binomial families from scratch over ordered partition pairs.

    Partitions are encoded as frozensets of the side not containing vertex 1.
    Returns a set of (family, lead, trail) with lead and trail being frozensets
    of two encodings each.
    """
    full = frozenset(range(1, n + 1))
    rest = frozenset(range(3, n + 1))

    def canon(side):
        side = frozenset(side)
        return side if 1 not in side else full - side

    found = set()
    # family 1 over ordered splits of {3..n}
    for bits in range(1 << len(rest)):
        members = sorted(rest)
        a = frozenset(members[i] for i in range(len(members)) if bits >> i & 1)
        b = rest - a
        lead = frozenset({canon({1} | a), canon({1} | b)})
        trail = frozenset({canon(frozenset()), canon({1, 2})})
        found.add((1, lead, trail))
    # families 2 and 3 over all ordered pairs of vertex subsets A, C
    for abits in range(1 << n):
        a_set = frozenset(v for v in range(1, n + 1) if abits >> (v - 1) & 1)
        for cbits in range(1 << n):
            c_set = frozenset(v for v in range(1, n + 1) if cbits >> (v - 1) & 1)
            if a_set <= c_set or c_set <= a_set:
                continue
            b_set, d_set = full - a_set, full - c_set
            lead = frozenset({canon(a_set), canon(c_set)})
            trail = frozenset({canon(a_set & c_set), canon(a_set | c_set)})
            if 1 in a_set and 1 in c_set and 2 in b_set and 2 in d_set:
                if not (a_set & c_set == {1} and b_set & d_set == {2}):
                    found.add((2, lead, trail))
            if 1 in a_set & c_set and 2 in a_set & c_set:
                found.add((3, lead, trail))
    return found
