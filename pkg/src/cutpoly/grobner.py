"""The quadratic Groebner basis of the cut ideal of K_{2,n-2} and its standard monomials.

The three binomial families are generated explicitly over partition variables
q_{A|B}, verified lead-over-trail under the reverse lexicographic order, and
checked to be a Groebner basis via Buchberger's criterion at small n.  Counting
squarefree standard monomials (by formula and by brute force) yields the
f-vector of the initial-complex triangulation.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import CostGuardError, VerificationError
from .graph import Partition, all_partitions
from .polynomial import stirling2


def default_variable_key(p: Partition):
    """Ascending variable order: by min side size, then split-pattern before
    12-together, then lexicographic encoding of the side not containing vertex 1."""
    return (p.min_size, 0 if p.splits_12 else 1, p.encode())


@dataclass(frozen=True)
class PartitionVariable:
    """One variable q_{A|B} of K[q], positioned in the fixed variable order."""

    index: int
    partition: Partition

    @property
    def min_size(self) -> int:
        return self.partition.min_size

    @property
    def pattern(self) -> str:
        return "1-and-2-split" if self.partition.splits_12 else "12-together"

    def encode(self) -> tuple[int, ...]:
        return self.partition.encode()


class VariableTable:
    """All 2^(n-1) partition variables of [n], ascending in the monomial order."""

    def __init__(self, n: int, variable_key=None):
        if n < 2:
            raise ValueError("need at least 2 vertices")
        key = variable_key if variable_key is not None else default_variable_key
        parts = sorted(all_partitions(n), key=key)
        self.n = n
        self.variables = tuple(PartitionVariable(i, p) for i, p in enumerate(parts))
        self._index_by_mask = {v.partition.a_mask: v.index for v in self.variables}

    def __len__(self):
        return len(self.variables)

    def index_of(self, side) -> int:
        """Variable index of the partition separating `side` from its complement."""
        if isinstance(side, Partition):
            return self._index_by_mask[side.a_mask]
        return self._index_by_mask[Partition(self.n, side).a_mask]

    def variable(self, index: int) -> PartitionVariable:
        return self.variables[index]

    def encode(self, index: int) -> tuple[int, ...]:
        return self.variables[index].encode()


@lru_cache(maxsize=None)
def variable_table(n: int) -> VariableTable:
    return VariableTable(n)


@dataclass(frozen=True)
class PartitionMonomial:
    """Monomial of K[q]: variable indices ascending, repeated per exponent."""

    n: int
    ids: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.ids)) != self.ids:
            object.__setattr__(self, "ids", tuple(sorted(self.ids)))

    @property
    def degree(self) -> int:
        return len(self.ids)

    @property
    def squarefree(self) -> bool:
        return len(set(self.ids)) == len(self.ids)

    @property
    def exponents(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i in self.ids:
            out[i] = out.get(i, 0) + 1
        return out

    def __mul__(self, other: "PartitionMonomial") -> "PartitionMonomial":
        if self.n != other.n:
            raise ValueError("mixed ground sets")
        return PartitionMonomial(self.n, tuple(sorted(self.ids + other.ids)))


def monomial(n: int, sides) -> PartitionMonomial:
    """Monomial from an iterable of partition sides (any side of each partition)."""
    table = variable_table(n)
    return PartitionMonomial(n, tuple(sorted(table.index_of(s) for s in sides)))


def monomial_order_cmp(a: PartitionMonomial, b: PartitionMonomial) -> int:
    """Reverse lexicographic comparison; returns -1, 0, or 1.

    The monomial holding the smallest differing variable with the larger
    exponent is the smaller one.  No degree comparison is imposed; on equal
    degrees this is the usual reverse lexicographic order.
    """
    if a.n != b.n:
        raise ValueError("mixed ground sets")
    ia = ib = 0
    aids, bids = a.ids, b.ids
    la, lb = len(aids), len(bids)
    while ia < la and ib < lb:
        va, vb = aids[ia], bids[ib]
        if va == vb:
            ia += 1
            ib += 1
        elif va < vb:
            return -1
        else:
            return 1
    if ia < la:
        return -1
    if ib < lb:
        return 1
    return 0


@dataclass(frozen=True)
class CutBinomial:
    """Marked binomial lead - trail; lead strictly greater under the monomial order."""

    family: int
    lead: PartitionMonomial
    trail: PartitionMonomial


def _rest_subsets(n: int):
    """Masks of subsets of {3..n} (bit v-1 set for vertex v)."""
    rest_bits = [1 << (v - 1) for v in range(3, n + 1)]
    for picks in range(1 << len(rest_bits)):
        mask = 0
        for i, bit in enumerate(rest_bits):
            if picks >> i & 1:
                mask |= bit
        yield mask


@lru_cache(maxsize=None)
def _generate_gb_ids(n: int) -> tuple:
    if n < 4:
        raise ValueError("cut-ideal basis needs n >= 4")
    table = variable_table(n)
    rest_mask = ((1 << n) - 1) & ~0b11  # vertices 3..n

    def split_id(a_prime_mask: int) -> int:
        # variable q_{{1} u A' | {2} u B'}: canonical side is {2} u (rest minus A')
        return table._index_by_mask[Partition(n, 0b10 | (rest_mask & ~a_prime_mask)).a_mask]

    def together_id(a_side_mask: int) -> int:
        return table._index_by_mask[Partition(n, a_side_mask).a_mask]

    def binomial(family, lead_ids, trail_ids):
        lead = PartitionMonomial(n, tuple(sorted(lead_ids)))
        trail = PartitionMonomial(n, tuple(sorted(trail_ids)))
        if monomial_order_cmp(lead, trail) <= 0:
            raise VerificationError(
                f"family {family} lead {lead.ids} not greater than trail {trail.ids}")
        return CutBinomial(family=family, lead=lead, trail=trail)

    subsets = list(_rest_subsets(n))
    family1 = []
    for s in subsets:
        t = rest_mask & ~s
        if s > t:
            continue  # unordered halves {A', B'}
        family1.append(binomial(
            1,
            (split_id(s), split_id(t)),
            (together_id(0), together_id(rest_mask)),
        ))
    family2 = []
    family3 = []
    for s, t in itertools.combinations(subsets, 2):
        if s & t == s or s & t == t:
            continue  # comparable sides give no relation
        if s | t == rest_mask and s & t == 0:
            # complementary pair: the family-1 binomial already holds this lead
            pass
        else:
            family2.append(binomial(
                2,
                (split_id(s), split_id(t)),
                (split_id(s & t), split_id(s | t)),
            ))
        family3.append(binomial(
            3,
            (together_id(s), together_id(t)),
            (together_id(s & t), together_id(s | t)),
        ))

    def sort_key(b):
        return tuple(sorted(table.encode(i) for i in b.lead.ids))

    out = []
    for fam in (family1, family2, family3):
        out.extend(sorted(fam, key=sort_key))
    return tuple(out)


def generate_gb(n: int) -> list[CutBinomial]:
    """All basis binomials of the cut ideal of K_{2,n-2}, families 1..3, deduplicated."""
    return list(_generate_gb_ids(n))


@lru_cache(maxsize=None)
def lead_pairs(n: int) -> frozenset:
    """Index pairs (i, j), i < j, of the quadratic initial monomials."""
    pairs = set()
    for b in _generate_gb_ids(n):
        i, j = b.lead.ids
        if i == j:
            raise VerificationError("initial monomial not squarefree")
        pairs.add((i, j))
    return frozenset(pairs)


def is_standard(mono: PartitionMonomial, n: int | None = None) -> bool:
    """True iff no generated initial monomial divides `mono`."""
    if n is None:
        n = mono.n
    elif n != mono.n:
        raise ValueError("ground set mismatch")
    pairs = lead_pairs(n)
    support = sorted(set(mono.ids))
    return all(pair not in pairs for pair in itertools.combinations(support, 2))


# ---------------------------------------------------------------------------
# reduction and Buchberger verification
# ---------------------------------------------------------------------------

def _lead_map(gb) -> dict:
    return {b.lead.ids: b for b in gb}


def _dividing_binomial(mono: PartitionMonomial, lead_map: dict):
    support = sorted(set(mono.ids))
    for pair in itertools.combinations(support, 2):
        b = lead_map.get(pair)
        if b is not None:
            return b
    return None


def _rewrite(mono: PartitionMonomial, binom: CutBinomial) -> PartitionMonomial:
    ids = list(mono.ids)
    for v in binom.lead.ids:
        ids.remove(v)
    ids.extend(binom.trail.ids)
    ids.sort()
    return PartitionMonomial(mono.n, tuple(ids))


def reduce(poly, gb) -> dict[PartitionMonomial, int]:
    """Normal form of an integer combination of monomials against the basis.

    Repeatedly rewrites the largest reducible term lead*u -> trail*u.  Each
    rewrite strictly decreases the term in the monomial order, so the loop
    terminates; the result has no term divisible by any lead.
    """
    if isinstance(poly, PartitionMonomial):
        poly = {poly: 1}
    terms = {m: c for m, c in poly.items() if c}
    lead_map = _lead_map(gb)
    while True:
        best = None
        best_binom = None
        for mono in terms:
            binom = _dividing_binomial(mono, lead_map)
            if binom is None:
                continue
            if best is None or monomial_order_cmp(mono, best) > 0:
                best, best_binom = mono, binom
        if best is None:
            return terms
        coeff = terms.pop(best)
        new = _rewrite(best, best_binom)
        total = terms.get(new, 0) + coeff
        if total:
            terms[new] = total
        else:
            terms.pop(new, None)


def s_polynomial(g1: CutBinomial, g2: CutBinomial) -> dict[PartitionMonomial, int]:
    """S-polynomial (lcm/lead1)*g1 - (lcm/lead2)*g2 as a term dict."""
    n = g1.lead.n
    support = sorted(set(g1.lead.ids) | set(g2.lead.ids))
    lcm = list(support)  # leads are squarefree, so the lcm is the support product
    u1 = list(lcm)
    for v in g1.lead.ids:
        u1.remove(v)
    u2 = list(lcm)
    for v in g2.lead.ids:
        u2.remove(v)
    m1 = PartitionMonomial(n, tuple(sorted(u1 + list(g1.trail.ids))))
    m2 = PartitionMonomial(n, tuple(sorted(u2 + list(g2.trail.ids))))
    if m1 == m2:
        return {}
    return {m1: 1, m2: -1}


def buchberger_check(n: int) -> tuple[bool, dict]:
    """Verify the Groebner property: every S-polynomial reduces to zero.

    Coprime-lead pairs are skipped by Buchberger's first criterion but counted
    in the certificate.  Guarded to 4 <= n <= 6.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if n > 6:
        raise CostGuardError(f"Buchberger check refused for n = {n} (2^{n-1} variables)")
    gb = generate_gb(n)
    lead_map = _lead_map(gb)
    skipped = 0
    reduced = 0
    failures = []
    total = 0
    for a, b in itertools.combinations(range(len(gb)), 2):
        total += 1
        ga, gb_ = gb[a], gb[b]
        if not set(ga.lead.ids) & set(gb_.lead.ids):
            skipped += 1
            continue
        normal_form = reduce(s_polynomial(ga, gb_), gb)
        reduced += 1
        if normal_form:
            failures.append({
                "pair": [a, b],
                "normal_form": {str(tuple(m.ids)): c for m, c in sorted(
                    normal_form.items(), key=lambda kv: kv[0].ids)},
            })
    certificate = {
        "n": n,
        "basis_size": len(gb),
        "pairs_total": total,
        "pairs_skipped_coprime": skipped,
        "pairs_reduced": reduced,
        "failures": failures,
    }
    return (not failures, certificate)


# ---------------------------------------------------------------------------
# squarefree standard monomials, chains, and the f-vector
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _conflict_masks(n: int) -> tuple[int, ...]:
    """Per-variable bitmask of variables it forms an initial monomial with."""
    bad = [0] * len(variable_table(n))
    for i, j in lead_pairs(n):
        bad[i] |= 1 << j
        bad[j] |= 1 << i
    return tuple(bad)


def _iter_standard_supports(n: int, allowed: int):
    """Ascending id tuples of squarefree standard monomials within `allowed`."""
    bad = _conflict_masks(n)

    def rec(chosen, pool):
        yield chosen
        a = pool
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            yield from rec(chosen + (j,), a & ~bad[j])

    yield from rec((), allowed)


def _class_masks(n: int) -> tuple[int, int]:
    """(together-class variable mask, split-class variable mask)."""
    table = variable_table(n)
    together = split = 0
    for v in table.variables:
        if v.partition.splits_12:
            split |= 1 << v.index
        else:
            together |= 1 << v.index
    return together, split


def pattern_split(mono: PartitionMonomial) -> tuple[list[frozenset], list[frozenset]]:
    """Factor a squarefree monomial into its two variable classes.

    Returns (together-class sides not containing 1 or 2, split-class sets A'
    where the variable's vertex-1 side is {1} u A').
    """
    table = variable_table(mono.n)
    rest = frozenset(range(3, mono.n + 1))
    together = []
    split = []
    for i in mono.ids:
        p = table.variable(i).partition
        if p.splits_12:
            split.append(rest - (p.a_side - {2}))
        else:
            together.append(p.a_side)
    return together, split


def _is_strict_chain(sets) -> bool:
    ordered = sorted(sets, key=len)
    return all(a < b for a, b in zip(ordered, ordered[1:]))


def chain_characterization_holds(mono: PartitionMonomial) -> bool:
    """Nested-chain test equivalent to standardness for squarefree monomials.

    Both variable classes must form strict inclusion chains, and the split
    class must not stretch from the empty set to all of {3..n}.
    """
    together, split = pattern_split(mono)
    if not _is_strict_chain(together) or not _is_strict_chain(split):
        return False
    if split:
        rest = frozenset(range(3, mono.n + 1))
        ordered = sorted(split, key=len)
        if ordered[0] == frozenset() and ordered[-1] == rest:
            return False
    return True


def enumerate_squarefree_standard(n: int, k: int) -> list[PartitionMonomial]:
    """All squarefree standard monomials of degree k, ascending-id order.

    Each result is validated against the nested-chain characterization; a
    mismatch would mean the generated basis and the chain description diverge
    and raises.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if n > 8:
        raise CostGuardError(f"enumeration refused for n = {n} (2^{n-1} variables)")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    full = (1 << len(variable_table(n))) - 1
    out = []
    for ids in _iter_standard_supports(n, full):
        if len(ids) != k:
            continue
        mono = PartitionMonomial(n, ids)
        if not chain_characterization_holds(mono):
            raise VerificationError(f"chain characterization failed for {ids}")
        out.append(mono)
    return out


def iter_squarefree_standard(n: int, variable_class: str = "all"):
    """Yield every squarefree standard monomial of every degree, optionally
    restricted to one variable class ('12-together' or '1-and-2-split')."""
    if n < 4:
        raise ValueError("need n >= 4")
    if n > 8:
        raise CostGuardError(f"enumeration refused for n = {n} (2^{n-1} variables)")
    together, split = _class_masks(n)
    pool = {"all": together | split, "12-together": together, "1-and-2-split": split}[variable_class]
    for ids in _iter_standard_supports(n, pool):
        yield PartitionMonomial(n, ids)


def squarefree_standard_counts(n: int, variable_class: str = "all") -> list[int]:
    """Brute-force counts of squarefree standard monomials by degree.

    variable_class restricts the support: 'all', '12-together' (type 1), or
    '1-and-2-split' (type 2).  Counting walks the conflict graph directly and
    never consults the chain formulas.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if n > 8:
        raise CostGuardError(f"enumeration refused for n = {n} (2^{n-1} variables)")
    together, split = _class_masks(n)
    pool = {"all": together | split, "12-together": together, "1-and-2-split": split}[variable_class]
    bad = _conflict_masks(n)
    counts = [0] * (len(variable_table(n)) + 1)

    def rec(size, allowed):
        counts[size] += 1
        a = allowed
        while a:
            low = a & -a
            j = low.bit_length() - 1
            a ^= low
            rec(size + 1, a & ~bad[j])

    rec(0, pool)
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def count_type1(n: int, k: int) -> int:
    """Squarefree standard monomials of degree k over 12-together variables:
    (k-1)! S(n-2,k-1) + 2 k! S(n-2,k) + (k+1)! S(n-2,k+1)."""
    return _chain_term(n, k - 1) + 2 * _chain_term(n, k) + _chain_term(n, k + 1)


def count_type2(n: int, k: int) -> int:
    """Squarefree standard monomials of degree k over split variables:
    2 k! S(n-2,k) + (k+1)! S(n-2,k+1)."""
    return 2 * _chain_term(n, k) + _chain_term(n, k + 1)


def _chain_term(n: int, j: int) -> int:
    if n < 4:
        raise ValueError("need n >= 4")
    if j < 0:
        return 0
    return math.factorial(j) * stirling2(n - 2, j)


def table1_cells(n: int, k: int) -> dict[str, int]:
    """The four chain counts split by whether the chain starts at the empty set
    and ends at all of {3..n}."""
    return {
        "min_empty_max_full": _chain_term(n, k - 1),
        "min_nonempty_max_full": _chain_term(n, k),
        "min_empty_max_not_full": _chain_term(n, k),
        "min_nonempty_max_not_full": _chain_term(n, k + 1),
    }


def f_vector(n: int) -> list[int]:
    """Face counts (f_{-1}, f_0, ..., f_{2n-4}) of the initial-complex triangulation.

    f_{k-1} is the convolution sum over splitting a degree-k squarefree
    standard monomial into its two class factors.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    top = 2 * n - 3
    type1 = [count_type1(n, k) for k in range(top + 1)]
    type2 = [count_type2(n, k) for k in range(top + 1)]
    return [sum(type1[a] * type2[k - a] for a in range(k + 1)) for k in range(top + 1)]


def count_standard_by_degree(n: int, m: int) -> int:
    """All (not necessarily squarefree) standard monomials of degree m.

    Direct enumeration over degree-m monomials in 2^(n-1) variables, so the
    guard is tight: n <= 6 and m <= 5.
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if n > 6 or m > 5:
        raise CostGuardError(f"standard-monomial count refused for n = {n}, m = {m}")
    pairs = lead_pairs(n)
    count = 0
    for combo in itertools.combinations_with_replacement(range(len(variable_table(n))), m):
        support = sorted(set(combo))
        if all(pair not in pairs for pair in itertools.combinations(support, 2)):
            count += 1
    return count


# ---------------------------------------------------------------------------
# interchange
# ---------------------------------------------------------------------------

def format_binomial(b: CutBinomial) -> str:
    table = variable_table(b.lead.n)

    def var(i):
        return "q(" + ",".join(map(str, table.encode(i))) + ")"

    lead = "*".join(var(i) for i in b.lead.ids)
    trail = "*".join(var(i) for i in b.trail.ids)
    return f"{lead} - {trail}"


def gb_to_json(binomials) -> str:
    if not binomials:
        return json.dumps([])
    table = variable_table(binomials[0].lead.n)
    payload = [
        {
            "family": b.family,
            "lead": [list(table.encode(i)) for i in b.lead.ids],
            "trail": [list(table.encode(i)) for i in b.trail.ids],
        }
        for b in binomials
    ]
    return json.dumps(payload, indent=2)


def standard_monomials_to_csv(monomials) -> str:
    """CSV rows: degree, then one cell per factor (space-joined side vertices)."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    for mono in monomials:
        table = variable_table(mono.n)
        cells = [str(mono.degree)]
        cells.extend(" ".join(map(str, table.encode(i))) for i in mono.ids)
        writer.writerow(cells)
    return buf.getvalue()
