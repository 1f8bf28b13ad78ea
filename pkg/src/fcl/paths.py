"""Level-1 lattice paths, the highest-lift bijection, restricted paths and
border-edge classification, together with direct enumeration of branching
polynomials, irreducible-restriction generating series, and height-model
configuration sums.

A path is stored as its residue word gamma(0..k*-1); beyond the stored word
the residues follow the ground pattern gamma(k) = k mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import partitions as pt
from .errors import ResourceBoundError
from .qseries import LaurentPoly, TruncatedSeries

__all__ = [
    "PathWord",
    "ALL_J",
    "to_partition",
    "to_path",
    "energy_weight",
    "is_restricted",
    "fow_classify",
    "js_combinatorial",
    "js_partitions_upto",
    "js_members",
    "chi_js_direct",
    "branching_poly_paths",
    "abf_sum_direct",
    "fow_table_rows",
]


@dataclass(frozen=True)
class PathWord:
    gamma: tuple[int, ...]
    n: int

    def __post_init__(self):
        if any(not 0 <= g < self.n for g in self.gamma):
            raise ValueError("residues out of range")

    def residue(self, k: int) -> int:
        return self.gamma[k] if k < len(self.gamma) else k % self.n


# Marker returned for the empty partition, which is restricted for every j.
ALL_J = "all"


def to_partition(p: PathWord) -> pt.Partition:
    """Highest-lift: backward column-length recursion along the word."""
    n = p.n
    kstar = len(p.gamma)
    t = [0] * (kstar + 1)
    for k in range(kstar - 1, -1, -1):
        r = (k - p.gamma[k]) % n
        base = t[k + 1]
        # smallest t_k >= base with t_k = r mod n, and t_k - base < n
        t[k] = base + ((r - base) % n)
    cols = tuple(c for c in t[:kstar] if c > 0)
    return pt.conjugate(cols)


def to_path(lam: pt.Partition, n: int) -> PathWord:
    if not pt.is_n_regular(lam, n):
        raise ValueError(f"{lam} is not {n}-regular")
    cols = pt.conjugate(lam)
    kstar = len(cols)
    gamma = tuple((k - cols[k]) % n for k in range(kstar))
    return PathWord(gamma, n)


def _h(a: int, b: int) -> int:
    return 0 if a < b else 1


def energy_weight(p: PathWord) -> tuple[int, pt.Weight]:
    """(E, wt) from the word; agrees with the highest-lift statistics."""
    n = p.n
    kstar = len(p.gamma)
    e = 0
    for k in range(1, kstar + 1):
        e += k * (
            _h(p.residue(k - 1), p.residue(k)) - _h((k - 1) % n, k % n)
        )
    # p_0 = Lambda_{k*} - sum_{k < k*} eps_{gamma(k)}
    p0 = pt.fundamental(n, kstar % n)
    for k in range(kstar):
        p0 = p0 - pt.weight_basics(n, p.gamma[k])[1]
    return e, p0 - pt.Weight(n, (0,) * n, 1).scaled(e)


def is_restricted(p: PathWord, j: int) -> bool:
    """True iff every point of Lambda_j + path stays dominant at level 2."""
    n = p.n
    kstar = len(p.gamma)
    cur = pt.fundamental(n, j)
    pts = []
    # compute p_k = Lambda_j + (Lambda_0-path value at k), walking backwards
    val = pt.fundamental(n, kstar % n)
    for k in range(kstar - 1, -1, -1):
        pts.append(val)
        val = val - pt.weight_basics(n, p.gamma[k])[1]
    pts.append(val)  # value at k = 0
    for w in pts:
        if not (cur + w).is_dominant():
            return False
    return True


def _exponent_form(lam: pt.Partition) -> list[tuple[int, int]]:
    return pt.multiplicities(lam)


def _edge_sums_ok(mults: list[tuple[int, int]], n: int) -> bool:
    for k in range(len(mults) - 1):
        v1, a1 = mults[k]
        v2, a2 = mults[k + 1]
        if (a1 + v1 - v2 + a2) % n != 0:
            return False
    return True


def fow_classify(lam: pt.Partition, n: int):
    """Border-edge classification: the colour j, ALL_J for empty, else None."""
    if not pt.is_n_regular(lam, n):
        raise ValueError(f"{lam} is not {n}-regular")
    if not lam:
        return ALL_J
    mults = _exponent_form(lam)
    if not _edge_sums_ok(mults, n):
        return None
    return (mults[0][0] - mults[0][1]) % n


def js_combinatorial(lam: pt.Partition, n: int) -> bool:
    """Irreducible restriction by the border-edge sums alone."""
    return fow_classify(lam, n) is not None


@lru_cache(maxsize=None)
def js_partitions_upto(
    n: int, max_size: int, max_part: int | None = None
) -> tuple[pt.Partition, ...]:
    """All partitions passing the edge-sum test, |lam| <= max_size.

    The chain structure makes this sparse: given a part value, the edge-sum
    congruence determines the multiplicity of the next part value.
    """
    out: list[pt.Partition] = [()]
    cap = max_size if max_part is None else min(max_part, max_size)

    def expand(mults: list[tuple[int, int]], size: int):
        out.append(tuple(v for v, a in mults for _ in range(a)))
        v_prev, a_prev = mults[-1]
        for v in range(v_prev - 1, 0, -1):
            a = (-(a_prev + v_prev - v)) % n
            if a == 0:
                continue
            if size + v * a > max_size:
                continue
            mults.append((v, a))
            expand(mults, size + v * a)
            mults.pop()

    for v1 in range(1, cap + 1):
        for a1 in range(1, n):
            if v1 * a1 <= max_size:
                expand([(v1, a1)], v1 * a1)
    return tuple(sorted(out, key=lambda lam: (sum(lam), tuple(-p for p in lam))))


def js_members(n: int, core: pt.Partition, d: int) -> list[pt.Partition]:
    """Irreducible-restriction labels with the given core and hook weight d."""
    got_core, w = pt.n_core(core, n)
    if w != 0:
        raise ValueError(f"{core} is not an {n}-core")
    size = sum(core) + n * d
    return [
        lam
        for lam in js_partitions_upto(n, size)
        if sum(lam) == size and pt.n_core(lam, n) == (core, d)
    ]


def chi_js_direct(n: int, core: pt.Partition, degree: int) -> TruncatedSeries:
    """Generating series counting irreducible restrictions by hook weight."""
    terms = {d: len(js_members(n, core, d)) for d in range(degree + 1)}
    return TruncatedSeries(terms, 1, degree)


def branching_poly_paths(
    n: int, j: int, target: tuple[int, int], L: int, max_L: int = 24
) -> LaurentPoly:
    """Finite branching polynomial by restricted-path enumeration.

    Paths are enumerated through their highest-lift partitions: the length
    bound is the bound on the largest part, and the starting weight pins the
    residue-count profile.
    """
    if L > max_L:
        raise ResourceBoundError(f"path cutoff {L} exceeds bound {max_L}")
    prof = pt.weight_target_profile(n, j % n, target)
    out: dict[int, int] = {}
    if prof is None:
        return LaurentPoly.zero()
    c, s0 = prof
    max_size = (n - 1) * L * (L + 1) // 2
    for lam in js_partitions_upto(n, max_size, max_part=L):
        jj = fow_classify(lam, n)
        if jj != ALL_J and jj != j % n:
            continue
        m = pt.residue_counts(lam, n)
        e = m[0]
        if all(m[i] == e + c[i] for i in range(n)):
            out[e] = out.get(e, 0) + 1
    return LaurentPoly(out)


def abf_sum_direct(L: int, a: int, b: int, c: int, m: int) -> LaurentPoly:
    """Configuration sum over height sequences on the quarter lattice.

    Heights run 1..L-1 with unit steps; the boundary is (l_1, l_{m+1},
    l_{m+2}) = (a, b, c).  Returns 0 when no admissible sequence exists.
    """
    if not (1 <= a <= L - 1 and 1 <= b <= L - 1 and 1 <= c <= L - 1):
        raise ValueError("heights must lie in 1..L-1")
    if abs(b - c) != 1:
        raise ValueError("|b - c| must be 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return LaurentPoly.one() if a == b else LaurentPoly.zero()
    # states: (height pair (l_k, l_{k+1})) -> accumulated polynomial
    states: dict[tuple[int, int], LaurentPoly] = {}
    for l2 in (a - 1, a + 1):
        if 1 <= l2 <= L - 1:
            states[(a, l2)] = LaurentPoly.one()
    for jstep in range(1, m + 1):
        nxt: dict[tuple[int, int], LaurentPoly] = {}
        for (lj, lj1), poly in states.items():
            for lj2 in (lj1 - 1, lj1 + 1):
                if not 1 <= lj2 <= L - 1:
                    continue
                w = poly.shifted((jstep * abs(lj - lj2), 4))
                key = (lj1, lj2)
                nxt[key] = nxt.get(key, LaurentPoly.zero()) + w
        states = nxt
        if not states:
            return LaurentPoly.zero()
    return states.get((b, c), LaurentPoly.zero())


def _fow_row(lam: pt.Partition, n: int) -> dict[str, str]:
    _, e, wt = pt.residue_data(lam, n)
    jj = fow_classify(lam, n)
    core, w = pt.n_core(lam, n)
    return {
        "partition": pt.format_partition(lam),
        "E": str(e),
        "wt": wt.vector(),
        "fow_j": ";".join(str(x) for x in range(n))
        if jj == ALL_J
        else ("" if jj is None else str(jj)),
        "js": "1" if jj is not None else "0",
        "core": pt.format_partition(core),
        "weight": str(w),
    }


def fow_table_rows(n: int, m: int) -> list[dict[str, str]]:
    """One classification row per n-regular partition of m (CSV payload)."""
    return [_fow_row(lam, n) for lam in pt.enumerate_partitions(m, regular=n)]


def fow_table_rows_single(lam: pt.Partition, n: int) -> list[dict[str, str]]:
    return [_fow_row(lam, n)]
