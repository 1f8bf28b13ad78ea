"""The level-1 q-deformed Fock space for affine type A.

Basis vectors are indexed by partitions.  The generator action inserts or
removes single nodes of a fixed residue, with q-powers counting the
addable/removable nodes of that residue strictly to one side of the touched
node (column order; "left" means strictly smaller column index for both the
addable and removable counts, validated by relation_check).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import partitions as pt
from .errors import ExactDivisionError
from .qseries import LaurentPoly, gauss_balanced, q_fact

__all__ = [
    "FockVector",
    "f_apply",
    "e_apply",
    "diag_apply",
    "divided_f",
    "classical_apply",
    "relation_check",
    "RelationReport",
]


class FockVector:
    """Finitely-supported combination of partitions with LaurentPoly coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[pt.Partition, LaurentPoly] | None = None):
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "terms", {k: v for k, v in (terms or {}).items() if not v.is_zero()}
        )

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("FockVector is immutable")

    @staticmethod
    def basis(n: int, lam: pt.Partition) -> "FockVector":
        return FockVector(n, {tuple(lam): LaurentPoly.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam: pt.Partition) -> LaurentPoly:
        return self.terms.get(tuple(lam), LaurentPoly.zero())

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.n != other.n:
            raise ValueError("mixed moduli")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, LaurentPoly.zero()) + v
        return FockVector(self.n, out)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(LaurentPoly.const(-1))

    def scaled(self, c: LaurentPoly) -> "FockVector":
        return FockVector(self.n, {k: v * c for k, v in self.terms.items()})

    def map_coeffs(self, f) -> "FockVector":
        return FockVector(self.n, {k: f(v) for k, v in self.terms.items()})

    def bar(self) -> "FockVector":
        return self.map_coeffs(lambda c: c.bar())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def support(self) -> list[pt.Partition]:
        return sorted(self.terms, reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for lam in self.support():
            c = self.terms[lam]
            ctext = c.to_text()
            if len(c.terms) > 1 or ctext.startswith("-"):
                ctext = f"({ctext})"
            chunks.append(f"{ctext} * v[{pt.format_partition(lam)}]")
        return " + ".join(chunks)

    def __repr__(self):
        return f"FockVector({self.to_text()!r})"


def _count_side(nodes: list[pt.Node], col: int, side: str) -> int:
    if side == "left":
        return sum(1 for nd in nodes if nd.col < col)
    return sum(1 for nd in nodes if nd.col > col)


def _n_right(lam: pt.Partition, n: int, i: int, col: int) -> int:
    add, rem = pt.node_lists(lam, n, i)
    return _count_side(add, col, "right") - _count_side(rem, col, "right")


def _n_left(lam: pt.Partition, n: int, i: int, col: int) -> int:
    add, rem = pt.node_lists(lam, n, i)
    return _count_side(add, col, "left") - _count_side(rem, col, "left")


def f_apply(i: int, u: FockVector) -> FockVector:
    """Lowering generator: add one i-node, weighted by the right count."""
    n = u.n
    out: dict[pt.Partition, LaurentPoly] = {}
    for lam, c in u.terms.items():
        add, _ = pt.node_lists(lam, n, i)
        for nd in add:
            nu = pt.add_node(lam, nd)
            w = c.shifted(_n_right(lam, n, i, nd.col))
            out[nu] = out.get(nu, LaurentPoly.zero()) + w
    return FockVector(n, out)


def e_apply(i: int, u: FockVector) -> FockVector:
    """Raising generator: remove one i-node, weighted by the left count."""
    n = u.n
    out: dict[pt.Partition, LaurentPoly] = {}
    for lam, c in u.terms.items():
        _, rem = pt.node_lists(lam, n, i)
        for nd in rem:
            nu = pt.remove_node(lam, nd)
            w = c.shifted(-_n_left(nu, n, i, nd.col))
            out[nu] = out.get(nu, LaurentPoly.zero()) + w
    return FockVector(n, out)


def diag_apply(kind: str, lam: pt.Partition, n: int, i: int = 0) -> LaurentPoly:
    """Eigenvalue of q^(h_i) (kind='h') or q^D (kind='D') on a basis vector."""
    if kind in ("h", "h_i"):
        add, rem = pt.node_lists(lam, n, i)
        return LaurentPoly.q_power(len(add) - len(rem))
    if kind in ("D", "d"):
        return LaurentPoly.q_power(-pt.residue_counts(lam, n)[0])
    raise ValueError(f"unknown diagonal kind {kind!r}")


def divided_f(i: int, k: int, u: FockVector) -> FockVector:
    """Divided power f_i^(k): apply f_i k times, then divide by [k]!."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v = u
    for _ in range(k):
        v = f_apply(i, v)
    fact = q_fact(k)
    try:
        return v.map_coeffs(lambda c: c.exact_div(fact))
    except ExactDivisionError as exc:  # pragma: no cover - indicates a rule bug
        raise ExactDivisionError(f"divided power not exact at k={k}: {exc}") from exc


def classical_apply(
    kind: str, index: int, lam: pt.Partition, n: int | None = None
) -> list[pt.Partition]:
    """Classical (q=1) node operators.

    With ``n=None``, ``index`` is an integer content and the operator moves
    along a single edge (at most one result).  With ``n`` given, ``index`` is
    a residue and the folded operator sums over all contents congruent to it.
    """
    if kind not in ("e", "f"):
        raise ValueError("kind must be 'e' or 'f'")
    if kind == "f":
        nodes = pt.addable_nodes(lam)
        move = pt.add_node
    else:
        nodes = pt.removable_nodes(lam)
        move = pt.remove_node
    if n is None:
        picked = [nd for nd in nodes if nd.content == index]
    else:
        picked = [nd for nd in nodes if nd.residue(n) == index % n]
    return [move(lam, nd) for nd in picked]


@dataclass
class RelationReport:
    n: int
    max_weight: int
    ok: bool
    failures: list[str] = field(default_factory=list)


def _cartan_pairing(n: int, i: int, j: int) -> int:
    """<alpha_j, h_i> for affine type A (collapses to 2 on the diagonal)."""
    a = 2 if i == j else 0
    if (j - 1) % n == i % n:
        a -= 1
    if (j + 1) % n == i % n:
        a -= 1
    return a


def relation_check(n: int, m: int = 6) -> RelationReport:
    """Verify the defining relations on the span of all partitions of <= m.

    Checks [e_i, f_j], both q-Serre relations, and the weight compatibility
    of e_i/f_i with the q^(h_i) eigenvalues.  Failure is reported as data.
    """
    report = RelationReport(n=n, max_weight=m, ok=True)
    basis = [
        lam for size in range(m + 1) for lam in pt.enumerate_partitions(size)
    ]

    def fail(msg: str):
        report.ok = False
        report.failures.append(msg)

    for lam in basis:
        v = FockVector.basis(n, lam)
        ni = [diag_apply("h", lam, n, i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                lhs = e_apply(i, f_apply(j, v)) - f_apply(j, e_apply(i, v))
                if i == j:
                    add, rem = pt.node_lists(lam, n, i)
                    k = len(add) - len(rem)
                    qint = LaurentPoly(
                        {e: (1 if k >= 0 else -1) for e in range(-(abs(k) - 1), abs(k), 2)}
                    )
                    rhs = v.scaled(qint)
                else:
                    rhs = FockVector(n, {})
                if lhs != rhs:
                    fail(f"[e_{i}, f_{j}] failed on {lam}")
            # weight compatibility: f_j shifts every h_i eigenvalue by -<alpha_j, h_i>
            for j in range(n):
                for nu in f_apply(j, v).terms:
                    got = diag_apply("h", nu, n, i)
                    want = ni[i].shifted(-_cartan_pairing(n, i, j))
                    if got != want:
                        fail(f"weight relation failed on {lam} -> {nu} (i={i}, j={j})")
        # q-Serre relations
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                order = 1 - _cartan_pairing(n, i, j)
                for op in (e_apply, f_apply):
                    acc = FockVector(n, {})
                    for k in range(order + 1):
                        w = v
                        for _ in range(k):
                            w = op(i, w)
                        w = op(j, w)
                        for _ in range(order - k):
                            w = op(i, w)
                        coef = gauss_balanced(order, k)
                        if k % 2:
                            coef = -coef
                        acc = acc + w.scaled(coef)
                    if not acc.is_zero():
                        name = "e" if op is e_apply else "f"
                        fail(f"{name}-Serre failed on {lam} (i={i}, j={j})")
    return report
