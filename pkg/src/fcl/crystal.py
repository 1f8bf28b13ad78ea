"""Crystal structure on partitions: signature rule, Kashiwara operators,
crystal graphs, branching multiplicities and the crystal irreducibility test.

The signature of a partition scans its columns left to right, writing A for
an addable i-node and R for a removable one; RA pairs cancel recursively and
the survivors A..AR..R locate the good nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import partitions as pt
from .errors import ResourceBoundError
from .qseries import TruncatedSeries

__all__ = [
    "SignatureWord",
    "signature",
    "f_tilde",
    "e_tilde",
    "eps_phi",
    "CrystalGraph",
    "crystal_graph",
    "branching_series_crystal",
    "socle_restriction",
    "js_crystal",
    "to_dot",
]


@dataclass(frozen=True)
class SignatureWord:
    symbols: tuple[tuple[str, int], ...]
    reduced: tuple[tuple[str, int], ...]
    good_removable: int | None
    good_addable: int | None

    @property
    def eps(self) -> int:
        return sum(1 for s, _ in self.reduced if s == "R")

    @property
    def phi(self) -> int:
        return sum(1 for s, _ in self.reduced if s == "A")

    def word(self, reduced: bool = False) -> str:
        syms = self.reduced if reduced else self.symbols
        return " ".join(f"{s}{c}" for s, c in syms)


def signature(lam: pt.Partition, n: int, i: int) -> SignatureWord:
    add, rem = pt.node_lists(lam, n, i)
    raw = sorted(
        [("A", nd.col) for nd in add] + [("R", nd.col) for nd in rem],
        key=lambda t: t[1],
    )
    word = list(raw)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k][0] == "R" and word[k + 1][0] == "A":
                del word[k : k + 2]
                changed = True
                break
    removals = [c for s, c in word if s == "R"]
    addables = [c for s, c in word if s == "A"]
    return SignatureWord(
        symbols=tuple(raw),
        reduced=tuple(word),
        good_removable=removals[0] if removals else None,
        good_addable=addables[-1] if addables else None,
    )


def f_tilde(lam: pt.Partition, n: int, i: int) -> pt.Partition | None:
    sig = signature(lam, n, i)
    if sig.good_addable is None:
        return None
    add, _ = pt.node_lists(lam, n, i)
    nd = next(a for a in add if a.col == sig.good_addable)
    return pt.add_node(lam, nd)


def e_tilde(lam: pt.Partition, n: int, i: int) -> pt.Partition | None:
    sig = signature(lam, n, i)
    if sig.good_removable is None:
        return None
    _, rem = pt.node_lists(lam, n, i)
    nd = next(r for r in rem if r.col == sig.good_removable)
    return pt.remove_node(lam, nd)


def eps_phi(lam: pt.Partition, n: int, i: int) -> tuple[int, int]:
    sig = signature(lam, n, i)
    return sig.eps, sig.phi


def _require_regular(lam: pt.Partition, n: int):
    if not pt.is_n_regular(lam, n):
        raise ValueError(f"{lam} is not {n}-regular")


def js_crystal(lam: pt.Partition, n: int) -> bool:
    """True iff the eps profile is a single 1 (the empty partition counts)."""
    _require_regular(lam, n)
    if not lam:
        return True
    eps = [eps_phi(lam, n, i)[0] for i in range(n)]
    return sorted(eps) == [0] * (n - 1) + [1]


def socle_restriction(lam: pt.Partition, n: int) -> list[pt.Partition]:
    """The predecessors e~_i(lam); multiplicity-free by construction."""
    _require_regular(lam, n)
    out = []
    for i in range(n):
        mu = e_tilde(lam, n, i)
        if mu is not None:
            out.append(mu)
    return sorted(out, reverse=True)


@dataclass
class CrystalGraph:
    n: int
    max_m: int
    component_of_empty: bool
    nodes: list[pt.Partition]
    edges: list[tuple[pt.Partition, int, pt.Partition]] = field(default_factory=list)

    def levels(self) -> dict[int, list[pt.Partition]]:
        out: dict[int, list[pt.Partition]] = {}
        for lam in self.nodes:
            out.setdefault(sum(lam), []).append(lam)
        return out

    def heads(self) -> list[pt.Partition]:
        """Nodes with no incoming edge (sources of components)."""
        targets = {mu for _, _, mu in self.edges}
        return sorted((lam for lam in self.nodes if lam not in targets), reverse=True)


def _node_order(lam: pt.Partition):
    return (sum(lam), tuple(-p for p in lam))


def crystal_graph(
    n: int,
    max_m: int,
    component_of_empty: bool = True,
    max_nodes: int | None = None,
) -> CrystalGraph:
    """The crystal graph on partitions of weight <= max_m.

    With component_of_empty=True only the component of the empty partition
    is built (its node set is checked to be the n-regular partitions).
    """
    if component_of_empty:
        level: list[pt.Partition] = [()]
        nodes: list[pt.Partition] = [()]
        edges = []
        seen = {()}
        for _ in range(max_m):
            nxt = set()
            for lam in level:
                for i in range(n):
                    mu = f_tilde(lam, n, i)
                    if mu is not None and sum(mu) <= max_m:
                        edges.append((lam, i, mu))
                        nxt.add(mu)
            level = sorted(nxt - seen, reverse=True)
            seen |= nxt
            nodes.extend(level)
            if max_nodes is not None and len(nodes) > max_nodes:
                raise ResourceBoundError(
                    f"crystal graph exceeds {max_nodes} nodes at weight bound {max_m}"
                )
        for lam in nodes:
            if not pt.is_n_regular(lam, n):
                raise AssertionError(
                    f"component of the empty partition contains irregular {lam}"
                )
    else:
        nodes = [
            lam
            for m in range(max_m + 1)
            for lam in pt.enumerate_partitions(m)
        ]
        if max_nodes is not None and len(nodes) > max_nodes:
            raise ResourceBoundError(
                f"crystal graph exceeds {max_nodes} nodes at weight bound {max_m}"
            )
        edges = []
        for lam in nodes:
            if sum(lam) == max_m:
                continue
            for i in range(n):
                mu = f_tilde(lam, n, i)
                if mu is not None:
                    edges.append((lam, i, mu))
    nodes.sort(key=_node_order)
    edges.sort(key=lambda e: (_node_order(e[0]), e[1]))
    return CrystalGraph(n, max_m, component_of_empty, nodes, edges)


def branching_series_crystal(
    n: int, j: int, target: tuple[int, int], degree: int
) -> TruncatedSeries:
    """Graded multiplicity of the target weight by crystal-vertex counting.

    The q^e coefficient counts n-regular partitions of weight
    Lambda_s + Lambda_t - Lambda_j - e*delta (exactly, delta included) whose
    eps profile vanishes away from j and is at most 1 at j.
    """
    prof = pt.weight_target_profile(n, j % n, target)
    terms: dict[int, int] = {}
    if prof is not None:
        c, s0 = prof
        for e in range(degree + 1):
            size = n * e + s0
            if size < 0:
                continue
            if any(e + ci < 0 for ci in c):
                continue
            want = tuple(e + ci for ci in c)
            count = 0
            for lam in pt.enumerate_partitions(size, regular=n):
                if pt.residue_counts(lam, n) != want:
                    continue
                eps = [eps_phi(lam, n, i)[0] for i in range(n)]
                if eps[j % n] <= 1 and all(
                    eps[i] == 0 for i in range(n) if i != j % n
                ):
                    count += 1
            if count:
                terms[e] = count
    return TruncatedSeries(terms, 1, degree)


def to_dot(graph: CrystalGraph) -> str:
    """DOT rendering; irreducible-restriction nodes get peripheries=2."""
    from .paths import js_combinatorial

    lines = ["digraph crystal {"]
    for lam in graph.nodes:
        attrs = []
        if pt.is_n_regular(lam, graph.n) and js_combinatorial(lam, graph.n):
            attrs.append("peripheries=2")
        attr = (" [" + ",".join(attrs) + "]") if attrs else ""
        lines.append(f'  "{pt.format_partition(lam)}"{attr};')
    for lam, i, mu in graph.edges:
        lines.append(
            f'  "{pt.format_partition(lam)}" -> "{pt.format_partition(mu)}" [label="{i}"];'
        )
    lines.append("}")
    return "\n".join(lines)
