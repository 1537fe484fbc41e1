"""Dynkin diagrams, Cartan matrices, and root systems in exact integer arithmetic.

A diagram is a finite disjoint union of connected components of types A-G.
Nodes carry global indices 1..n, assigned component by component following
the standard Humphreys numbering inside each component.  The Cartan
convention used throughout is

    C[i][j] = <alpha_i, alpha_j^v>,

so the pairing of a root ``beta`` (an integer coefficient vector over the
simple roots) with a simple coroot is ``<beta, alpha_i^v> = (C^T beta)_i``.
Every value is immutable and every function is pure.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .errors import DomainError, ParseError

Matrix = tuple[tuple[int, ...], ...]
Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

_EXCEPTIONAL_WEYL = {
    ("G", 2): 12,
    ("F", 4): 1152,
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
}


@dataclass(frozen=True)
class DynkinDiagram:
    """A normalized diagram: an ordered tuple of (family, rank) components."""

    components: tuple[tuple[str, int], ...]

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def is_connected(self) -> bool:
        return len(self.components) == 1

    def component_spans(self) -> tuple[tuple[str, int, int], ...]:
        """(family, first_node, last_node) for each component."""
        spans = []
        offset = 0
        for fam, rank in self.components:
            spans.append((fam, offset + 1, offset + rank))
            offset += rank
        return tuple(spans)

    def render(self) -> str:
        return "+".join(f"{fam}{rank}" for fam, rank in self.components)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RootSystem:
    """Cartan matrix plus the full list of positive roots, sorted by (height, lex)."""

    cartan: Matrix
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)


_COMPONENT_RE = re.compile(r"^([A-G])\s*([0-9]+)$")


def _raw_components(text: str) -> list[tuple[str, int]]:
    parts = [p.strip() for p in text.replace("⊔", "+").split("+")]
    if not parts or any(not p for p in parts):
        raise ParseError(f"cannot parse diagram {text!r}")
    comps = []
    for part in parts:
        m = _COMPONENT_RE.match(part.upper())
        if m is None:
            raise ParseError(f"cannot parse diagram component {part!r}")
        fam, rank = m.group(1), int(m.group(2))
        _check_raw_rank(fam, rank)
        comps.append((fam, rank))
    return comps


def _check_raw_rank(fam: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 1,
        "C": rank >= 1,
        "D": rank >= 2,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[fam]
    if not ok:
        raise ParseError(f"rank {rank} out of range for family {fam}")


def _normalize_components(
    raw: list[tuple[str, int]],
) -> tuple[tuple[tuple[str, int], ...], dict[int, int]]:
    """Apply the low-rank coincidence table; map raw node indices to new ones.

    B1, C1 -> A1; D2 -> A1+A1; D3 -> A3 (the center of D3 becomes the middle
    node of A3).  B2 and C2 are kept distinct; their identification is handled
    where varieties, not diagrams, are compared.
    """
    comps: list[tuple[str, int]] = []
    node_map: dict[int, int] = {}
    raw_off = 0
    new_off = 0
    for fam, rank in raw:
        if (fam, rank) in (("B", 1), ("C", 1)):
            comps.append(("A", 1))
            local = {1: 1}
        elif (fam, rank) == ("D", 2):
            comps.extend([("A", 1), ("A", 1)])
            local = {1: 1, 2: 2}
        elif (fam, rank) == ("D", 3):
            comps.append(("A", 3))
            local = {1: 2, 2: 1, 3: 3}
        else:
            comps.append((fam, rank))
            local = {k: k for k in range(1, rank + 1)}
        for old, new in local.items():
            node_map[raw_off + old] = new_off + new
        raw_off += rank
        new_off += rank
    return tuple(comps), node_map


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse a diagram string such as ``A5``, ``B3`` or ``A2+A1`` and normalize it."""
    comps, _ = _normalize_components(_raw_components(text))
    return DynkinDiagram(comps)


def parse_with_node_map(text: str) -> tuple[DynkinDiagram, dict[int, int]]:
    """Like :func:`parse_diagram` but also return the raw-to-normalized node map."""
    comps, node_map = _normalize_components(_raw_components(text))
    return DynkinDiagram(comps), node_map


@lru_cache(maxsize=None)
def _component_cartan(family: str, rank: int) -> Matrix:
    c = [[2 * (i == j) for j in range(rank)] for i in range(rank)]

    def edge(a: int, b: int, ab: int = -1, ba: int = -1) -> None:
        c[a - 1][b - 1] = ab
        c[b - 1][a - 1] = ba

    if family in ("A", "B", "C"):
        for k in range(1, rank):
            edge(k, k + 1)
        if family == "B" and rank >= 2:
            edge(rank - 1, rank, ab=-2, ba=-1)
        if family == "C" and rank >= 2:
            edge(rank - 1, rank, ab=-1, ba=-2)
    elif family == "D":
        for k in range(1, rank - 1):
            edge(k, k + 1)
        edge(rank - 2, rank)
    elif family == "E":
        chain = [1] + list(range(3, rank + 1))
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(2, 4)
    elif family == "F":
        edge(1, 2)
        edge(2, 3, ab=-2, ba=-1)
        edge(3, 4)
    elif family == "G":
        edge(1, 2, ab=-1, ba=-3)
    return tuple(tuple(row) for row in c)


@lru_cache(maxsize=None)
def cartan_matrix(d: DynkinDiagram) -> Matrix:
    """Block-diagonal Cartan matrix of a normalized diagram."""
    n = d.rank
    c = [[0] * n for _ in range(n)]
    offset = 0
    for fam, rank in d.components:
        block = _component_cartan(fam, rank)
        for a in range(rank):
            for b in range(rank):
                c[offset + a][offset + b] = block[a][b]
        offset += rank
    return tuple(tuple(row) for row in c)


def pairing(d: DynkinDiagram, beta: Root, i: int) -> int:
    """Pairing <beta, alpha_i^v> = (C^T beta)_i."""
    c = cartan_matrix(d)
    return sum(beta[j] * c[j][i - 1] for j in range(d.rank))


@lru_cache(maxsize=None)
def _component_positive_roots(family: str, rank: int) -> tuple[Root, ...]:
    """Generate the positive roots of a connected diagram by height.

    A root of height h+1 is beta + alpha_i for some root beta of height h;
    beta + alpha_i is a root iff the alpha_i-string through beta continues
    upward, i.e. iff p - <beta, alpha_i^v> >= 1 where p counts how far the
    string extends downward.
    """
    c = _component_cartan(family, rank)
    simple = [tuple(int(k == i) for k in range(rank)) for i in range(rank)]
    found: set[Root] = set(simple)
    layer = list(simple)
    while layer:
        nxt: set[Root] = set()
        for beta in layer:
            for i in range(rank):
                pair = sum(beta[j] * c[j][i] for j in range(rank))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in found:
                        break
                    p += 1
                if p - pair >= 1:
                    up = list(beta)
                    up[i] += 1
                    new = tuple(up)
                    if new not in found:
                        nxt.add(new)
        found.update(nxt)
        layer = list(nxt)
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def positive_roots(d: DynkinDiagram) -> RootSystem:
    """The positive roots of ``d`` as global coefficient vectors."""
    n = d.rank
    roots: list[Root] = []
    offset = 0
    for fam, rank in d.components:
        for r in _component_positive_roots(fam, rank):
            vec = [0] * n
            vec[offset : offset + rank] = r
            roots.append(tuple(vec))
        offset += rank
    roots.sort(key=lambda r: (sum(r), r))
    return RootSystem(cartan=cartan_matrix(d), roots=tuple(roots))


def weyl_order(d: DynkinDiagram) -> int:
    """Order of the Weyl group, as a product of per-component closed forms."""
    total = 1
    for fam, rank in d.components:
        if fam == "A":
            total *= factorial(rank + 1)
        elif fam in ("B", "C"):
            total *= 2**rank * factorial(rank)
        elif fam == "D":
            total *= 2 ** (rank - 1) * factorial(rank)
        else:
            total *= _EXCEPTIONAL_WEYL[(fam, rank)]
    return total


def _signature(m: Matrix, a: int) -> tuple:
    off = sorted((m[a][b], m[b][a]) for b in range(len(m)) if b != a and m[a][b] != 0)
    return (m[a][a], tuple(off))


def _isomorphisms(sub: Matrix, target: Matrix, find_all: bool) -> list[tuple[int, ...]]:
    """Permutations sigma with sub[a][b] == target[sigma(a)][sigma(b)] for all a, b."""
    k = len(sub)
    if len(target) != k:
        return []
    sub_sig = [_signature(sub, a) for a in range(k)]
    tgt_sig = [_signature(target, a) for a in range(k)]
    if sorted(sub_sig) != sorted(tgt_sig):
        return []
    results: list[tuple[int, ...]] = []
    assign = [-1] * k
    used = [False] * k

    def extend(a: int) -> bool:
        if a == k:
            results.append(tuple(assign))
            return not find_all
        for cand in range(k):
            if used[cand] or tgt_sig[cand] != sub_sig[a]:
                continue
            ok = True
            for b in range(a):
                if (
                    sub[a][b] != target[cand][assign[b]]
                    or sub[b][a] != target[assign[b]][cand]
                ):
                    ok = False
                    break
            if ok:
                assign[a] = cand
                used[cand] = True
                if extend(a + 1):
                    return True
                used[cand] = False
                assign[a] = -1
        return False

    extend(0)
    return results


@lru_cache(maxsize=None)
def automorphisms(d: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    """Diagram automorphisms of a connected diagram, as node permutations.

    Each permutation ``sigma`` is a tuple with ``sigma[k-1]`` the image of
    node ``k``.
    """
    if not d.is_connected():
        raise DomainError("automorphisms are only computed for connected diagrams")
    c = cartan_matrix(d)
    perms = _isomorphisms(c, c, find_all=True)
    return tuple(sorted(tuple(p + 1 for p in perm) for perm in perms))


def _graph_components(nodes: list[int], c: Matrix) -> list[list[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        while frontier:
            a = frontier.pop()
            for b in remaining - comp:
                if c[a - 1][b - 1] != 0:
                    comp.add(b)
                    frontier.append(b)
        comps.append(sorted(comp))
        remaining -= comp
    return sorted(comps, key=min)


def _candidate_types(k: int) -> list[tuple[str, int]]:
    cands = [("A", k)]
    if k >= 2:
        cands += [("B", k), ("C", k)]
    if k >= 4:
        cands.append(("D", k))
    if k in (6, 7, 8):
        cands.append(("E", k))
    if k == 4:
        cands.append(("F", 4))
    if k == 2:
        cands.append(("G", 2))
    return cands


def _classify_component(c: Matrix, comp: list[int]) -> tuple[str, int, dict[int, int]]:
    k = len(comp)
    sub = tuple(tuple(c[a - 1][b - 1] for b in comp) for a in comp)
    for fam, rank in _candidate_types(k):
        isos = _isomorphisms(sub, _component_cartan(fam, rank), find_all=False)
        if isos:
            sigma = isos[0]
            return fam, rank, {comp[a]: sigma[a] + 1 for a in range(k)}
    raise DomainError(f"nodes {comp} do not span a diagram of finite type")


def subdiagram(
    d: DynkinDiagram, nodes: "set[int] | frozenset[int] | tuple[int, ...] | list[int]"
) -> tuple[DynkinDiagram, dict[int, int]]:
    """Induced subdiagram on a node subset, re-normalized.

    Returns the new diagram together with the map from original node indices
    to the new global indices.  Components are ordered by their smallest
    original node.
    """
    node_list = sorted(set(nodes))
    if not node_list:
        raise DomainError("empty node set has no subdiagram")
    if any(a not in d.nodes for a in node_list):
        raise DomainError(f"nodes {node_list} not all in diagram {d}")
    c = cartan_matrix(d)
    comps = _graph_components(node_list, c)
    parts: list[tuple[str, int]] = []
    mapping: dict[int, int] = {}
    offset = 0
    for comp in comps:
        fam, rank, local = _classify_component(c, comp)
        parts.append((fam, rank))
        for orig, pos in local.items():
            mapping[orig] = offset + pos
        offset += rank
    return DynkinDiagram(tuple(parts)), mapping
