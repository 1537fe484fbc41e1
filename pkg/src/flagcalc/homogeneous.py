"""Marked diagrams and the geometry they encode.

A marked diagram ``D{I}`` stands for the quotient of the group of ``D`` by
the parabolic subgroup determined by the unmarked nodes.  This module
computes dimensions, Picard numbers, fibers of the forgetful contractions
between marked diagrams, and the search for diagrams carrying two projective
bundle structures.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .dynkin import (
    DynkinDiagram,
    _graph_components,
    _normalize_components,
    _raw_components,
    automorphisms,
    cartan_matrix,
    positive_roots,
    subdiagram,
)
from .errors import DomainError, ParseError


@dataclass(frozen=True)
class MarkedDiagram:
    diagram: DynkinDiagram
    marks: tuple[int, ...]

    def __post_init__(self) -> None:
        marks = tuple(sorted(set(self.marks)))
        if not marks:
            raise DomainError("mark set must be nonempty")
        if any(i not in self.diagram.nodes for i in marks):
            raise DomainError(f"marks {marks} not all in diagram {self.diagram}")
        object.__setattr__(self, "marks", marks)

    def render(self) -> str:
        return f"{self.diagram.render()}{{{','.join(str(i) for i in self.marks)}}}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class ContractionFiber:
    """Fiber of the contraction forgetting the marks outside ``base_marks``.

    ``fiber`` lives on the subdiagram spanned by the components of the
    complement of ``base_marks`` that actually meet the remaining marks;
    components without marks contribute points and are recorded in
    ``dropped``.  ``node_map`` sends original node indices to fiber indices.
    """

    base_marks: tuple[int, ...]
    total_marks: tuple[int, ...]
    fiber: MarkedDiagram
    node_map: tuple[tuple[int, int], ...]
    dropped: DynkinDiagram | None


_MARKED_RE = re.compile(r"^(.*?)\{([0-9,\s]+)\}$")


def parse_marked(text: str) -> MarkedDiagram:
    """Parse a marked diagram such as ``B3{1,3}``."""
    m = _MARKED_RE.match(text.strip())
    if m is None:
        raise ParseError(f"cannot parse marked diagram {text!r}")
    comps, node_map = _normalize_components(_raw_components(m.group(1)))
    try:
        raw_marks = [int(p) for p in m.group(2).split(",") if p.strip()]
    except ValueError as exc:
        raise ParseError(f"bad mark list in {text!r}") from exc
    diagram = DynkinDiagram(comps)
    if any(k not in node_map for k in raw_marks):
        raise DomainError(f"marks {raw_marks} not all in diagram {m.group(1)!r}")
    return MarkedDiagram(diagram, tuple(node_map[k] for k in raw_marks))


def dimension(m: MarkedDiagram) -> int:
    """Number of positive roots whose support meets the mark set."""
    marks = set(m.marks)
    return sum(
        1
        for beta in positive_roots(m.diagram).roots
        if any(beta[i - 1] > 0 for i in marks)
    )


def picard_number(m: MarkedDiagram) -> int:
    return len(m.marks)


def contraction_fiber(
    d: DynkinDiagram, total_marks, base_marks
) -> ContractionFiber:
    """Fiber of the contraction ``D{total_marks} -> D{base_marks}``."""
    total = set(total_marks)
    base = set(base_marks)
    if not base:
        raise DomainError("base mark set must be nonempty")
    if not base < total:
        if base == total:
            raise DomainError("contraction along equal mark sets is the identity")
        raise DomainError(f"base marks {sorted(base)} not contained in {sorted(total)}")
    if any(i not in d.nodes for i in total):
        raise DomainError(f"marks {sorted(total)} not all in diagram {d}")
    residual = [i for i in d.nodes if i not in base]
    comps = _graph_components(residual, cartan_matrix(d))
    extra = total - base
    kept = sorted(n for comp in comps if extra & set(comp) for n in comp)
    dropped_nodes = sorted(set(residual) - set(kept))
    fiber_diag, node_map = subdiagram(d, kept)
    fiber_marks = tuple(node_map[i] for i in sorted(extra))
    dropped = subdiagram(d, dropped_nodes)[0] if dropped_nodes else None
    return ContractionFiber(
        base_marks=tuple(sorted(base)),
        total_marks=tuple(sorted(total)),
        fiber=MarkedDiagram(fiber_diag, fiber_marks),
        node_map=tuple(sorted(node_map.items())),
        dropped=dropped,
    )


def is_projective_space(m: MarkedDiagram) -> int | None:
    """Return r when the marked diagram is projective r-space, else None.

    Exactly the marked forms that are projective spaces qualify: ``A_r``
    marked at either end (dimension r), ``C_r`` marked at node 1 (the
    projectivized symplectic vector space, dimension 2r-1), and the rank-2
    coincidence ``B2{2}``, isomorphic to ``C2{1}``.  Diagrams with more than
    one mark or with unmarked components are never reported as projective
    spaces: fibers of contractions discard unmarked components before this
    test is applied.
    """
    if len(m.marks) != 1:
        return None
    if len(m.diagram.components) != 1:
        return None
    (fam, rank) = m.diagram.components[0]
    (k,) = m.marks
    if fam == "A" and k in (1, rank):
        return rank
    if fam == "C" and k == 1:
        return 2 * rank - 1
    if (fam, rank, k) == ("B", 2, 2):
        return 3
    return None


def is_two_bundle_pair(d: DynkinDiagram, i: int, j: int) -> tuple[int, int] | None:
    """(r_minus, r_plus) when both contractions of D{i,j} are projective bundles.

    r_plus is the fiber dimension over D{i} and r_minus the one over D{j}.
    """
    if i == j or i not in d.nodes or j not in d.nodes:
        raise DomainError(f"{(i, j)} is not a pair of distinct nodes of {d}")
    r_plus = is_projective_space(contraction_fiber(d, {i, j}, {i}).fiber)
    if r_plus is None:
        return None
    r_minus = is_projective_space(contraction_fiber(d, {i, j}, {j}).fiber)
    if r_minus is None:
        return None
    return (r_minus, r_plus)


@dataclass(frozen=True)
class TwoBundleEntry:
    diagram: DynkinDiagram
    i: int
    j: int
    r_minus: int
    r_plus: int
    dim: int

    def marked(self) -> MarkedDiagram:
        return MarkedDiagram(self.diagram, (self.i, self.j))

    def render(self) -> str:
        return self.marked().render()


_B2 = DynkinDiagram((("B", 2),))
_C2 = DynkinDiagram((("C", 2),))
_B2_C2_SWAP = {1: 2, 2: 1}


def _canonical_pair(d: DynkinDiagram, i: int, j: int) -> tuple[DynkinDiagram, int, int]:
    """Canonical representative of a two-bundle pair.

    C2 pairs are rewritten on B2 through the node swap identifying the two
    rank-2 varieties.  For non-A diagrams the mark set is canonicalized under
    diagram automorphisms (this folds the three equivalent D4 pairs into
    {3,4}).  Type A mark sets are kept as found: the flip-related pairs
    (r, r+1) and (n-r, n-r+1) are both listed, matching the usual
    presentation of the classification.
    """
    if d == _C2:
        a, b = sorted((_B2_C2_SWAP[i], _B2_C2_SWAP[j]))
        return _B2, a, b
    fam = d.components[0][0]
    if fam == "A":
        a, b = sorted((i, j))
        return d, a, b
    best = max(tuple(sorted((s[i - 1], s[j - 1]))) for s in automorphisms(d))
    return d, best[0], best[1]


def _scan_ranks(family: str, max_rank: int) -> range:
    lo = {"A": 2, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}[family]
    hi = {"A": max_rank, "B": max_rank, "C": max_rank, "D": max_rank, "E": 8, "F": 4, "G": 2}[family]
    return range(lo, min(hi, max_rank) + 1)


@lru_cache(maxsize=None)
def enumerate_two_bundles(max_rank: int) -> tuple[TwoBundleEntry, ...]:
    """All connected diagrams of rank <= max_rank carrying two bundle structures.

    Output is deduplicated under the rank-2 B/C coincidence and under diagram
    automorphisms of the D family, and sorted by (family, rank, marks).
    """
    if max_rank < 2:
        raise DomainError("max_rank must be at least 2")
    seen: dict[tuple[DynkinDiagram, int, int], TwoBundleEntry] = {}
    for family in "ABCDEFG":
        for rank in _scan_ranks(family, max_rank):
            d = DynkinDiagram(((family, rank),))
            for i in d.nodes:
                for j in range(i + 1, rank + 1):
                    if is_two_bundle_pair(d, i, j) is None:
                        continue
                    cd, ci, cj = _canonical_pair(d, i, j)
                    key = (cd, ci, cj)
                    if key in seen:
                        continue
                    r_minus, r_plus = is_two_bundle_pair(cd, ci, cj)
                    seen[key] = TwoBundleEntry(
                        diagram=cd,
                        i=ci,
                        j=cj,
                        r_minus=r_minus,
                        r_plus=r_plus,
                        dim=dimension(MarkedDiagram(cd, (ci, cj))),
                    )
    return tuple(
        sorted(
            seen.values(),
            key=lambda e: (e.diagram.components[0][0], e.diagram.rank, e.i, e.j),
        )
    )
