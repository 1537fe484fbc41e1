"""Drums: one-dimensional-torus geometry built over two-bundle varieties.

Given a variety with two projective bundle structures, embedding it through
the two fundamental representations attached to its marks produces a variety
one dimension higher carrying a torus action whose fixed components are the
two contraction targets.  This module computes the exact dimension data of
that construction and the integer intersection ledger of the associated
blowup, holding everything in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dynkin import DynkinDiagram, cartan_matrix, positive_roots
from .errors import DomainError
from .homogeneous import MarkedDiagram, dimension, is_two_bundle_pair

DIVISOR_CLASSES = ("alpha*L", "pi*L-", "pi*L+", "Y+", "Y-", "M+", "M-")
CURVE_CLASSES = ("ell-", "ell+")


@lru_cache(maxsize=None)
def _symmetrizer(d: DynkinDiagram) -> tuple[Fraction, ...]:
    """Positive rationals d_i with d_i * C[i][j] == d_j * C[j][i]."""
    c = cartan_matrix(d)
    n = d.rank
    vals: list[Fraction | None] = [None] * n
    for _, first, last in d.component_spans():
        vals[first - 1] = Fraction(1)
        frontier = [first]
        while frontier:
            a = frontier.pop()
            for b in range(first, last + 1):
                if vals[b - 1] is None and c[a - 1][b - 1] != 0:
                    vals[b - 1] = vals[a - 1] * c[b - 1][a - 1] / c[a - 1][b - 1]
                    frontier.append(b)
    return tuple(vals)  # type: ignore[arg-type]


def weyl_dim(d: DynkinDiagram, node: int) -> int:
    """Dimension of the irreducible representation of the fundamental weight at ``node``.

    Evaluates the product over positive roots beta of
    (rho + omega, beta) / (rho, beta) in exact rational arithmetic; the
    result is asserted to be an integer.
    """
    if not d.is_connected():
        raise DomainError("fundamental representation dimensions require a connected diagram")
    if node not in d.nodes:
        raise DomainError(f"node {node} not in diagram {d}")
    sym = _symmetrizer(d)
    result = Fraction(1)
    for beta in positive_roots(d).roots:
        rho_beta = sum(beta[k] * sym[k] for k in range(d.rank))
        result *= (rho_beta + beta[node - 1] * sym[node - 1]) / rho_beta
    if result.denominator != 1:
        raise ArithmeticError(f"non-integral representation dimension for {d} node {node}")
    return int(result)


@dataclass(frozen=True)
class FixedComponent:
    variety: MarkedDiagram
    mu: int
    dim: int


@dataclass(frozen=True)
class HorosphericalDrum:
    diagram: DynkinDiagram
    i: int
    j: int
    dim_y: int
    dim_z: int
    dim_v_i: int
    dim_v_j: int
    ambient_dim: int
    sink: FixedComponent
    source: FixedComponent

    @property
    def fixed_components(self) -> tuple[FixedComponent, ...]:
        return (self.sink, self.source)


def build_drum(d: DynkinDiagram, i: int, j: int) -> HorosphericalDrum:
    """Drum over the two-bundle variety D{i,j}.

    The ambient projective space of the orbit closure has dimension
    dim V_i + dim V_j - 1; the drum itself gains one dimension over the base
    variety.  The torus weight is normalized to 0 on the sink D{i} and 1 on
    the source D{j}.
    """
    if is_two_bundle_pair(d, i, j) is None:
        raise DomainError(f"{MarkedDiagram(d, (i, j))} is not a two-bundle model")
    dim_y = dimension(MarkedDiagram(d, (i, j)))
    dim_v_i = weyl_dim(d, i)
    dim_v_j = weyl_dim(d, j)
    sink_variety = MarkedDiagram(d, (i,))
    source_variety = MarkedDiagram(d, (j,))
    return HorosphericalDrum(
        diagram=d,
        i=i,
        j=j,
        dim_y=dim_y,
        dim_z=dim_y + 1,
        dim_v_i=dim_v_i,
        dim_v_j=dim_v_j,
        ambient_dim=dim_v_i + dim_v_j - 1,
        sink=FixedComponent(variety=sink_variety, mu=0, dim=dimension(sink_variety)),
        source=FixedComponent(variety=source_variety, mu=1, dim=dimension(source_variety)),
    )


def bandwidth(drum: HorosphericalDrum) -> int:
    """Spread of the torus weight over the fixed components."""
    if not isinstance(drum, HorosphericalDrum):
        raise TypeError(f"bandwidth needs a built drum, got {type(drum).__name__}")
    mus = [c.mu for c in drum.fixed_components]
    return max(mus) - min(mus)


@dataclass(frozen=True)
class IntersectionLedger:
    """Integer pairing table between divisor and curve classes on the blowup.

    Divisor classes are recorded as vectors over the basis
    (alpha*L, pi*L-, pi*L+); the exceptional classes satisfy
    Y+ = alpha*L - pi*L- and Y- = alpha*L - pi*L+, and M+- = alpha*L - Y+-.
    The nefness of M+ and M- is recorded as a pair of flags, not derived.
    """

    class_vectors: tuple[tuple[str, tuple[int, int, int]], ...]
    table: tuple[tuple[tuple[str, str], int], ...]
    m_plus_nef: bool
    m_minus_nef: bool

    def vector(self, divisor: str) -> tuple[int, int, int]:
        return dict(self.class_vectors)[divisor]

    def product(self, divisor: str, curve: str) -> int:
        return dict(self.table)[(divisor, curve)]


def ledger(
    drum: HorosphericalDrum, l_ell_minus: int = 1, l_ell_plus: int = 1
) -> IntersectionLedger:
    """Pairing table of the drum blowup against the two line classes.

    The degrees of the polarization on the two line classes default to the
    normalization l_ell_minus = l_ell_plus = 1 under which the table is fully
    numeric; other values keep the dependence on those degrees explicit.
    """
    if not isinstance(drum, HorosphericalDrum):
        raise TypeError(f"ledger needs a built drum, got {type(drum).__name__}")
    vectors: dict[str, tuple[int, int, int]] = {
        "alpha*L": (1, 0, 0),
        "pi*L-": (0, 1, 0),
        "pi*L+": (0, 0, 1),
        "Y+": (1, -1, 0),
        "Y-": (1, 0, -1),
        "M+": (0, 1, 0),
        "M-": (0, 0, 1),
    }
    base_pairings = {
        ("alpha*L", "ell-"): l_ell_minus,
        ("alpha*L", "ell+"): l_ell_plus,
        ("pi*L-", "ell-"): 0,
        ("pi*L-", "ell+"): 1,
        ("pi*L+", "ell-"): 1,
        ("pi*L+", "ell+"): 0,
    }
    table: dict[tuple[str, str], int] = {}
    for name in DIVISOR_CLASSES:
        vec = vectors[name]
        for curve in CURVE_CLASSES:
            table[(name, curve)] = sum(
                coeff * base_pairings[(basis, curve)]
                for coeff, basis in zip(vec, ("alpha*L", "pi*L-", "pi*L+"))
            )
    return IntersectionLedger(
        class_vectors=tuple((name, vectors[name]) for name in DIVISOR_CLASSES),
        table=tuple(sorted(table.items())),
        m_plus_nef=True,
        m_minus_nef=True,
    )
