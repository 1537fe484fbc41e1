"""Consistency analysis for varieties with two projective bundle structures.

The two structures p+ and p- of a candidate variety restrict to tags
delta_plus and delta_minus on lines of the opposite family.  This module
computes those tags for the homogeneous models, checks the shape trichotomy
that any configuration with one-dimensional minus-fibers must satisfy, and
matches arbitrary data against the homogeneous models.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .dynkin import DynkinDiagram, pairing, positive_roots
from .errors import DomainError
from .homogeneous import (
    TwoBundleEntry,
    dimension,
    MarkedDiagram,
    enumerate_two_bundles,
    is_two_bundle_pair,
)
from .tags import (
    FIRST_NODE_ONLY,
    SYMMETRIC_ENDS,
    Tag,
    TagShape,
    classify_tag_shape,
    is_trivial,
    tag_from_splitting,
)


class TagPair(NamedTuple):
    plus: Tag
    minus: Tag


def _side_tag(d: DynkinDiagram, base: int, other: int) -> Tag:
    """Tag of the bundle contracted to D{base}, on lines of the opposite side.

    The fiber of the contraction to D{base} is cut out by the positive roots
    beta with beta_base = 0 and beta_other > 0, and the splitting type of the
    bundle realizing that fiber on a line of the base-node class is, up to
    twist, {0} together with the negated pairings -<beta, alpha_base^v>.
    Differencing the sorted degrees gives the tag.
    """
    degrees = [0]
    for beta in positive_roots(d).roots:
        if beta[base - 1] == 0 and beta[other - 1] > 0:
            degrees.append(-pairing(d, beta, base))
    return tag_from_splitting(sorted(degrees))


def homogeneous_tags(d: DynkinDiagram, i: int, j: int) -> TagPair:
    """The pair (delta_plus, delta_minus) of the homogeneous model D{i,j}.

    delta_plus lives on the type A diagram of the fiber over D{i},
    delta_minus on the one of the fiber over D{j}.  The pair (d, i, j) must
    carry two projective bundle structures.
    """
    if is_two_bundle_pair(d, i, j) is None:
        raise DomainError(f"{MarkedDiagram(d, (i, j))} does not carry two projective bundle structures")
    return TagPair(plus=_side_tag(d, i, j), minus=_side_tag(d, j, i))


@dataclass(frozen=True)
class TwoBundleData:
    r_minus: int
    r_plus: int
    delta_minus: Tag
    delta_plus: Tag

    def __post_init__(self) -> None:
        for r, tag, name in (
            (self.r_minus, self.delta_minus, "delta_minus"),
            (self.r_plus, self.delta_plus, "delta_plus"),
        ):
            if r < 1:
                raise DomainError("relative dimensions must be positive")
            if not (tag.diagram.is_connected() and tag.diagram.components[0] == ("A", r)):
                raise DomainError(f"{name} must live on A{r}, got {tag.diagram}")

    @classmethod
    def from_values(cls, r_minus, r_plus, minus_values, plus_values) -> "TwoBundleData":
        return cls(
            r_minus=r_minus,
            r_plus=r_plus,
            delta_minus=Tag(DynkinDiagram((("A", r_minus),)), tuple(minus_values)),
            delta_plus=Tag(DynkinDiagram((("A", r_plus),)), tuple(plus_values)),
        )


@dataclass(frozen=True)
class ShapeVerdict:
    passed: bool
    shape: TagShape
    reason: str | None = None


def check_shape_constraint(data: TwoBundleData) -> ShapeVerdict:
    """Shape check for configurations whose minus-side fibers are lines.

    delta_plus must be either (d, 0, ..., 0) with d >= 0 or
    (d, 0, ..., 0, d) with d > 0 and odd rank; anything else fails.
    """
    if data.r_minus != 1:
        raise DomainError("the shape check applies only when r_minus = 1")
    shape = classify_tag_shape(data.delta_plus)
    if shape.kind in (FIRST_NODE_ONLY, SYMMETRIC_ENDS):
        return ShapeVerdict(passed=True, shape=shape)
    v = data.delta_plus.values
    clauses = []
    if any(x != 0 for x in v[1:]):
        clauses.append("first-node clause: support extends past node 1")
    if len(v) % 2 == 0:
        clauses.append("symmetric-ends clause: rank is even")
    elif not (v[0] == v[-1] > 0):
        clauses.append("symmetric-ends clause: end values differ or vanish")
    else:
        clauses.append("symmetric-ends clause: interior values are nonzero")
    return ShapeVerdict(passed=False, shape=shape, reason="; ".join(clauses))


@dataclass(frozen=True)
class HomogeneousModel:
    entry: TwoBundleEntry
    tag_plus: Tag
    tag_minus: Tag
    orientation: str
    product: bool = False


def _product_entry(r_minus: int, r_plus: int) -> TwoBundleEntry:
    diagram = DynkinDiagram((("A", r_minus), ("A", r_plus)))
    return TwoBundleEntry(
        diagram=diagram,
        i=1,
        j=r_minus + 1,
        r_minus=r_minus,
        r_plus=r_plus,
        dim=dimension(MarkedDiagram(diagram, (1, r_minus + 1))),
    )


def match_model(data: TwoBundleData, max_rank: int) -> tuple[HomogeneousModel, ...]:
    """All homogeneous models of rank <= max_rank with the given invariants.

    A pair of zero tags matches the product of two projective spaces, which
    is reported as a product model.  Every other model is drawn from the
    connected classification, matched in both orientations.  An empty result
    means no homogeneous model exists within the rank bound.
    """
    if max_rank < max(data.r_minus, data.r_plus) + 1:
        raise DomainError("max_rank must be at least max(r_minus, r_plus) + 1")
    if is_trivial(data.delta_minus) and is_trivial(data.delta_plus):
        entry = _product_entry(data.r_minus, data.r_plus)
        tags = homogeneous_tags(entry.diagram, entry.i, entry.j)
        return (
            HomogeneousModel(
                entry=entry,
                tag_plus=tags.plus,
                tag_minus=tags.minus,
                orientation="direct",
                product=True,
            ),
        )
    matches: list[HomogeneousModel] = []
    for entry in enumerate_two_bundles(max_rank):
        tags = homogeneous_tags(entry.diagram, entry.i, entry.j)
        direct = (
            entry.r_minus == data.r_minus
            and entry.r_plus == data.r_plus
            and tags.minus.values == data.delta_minus.values
            and tags.plus.values == data.delta_plus.values
        )
        swapped = (
            entry.r_plus == data.r_minus
            and entry.r_minus == data.r_plus
            and tags.plus.values == data.delta_minus.values
            and tags.minus.values == data.delta_plus.values
        )
        if direct:
            matches.append(
                HomogeneousModel(entry=entry, tag_plus=tags.plus, tag_minus=tags.minus, orientation="direct")
            )
        elif swapped:
            matches.append(
                HomogeneousModel(entry=entry, tag_plus=tags.plus, tag_minus=tags.minus, orientation="swapped")
            )
    return tuple(matches)
