"""Surfaces, b-manifolds, and dividing-set classes.

A dividing-set class binds a region graph to the closed surface it lives
on.  The two surfaces in scope split the three-sphere into two pieces:
the equatorial sphere into two balls, the unknotted torus into two solid
tori.  Embeddability is a per-surface shape constraint on the graph:

* sphere: the graph is a tree and every region is planar (genus 0);
* torus, no essential curves: still a tree, but exactly one region
  carries the genus of the torus;
* torus, essential curves: the graph has exactly one cycle (the ring of
  essential curves, possibly with trees of contractible curves attached),
  every region is planar, and the common homology class of the essential
  curves is a normalized slope (p, q), coprime with 0 < q <= p.

``total_euler`` adds up per-region Euler characteristics (chi = 2 - 2g - b
for a genus-g region with b boundary curves) and must reproduce the Euler
characteristic of the closed surface; the suite checks that conservation
law on everything the enumerator produces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .region_graph import RegionGraph, Violation, validate


class Surface(enum.Enum):
    SPHERE = "sphere"
    TORUS = "torus"

    @property
    def genus(self) -> int:
        return 0 if self is Surface.SPHERE else 1

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus


@dataclass(frozen=True)
class ManifoldSpec:
    """An ambient three-manifold with a separating critical surface.

    Only the three-sphere is supported; the critical surface is either an
    equatorial sphere or an unknotted torus, and in both cases its
    complement has exactly two components.
    """

    critical: Surface
    ambient: str = "S3"

    def __post_init__(self) -> None:
        if self.ambient != "S3":
            raise ValueError(f"unsupported ambient manifold {self.ambient!r}")

    @property
    def complement_components(self) -> int:
        return 2


S3_S2 = ManifoldSpec(Surface.SPHERE)
S3_T2 = ManifoldSpec(Surface.TORUS)


@dataclass(frozen=True)
class DividingSetClass:
    """Isotopy class of a dividing set: surface, region graph, optional slope."""

    surface: Surface
    graph: RegionGraph
    slope: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.slope is not None:
            object.__setattr__(self, "slope", (int(self.slope[0]), int(self.slope[1])))


def region_euler(genus: int, boundary_count: int) -> int:
    """Euler characteristic 2 - 2*genus - boundary_count of a compact region."""
    if boundary_count < 1:
        raise ValueError("a region of a cut surface has at least one boundary curve")
    return 2 - 2 * genus - boundary_count


def _slope_violation(slope: tuple[int, int]) -> Violation | None:
    p, q = slope
    if not (0 < q <= p):
        return Violation("slope", f"slope ({p},{q}) must satisfy 0 < q <= p")
    if gcd(p, q) != 1:
        return Violation("slope", f"slope ({p},{q}) must be coprime")
    return None


def check_embeddable(d: DividingSetClass) -> Violation | None:
    """Check the per-surface invariants of a dividing-set class.

    The underlying graph must already be valid; returns ``None`` when the
    class can be realized on its surface.
    """
    graph_violation = validate(d.graph)
    if graph_violation is not None:
        return graph_violation

    g = d.graph
    if g.edge_count == 0:
        return Violation("no curves", "a dividing set has at least one curve")

    is_tree = g.edge_count == g.vertex_count - 1

    if d.surface is Surface.SPHERE:
        if not is_tree:
            return Violation("sphere requires tree", "sphere region graphs are trees")
        if g.genus_sum != 0:
            return Violation("genus", "sphere regions are all genus 0")
        if d.slope is not None:
            return Violation("slope", "sphere classes carry no slope")
        return None

    if is_tree:
        if g.genus_sum != 1:
            return Violation(
                "genus", "a torus cut by contractible curves has one genus-1 region"
            )
        if d.slope is not None:
            return Violation("slope", "contractible-only torus classes carry no slope")
        return None

    # Exactly one cycle: the essential curves.
    if g.genus_sum != 0:
        return Violation("genus", "torus classes with essential curves are all genus 0")
    if d.slope is None:
        return Violation("slope", "essential torus curves require a slope (p, q)")
    return _slope_violation(d.slope)


def total_euler(d: DividingSetClass) -> int:
    """Sum of per-region Euler characteristics over all regions.

    For every embeddable class this reproduces the Euler characteristic
    of the closed surface: 2 on the sphere, 0 on the torus.
    """
    g = d.graph
    return sum(region_euler(v.genus, g.degrees[v.id]) for v in g.vertices)
