"""Rotation actions on polygon edge systems.

The generator of each family's cyclic action:
  A, classicalA    one vertex step on the n-gon
  C               one vertex step on the 2n-gon (bar labels renormalize)
  D, classicalD    one vertex step on the 2n-gon plus a color swap on
                   every diameter
  classicalBC      `generator_step` vertex steps on the 2n-gon (default 2)

Also home to the folding bijection between multidissections invariant
under an even power of the colored rotation and multidissections of a
smaller polygon, and to the odd-power correspondence with the centrally
symmetric family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .polygons import (
    SOLID, DOTTED,
    AEdge, CDiameter, CSegregated, CIntegrated,
    DDiameter, DPairSeg, DPairInt,
    Multidissection, edge_chords, edge_universe, enumerate_multidissections,
)


def declared_group_order(family: str, n: int) -> int:
    """Order of the acting cyclic group (which may exceed the exact order
    of the generator on the edge set)."""
    return 2 * n if family in ("D", "classicalD") else n


def resolve_step(family: str, generator_step: int | None) -> int:
    """classicalBC admits a configurable vertex-step; everyone else is
    pinned to one application of the family generator."""
    if family == "classicalBC":
        if generator_step is None:
            return 2
        if generator_step not in (1, 2):
            raise ValueError("generator_step must be 1 or 2")
        return generator_step
    if generator_step is not None:
        raise ValueError("generator_step applies to classicalBC only")
    return 1


def _shift_pair_once(n: int, segregated: bool, a: int, b: int):
    """One vertex step for a centrally symmetric nondiameter pair with
    indices a < b, returning (segregated', a', b')."""
    if b < n:
        return (segregated, a + 1, b + 1)
    # index b sits at the seam: the pair flips kind and restarts at 1
    return (not segregated, 1, a + 1)


def _rotate_once(family: str, n: int, e):
    if isinstance(e, AEdge):
        i = e.i + 1 if e.i < n else 1
        j = e.j + 1 if e.j < n else 1
        return AEdge(min(i, j), max(i, j))
    if isinstance(e, CDiameter):
        return CDiameter(e.a + 1 if e.a < n else 1)
    if isinstance(e, DDiameter):
        a = e.a + 1 if e.a < n else 1
        return DDiameter(a, DOTTED if e.color == SOLID else SOLID)
    if isinstance(e, CSegregated):
        seg, a, b = _shift_pair_once(n, True, e.a, e.b)
        return CSegregated(a, b) if seg else CIntegrated(a, b)
    if isinstance(e, CIntegrated):
        seg, a, b = _shift_pair_once(n, False, e.a, e.b)
        return CSegregated(a, b) if seg else CIntegrated(a, b)
    if isinstance(e, DPairSeg):
        seg, a, b = _shift_pair_once(n, True, e.a, e.b)
        return DPairSeg(a, b) if seg else DPairInt(a, b)
    if isinstance(e, DPairInt):
        seg, a, b = _shift_pair_once(n, False, e.a, e.b)
        return DPairSeg(a, b) if seg else DPairInt(a, b)
    raise TypeError("not an edge: %r" % (e,))


def rotate_edge(family: str, n: int, e, generator_step: int | None = None):
    """One application of the family's generator to a single edge."""
    out = e
    for _ in range(resolve_step(family, generator_step)):
        out = _rotate_once(family, n, out)
    return out


@lru_cache(maxsize=None)
def rotation_edge_map(family: str, n: int, d: int,
                      generator_step: int | None = None) -> tuple:
    """Pairs (edge, generator^d(edge)) over the whole edge universe."""
    if d < 0:
        raise ValueError("power must be >= 0")
    edges = edge_universe(family, n)
    images = list(edges)
    for _ in range(d):
        images = [rotate_edge(family, n, e, generator_step) for e in images]
    return tuple(zip(edges, images))


def rotate_multidissection(md: Multidissection, d: int = 1,
                           generator_step: int | None = None) -> Multidissection:
    emap = dict(rotation_edge_map(md.family, md.n, d, generator_step))
    return Multidissection(md.family, md.n,
                           {emap[e]: m for e, m in md.items()}, validate=False)


def is_fixed(md: Multidissection, d: int,
             generator_step: int | None = None) -> bool:
    emap = dict(rotation_edge_map(md.family, md.n, d, generator_step))
    return all(md.multiplicity(emap[e]) == m for e, m in md.items())


@lru_cache(maxsize=None)
def action_order(family: str, n: int, generator_step: int | None = None) -> int:
    """Exact order of the generator on the full edge set, computed as the
    lcm of its cycle lengths."""
    emap = dict(rotation_edge_map(family, n, 1, generator_step))
    order = 1
    seen = set()
    for start in emap:
        if start in seen:
            continue
        length, cur = 1, emap[start]
        seen.add(start)
        while cur != start:
            seen.add(cur)
            cur = emap[cur]
            length += 1
        order = math.lcm(order, length)
    return order


@dataclass(frozen=True)
class RotationAction:
    """The acting cyclic group of a family, with its declared order."""

    family: str
    n: int
    generator_step: int | None = None
    declared_order: int = field(init=False)

    def __post_init__(self):
        resolve_step(self.family, self.generator_step)
        object.__setattr__(self, "declared_order",
                           declared_group_order(self.family, self.n))
        if declared_group_order(self.family, self.n) % \
                action_order(self.family, self.n, self.generator_step):
            raise ValueError("generator order does not divide the declared "
                             "group order")

    def apply(self, md: Multidissection, d: int = 1) -> Multidissection:
        return rotate_multidissection(md, d, self.generator_step)

    def is_fixed(self, md: Multidissection, d: int) -> bool:
        return is_fixed(md, d, self.generator_step)


def count_fixed(family: str, n: int, k: int, d: int,
                generator_step: int | None = None) -> int:
    """Number of k-edge multidissections fixed by generator^d, by
    filtering the full enumeration."""
    emap = dict(rotation_edge_map(family, n, d, generator_step))
    total = 0
    for md in enumerate_multidissections(family, n, k):
        if all(md.multiplicity(emap[e]) == m for e, m in md.items()):
            total += 1
    return total


# ---------------------------------------------------------------------------
# Folding for even powers of the colored rotation
# ---------------------------------------------------------------------------
#
# For even d dividing 2n the d-th rotation power is a pure chord shift,
# and its invariant multidissections biject with multidissections of a
# smaller polygon with parameter p, where p = d when d | n and p = d/2
# otherwise.  Orbits of the shift fold onto single edges: a diameter
# orbit keeps its color and reduces its index mod p; a centrally
# symmetric orbit reduces a constituent chord mod 2p, except that chord
# classes at difference exactly p close up into an inscribed polygon and
# fold onto one diameter of each color.


def fold_target_param(n: int, d: int) -> int:
    if d <= 0 or d % 2 or (2 * n) % d:
        raise ValueError("folding needs an even divisor of 2n")
    return d if n % d == 0 else d // 2


def _d_pair_from_chord(m: int, u: int, v: int):
    """The centrally symmetric pair of the 2m-gon containing chord {u, v}
    (0-indexed, nondiameter)."""
    u %= 2 * m
    v %= 2 * m
    if u == v or (v - u) % (2 * m) == m:
        raise ValueError("chord {%d, %d} is degenerate in P_%d" % (u, v, 2 * m))
    u_barred, v_barred = u >= m, v >= m
    x = u - m + 1 if u_barred else u + 1
    y = v - m + 1 if v_barred else v + 1
    if u_barred == v_barred:
        return DPairSeg(min(x, y), max(x, y))
    return DPairInt(min(x, y), max(x, y))


def _orbits(md: Multidissection, emap: dict) -> list[tuple[tuple, int]]:
    """Support split into generator^d-orbits as (orbit edges, multiplicity)."""
    seen = set()
    out = []
    for e, m in md.items():
        if e in seen:
            continue
        orbit = [e]
        cur = emap[e]
        while cur != e:
            orbit.append(cur)
            cur = emap[cur]
        seen.update(orbit)
        out.append((tuple(orbit), m))
    return out


def fold(n: int, d: int, f: Multidissection) -> Multidissection:
    """Image of an invariant multidissection in the smaller polygon."""
    p = fold_target_param(n, d)
    if f.family != "D" or f.n != n:
        raise ValueError("fold expects a colored multidissection of the 2n-gon")
    if not is_fixed(f, d):
        raise ValueError("multidissection is not invariant under power %d" % d)
    emap = dict(rotation_edge_map("D", n, d))
    target: dict = {}
    for orbit, m in _orbits(f, emap):
        rep = orbit[0]
        if isinstance(rep, DDiameter):
            te = DDiameter((rep.a - 1) % p + 1, rep.color)
            target[te] = target.get(te, 0) + m
            continue
        u, v = edge_chords("D", n, rep)[0]
        diff = (v - u) % (2 * p)
        if diff == 0:
            # orbits folding to a point always self-cross; unreachable
            # from a valid noncrossing input
            raise ArithmeticError("degenerate fold of chord {%d, %d}" % (u, v))
        if diff == p:
            idx = u % p + 1
            for color in (SOLID, DOTTED):
                te = DDiameter(idx, color)
                target[te] = target.get(te, 0) + m
        else:
            te = _d_pair_from_chord(p, u, v)
            target[te] = target.get(te, 0) + m
    return Multidissection("D", p, target)


def _lift_chord_class(n: int, p: int, u: int, delta: int) -> set:
    """All centrally symmetric pairs of the 2n-gon meeting the chord
    translate class {u + jp, u + delta + jp}."""
    out = set()
    for j in range(2 * n // p):
        a = (u + j * p) % (2 * n)
        b = (u + delta + j * p) % (2 * n)
        out.add(_d_pair_from_chord(n, a, b))
    if len(out) != n // p:
        raise ArithmeticError("chord class lift produced a wrong orbit size")
    return out


def unfold(n: int, d: int, g: Multidissection) -> Multidissection:
    """Inverse of fold: rebuild the invariant multidissection of the
    2n-gon from its image."""
    p = fold_target_param(n, d)
    if g.family != "D" or g.n != p:
        raise ValueError("unfold expects a multidissection of the fold target")
    solid = {e.a: m for e, m in g.items()
             if isinstance(e, DDiameter) and e.color == SOLID}
    dotted = {e.a: m for e, m in g.items()
              if isinstance(e, DDiameter) and e.color == DOTTED}
    support: dict = {}

    if p < n:
        # bicolored diameters come from inscribed polygons; peel off the
        # balanced part before lifting leftover diameters orbit-wise
        for i in sorted(set(solid) & set(dotted)):
            m = min(solid[i], dotted[i])
            solid[i] -= m
            dotted[i] -= m
            for pair in _lift_chord_class(n, p, i - 1, p):
                support[pair] = support.get(pair, 0) + m

    for colored, color in ((solid, SOLID), (dotted, DOTTED)):
        for i, m in colored.items():
            if not m:
                continue
            for j in range(n // p):
                e = DDiameter(i + j * p, color)
                support[e] = support.get(e, 0) + m

    for e, m in g.items():
        if isinstance(e, DDiameter):
            continue
        if isinstance(e, DPairSeg):
            u, delta = e.a - 1, e.b - e.a
        else:
            u, delta = e.b - 1, p + e.a - e.b
        for pair in _lift_chord_class(n, p, u, delta):
            support[pair] = support.get(pair, 0) + m

    lifted = Multidissection("D", n, support)
    if not is_fixed(lifted, d):
        raise ArithmeticError("unfolded multidissection lost invariance")
    return lifted


def invariant_multidissections(family: str, n: int, k: int, d: int,
                               generator_step: int | None = None) -> list[Multidissection]:
    emap = dict(rotation_edge_map(family, n, d, generator_step))
    return [md for md in enumerate_multidissections(family, n, k)
            if all(md.multiplicity(emap[e]) == m for e, m in md.items())]


def odd_power_correspondence(n: int, d: int, k: int) -> list[tuple[Multidissection, Multidissection]]:
    """Pair every colored multidissection invariant under an odd rotation
    power with a centrally symmetric one of half the edge count.

    Odd powers swap diameter colors, so invariance forces balanced
    solid/dotted multiplicities; a balanced diameter pair maps to one
    uncolored diameter, and centrally symmetric pairs map by kind.
    Nothing is invariant at odd k, so the list is empty there.
    """
    if d % 2 == 0:
        raise ValueError("this correspondence is for odd powers")
    if k % 2:
        return []
    out = []
    for f in invariant_multidissections("D", n, k, d):
        support: dict = {}
        balance: dict[int, dict[str, int]] = {}
        for e, m in f.items():
            if isinstance(e, DDiameter):
                balance.setdefault(e.a, {})[e.color] = m
            elif isinstance(e, DPairSeg):
                support[CSegregated(e.a, e.b)] = m
            else:
                support[CIntegrated(e.a, e.b)] = m
        for a, colors in balance.items():
            if colors.get(SOLID, 0) != colors.get(DOTTED, 0):
                raise ArithmeticError("invariant multidissection is not "
                                      "diameter-balanced")
            support[CDiameter(a)] = colors[SOLID]
        c = Multidissection("C", n, support)
        if c.edge_count() != k // 2 or not is_fixed(c, d):
            raise ArithmeticError("correspondence produced an invalid image")
        out.append((f, c))
    return out
