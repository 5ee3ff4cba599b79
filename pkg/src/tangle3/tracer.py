"""Rebuild the actual multicurve from its weights and evaluate it in pi_1.

This module is the independent referee for the rest of the package.  It never
looks at Dehn parameters or reduction rules: it reconstructs the curve as a
planar diagram, counts components, and computes each component's class in the
rank-3 free group pi_1 of the tangle complement.  A curve enclosing two
punctures bounds an essential disk in the complement exactly when that class
is trivial, so triviality of the traced word is the ground truth the fast
pipeline is tested against.

Reconstruction.  Each edge a_i carries n_i crossing points (the common value
of the two incidence sums).  Inside each region the crossing points on the
boundary must be joined by a non-crossing perfect matching realizing the arc
counts, and that matching is unique: along one edge, points connect to
partner edges in order of decreasing cyclic distance, and the parallel arcs
of one pair attach in reversed order on their two edges (nested, innermost
first).  The hexagon is traversed with edges in the order a_1..a_6 and each
edge's points in a fixed direction; the complement sees the reversed cyclic
order with each edge reversed.

The free-group letters.  The trivial tangle strand eps_i can be pushed onto
the boundary sphere to an arc r_i joining its two endpoints inside E_i', and
r_i together with eps_i bounds a disk.  Those fences are exactly the edges
a_1 (for eps_1), a_5 (eps_2) and a_3 (eps_3), so a traced component picks up
a signed letter a, b or c each time it crosses one of those three edges, the
sign recording whether it passes from H to H^c or back.  The class in
pi_1 = F(a, b, c) is the free reduction of that letter sequence.
"""

from __future__ import annotations

from collections import defaultdict

from .errors import MalformedCurveError
from .hexagon import WeightVector

__all__ = [
    "Crossing",
    "trace",
    "components_json",
    "pi1_word",
    "oracle_bounds_disk",
    "reduce_free_word",
]

# Fence letter carried by each edge; edges 2, 4, 6 cross no fence.
_FENCE = {1: "a", 5: "b", 3: "c"}

# Edge cycles of the two regions; the complement reverses the hexagon's.
_H_CYCLE = (1, 2, 3, 4, 5, 6)
_HC_CYCLE = (6, 5, 4, 3, 2, 1)

# A crossing point is (edge, slot); slots are numbered along the edge in the
# hexagon's traversal direction.  A traced crossing is (edge, slot, step)
# with step +1 when the component passes from H into H^c there, -1 back.
Crossing = tuple[int, int, int]


def _edge_counts(vec: WeightVector) -> dict[int, int]:
    counts = {}
    for i in range(1, 7):
        lo = vec.edge_incidence(i, "lower")
        up = vec.edge_incidence(i, "upper")
        if lo != up:
            raise MalformedCurveError(
                f"edge balance broken at a_{i}: {lo} lower vs {up} upper arc ends"
            )
        counts[i] = lo
    return counts


def _region_matching(vec: WeightVector, counts: dict[int, int],
                     region: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Non-crossing matching of the boundary points inside one region."""
    get = vec.w if region == "H" else vec.W
    cycle = _H_CYCLE if region == "H" else _HC_CYCLE

    def slots(edge: int) -> list[int]:
        order = range(counts[edge])
        return list(order) if region == "H" else list(reversed(order))

    # Along each edge, points serve partners in decreasing cyclic distance.
    assigned: dict[int, list[int]] = {}
    for pos, edge in enumerate(cycle):
        partners: list[int] = []
        for dist in range(5, 0, -1):
            other = cycle[(pos + dist) % 6]
            partners.extend([other] * get(edge, other))
        if len(partners) != counts[edge]:
            raise MalformedCurveError(
                f"edge a_{edge} carries {counts[edge]} points but "
                f"{len(partners)} arc ends in {region}"
            )
        assigned[edge] = partners

    by_pair: dict[int, dict[int, list[int]]] = {
        edge: defaultdict(list) for edge in cycle
    }
    for edge in cycle:
        for slot, partner in zip(slots(edge), assigned[edge]):
            by_pair[edge][partner].append(slot)

    match: dict[tuple[int, int], tuple[int, int]] = {}
    for edge in cycle:
        for partner, mine in by_pair[edge].items():
            if edge > partner:
                continue  # each unordered pair handled once
            theirs = by_pair[partner][edge]
            for k, slot in enumerate(mine):  # nested: first meets last
                mate = theirs[len(theirs) - 1 - k]
                match[(edge, slot)] = (partner, mate)
                match[(partner, mate)] = (edge, slot)

    _check_planarity(match, counts, cycle, slots, region)
    return match


def _check_planarity(match, counts, cycle, slots, region) -> None:
    # Bracket check around the region boundary: a chord may only close
    # against the most recently opened one.
    stack: list[tuple[int, int]] = []
    open_points: set[tuple[int, int]] = set()
    for edge in cycle:
        for slot in slots(edge):
            point = (edge, slot)
            mate = match[point]
            if mate in open_points:
                if stack[-1] != mate:
                    raise MalformedCurveError(
                        f"weights admit no planar matching in {region}"
                    )
                stack.pop()
                open_points.discard(mate)
            else:
                stack.append(point)
                open_points.add(point)
    if stack:
        raise MalformedCurveError(f"unmatched arc ends in {region}")


def trace(vec: WeightVector) -> list[list[Crossing]]:
    """Reconstruct the multicurve; one crossing list per component.

    Components alternate between arcs of the two regions, so successive
    crossings alternate direction.  The zero vector traces to no components.
    """
    counts = _edge_counts(vec)
    in_h = _region_matching(vec, counts, "H")
    in_hc = _region_matching(vec, counts, "Hc")

    pending = {(edge, slot) for edge in range(1, 7) for slot in range(counts[edge])}
    components: list[list[Crossing]] = []
    while pending:
        start = min(pending)
        component: list[Crossing] = []
        point = start
        through_h = True  # first arc runs through the hexagon
        while True:
            point = (in_h if through_h else in_hc)[point]
            component.append((point[0], point[1], 1 if through_h else -1))
            pending.discard(point)
            through_h = not through_h
            if point == start and through_h:
                break
        components.append(component)
    return components


def components_json(components: list[list[Crossing]]) -> list:
    """Debug dump: per component, (edge, slot, incoming region) triples."""
    return [
        [[edge, slot, "H" if step == 1 else "Hc"] for edge, slot, step in comp]
        for comp in components
    ]


def reduce_free_word(letters) -> tuple[tuple[str, int], ...]:
    """Freely reduce a sequence of (letter, +-1) pairs."""
    out: list[tuple[str, int]] = []
    for letter, sign in letters:
        if out and out[-1][0] == letter and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((letter, sign))
    return tuple(out)


def pi1_word(component: list[Crossing]) -> tuple[tuple[str, int], ...]:
    """Freely reduced fence-crossing word of one traced component.

    The word is only defined up to conjugation and inversion (starting
    crossing and running direction), which does not affect triviality.
    """
    return reduce_free_word(
        (_FENCE[edge], step) for edge, _, step in component if edge in _FENCE
    )


def oracle_bounds_disk(vec: WeightVector) -> bool:
    """Ground truth: does this single curve bound an essential disk?

    True exactly when the component's class in pi_1 of the tangle
    complement is trivial.  A freely reduced word of a loop is trivial in
    the free group iff it is empty, so no cyclic reduction is needed.
    """
    components = trace(vec)
    if len(components) != 1:
        raise MalformedCurveError(
            f"oracle needs a single curve, traced {len(components)} components"
        )
    return not pi1_word(components[0])
