"""From hexagon weights to Dehn parameters (p_i, q_i, t_i) and pants weights.

The sphere decomposes into three twice-punctured disks E_1', E_2', E_3'
(around the strand endpoint pairs {1,2}, {3,4}, {5,6}) and a pair of pants.
Inside E_i' a curve is described by an intersection count p_i, an offset
0 <= q_i < p_i and a twisting number t_i; the combination q'_i = p_i t_i + q_i
together with the p_i classifies the isotopy class.  In the pants the curve
decomposes into standard arcs l_jk with weights x_jk determined by the p_i
alone.

Reading the parameters off the weights:

* E_i' contains exactly one hexagon edge (a_1, a_5, a_3 respectively), and
  every arc of the curve inside E_i' crosses that edge exactly once, so
  p_i is the number of crossing points there, i.e. half the two-family
  incidence sum I_i.

* Twisting is detected by the left-twist tests below and removed with half
  Dehn twists supported inside the disks: sigma_0 for E_1', sigma_2 for
  E_2', sigma_4 for E_3' (each swaps the disk's two punctures).  Removing
  twists changes neither p_i nor q_i, and by the twist-invariance of
  disk-bounding it does not change the classification verdict either.

* Once t_1 = t_2 = t_3 = 0 the offsets are plain weight reads:
  q_1 = w^26, q_2 = w^46 - x_11, q_3 = w^24.

The left-twist tests assume the positive pants diagonal sits at disk 1
(x_11 > 0); ``to_dehn`` rotates the curve by a multiple of 120 degrees first
to arrange that, and reports which rotation it used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import GeneratorLetter
from .errors import ContractViolation, MalformedCurveError
from .hexagon import (
    WeightVector,
    apply_generator,
    initial_boundary_weights,
    rotate_weights,
)

__all__ = [
    "DehnParams",
    "PantsWeights",
    "window_counts",
    "pants_weights",
    "is_left_twisted",
    "untwist",
    "q_values",
    "to_dehn",
]

# Hexagon edge inside each twice-punctured disk: the fence the windows see.
DISK_EDGE = {1: 1, 2: 5, 3: 3}

# Half twist supported on each disk (swaps its two punctures).
DISK_TWIST = {1: 0, 2: 2, 3: 4}

# Exponent of the supporting generator realizing the counterclockwise half
# twist, the one that raises a twisting number.  Pinned by the worked
# example: the curve alpha must come out with t = (-1, -1, 0).
CCW_EXPONENT = 1


@dataclass(frozen=True)
class PantsWeights:
    """Weights x_jk of the standard arcs l_jk in the pair of pants."""

    x: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, jk: tuple[int, int]) -> int:
        j, k = jk
        return self.x.get((j, k) if j <= k else (k, j), 0)

    @property
    def diagonals(self) -> tuple[int, int, int]:
        return (self[1, 1], self[2, 2], self[3, 3])

    def to_json_dict(self) -> dict:
        return {f"{j}{k}": v for (j, k), v in sorted(self.x.items()) if v}


@dataclass(frozen=True)
class DehnParams:
    """Nine-parameter description (p_i, q_i, t_i) plus derived q'_i."""

    p: tuple[int, int, int]
    q: tuple[int, int, int]
    t: tuple[int, int, int]
    special: str | None = None  # dE_k label when p = (0,0,0)

    @property
    def qprime(self) -> tuple[int, int, int]:
        return tuple(p * t + q for p, q, t in zip(self.p, self.q, self.t))

    @property
    def nine_tuple(self) -> tuple[int, ...]:
        return tuple(v for triple in zip(self.p, self.q, self.t) for v in triple)

    def to_json_dict(self) -> dict:
        data = {
            "p": list(self.p),
            "q": list(self.q),
            "t": list(self.t),
            "qprime": list(self.qprime),
        }
        if self.special:
            data["special"] = self.special
        return data


def window_counts(vec: WeightVector) -> tuple[int, int, int]:
    """Total incidence I_i of the disk edges, both families combined.

    Each crossing point on the edge ends one lower and one upper arc, so
    I_i is even and p_i = I_i / 2 counts the arcs inside E_i'.
    """
    counts = []
    for disk in (1, 2, 3):
        edge = DISK_EDGE[disk]
        counts.append(vec.edge_incidence(edge, "lower") + vec.edge_incidence(edge, "upper"))
    return tuple(counts)


def pants_weights(I: tuple[int, int, int]) -> PantsWeights:
    """Solve the window counts for the standard arc weights.

    Triangle range (no I_i exceeds the other two): x_jk = (I_j+I_k-I_i)/2
    with zero diagonals.  Dominant disk i: x_ij = I_j, x_ik = I_k and
    x_ii = (I_i-I_j-I_k)/2; at most one diagonal can be positive.
    """
    if any(v < 0 for v in I):
        raise MalformedCurveError(f"negative window count {I}")
    if any(v % 2 for v in I) or sum(I) % 2:
        raise MalformedCurveError(f"window counts {I} violate parity")
    x: dict[tuple[int, int], int] = {}
    dominant = None
    for i in range(3):
        j, k = [n for n in range(3) if n != i]
        if I[i] > I[j] + I[k]:
            dominant = i
            break
    if dominant is None:
        for i in range(3):
            j, k = [n for n in range(3) if n != i]
            pair = tuple(sorted((j + 1, k + 1)))
            x[pair] = (I[j] + I[k] - I[i]) // 2
    else:
        i = dominant
        j, k = [n for n in range(3) if n != i]
        x[(i + 1, i + 1)] = (I[i] - I[j] - I[k]) // 2
        x[tuple(sorted((i + 1, j + 1)))] = I[j]
        x[tuple(sorted((i + 1, k + 1)))] = I[k]
    return PantsWeights({pair: v for pair, v in x.items() if v})


def is_left_twisted(vec: WeightVector, disk: int) -> bool:
    """Left-twist test for one disk, read directly off the weights.

    Disk 1 needs the positive diagonal at disk 1; disk 2 additionally
    assumes t_1 has been zeroed, disk 3 assumes t_1 = t_2 = 0.  The caller
    (``untwist``) establishes those preconditions in order.
    """
    w, W = vec.w, vec.W
    if disk == 1:
        if W(1, 5) + W(1, 6) > 0:
            return True
        if W(1, 5) or W(1, 6) or not W(1, 4):
            return False
        reach = W(4, 5) + W(4, 6)
        base = w(4, 5) + w(4, 6) + w(1, 4)
        if reach < base:
            return True
        return (
            base <= reach < base + w(2, 4)
            and w(2, 6) + w(2, 5) + (reach - base) < W(1, 2)
        )
    if disk == 2:
        return W(4, 5) > 0
    if disk == 3:
        # Disk-2 test transported by the half-turn about disk 1's axis,
        # which swaps disks 2 and 3 (edge relabeling (26)(35) with the two
        # regions exchanged), turning w^45 into w_34.  The transported
        # marking sits one half twist off the disk-3 marking, so the read
        # happens after one clockwise probe twist; together the two pins
        # give t_3 = 0 on the worked example.  An upper-family read of
        # w^46 cannot work here: w^46 also counts the x_11 and q_2 arcs
        # of untwisted curves, so it fires on almost everything.
        probe = _half_twist(vec, 3, ccw=False)
        return probe.w(3, 4) > 0
    raise ContractViolation(f"disk must be 1, 2 or 3, got {disk}")


def _half_twist(vec: WeightVector, disk: int, ccw: bool) -> WeightVector:
    exponent = CCW_EXPONENT if ccw else -CCW_EXPONENT
    return apply_generator(vec, GeneratorLetter(DISK_TWIST[disk], exponent))


def untwist(vec: WeightVector) -> tuple[WeightVector, tuple[int, int, int]]:
    """Zero the twisting numbers disk by disk; report the original t_i.

    A left-twisted disk (t_i < 0) takes counterclockwise twists until the
    test clears.  Otherwise clockwise twists probe downward: the step that
    first makes the disk left-twisted has gone one past t_i = 0 and is
    discarded.  Counts are capped by the total weight, which bounds |q'|.
    """
    p = tuple(v // 2 for v in window_counts(vec))
    cap = 4 + vec.total
    twists = []
    for disk in (1, 2, 3):
        if p[disk - 1] == 0:
            twists.append(0)
            continue
        t = 0
        if is_left_twisted(vec, disk):
            while is_left_twisted(vec, disk):
                vec = _half_twist(vec, disk, ccw=True)
                t -= 1
                if -t > cap:
                    raise MalformedCurveError("untwisting does not terminate")
        else:
            while True:
                probe = _half_twist(vec, disk, ccw=False)
                if is_left_twisted(probe, disk):
                    break
                vec = probe
                t += 1
                if t > cap:
                    raise MalformedCurveError("untwisting does not terminate")
        twists.append(t)
    return vec, tuple(twists)


def q_values(vec: WeightVector, x11: int) -> tuple[int, int, int]:
    """Offsets of an untwisted, disk-1-normalized curve."""
    q = (vec.W(2, 6), vec.W(4, 6) - x11, vec.W(2, 4))
    if q[1] < 0:
        raise MalformedCurveError(f"q_2 = w^46 - x_11 = {q[1]} < 0")
    return q


def _match_boundary(vec: WeightVector) -> str:
    for label in ("e1", "e2", "e3"):
        if vec == initial_boundary_weights(label):
            return label
    raise MalformedCurveError(
        "curve misses all windows but is no standard disk boundary"
    )


def to_dehn(vec: WeightVector) -> tuple[DehnParams, PantsWeights, int]:
    """Full parameter extraction; returns (params, pants weights, rotation).

    The rotation (in 60-degree steps, applied to the weights before
    reading) moves the positive pants diagonal to disk 1; it is 0 when no
    diagonal is positive.  Parameters are reported in the rotated frame.
    """
    I = window_counts(vec)
    if I == (0, 0, 0):
        label = _match_boundary(vec)
        params = DehnParams((0, 0, 0), (0, 0, 0), (0, 0, 0), special=label)
        return params, PantsWeights({}), 0

    rotation = 0
    pants = pants_weights(I)
    if pants[2, 2] > 0:
        rotation = 2  # disk 2 content moves to disk 1
    elif pants[3, 3] > 0:
        rotation = -2
    if rotation:
        vec = rotate_weights(vec, rotation)
        I = window_counts(vec)
        pants = pants_weights(I)

    p = tuple(v // 2 for v in I)
    untwisted, t = untwist(vec)
    raw = q_values(untwisted, pants[1, 1])
    # The offset reads are proven for curves carrying l_11 arcs.  Without a
    # positive diagonal the raw read can also count pants arcs (and an
    # empty window has no offset at all), so it is reduced into range;
    # such curves never reach the reduction tables.  With x_11 > 0 an
    # out-of-range read is a genuine inconsistency.
    q = tuple(qi % pi if pi else 0 for pi, qi in zip(p, raw))
    if pants[1, 1] > 0 and q != raw:
        raise MalformedCurveError(f"offset read {raw} out of range for p={p}")
    return DehnParams(p, q, t), pants, rotation
