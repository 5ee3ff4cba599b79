"""Multicurves on the six-punctured sphere as thirty hexagon weights.

The sphere is split into a hexagon H and its complement H^c whose common
boundary consists of six open edges a_1..a_6 with the punctures at the
vertices.  Edge a_i joins punctures {3-i, 2-i} mod 6 (so a_1 joins 1,2 and
a_3 joins 5,6), the edges a_1..a_6 running one way around the hexagon while
the puncture labels run the other way.  An isotopy class of multicurve is
recorded by w_ij, the number of arcs from a_i to a_j inside H, and w^kl, the
count in H^c.

The generator action is driven entirely by the sigma_1 update: the full
closed-form list below sends the weights of a class to the weights of its
sigma_1 image with all w_ii already pushed back to zero.  Every other
generator is the conjugate of sigma_1 by a rotation of the hexagon
(sigma_k = rot(-(k-1)) o sigma_1 o rot(k-1), where rot(s) relabels index
i -> i+s), and inverses conjugate by swapping the two weight families.  The
same conjugation covers sigma_0 and sigma_5, which the twist-removal code
needs even though braid words can be normalized away from them.

Weights are plain Python integers, so growth under repeated twisting is
exact and can never wrap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, GeneratorLetter
from .errors import MalformedCurveError

__all__ = [
    "PAIRS",
    "WeightVector",
    "CURVE_LABELS",
    "initial_boundary_weights",
    "apply_sigma1",
    "rotate_weights",
    "swap_levels",
    "apply_generator",
    "apply_word",
]

# Index pairs in a fixed order; both weight families use it.
PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for i in range(1, 7) for j in range(i + 1, 7)
)
_SLOT = {pair: n for n, pair in enumerate(PAIRS)}

CURVE_LABELS = ("e1", "e2", "e3")


def _slot(i: int, j: int) -> int:
    if i == j:
        raise MalformedCurveError(f"diagonal weight w_{i}{i} requested")
    return _SLOT[(i, j) if i < j else (j, i)]


@dataclass(frozen=True)
class WeightVector:
    """Fifteen lower (inside H) and fifteen upper (inside H^c) arc counts."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def w(self, i: int, j: int) -> int:
        return self.lower[_slot(i, j)]

    def W(self, i: int, j: int) -> int:
        return self.upper[_slot(i, j)]

    @staticmethod
    def zero() -> "WeightVector":
        return WeightVector((0,) * 15, (0,) * 15)

    @staticmethod
    def of(lower: dict[tuple[int, int], int] | None = None,
           upper: dict[tuple[int, int], int] | None = None) -> "WeightVector":
        lo = [0] * 15
        up = [0] * 15
        for (i, j), v in (lower or {}).items():
            lo[_slot(i, j)] = v
        for (i, j), v in (upper or {}).items():
            up[_slot(i, j)] = v
        return WeightVector(tuple(lo), tuple(up))

    @property
    def total(self) -> int:
        return sum(self.lower) + sum(self.upper)

    def edge_incidence(self, i: int, family: str = "lower") -> int:
        values = self.lower if family == "lower" else self.upper
        return sum(values[_slot(i, j)] for j in range(1, 7) if j != i)

    def validate(self) -> "WeightVector":
        """Check non-negativity, edge balance, and adjacency exclusion."""
        if any(v < 0 for v in self.lower + self.upper):
            raise MalformedCurveError("negative weight entry")
        for i in range(1, 7):
            if self.edge_incidence(i, "lower") != self.edge_incidence(i, "upper"):
                raise MalformedCurveError(f"edge balance broken at a_{i}")
        for i in range(1, 7):
            j = i % 6 + 1  # adjacent edge indices i, i+1
            if self.w(i, j) and self.W(i, j):
                raise MalformedCurveError(
                    f"adjacent pair ({i},{j}) carried in both regions"
                )
        return self

    def to_json_dict(self) -> dict:
        """Canonical serialization; zero entries omitted."""
        return {
            "w": {f"{i}{j}": v for (i, j), v in zip(PAIRS, self.lower) if v},
            "W": {f"{i}{j}": v for (i, j), v in zip(PAIRS, self.upper) if v},
        }

    @staticmethod
    def from_json_dict(data: dict) -> "WeightVector":
        def unpack(table: dict) -> dict:
            return {(int(k[0]), int(k[1])): int(v) for k, v in table.items()}

        return WeightVector.of(unpack(data.get("w", {})), unpack(data.get("W", {})))


@lru_cache(maxsize=None)
def _rotation_slots(steps: int) -> tuple[int, ...]:
    # target slot of each source slot under index shift i -> i+steps
    table = [0] * 15
    for n, (i, j) in enumerate(PAIRS):
        table[n] = _slot((i + steps - 1) % 6 + 1, (j + steps - 1) % 6 + 1)
    return tuple(table)


def rotate_weights(vec: WeightVector, steps: int) -> WeightVector:
    """Relabel both families by the index permutation (123456)^steps."""
    steps %= 6
    if steps == 0:
        return vec
    table = _rotation_slots(steps)
    lo = [0] * 15
    up = [0] * 15
    for n in range(15):
        lo[table[n]] = vec.lower[n]
        up[table[n]] = vec.upper[n]
    return WeightVector(tuple(lo), tuple(up))


def swap_levels(vec: WeightVector) -> WeightVector:
    """Exchange the lower and upper families."""
    return WeightVector(vec.upper, vec.lower)


def apply_sigma1(vec: WeightVector) -> WeightVector:
    """Weight update for one counterclockwise half twist sigma_1.

    The combined closed form: the raw post-twist counts followed by the
    isotopy that empties w_11 and w^55, so the output again has all
    diagonal counts zero.
    """
    (w12, w13, w14, w15, w16, w23, w24, w25, w26,
     w34, w35, w36, w45, w46, w56) = vec.lower
    (W12, W13, W14, W15, W16, W23, W24, W25, W26,
     W34, W35, W36, W45, W46, W56) = vec.upper

    # Pushing the dragged band (size W56) across a_5 consumes the arcs
    # ending on a_5 nearest the a_5/a_6 corner first: the (1,5) arcs, then
    # (2,5), (3,5), (4,5).  This is the exact mirror of the a_1 push below
    # under the reflection swapping edges 1<->5 and 2<->4 with the two
    # regions exchanged; writing it with 2 and 4 interchanged instead
    # produces chord patterns that cannot be drawn.
    v12 = w12 + w26
    v13 = w13 + w36
    v14 = w14 + w46
    v15 = max(w15 + w56 - W56, 0)
    v16 = min(W56, w15 + w56)
    v23 = w23
    v24 = w24
    v25 = min(w25, max(w25 + w15 + w56 - W56, 0))
    v26 = min(w25, max(W56 - w15 - w56, 0))
    v34 = w34
    v35 = min(w35, max(w35 + w25 + w15 + w56 - W56, 0))
    v36 = min(w35, max(W56 - w25 - w15 - w56, 0))
    v45 = min(w45, max(w45 + w35 + w25 + w15 + w56 - W56, 0))
    v46 = min(w45, max(W56 - w35 - w25 - w15 - w56, 0))
    v56 = w16 + w26 + w36 + w46 + w56 - W56

    V25 = W25 + W26
    V35 = W35 + W36
    V45 = W45 + W46
    V15 = max(W15 + W16 - w16, 0)
    V56 = min(w16, W15 + W16)
    V23 = W23
    V24 = W24
    V12 = min(W12, max(W12 + W13 + W14 + W15 + W16 - w16, 0))
    V26 = min(W12, max(w16 - W13 - W14 - W15 - W16, 0))
    V34 = W34
    V13 = min(W13, max(W13 + W14 + W15 + W16 - w16, 0))
    V36 = min(W13, max(w16 - W14 - W15 - W16, 0))
    V14 = min(W14, max(W14 + W15 + W16 - w16, 0))
    V46 = min(W14, max(w16 - W15 - W16, 0))
    V16 = W16 + W26 + W36 + W46 + W56 - w16

    return WeightVector(
        (v12, v13, v14, v15, v16, v23, v24, v25, v26,
         v34, v35, v36, v45, v46, v56),
        (V12, V13, V14, V15, V16, V23, V24, V25, V26,
         V34, V35, V36, V45, V46, V56),
    )


def _apply_unit(vec: WeightVector, index: int, positive: bool) -> WeightVector:
    steps = index - 1
    if positive:
        return rotate_weights(apply_sigma1(rotate_weights(vec, steps)), -steps)
    return swap_levels(_apply_unit(swap_levels(vec), index, True))


def apply_generator(vec: WeightVector, letter: GeneratorLetter) -> WeightVector:
    """Apply sigma_index^exponent one half twist at a time."""
    positive = letter.exponent > 0
    for _ in range(abs(letter.exponent)):
        vec = _apply_unit(vec, letter.index, positive)
        if __debug__:
            vec.validate()
    return vec


def apply_word(vec: WeightVector, word: BraidWord) -> WeightVector:
    """Fold the generator action right to left (rightmost letter first)."""
    for letter in reversed(word.letters):
        vec = apply_generator(vec, letter)
    return vec


# Standard disk boundaries.  The e2 seed is the curve around punctures 3,4
# crossing edges a_4 and a_6 once in each region; e1 and e3 are its images
# under the +-120 degree rotations.
_SEED_E2 = WeightVector.of({(4, 6): 1}, {(4, 6): 1})
_SEEDS = {
    "e1": rotate_weights(_SEED_E2, 2),
    "e2": _SEED_E2,
    "e3": rotate_weights(_SEED_E2, -2),
}


def initial_boundary_weights(label: str) -> WeightVector:
    """Weight vector of the standard disk boundary dE_1, dE_2, or dE_3."""
    try:
        return _SEEDS[label.lower()]
    except KeyError:
        raise MalformedCurveError(f"unknown curve label {label!r}") from None
