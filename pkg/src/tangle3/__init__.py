"""tangle3: decide isotopy of rational 3-tangles.

A rational 3-tangle is presented by a word in the half Dehn twists
s0 .. s5 of the six-punctured sphere.  Two words present isotopic tangles
exactly when the images of the three standard disk boundaries under
G^-1 F all bound essential disks in the trivial tangle's complement; this
package decides that by tracking curves as thirty integer hexagon weights,
converting to Dehn parameters, and running an integer reduction loop, with
an independent free-group oracle for cross-validation.
"""

__version__ = "0.1.0"

from .braid import (
    BraidWord,
    GeneratorLetter,
    compose,
    format_word,
    invert,
    normalize_to_b5,
    parse_word,
)
from .classify import EquivalenceReport, equivalent, oracle_equivalent
from .dehn import DehnParams, PantsWeights, to_dehn
from .errors import (
    ContractViolation,
    InternalError,
    MalformedCurveError,
    ParseError,
    TangleError,
)
from .hexagon import (
    CURVE_LABELS,
    WeightVector,
    apply_generator,
    apply_word,
    initial_boundary_weights,
    rotate_weights,
    swap_levels,
)
from .reducer import ReductionStep, Verdict, decide_bounds_disk
from .tracer import oracle_bounds_disk, pi1_word, trace

__all__ = [
    "BraidWord",
    "GeneratorLetter",
    "parse_word",
    "format_word",
    "compose",
    "invert",
    "normalize_to_b5",
    "WeightVector",
    "CURVE_LABELS",
    "initial_boundary_weights",
    "apply_generator",
    "apply_word",
    "rotate_weights",
    "swap_levels",
    "trace",
    "pi1_word",
    "oracle_bounds_disk",
    "DehnParams",
    "PantsWeights",
    "to_dehn",
    "Verdict",
    "ReductionStep",
    "decide_bounds_disk",
    "EquivalenceReport",
    "equivalent",
    "oracle_equivalent",
    "TangleError",
    "ParseError",
    "MalformedCurveError",
    "ContractViolation",
    "InternalError",
]
