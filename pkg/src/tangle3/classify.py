"""Top-level equivalence decision for two tangle presentations.

Two words F and G present isotopic tangles exactly when every curve
h(dE_i), h = G^-1 F, bounds an essential disk in the trivial tangle's
complement.  Two bounding curves force the third, so the decision
short-circuits after two agreeing per-curve verdicts; strict mode runs all
three and asserts the never-exactly-two rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, compose, format_word, invert, normalize_to_b5
from .errors import InternalError
from .hexagon import CURVE_LABELS, apply_word, initial_boundary_weights
from .reducer import Verdict, decide_bounds_disk
from .tracer import oracle_bounds_disk

__all__ = ["EquivalenceReport", "equivalent", "oracle_equivalent"]


@dataclass
class EquivalenceReport:
    word_f: str
    word_g: str
    normalized_f: str
    normalized_g: str
    isotopic: bool
    verdicts: dict[str, Verdict | None] = field(default_factory=dict)

    def to_json_dict(self, with_trace: bool = False) -> dict:
        def fmt(v: Verdict | None):
            if v is None:
                return None
            data = v.to_json_dict()
            if not with_trace:
                data.pop("steps", None)
            return data

        return {
            "words": {"f": self.word_f, "g": self.word_g},
            "normalized": {"f": self.normalized_f, "g": self.normalized_g},
            "isotopic": self.isotopic,
            "curves": {label: fmt(v) for label, v in self.verdicts.items()},
        }


def equivalent(f: BraidWord, g: BraidWord, strict: bool = False) -> EquivalenceReport:
    """Decide whether the tangles presented by f and g are isotopic."""
    h = compose(invert(g), f)
    verdicts: dict[str, Verdict | None] = {label: None for label in CURVE_LABELS}
    bound = not_bound = 0
    for label in CURVE_LABELS:
        curve = apply_word(initial_boundary_weights(label), h)
        verdict = decide_bounds_disk(curve)
        verdicts[label] = verdict
        bound += verdict.bounds
        not_bound += not verdict.bounds
        if not strict and (bound >= 2 or not_bound >= 2):
            break
    if strict and bound == 2:
        raise InternalError("exactly two of the three curves bound", str(h))
    return EquivalenceReport(
        word_f=format_word(f),
        word_g=format_word(g),
        normalized_f=format_word(normalize_to_b5(f)),
        normalized_g=format_word(normalize_to_b5(g)),
        isotopic=bound >= 2,
        verdicts=verdicts,
    )


def oracle_equivalent(f: BraidWord, g: BraidWord) -> bool:
    """Same decision through the free-group oracle; used for cross-checks."""
    h = compose(invert(g), f)
    return all(
        oracle_bounds_disk(apply_word(initial_boundary_weights(label), h))
        for label in CURVE_LABELS
    )
