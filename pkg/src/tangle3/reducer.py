"""The reduction loop deciding whether a curve bounds an essential disk.

State is the six-tuple (p_1, q'_1, p_2, q'_2, p_3, q'_3).  Each iteration
rebuilds standard position from scratch (offsets q_i = q'_i mod p_i, fresh
case selection, fresh arc weights) and then either stops with a verdict or
applies one parameter-change rule.  The rules are the images of the curve
under four specific homeomorphisms preserving the trivial tangle, written
directly as Dehn-parameter updates; the homeomorphisms themselves are never
applied to weight vectors.  Every rule strictly lowers p_1 + p_2 + p_3, so
the loop ends within half the initial sum.

Terminal states, checked before any rule:

* every weight zero, or the two-arc state m_1 = m_3 = 1 alone: the curve
  bounds;
* m_1 + m_3 < 2 with some weight positive; or m_1 = 0 < m_2 with
  m_3 <= m_2 + 1; or m_1, m_2, m_3 > 0 with m_2 maximal: it does not.

Two frame moves keep the rules applicable: when the positive pants diagonal
drifts off disk 1 the state is relabeled by the 120-degree rotation, and
when the weights come out with arcs of type 1 but none of type 3 the state
is replaced by its image under the 180-degree half-turn about disk 1's
axis, which swaps the roles of disks 2 and 3:

    (p_1, q'_1, p_2, q'_2, p_3, q'_3)
        -> (p_1, q'_1 + p_2 - p_3, p_3, q'_3 + p_3, p_2, q'_2 - p_2).

The rule formulas consume the q' of the standard-position curve itself,
whose twisting numbers are the bookkeeping values fixed by its table
(t_3 = 0, t_2 = -1 where p_2 > 0, t_1 in {0, -1} by case), not the raw
q' mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dehn import to_dehn
from .errors import InternalError, MalformedCurveError
from .hexagon import WeightVector
from .standard import REJECT_CASE, StandardWeights, select_case, standard_weights
from .tracer import trace

__all__ = ["ReductionStep", "Verdict", "reduce_once", "decide_bounds_disk"]

State = tuple[int, int, int, int, int, int]


@dataclass(frozen=True)
class ReductionStep:
    rule: str        # which clause produced this step
    homeo: str       # homeomorphism applied, for the trace log
    before: State
    after: State
    weights: dict = field(default_factory=dict)  # arc weights before

    def to_json_dict(self) -> dict:
        return {
            "rule": self.rule,
            "homeo": self.homeo,
            "before": list(self.before),
            "after": list(self.after),
            "weights": self.weights,
        }


@dataclass(frozen=True)
class Verdict:
    bounds: bool
    rule: str
    label: str | None = None  # dE_k name when the curve is a disk boundary
    steps: tuple[ReductionStep, ...] = ()

    def to_json_dict(self) -> dict:
        data = {"bounds": self.bounds, "rule": self.rule}
        if self.label:
            data["label"] = self.label
        if self.steps:
            data["steps"] = [s.to_json_dict() for s in self.steps]
        return data


def _half_turn_state(s: State) -> State:
    p1, q1, p2, q2, p3, q3 = s
    return (p1, q1 + p2 - p3, p3, q3 + p3, p2, q2 - p2)


def _relabel(s: State, shift: int) -> State:
    # move disk 1+shift's data into slot 1 (cyclic role rotation)
    p = (s[0], s[2], s[4])
    q = (s[1], s[3], s[5])
    order = [(0 + shift) % 3, (1 + shift) % 3, (2 + shift) % 3]
    out = []
    for i in order:
        out.extend((p[i], q[i]))
    return tuple(out)


def reduce_once(state: State, m: StandardWeights) -> Verdict | ReductionStep:
    """One application of the parameter-change rules, or a verdict.

    ``state`` carries the q' of the standard-position curve (table
    twisting already included).  Terminal clauses are evaluated first; the
    remaining weight patterns match exactly one rule.
    """
    p1, q1, p2, q2, p3, q3 = state

    if m.all_zero:
        return Verdict(True, "all-weights-zero")
    if m.m1 == 1 and m.m3 == 1 and m.total == 2:
        return Verdict(True, "two-arc-state")
    if m.m1 + m.m3 < 2:
        return Verdict(False, "short-weight")
    if m.m1 == 0 and m.m2 > 0 and m.m3 > 0 and m.m3 <= m.m2 + 1:
        return Verdict(False, "type2-dominates-margin")
    if m.m1 > 0 and m.m2 > 0 and m.m3 > 0 and m.m2 >= m.m1 and m.m2 >= m.m3:
        return Verdict(False, "type2-dominates")

    def step(rule, homeo, after, decrease):
        if decrease <= 0:
            raise InternalError(f"rule {rule} does not reduce", state, m.to_json_dict())
        return ReductionStep(rule, homeo, state, after, m.to_json_dict())

    if m.m1 == 0 and m.m2 > 0 and m.m3 > m.m2 + 1:
        turn = m.m10 + m.m11
        if m.m2_1 and m.m2_2:
            raise InternalError("both type-2 variants present", state, m.to_json_dict())
        if m.m2_1:
            after = (p1 - 2 * m.m2, q1 + m.m2 - turn, p2, q2, p3, q3 + 2 * turn)
            return step("upper-type2", "d3", after, 2 * m.m2)
        after = (p1 - 2 * m.m2, q1 - m.m2 + turn, p2, q2, p3, q3 - 2 * turn)
        return step("lower-type2", "d3^-1", after, 2 * m.m2)

    if m.m1 > 0 and m.m2 > 0 and m.m3 > 0:
        if m.m2 < m.m3:
            after = (p1 - 2 * m.m2, q1 + m.m2, p2, q2, p3, q3)
            return step("middle-small", "d3", after, 2 * m.m2)
        # here m.m3 <= m.m2 < m.m1 (the other orders were terminal)
        after = (p1 - 2 * m.m2, q1 + (m.m3 - m.m2), p2, q2, p3, q3)
        return step("middle-large", "d3", after, 2 * m.m2)

    if m.m1 == 0 and m.m2 == 0 and m.m3 >= 2:
        if m.m8 > 0 and m.m11 > 0:
            if m.m8_1 and m.m11_1:
                raise InternalError("8_1 and 11_1 coexist", state, m.to_json_dict())
            if m.m8_1 and m.m11_2:
                d = m.m8_1 - m.m11_2
                after = (p1 - d, q1 - m.m8_1, p2, q2, p3 - d, q3 + m.m11_2)
                return step("mixed-upper", "d1^-1 d2", after, 2 * d)
            if m.m8_2 and m.m11_1:
                d = m.m8_2 - m.m11_1
                after = (p1 - d, q1 + m.m11_1, p2, q2, p3 - d, q3 - m.m8_2)
                return step("mixed-lower", "d1^-1 d2", after, 2 * d)
            raise InternalError("unpaired 8/11 splits", state, m.to_json_dict())
        if m.m11 == 0:
            # The two offset changes act on the two split families
            # separately (q'_3 - m_{8_2}, not + m_8): pinned by exact
            # image parameters of word-realized reduction moves.
            after = (p1 - m.m8, q1 - m.m8_1, p2, q2, p3 - m.m8, q3 - m.m8_2)
            return step("returning-8", "d1^-1 d2", after, 2 * m.m8)
        after = (p1 - m.m11, q1 - m.m11_1, p2, q2, p3 - m.m11, q3 + m.m11)
        return step("returning-11", "d1 d2^-1", after, 2 * m.m11)

    raise InternalError("no rule matches", state, m.to_json_dict())


def decide_bounds_disk(vec: WeightVector) -> Verdict:
    """Decide disk-bounding for a single curve given by hexagon weights."""
    if len(trace(vec)) != 1:
        raise MalformedCurveError("decision requires a single curve")
    params, pants, _ = to_dehn(vec)
    if params.special:
        return Verdict(True, "boundary-parallel", label=params.special)

    qp = params.qprime
    state: State = (params.p[0], qp[0], params.p[1], qp[1], params.p[2], qp[2])
    steps: list[ReductionStep] = []
    budget = params.p[0] + params.p[1] + params.p[2] + 4
    swapped = False
    while True:
        budget -= 1
        if budget < 0:
            raise InternalError("reduction loop exceeded its budget", state)
        p = (state[0], state[2], state[4])
        if p == (0, 0, 0):
            return Verdict(True, "all-windows-empty", steps=tuple(steps))

        # positive diagonal to slot 1, or no diagonal at all
        if p[0] > p[1] + p[2]:
            shift = 0
        elif p[1] > p[0] + p[2]:
            shift = 1
        elif p[2] > p[0] + p[1]:
            shift = 2
        else:
            return Verdict(False, "no-pants-diagonal", steps=tuple(steps))
        if shift:
            relabeled = _relabel(state, shift)
            steps.append(ReductionStep("relabel", f"rot({-120 * shift})",
                                       state, relabeled))
            state = relabeled

        p = (state[0], state[2], state[4])
        q = tuple(state[2 * i + 1] % p[i] if p[i] else 0 for i in range(3))
        case = select_case(p, q)
        if case == REJECT_CASE:
            return Verdict(False, "middle-band-low-offset", steps=tuple(steps))
        m = standard_weights(p, q, case)

        if m.m3 == 0 and m.m1 > 0:
            if swapped:
                raise InternalError("half-turn loop", state, m.to_json_dict())
            turned = _half_turn_state(state)
            steps.append(ReductionStep("half-turn", "rot180(E1')", state, turned))
            state = turned
            swapped = True
            continue
        swapped = False

        # the rules consume the standard-position curve's own q'
        gamma0 = tuple(
            v if i % 2 == 0 else v % p[i // 2] + p[i // 2] * m.table_t[i // 2]
            if p[i // 2] else 0
            for i, v in enumerate(state)
        )
        outcome = reduce_once(gamma0, m)
        if isinstance(outcome, Verdict):
            return Verdict(outcome.bounds, outcome.rule, steps=tuple(steps))
        steps.append(outcome)
        state = outcome.after
