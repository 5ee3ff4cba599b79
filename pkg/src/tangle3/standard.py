"""Standard-position arc weights from the Dehn parameters.

An untwisted curve with its positive pants diagonal at disk 1 can be pushed
into one of two standard diagrams in a thickened pair of pants, where every
component of its intersection with the complement of the three disk
neighborhoods is one of eleven arc types.  The weights m_1 .. m_11 of those
types (some split into an upper and a lower variant) are closed-form in
(p_i, q_i); which closed form applies is decided by comparing q_1 + p_1 and
q_1 against the pants weights

    x_11 = p_1 - p_2 - p_3,   x_12 = 2 p_2,   x_13 = 2 p_3.

One selector region admits no standard position at all: in the middle band
x_11 + x_13 <= q_1 + p_1 < x_11 + x_12 + x_13, a curve with q_1 <= x_13
cannot bound an essential disk, and the selector reports that verdict
directly.

The case bookkeeping also fixes twisting numbers (t_1 in {0,-1} and
t_2 = -1 where p_2 > 0); the tables already incorporate them, so they are
recorded on the result for the q'-updates of the reduction step but cause
no further transformation here.

Consistency is enforced after every evaluation: all weights non-negative
and each disk's window accounts for exactly 2 p_i arc ends
(types 1, 2, 3 end twice on disk 1; types 4..7 once on disk 1 and once on
disk 2; types 8..11 once on disk 1 and once on disk 3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, MalformedCurveError

__all__ = ["StandardWeights", "select_case", "standard_weights", "REJECT_CASE"]

REJECT_CASE = "reject3"

# Which variant of the type-2 arcs the unsplit tables produce, and which
# variant of type 11 the third-case table produces.  The split matters
# because it selects between a twist and its inverse in the reduction
# step.  Pinned by full-pipeline agreement with the free-group oracle.
CASE1_TYPE2_VARIANT = 1
CASE3A_TYPE2_VARIANT = 2
CASE3A_TYPE11_VARIANT = 2


@dataclass(frozen=True)
class StandardWeights:
    """Weights of the eleven arc types, split where two variants exist."""

    m1: int = 0
    m2_1: int = 0
    m2_2: int = 0
    m3: int = 0
    m4_1: int = 0
    m4_2: int = 0
    m5_1: int = 0
    m5_2: int = 0
    m6: int = 0
    m7_1: int = 0
    m7_2: int = 0
    m8_1: int = 0
    m8_2: int = 0
    m9: int = 0
    m10_1: int = 0
    m10_2: int = 0
    m11_1: int = 0
    m11_2: int = 0
    diagram: int = 1  # which of the two standard diagrams applies
    table_t: tuple[int, int, int] = (0, 0, 0)  # twist bookkeeping of the case

    @property
    def m2(self) -> int:
        return self.m2_1 + self.m2_2

    @property
    def m4(self) -> int:
        return self.m4_1 + self.m4_2

    @property
    def m5(self) -> int:
        return self.m5_1 + self.m5_2

    @property
    def m7(self) -> int:
        return self.m7_1 + self.m7_2

    @property
    def m8(self) -> int:
        return self.m8_1 + self.m8_2

    @property
    def m10(self) -> int:
        return self.m10_1 + self.m10_2

    @property
    def m11(self) -> int:
        return self.m11_1 + self.m11_2

    @property
    def all_zero(self) -> bool:
        return self.total == 0

    @property
    def total(self) -> int:
        return (self.m1 + self.m2 + self.m3 + self.m4 + self.m5 + self.m6
                + self.m7 + self.m8 + self.m9 + self.m10 + self.m11)

    def to_json_dict(self) -> dict:
        keys = ("m1", "m2_1", "m2_2", "m3", "m4_1", "m4_2", "m5_1", "m5_2",
                "m6", "m7_1", "m7_2", "m8_1", "m8_2", "m9", "m10_1", "m10_2",
                "m11_1", "m11_2")
        data = {k: getattr(self, k) for k in keys if getattr(self, k)}
        data["diagram"] = self.diagram
        return data


def _pants(p):
    x11 = p[0] - p[1] - p[2]
    if x11 <= 0:
        raise ContractViolation(f"standard position needs x_11 > 0, got p={p}")
    return x11, 2 * p[1], 2 * p[2]


def select_case(p, q) -> str:
    """Pick the table region for untwisted parameters with x_11 > 0."""
    x11, x12, x13 = _pants(p)
    q1, p1 = q[0], p[0]
    if q1 + p1 < x11 + x13:
        return "1"
    if q1 + p1 < x11 + x12 + x13:
        if q1 <= x13:
            return REJECT_CASE  # cannot bound an essential disk
        if q1 > x11 + x13:
            return "2a"
        return "2b"
    if x13 >= q1:
        return "3a"
    if p1 >= 2 * q1 - x13:
        return "3b1"
    if q1 > x11 + x13:
        return "3b2i"
    return "3b2ii"


def _split2(value: int, variant: int) -> dict:
    return {"m2_1": value} if variant == 1 else {"m2_2": value}


def standard_weights(p, q, case: str) -> StandardWeights:
    """Evaluate the closed-form table of one selector case."""
    x11, x12, x13 = _pants(p)
    p1, p2, p3 = p
    q1, q2, q3 = q
    # Twist bookkeeping follows the diagram, not the raw selector band:
    # the first standard diagram (cases 1 and 3a) carries no disk-1
    # re-twist, the second carries one.  Pinned against the oracle.
    t1 = 0 if case in ("1", "3a") else -1
    table_t = (t1, -1 if p2 else 0, 0)

    if case == "1":
        # When q1 + p1 < x13 the whole x11 band returns as type 3 and the
        # excess hangs below it; m2 floors at zero rather than going
        # negative.
        m3 = min((x11 + x13) - (q1 + p1), x11)
        hang = max(x13 - (p1 + q1), 0)  # weight of the lowest returning band
        m10_1 = min(q1, p3 - q3)
        m10_2 = min(hang, q3)
        m11_1 = max(0, q1 - (p3 - q3))
        m11_2 = max(0, hang - q3)
        m8_1 = max(0, (p3 - q3) - q1)
        m8_2 = max(0, q3 - hang)
        m = StandardWeights(
            m3=m3,
            **_split2(x11 - m3, CASE1_TYPE2_VARIANT),
            m6=p2, m7_1=q2, m7_2=p2 - q2,
            m8_1=m8_1, m8_2=m8_2,
            m10_1=m10_1, m10_2=m10_2, m11_1=m11_1, m11_2=m11_2,
            m9=(m10_1 + m10_2) + (m8_1 + m8_2) - (m11_1 + m11_2),
            diagram=1, table_t=table_t,
        )
    elif case in ("2a", "2b"):
        spare = x11 + x12 + x13 - (q1 + p1)  # > 0 in the middle band
        m5_1 = min(q2, spare)
        common = dict(m8_1=p3 - q3, m8_2=q3, m9=p3,
                      m5_1=m5_1, m7_1=q2 - m5_1, m4_1=spare - m5_1,
                      diagram=2, table_t=table_t)
        if case == "2a":
            over = q1 - (x11 + x13)  # > 0 in 2a
            m5_2 = min(p2 - q2, over)
            m = StandardWeights(
                m1=x11, m5_2=m5_2, m7_2=p2 - q2 - m5_2, m4_2=over - m5_2,
                **common,
            )
            m = _with_m6(m)
        else:
            m = StandardWeights(
                m1=q1 - x13, m2_1=x11 + x13 - q1, m7_2=p2 - q2,
                **common,
            )
            m = _with_m6(m)
    elif case == "3a":
        m3 = (q1 + p1) - (x11 + x12 + x13)
        m8_1 = min(q1, p3 - q3)
        m8_2 = max(q3 - (2 * p3 - q1), 0)
        m10 = min(2 * p3 - q1, q3)
        m11 = max((2 * p3 - q1) - q3, 0)
        m11_split = {"m11_1": m11} if CASE3A_TYPE11_VARIANT == 1 else {"m11_2": m11}
        m = StandardWeights(
            m3=m3,
            **_split2(x11 - m3, CASE3A_TYPE2_VARIANT),
            m6=p2, m7_1=q2, m7_2=p2 - q2,
            m8_1=m8_1, m8_2=m8_2, m10_1=m10,
            m9=2 * p3 - (m8_1 + m8_2 + m10 + m11),
            **m11_split,
            diagram=1, table_t=table_t,
        )
    elif case == "3b1":
        m = StandardWeights(
            m2_2=p1 + x13 - 2 * q1, m1=q1 - x13, m3=x11 + q1 - p1,
            m6=p2, m7_1=q2, m7_2=p2 - q2,
            m8_1=p3 - q3, m8_2=q3, m9=p3,
            diagram=2, table_t=table_t,
        )
    elif case == "3b2i":
        over = q1 - (x11 + x13)  # > 0 here
        m5_2 = min(p2 - q2, over)
        m = StandardWeights(
            m2_1=x11 + q1 - p1, m1=p1 - q1,
            m7_1=q2, m5_2=m5_2, m7_2=p2 - q2 - m5_2, m4_2=over - m5_2,
            m6=p2 - (over - m5_2),
            m8_1=p3 - q3, m8_2=q3, m9=p3,
            diagram=2, table_t=table_t,
        )
    elif case == "3b2ii":
        m = StandardWeights(
            m2_1=2 * q1 - p1 - x13, m1=p1 - q1, m3=x11 + x13 - q1,
            m6=p2, m7_1=q2, m7_2=p2 - q2,
            m8_1=p3 - q3, m8_2=q3, m9=p3,
            diagram=2, table_t=table_t,
        )
    else:
        raise ContractViolation(f"no table for case {case!r}")

    _check(m, p, q, case)
    return m


def _with_m6(m: StandardWeights) -> StandardWeights:
    # m6 balances the disk-2 window: m6 = m5 + m7 - m4.
    from dataclasses import replace

    return replace(m, m6=m.m5 + m.m7 - m.m4)


def _check(m: StandardWeights, p, q, case: str) -> None:
    fields = (m.m1, m.m2_1, m.m2_2, m.m3, m.m4_1, m.m4_2, m.m5_1, m.m5_2,
              m.m6, m.m7_1, m.m7_2, m.m8_1, m.m8_2, m.m9, m.m10_1, m.m10_2,
              m.m11_1, m.m11_2)
    if any(v < 0 for v in fields):
        raise MalformedCurveError(
            f"table {case} gave negative weights {m.to_json_dict()} "
            f"for p={p}, q={q}"
        )
    window1 = 2 * (m.m1 + m.m2 + m.m3) + (m.m4 + m.m5 + m.m6 + m.m7) \
        + (m.m8 + m.m9 + m.m10 + m.m11)
    window2 = m.m4 + m.m5 + m.m6 + m.m7
    window3 = m.m8 + m.m9 + m.m10 + m.m11
    if (window1, window2, window3) != (2 * p[0], 2 * p[1], 2 * p[2]):
        raise MalformedCurveError(
            f"table {case} breaks window conservation for p={p}, q={q}: "
            f"{(window1, window2, window3)}"
        )
