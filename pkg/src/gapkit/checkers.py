"""Decision procedures over cusp gap sets, with per-index reports.

Three checks share the report shape: the pairwise coefficient inequality
k_j <= I(j+1), the degree-indexed convolution identity at the points jd+1
("bl"), and the two coefficient bound forms at the indices d(d-j-3) ("flmn").
Each left-hand side is cross-checked against an independent evaluation route;
disagreement between routes raises RuntimeError, since it can only mean an
implementation bug, never a failing input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Optional

from .alexpoly import alexander_from_gaps, expand_k_sequence, poly_mul
from .errors import GenusMismatch
from .gapset import GapSet, gap_function_eval
from .infconv import inf_conv_eval, inf_conv_n, inf_conv_pair

__all__ = [
    "CurveSpec",
    "CheckRow",
    "CheckReport",
    "validate_spec",
    "product_k_closed_form",
    "check_pair_inequality",
    "check_bl",
    "check_flmn",
]


@dataclass(frozen=True)
class CurveSpec:
    """Curve degree plus one gap set per cusp."""

    degree: int
    cusps: tuple[GapSet, ...]

    def __post_init__(self):
        if not isinstance(self.degree, int) or isinstance(self.degree, bool) or self.degree < 3:
            raise ValueError(f"degree must be an integer >= 3, got {self.degree!r}")
        cusps = tuple(self.cusps)
        if not cusps:
            raise ValueError("at least one cusp required")
        for c in cusps:
            if not isinstance(c, GapSet):
                raise ValueError(f"cusps must be GapSet values, got {type(c).__name__}")
        object.__setattr__(self, "cusps", cusps)

    @property
    def total_genus(self) -> int:
        return sum(c.genus for c in self.cusps)


@dataclass(frozen=True)
class CheckRow:
    """One compared index: lhs relation rhs, with an exact-equality flag."""

    j: int
    lhs: int
    rhs: int
    relation: str
    equal: bool

    @property
    def satisfied(self) -> bool:
        return self.lhs == self.rhs if self.relation == "==" else self.lhs <= self.rhs

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "equal": self.equal,
        }


@dataclass(frozen=True)
class CheckReport:
    """Verdict plus all compared rows; verdict is pass iff every row holds."""

    check: str
    verdict: str
    rows: tuple[CheckRow, ...]
    witness: Optional[dict] = None

    def __post_init__(self):
        expected = "pass" if all(r.satisfied for r in self.rows) else "fail"
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict!r} inconsistent with rows ({expected})")

    @classmethod
    def build(cls, check: str, rows: tuple[CheckRow, ...], witness: Optional[dict] = None):
        verdict = "pass" if all(r.satisfied for r in rows) else "fail"
        return cls(check, verdict, rows, witness)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "rows": [r.to_json_dict() for r in self.rows],
            "witness": self.witness,
        }


def _row(j: int, lhs: int, rhs: int, relation: str) -> CheckRow:
    return CheckRow(j, lhs, rhs, relation, lhs == rhs)


def _fail_witness(rows) -> Optional[dict]:
    for r in rows:
        if not r.satisfied:
            return {"j": r.j}
    return None


def validate_spec(spec: CurveSpec) -> None:
    """Require total cusp genus (d-1)(d-2)/2; raises GenusMismatch otherwise."""
    required = (spec.degree - 1) * (spec.degree - 2) // 2
    if spec.total_genus != required:
        raise GenusMismatch(spec.total_genus, required)


def product_k_closed_form(G: GapSet, H: GapSet, j: int) -> int:
    """k_j of the product polynomial without any division.

    Equals I_G(j+1) + I_H(j+1) + the number of pairs (u, v) in G x H with
    u + v = j; must agree with expand_k_sequence on the product.
    """
    if j < 0:
        raise ValueError(f"index must be nonnegative, got {j}")
    pairs = sum(1 for u in G.elements if u < j and (j - u) in H)
    return gap_function_eval(G, j + 1) + gap_function_eval(H, j + 1) + pairs


def check_pair_inequality(G: GapSet, H: GapSet) -> CheckReport:
    """Check k_j <= (I_G <> I_H)(j+1) for j up to max(G) + max(H) + 1.

    The right side is computed twice: from the pairwise convolution table and
    as the minimum of I_G(j+1-l) + I_H(l) over the evaluation window.  A fail
    verdict would contradict the inequality's proof for arbitrary finite sets,
    so it indicates an implementation bug; it is still reported faithfully.
    """
    ks = expand_k_sequence(
        poly_mul(alexander_from_gaps(G), alexander_from_gaps(H)), G.genus + H.genus
    )
    conv = inf_conv_pair(G, H)
    rows = []
    for j in range(G.max_gap + H.max_gap + 2):
        rhs = conv(j + 1)
        window = range(j - G.max_gap, H.max_gap + 2)
        direct = min(gap_function_eval(G, j + 1 - l) + gap_function_eval(H, l) for l in window)
        if direct != rhs:
            raise RuntimeError(
                f"internal: window minimum {direct} != table value {rhs} at j={j}"
            )
        rows.append(_row(j, ks.at(j), rhs, "<="))
    rows = tuple(rows)
    return CheckReport.build("pair", rows, _fail_witness(rows))


def check_bl(spec: CurveSpec) -> CheckReport:
    """Compare the n-ary convolution at jd+1 with (j-d+1)(j-d+2)/2, j in [-1, d-2]."""
    validate_spec(spec)
    conv = inf_conv_n(spec.cusps)
    d = spec.degree
    rows = []
    for j in range(-1, d - 1):
        point = j * d + 1
        lhs = conv(point)
        direct = inf_conv_eval(spec.cusps, point)
        if direct != lhs:
            raise RuntimeError(
                f"internal: direct minimization {direct} != fold value {lhs} at k={point}"
            )
        rows.append(_row(j, lhs, (j - d + 1) * (j - d + 2) // 2, "=="))
    rows = tuple(rows)
    return CheckReport.build("bl", rows, _fail_witness(rows))


def check_flmn(spec: CurveSpec) -> CheckReport:
    """Check k_{d(d-j-3)} against both bound forms for j in [0, d-3].

    Two rows per index: the binomial bound (j+1)(j+2)/2, then the convolution
    bound I(d(d-j-3)+1).  For a single cusp the report's witness also records
    whether the binomial bound is attained with equality at every index.
    """
    validate_spec(spec)
    d = spec.degree
    poly = reduce(poly_mul, (alexander_from_gaps(c) for c in spec.cusps))
    ks = expand_k_sequence(poly, spec.total_genus)
    conv = inf_conv_n(spec.cusps)
    rows = []
    equal_all = True
    for j in range(d - 2):
        m = d * (d - j - 3)
        k_m = ks.at(m)
        binom = (j + 1) * (j + 2) // 2
        rows.append(_row(j, k_m, binom, "<="))
        rows.append(_row(j, k_m, conv(m + 1), "<="))
        if k_m != binom:
            equal_all = False
    rows = tuple(rows)
    witness = _fail_witness(rows) or {}
    if len(spec.cusps) == 1:
        witness["single_cusp_equality"] = equal_all
    return CheckReport.build("flmn", rows, witness or None)
