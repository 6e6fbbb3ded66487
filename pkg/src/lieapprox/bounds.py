"""Liouville-type lower bounds and the per-colour verification verdicts.

A nonzero section vanishing to order d at a smooth point forces every
Zariski dense sequence of rational points to have approximation constant at
least d; such a section exists whenever h^0 strictly exceeds the number of
monomials of degree at most d-1 in dim X variables.  A best sequence along
the longest-root curve achieves the intersection number of the divisor with
that curve, so a colour is certified once the dense lower bound reaches its
comark.

Verdicts always use the strict count binom(n+d-1, n).  The reference table
column reproduced by ``table_binomial`` satisfies the different formula
binom(n+d-2, d-1) (monomials of degree exactly d-1); both are kept, clearly
named, and reports flag the difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import repdim
from .errors import BadArgs, BadIndex
from .rootsys import SimpleType, build_root_system
from .wonderful import (
    NefDivisor,
    SemisimpleType,
    _check_divisor,
    dim_X,
    h0_product,
    root_curve_degree,
    root_systems,
)

#: Candidate ceiling above which the dominance-box enumeration behind a
#: direct (full h^0) verdict is considered too large to run at desk scale.
DEFAULT_DIRECT_BUDGET = 10_000_000


def monomial_count(n: int, e: int) -> int:
    """Number of monomials of degree at most e in n variables: binom(n+e, n)."""
    if n < 1 or e < 0:
        raise BadArgs(f"monomial_count needs n >= 1 and e >= 0, got n={n}, e={e}")
    return comb(n + e, n)


def _vanishing_threshold(n: int, d: int) -> int:
    # Count that h^0 must strictly exceed to force vanishing order >= d.
    # comb(n - 1, n) = 0 at d = 0: order zero is always forced.
    return comb(n + d - 1, n)


def liouville_bound(n: int, h0: int) -> int:
    """Largest d >= 0 with h0 > binom(n+d-1, n), by exact monotone search.

    The threshold is monotone in d, so gallop to a bracket and bisect; for
    n = 1 the answer is of the order of h0 itself, which rules out a linear
    scan.  Everything stays in exact integers.
    """
    if n < 1 or h0 < 1:
        raise BadArgs(f"liouville_bound needs n >= 1 and h0 >= 1, got n={n}, h0={h0}")

    def below(d: int) -> bool:
        return h0 > comb(n + d - 1, n)

    hi = 1
    while below(hi):
        hi *= 2
    lo = 0  # below(0) always holds: binom(n-1, n) = 0 < h0
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if below(mid):
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class Verdict:
    """Outcome of one curve-versus-dense comparison, all witnesses kept exact."""

    curve_constant: int
    dense_lower_bound: int
    required_count: int
    available_sections: int
    passed: bool
    full_conjecture: bool

    def __post_init__(self):
        if self.passed != (self.dense_lower_bound >= self.curve_constant):
            raise BadArgs("inconsistent verdict: passed flag contradicts the bounds")

    def to_dict(self) -> dict:
        """JSON-safe record; big integers as decimal strings."""
        return {
            "curve_constant": self.curve_constant,
            "dense_lower_bound": self.dense_lower_bound,
            "required_count": str(self.required_count),
            "available_sections": str(self.available_sections),
            "pass": self.passed,
            "full_conjecture": self.full_conjecture,
        }


def _make_verdict(n: int, curve_constant: int, available: int, full_conjecture: bool) -> Verdict:
    dense = liouville_bound(n, available)
    return Verdict(
        curve_constant=curve_constant,
        dense_lower_bound=dense,
        required_count=_vanishing_threshold(n, curve_constant),
        available_sections=available,
        passed=dense >= curve_constant,
        full_conjecture=full_conjecture,
    )


def verify_colour(t: SimpleType, index: int, mode: str = "end") -> Verdict:
    """Verdict for the colour omega_index (1-based Bourbaki index).

    mode "end" uses dim End(V_omega) as the section count (the certified
    route); mode "h0" uses the full section space, which is at least as
    large, so it passes a fortiori.
    """
    if mode not in ("end", "h0"):
        raise BadArgs(f"mode must be 'end' or 'h0', got {mode!r}")
    rs = build_root_system(t)
    if not 1 <= index <= rs.rank:
        raise BadIndex(f"weight index {index} out of range 1..{rs.rank}")
    omega = rs.fundamental_weight(index)
    available = repdim.end_dim(rs, omega) if mode == "end" else repdim.h0_dim(rs, omega)
    d = rs.comark_vector[index - 1]
    n = rs.rank + 2 * rs.num_positive_roots
    return _make_verdict(n, d, available, full_conjecture=(d == 1))


def table_binomial(t: SimpleType, index: int) -> int:
    """binom(dim X + d - 2, d - 1) with d the comark of omega_index.

    This is the formula the printed reference values satisfy (the count of
    monomials of degree exactly d-1); it exists solely to reproduce that
    column bit for bit.  The strict threshold a verdict uses is the larger
    binom(dim X + d - 1, dim X).
    """
    rs = build_root_system(t)
    if not 1 <= index <= rs.rank:
        raise BadIndex(f"weight index {index} out of range 1..{rs.rank}")
    d = rs.comark_vector[index - 1]
    n = rs.rank + 2 * rs.num_positive_roots
    return comb(n + d - 2, d - 1)


def full_conjecture_check(t: SimpleType) -> bool:
    """True iff the longest-root curve meets every colour in degree 1,
    i.e. every comark equals 1 (families A and C)."""
    rs = build_root_system(t)
    return all(m == 1 for m in rs.comark_vector)


@dataclass(frozen=True)
class NefReport:
    """Structural and direct verdicts for an arbitrary nef divisor class."""

    type_label: str
    divisor: NefDivisor
    trivial: bool
    structural_passed: bool
    colour_verdicts: tuple[tuple[int, int, Verdict], ...]  # (factor, index, verdict)
    direct: Verdict | None
    selected_factor: int | None
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        if self.trivial:
            return True
        if self.direct is not None and not self.direct.passed:
            return False
        return self.structural_passed

    def to_dict(self) -> dict:
        return {
            "type": self.type_label,
            "divisor": list(self.divisor.flat()),
            "trivial": self.trivial,
            "structural_pass": self.structural_passed,
            "colour_verdicts": [
                {"factor": f, "index": i, **v.to_dict()} for f, i, v in self.colour_verdicts
            ],
            "direct": self.direct.to_dict() if self.direct is not None else None,
            "selected_factor": self.selected_factor,
            "notes": list(self.notes),
            "pass": self.passed,
        }


def verify_nef(
    t: SemisimpleType,
    D: NefDivisor,
    *,
    direct_budget: int | None = DEFAULT_DIRECT_BUDGET,
) -> NefReport:
    """Verify an arbitrary nef class, reporting two sub-verdicts.

    Structural: every colour with a positive coefficient must pass its own
    verdict (the route that certifies the divisor).  Direct: one Liouville
    comparison of the full section count of D against the degree of D on
    the longest-root curve of the cheapest supported factor; skipped with a
    note when the dominance-box enumeration would exceed ``direct_budget``
    candidates (pass ``None`` for no budget).
    """
    systems = root_systems(t)
    _check_divisor(t, D)

    if D.is_zero:
        verdict = Verdict(0, 0, 0, 1, True, all(map(full_conjecture_check, t.factors)))
        return NefReport(
            type_label=str(t),
            divisor=D,
            trivial=True,
            structural_passed=True,
            colour_verdicts=(),
            direct=verdict,
            selected_factor=None,
            notes=("degenerate: zero divisor certifies nothing",),
        )

    colour_verdicts = []
    for f_idx, block in enumerate(D.coeffs):
        for i, coeff in enumerate(block, start=1):
            if coeff > 0:
                colour_verdicts.append((f_idx, i, verify_colour(t.factors[f_idx], i)))
    structural_passed = all(v.passed for _, _, v in colour_verdicts)

    notes: list[str] = []
    supported = [f for f in range(len(t.factors)) if any(D.coeffs[f])]
    if len(supported) < len(t.factors):
        labels = ",".join(str(t.factors[f]) for f in supported)
        notes.append(f"divisor supported only on factor(s) {labels}")
    degrees = {f: root_curve_degree(t, D, f) for f in supported}
    selected = min(supported, key=lambda f: (degrees[f], f))
    curve_constant = degrees[selected]

    n = dim_X(t)
    all_ones = all(systems[f].comark_vector[i - 1] == 1 for f, i, _ in colour_verdicts)

    direct = None
    cost = sum(repdim.dominance_box_size(rs, block) for rs, block in zip(systems, D.coeffs))
    if direct_budget is not None and cost > direct_budget:
        notes.append(
            f"direct verdict skipped: dominance enumeration needs {cost} candidates, "
            f"budget {direct_budget}"
        )
    else:
        available = h0_product(t, D)
        direct = _make_verdict(n, curve_constant, available, full_conjecture=all_ones)

    return NefReport(
        type_label=str(t),
        divisor=D,
        trivial=False,
        structural_passed=structural_passed,
        colour_verdicts=tuple(colour_verdicts),
        direct=direct,
        selected_factor=selected,
        notes=tuple(notes),
    )
