"""Heights, v-adic distances, and approximation-constant estimation on
projective space over the rationals.

The approximation constant of a sequence is the critical exponent gamma at
which dist(P, x_i)^gamma * H(x_i) stays bounded.  This lab works with one
place at a time: heights and distances are exact (integers and Fractions;
p-adic absolute values are exact powers of p), and only the final
log-ratio estimator uses floating point, via logarithms of exact integers.

The distance is the cross-term projective formula
    max_{i<j} |x_i y_j - x_j y_i|_v / (max_i |x_i|_v * max_j |y_j|_v),
symmetric and zero exactly on equal points; with sup-norm denominators it
is bounded by 2 at the archimedean place (ultrametrically by 1 at finite
places).  Any bounded-factor change of distance leaves approximation
constants unchanged, so results do not depend on this normalization.

The liminf defining the constant is not computable from finitely many
samples; the estimator reports the median of the ratio log H / (-log dist)
over a configurable tail, together with the tail extremes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    BadArgs,
    DimensionMismatch,
    NotConverging,
    TooFewPoints,
)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RationalProjectivePoint:
    """Primitive integer coordinates, first nonzero entry positive."""

    coords: tuple[int, ...]

    def __post_init__(self):
        raw = tuple(int(c) for c in self.coords)
        if len(raw) < 2:
            raise BadArgs("a projective point needs at least two coordinates")
        if not any(raw):
            raise BadArgs("the zero vector is not a projective point")
        g = math.gcd(*raw)
        first = next(c for c in raw if c)
        if first < 0:
            g = -g
        object.__setattr__(self, "coords", tuple(c // g for c in raw))

    @classmethod
    def parse(cls, text: str) -> "RationalProjectivePoint":
        parts = [p for p in text.replace(",", ":").split(":") if p.strip()]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError:
            raise BadArgs(f"cannot parse projective point {text!r}") from None

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class PlaceSpec:
    """A place of the rationals: archimedean (prime None) or a prime p."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not _is_prime(self.prime):
            raise BadArgs(f"{self.prime} is not prime")

    @classmethod
    def archimedean(cls) -> "PlaceSpec":
        return cls(None)

    @classmethod
    def at(cls, p: int) -> "PlaceSpec":
        return cls(p)

    @property
    def is_archimedean(self) -> bool:
        return self.prime is None

    def abs(self, x: int) -> Fraction:
        """Exact absolute value |x|_v of an integer."""
        if x == 0:
            return Fraction(0)
        if self.prime is None:
            return Fraction(abs(x))
        v = 0
        while x % self.prime == 0:
            x //= self.prime
            v += 1
        return Fraction(1, self.prime**v)

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


def height(x: RationalProjectivePoint, m: int = 1) -> int:
    """Multiplicative height for the m-th multiple of the hyperplane class:
    (max |coordinate|)^m on the primitive representative."""
    if m < 1:
        raise BadArgs(f"height exponent must be positive, got {m}")
    return max(abs(c) for c in x.coords) ** m


def distance(
    x: RationalProjectivePoint, y: RationalProjectivePoint, place: PlaceSpec
) -> Fraction:
    """Projective distance at the place, an exact non-negative rational,
    zero iff x == y; at most 2 archimedean, at most 1 at a finite place."""
    if x.dimension != y.dimension:
        raise DimensionMismatch(f"{x} and {y} live in different projective spaces")
    cross = Fraction(0)
    n = len(x.coords)
    for i in range(n):
        for j in range(i + 1, n):
            value = place.abs(x.coords[i] * y.coords[j] - x.coords[j] * y.coords[i])
            if value > cross:
                cross = value
    denom = max(place.abs(c) for c in x.coords) * max(place.abs(c) for c in y.coords)
    return cross / denom


@dataclass(frozen=True)
class ApproxSample:
    """One approximation to a target: the point, its height, its distance to
    the target, and the ratio log(height)/(-log(distance))."""

    point: RationalProjectivePoint
    height: int
    distance: Fraction
    ratio: float


def _flog(q: Fraction | int) -> float:
    if isinstance(q, int):
        return math.log(q)
    return math.log(q.numerator) - math.log(q.denominator)


def make_sample(
    point: RationalProjectivePoint,
    target: RationalProjectivePoint,
    place: PlaceSpec,
    m: int = 1,
) -> ApproxSample:
    dist = distance(point, target, place)
    if dist == 0:
        raise BadArgs("sample point coincides with the target")
    h = height(point, m)
    neg_log_dist = -_flog(dist)
    if neg_log_dist == 0.0:
        ratio = math.inf if h > 1 else math.nan
    else:
        ratio = _flog(h) / neg_log_dist
    return ApproxSample(point, h, dist, ratio)


def best_sequence_on_line(
    target: RationalProjectivePoint,
    place: PlaceSpec,
    count: int,
    m: int = 1,
) -> list[ApproxSample]:
    """Deterministic approximating sequence on a line through the target.

    Uses the first standard basis vector independent of the target as the
    direction Q.  At the archimedean place the points are i*P + Q, with
    height growing like i and distance like 1/i; at a finite place p they
    are P + p^i Q, with |.|_p-distance p^-i.
    """
    if count < 10:
        raise TooFewPoints(f"need at least 10 points, got {count}")
    n = len(target.coords)
    # e_j is proportional to the target only when the target is supported on {j}.
    j = next(j for j in range(n) if any(target.coords[k] for k in range(n) if k != j))
    direction = tuple(1 if k == j else 0 for k in range(n))
    samples = []
    for i in range(1, count + 1):
        if place.is_archimedean:
            rep = tuple(i * p + q for p, q in zip(target.coords, direction))
        else:
            step = place.prime**i
            rep = tuple(p + step * q for p, q in zip(target.coords, direction))
        samples.append(make_sample(RationalProjectivePoint(rep), target, place, m))
    return samples


@dataclass(frozen=True)
class AlphaEstimate:
    """Tail estimate of an approximation constant from finite data."""

    estimate: float
    tail_min: float
    tail_max: float
    sample_count: int
    tail_count: int


def alpha_estimate(
    samples: Sequence[ApproxSample], tail_fraction: float = 0.5
) -> AlphaEstimate:
    """Median of the height/distance log-ratio over the tail of the sequence.

    Samples are ordered by height.  Convergence check: the running minimum
    of the distances must keep improving (the tail's minimum distance is
    strictly below the head's), otherwise the sequence is rejected as not
    converging (a non-converging sequence has constant infinity).
    """
    if len(samples) < 10:
        raise TooFewPoints(f"need at least 10 samples, got {len(samples)}")
    if not 0 < tail_fraction <= 1:
        raise BadArgs(f"tail_fraction must be in (0, 1], got {tail_fraction}")
    ordered = sorted(samples, key=lambda s: (s.height, -s.distance))
    seen = set()
    for s in ordered:
        if s.point.coords in seen:
            raise NotConverging(f"repeated point {s.point}")
        seen.add(s.point.coords)
    half = len(ordered) // 2
    head_min = min(s.distance for s in ordered[:half])
    tail_min = min(s.distance for s in ordered[half:])
    if tail_min >= head_min:
        raise NotConverging("distances do not decrease along the sequence")
    start = math.floor(len(ordered) * (1 - tail_fraction))
    tail = [s.ratio for s in ordered[start:] if math.isfinite(s.ratio)]
    if not tail:
        raise NotConverging("no finite ratios in the tail")
    tail.sort()
    mid = len(tail) // 2
    median = tail[mid] if len(tail) % 2 else (tail[mid - 1] + tail[mid]) / 2
    return AlphaEstimate(
        estimate=median,
        tail_min=tail[0],
        tail_max=tail[-1],
        sample_count=len(ordered),
        tail_count=len(tail),
    )


@dataclass(frozen=True)
class Trend:
    """Log-log slope of dist^gamma * H along a sequence, with its reading."""

    gamma: float
    slope: float
    verdict: str  # "bounded", "unbounded", or "indeterminate"


def boundedness_trend(
    samples: Sequence[ApproxSample],
    gamma: float,
    tail_fraction: float = 0.5,
    threshold: float = 0.05,
) -> Trend:
    """Least-squares slope of log(dist^gamma * H) against log H over the tail.

    A clearly negative slope means the product tends to zero (gamma is in
    the bounded set); a clearly positive one means it is unbounded.  The
    interval structure of the bounded set makes this monotone in gamma.
    """
    if len(samples) < 10:
        raise TooFewPoints(f"need at least 10 samples, got {len(samples)}")
    ordered = sorted(samples, key=lambda s: s.height)
    start = math.floor(len(ordered) * (1 - tail_fraction))
    xs, ys = [], []
    for s in ordered[start:]:
        x = _flog(s.height)
        ys.append(x + gamma * _flog(s.distance))
        xs.append(x)
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    var = sum((x - mean_x) ** 2 for x in xs)
    if var == 0:
        raise NotConverging("heights do not grow along the tail")
    slope = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys)) / var
    if slope < -threshold:
        verdict = "bounded"
    elif slope > threshold:
        verdict = "unbounded"
    else:
        verdict = "indeterminate"
    return Trend(gamma=gamma, slope=slope, verdict=verdict)
