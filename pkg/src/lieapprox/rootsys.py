"""Finite root systems: Cartan data, positive roots, coroot pairings.

Simple roots are numbered by the Bourbaki plates throughout: A-D chains run
left to right with the short root (B), long root (C) or fork (D) at the end;
F4 is 1-2=>3-4 with roots 1,2 long; G2 has the short root first; the E-series
branch node is number 2, attached to node 4 of the chain 1-3-4-5-...-r.

Everything here is exact integer arithmetic.  Roots are stored as coordinate
vectors in the simple-root basis, weights in the fundamental-weight basis.
The Cartan convention is a[i][j] = <alpha_j, alpha_i^vee>, so the weight
coordinates of a root with simple-root coordinates c are the matrix-vector
product A c.  The symmetrizer d satisfies d[i] a[i][j] = d[j] a[j][i] with
d = 1 on short roots, making (alpha_i, alpha_j) = d[i] a[i][j] and every
coroot pairing an integer.

All values are immutable after construction and safe to share across
concurrent workers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import BadIndex, InvalidRank, NonDominant, NotARoot

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

#: Default ceiling on classical-family ranks, overridable per call or via
#: the environment variable below.  Keeps exhaustive sweeps fast while
#: exceeding every rank the reference tables display.
DEFAULT_MAX_RANK = 12
MAX_RANK_ENV = "LIEAPPROX_MAX_RANK"

_LOWEST_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

# Closed forms used as independent cross-checks by callers and tests.
COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 12,
    "G": lambda n: 6,
}
DUAL_COXETER_NUMBER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}
#: Order of the weight lattice modulo the root lattice (= center of the
#: simply connected form), which also equals det(Cartan matrix).
CENTER_ORDER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
    "F": lambda n: 1,
    "G": lambda n: 1,
}


def default_max_rank() -> int:
    """Rank ceiling for classical families, from the environment or 12."""
    raw = os.environ.get(MAX_RANK_ENV)
    if raw is None:
        return DEFAULT_MAX_RANK
    try:
        value = int(raw)
    except ValueError:
        raise InvalidRank(f"{MAX_RANK_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidRank(f"{MAX_RANK_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple Lie type: family letter A-G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        family, rank = self.family, self.rank
        if family in _EXCEPTIONAL_RANKS:
            if rank not in _EXCEPTIONAL_RANKS[family]:
                raise InvalidRank(f"{family}{rank} is not a simple type")
        elif family in _LOWEST_RANK:
            if rank < _LOWEST_RANK[family]:
                raise InvalidRank(
                    f"{family}{rank} is not supported: {family} needs rank >= "
                    f"{_LOWEST_RANK[family]} (lower ranks repeat smaller types)"
                )
        else:
            raise InvalidRank(f"unknown family {family!r}")

    @classmethod
    def parse(cls, label: str) -> "SimpleType":
        label = label.strip()
        if len(label) < 2 or not label[1:].isdigit():
            raise InvalidRank(f"cannot parse simple type {label!r}")
        return cls(label[0].upper(), int(label[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix with its symmetrizer, a[i][j] = <alpha_j, alpha_i^vee>."""

    entries: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    def validate(self) -> None:
        a, d = self.entries, self.symmetrizer
        n = self.rank
        if len(d) != n or any(len(row) != n for row in a):
            raise InvalidRank("Cartan data with inconsistent dimensions")
        for i in range(n):
            if a[i][i] != 2:
                raise InvalidRank(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
            if d[i] not in (1, 2, 3):
                raise InvalidRank(f"symmetrizer entry d[{i}] = {d[i]} not in 1..3")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise InvalidRank(f"positive off-diagonal entry a[{i}][{j}]")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise InvalidRank(f"zero pattern not symmetric at ({i},{j})")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise InvalidRank(f"symmetrizer fails at ({i},{j})")
        if self.determinant() <= 0:
            raise InvalidRank("Cartan matrix is not positive definite")

    def determinant(self) -> int:
        """Exact determinant (equals the order of weight/root lattice quotient)."""
        m = [[Fraction(x) for x in row] for row in self.entries]
        n = self.rank
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot is None:
                return 0
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, n):
                factor = m[r][col] * inv
                if factor:
                    m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
        assert det.denominator == 1
        return int(det)


@dataclass(frozen=True, order=True)
class Root:
    """A root as integer coordinates in the simple-root basis."""

    coeffs: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))


@dataclass(frozen=True, order=True)
class DominantWeight:
    """Non-negative integer coordinates in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coords):
            raise NonDominant(f"negative coordinate in {self.coords}")

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _chain_cartan(rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = -1
        a[i + 1][i] = -1
    return a


def _cartan_data(st: SimpleType) -> tuple[list[list[int]], list[int]]:
    n, f = st.rank, st.family
    if f == "A":
        return _chain_cartan(n), [1] * n
    if f == "B":
        # alpha_n short
        a = _chain_cartan(n)
        a[n - 1][n - 2] = -2
        return a, [2] * (n - 1) + [1]
    if f == "C":
        # alpha_n long
        a = _chain_cartan(n)
        a[n - 2][n - 1] = -2
        return a, [1] * (n - 1) + [2]
    if f == "D":
        # chain on 1..n-1, node n forks off node n-2
        a = _chain_cartan(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a, [1] * n
    if f == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [0] + list(range(2, n))
        for u, v in zip(chain, chain[1:]):
            a[u][v] = a[v][u] = -1
        a[1][3] = a[3][1] = -1
        return a, [1] * n
    if f == "F":
        a = _chain_cartan(4)
        a[2][1] = -2
        return a, [2, 2, 1, 1]
    # G2
    a = [[2, -3], [-1, 2]]
    return a, [1, 3]


def _close_positive_roots(entries: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    """All positive roots by root-string closure from the simple roots.

    Processes roots by height; alpha + alpha_i is a root iff the alpha_i-string
    depth below alpha exceeds <alpha, alpha_i^vee>.
    """
    rank = len(entries)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known: set[tuple[int, ...]] = set(simple)
    current = list(simple)
    out = list(simple)
    while current:
        nxt: list[tuple[int, ...]] = []
        for c in current:
            for i in range(rank):
                pairing = sum(entries[i][j] * c[j] for j in range(rank))
                depth = 0
                probe = list(c)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        depth += 1
                    else:
                        break
                if depth - pairing > 0:
                    up = list(c)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        nxt.append(t)
        out.extend(sorted(nxt))
        current = nxt
    return out


@dataclass(frozen=True)
class RootSystem:
    """A finite root system with its Cartan data and distinguished elements."""

    type: SimpleType
    cartan: CartanMatrix
    positive_roots: tuple[Root, ...]
    highest_root: Root
    rho: DominantWeight

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def coxeter_number(self) -> int:
        return 2 * self.num_positive_roots // self.rank

    @property
    def dual_coxeter_number(self) -> int:
        return 1 + sum(self.comark_vector)

    @cached_property
    def _root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coeffs for r in self.positive_roots)

    def is_positive_root(self, alpha: Root) -> bool:
        return alpha.coeffs in self._root_set

    def root_halfnorm(self, alpha: Root) -> int:
        """(alpha, alpha)/2 in the short-root-is-1 normalization."""
        c = alpha.coeffs
        a, d = self.cartan.entries, self.cartan.symmetrizer
        norm2 = sum(c[i] * c[j] * d[i] * a[i][j] for i in range(self.rank) for j in range(self.rank))
        assert norm2 > 0 and norm2 % 2 == 0
        return norm2 // 2

    def coroot_row(self, alpha: Root) -> tuple[int, ...]:
        """The vector (<omega_1, alpha^vee>, ..., <omega_r, alpha^vee>)."""
        d_alpha = self.root_halfnorm(alpha)
        d = self.cartan.symmetrizer
        row = []
        for c_j, d_j in zip(alpha.coeffs, d):
            num = c_j * d_j
            if num % d_alpha:
                raise NotARoot(f"{alpha.coeffs} has a non-integral coroot pairing")
            row.append(num // d_alpha)
        return tuple(row)

    @cached_property
    def coroot_rows(self) -> tuple[tuple[int, ...], ...]:
        """Coroot pairing rows for every positive root, in positive_roots order."""
        return tuple(self.coroot_row(alpha) for alpha in self.positive_roots)

    @cached_property
    def comark_vector(self) -> tuple[int, ...]:
        return self.coroot_row(self.highest_root)

    def weight_coords(self, alpha: Root) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a root (the product A c)."""
        a = self.cartan.entries
        c = alpha.coeffs
        return tuple(sum(a[j][i] * c[i] for i in range(self.rank)) for j in range(self.rank))

    @cached_property
    def highest_root_weight(self) -> DominantWeight:
        return DominantWeight(self.weight_coords(self.highest_root))

    def fundamental_weight(self, index: int) -> DominantWeight:
        """omega_index for a 1-based Bourbaki index."""
        if not 1 <= index <= self.rank:
            raise BadIndex(f"weight index {index} out of range 1..{self.rank}")
        return DominantWeight(tuple(1 if j == index - 1 else 0 for j in range(self.rank)))


@lru_cache(maxsize=None)
def _construct(st: SimpleType) -> RootSystem:
    entries, d = _cartan_data(st)
    cartan = CartanMatrix(tuple(tuple(row) for row in entries), tuple(d))
    cartan.validate()
    coeff_list = _close_positive_roots(cartan.entries)
    roots = tuple(Root(c) for c in coeff_list)
    top_height = max(r.height for r in roots)
    top = [r for r in roots if r.height == top_height]
    assert len(top) == 1, f"{st}: highest root is not unique"
    expected = st.rank * COXETER_NUMBER[st.family](st.rank) // 2
    assert len(roots) == expected, f"{st}: found {len(roots)} positive roots, expected {expected}"
    rho = DominantWeight((1,) * st.rank)
    rs = RootSystem(st, cartan, roots, top[0], rho)
    assert all(x >= 0 for x in rs.highest_root_weight.coords)
    return rs


def build_root_system(st: SimpleType, *, max_rank: int | None = None) -> RootSystem:
    """Construct the root system of a simple type (Bourbaki numbering).

    Classical families are capped at ``max_rank`` (default: environment
    variable or 12); raises InvalidRank beyond the cap.
    """
    ceiling = default_max_rank() if max_rank is None else max_rank
    if st.family in _LOWEST_RANK and st.rank > ceiling:
        raise InvalidRank(
            f"{st} exceeds the configured rank ceiling {ceiling} "
            f"(raise via max_rank= or {MAX_RANK_ENV})"
        )
    return _construct(st)


def coroot_pairing(rs: RootSystem, w: DominantWeight, alpha: Root) -> int:
    """Exact integer pairing <w, alpha^vee> for a positive root alpha."""
    if not rs.is_positive_root(alpha):
        raise NotARoot(f"{alpha.coeffs} is not a positive root of {rs.type}")
    row = rs.coroot_row(alpha)
    return sum(c * r for c, r in zip(w.coords, row))


def comarks(rs: RootSystem) -> tuple[int, ...]:
    """(<omega_1, theta^vee>, ..., <omega_r, theta^vee>) in Bourbaki order."""
    return rs.comark_vector


def supported_types(max_rank: int | None = None) -> list[SimpleType]:
    """Every supported simple type up to the classical rank ceiling, sorted."""
    ceiling = default_max_rank() if max_rank is None else max_rank
    out = []
    for family, lowest in _LOWEST_RANK.items():
        out.extend(SimpleType(family, n) for n in range(lowest, ceiling + 1))
    for family, ranks in _EXCEPTIONAL_RANKS.items():
        out.extend(SimpleType(family, n) for n in ranks)
    return sorted(out)
