"""Combinatorial model of a tower X = X_0 -> X_1 -> ... -> X_v = Y of
degree-p covers with cyclic total group Z/p^v.

The tower is described purely by numbers: the base genus, and for each
ramified orbit the order p^m of its stabilizer together with the
ramification break N of each of the m wildly ramified cover steps it
meets.  Divisors are carried as (degree of the part pulled back from the
base, one integer coefficient per orbit); this is lossless because every
divisor the algorithms touch is invariant under the residual group at
its level.

Conventions:
  * jumps[n-1] is the break of the level-n cover pi_n : X_{n-1} -> X_n
    at the orbit's image; level 1 (closest to X) carries the largest
    break.
  * integral parts of divisors floor toward -infinity, coefficient by
    coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclic_rep import GroupSpec
from .errors import NegativeGenus, NonIntegralGenus, ValidationError


@dataclass(frozen=True)
class RamifiedOrbit:
    """A G-orbit of ramified points: stabilizer of order p^depth and the
    break sequence of the covers it ramifies in, innermost first."""

    id: str
    depth: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        if self.depth < 1:
            raise ValidationError(f"orbit {self.id!r}: depth {self.depth} < 1")
        if len(self.jumps) != self.depth:
            raise ValidationError(
                f"orbit {self.id!r}: expected {self.depth} jumps, "
                f"got {len(self.jumps)}")
        if any(n < 1 for n in self.jumps):
            raise ValidationError(f"orbit {self.id!r}: jumps must be >= 1")


@dataclass(frozen=True)
class CoverTower:
    group: GroupSpec
    base_genus: int
    orbits: tuple[RamifiedOrbit, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "orbits", tuple(self.orbits))
        if self.base_genus < 0:
            raise ValidationError(f"base genus {self.base_genus} < 0")
        ids = [o.id for o in self.orbits]
        if len(set(ids)) != len(ids):
            raise ValidationError("orbit ids are not unique")
        for o in self.orbits:
            if o.depth > self.group.v:
                raise ValidationError(
                    f"orbit {o.id!r}: depth {o.depth} exceeds tower height "
                    f"{self.group.v}")

    def orbit(self, oid: str) -> RamifiedOrbit:
        for o in self.orbits:
            if o.id == oid:
                return o
        raise ValidationError(f"unknown orbit id {oid!r}")

    def genus(self, n: int) -> int:
        """Genus of the level-n curve X_n, by downward Riemann-Hurwitz from
        g_Y: each wildly ramified point of the degree-p step pi_n
        contributes conductor (p-1)(N+1)."""
        g = self.group
        if not 0 <= n <= g.v:
            raise ValidationError(f"level {n} out of range 0..{g.v}")
        gn = self.base_genus
        for lvl in range(g.v, n, -1):
            ram = sum(
                orbit_point_count(o, lvl - 1, g) * (g.p - 1) * (o.jumps[lvl - 1] + 1)
                for o in self.orbits if o.depth >= lvl)
            chi = g.p * (2 * gn - 2) + ram
            if chi % 2 != 0:
                raise NonIntegralGenus(
                    f"level {lvl - 1}: 2g - 2 = {chi} is odd")
            gn = chi // 2 + 1
            if gn < 0:
                raise NegativeGenus(f"level {lvl - 1}: genus {gn} < 0")
        return gn


@dataclass(frozen=True)
class InvariantDivisor:
    """A G-invariant divisor on X: pullback of a degree-`base_degree`
    divisor on Y away from the ramification locus, plus an integer
    coefficient on each ramified orbit."""

    base_degree: int = 0
    orbit_coeffs: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "orbit_coeffs",
                           tuple(sorted(dict(self.orbit_coeffs).items())))

    @classmethod
    def from_dict(cls, base_degree: int, coeffs: dict[str, int]) -> "InvariantDivisor":
        return cls(base_degree, tuple(coeffs.items()))

    def coeff(self, oid: str) -> int:
        return dict(self.orbit_coeffs).get(oid, 0)


@dataclass(frozen=True)
class LevelDivisor:
    """A divisor on the level-n curve X_n, in the same coordinates."""

    level: int
    base_degree: int
    orbit_coeffs: tuple[tuple[str, int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "orbit_coeffs",
                           tuple(sorted(dict(self.orbit_coeffs).items())))

    def coeff(self, oid: str) -> int:
        return dict(self.orbit_coeffs).get(oid, 0)


def level_zero_divisor(d: InvariantDivisor, t: CoverTower) -> LevelDivisor:
    """The invariant divisor viewed as a level-0 divisor on X itself.

    Coefficients absent from the map are zero; they are materialized here
    because the twisted pushforwards act nontrivially on zero coefficients
    of ramified orbits.
    """
    for oid, _ in d.orbit_coeffs:
        t.orbit(oid)
    coeffs = {o.id: d.coeff(o.id) for o in t.orbits}
    return LevelDivisor(0, d.base_degree, tuple(coeffs.items()))


def orbit_point_count(o: RamifiedOrbit, n: int, g: GroupSpec) -> int:
    """Number of points of X_n lying in the image of the orbit: the orbit
    has p^(v-m) points on X and maps one-to-one below level m."""
    if not 0 <= n <= g.v:
        raise ValidationError(f"level {n} out of range 0..{g.v}")
    return g.p ** (g.v - max(o.depth, n))


def divisor_degree(d: LevelDivisor, t: CoverTower) -> int:
    g = t.group
    deg = d.base_degree * g.p ** (g.v - d.level)
    for oid, c in d.orbit_coeffs:
        deg += c * orbit_point_count(t.orbit(oid), d.level, g)
    return deg


def pushforward_alpha(d: LevelDivisor, t: CoverTower, alpha: int) -> LevelDivisor:
    """Twisted pushforward along the next cover pi_n (n = d.level + 1):
    subtract alpha times the break divisor, push forward, take the
    coefficientwise integral part.

    Orbits unramified in pi_n keep their coefficient; the base part is
    untouched.
    """
    g = t.group
    n = d.level + 1
    if n > g.v:
        raise ValidationError("already at the bottom of the tower")
    if not 0 <= alpha <= g.p - 1:
        raise ValidationError(f"alpha = {alpha} out of range 0..{g.p - 1}")
    coeffs = {}
    for oid, c in d.orbit_coeffs:
        o = t.orbit(oid)
        if o.depth >= n:
            coeffs[oid] = (c - alpha * o.jumps[n - 1]) // g.p
        else:
            coeffs[oid] = c
    return LevelDivisor(n, d.base_degree, tuple(coeffs.items()))


def kani_pushforward(d: InvariantDivisor, t: CoverTower) -> LevelDivisor:
    """Invariant pushforward to the base in one step: the integral part of
    (pi_* D) / #G, which on orbit coefficients is n_P // p^depth."""
    g = t.group
    for oid, _ in d.orbit_coeffs:
        t.orbit(oid)
    coeffs = {o.id: d.coeff(o.id) // g.p ** o.depth for o in t.orbits}
    return LevelDivisor(g.v, d.base_degree, tuple(coeffs.items()))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def validate_strict(t: CoverTower) -> ValidationReport:
    """Check the necessary realizability conditions on the jump data.

    Per orbit, with lower breaks b_i read off the jumps innermost-last:
    no break divisible by p, b non-decreasing, the upper breaks
    u_1 = b_1, u_{i+1} = u_i + (b_{i+1} - b_i) / p^i integral,
    u_{i+1} >= p * u_i, and p does not divide u_{i+1} when the
    inequality is strict.  Genus integrality and nonnegativity at every
    level are enforced by CoverTower construction and rechecked here.
    """
    p = t.group.p
    bad: list[str] = []
    for o in t.orbits:
        if any(n % p == 0 for n in o.jumps):
            bad.append(f"orbit {o.id!r}: break divisible by p in {list(o.jumps)}")
            continue
        b = list(reversed(o.jumps))
        if any(b[i] > b[i + 1] for i in range(len(b) - 1)):
            bad.append(
                f"orbit {o.id!r}: breaks increase down the tower: {list(o.jumps)}")
            continue
        u = [b[0]]
        for i in range(1, len(b)):
            diff = b[i] - b[i - 1]
            if diff % p ** i != 0:
                bad.append(
                    f"orbit {o.id!r}: upper break {i + 1} not integral")
                break
            nxt = u[-1] + diff // p ** i
            if nxt < p * u[-1]:
                bad.append(
                    f"orbit {o.id!r}: upper break {nxt} < p * {u[-1]}")
                break
            if nxt > p * u[-1] and nxt % p == 0:
                bad.append(
                    f"orbit {o.id!r}: new upper break {nxt} divisible by p")
                break
            u.append(nxt)
    try:
        for n in range(t.group.v + 1):
            t.genus(n)
    except (NonIntegralGenus, NegativeGenus) as exc:
        bad.append(f"genus: {exc}")
    return ValidationReport(not bad, tuple(bad))
