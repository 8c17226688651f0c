"""Brute-force ground truth on Artin-Schreier curves y^p - y = x^m.

For p prime and gcd(m, p) = 1 the affine model is integrally closed with
a single, totally ramified point at infinity; the order-p automorphism
y -> y + 1 generates the Galois group over the x-line.  The section
space of n * P_inf has the monomial basis {x^i y^j : pi + mj <= n,
j < p}, on which the action is exact linear algebra over F_p, so the
Jordan type of the generator is computable by ranks of powers of
(sigma - 1) with no dependence on the tower machinery it cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclic_rep import Decomposition, GroupSpec, _is_prime
from .cover_tower import CoverTower, InvariantDivisor, RamifiedOrbit
from .errors import DegreeTooSmall, ValidationError


@dataclass(frozen=True)
class ASCurve:
    """The smooth projective curve with affine model y^p - y = x^m."""

    p: int
    m: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValidationError(f"p = {self.p} is not prime")
        if self.m < 1 or math.gcd(self.m, self.p) != 1:
            raise ValidationError(
                f"m = {self.m} must be positive and prime to p = {self.p}")

    @property
    def genus(self) -> int:
        return (self.p - 1) * (self.m - 1) // 2


def riemann_roch_basis(c: ASCurve, n: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) of the monomials x^i y^j spanning L(n * P_inf).

    Pole orders at infinity are pi + mj; since gcd(m, p) = 1 and j < p
    they are pairwise distinct, so the monomials are independent.
    """
    if n < 0:
        raise ValidationError(f"n = {n} must be >= 0")
    basis = []
    for j in range(c.p):
        for i in range((n - c.m * j) // c.p + 1):
            if c.p * i + c.m * j <= n:
                basis.append((i, j))
    return sorted(basis)


def sigma_matrix(c: ASCurve, basis: list[tuple[int, int]]) -> list[list[int]]:
    """Matrix of y -> y + 1 on the monomial basis, over F_p.

    Column for (i, j) expands x^i (y + 1)^j; every monomial that appears
    has pole order <= that of x^i y^j, so it stays inside the basis.
    """
    index = {b: k for k, b in enumerate(basis)}
    size = len(basis)
    mat = [[0] * size for _ in range(size)]
    for col, (i, j) in enumerate(basis):
        for t in range(j + 1):
            mat[index[(i, t)]][col] = math.comb(j, t) % c.p
    return mat


def _rank_mod_p(mat: list[list[int]], p: int) -> int:
    """Rank by Gaussian elimination with exact arithmetic mod p."""
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][col] % p != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = pow(a[rank][col] % p, -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col] % p != 0:
                f = a[r][col] % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _mat_mul_mod(a: list[list[int]], b: list[list[int]], p: int) -> list[list[int]]:
    size = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(size)) % p
             for j in range(size)] for i in range(size)]


def jordan_type_of_matrix(mat: list[list[int]], p: int) -> Decomposition:
    """Jordan type of a unipotent matrix over F_p from the rank sequence of
    powers of (M - I): the size-s multiplicity is r_{s-1} - 2 r_s + r_{s+1}."""
    size = len(mat)
    nil = [[(mat[i][j] - (1 if i == j else 0)) % p for j in range(size)]
           for i in range(size)]
    ranks = [size]
    power = nil
    while ranks[-1] > 0:
        ranks.append(_rank_mod_p(power, p))
        power = _mat_mul_mod(power, nil, p)
    ranks.append(0)
    mult = {}
    for s in range(1, len(ranks) - 1):
        m = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1]
        if m:
            mult[s] = m
    return Decomposition.from_dict(mult)


def jordan_type(c: ASCurve, n: int) -> Decomposition:
    """Jordan type of the generator on H^0(X, L(n * P_inf))."""
    if n <= 2 * c.genus - 2:
        raise DegreeTooSmall(
            f"n = {n} <= 2g - 2 = {2 * c.genus - 2}")
    basis = riemann_roch_basis(c, n)
    return jordan_type_of_matrix(sigma_matrix(c, basis), c.p)


def to_tower(c: ASCurve):
    """The curve as a one-step cover tower over the x-line, plus the map
    n -> invariant divisor n * P_inf.  The break at infinity is m."""
    tower = CoverTower(GroupSpec(c.p, 1), 0,
                       (RamifiedOrbit("P_inf", 1, (c.m,)),))

    def divisor(n: int) -> InvariantDivisor:
        return InvariantDivisor.from_dict(0, {"P_inf": n})

    return tower, divisor
