"""Cartan datum: an index set with a symmetric pairing refined by an Omega matrix.

The three integer forms on basis indices:
    angle(i,j)   = Omega[i][j]
    bracket(i,j) = 2*delta_ij*Omega[i][i] - Omega[i][j]
    dot(i,j)     = angle(i,j) + angle(j,i)
all extend bilinearly to rational coordinate vectors.

Degrees are tuples of nonnegative ints (elements of N[I]); weights are tuples
of Fractions (Q[I]).  Both feed the multiplicative forms brace, f, c that
produce the v/t twist monomials used everywhere downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .ratfield import RatFunc, mono


Degree = tuple
Weight = tuple


@dataclass(frozen=True)
class CartanSpec:
    rank: int
    dot: tuple
    omega: tuple


def make_spec(rank: int, dot_rows, omega_rows) -> CartanSpec:
    return CartanSpec(
        rank=rank,
        dot=tuple(tuple(int(x) for x in row) for row in dot_rows),
        omega=tuple(tuple(int(x) for x in row) for row in omega_rows),
    )


def validate(spec: CartanSpec) -> list:
    """Empty list when the datum is admissible; else named condition failures."""
    report = []
    n = spec.rank
    if n < 1:
        return ["rank must be a positive integer"]
    for name, m in (("dot", spec.dot), ("omega", spec.omega)):
        if len(m) != n or any(len(row) != n for row in m):
            return [f"{name} matrix must be {n}x{n}"]
    for i in range(n):
        for j in range(n):
            if spec.dot[i][j] != spec.dot[j][i]:
                report.append(f"dot symmetry: dot[{i + 1}][{j + 1}] != dot[{j + 1}][{i + 1}]")
    for i in range(n):
        if spec.omega[i][i] <= 0:
            report.append(f"(a) omega[{i + 1}][{i + 1}] must be positive")
        for j in range(n):
            if i != j and spec.omega[i][j] > 0:
                report.append(f"(a) omega[{i + 1}][{j + 1}] must be <= 0 off the diagonal")
    for i in range(n):
        if spec.omega[i][i] <= 0:
            continue
        for j in range(n):
            if i == j:
                continue
            s = spec.omega[i][j] + spec.omega[j][i]
            if s % spec.omega[i][i] != 0 or s // spec.omega[i][i] > 0:
                report.append(
                    f"(b) (omega[{i + 1}][{j + 1}]+omega[{j + 1}][{i + 1}])/omega[{i + 1}][{i + 1}]"
                    " must be a nonpositive integer"
                )
    diag_gcd = math.gcd(*(spec.omega[i][i] for i in range(n)))
    if diag_gcd != 1:
        report.append(f"(c) gcd of omega diagonal is {diag_gcd}, must be 1")
    for i in range(n):
        for j in range(n):
            if spec.dot[i][j] != spec.omega[i][j] + spec.omega[j][i]:
                report.append(
                    f"dot consistency: dot[{i + 1}][{j + 1}] != omega[{i + 1}][{j + 1}]"
                    f"+omega[{j + 1}][{i + 1}]"
                )
    # deduplicate while keeping first-seen order
    seen = set()
    return [r for r in report if not (r in seen or seen.add(r))]


def unit(spec: CartanSpec, i: int) -> tuple:
    """Basis vector for index i (0-based), usable as Degree or Weight."""
    return tuple(1 if k == i else 0 for k in range(spec.rank))


def weight(coords) -> Weight:
    return tuple(Fraction(x) for x in coords)


def _bilinear(matrix, lam, mu) -> Fraction:
    total = Fraction(0)
    for i, a in enumerate(lam):
        if not a:
            continue
        row = matrix[i]
        for j, b in enumerate(mu):
            if b:
                total += Fraction(a) * Fraction(b) * row[j]
    return total


def angle(spec: CartanSpec, lam, mu) -> Fraction:
    return _bilinear(spec.omega, lam, mu)


def bracket(spec: CartanSpec, lam, mu) -> Fraction:
    total = Fraction(0)
    for i, a in enumerate(lam):
        if not a:
            continue
        for j, b in enumerate(mu):
            if not b:
                continue
            val = 2 * spec.omega[i][i] - spec.omega[i][j] if i == j else -spec.omega[i][j]
            total += Fraction(a) * Fraction(b) * val
    return total


def dot(spec: CartanSpec, lam, mu) -> Fraction:
    return _bilinear(spec.dot, lam, mu)


def brace(spec: CartanSpec, lam, mu) -> RatFunc:
    """v^(lam.mu) t^(<mu,lam> - <lam,mu>), multiplicative in each slot."""
    return mono(1, dot(spec, lam, mu), angle(spec, mu, lam) - angle(spec, lam, mu))


def f(spec: CartanSpec, lam, mu) -> RatFunc:
    """Inverse of brace: v^(-lam.mu) t^(<lam,mu> - <mu,lam>)."""
    return mono(1, -dot(spec, lam, mu), angle(spec, lam, mu) - angle(spec, mu, lam))


def c(spec: CartanSpec, i: int, lam) -> RatFunc:
    """c_{i,lam} = t^(<lam,i> - <i,lam>) for a generator index i (0-based)."""
    e = unit(spec, i)
    return mono(1, 0, angle(spec, lam, e) - angle(spec, e, lam))


def d_i(spec: CartanSpec, i: int) -> int:
    """Exponent d with v_i = v^d, t_i = t^d; equals omega[i][i] = (i.i)/2."""
    return spec.omega[i][i]


def v_deg(spec: CartanSpec, nu) -> RatFunc:
    """v_nu = prod v_i^(nu_i); accepts rational coordinates."""
    e = sum((Fraction(x) * spec.omega[i][i] for i, x in enumerate(nu)), Fraction(0))
    return mono(1, e, 0)


def t_deg(spec: CartanSpec, nu) -> RatFunc:
    e = sum((Fraction(x) * spec.omega[i][i] for i, x in enumerate(nu)), Fraction(0))
    return mono(1, 0, e)


def tr(nu) -> int:
    return sum(nu)


def deg_add(a: Degree, b: Degree) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def deg_sub(a: Degree, b: Degree):
    """Componentwise difference, or None when it leaves N[I]."""
    out = tuple(x - y for x, y in zip(a, b))
    return out if all(x >= 0 for x in out) else None


def weight_add(a, b) -> Weight:
    return tuple(Fraction(x) + Fraction(y) for x, y in zip(a, b))


def weight_sub(a, b) -> Weight:
    return tuple(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def weight_neg(a) -> Weight:
    return tuple(-Fraction(x) for x in a)


def zero_degree(spec: CartanSpec) -> Degree:
    return (0,) * spec.rank


def degrees_of_tr(rank: int, n: int):
    """All of N[I] with coordinate sum n, in lexicographic order."""
    if rank == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for rest in degrees_of_tr(rank - 1, n - head):
            yield (head,) + rest


def degrees_tr_upto(rank: int, bound: int):
    for n in range(bound + 1):
        yield from degrees_of_tr(rank, n)


def degrees_below(mu: Degree):
    """All nu in N[I] with 0 <= nu <= mu componentwise, lexicographic."""
    for combo in iproduct(*(range(x + 1) for x in mu)):
        yield combo
