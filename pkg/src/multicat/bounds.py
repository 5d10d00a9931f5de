"""Counting valid states of a catenation chain.

A chain of ``alpha`` DFAs of sizes ``(n_1, ..., n_alpha)``, each with
initial state 0 and the single final state ``n_j - 1``, determinizes to
states ``(S_1, ..., S_alpha)`` that satisfy

* P1: ``S_1`` is a singleton,
* P2: an empty ``S_k`` forces ``S_{k+1}`` empty,
* P3: ``n_k - 1 in S_k`` forces ``0 in S_{k+1}``.

Their number is computed three ways: by enumeration, by a pair of
crossing recurrences, and by summing signed monomials over integer
compositions.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .poly import ONE, Y, Z, MPoly, x

BRUTE_FORCE_LIMIT = 24
THREE_HALVES = Fraction(3, 2)


class ProfileError(ValueError):
    pass


def as_profile(sizes: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(int(n) for n in sizes)
    if not sizes:
        raise ProfileError("a size profile needs at least one automaton")
    for n in sizes:
        if n < 2:
            raise ProfileError(f"automaton sizes must be at least 2, got {n}")
    return sizes


# -- enumeration ------------------------------------------------------------

def brute_force_count(sizes: Sequence[int], limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Count valid sequences by trying every tuple of subsets."""
    sizes = as_profile(sizes)
    if sum(sizes) > limit:
        raise ProfileError(
            f"profile {sizes} has {sum(sizes)} states in total, enumeration is capped at {limit}")
    first = [1 << q for q in range(sizes[0])]
    rest = [range(1 << n) for n in sizes[1:]]
    finals = [1 << (n - 1) for n in sizes]
    count = 0
    for head in first:
        for tail in product(*rest):
            parts = (head, *tail)
            ok = True
            for k in range(len(parts) - 1):
                if not parts[k] and parts[k + 1]:
                    ok = False
                    break
                if parts[k] & finals[k] and not parts[k + 1] & 1:
                    ok = False
                    break
            count += ok
    return count


# -- crossing recurrence ----------------------------------------------------

def crossing_counts(sizes: Sequence[int]) -> tuple[list[int], list[int]]:
    """Return ``(minus, plus)`` where ``minus[j-1]`` counts valid sequences of
    ``j`` non-empty sets whose last set misses the final state and ``plus[j-1]``
    those whose last set contains it."""
    sizes = as_profile(sizes)
    minus = [sizes[0] - 1]
    plus = [1]
    for n in sizes[1:]:
        m_prev, p_prev = minus[-1], plus[-1]
        minus.append((2 ** (n - 1) - 1) * m_prev + 2 ** (n - 2) * p_prev)
        plus.append(2 ** (n - 1) * m_prev + 2 ** (n - 2) * p_prev)
    return minus, plus


def recurrence_count(sizes: Sequence[int]) -> int:
    minus, plus = crossing_counts(sizes)
    return plus[-1] + sum(minus)


# -- compositions -----------------------------------------------------------

def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` in lexicographic order, from ``(1, ..., 1)`` to ``(n,)``."""
    if n < 1:
        raise ValueError(f"compositions are defined for n >= 1, got {n}")
    c = [1] * n
    while True:
        yield tuple(c)
        if len(c) == 1:
            return
        last = c.pop()
        c[-1] += 1
        c.extend([1] * (last - 1))


def theta(c: Sequence[int]) -> int:
    """Number of parts equal to 1, the last part excluded."""
    return sum(1 for part in c[:-1] if part == 1)


def theta_tilde(c: Sequence[int]) -> int:
    """Number of parts equal to 1, first and last parts excluded."""
    return sum(1 for part in c[1:-1] if part == 1)


def bracket_monomial(c: Sequence[int]) -> MPoly:
    """``x_1 x_{1+c_1} x_{1+c_1+c_2} ...`` with one factor per part; zero for ``()``."""
    if not c:
        return MPoly()
    result = x(1)
    position = 1
    for part in c[:-1]:
        position += part
        result = result * x(position)
    return result


def brace_monomial(c: Sequence[int]) -> MPoly:
    """``x_{c_1} x_{c_1+c_2} ...`` over the proper prefix sums; 1 for a single part."""
    if not c:
        raise ValueError("the brace monomial needs a non-empty composition")
    result = ONE
    position = 0
    for part in c[:-1]:
        position += part
        result = result * x(position)
    return result


def _signed_sum(terms) -> MPoly:
    total = MPoly()
    for sign, weight, mono in terms:
        total = total + mono * (sign * weight)
    return total


def m_poly_by_compositions(i: int) -> MPoly:
    if i == 0:
        return MPoly()  # only the empty composition, and [()] = 0
    return _signed_sum(
        ((-1) ** (len(c) + i), THREE_HALVES ** theta(c), bracket_monomial(c))
        for c in compositions(i))


def m_polys(count: int) -> list[MPoly]:
    """``m_0, ..., m_{count-1}`` from the two-term recurrence."""
    ms = [MPoly(), x(1)]
    for i in range(2, count):
        ms.append((THREE_HALVES * x(i) - 1) * ms[i - 1] + Fraction(1, 2) * x(i) * ms[i - 2])
    return ms[:count]


def z_coefficient_by_compositions(i: int) -> MPoly:
    return _signed_sum(
        ((-1) ** (len(c) + i + 1), THREE_HALVES ** theta_tilde(c), brace_monomial(c))
        for c in compositions(i + 1))


# -- generating polynomials -------------------------------------------------

def s_polys(alpha: int) -> tuple[list[MPoly], list[MPoly]]:
    """``(s_minus, s_plus)``, each of length ``alpha`` (indices 0..alpha-1)."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    s_minus = [Z]
    s_plus = [2 * Y]
    half = Fraction(1, 2)
    for j in range(1, alpha):
        xj = x(j)
        s_minus.append((xj - 1) * s_minus[j - 1] + half * xj * s_plus[j - 1])
        s_plus.append(xj * s_minus[j - 1] + half * xj * s_plus[j - 1])
    return s_minus, s_plus


def s_total(alpha: int) -> MPoly:
    """``s_{alpha-1}``: gives the valid-state count at ``x_j = 2**(n_{j+1}-1)``."""
    s_minus, s_plus = s_polys(alpha)
    return s_plus[-1] + sum(s_minus, MPoly())


@lru_cache(maxsize=None)
def r_poly(alpha: int) -> MPoly:
    """``r_{alpha-1}``: ``s_{alpha-1}`` with ``x_{alpha-1}`` halved."""
    s = s_total(alpha)
    if alpha == 1:
        return s
    last = f"x{alpha - 1}"
    return s.substitute({last: Fraction(1, 2) * MPoly.var(last)})


@lru_cache(maxsize=None)
def r_expanded(alpha: int) -> MPoly:
    """``r_{alpha-1}`` summed directly over compositions with an odd last part.

    For ``alpha = 1`` the y-sum runs over compositions of 0.  The empty
    composition has no last part, so the sum is taken to be 2: that is the
    ``s_plus_0 = 2y`` term, which no halving touches, and it gives back
    ``r_0 = 2y + z``.
    """
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    if alpha == 1:
        return 2 * Y + Z
    y_part = _signed_sum(
        ((-1) ** (len(c) + alpha - 1), THREE_HALVES ** theta(c), bracket_monomial(c))
        for c in compositions(alpha - 1) if c[-1] % 2)
    z_part = _signed_sum(
        ((-1) ** (len(c) + alpha), THREE_HALVES ** theta_tilde(c), brace_monomial(c))
        for c in compositions(alpha) if c[-1] % 2)
    return Y * y_part + Z * z_part


def substitution(sizes: Sequence[int]) -> dict[str, Fraction]:
    """Variable values that turn ``r_{alpha-1}`` into the bound for ``sizes``."""
    sizes = as_profile(sizes)
    alpha = len(sizes)
    values = {f"x{j}": Fraction(2) ** (sizes[j] - 1) for j in range(1, alpha - 1)}
    if alpha >= 2:
        values[f"x{alpha - 1}"] = Fraction(2) ** sizes[alpha - 1]
    values["y"] = Fraction(1, 2)
    values["z"] = Fraction(sizes[0] - 1)
    return values


def formula_count(sizes: Sequence[int], expanded: bool = True) -> int:
    """Evaluate ``r_{alpha-1}`` at the size substitution.

    ``expanded`` selects the composition-sum polynomial; otherwise the
    polynomial recurrence is used.
    """
    sizes = as_profile(sizes)
    alpha = len(sizes)
    poly = r_expanded(alpha) if expanded else r_poly(alpha)
    value = poly.evaluate(substitution(sizes))
    if value.denominator != 1:
        raise ArithmeticError(f"bound polynomial evaluated to non-integer {value} at {sizes}")
    return value.numerator
