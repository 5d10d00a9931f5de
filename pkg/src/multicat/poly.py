"""Sparse multivariate polynomials with exact rational coefficients.

Variables are named ``x1, x2, ...``, ``y`` and ``z``; they are ordered in
that sequence.  Terms print in graded lexicographic order, for instance
``3/2*x1*x2*y + x1*z - z``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, Fraction]

_XVAR = re.compile(r"x([1-9][0-9]*)\Z")


def var_key(name: str) -> tuple[int, int]:
    m = _XVAR.match(name)
    if m:
        return (0, int(m.group(1)))
    if name == "y":
        return (1, 0)
    if name == "z":
        return (2, 0)
    raise ValueError(f"unsupported variable name {name!r}")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda ve: var_key(ve[0])))


def _grlex_key(mono: Monomial):
    degree = sum(e for _, e in mono)
    return (-degree, [(var_key(v), -e) for v, e in mono])


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class MPoly:
    """Immutable polynomial stored as ``{monomial: coefficient}`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                mono = tuple(sorted(((v, e) for v, e in mono if e), key=lambda ve: var_key(ve[0])))
                if any(e < 0 for _, e in mono):
                    raise ValueError("negative exponent in polynomial term")
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def var(cls, name: str) -> MPoly:
        var_key(name)
        return cls({((name, 1),): 1})

    @classmethod
    def const(cls, c: Scalar) -> MPoly:
        return cls({(): c})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> list[str]:
        names = {v for mono in self._terms for v, _ in mono}
        return sorted(names, key=var_key)

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _coerce(other) -> MPoly | None:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return MPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return MPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = MPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def coefficient(self, name: str, exponent: int = 1) -> MPoly:
        """Coefficient of ``name**exponent``, viewing the other variables as coefficients."""
        terms = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            if exps.get(name, 0) == exponent:
                exps.pop(name, None)
                terms[tuple(exps.items())] = c
        return MPoly(terms)

    def substitute(self, values: Mapping[str, Union[MPoly, Scalar]]) -> MPoly:
        """Replace variables by polynomials or numbers; others stay symbolic."""
        result = MPoly()
        for mono, c in self._terms.items():
            term = MPoly.const(c)
            for v, e in mono:
                if v in values:
                    term = term * (self._coerce(values[v]) ** e)
                else:
                    term = term * MPoly({((v, e),): 1})
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a full assignment of the variables."""
        total = Fraction(0)
        for mono, c in self._terms.items():
            for v, e in mono:
                try:
                    c = c * Fraction(values[v]) ** e
                except KeyError:
                    raise ValueError(f"no value given for variable {v}") from None
            total += c
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            c = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if c != 1 or not factors:
                factors.insert(0, _fmt_fraction(c))
            body = "*".join(factors)
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"MPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> MPoly:
        """Read back the form produced by ``str``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sign + body for sign, body in pieces) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        result = cls()
        for sign, body in pieces:
            coeff = Fraction(1)
            mono: dict[str, int] = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= Fraction(factor)
                    continue
                m = re.fullmatch(r"(x[1-9]\d*|y|z)(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                mono[m.group(1)] = mono.get(m.group(1), 0) + int(m.group(2) or 1)
            if sign == "-":
                coeff = -coeff
            result = result + cls({tuple(mono.items()): coeff})
        return result


def x(j: int) -> MPoly:
    return MPoly.var(f"x{j}")


Y = MPoly.var("y")
Z = MPoly.var("z")
ONE = MPoly.const(1)
