"""Brzozowski witness families for multiple catenation.

Every component is a Brzozowski automaton: states ``0..n-1``, initial 0,
single final ``n-1``, and every letter acting as the cycle ``p``, the
transposition ``t = (0 1)``, the contraction ``c`` of 1 onto 0, or the
identity.

Letter indexing.  The tables name letters ``sigma_1 .. sigma_K`` where
``K`` is the alphabet size; ``sigma_k`` is letter index ``K - k``.  With
``a = 0, b = 1, c = 2`` this makes the alpha-letter family coincide
letter for letter with the two- and three-letter witnesses
(``sigma_1 = b, sigma_2 = a`` for two automata and
``sigma_1 = c, sigma_2 = b, sigma_3 = a`` for three).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .automata import Dfa, contraction, cycle, dfa_from_transformations, identity, transposition
from .bounds import as_profile

FAMILIES = ("table1", "table2", "two_letter", "three_letter")

# action codes as written in the tables
CYCLE, TRANSPOSITION, CONTRACTION, IDENTITY = "p", "t", "c", "1"


class WitnessError(ValueError):
    pass


def _action(code: str, n: int):
    return {
        CYCLE: cycle,
        TRANSPOSITION: transposition,
        CONTRACTION: contraction,
        IDENTITY: identity,
    }[code](n)


def brzozowski(n: int, codes: Sequence[str]) -> Dfa:
    """Brzozowski DFA on ``n`` states where letter ``a`` acts as ``codes[a]``."""
    if n < 2:
        raise WitnessError(f"witness automata need at least 2 states, got {n}")
    return dfa_from_transformations(n, [_action(code, n) for code in codes], 0, {n - 1})


def table_codes(kind: str, alpha: int) -> list[list[str]]:
    """Action codes ``codes[k][letter]`` for automaton ``A_{k+1}`` of a family."""
    if kind == "table1":
        letters = alpha + 1
        last_has_transposition = True
    elif kind == "table2":
        if alpha < 2:
            raise WitnessError("the alpha-letter family needs alpha >= 2")
        letters = alpha
        last_has_transposition = False
    else:
        raise WitnessError(f"no generic table for family {kind!r}")

    def index(sigma: int) -> int:
        return letters - sigma

    table = []
    for k in range(1, alpha + 1):
        codes = [IDENTITY] * letters
        if k > 1:
            codes[index(k - 1)] = CONTRACTION
        if k < alpha or last_has_transposition:
            codes[index(k)] = TRANSPOSITION
            codes[index(k + 1)] = CYCLE
        else:
            # last automaton of the alpha-letter family: cycle where the
            # transposition would be, inferred from the 2- and 3-automaton tables
            codes[index(k)] = CYCLE
        table.append(codes)
    return table


def build_table1(sizes: Sequence[int]) -> list[Dfa]:
    """``alpha`` automata over ``alpha + 1`` letters.

    ``A_k`` has ``sigma_{k-1}`` as contraction (none for ``A_1``),
    ``sigma_k`` as transposition and ``sigma_{k+1}`` as cycle.
    """
    sizes = _sizes(sizes)
    return [brzozowski(n, codes) for n, codes in zip(sizes, table_codes("table1", len(sizes)))]


def build_table2(sizes: Sequence[int]) -> list[Dfa]:
    """``alpha`` automata over ``alpha`` letters (the conjectured witnesses).

    Same pattern as :func:`build_table1` for ``k < alpha``; ``A_alpha`` has
    ``sigma_{alpha-1}`` as contraction and ``sigma_alpha`` as cycle.
    """
    sizes = _sizes(sizes)
    return [brzozowski(n, codes) for n, codes in zip(sizes, table_codes("table2", len(sizes)))]


def build_two_letter(m: int, n: int) -> tuple[Dfa, Dfa]:
    # letters: a = 0, b = 1
    return brzozowski(m, [CYCLE, TRANSPOSITION]), brzozowski(n, [CYCLE, CONTRACTION])


def build_three_letter(m: int, n: int, p: int) -> tuple[Dfa, Dfa, Dfa]:
    # letters: a = 0, b = 1, c = 2
    return (
        brzozowski(m, [IDENTITY, CYCLE, TRANSPOSITION]),
        brzozowski(n, [CYCLE, TRANSPOSITION, CONTRACTION]),
        brzozowski(p, [CYCLE, CONTRACTION, IDENTITY]),
    )


def _sizes(sizes):
    try:
        return as_profile(sizes)
    except ValueError as exc:
        raise WitnessError(str(exc)) from None


@dataclass(frozen=True)
class WitnessFamily:
    kind: str
    sizes: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise WitnessError(f"unknown family {self.kind!r}; choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "sizes", _sizes(self.sizes))
        alpha = len(self.sizes)
        required = {"two_letter": 2, "three_letter": 3}.get(self.kind)
        if required is not None and alpha != required:
            raise WitnessError(f"family {self.kind} needs exactly {required} sizes, got {alpha}")
        if self.kind == "table2" and alpha < 2:
            raise WitnessError("family table2 needs at least 2 sizes")

    @property
    def alpha(self) -> int:
        return len(self.sizes)

    @property
    def alphabet_size(self) -> int:
        return self.alpha + 1 if self.kind == "table1" else self.alpha

    def build(self) -> list[Dfa]:
        if self.kind == "table1":
            return build_table1(self.sizes)
        if self.kind == "table2":
            return build_table2(self.sizes)
        if self.kind == "two_letter":
            return list(build_two_letter(*self.sizes))
        return list(build_three_letter(*self.sizes))

    def manifest_line(self) -> str:
        return (f"# family={self.kind} alpha={self.alpha} "
                f"sizes={','.join(map(str, self.sizes))}")


def letter_name(kind: str, alpha: int, letter: int) -> str:
    """Human name of a letter index for a family."""
    if kind in ("two_letter", "three_letter"):
        return "abc"[letter]
    size = alpha + 1 if kind == "table1" else alpha
    return f"sigma{size - letter}"
