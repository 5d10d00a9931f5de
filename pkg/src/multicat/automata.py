"""Finite automata over dense integer states and letters.

States are ``0..n-1`` and letters ``0..k-1``.  Both automaton types are
complete and immutable.  Letter names (a, b, sigma_k) only exist in the
text format and CLI layers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


class AutomatonError(ValueError):
    """An automaton or transformation was built from inconsistent data."""


PERMUTATION_KINDS = frozenset({"cycle", "rotation", "transposition", "identity"})


@dataclass(frozen=True)
class Transformation:
    """A total map of ``{0..size-1}`` into itself.

    ``images[k]`` is the image of state ``k``.  ``kind`` is kept for
    pretty-printing only; application always goes through ``images``.
    """

    size: int
    images: tuple[int, ...]
    kind: str = "explicit"
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.size < 1:
            raise AutomatonError(f"transformation size must be positive, got {self.size}")
        if len(self.images) != self.size:
            raise AutomatonError(
                f"expected {self.size} images, got {len(self.images)}")
        for q in self.images:
            if not 0 <= q < self.size:
                raise AutomatonError(f"image {q} outside [0, {self.size - 1}]")
        if self.kind in PERMUTATION_KINDS and len(set(self.images)) != self.size:
            raise AutomatonError(f"{self.kind} must be a permutation")

    def __call__(self, state: int) -> int:
        return self.images[state]

    def then(self, other: Transformation) -> Transformation:
        """Apply ``self`` first, then ``other`` (states act on the right)."""
        if other.size != self.size:
            raise AutomatonError("cannot compose transformations of different sizes")
        return Transformation(self.size, tuple(other.images[q] for q in self.images))

    @property
    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.size

    def label(self) -> str:
        if self.kind == "explicit":
            return "[" + ",".join(map(str, self.images)) + "]"
        if self.params:
            return f"{self.kind}({','.join(map(str, self.params))})"
        return self.kind


def _check_index(i: int, n: int) -> None:
    if not 0 <= i < n:
        raise AutomatonError(f"index {i} outside [0, {n - 1}]")


def cycle(n: int) -> Transformation:
    return Transformation(n, tuple((k + 1) % n for k in range(n)), "cycle")


def rotation(n: int, k: int) -> Transformation:
    """The cycle ``(0, ..., n-1)`` composed with itself ``k`` times."""
    if k < 0:
        raise AutomatonError("rotation amount must be non-negative")
    return Transformation(n, tuple((q + k) % n for q in range(n)), "rotation", (k,))


def transposition(n: int, i: int = 0, j: int = 1) -> Transformation:
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise AutomatonError("transposition needs two distinct states")
    images = list(range(n))
    images[i], images[j] = j, i
    return Transformation(n, tuple(images), "transposition", (i, j))


def contraction(n: int, i: int = 1, j: int = 0) -> Transformation:
    """Send ``i`` onto ``j`` and fix every other state."""
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise AutomatonError("contraction needs two distinct states")
    images = list(range(n))
    images[i] = j
    return Transformation(n, tuple(images), "contraction", (i, j))


def identity(n: int) -> Transformation:
    return Transformation(n, tuple(range(n)), "identity")


def explicit(images: Sequence[int]) -> Transformation:
    return Transformation(len(images), tuple(images))


def make_transformation(kind: str, n: int, *args) -> Transformation:
    """Build a transformation by name.

    ``kind`` is one of ``cycle``, ``rotation`` (args: k),
    ``transposition`` (args: i, j), ``contraction`` (args: i, j; maps i to j),
    ``identity`` or ``explicit`` (args: images).
    """
    if kind == "explicit":
        (images,) = args
        if len(images) != n:
            raise AutomatonError(f"expected {n} images, got {len(images)}")
        return explicit(images)
    builders = {
        "cycle": cycle,
        "rotation": rotation,
        "transposition": transposition,
        "contraction": contraction,
        "identity": identity,
    }
    try:
        builder = builders[kind]
    except KeyError:
        raise AutomatonError(f"unknown transformation kind {kind!r}") from None
    return builder(n, *args)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton; ``delta[q][a]`` is the target state."""

    alphabet_size: int
    state_count: int
    initial: int
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.alphabet_size < 1:
            raise AutomatonError("alphabet must contain at least one letter")
        if self.state_count < 1:
            raise AutomatonError("a complete DFA needs at least one state")
        _check_index(self.initial, self.state_count)
        for f in self.finals:
            _check_index(f, self.state_count)
        if len(self.delta) != self.state_count:
            raise AutomatonError("transition table must have one row per state")
        for row in self.delta:
            if len(row) != self.alphabet_size:
                raise AutomatonError("transition table row has the wrong width")
            for q in row:
                _check_index(q, self.state_count)

    def step(self, state: int, letter: int) -> int:
        return self.delta[state][letter]

    def accepts(self, word: Iterable[int]) -> bool:
        return run_word(self, word) in self.finals

    def to_nfa(self) -> Nfa:
        return Nfa(
            self.alphabet_size,
            self.state_count,
            frozenset({self.initial}),
            self.finals,
            tuple(tuple(frozenset({q}) for q in row) for row in self.delta),
        )


@dataclass(frozen=True)
class Nfa:
    """Complete nondeterministic automaton; ``delta[q][a]`` is a non-empty set."""

    alphabet_size: int
    state_count: int
    initials: frozenset[int]
    finals: frozenset[int]
    delta: tuple[tuple[frozenset[int], ...], ...] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "delta",
            tuple(tuple(frozenset(targets) for targets in row) for row in self.delta))
        if self.alphabet_size < 1:
            raise AutomatonError("alphabet must contain at least one letter")
        if self.state_count < 1:
            raise AutomatonError("an NFA needs at least one state")
        for q in self.initials | self.finals:
            _check_index(q, self.state_count)
        if len(self.delta) != self.state_count:
            raise AutomatonError("transition table must have one row per state")
        for state, row in enumerate(self.delta):
            if len(row) != self.alphabet_size:
                raise AutomatonError("transition table row has the wrong width")
            for letter, targets in enumerate(row):
                if not targets:
                    raise AutomatonError(
                        f"incomplete NFA: no transition from {state} on {letter}")
                for q in targets:
                    _check_index(q, self.state_count)

    def accepts(self, word: Iterable[int]) -> bool:
        current = set(self.initials)
        for letter in word:
            _check_letter(letter, self.alphabet_size)
            current = {p for q in current for p in self.delta[q][letter]}
        return not current.isdisjoint(self.finals)


def _check_letter(letter: int, alphabet_size: int) -> None:
    if not 0 <= letter < alphabet_size:
        raise AutomatonError(f"letter {letter} outside alphabet of size {alphabet_size}")


def dfa_from_transformations(n: int, letter_actions: Sequence[Transformation],
                             initial: int = 0, finals: Iterable[int] = ()) -> Dfa:
    """DFA on ``n`` states where letter ``a`` acts as ``letter_actions[a]``."""
    if not letter_actions:
        raise AutomatonError("at least one letter action is required")
    for t in letter_actions:
        if t.size != n:
            raise AutomatonError(f"transformation of size {t.size} on a {n}-state DFA")
    delta = tuple(tuple(t.images[q] for t in letter_actions) for q in range(n))
    return Dfa(len(letter_actions), n, initial, frozenset(finals), delta)


def letter_action(dfa: Dfa, letter: int) -> Transformation:
    """The transformation induced by one letter of a DFA."""
    _check_letter(letter, dfa.alphabet_size)
    return explicit([row[letter] for row in dfa.delta])


def run_word(dfa: Dfa, word: Iterable[int], start: int | None = None) -> int:
    state = dfa.initial if start is None else start
    for letter in word:
        _check_letter(letter, dfa.alphabet_size)
        state = dfa.delta[state][letter]
    return state


def accessible_states(fa: Union[Dfa, Nfa]) -> frozenset[int]:
    if isinstance(fa, Dfa):
        starts = [fa.initial]
        successors = lambda q: fa.delta[q]  # noqa: E731
    else:
        starts = list(fa.initials)
        successors = lambda q: (p for targets in fa.delta[q] for p in targets)  # noqa: E731
    seen = set(starts)
    queue = deque(starts)
    while queue:
        q = queue.popleft()
        for p in successors(q):
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return frozenset(seen)
