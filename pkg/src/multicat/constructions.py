"""Catenation of automata, determinization, minimization and equivalence.

The catenation construction adds no epsilon transitions: every transition
of the left automaton that lands on one of its final states also enters
the initial states of the right automaton, and the right initials become
initial themselves when the left automaton accepts the empty word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence, Union

from .automata import AutomatonError, Dfa, Nfa

Automaton = Union[Dfa, Nfa]


def _as_nfa(fa: Automaton) -> Nfa:
    return fa.to_nfa() if isinstance(fa, Dfa) else fa


def catenate(a: Automaton, b: Automaton) -> Nfa:
    """NFA for ``L(a) L(b)``; ``b``'s states follow ``a``'s, shifted by ``a.state_count``."""
    a, b = _as_nfa(a), _as_nfa(b)
    if a.alphabet_size != b.alphabet_size:
        raise AutomatonError(
            f"alphabet mismatch: {a.alphabet_size} vs {b.alphabet_size} letters")
    shift = a.state_count
    b_initials = frozenset(q + shift for q in b.initials)

    if a.initials & a.finals:
        initials = a.initials | b_initials
    else:
        initials = a.initials

    delta = []
    for row in a.delta:
        delta.append(tuple(
            targets | b_initials if targets & a.finals else targets
            for targets in row))
    for row in b.delta:
        delta.append(tuple(frozenset(q + shift for q in targets) for targets in row))

    return Nfa(
        a.alphabet_size,
        a.state_count + b.state_count,
        initials,
        frozenset(q + shift for q in b.finals),
        tuple(delta),
    )


@dataclass(frozen=True)
class ChainLayout:
    """Where each component of a catenation chain sits in the fused state space."""

    component_sizes: tuple[int, ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        return (0, *accumulate(self.component_sizes))[:-1]

    @property
    def total(self) -> int:
        return sum(self.component_sizes)

    def __len__(self):
        return len(self.component_sizes)


def chain_catenate(dfas: Sequence[Automaton]) -> tuple[Nfa, ChainLayout]:
    """Left-associated fold ``(((A1 A2) A3) ... ) A_alpha``."""
    if not dfas:
        raise AutomatonError("cannot catenate an empty sequence of automata")
    sizes = tuple(fa.state_count for fa in dfas)
    result = _as_nfa(dfas[0])
    for fa in dfas[1:]:
        result = catenate(result, fa)
    return result, ChainLayout(sizes)


def _mask(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_construction(nfa: Nfa) -> tuple[Dfa, list[int]]:
    """Accessible part of the subset automaton.

    Returns the DFA together with the bitmask of NFA states behind each DFA
    state.  States are numbered in BFS discovery order, letters ascending.
    """
    k = nfa.alphabet_size
    images = [[_mask(row[a]) for row in nfa.delta] for a in range(k)]
    final_mask = _mask(nfa.finals)

    start = _mask(nfa.initials)
    index = {start: 0}
    subsets = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(subsets):
        current = subsets[i]
        members = list(_bits(current))
        row = []
        for a in range(k):
            img = images[a]
            target = 0
            for q in members:
                target |= img[q]
            j = index.get(target)
            if j is None:
                j = index[target] = len(subsets)
                subsets.append(target)
            row.append(j)
        delta.append(row)
        i += 1

    finals = frozenset(j for j, s in enumerate(subsets) if s & final_mask)
    return Dfa(k, len(subsets), 0, finals, delta), subsets


def determinize(nfa: Automaton) -> Dfa:
    return subset_construction(_as_nfa(nfa))[0]


def _accessible_part(dfa: Dfa) -> Dfa:
    order = {dfa.initial: 0}
    queue = [dfa.initial]
    for q in queue:
        for p in dfa.delta[q]:
            if p not in order:
                order[p] = len(queue)
                queue.append(p)
    delta = [[order[p] for p in dfa.delta[q]] for q in queue]
    finals = frozenset(order[q] for q in queue if q in dfa.finals)
    return Dfa(dfa.alphabet_size, len(queue), 0, finals, delta)


def state_partition(dfa: Dfa) -> list[int]:
    """Hopcroft refinement; returns a block id for every state.

    Two states share a block iff they are equivalent.
    """
    n, k = dfa.state_count, dfa.alphabet_size
    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for q, row in enumerate(dfa.delta):
        for a, p in enumerate(row):
            inverse[a][p].append(q)

    finals = set(dfa.finals)
    others = set(range(n)) - finals
    blocks = [b for b in (finals, others) if b]
    block_of = [0] * n
    for b, members in enumerate(blocks):
        for q in members:
            block_of[q] = b

    pending = {min(range(len(blocks)), key=lambda b: len(blocks[b]))} if len(blocks) == 2 else set()
    while pending:
        splitter = blocks[pending.pop()]
        for a in range(k):
            pre = {q for p in splitter for q in inverse[a][p]}
            if not pre:
                continue
            hit: dict[int, set[int]] = {}
            for q in pre:
                hit.setdefault(block_of[q], set()).add(q)
            for b, inside in hit.items():
                if len(inside) == len(blocks[b]):
                    continue
                outside = blocks[b] - inside
                blocks[b] = inside
                new = len(blocks)
                blocks.append(outside)
                for q in outside:
                    block_of[q] = new
                if b in pending:
                    pending.add(new)
                else:
                    pending.add(b if len(inside) <= len(outside) else new)
    return block_of


def _canonical(dfa: Dfa) -> Dfa:
    """Renumber states by BFS from the initial state, letters ascending."""
    return _accessible_part(dfa)


def minimize(dfa: Dfa) -> Dfa:
    """The minimal complete DFA of ``L(dfa)``, canonically numbered."""
    acc = _accessible_part(dfa)
    block_of = state_partition(acc)
    count = max(block_of) + 1
    delta = [None] * count
    for q, row in enumerate(acc.delta):
        b = block_of[q]
        if delta[b] is None:
            delta[b] = [block_of[p] for p in row]
    finals = frozenset(block_of[q] for q in acc.finals)
    quotient = Dfa(acc.alphabet_size, count, block_of[acc.initial], finals, delta)
    return _canonical(quotient)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Exact language equality by search over the synchronized product."""
    if a.alphabet_size != b.alphabet_size:
        raise AutomatonError(
            f"alphabet mismatch: {a.alphabet_size} vs {b.alphabet_size} letters")
    start = (a.initial, b.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in a.finals) != (q in b.finals):
            return False
        for x, y in zip(a.delta[p], b.delta[q]):
            if (x, y) not in seen:
                seen.add((x, y))
                queue.append((x, y))
    return True


@dataclass(frozen=True)
class ValidSequence:
    """A subset state split per component: ``(S_1, ..., S_alpha)``."""

    parts: tuple[frozenset[int], ...]

    def p1(self) -> bool:
        """The first component holds exactly one state."""
        return len(self.parts[0]) == 1

    def p2(self) -> bool:
        """An empty component is followed only by empty components."""
        return all(self.parts[k] or not self.parts[k + 1]
                   for k in range(len(self.parts) - 1))

    def p3(self, finals: Sequence[Iterable[int]], initials: Sequence[int]) -> bool:
        """Touching a final state of component k puts the initial of k+1 in S_{k+1}."""
        for k in range(len(self.parts) - 1):
            if not self.parts[k].isdisjoint(finals[k]) and initials[k + 1] not in self.parts[k + 1]:
                return False
        return True

    def is_valid(self, finals: Sequence[Iterable[int]], initials: Sequence[int]) -> bool:
        return self.p1() and self.p2() and self.p3(finals, initials)

    def __str__(self):
        return "(" + ", ".join("{" + ",".join(map(str, sorted(s))) + "}"
                               for s in self.parts) + ")"


def decode_state(subset: Union[int, Iterable[int]], layout: ChainLayout) -> ValidSequence:
    """Split a flat subset of the fused state space at the layout offsets.

    ``subset`` is either a bitmask or an iterable of fused state indices.
    No validity check is performed.
    """
    if not isinstance(subset, int):
        subset = _mask(subset)
    if subset >> layout.total:
        raise AutomatonError("subset refers to states outside the chain")
    parts = []
    for offset, size in zip(layout.offsets, layout.component_sizes):
        chunk = (subset >> offset) & ((1 << size) - 1)
        parts.append(frozenset(_bits(chunk)))
    return ValidSequence(tuple(parts))
