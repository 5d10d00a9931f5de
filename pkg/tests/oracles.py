"""Independent reference computations used by several test modules."""

import itertools

from multicat.automata import Dfa


def words(letters, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(letters), repeat=n)


def concatenation_member(a: Dfa, b: Dfa, word) -> bool:
    return any(a.accepts(word[:i]) and b.accepts(word[i:]) for i in range(len(word) + 1))


def word_set_dfa(letters, accepted, max_len) -> Dfa:
    """Trie DFA over every word of length <= max_len, plus a trap for longer ones."""
    index = {w: i for i, w in enumerate(words(letters, max_len))}
    trap = len(index)
    delta = []
    for w in index:
        delta.append([index.get(w + (a,), trap) for a in range(letters)])
    delta.append([trap] * letters)
    finals = {index[w] for w in accepted}
    return Dfa(letters, trap + 1, index[()], finals, delta)


def bounded_length(dfa: Dfa, max_len) -> Dfa:
    """``L(dfa)`` restricted to words of length <= max_len (product with a counter)."""
    n = dfa.state_count
    trap = n * (max_len + 1)
    delta = []
    for length in range(max_len + 1):
        for q in range(n):
            if length == max_len:
                delta.append([trap] * dfa.alphabet_size)
            else:
                delta.append([(length + 1) * n + p for p in dfa.delta[q]])
    delta.append([trap] * dfa.alphabet_size)
    finals = {length * n + q for length in range(max_len + 1) for q in dfa.finals}
    return Dfa(dfa.alphabet_size, trap + 1, dfa.initial, finals, delta)


def reachable_states(dfa: Dfa):
    seen = {dfa.initial}
    stack = [dfa.initial]
    while stack:
        q = stack.pop()
        for p in dfa.delta[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def state_classes(dfa: Dfa, max_len=None) -> int:
    """Number of reachable states up to agreement on every word of length <= max_len.

    With ``max_len`` at least the state count this is the minimal DFA size.
    """
    if max_len is None:
        max_len = dfa.state_count
    suffixes = list(words(dfa.alphabet_size, max_len))

    def signature(q):
        out = []
        for w in suffixes:
            p = q
            for a in w:
                p = dfa.delta[p][a]
            out.append(p in dfa.finals)
        return tuple(out)

    return len({signature(q) for q in reachable_states(dfa)})


def chain_member(dfas, word) -> bool:
    """Membership in ``L(A_1) ... L(A_alpha)`` by trying every split point."""
    word = tuple(word)
    memo = {}

    def rest(k, start):
        key = (k, start)
        if key not in memo:
            tail = word[start:]
            if k == len(dfas) - 1:
                memo[key] = dfas[k].accepts(tail)
            else:
                memo[key] = any(dfas[k].accepts(word[start:i]) and rest(k + 1, i)
                                for i in range(start, len(word) + 1))
        return memo[key]

    return rest(0, 0)



def access_words(dfa: Dfa):
    """A shortest word reaching each reachable state."""
    found = {dfa.initial: ()}
    frontier = [dfa.initial]
    while frontier:
        nxt = []
        for q in frontier:
            for a, p in enumerate(dfa.delta[q]):
                if p not in found:
                    found[p] = found[q] + (a,)
                    nxt.append(p)
        frontier = nxt
    return found


def separating_word(dfa: Dfa, p, q):
    """A shortest word accepted from exactly one of ``p`` and ``q``, or None."""
    seen = {(p, q): ()}
    frontier = [(p, q)]
    while frontier:
        nxt = []
        for pair in frontier:
            if (pair[0] in dfa.finals) != (pair[1] in dfa.finals):
                return seen[pair]
            for a in range(dfa.alphabet_size):
                succ = (dfa.delta[pair[0]][a], dfa.delta[pair[1]][a])
                if succ not in seen:
                    seen[succ] = seen[pair] + (a,)
                    nxt.append(succ)
        frontier = nxt
    return None


def certified_lower_bound(dfas, candidate: Dfa) -> int:
    """Words read off ``candidate`` that are pairwise inequivalent for the chain language.

    Access words and separating suffixes come from ``candidate``, but every
    membership is decided by :func:`chain_member`, so the returned count is a
    lower bound on the minimal DFA size whether or not ``candidate`` is right.
    """
    prefixes = list(access_words(candidate).values())
    states = list(access_words(candidate))
    suffixes = {()}
    for i, p in enumerate(states):
        for q in states[i + 1:]:
            w = separating_word(candidate, p, q)
            if w is not None:
                suffixes.add(w)
    suffixes = sorted(suffixes)
    return len({tuple(chain_member(dfas, u + v) for v in suffixes) for u in prefixes})
