"""Plain-text automaton format.

::

    dfa <state_count> <alphabet_size>
    initial <i>
    finals <f1> <f2> ...
    trans <state> <letter> <state>

NFAs use the header ``nfa``, an ``initials`` line, and one ``trans`` line
per target.  ``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Union

from .automata import Dfa, Nfa


class FormatError(ValueError):
    pass


def format_automaton(fa: Union[Dfa, Nfa], comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    if isinstance(fa, Dfa):
        lines.append(f"dfa {fa.state_count} {fa.alphabet_size}")
        lines.append(f"initial {fa.initial}")
        lines.append(" ".join(["finals", *map(str, sorted(fa.finals))]))
        for q, row in enumerate(fa.delta):
            for a, p in enumerate(row):
                lines.append(f"trans {q} {a} {p}")
    else:
        lines.append(f"nfa {fa.state_count} {fa.alphabet_size}")
        lines.append(" ".join(["initials", *map(str, sorted(fa.initials))]))
        lines.append(" ".join(["finals", *map(str, sorted(fa.finals))]))
        for q, row in enumerate(fa.delta):
            for a, targets in enumerate(row):
                for p in sorted(targets):
                    lines.append(f"trans {q} {a} {p}")
    return "\n".join(lines) + "\n"


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_automaton(text: str) -> Union[Dfa, Nfa]:
    header = None
    initials: list[int] | None = None
    finals: list[int] | None = None
    trans: dict[tuple[int, int], list[int]] = defaultdict(list)

    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        key, args = tokens[0], tokens[1:]
        if header is None:
            if key not in ("dfa", "nfa") or len(args) != 2:
                raise FormatError(f"line {lineno}: expected 'dfa|nfa <states> <letters>'")
            header = (key, *_ints(args, lineno))
            continue
        kind = header[0]
        if key == ("initial" if kind == "dfa" else "initials"):
            if initials is not None:
                raise FormatError(f"line {lineno}: duplicate {key} line")
            initials = _ints(args, lineno)
            if kind == "dfa" and len(initials) != 1:
                raise FormatError(f"line {lineno}: a DFA has exactly one initial state")
        elif key == "finals":
            if finals is not None:
                raise FormatError(f"line {lineno}: duplicate finals line")
            finals = _ints(args, lineno)
        elif key == "trans":
            if len(args) != 3:
                raise FormatError(f"line {lineno}: expected 'trans <state> <letter> <state>'")
            q, a, p = _ints(args, lineno)
            if kind == "dfa" and (q, a) in trans:
                raise FormatError(f"line {lineno}: second transition for ({q}, {a})")
            trans[q, a].append(p)
        else:
            raise FormatError(f"line {lineno}: unknown directive {key!r}")

    if header is None:
        raise FormatError("empty automaton description")
    kind, n, k = header
    if initials is None:
        raise FormatError("missing initial state line")
    if finals is None:
        finals = []
    missing = [(q, a) for q in range(n) for a in range(k) if (q, a) not in trans]
    if missing:
        raise FormatError(f"incomplete transition table, first missing pair {missing[0]}")
    extra = [qa for qa in trans if not (0 <= qa[0] < n and 0 <= qa[1] < k)]
    if extra:
        raise FormatError(f"transition {extra[0]} outside the declared automaton")
    if kind == "dfa":
        delta = [[trans[q, a][0] for a in range(k)] for q in range(n)]
        return Dfa(k, n, initials[0], frozenset(finals), delta)
    delta = [[frozenset(trans[q, a]) for a in range(k)] for q in range(n)]
    return Nfa(k, n, frozenset(initials), frozenset(finals), delta)
