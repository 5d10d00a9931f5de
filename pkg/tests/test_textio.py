import random

import pytest

from conftest import random_dfa
from multicat.automata import AutomatonError
from multicat.constructions import catenate
from multicat.textio import FormatError, format_automaton, parse_automaton
from multicat.witnesses import build_two_letter

TWO_STATE = """\
# a comment
dfa 2 2
initial 0
finals 1   # trailing comment
trans 0 0 1
trans 0 1 0
trans 1 0 0
trans 1 1 1
"""


def test_parse_example():
    d = parse_automaton(TWO_STATE)
    assert d.delta == ((1, 0), (0, 1))
    assert d.finals == {1}
    assert format_automaton(d) == "\n".join(TWO_STATE.splitlines()[1:]).replace(
        "   # trailing comment", "") + "\n"


def test_round_trip_random_dfas():
    rng = random.Random(3)
    for _ in range(100):
        d = random_dfa(rng, max_states=6, letters=3)
        assert parse_automaton(format_automaton(d)) == d


def test_round_trip_nfa():
    a, b = build_two_letter(3, 4)
    nfa = catenate(a, b)
    text = format_automaton(nfa, ["chain of two"])
    assert text.startswith("# chain of two\nnfa 7 2\ninitials 0\nfinals 6\n")
    assert parse_automaton(text) == nfa


def test_format_is_sorted_and_stable():
    a, _ = build_two_letter(3, 3)
    lines = format_automaton(a).splitlines()
    trans = [tuple(map(int, ln.split()[1:])) for ln in lines if ln.startswith("trans")]
    assert trans == sorted(trans)
    assert format_automaton(a) == format_automaton(parse_automaton(format_automaton(a)))


@pytest.mark.parametrize("text", [
    "",
    "dfa 2\n",
    "automaton 1 1\n",
    "dfa 1 1\ntrans 0 0 0\n",                       # no initial line
    "dfa 1 1\ninitial 0\n",                         # incomplete
    "dfa 1 1\ninitial 0\ninitial 0\ntrans 0 0 0\n",
    "dfa 1 1\ninitial 0 0\ntrans 0 0 0\n",
    "dfa 1 1\ninitial 0\ntrans 0 0 0\ntrans 0 0 0\n",
    "dfa 1 1\ninitial 0\ntrans 0 0 0\ntrans 1 0 0\n",
    "dfa 1 1\ninitial x\ntrans 0 0 0\n",
    "dfa 1 1\ninitial 0\nfinish 0\ntrans 0 0 0\n",
    "dfa 1 1\ninitial 0\ntrans 0 0\n",
])
def test_malformed_input(text):
    with pytest.raises(FormatError):
        parse_automaton(text)


def test_target_out_of_range():
    with pytest.raises(AutomatonError):
        parse_automaton("dfa 1 1\ninitial 0\ntrans 0 0 3\n")
