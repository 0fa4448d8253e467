import copy
import json

import pytest

from pda.diagram import DiagramError, LagrangianDiagram

from helpers import CORPUS, DATA, corpus_entry


@pytest.mark.parametrize("name", CORPUS)
def test_parses_and_is_planar(name):
    d, _, _ = corpus_entry(name)
    v = len(d.crossings)
    e = len(d.arcs)
    f = len(d.faces)
    assert v - e + f == 2


@pytest.mark.parametrize("name", CORPUS)
def test_json_round_trip(name):
    d, _, _ = corpus_entry(name)
    again = LagrangianDiagram.from_json(d.to_json())
    assert again.to_json() == d.to_json()


def test_duplicate_crossing_ids_rejected():
    data = json.load(open(DATA / "hopf.json"))
    data["crossings"].append(copy.deepcopy(data["crossings"][0]))
    with pytest.raises(DiagramError):
        LagrangianDiagram.from_json(data)


def test_each_crossing_visited_once_over_once_under():
    data = json.load(open(DATA / "hopf.json"))
    data["components"][0]["visits"][0][1] = "under"
    with pytest.raises(DiagramError):
        LagrangianDiagram.from_json(data)


def test_grading_parity_must_match_sign():
    data = json.load(open(DATA / "hopf.json"))
    data["crossings"][0]["grading"] = 1  # sign +1 needs even grading
    with pytest.raises(DiagramError):
        LagrangianDiagram.from_json(data)
