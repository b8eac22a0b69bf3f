"""Tests for the DOT export."""

import pytest

from core.des.validation import complete_inputs
from core.game.arena import build_arena
from core.game.dot import export_dot, node_label
from core.game.safety import complete_to_safety_automaton
from core.game.solver import solve


@pytest.fixture
def arena(two_input_plant, two_input_spec):
    """Realizable arena"""
    plant = complete_inputs(two_input_plant)
    return build_arena(plant, complete_to_safety_automaton(two_input_spec, plant.input_events))


def test_plain_export(arena):
    """Test shapes and highlighting without a solution."""
    text = export_dot(arena)

    assert text.startswith('digraph arena {\n')
    assert text.endswith('}\n')
    assert 'e0 [shape=circle label="(q0,k0)" penwidth=2];' in text
    assert 'fillcolor=red' in text
    assert 'shape=doublecircle' in text
    assert 'style=bold' not in text


def test_solution_export(arena):
    """Test strategy edges and non-winning nodes."""
    text = export_dot(arena, solve(arena))

    assert 'style=bold' in text
    assert 'dashed' in text


def test_export_is_deterministic(arena):
    """Test that two exports are identical."""
    assert export_dot(arena) == export_dot(arena)


def test_node_label(arena):
    """Test the label of an environment node."""
    assert node_label(arena.initial) == '(q0,k0)'
