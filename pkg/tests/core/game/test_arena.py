"""Tests for game arena construction."""

import pytest

from core.des.events import BOTTOM, STUTTER, InputEvent
from core.des.validation import complete_inputs
from core.errors import ResourceLimitError, SpecificationError
from core.game.arena import ENV, PLANT, SUP, EnvNode, PlantNode, SupNode, build_arena
from core.game.patterns import ControlPattern
from core.game.safety import complete_to_safety_automaton

X1 = InputEvent.of('x1')


@pytest.fixture
def arena(two_input_plant, two_input_spec):
    """Arena of the completed two-input plant"""
    plant = complete_inputs(two_input_plant)
    return build_arena(plant, complete_to_safety_automaton(two_input_spec, plant.input_events))


def test_initial_node(arena):
    """Test the initial node and its owner."""
    assert arena.initial == EnvNode('q0', 'k0')
    assert arena.player(arena.initial) == ENV
    assert arena.graph.nodes[arena.initial]['order'] == 0


def test_players_alternate(arena):
    """Test that edges go env -> sup -> plant -> env."""
    following = {ENV: SUP, SUP: PLANT, PLANT: ENV}
    for source, target in arena.graph.edges():
        assert arena.player(target) == following[arena.player(source)]


def test_supervisor_node_offers_every_pattern(arena):
    """Test that each supervisor node has one edge per pattern."""
    sup = SupNode(arena.initial, X1)

    labels = [label for label, _ in arena.successors(sup)]

    assert labels == list(arena.patterns)
    assert len(arena.patterns) == 4


def test_plant_node_edges_respect_pattern(arena):
    """Test that a plant node only offers enabled events."""
    node = PlantNode(arena.initial, X1, ControlPattern.of('s1', 'su'))

    edges = arena.successors(node)

    assert [(event.name, target) for event, target in edges] == [('s1', EnvNode('q1', 'k1'))]


def test_bottom_nodes_are_leaves(arena):
    """Test that losing nodes are collected and never expanded."""
    assert EnvNode('q1', BOTTOM) in arena.losing
    for node in arena.losing:
        assert node.spec_state == BOTTOM
        assert arena.graph.out_degree(node) == 0


def test_marking_is_product_marking(arena):
    """Test that only plant-and-spec marked nodes are marked."""
    assert EnvNode('q3', 'k3') in arena.marked
    assert EnvNode('q2', 'k4') in arena.marked
    assert EnvNode('q2', 'k2') not in arena.marked


def test_stutter_edges_in_arena(arena):
    """Test that completion stutter moves appear in every pattern."""
    node = PlantNode(EnvNode('q3', 'k3'), X1, ControlPattern.of('su'))

    assert [event for event, _ in arena.successors(node)] == [STUTTER]


def test_stats(arena):
    """Test the statistics summary."""
    stats = arena.stats()

    assert stats['sup_nodes'] == 2 * (stats['env_nodes'] - stats['losing'])
    assert stats['plant_nodes'] == 4 * stats['sup_nodes']
    assert stats['marked'] == len(arena.marked)


def test_node_cap(two_input_plant, two_input_spec, monkeypatch):
    """Test that the arena node cap is enforced."""
    monkeypatch.setenv('RDES_MAX_NODES', '3')
    plant = complete_inputs(two_input_plant)

    with pytest.raises(ResourceLimitError, match="node cap of 3"):
        build_arena(plant, complete_to_safety_automaton(two_input_spec, plant.input_events))


def test_invalid_node_cap(two_input_plant, two_input_spec, monkeypatch):
    """Test that a malformed cap is rejected."""
    monkeypatch.setenv('RDES_MAX_NODES', 'lots')
    plant = complete_inputs(two_input_plant)

    with pytest.raises(ValueError, match="RDES_MAX_NODES"):
        build_arena(plant, complete_to_safety_automaton(two_input_spec, plant.input_events))


def test_incomplete_spec_rejected(joint_input_plant, two_input_spec):
    """Test that the arena refuses a spec undefined on a declared input."""
    automaton = complete_to_safety_automaton(two_input_spec)

    with pytest.raises(SpecificationError):
        build_arena(complete_inputs(joint_input_plant), automaton)
