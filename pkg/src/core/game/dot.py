"""
Graphviz DOT rendering of game arenas.

Environment nodes are circles, supervisor nodes boxes and plant nodes
diamonds. Losing nodes are filled red and marked nodes double-circled.
With a solution, non-winning nodes are dashed and strategy edges bold.
"""

from typing import Dict, Hashable, Iterator, Optional

from .arena import ENV, PLANT, SUP, EnvNode, GameArena, PlantNode, SupNode
from .solver import GameSolution

SHAPES = {ENV: 'circle', SUP: 'box', PLANT: 'diamond'}
PREFIXES = {ENV: 'e', SUP: 's', PLANT: 'p'}


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace('\\', '\\\\').replace('"', r'\"'))


def node_label(node: Hashable) -> str:
    if isinstance(node, PlantNode):
        return f"{node_label(node.env)}|{node.input.label}|{node.pattern.label}"
    if isinstance(node, SupNode):
        return f"{node_label(node.env)}|{node.input.label}"
    if isinstance(node, EnvNode):
        return f"({node.plant_state},{node.spec_state})"
    return str(node)


def _lines(arena: GameArena, solution: Optional[GameSolution]) -> Iterator[str]:
    names: Dict[Hashable, str] = {}
    yield 'digraph arena {\n'
    yield '  rankdir=LR;\n'
    for player in (ENV, SUP, PLANT):
        for node in arena.nodes_of(player):
            names[node] = f"{PREFIXES[player]}{arena.graph.nodes[node]['order']}"

    ordered = sorted(names, key=lambda n: arena.graph.nodes[n]['order'])
    for node in ordered:
        player = arena.player(node)
        shape = SHAPES[player]
        if node in arena.marked:
            shape = 'doublecircle'
        attrs = [f"shape={shape}", f"label={_quote(node_label(node))}"]
        styles = []
        if node in arena.losing:
            styles.append('filled')
            attrs.append('fillcolor=red')
        if solution is not None and node not in solution.winning:
            styles.append('dashed')
        if styles:
            attrs.append(f"style={_quote(','.join(styles))}")
        if node == arena.initial:
            attrs.append('penwidth=2')
        yield f"  {names[node]} [{' '.join(attrs)}];\n"

    for node in ordered:
        for label, target in arena.successors(node):
            text = getattr(label, 'label', str(label))
            attrs = [f"label={_quote(text)}"]
            if (
                solution is not None
                and isinstance(node, SupNode)
                and solution.strategy.get(node) == label
            ):
                attrs.append('style=bold')
            yield f"  {names[node]} -> {names[target]} [{' '.join(attrs)}];\n"
    yield '}\n'


def export_dot(arena: GameArena, solution: Optional[GameSolution] = None) -> str:
    """
    Render an arena as DOT text.

    Args:
        arena: Game arena
        solution: Optional solution used for dashed and bold styling

    Returns:
        DOT digraph; node names follow arena discovery order
    """
    return ''.join(_lines(arena, solution))
