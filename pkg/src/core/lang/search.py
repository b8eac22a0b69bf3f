"""Breadth-first search yielding canonical shortest words."""

from collections import deque
from typing import Callable, Hashable, Iterable, Iterator, Tuple

from core.des.events import canonical_key

Successors = Callable[[Hashable], Iterable[Tuple[object, Hashable]]]


def breadth_first(start: Hashable, successors: Successors) -> Iterator[Tuple[Hashable, tuple]]:
    """
    Visit every state reachable from start.

    Successor symbols are tried in canonical order, so the word yielded with
    each state is its shortest access word with ties broken by canonical
    event order.

    Args:
        start: Initial state
        successors: Callable returning (symbol, state) pairs

    Yields:
        (state, word) in breadth-first order, start first with the empty word
    """
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        state, word = queue.popleft()
        yield state, word
        for symbol, target in sorted(successors(state), key=lambda edge: canonical_key(edge[0])):
            if target not in seen:
                seen.add(target)
                queue.append((target, word + (symbol,)))
