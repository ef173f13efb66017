"""Depth-first enumeration of upper sets of a finite poset."""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterator, Optional, Sequence, Set


def upper_sets(
    order: Sequence[Hashable],
    above: Dict[Hashable, Sequence[Hashable]],
    compatible: Optional[Callable[[Hashable, Set], bool]] = None,
) -> Iterator[frozenset]:
    """Yield every upper set, optionally pruned by a pairwise condition.

    ``order`` must list each element after everything in ``above[x]``
    (a reversed linear extension).  ``above[x]`` need only generate the
    order.  ``compatible(x, chosen)`` decides whether ``x`` may join the
    already chosen elements; because it is checked on insertion, it has to
    be monotone (a rejected set stays rejected when enlarged).
    """
    n = len(order)
    chosen: Set = set()

    def rec(k: int) -> Iterator[frozenset]:
        if k == n:
            yield frozenset(chosen)
            return
        x = order[k]
        yield from rec(k + 1)
        if all(y in chosen for y in above[x]) and (compatible is None or compatible(x, chosen)):
            chosen.add(x)
            yield from rec(k + 1)
            chosen.remove(x)

    yield from rec(0)
