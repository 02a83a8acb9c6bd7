"""Sequence-preserving rewrite toward caterpillars.

On a non-caterpillar, pick a diametral-path vertex v_j with an off-path
non-pendant neighbour u and reattach everything hanging below u to v_{j+1}.
The eccentricity multiset is unchanged, the Wiener index strictly drops and
the subtree count strictly grows, so iterating reaches a caterpillar with the
same eccentric sequence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .tree import Tree, diametral_endpoints, is_caterpillar, path_between


@dataclass(frozen=True)
class RewriteMove:
    path: tuple[int, ...]  # diametral path v_0..v_d, oriented so j >= d/2
    j: int  # pivot index on the path
    u: int  # off-path non-pendant neighbour of v_j
    moved: tuple[int, ...]  # neighbours of u other than v_j
    target: int  # v_{j+1}
    detached: frozenset[int]  # U: vertices strictly below u
    right: frozenset[int]  # R: v_{j+1} side of edge v_j v_{j+1}, minus U

    def wiener_delta(self) -> int:
        """Exact change W(T') - W(T) = |U| * (2 - 2|R|)."""
        return len(self.detached) * (2 - 2 * len(self.right))


class StaleMoveError(ValueError):
    """Move does not match the tree it is applied to."""


def _component(t: Tree, start: int, blocked: set[int]) -> set[int]:
    """Vertices reachable from start without entering blocked."""
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in t.adjacency[v]:
            if w not in blocked and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def find_move(t: Tree) -> RewriteMove | None:
    """The deterministic rewrite move for t, or None iff t is a caterpillar.

    Candidates (j, u) are scanned along the canonical diametral path and the
    lexicographically smallest is taken; when its pivot sits on the near half
    (j < d/2) the path numbering is reversed so that j >= d/2.
    """
    a, b = diametral_endpoints(t)
    path = path_between(t, a, b)
    d = len(path) - 1
    on_path = set(path)
    candidate = None
    for j, vj in enumerate(path):
        for u in t.adjacency[vj]:
            if u not in on_path and t.degree(u) > 1:
                candidate = (j, u)
                break
        if candidate:
            break
    if candidate is None:
        return None
    j, u = candidate
    if 2 * j < d:
        path = path[::-1]
        j = d - j
    vj = path[j]
    moved = tuple(sorted(w for w in t.adjacency[u] if w != vj))
    detached = frozenset(_component(t, u, {vj}) - {u})
    target = path[j + 1]
    right_side = _component(t, target, {vj})
    right = frozenset(right_side - detached)
    return RewriteMove(
        path=path,
        j=j,
        u=u,
        moved=moved,
        target=target,
        detached=detached,
        right=right,
    )


def apply_move(t: Tree, m: RewriteMove) -> Tree:
    """Reattach N(u) - {v_j} from u to v_{j+1}; same vertex set."""
    if find_move(t) != m:
        raise StaleMoveError("move was not produced by find_move on this tree")
    drop = {tuple(sorted((m.u, y))) for y in m.moved}
    edges = [e for e in t.edges if e not in drop]
    edges.extend(tuple(sorted((m.target, y))) for y in m.moved)
    return Tree(t.n, tuple(edges))


def caterpillarize(t: Tree) -> Tree:
    """Iterate the rewrite move to a fixed point (a caterpillar)."""
    while True:
        m = find_move(t)
        if m is None:
            return t
        t = apply_move(t, m)
