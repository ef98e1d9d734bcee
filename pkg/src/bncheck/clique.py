"""Exact maximum clique via branch-and-bound, plus a brute-force oracle.

The solver is the classic color-bound scheme: vertices are relabeled by a
degeneracy ordering, candidate sets live in int bit masks, and each search node
greedily partitions its candidates into color classes. A clique can take at
most one vertex per class, so size + color is a pruning bound. An optional
wall-clock budget turns the result into a certified-or-lower-bound answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from time import perf_counter
from typing import Sequence

from .errors import CapacityError
from .graph import Graph, _bits

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]
    nodes_explored: int
    time_limited: bool

    @property
    def certified(self) -> bool:
        return not self.time_limited


def is_clique(g: Graph, vertices: Sequence[int]) -> bool:
    """Every pair in `vertices` adjacent (vertices distinct)."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    if mask.bit_count() != len(vertices):
        return False
    return all(g.rows[v] & mask == mask ^ (1 << v) for v in vertices)


def _degeneracy_order(n: int, adj: Sequence[int]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex; bucket queue, O(n + m)."""
    deg = [adj[v].bit_count() for v in range(n)]
    maxdeg = max(deg)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v, d in enumerate(deg):
        buckets[d].append(v)
    removed = [False] * n
    order = []
    d = 0
    while len(order) < n:
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        if removed[v] or deg[v] != d:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        for w in _bits(adj[v]):
            if not removed[w]:
                deg[w] -= 1
                buckets[deg[w]].append(w)
        d = max(d - 1, 0)
    return order


def _greedy_clique(adj: Sequence[int], n: int, starts: int = 8) -> int:
    """Cheap initial lower bound: grow a clique by max degree-in-candidates."""
    best_mask = 0
    best = 0
    by_degree = sorted(range(n), key=lambda v: adj[v].bit_count(), reverse=True)
    for s in by_degree[:starts]:
        mask = 1 << s
        cand = adj[s]
        while cand:
            pick, score = -1, -1
            for v in _bits(cand):
                sc = (adj[v] & cand).bit_count()
                if sc > score:
                    score, pick = sc, v
            mask |= 1 << pick
            cand &= adj[pick]
        if mask.bit_count() > best:
            best, best_mask = mask.bit_count(), mask
    return best_mask


def _greedy_coloring(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Partition candidates into independent color classes.

    Returns vertices grouped by ascending color and the color number of each;
    a clique inside `cand` has at most `color` vertices, which is the bound.
    """
    order: list[int] = []
    bound: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bound.append(color)
            rest ^= low
            avail = (avail ^ low) & ~adj[v]
    return order, bound


class _Search:
    __slots__ = ("adj", "best_size", "best_mask", "nodes", "deadline", "timed_out")

    def __init__(self, adj: Sequence[int], seed_mask: int, deadline: float | None):
        self.adj = adj
        self.best_size = seed_mask.bit_count()
        self.best_mask = seed_mask
        self.nodes = 0
        self.deadline = deadline
        self.timed_out = False

    def expand(self, size: int, members: int, cand: int) -> None:
        self.nodes += 1
        if self.deadline is not None and perf_counter() > self.deadline:
            self.timed_out = True
            return
        adj = self.adj
        order, bound = _greedy_coloring(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= self.best_size:
                return
            v = order[i]
            bit = 1 << v
            sub = cand & adj[v]
            if sub:
                self.expand(size + 1, members | bit, sub)
                if self.timed_out:
                    return
            elif size + 1 > self.best_size:
                self.best_size = size + 1
                self.best_mask = members | bit
            cand ^= bit


def max_clique(g: Graph, time_budget: float | None = None) -> CliqueResult:
    """Exact omega(G) with a witness clique.

    With a time budget the search may stop early; the result then carries
    time_limited=True and omega is only a lower bound (not certified).
    """
    n = g.n
    order = _degeneracy_order(n, g.rows)
    # Relabel so the degeneracy order is 0..n-1; tightens early color bounds.
    position = [0] * n
    for new, old in enumerate(order):
        position[old] = new
    adj = [0] * n
    for old in range(n):
        row = 0
        for w in _bits(g.rows[old]):
            row |= 1 << position[w]
        adj[position[old]] = row
    deadline = perf_counter() + time_budget if time_budget is not None else None
    search = _Search(adj, _greedy_clique(adj, n), deadline)
    search.expand(0, 0, (1 << n) - 1)
    mask = search.best_mask
    # An interrupted search can leave an extendable clique (tried vertices are
    # dropped from candidate sets); grow it to maximal so even a lower-bound
    # witness is never trivially improvable. Certified maxima never extend.
    for v in range(n):
        if not (mask >> v) & 1 and adj[v] & mask == mask:
            mask |= 1 << v
    witness = tuple(sorted(order[v] for v in _bits(mask)))
    return CliqueResult(mask.bit_count(), witness, search.nodes, search.timed_out)


def max_clique_bruteforce(g: Graph) -> int:
    """Oracle omega(G) by subset enumeration in increasing size.

    A (k+1)-clique contains a k-clique, so the first size with no clique ends
    the search. Capped at n <= BRUTE_FORCE_LIMIT.
    """
    n = g.n
    if n > BRUTE_FORCE_LIMIT:
        raise CapacityError(f"brute force capped at n={BRUTE_FORCE_LIMIT}, got {n}")
    rows = g.rows
    omega = 1
    for k in range(2, n + 1):
        found = False
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(rows[v] & mask == mask ^ (1 << v) for v in combo):
                found = True
                break
        if not found:
            break
        omega = k
    return omega
