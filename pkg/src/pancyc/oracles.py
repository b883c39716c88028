"""Exact desk-scale ground truth: independence number, cycle spectrum, witness checks.

These are deliberately brute-force (branch-and-bound, pruned DFS) and capped;
beyond the caps they raise TooLarge rather than silently crawl.  Everything
here is independent of the constructive machinery so it can sit in judgment
over it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .graph_core import CycledGraph, ProblemProfile, is_cycle
from .surgery import CycleWitness, validate_contradicting

MIS_CAP = 60
SPECTRUM_CAP = 24
CYCLE_SEARCH_CAP = 40


# ---------------------------------------------------------------------------
# maximum independent set
# ---------------------------------------------------------------------------

def _clique_cover_bound(cand: int, adjm: list[int]) -> int:
    """Greedy clique cover of the subgraph induced by the bitmask ``cand``.

    The number of cliques is an upper bound on the independence number of
    that subgraph, which is what the branch-and-bound prunes with.
    """
    count = 0
    rem = cand
    while rem:
        v = (rem & -rem).bit_length() - 1
        clique = 1 << v
        grow = rem & adjm[v]
        while grow:
            u = (grow & -grow).bit_length() - 1
            clique |= 1 << u
            grow &= adjm[u]
        rem &= ~clique
        count += 1
    return count


def max_independent_set(g: CycledGraph, cap: int = MIS_CAP) -> frozenset[int]:
    """Exact maximum independent set via branch-and-bound.

    Deterministic: branches on the lowest-id vertex of maximum degree within
    the candidate set, include-branch first.
    """
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the independence-oracle cap {cap}")
    n = g.n
    adjm = [0] * n
    for v in range(n):
        for u in g.adj[v]:
            adjm[v] |= 1 << u

    best_mask = 0
    best_size = 0

    # greedy warm start: repeatedly take the min-degree candidate
    cand = (1 << n) - 1
    warm = 0
    while cand:
        pick, deg = -1, n + 1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adjm[v] & cand).count("1")
            if d < deg:
                pick, deg = v, d
        warm |= 1 << pick
        cand &= ~(adjm[pick] | (1 << pick))
    best_mask = warm
    best_size = bin(warm).count("1")

    def expand(cand: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_mask, best_size
        if cur_size > best_size:
            best_size, best_mask = cur_size, cur_mask
        if not cand:
            return
        if cur_size + _clique_cover_bound(cand, adjm) <= best_size:
            return
        pick, deg = -1, -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adjm[v] & cand).count("1")
            if d > deg:
                pick, deg = v, d
        expand(cand & ~(adjm[pick] | (1 << pick)), cur_mask | (1 << pick), cur_size + 1)
        expand(cand & ~(1 << pick), cur_mask, cur_size)

    expand((1 << n) - 1, 0, 0)
    return frozenset(v for v in range(n) if best_mask >> v & 1)


# ---------------------------------------------------------------------------
# cycle search
# ---------------------------------------------------------------------------

def _bfs_dist(adj, n: int, src: int) -> list[int]:
    dist = [n + 1] * n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if dist[u] > d:
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def _find_cycle(g: CycledGraph, length: int, required: frozenset[int]):
    """Depth-first search for a simple cycle of exactly ``length`` vertices
    containing all of ``required``.  Returns a vertex tuple or None.

    Canonicalization: with no requirements the cycle's minimum vertex is the
    search root and only larger vertices are explored; with requirements the
    root is min(required).
    """
    n = g.n
    if length < 3 or length > n:
        return None
    adj = [sorted(g.adj[v]) for v in range(n)]

    if required:
        roots = [min(required)]
        restrict = False
    else:
        roots = list(range(n - length + 1))
        restrict = True

    for root in roots:
        if restrict:
            radj = [[u for u in adj[v] if u > root] for v in range(n)]
        else:
            radj = adj
        dist_root = _bfs_dist(radj, n, root)
        need = set(required) - {root}
        dist_need = {w: _bfs_dist(radj, n, w) for w in need}
        on_path = [False] * n
        on_path[root] = True
        path = [root]

        def dfs(v: int, remaining: int, missing: set[int]) -> bool:
            if remaining == 0:
                return not missing and root in g.adj[v]
            for u in radj[v]:
                if on_path[u]:
                    continue
                rem = remaining - 1
                # closing route from u: rem more vertices, then an edge to root
                if dist_root[u] > rem + 1:
                    continue
                miss = missing - {u}
                if len(miss) > rem:
                    continue
                ok = True
                for w in miss:
                    if dist_need[w][u] + dist_root[w] > rem + 1:
                        ok = False
                        break
                if not ok:
                    continue
                on_path[u] = True
                path.append(u)
                if dfs(u, rem, miss):
                    return True
                path.pop()
                on_path[u] = False
            return False

        if dfs(root, length - 1, set(need)):
            return tuple(path)
    return None


@dataclass(frozen=True)
class CycleSpectrum:
    """Which cycle lengths a graph attains."""

    n: int
    present: frozenset[int]

    @property
    def pancyclic(self) -> bool:
        return self.present == frozenset(range(3, self.n + 1))

    def json_list(self) -> list[int]:
        return sorted(self.present)


def cycle_spectrum(g: CycledGraph, cap: int = SPECTRUM_CAP) -> CycleSpectrum:
    """Exact set of attainable cycle lengths (full sweep; capped)."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the spectrum cap {cap}")
    present = set()
    for length in range(3, g.n + 1):
        if _find_cycle(g, length, frozenset()) is not None:
            present.add(length)
    return CycleSpectrum(n=g.n, present=frozenset(present))


def has_cycle_through(
    g: CycledGraph,
    length: int,
    required,
    cap: int = CYCLE_SEARCH_CAP,
) -> CycleWitness | None:
    """A verified cycle of exactly ``length`` through all of ``required``, or None."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} exceeds the cycle-search cap {cap}")
    req = frozenset(required)
    found = _find_cycle(g, length, req)
    if found is None:
        return None
    assert is_cycle(g, found) and len(found) == length and req <= set(found)
    return CycleWitness(cycle=found, length=length, contains=req)


# ---------------------------------------------------------------------------
# witness re-verification
# ---------------------------------------------------------------------------

def verify_witness(g: CycledGraph, prof: ProblemProfile, w) -> bool:
    """Re-derive a Witness's claims from scratch.  Inconclusive is trivially true."""
    kind = getattr(w, "kind", None)
    if kind == "inconclusive":
        return True
    if kind == "independent_set":
        vs = sorted(w.vertices)
        if not vs or any(not 0 <= v < g.n for v in vs):
            return False
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if g.has_edge(u, v):
                    return False
        return True
    if kind == "contradicting":
        cw = w.cycle
        if cw is None or not is_cycle(g, cw.cycle):
            return False
        if cw.length != len(cw.cycle) or not cw.contains <= set(cw.cycle):
            return False
        return validate_contradicting(g, prof, cw)
    return False
