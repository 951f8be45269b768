"""Hot branch-set search kernel, in two interchangeable flavors.

The search grows one branch set per target vertex over the host graph,
deciding vertices in a fixed order: assign to a set or discard.  Prunes:

* connectivity -- a branch set all of whose pieces cannot reach each
  other through undecided vertices can never become connected;
* adjacency   -- a required set pair with no host edge between their
  reachable regions can never become adjacent;
* counting    -- more empty sets than undecided vertices.

The numba flavor is an iterative port of the same algorithm on int64
bitmask arrays (hosts up to 63 vertices; larger hosts fall back to the
Python flavor, whose masks are plain ints).  Set MINORKIT_NO_NUMBA=1 to
force the pure-Python path; benchmarks/bench_kernels.py compares the two.

Return status codes: 0 = no minor, 1 = found, 2 = node budget exhausted.
"""

from __future__ import annotations

import os

STATUS_ABSENT = 0
STATUS_FOUND = 1
STATUS_EXHAUSTED = 2

PRUNE_NAMES = ("connectivity", "adjacency", "count")

_NO_NUMBA = os.environ.get("MINORKIT_NO_NUMBA", "") not in ("", "0")


def search_python(rows, n, k, req, complete, order, budget):
    """Pure-Python kernel.  See module docstring for the contract.

    rows: adjacency bitmasks; req[i]: bitmask over set indices that set i
    must end up adjacent to; complete: target is a complete graph, so
    sets are interchangeable and only the first empty set may be opened;
    order: vertex decision order; budget: max nodes, 0 = unlimited.

    Returns (status, branch_masks, nodes, prune_counts).
    """
    futmask = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        futmask[i] = futmask[i + 1] | 1 << order[i]

    B = [0] * k
    adj = [0] * k
    nodes = 0
    prunes = [0, 0, 0]
    found = [None]  # snapshot of B at success; dfs unwinding restores B

    def reach(seed, allowed):
        mask = seed & allowed
        while True:
            nb = 0
            m = mask
            while m:
                low = m & -m
                nb |= rows[low.bit_length() - 1]
                m ^= low
            grown = mask | (nb & allowed)
            if grown == mask:
                return mask
            mask = grown

    def feasible(pos):
        fut = futmask[pos]
        regions = [0] * k
        empty = 0
        for i in range(k):
            if B[i] == 0:
                empty += 1
                continue
            comp = reach(B[i] & -B[i], B[i] | fut)
            if B[i] & ~comp:
                prunes[0] += 1
                return False
            regions[i] = comp
        if empty > popcount(fut):
            prunes[2] += 1
            return False
        for i in range(k):
            need = req[i] & ~adj[i]
            while need:
                low = need & -need
                j = low.bit_length() - 1
                need ^= low
                if j < i:
                    continue  # pair handled from the lower index
                ri = regions[i] if B[i] else fut
                rj = regions[j] if B[j] else fut
                nb = 0
                m = ri
                while m:
                    lw = m & -m
                    nb |= rows[lw.bit_length() - 1]
                    m ^= lw
                if nb & rj == 0:
                    prunes[1] += 1
                    return False
        return True

    def connected_now():
        for i in range(k):
            if reach(B[i] & -B[i], B[i]) != B[i]:
                return False
        return True

    def success_now():
        for i in range(k):
            if B[i] == 0 or req[i] & ~adj[i]:
                return False
        return connected_now()

    def dfs(pos):
        nonlocal nodes
        if success_now():
            found[0] = tuple(B)
            return STATUS_FOUND
        if pos == n:
            return STATUS_ABSENT
        v = order[pos]
        vb = 1 << v
        seen_empty = False
        for c in range(k):
            if B[c] == 0:
                if complete and seen_empty:
                    continue
                seen_empty = True
            nodes += 1
            if budget and nodes > budget:
                return STATUS_EXHAUSTED
            saved_adj = adj[:]
            B[c] |= vb
            for i in range(k):
                if i != c and rows[v] & B[i]:
                    adj[c] |= 1 << i
                    adj[i] |= 1 << c
            if feasible(pos + 1):
                res = dfs(pos + 1)
                if res != STATUS_ABSENT:
                    B[c] ^= vb
                    adj[:] = saved_adj
                    return res
            B[c] ^= vb
            adj[:] = saved_adj
        # discard v
        nodes += 1
        if budget and nodes > budget:
            return STATUS_EXHAUSTED
        if feasible(pos + 1):
            return dfs(pos + 1)
        return STATUS_ABSENT

    if not feasible(0):
        return STATUS_ABSENT, None, 1, tuple(prunes)
    status = dfs(0)
    masks = found[0] if status == STATUS_FOUND else None
    return status, masks, nodes, tuple(prunes)


def popcount(x):
    return x.bit_count()


# -- numba flavor -------------------------------------------------------

_njit_search = None

if not _NO_NUMBA:
    try:
        import numpy as np
        from numba import njit

        @njit(cache=True)
        def _pc(x):
            c = 0
            while x:
                x &= x - 1
                c += 1
            return c

        @njit(cache=True)
        def _reach_nb(rows, n, seed, allowed):
            mask = seed & allowed
            while True:
                nb = 0
                for v in range(n):
                    if mask & (1 << v):
                        nb |= rows[v]
                grown = mask | (nb & allowed)
                if grown == mask:
                    return mask
                mask = grown

        @njit(cache=True)
        def _feasible_nb(rows, n, k, req, B, adj, fut, regions, prunes):
            empty = 0
            for i in range(k):
                if B[i] == 0:
                    empty += 1
                    regions[i] = 0
                    continue
                comp = _reach_nb(rows, n, B[i] & (-B[i]), B[i] | fut)
                if B[i] & ~comp:
                    prunes[0] += 1
                    return False
                regions[i] = comp
            if empty > _pc(fut):
                prunes[2] += 1
                return False
            for i in range(k):
                need = req[i] & ~adj[i]
                for j in range(i + 1, k):
                    if need & (1 << j):
                        ri = regions[i] if B[i] != 0 else fut
                        rj = regions[j] if B[j] != 0 else fut
                        nb = 0
                        for v in range(n):
                            if ri & (1 << v):
                                nb |= rows[v]
                        if nb & rj == 0:
                            prunes[1] += 1
                            return False
            return True

        @njit(cache=True)
        def _success_nb(rows, n, k, req, B, adj):
            for i in range(k):
                if B[i] == 0 or (req[i] & ~adj[i]) != 0:
                    return False
            for i in range(k):
                if _reach_nb(rows, n, B[i] & (-B[i]), B[i]) != B[i]:
                    return False
            return True

        @njit(cache=True)
        def _search_nb(rows, n, k, req, complete, order, budget):
            futmask = np.zeros(n + 1, dtype=np.int64)
            for i in range(n - 1, -1, -1):
                futmask[i] = futmask[i + 1] | (1 << order[i])

            B = np.zeros(k, dtype=np.int64)
            adj = np.zeros(k, dtype=np.int64)
            regions = np.zeros(k, dtype=np.int64)
            prunes = np.zeros(3, dtype=np.int64)
            adj_save = np.zeros((n + 1, k), dtype=np.int64)
            choice = np.zeros(n + 1, dtype=np.int64)
            chosen = np.zeros(n + 1, dtype=np.int64)
            nodes = 0
            status = STATUS_ABSENT

            if not _feasible_nb(rows, n, k, req, B, adj, futmask[0], regions, prunes):
                return STATUS_ABSENT, B, 1, prunes
            if _success_nb(rows, n, k, req, B, adj):
                return STATUS_FOUND, B, 1, prunes

            pos = 0
            choice[0] = 0
            while True:
                c = choice[pos]
                if c > k or pos == n:
                    # choices exhausted here (or at the leaf): backtrack
                    if pos == 0:
                        status = STATUS_ABSENT
                        break
                    pos -= 1
                    pc = chosen[pos]
                    if pc < k:
                        B[pc] ^= 1 << order[pos]
                        for i in range(k):
                            adj[i] = adj_save[pos, i]
                    choice[pos] += 1
                    continue
                v = order[pos]
                vb = 1 << v
                if c < k:
                    if B[c] == 0 and complete:
                        blocked = False
                        for i in range(c):
                            if B[i] == 0:
                                blocked = True
                                break
                        if blocked:
                            choice[pos] += 1
                            continue
                    for i in range(k):
                        adj_save[pos, i] = adj[i]
                    chosen[pos] = c
                    B[c] |= vb
                    for i in range(k):
                        if i != c and (rows[v] & B[i]) != 0:
                            adj[c] |= 1 << i
                            adj[i] |= 1 << c
                else:
                    chosen[pos] = k  # discard
                nodes += 1
                if budget > 0 and nodes > budget:
                    status = STATUS_EXHAUSTED
                    break
                if _feasible_nb(
                    rows, n, k, req, B, adj, futmask[pos + 1], regions, prunes
                ):
                    if _success_nb(rows, n, k, req, B, adj):
                        status = STATUS_FOUND
                        break
                    pos += 1
                    choice[pos] = 0
                else:
                    if c < k:
                        B[c] ^= vb
                        for i in range(k):
                            adj[i] = adj_save[pos, i]
                    choice[pos] += 1
            return status, B, nodes, prunes

        _njit_search = _search_nb
    except ImportError:  # pragma: no cover - numba genuinely missing
        _njit_search = None


def search_numba(rows, n, k, req, complete, order, budget):
    """numba kernel wrapper; raises if numba is unavailable or n > 63."""
    import numpy as np

    if _njit_search is None:
        raise RuntimeError("numba kernel unavailable")
    if n > 63:
        raise ValueError("numba kernel handles hosts up to 63 vertices")
    status, B, nodes, prunes = _njit_search(
        np.asarray(rows, dtype=np.int64),
        n,
        k,
        np.asarray(req, dtype=np.int64),
        complete,
        np.asarray(order, dtype=np.int64),
        budget,
    )
    masks = tuple(int(b) for b in B) if status == STATUS_FOUND else None
    return int(status), masks, int(nodes), tuple(int(p) for p in prunes)


def kernel_name() -> str:
    if _NO_NUMBA or _njit_search is None:
        return "python"
    return "numba"


def search(rows, n, k, req, complete, order, budget=0):
    """Dispatch to the active kernel (numba unless disabled or n > 63)."""
    if _NO_NUMBA or _njit_search is None or n > 63:
        return search_python(rows, n, k, req, complete, order, budget)
    return search_numba(rows, n, k, req, complete, order, budget)
