"""Bitmask connectivity engine shared by the public graph API and the
enumeration/sampling pipelines.

Link subsets are encoded as integers (bit i-1 set means link i is removed),
which keeps the hot loops allocation-free and lets small networks precompute
a full connectivity table over all 2^n removal sets.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ContractError

# Above this link count a full 2^n connectivity table is not built and every
# query runs a fresh breadth-first search.
TABLE_MAX_LINKS = 16


class BitGraph:
    """Connectivity queries for one immutable network, keyed by removal mask."""

    def __init__(self, net, build_table: bool = False):
        self.n = len(net.links)
        self._node_index = {label: i for i, label in enumerate(net.nodes)}
        # adj[v] = list of (link_bit, neighbor), ascending link id.
        self.adj: list[list[tuple[int, int]]] = [[] for _ in net.nodes]
        for link_id, a, b in net.links:
            bit = 1 << (link_id - 1)
            ia, ib = self._node_index[a], self._node_index[b]
            self.adj[ia].append((bit, ib))
            self.adj[ib].append((bit, ia))
        self.terminal_indices = sorted(self._node_index[t] for t in net.terminals)
        self.start = self.terminal_indices[0]
        self.terminal_node_mask = 0
        for t in self.terminal_indices:
            self.terminal_node_mask |= 1 << t
        self._table: bytearray | None = None
        if build_table and self.n <= TABLE_MAX_LINKS:
            self._table = bytearray(
                self._bfs_connected(mask) for mask in range(1 << self.n)
            )

    def connected(self, removed_mask: int) -> bool:
        """True iff all terminals are in one component once the links in
        `removed_mask` are deleted."""
        if self._table is not None:
            return bool(self._table[removed_mask])
        return self._bfs_connected(removed_mask)

    def _bfs_connected(self, removed_mask: int) -> bool:
        seen = 1 << self.start
        queue = [self.start]
        head = 0
        goal = self.terminal_node_mask
        adj = self.adj
        while head < len(queue):
            if seen & goal == goal:
                return True
            v = queue[head]
            head += 1
            for bit, w in adj[v]:
                if bit & removed_mask or seen >> w & 1:
                    continue
                seen |= 1 << w
                queue.append(w)
        return seen & goal == goal

    def shortest_path(self, removed_mask: int) -> tuple[int, ...] | None:
        """Shortest two-terminal path by link count, deterministic: among
        equal-length paths the lexicographically smallest link-id sequence.

        Returns the path as a tuple of link ids, or None if disconnected.
        Only meaningful for two-terminal networks.
        """
        src, dst = self.terminal_indices[0], self.terminal_indices[-1]
        dist = self._bfs_distances(dst, removed_mask)
        if dist[src] < 0:
            return None
        # Greedy per-position minimization: at each node take the smallest
        # link id that still lies on some shortest path.
        path = []
        v = src
        while v != dst:
            for bit, w in self.adj[v]:
                if bit & removed_mask:
                    continue
                if dist[w] == dist[v] - 1:
                    path.append(bit.bit_length())
                    v = w
                    break
        return tuple(path)

    def _bfs_distances(self, source: int, removed_mask: int) -> list[int]:
        dist = [-1] * len(self.adj)
        dist[source] = 0
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for bit, w in self.adj[v]:
                    if bit & removed_mask or dist[w] >= 0:
                        continue
                    dist[w] = dist[v] + 1
                    nxt.append(w)
            frontier = nxt
        return dist

    def min_subset_size(
        self,
        removed_mask: int,
        block: tuple[int, ...],
        cache: dict | None = None,
    ) -> int:
        """Smallest number of `block` links whose removal, on top of
        `removed_mask`, disconnects the terminals.

        Subsets are scanned by ascending cardinality, lexicographic link-id
        order.  Preconditions: terminals connected under `removed_mask`,
        disconnected once the whole block is also removed.
        """
        block_mask = 0
        for link in block:
            block_mask |= 1 << (link - 1)
        if cache is not None:
            key = (removed_mask, block_mask)
            hit = cache.get(key)
            if hit is not None:
                return hit
        if removed_mask & block_mask:
            raise ContractError("block overlaps already-removed links")
        if not self.connected(removed_mask):
            raise ContractError("terminals already disconnected before the block")
        if self.connected(removed_mask | block_mask):
            raise ContractError("removing the whole block does not disconnect")
        bits = [1 << (link - 1) for link in sorted(block)]
        result = len(bits)
        for size in range(1, len(bits)):
            found = False
            for combo in combinations(bits, size):
                mask = removed_mask
                for bit in combo:
                    mask |= bit
                if not self.connected(mask):
                    found = True
                    break
            if found:
                result = size
                break
        if cache is not None:
            cache[key] = result
        return result

    def greedy_count(self, removed_mask: int, block_mask: int) -> int:
        """Path-destruction count of the greedy two-terminal strategy:
        repeatedly take the deterministic shortest path, delete its block
        links, and count iterations until the terminals disconnect.

        Preconditions as min_subset_size.  The result never exceeds the true
        minimum subset size but can undercount it when one path carries
        several links of a minimum disconnecting subset.
        """
        if removed_mask & block_mask:
            raise ContractError("block overlaps already-removed links")
        if not self.connected(removed_mask):
            raise ContractError("terminals already disconnected before the block")
        if self.connected(removed_mask | block_mask):
            raise ContractError("removing the whole block does not disconnect")
        count = 0
        mask = removed_mask
        while self.connected(mask):
            path = self.shortest_path(mask)
            for link in path:
                bit = 1 << (link - 1)
                if bit & block_mask:
                    mask |= bit
            count += 1
        return count
