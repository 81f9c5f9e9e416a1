from typing import Iterator, Optional, Tuple

from models import Multigraph


def iter_connected_sets(
    graph: Multigraph, volume_limit: Optional[int] = None
) -> Iterator[Tuple[int, int, int]]:
    """
    Yield (mask, volume, boundary) for every connected vertex set of positive
    volume whose volume is at most volume_limit (default: the total volume).

    Each set is produced exactly once, grown from its smallest vertex: the
    frontier holds neighbours that may still be added, the forbidden mask
    holds vertices an earlier branch already decided to leave out. Volume
    only grows along a branch, so branches over the limit are cut at once.
    Boundaries are kept incrementally: adding w changes the boundary by
    deg(w) - 2 loops(w) - 2 m(w, S).
    """
    n = graph.vertex_count
    limit = graph.total_volume if volume_limit is None else volume_limit
    degrees = graph.degrees
    loops = [graph.loop_count(v) for v in range(n)]
    adjacency = [graph.neighbors(v) for v in range(n)]
    masks = [graph.neighbor_mask(v) for v in range(n)]

    def grow(members, volume, boundary, frontier, forbidden, above):
        if volume > 0:
            yield members, volume, boundary
        candidates = frontier
        excluded = forbidden
        while candidates:
            bit = candidates & -candidates
            candidates ^= bit
            w = bit.bit_length() - 1
            grown = volume + degrees[w]
            if grown <= limit:
                inside = sum(m for x, m in adjacency[w] if members >> x & 1)
                new_members = members | bit
                new_frontier = (candidates | (masks[w] & above)) & ~new_members & ~excluded
                yield from grow(
                    new_members,
                    grown,
                    boundary + degrees[w] - 2 * loops[w] - 2 * inside,
                    new_frontier,
                    excluded,
                    above,
                )
            excluded |= bit

    for anchor in range(n):
        if degrees[anchor] > limit:
            continue
        # vertices strictly larger than the anchor
        above = ~((1 << (anchor + 1)) - 1)
        yield from grow(
            1 << anchor,
            degrees[anchor],
            degrees[anchor] - 2 * loops[anchor],
            masks[anchor] & above,
            0,
            above,
        )
