"""Independent oracles the implementation must agree with.

The BFS oracle materializes the taxonomy as an explicit node/edge graph
and measures shortest paths by search, sharing no code with the arithmetic
distance. The token counter recounts entries straight off the source text.
"""

from __future__ import annotations

from collections import deque

from rogetkb.model import Address, ThesaurusKB


def materialize_graph(kb: ThesaurusKB) -> tuple[dict, dict]:
    """Explicit undirected graph: node keys are path tuples, root is ().
    Returns (adjacency, sg_node_by_address_string)."""
    adjacency: dict[tuple, set[tuple]] = {(): set()}
    sg_nodes: dict[str, tuple] = {}

    def link(parent: tuple, child: tuple) -> None:
        adjacency.setdefault(parent, set()).add(child)
        adjacency.setdefault(child, set()).add(parent)

    for cls in kb.classes:
        c = ("class", cls.number)
        link((), c)
        for sec in cls.sections:
            s = c + ("section", sec.number)
            link(c, s)
            for head in sec.heads:
                h = s + ("head", head.number)
                link(s, h)
                for pos, para_idx, para in head.paragraph_positions():
                    g = h + ("posgroup", pos.value)
                    link(h, g)  # re-linking an existing POS group is a no-op
                    p = g + ("para", para_idx)
                    link(g, p)
                    for sg_idx in range(len(para.groups)):
                        n = p + ("sg", sg_idx)
                        link(p, n)
                        addr = Address(
                            cls.number, sec.number, head.number, pos, para_idx, sg_idx
                        )
                        sg_nodes[str(addr)] = n
    return adjacency, sg_nodes


def bfs_distance(adjacency: dict, start: tuple, goal: tuple) -> int:
    if start == goal:
        return 0
    seen = {start}
    queue = deque([(start, 0)])
    while queue:
        node, dist = queue.popleft()
        for nxt in adjacency[node]:
            if nxt == goal:
                return dist + 1
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, dist + 1))
    raise AssertionError("graph is connected; unreachable")


def count_entry_tokens(source: str) -> int:
    """Entries in a source document, recounted from raw text: comma and
    semicolon delimited tokens that are not comments, directives, or pure
    cross-references."""
    count = 0
    for line in source.splitlines():
        line = line.strip()
        if not line or line.startswith("//") or line.startswith("#"):
            continue
        for segment in line.split(";"):
            for token in segment.split(","):
                token = token.strip()
                if token and not token.startswith("@"):
                    count += 1
    return count
