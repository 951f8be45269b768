"""graph6, plain edge-list, and certificate text formats.

graph6 follows the published format byte for byte: the order is one byte
63+n for n <= 62, otherwise '~' followed by three bytes encoding n in
big-endian 6-bit groups; the upper triangle x(0,1), x(0,2), x(1,2), ...
is packed into 6-bit groups, zero padded, each offset by 63.
"""

from __future__ import annotations

from .errors import CapacityExceededError, ParseError
from .graph import Graph, VertexSet


def graph6_encode(g: Graph) -> str:
    n = g.order
    if n <= 62:
        head = [63 + n]
    elif n <= 258047:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise CapacityExceededError("graph6 order too large")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.rows[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        body.append(63 + group)
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<") :]
    data = [ord(c) - 63 for c in text]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError(f"invalid graph6 byte in {text!r}")
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] == 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 order")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for group in body:
        for k in range(5, -1, -1):
            bits.append(group >> k & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def edge_list_encode(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty edge-list input")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise ParseError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise ParseError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_graphs(path, fmt: str = "g6"):
    """Read one graph per line (g6) or a single edge-list file."""
    with open(path) as fh:
        text = fh.read()
    if fmt == "g6":
        return [graph6_decode(ln) for ln in text.splitlines() if ln.strip()]
    if fmt == "edges":
        return [edge_list_decode(text)]
    raise ParseError(f"unknown format {fmt!r}")


# -- certificates -------------------------------------------------------


def certificate_encode(branch_sets) -> str:
    """Target order, then one line of host vertices per branch set."""
    lines = [str(len(branch_sets))]
    for bs in branch_sets:
        lines.append(" ".join(str(v) for v in bs.members()))
    return "\n".join(lines) + "\n"


def certificate_decode(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty certificate")
    try:
        k = int(lines[0])
    except ValueError as exc:
        raise ParseError(f"bad certificate header {lines[0]!r}") from exc
    if len(lines) - 1 != k:
        raise ParseError(f"expected {k} branch sets, got {len(lines) - 1}")
    out = []
    for ln in lines[1:]:
        try:
            out.append(VertexSet.from_iterable(int(tok) for tok in ln.split()))
        except ValueError as exc:
            raise ParseError(f"bad branch-set line {ln!r}") from exc
    return out
