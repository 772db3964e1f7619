"""Core partition arithmetic: shape, nodes, residues, conjugation, dominance, regularity.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the trivial partition of 0.  Nodes are 1-based (row, col) pairs.
"""
from __future__ import annotations

import itertools

Partition = tuple
Node = tuple


def check_partition(la) -> tuple:
    """Normalize to a tuple, dropping trailing zeros; raise on bad input."""
    parts = tuple(int(x) for x in la)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive: {la!r}")
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {la!r}")
    return parts


def size(la) -> int:
    """Number of boxes |la|."""
    return sum(la)


def height(la) -> int:
    """Number of parts h(la)."""
    return len(la)


def parse_partition(text: str) -> tuple:
    """Parse '4,2^3,1' into (4,2,2,2,1); '-' (or '') is the empty partition."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    parts = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty chunk in partition text {text!r}")
        if "^" in chunk:
            base, _, exp = chunk.partition("^")
            value, mult = int(base), int(exp)
        else:
            value, mult = int(chunk), 1
        if mult <= 0:
            raise ValueError(f"bad multiplicity in {chunk!r}")
        parts.extend([value] * mult)
    return check_partition(parts)


def format_partition(la) -> str:
    """Render (4,2,2,2,1) as '4,2^3,1'; the empty partition as '-'."""
    if not la:
        return "-"
    chunks = []
    for value, group in itertools.groupby(la):
        mult = len(list(group))
        chunks.append(str(value) if mult == 1 else f"{value}^{mult}")
    return ",".join(chunks)


def is_p_regular(la, p: int) -> bool:
    """True iff no positive part value occurs p or more times."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    return all(len(list(g)) < p for _, g in itertools.groupby(la))


def is_p_restricted(la, p: int) -> bool:
    """True iff consecutive part differences (including the last part) are < p."""
    if p < 2:
        raise ValueError(f"p must be at least 2, got {p}")
    padded = tuple(la) + (0,)
    return all(padded[k] - padded[k + 1] < p for k in range(len(la)))


def transpose(la) -> tuple:
    """Conjugate partition: column lengths of la."""
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= c) for c in range(1, la[0] + 1))


def dominates(la, mu) -> bool:
    """True iff every prefix sum of la is >= the matching prefix sum of mu."""
    if sum(la) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {la} vs {mu}")
    total_l = total_m = 0
    for k in range(max(len(la), len(mu))):
        total_l += la[k] if k < len(la) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def node_residue(node, p: int) -> int:
    """Residue (col - row) mod p of a node."""
    row, col = node
    return (col - row) % p


def content(la, p: int) -> tuple:
    """Residue histogram of the diagram: counts[i] = #nodes of residue i."""
    counts = [0] * p
    for row, part in enumerate(la, start=1):
        for col in range(1, part + 1):
            counts[(col - row) % p] += 1
    return tuple(counts)


def removable_nodes(la) -> list:
    """Nodes whose removal leaves a partition, ordered by row ascending."""
    out = []
    for k in range(len(la)):
        below = la[k + 1] if k + 1 < len(la) else 0
        if la[k] > below:
            out.append((k + 1, la[k]))
    return out


def addable_nodes(la) -> list:
    """Nodes whose addition gives a partition, ordered by row ascending."""
    out = [(1, la[0] + 1)] if la else [(1, 1)]
    for k in range(1, len(la)):
        if la[k - 1] > la[k]:
            out.append((k + 1, la[k] + 1))
    if la:
        out.append((len(la) + 1, 1))
    return out


def remove_node(la, node) -> tuple:
    """Partition with the given removable node deleted."""
    row, col = node
    if (row, col) not in removable_nodes(la):
        raise ValueError(f"node {node} is not removable from {la}")
    parts = list(la)
    parts[row - 1] -= 1
    return check_partition(parts)


def add_node(la, node) -> tuple:
    """Partition with the given addable node attached."""
    row, col = node
    if (row, col) not in addable_nodes(la):
        raise ValueError(f"node {node} is not addable to {la}")
    parts = list(la) + [0]
    parts[row - 1] += 1
    return check_partition(parts)


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest
