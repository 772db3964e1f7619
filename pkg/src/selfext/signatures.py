"""i-signatures, normal/conormal nodes, crystal operators, difficulty, reflections.

The signed word of residue-i addable (+) and removable (-) nodes is read in
increasing beta-position order (bottom-left to top-right of the diagram);
adjacent "-+" pairs are erased.  Surviving "-" are the normal nodes A_1..A_eps
labeled bottom to top (good node = A_1), surviving "+" the conormal nodes
B_1..B_phi labeled top to bottom (cogood node = B_1).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import (add_node, addable_nodes, check_partition, height,
                         is_p_regular, node_residue, remove_node,
                         removable_nodes)
from .abacus import core_and_weight, display


@dataclass(frozen=True)
class SignatureReport:
    """Full residue-i signature data of a partition."""

    partition: tuple
    p: int
    residue: int
    word: tuple          # ((node, sign), ...) in reading order
    reduced: tuple       # surviving entries of word, same order
    normals: tuple       # A_1..A_eps, bottom to top
    conormals: tuple     # B_1..B_phi, top to bottom
    epsilon: int
    phi: int
    epsilon_prime: int
    phi_prime: int

    @property
    def good(self):
        """Bottom-most normal node, or None."""
        return self.normals[0] if self.normals else None

    @property
    def cogood(self):
        """Top-most conormal node, or None."""
        return self.conormals[0] if self.conormals else None


def signature(la, p: int, i: int) -> SignatureReport:
    """Residue-i signature report of la."""
    la = check_partition(la)
    i %= p
    entries = []
    for node in removable_nodes(la):
        if node_residue(node, p) == i:
            row, col = node
            entries.append((col - row, node, "-"))
    for node in addable_nodes(la):
        if node_residue(node, p) == i:
            row, col = node
            entries.append((col - row, node, "+"))
    entries.sort()  # increasing beta-position = bottom-left to top-right
    word = tuple((node, sign) for _, node, sign in entries)
    pending = []   # indices of unmatched '-'
    plus = []      # indices of surviving '+'
    for idx, (_, sign) in enumerate(word):
        if sign == "-":
            pending.append(idx)
        elif pending:
            pending.pop()
        else:
            plus.append(idx)
    surviving = sorted(plus + pending)
    reduced = tuple(word[idx] for idx in surviving)
    normals = tuple(word[idx][0] for idx in pending)
    conormals = tuple(word[idx][0] for idx in reversed(plus))
    n_removable = sum(1 for _, sign in word if sign == "-")
    return SignatureReport(la, p, i, word, reduced, normals, conormals,
                           len(pending), len(plus), n_removable,
                           len(word) - n_removable)


def epsilon(la, p, i) -> int:
    return signature(la, p, i).epsilon


def phi(la, p, i) -> int:
    return signature(la, p, i).phi


def e_tilde(la, p: int, i: int, r: int = 1):
    """Remove the r bottom-most normal i-nodes; None if r exceeds epsilon_i."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    if r < 0:
        raise ValueError("r must be non-negative")
    sig = signature(la, p, i)
    if r > sig.epsilon:
        return None
    out = la
    for node in sig.normals[:r]:
        out = remove_node(out, node)
    return out


def f_tilde(la, p: int, i: int, r: int = 1):
    """Add the r top-most conormal i-nodes; None if r exceeds phi_i."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    if r < 0:
        raise ValueError("r must be non-negative")
    sig = signature(la, p, i)
    if r > sig.phi:
        return None
    out = la
    for node in sig.conormals[:r]:
        out = add_node(out, node)
    return out


def e_hat(la, p: int, i: int, r: int = 1):
    """Remove the r bottom-most i-removable nodes; None past epsilon'_i."""
    la = check_partition(la)
    nodes = [node for node in removable_nodes(la) if node_residue(node, p) == i % p]
    nodes.sort(key=lambda node: node[1] - node[0])  # bottom first
    if r > len(nodes):
        return None
    out = la
    for node in nodes[:r]:
        out = remove_node(out, node)
    return out


def f_hat(la, p: int, i: int, r: int = 1):
    """Add the r top-most i-addable nodes; None past phi'_i."""
    la = check_partition(la)
    nodes = [node for node in addable_nodes(la) if node_residue(node, p) == i % p]
    nodes.sort(key=lambda node: node[0] - node[1])  # top first
    if r > len(nodes):
        return None
    out = la
    for node in nodes[:r]:
        out = add_node(out, node)
    return out


def weight_delta(la, p: int, i: int, r: int) -> int:
    """Block-weight change wt(f~_i^r la) - wt(la) = r(phi_i - eps_i - r)."""
    sig = signature(la, p, i)
    if not 0 <= r <= sig.phi:
        raise ValueError(f"need 0 <= r <= phi_i = {sig.phi}, got {r}")
    return r * (sig.phi - sig.epsilon - r)


def is_difficult(la, p: int, i: int) -> bool:
    """eps_i, phi_i > 0 and removing the good while adding the cogood node
    destroys p-regularity."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    sig = signature(la, p, i)
    if sig.epsilon == 0 or sig.phi == 0:
        return False
    swapped = add_node(remove_node(la, sig.good), sig.cogood)
    return not is_p_regular(swapped, p)


def difficult_abacus_check(la, p: int, i: int) -> bool:
    """Abacus form of difficulty: good bead at a = b + p with the cogood gap
    at b and every position strictly between b and a-1 occupied."""
    sig = signature(la, p, i)
    if sig.epsilon == 0 or sig.phi == 0:
        raise ValueError(f"difficulty pattern needs eps_i, phi_i > 0 at i={i}")
    gamma = display(la, p)
    n = gamma.beads
    row, col = sig.good
    a = col + n - row
    row, col = sig.cogood
    b = (col - 1) + n - row + 1
    return a == b + p and all(q in gamma.occupied for q in range(b + 1, a - 1))


@dataclass(frozen=True)
class AdjacencyReport:
    """Singularity of la_{A_r} / la^{B_r} versus the node-adjacency tests."""

    partition: tuple
    p: int
    residue: int
    # entries (r, singular, adjacent) for r = 1..eps resp. 1..phi
    removals: tuple
    additions: tuple


def node_adjacency_checks(la, p: int, i: int) -> AdjacencyReport:
    """For each normal A_r / conormal B_r, compare "result is p-singular"
    with the step-pattern test A_r = A_{r-1} + (1-p, 1) resp.
    B_r = B_{r-1} + (p-1, -1); the two must agree."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    sig = signature(la, p, i)
    removals = []
    for r in range(1, sig.epsilon + 1):
        node = sig.normals[r - 1]
        singular = not is_p_regular(remove_node(la, node), p)
        prev = sig.normals[r - 2] if r >= 2 else None
        adjacent = r >= 2 and node == (prev[0] + 1 - p, prev[1] + 1)
        if singular != adjacent:
            raise RuntimeError(f"adjacency mismatch at A_{r} of {la}, i={i}")
        removals.append((r, singular, adjacent))
    additions = []
    for r in range(1, sig.phi + 1):
        node = sig.conormals[r - 1]
        singular = not is_p_regular(add_node(la, node), p)
        prev = sig.conormals[r - 2] if r >= 2 else None
        adjacent = r >= 2 and node == (prev[0] + p - 1, prev[1] - 1)
        if singular != adjacent:
            raise RuntimeError(f"adjacency mismatch at B_{r} of {la}, i={i}")
        additions.append((r, singular, adjacent))
    return AdjacencyReport(la, p, i % p, tuple(removals), tuple(additions))


def reflections(la, p: int) -> list:
    """All (i, mu) with mu = f~_i^{phi_i} la when eps_i = 0, or
    mu = e~_i^{eps_i} la when phi_i = 0 (degenerate eps = phi = 0 excluded)."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    out = []
    for i in range(p):
        sig = signature(la, p, i)
        if sig.epsilon == 0 and sig.phi > 0:
            out.append((i, f_tilde(la, p, i, sig.phi)))
        elif sig.phi == 0 and sig.epsilon > 0:
            out.append((i, e_tilde(la, p, i, sig.epsilon)))
    return out


def fixed_top_shape(la, p: int):
    """Residue i when la = ((a+1)^c, a^{p-2}, a-1, ...) with (c, a+1) good and
    (c+p-1, a) cogood at residue i; None otherwise."""
    la = check_partition(la)
    if p <= 2:
        raise ValueError("shape rule needs p > 2")
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    if not la or la[0] < 2:
        return None
    a = la[0] - 1
    c = next(k for k in range(1, len(la) + 1) if k == len(la) or la[k] != la[0])
    padded = la + (0,) * max(0, c + p - 1 - len(la))
    if any(padded[k] != a for k in range(c, c + p - 2)):
        return None
    if padded[c + p - 2] != a - 1:
        return None
    node_a = (c, a + 1)
    node_b = (c + p - 1, a)
    i = node_residue(node_a, p)
    if node_residue(node_b, p) != i:
        return None
    sig = signature(la, p, i)
    if sig.good != node_a or sig.cogood != node_b:
        return None
    return i
