"""Block identity, block enumeration, Rouquier cores, RoCK membership."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import check_partition, height, is_p_regular, partitions_of
from .abacus import (AbacusDisplay, beta_set, component_from_rows,
                     core_and_weight, decode, display, rows_for_component)


@dataclass(frozen=True)
class BlockId:
    """A block label: p-core, weight, and the prime."""

    core: tuple
    weight: int
    p: int

    def __post_init__(self):
        core = check_partition(self.core)
        if core_and_weight(core, self.p)[1] != 0:
            raise ValueError(f"{core} is not a {self.p}-core")
        if self.weight < 0:
            raise ValueError("weight must be non-negative")

    @property
    def n(self) -> int:
        return sum(self.core) + self.p * self.weight


def block_of(la, p: int) -> BlockId:
    """Block label of la."""
    core, weight = core_and_weight(la, p)
    return BlockId(core, weight, p)


def _multipartitions(d: int, parts: int):
    """All tuples of `parts` partitions with total size d, in lex order of
    (composition, partitions)."""
    if parts == 1:
        for la in partitions_of(d):
            yield (la,)
        return
    for first_size in range(d, -1, -1):
        for first in partitions_of(first_size):
            for rest in _multipartitions(d - first_size, parts - 1):
                yield (first,) + rest


def enumerate_block(b: BlockId, regular_only: bool = False) -> list:
    """All partitions with the given core and weight, by distributing the
    weight over the runners of the core's display as quotient components."""
    p, d = b.p, b.weight
    base = display(b.core, p)
    beads = base.beads + p * (d + 1)  # extra full rows keep position 0 occupied
    counts = [len(rows) + d + 1 for rows in
              (base.runner_rows(j) for j in range(p))]
    out = []
    for multi in _multipartitions(d, p):
        occ = set()
        for j in range(p):
            for row in rows_for_component(multi[j], counts[j]):
                occ.add(j + p * row)
        la = decode(AbacusDisplay(p, beads, frozenset(occ)))
        if not regular_only or is_p_regular(la, p):
            out.append(la)
    return out


def is_rouquier(rho, p: int, d: int) -> bool:
    """True iff some display of the core rho has runner bead counts
    r_0 <= ... <= r_{p-1} growing by at least d-1 at each step."""
    rho = check_partition(rho)
    if core_and_weight(rho, p)[1] != 0:
        raise ValueError(f"{rho} is not a {p}-core")
    h = height(rho)
    for beads in range(max(h, 1), h + p * (d + 1) + 1):
        beta = beta_set(rho, beads)
        counts = [sum(1 for q in beta if q % p == j) for j in range(p)]
        if all(counts[j + 1] - counts[j] >= d - 1 for j in range(p - 1)):
            return True
    return False


def is_rock_block(la, p: int) -> bool:
    """True iff la lies in a block with a d-Rouquier core, d = wt(la)."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    core, d = core_and_weight(la, p)
    return is_rouquier(core, p, d)
