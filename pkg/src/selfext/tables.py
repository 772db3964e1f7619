"""Local difficulty on runner pairs/triples and brute-force table derivation.

A bead on the right runner of an adjacent pair with a gap to its left is a
removable node of the pair's residue; a bead on the left runner with a gap to
its right is an addable one.  Every node of that residue lives on the pair, so
the local signed word (rows scanned bottom to top) reduces exactly like the
global one, independently of the remaining runners.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .partitions import check_partition, height, partitions_of, size
from .abacus import rows_for_component


@dataclass(frozen=True)
class RunnerPairConfig:
    """Two adjacent runner components and their bead-count gap (right - left)."""

    left: tuple
    right: tuple
    gap: int

    def __post_init__(self):
        object.__setattr__(self, "left", check_partition(self.left))
        object.__setattr__(self, "right", check_partition(self.right))
        if not isinstance(self.gap, int) or self.gap < 1:
            raise ValueError(f"gap must be a positive integer, got {self.gap!r}")

    @property
    def weight(self) -> int:
        return size(self.left) + size(self.right)


@dataclass(frozen=True)
class RunnerTripleConfig:
    """Three adjacent runner components with consecutive bead-count gaps."""

    left: tuple
    middle: tuple
    right: tuple
    gap1: int
    gap2: int

    def __post_init__(self):
        object.__setattr__(self, "left", check_partition(self.left))
        object.__setattr__(self, "middle", check_partition(self.middle))
        object.__setattr__(self, "right", check_partition(self.right))
        for g in (self.gap1, self.gap2):
            if not isinstance(g, int) or g < 1:
                raise ValueError(f"gaps must be positive integers, got {g!r}")

    @property
    def weight(self) -> int:
        return size(self.left) + size(self.middle) + size(self.right)

    @property
    def gaps(self) -> tuple:
        """Gaps measured from the left runner: (g1, g1 + g2)."""
        return (self.gap1, self.gap1 + self.gap2)

    def pairs(self) -> tuple:
        return (RunnerPairConfig(self.left, self.middle, self.gap1),
                RunnerPairConfig(self.middle, self.right, self.gap2))


@dataclass(frozen=True)
class LocalSignature:
    """Reduced signed word of a runner pair, with the rows that emitted it."""

    word: str
    rows: tuple
    epsilon: int
    phi: int
    good_row: int | None
    cogood_row: int | None
    left_beads: int


def _scan_rows(left_rows, right_rows):
    """Signed word of two runners given as bead-row sets, rows ascending."""
    left_rows = set(left_rows)
    right_rows = set(right_rows)
    top = max(left_rows | right_rows, default=-1)
    word = []
    rows = []
    for t in range(top + 1):
        on_left = t in left_rows
        on_right = t in right_rows
        if on_right and not on_left:
            word.append("-")
            rows.append(t)
        elif on_left and not on_right:
            word.append("+")
            rows.append(t)
    return "".join(word), tuple(rows)


def _reduce(word, rows):
    """Erase adjacent "-+" pairs; return surviving (sym, row) lists."""
    pending = []
    plus = []
    for sym, row in zip(word, rows):
        if sym == "-":
            pending.append(row)
        elif pending:
            pending.pop()
        else:
            plus.append(row)
    return plus, pending


def local_signature(pair: RunnerPairConfig) -> LocalSignature:
    """Signature of the pair's residue, computed from the two runners alone."""
    base = pair.weight + pair.gap + 2
    left_rows = rows_for_component(pair.left, base)
    right_rows = rows_for_component(pair.right, base + pair.gap)
    word, rows = _scan_rows(left_rows, right_rows)
    plus, minus = _reduce(word, rows)
    return LocalSignature(
        word=word,
        rows=rows,
        epsilon=len(minus),
        phi=len(plus),
        good_row=minus[0] if minus else None,
        cogood_row=plus[-1] if plus else None,
        left_beads=base,
    )


def locally_difficult(pair: RunnerPairConfig) -> bool:
    """Whether the pair alone forces difficulty at its residue.

    True iff the local signature has epsilon, phi > 0 and the good removable
    bead sits one row above the cogood addable bead; the occupancy the full
    criterion demands of the intervening positions lands on other runners and
    is treated as satisfiable.
    """
    sig = local_signature(pair)
    return (sig.epsilon > 0 and sig.phi > 0
            and sig.good_row == sig.cogood_row + 1)


def derive_table1(max_weight: int) -> list:
    """All locally difficult runner pairs of combined weight <= max_weight.

    Deterministic order: (weight, gap descending, right component, left
    component); max_weight above 7 is outside the verified range and refused.
    """
    if not 0 <= max_weight <= 7:
        raise ValueError(f"max_weight must be in 0..7, got {max_weight}")
    found = []
    for w in range(2, max_weight + 1):
        for left_size in range(w + 1):
            for left in partitions_of(left_size):
                for right in partitions_of(w - left_size):
                    for gap in range(1, w):
                        pair = RunnerPairConfig(left, right, gap)
                        if locally_difficult(pair):
                            found.append(pair)
    found.sort(key=lambda c: (c.weight, -c.gap, c.right, c.left))
    return found


def _difficulty_rows(left_rows, right_rows):
    """(good row, cogood row) of a difficult pair given as bead-row sets."""
    plus, minus = _reduce(*_scan_rows(left_rows, right_rows))
    if not (minus and plus and minus[0] == plus[-1] + 1):
        return None
    return minus[0], plus[-1]


def derive_table2() -> list:
    """All runner triples forcing difficulty at both of their residues.

    Candidates chain two table-1 pairs through a shared middle component with
    total weight <= 7; the joint filter keeps a candidate only when each
    pair's difficulty window finds the third runner occupied where the full
    criterion needs it (outer runner at the other pair's good/cogood rows).
    """
    pairs = derive_table1(7)
    by_left = {}
    for c in pairs:
        by_left.setdefault(c.left, []).append(c)
    out = []
    for first in pairs:
        for second in by_left.get(first.right, []):
            triple = RunnerTripleConfig(first.left, first.right, second.right,
                                        first.gap, second.gap)
            if triple.weight <= 7 and _joint_difficult(triple):
                out.append(triple)
    out.sort(key=lambda t: (t.weight, t.gaps, t.right, t.middle, t.left))
    return out


def table2_candidates() -> list:
    """The overlapping table-1 pair chains before the joint occupancy filter."""
    pairs = derive_table1(7)
    out = []
    for first in pairs:
        for second in pairs:
            if first.right != second.left:
                continue
            triple = RunnerTripleConfig(first.left, first.right, second.right,
                                        first.gap, second.gap)
            if triple.weight <= 7:
                out.append(triple)
    out.sort(key=lambda t: (t.weight, t.gaps, t.right, t.middle, t.left))
    return out


def _triple_rows(triple: RunnerTripleConfig, base: int):
    """Bead-row sets of the three runners in a common display."""
    return (rows_for_component(triple.left, base),
            rows_for_component(triple.middle, base + triple.gap1),
            rows_for_component(triple.right, base + triple.gap1 + triple.gap2))


def _joint_difficult(triple: RunnerTripleConfig) -> bool:
    base = triple.weight + triple.gap1 + triple.gap2 + 2
    left_rows, mid_rows, right_rows = _triple_rows(triple, base)
    first = _difficulty_rows(left_rows, mid_rows)
    second = _difficulty_rows(mid_rows, right_rows)
    if first is None or second is None:
        return False
    # Each pair's criterion requires every position strictly inside its bead
    # window to be occupied; on the third runner of the triple that means the
    # right runner at the first pair's cogood row and the left runner at the
    # second pair's good row.
    return first[1] in set(right_rows) and second[0] in set(left_rows)


def realize_config(config, p: int):
    """Embed a pair or triple into a p-runner abacus and decode the witness.

    Remaining runners carry beads through the difficulty windows so the
    positions the full criterion checks off the configured runners are
    occupied: either plain full prefixes, or (when those force a singular
    decode by wrapping the configured runners' gaps) copies of the configured
    runners' own bead rows.  Returns a p-regular partition difficult at the
    configured residue(s); raises if no placement at this p works.
    """
    from .abacus import decode, AbacusDisplay
    from .partitions import is_p_regular
    from .signatures import is_difficult

    if p < 3:
        raise ValueError("need p >= 3 to host a runner configuration")
    if isinstance(config, RunnerPairConfig):
        comps, spread = (config.left, config.right), (config.gap,)
        span = 2
    elif isinstance(config, RunnerTripleConfig):
        comps, spread = (config.left, config.middle, config.right), \
                        (config.gap1, config.gap2)
        span = 3
    else:
        raise TypeError(f"expected a pair or triple config, got {config!r}")

    base = sum(size(c) for c in comps) + sum(spread) + 2
    own = [rows_for_component(comps[k], base + sum(spread[:k]))
           for k in range(span)]
    windows = []
    for k in range(span - 1):
        win = _difficulty_rows(own[k], own[k + 1])
        if win is None:
            raise ValueError(f"{config} is not (jointly) difficult")
        windows.append(win[0])

    def candidates(required):
        seen = set()
        def emit(rows):
            rows = tuple(sorted(rows))
            if rows not in seen and required <= set(rows):
                seen.add(rows)
                yield rows
        floor = max(required) + 1
        yield from emit(range(floor))
        yield from emit(set().union(*own) | required)
        yield from emit(set().union(*own[:-1]) | required)
        for c in range(floor, floor + 4):
            for comp in comps:
                if height(comp) <= c:
                    yield from emit(rows_for_component(comp, c))
        for c in range(floor, floor + 4):
            for w in range(1, 5):
                for comp in partitions_of(w):
                    if height(comp) <= c:
                        yield from emit(rows_for_component(comp, c))

    need_below = frozenset(windows)
    need_above = frozenset(t - 1 for t in windows)
    errors = []
    for j in range(span - 1, p):
        belows = list(candidates(need_below)) if j - span + 1 > 0 else [()]
        aboves = list(candidates(need_above)) if j < p - 1 else [()]
        for below, above in itertools.product(belows, aboves):
            rows = [own[k - (j - span + 1)] if j - span + 1 <= k <= j
                    else below if k < j - span + 1 else above
                    for k in range(p)]
            beads = sum(len(r) for r in rows)
            occupied = frozenset(t * p + k for k in range(p) for t in rows[k])
            if 0 not in occupied:
                continue
            la = decode(AbacusDisplay(p, beads, occupied))
            residues = [(k - beads) % p for k in range(j - span + 2, j + 1)]
            if not is_p_regular(la, p):
                errors.append(f"j={j}: decoded {la} is {p}-singular")
                continue
            bad = [i for i in residues if not is_difficult(la, p, i)]
            if bad:
                errors.append(f"j={j}: {la} not difficult at {bad}")
                continue
            return la
    detail = "; ".join(errors[:4]) + ("; ..." if len(errors) > 4 else "")
    raise ValueError(f"no embedding of {config} at p={p}: {detail}")
