"""Abacus displays on p runners: cores, quotients, weights, runner configs.

A display places beads at the beta-numbers {la_i + N - i : 1 <= i <= N} of a
partition read with N beads; position q sits on runner q mod p at row q // p.
Position 0 is always kept occupied (pass to N + p beads when it is not).
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import check_partition, height


@dataclass(frozen=True)
class AbacusDisplay:
    """Bead positions of a partition on p runners."""

    p: int
    beads: int
    occupied: frozenset

    def __post_init__(self):
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if len(self.occupied) != self.beads:
            raise ValueError("bead count does not match occupied set")
        if any(q < 0 for q in self.occupied):
            raise ValueError("positions must be non-negative")
        if 0 not in self.occupied:
            raise ValueError("position 0 must be occupied")

    def runner_rows(self, j: int) -> tuple:
        """Sorted rows of the beads sitting on runner j."""
        return tuple(sorted(q // self.p for q in self.occupied if q % self.p == j))

    def to_json(self) -> dict:
        return {"p": self.p, "beads": self.beads, "occupied": sorted(self.occupied)}

    @classmethod
    def from_json(cls, data: dict) -> "AbacusDisplay":
        return cls(int(data["p"]), int(data["beads"]), frozenset(int(q) for q in data["occupied"]))


@dataclass(frozen=True)
class RunnerStats:
    """Per-runner bead counts, quotient components, weights, and node residues."""

    p: int
    beads: int
    bead_counts: tuple
    components: tuple
    weights: tuple
    residues: tuple

    @property
    def weight(self) -> int:
        return sum(self.weights)


def beta_set(la, beads: int) -> frozenset:
    """Beta-numbers of la read with the given number of beads."""
    la = check_partition(la)
    if beads < height(la):
        raise ValueError(f"need at least {height(la)} beads for {la}")
    parts = la + (0,) * (beads - height(la))
    return frozenset(parts[i - 1] + beads - i for i in range(1, beads + 1))


def display(la, p: int, beads: int | None = None) -> AbacusDisplay:
    """Abacus display of la; extends by p beads if position 0 would be empty."""
    la = check_partition(la)
    if beads is None:
        beads = height(la) + 1
    if beads < max(height(la), 1):
        raise ValueError(f"need at least {max(height(la), 1)} beads for {la}")
    occ = beta_set(la, beads)
    if 0 not in occ:
        beads += p
        occ = beta_set(la, beads)
    return AbacusDisplay(p, beads, occ)


def decode(gamma: AbacusDisplay) -> tuple:
    """Partition encoded by a display: la_k = (k-th largest position) - (N - k)."""
    positions = sorted(gamma.occupied, reverse=True)
    parts = [positions[k] - (gamma.beads - 1 - k) for k in range(gamma.beads)]
    return check_partition(parts)


def rows_for_component(component, count: int) -> tuple:
    """Bead rows of a single runner carrying `component` with `count` beads."""
    component = check_partition(component)
    if count < height(component):
        raise ValueError(f"runner needs at least {height(component)} beads for {component}")
    parts = component + (0,) * (count - height(component))
    return tuple(sorted(parts[i - 1] + count - i for i in range(1, count + 1)))


def component_from_rows(rows) -> tuple:
    """Partition read off a single runner whose beads sit at the given rows."""
    rows = sorted(rows)
    count = len(rows)
    parts = [rows[count - i] - (count - i) for i in range(1, count + 1)]
    return check_partition(parts)


def quotient(gamma: AbacusDisplay) -> RunnerStats:
    """Per-runner statistics with the display's own runner indexing."""
    counts, comps, weights = [], [], []
    for j in range(gamma.p):
        rows = gamma.runner_rows(j)
        comp = component_from_rows(rows)
        counts.append(len(rows))
        comps.append(comp)
        weights.append(sum(comp))
    residues = tuple((j - gamma.beads) % gamma.p for j in range(gamma.p))
    return RunnerStats(gamma.p, gamma.beads, tuple(counts), tuple(comps),
                       tuple(weights), residues)


def core_and_weight(la, p: int) -> tuple:
    """(p-core, weight): push every bead maximally up its runner, count moves."""
    gamma = display(la, p)
    moves = 0
    occ = set()
    for j in range(p):
        rows = gamma.runner_rows(j)
        moves += sum(row - t for t, row in enumerate(rows))
        occ.update(j + p * t for t in range(len(rows)))
    core = decode(AbacusDisplay(p, gamma.beads, frozenset(occ)))
    return core, moves


def decode_config(cfg, p: int) -> tuple:
    """Partition of a runner config: p pairs (component, bead-count offset).

    The base bead count is the smallest making every runner viable, then full
    top rows are added until position 0 is occupied.
    """
    cfg = list(cfg)
    if len(cfg) != p:
        raise ValueError(f"config needs exactly {p} runners, got {len(cfg)}")
    comps = [check_partition(comp) for comp, _ in cfg]
    offsets = [int(off) for _, off in cfg]
    base = max([0] + [height(comp) - off for comp, off in zip(comps, offsets)]
               + [-off for off in offsets])
    # position 0 occupied means runner 0 keeps a bead in row 0
    if height(comps[0]) >= base + offsets[0]:
        base += 1
    occ = set()
    for j in range(p):
        for row in rows_for_component(comps[j], base + offsets[j]):
            occ.add(j + p * row)
    return decode(AbacusDisplay(p, len(occ), frozenset(occ)))


def parse_config(text: str, p: int | None = None):
    """Parse runner-config text like '((-,0),(-,0),((1),1),(-,2),((1),0))'.

    A trailing '^k' after an entry repeats it k times; components use the
    partition text format.  Returns a list of (component, offset) pairs.
    """
    from .partitions import parse_partition

    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"config must be parenthesized: {text!r}")
    body = s[1:-1]
    entries = []
    pos = 0
    while pos < len(body):
        if body[pos] in ", \t":
            pos += 1
            continue
        if body[pos] != "(":
            raise ValueError(f"expected '(' at {body[pos:]!r}")
        depth, start = 0, pos
        while pos < len(body):
            if body[pos] == "(":
                depth += 1
            elif body[pos] == ")":
                depth -= 1
                if depth == 0:
                    break
            pos += 1
        if depth != 0:
            raise ValueError(f"unbalanced parentheses in {text!r}")
        entry = body[start + 1:pos]
        pos += 1
        repeat = 1
        if pos < len(body) and body[pos] == "^":
            end = pos + 1
            while end < len(body) and body[end].isdigit():
                end += 1
            repeat = int(body[pos + 1:end])
            pos = end
        # entry is 'component,offset' where component is '-' or '(...)'
        entry = entry.strip()
        if entry.startswith("("):
            close = entry.index(")")
            comp = parse_partition(entry[1:close])
            rest = entry[close + 1:].lstrip()
        elif entry.startswith("-"):
            comp = ()
            rest = entry[1:].lstrip()
        else:
            raise ValueError(f"bad component in entry {entry!r}")
        if not rest.startswith(","):
            raise ValueError(f"missing offset in entry {entry!r}")
        offset = int(rest[1:].strip())
        entries.extend([(comp, offset)] * repeat)
    if p is not None and len(entries) != p:
        raise ValueError(f"config has {len(entries)} runners, expected {p}")
    return entries


def transpose_display(gamma: AbacusDisplay) -> AbacusDisplay:
    """Complement-and-reverse in a window [0, W), W a multiple of p.

    Decodes to the conjugate of the decoded partition.
    """
    top = max(gamma.occupied)
    window = gamma.p * ((top + 2 + gamma.p - 1) // gamma.p)
    occ = frozenset(window - 1 - q for q in range(window) if q not in gamma.occupied)
    return AbacusDisplay(gamma.p, window - gamma.beads, occ)


def removable_positions(gamma: AbacusDisplay) -> list:
    """Occupied positions k >= 1 with k-1 empty, ascending."""
    return sorted(q for q in gamma.occupied if q >= 1 and q - 1 not in gamma.occupied)


def addable_positions(gamma: AbacusDisplay) -> list:
    """Empty positions k with k-1 occupied, ascending."""
    top = max(gamma.occupied)
    return sorted(q for q in range(1, top + 2)
                  if q not in gamma.occupied and q - 1 in gamma.occupied)
