"""Rule engine emitting machine-checkable certificates of Ext-vanishing.

A certificate is a chain of reduction steps, each an Ext embedding or
isomorphism between simple-module labels, ending at a partition where a
trusted terminal criterion applies.  Terminal tags name the criterion
(semisimple degree, small block weight, small height, RoCK block,
irreducible-Specht restriction); reduction tags name the move.  validate
re-derives every precondition and action from scratch.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .partitions import (add_node, check_partition, height, is_p_regular,
                         remove_node, size)
from .abacus import core_and_weight
from .signatures import (e_tilde, f_tilde, fixed_top_shape, is_difficult,
                         reflections, signature)
from .bijections import mullineux, regularize
from .blocks import is_rock_block
from .specht import specht_irreducible, theorem_b_applicable

TERMINAL_TAGS = ("T-SMALL", "T-WEIGHT", "T-HEIGHT", "T-ROCK", "T-SPECHT")
REDUCTION_TAGS = ("R-REFLECT", "R-TRICK1", "R-SOCLE", "R-FIXEDTOP",
                  "R-TRICK2", "R-MULLINEUX")
ALL_RULES = frozenset(TERMINAL_TAGS + REDUCTION_TAGS)

WEIGHT_BOUND = 7    # terminal T-WEIGHT: block weight at most 7
HEIGHT_MARGIN = 2   # terminal T-HEIGHT: height at most p + 2


@dataclass(frozen=True)
class Rule:
    """A rule invocation: tag plus the parameters needed to re-check it."""

    tag: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Step:
    """One reduction edge: rule applied to source yields target."""

    rule: Rule
    source: tuple
    target: tuple


@dataclass(frozen=True)
class Certificate:
    """An ordered reduction chain from start to a terminal criterion."""

    p: int
    start: tuple
    steps: tuple
    terminal: Rule | None
    status: str  # "CERTIFIED" or "UNKNOWN"

    @property
    def final(self) -> tuple:
        """Partition the terminal rule is asserted for."""
        return self.steps[-1].target if self.steps else self.start

    def to_dict(self) -> dict:
        """JSON-ready form with partitions and paths as lists."""
        return {
            "p": self.p,
            "start": list(self.start),
            "steps": [{"rule": s.rule.tag, "params": _params_out(s.rule.params),
                       "from": list(s.source), "to": list(s.target)}
                      for s in self.steps],
            "terminal": None if self.terminal is None else
                        {"rule": self.terminal.tag,
                         "params": _params_out(self.terminal.params)},
            "status": self.status,
        }


def _params_out(params: dict) -> dict:
    return {k: list(v) if isinstance(v, tuple) else v
            for k, v in params.items()}


def _params_in(params: dict) -> dict:
    return {k: tuple(v) if isinstance(v, list) else v
            for k, v in params.items()}


def certificate_from_dict(data: dict) -> Certificate:
    """Rebuild a Certificate from its to_dict form."""
    steps = tuple(Step(Rule(s["rule"], _params_in(s["params"])),
                       tuple(s["from"]), tuple(s["to"]))
                  for s in data["steps"])
    terminal = data["terminal"]
    if terminal is not None:
        terminal = Rule(terminal["rule"], _params_in(terminal["params"]))
    return Certificate(data["p"], tuple(data["start"]), steps, terminal,
                       data["status"])


def _normalize_rules(enabled_rules) -> frozenset:
    if enabled_rules is None:
        return ALL_RULES
    rules = frozenset(str(tag).upper() for tag in enabled_rules)
    unknown = rules - ALL_RULES
    if unknown:
        raise ValueError(f"unknown rules: {sorted(unknown)}")
    return rules


def trick1_targets(la, p: int) -> list:
    """All (i, mu) with eps_i > 0, la not i-difficult, mu = e~_i^{eps_i} la."""
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    out = []
    for i in range(p):
        eps = signature(la, p, i).epsilon
        if eps > 0 and not is_difficult(la, p, i):
            out.append((i, e_tilde(la, p, i, eps)))
    return out


def trick2_targets(la, p: int, max_chain: int | None = None) -> list:
    """All Trick-2 chains of length at most max_chain (default p).

    A chain walks residues i+1, i+2, ... applying f~^phi while eps stays 0,
    and ends at the first residue i+m (m >= 2) with eps > 0; it is valid when
    additionally phi > 0 there and the endpoint is not difficult.  Returns
    (residue path, target) pairs with target = e~^eps of the endpoint; the
    path lists the stepped residues, its last entry being the endpoint's.
    """
    la = check_partition(la)
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    if max_chain is None:
        max_chain = p
    if max_chain < 1:
        raise ValueError("max_chain must be positive")
    out = []
    for i in range(p):
        mu = la
        path = []
        for m in range(2, max_chain + 1):
            j = (i + m - 1) % p
            if signature(mu, p, j).epsilon != 0:
                break
            mu = f_tilde(mu, p, j, signature(mu, p, j).phi)
            path.append(j)
            jf = (i + m) % p
            sig = signature(mu, p, jf)
            if sig.epsilon > 0:
                if sig.phi > 0 and not is_difficult(mu, p, jf):
                    out.append((tuple(path) + (jf,),
                                e_tilde(mu, p, jf, sig.epsilon)))
                break
    return out


def _socle_edges(la, p: int, i: int) -> list:
    """Socle embeddings at residue i: ("e"/"f", target) pairs.

    The e-move passes to e~_i^{eps} la and is blocked when phi > 0 and adding
    the (eps+1)-th conormal node of the target breaks p-regularity; the f-move
    passes to f~_i^{phi} la with the dual blocking condition.
    """
    sig = signature(la, p, i)
    r, s = sig.epsilon, sig.phi
    out = []
    if r > 0:
        mu = e_tilde(la, p, i, r)
        ok = True
        if s > 0:
            b = signature(mu, p, i).conormals[r]
            ok = is_p_regular(add_node(mu, b), p)
        if ok:
            out.append(("e", mu))
    if s > 0:
        nu = f_tilde(la, p, i, s)
        ok = True
        if r > 0:
            a = signature(nu, p, i).normals[s]
            ok = is_p_regular(remove_node(nu, a), p)
        if ok:
            out.append(("f", nu))
    return out


def _terminal_rule(la, p: int, rules: frozenset) -> Rule | None:
    """Cheapest enabled terminal criterion holding for la, or None."""
    if "T-SMALL" in rules and size(la) < p:
        return Rule("T-SMALL")
    if "T-WEIGHT" in rules and core_and_weight(la, p)[1] <= WEIGHT_BOUND:
        return Rule("T-WEIGHT")
    if "T-HEIGHT" in rules and height(la) <= p + HEIGHT_MARGIN:
        return Rule("T-HEIGHT")
    if "T-ROCK" in rules and is_rock_block(la, p):
        return Rule("T-ROCK")
    if "T-SPECHT" in rules:
        hit = theorem_b_applicable(la, p)
        if hit is not None:
            i, nu = hit
            return Rule("T-SPECHT", {"residue": i, "witness": nu})
    return None


def _edges(la, p: int, rules: frozenset):
    """Enabled reduction edges from la as (Rule, target), deterministic order."""
    if "R-REFLECT" in rules:
        for i, mu in reflections(la, p):
            yield Rule("R-REFLECT", {"residue": i}), mu
    if "R-TRICK1" in rules:
        for i, mu in trick1_targets(la, p):
            yield Rule("R-TRICK1", {"residue": i}), mu
    if "R-SOCLE" in rules:
        for i in range(p):
            for direction, mu in _socle_edges(la, p, i):
                yield Rule("R-SOCLE", {"residue": i,
                                       "direction": direction}), mu
    if "R-FIXEDTOP" in rules:
        i = fixed_top_shape(la, p)
        if i is not None:
            yield (Rule("R-FIXEDTOP", {"residue": i}),
                   remove_node(la, signature(la, p, i).good))
    if "R-TRICK2" in rules:
        for path, mu in trick2_targets(la, p, p):
            yield Rule("R-TRICK2", {"residues": path}), mu


def _variants(la, p: int, rules: frozenset) -> list:
    """la itself, plus its Mullineux twin behind an explicit step if distinct."""
    out = [((), la)]
    if "R-MULLINEUX" in rules:
        twin = mullineux(la, p)
        if twin != la:
            out.append(((Step(Rule("R-MULLINEUX"), la, twin),), twin))
    return out


def _canon(la, p: int, rules: frozenset) -> tuple:
    """Visited-set key: lexicographic min of the Mullineux pair."""
    if "R-MULLINEUX" in rules:
        return min(la, mullineux(la, p))
    return la


def certify(la, p: int, enabled_rules=None, max_steps: int = 64) -> Certificate:
    """Search breadth-first for a certificate that Ext^1(D^la, D^la) = 0.

    Terminal criteria are checked on each popped node (and its Mullineux
    twin) before any expansion; the visited set identifies a partition with
    its twin, and certificates never exceed max_steps steps.  Returns an
    UNKNOWN certificate with no steps when the search space is exhausted.
    """
    la = check_partition(la)
    if p <= 2:
        raise ValueError("the rule engine needs p > 2")
    if not is_p_regular(la, p):
        raise ValueError(f"{la} is not {p}-regular")
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    rules = _normalize_rules(enabled_rules)
    queue = deque([(la, ())])
    visited = {_canon(la, p, rules)}
    while queue:
        node, path = queue.popleft()
        for prefix, cur in _variants(node, p, rules):
            vpath = path + prefix
            if len(vpath) > max_steps:
                continue
            terminal = _terminal_rule(cur, p, rules)
            if terminal is not None:
                return Certificate(p, la, vpath, terminal, "CERTIFIED")
        for prefix, cur in _variants(node, p, rules):
            vpath = path + prefix
            if len(vpath) >= max_steps:
                continue
            for rule, target in _edges(cur, p, rules):
                key = _canon(target, p, rules)
                if key in visited:
                    continue
                visited.add(key)
                queue.append((target, vpath + (Step(rule, cur, target),)))
    return Certificate(p, la, (), None, "UNKNOWN")


def _check_step(step: Step, p: int) -> bool:
    """Re-derive one reduction step's precondition and action from scratch."""
    la, target, params = step.source, step.target, step.rule.params
    tag = step.rule.tag
    if tag == "R-MULLINEUX":
        return target == mullineux(la, p)
    if tag == "R-REFLECT":
        i = params["residue"]
        sig = signature(la, p, i)
        if sig.epsilon == 0 and sig.phi > 0:
            return target == f_tilde(la, p, i, sig.phi)
        if sig.phi == 0 and sig.epsilon > 0:
            return target == e_tilde(la, p, i, sig.epsilon)
        return False
    if tag == "R-TRICK1":
        i = params["residue"]
        eps = signature(la, p, i).epsilon
        return (eps > 0 and not is_difficult(la, p, i)
                and target == e_tilde(la, p, i, eps))
    if tag == "R-SOCLE":
        return (params["direction"], target) in _socle_edges(
            la, p, params["residue"])
    if tag == "R-FIXEDTOP":
        i = fixed_top_shape(la, p)
        return (i == params["residue"]
                and target == remove_node(la, signature(la, p, i).good))
    if tag == "R-TRICK2":
        path = tuple(params["residues"])
        if len(path) < 2 or any((b - a) % p != 1
                                for a, b in zip(path, path[1:])):
            return False
        mu = la
        for j in path[:-1]:
            sig = signature(mu, p, j)
            if sig.epsilon != 0:
                return False
            mu = f_tilde(mu, p, j, sig.phi)
        jf = path[-1]
        sig = signature(mu, p, jf)
        return (sig.epsilon > 0 and sig.phi > 0
                and not is_difficult(mu, p, jf)
                and target == e_tilde(mu, p, jf, sig.epsilon))
    return False


def _check_terminal(terminal: Rule, la, p: int) -> bool:
    """Re-derive the terminal criterion for la from scratch."""
    tag, params = terminal.tag, terminal.params
    if tag == "T-SMALL":
        return size(la) < p
    if tag == "T-WEIGHT":
        return core_and_weight(la, p)[1] <= WEIGHT_BOUND
    if tag == "T-HEIGHT":
        return height(la) <= p + HEIGHT_MARGIN
    if tag == "T-ROCK":
        return is_rock_block(la, p)
    if tag == "T-SPECHT":
        i, nu = params["residue"], tuple(params["witness"])
        mu = e_tilde(la, p, i, signature(la, p, i).epsilon)
        return (regularize(nu, p) == mu
                and bool(specht_irreducible(nu, p)))
    return False


def validate(cert: Certificate) -> bool:
    """True iff cert is a complete proof: CERTIFIED status, every step
    linked, re-derivable, and acyclic, and the terminal criterion holding
    for the final partition."""
    try:
        p = cert.p
        if p <= 2 or cert.status != "CERTIFIED" or cert.terminal is None:
            return False
        chain = [check_partition(cert.start)]
        for step in cert.steps:
            if check_partition(step.source) != chain[-1]:
                return False
            if not is_p_regular(step.source, p):
                return False
            if not _check_step(step, p):
                return False
            chain.append(check_partition(step.target))
        if len(set(chain)) != len(chain):
            return False
        if not is_p_regular(chain[-1], p):
            return False
        return _check_terminal(cert.terminal, chain[-1], p)
    except (ValueError, KeyError, IndexError, TypeError):
        return False
