"""Independent desk oracles the test suite checks the library against.

Everything here is computed straight from Young-diagram definitions (hook
lengths, rim hooks, tabloids, explicit orbit enumeration) and deliberately
avoids the abacus/signature machinery under test.  No imports from selfext.
"""

import itertools


# ---------------------------------------------------------------------------
# diagrams and hooks


def partitions_of(n, max_part=None):
    """Yield all partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def conjugate(la):
    """Transpose of the Young diagram."""
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= j) for j in range(1, la[0] + 1))


def dominates(la, mu):
    """Partial sums of la bound those of mu (same size assumed)."""
    total_la = total_mu = 0
    for k in range(max(len(la), len(mu))):
        total_la += la[k] if k < len(la) else 0
        total_mu += mu[k] if k < len(mu) else 0
        if total_la < total_mu:
            return False
    return True


def hook_lengths(la):
    """Map each node (row, col), 1-based, to its hook length."""
    cols = conjugate(la)
    return {
        (i, j): (la[i - 1] - j) + (cols[j - 1] - i) + 1
        for i in range(1, len(la) + 1)
        for j in range(1, la[i - 1] + 1)
    }


def valuation(n, p):
    """Largest k with p**k dividing n (n positive)."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# rim hooks: core and weight without the abacus


def remove_rim_hook(la, node):
    """Remove the rim hook of the given node: rows slide up along the rim."""
    i, j = node
    cols = conjugate(la)
    leg = cols[j - 1] - i
    rows = list(la)
    for k in range(i, i + leg):
        rows[k - 1] = rows[k] - 1
    rows[i + leg - 1] = j - 1
    return tuple(part for part in rows if part > 0)


def rim_core_and_weight(la, p):
    """Strip rim p-hooks greedily until none remain."""
    weight = 0
    while True:
        hooks = hook_lengths(la)
        target = next((node for node, h in hooks.items() if h == p), None)
        if target is None:
            return la, weight
        la = remove_rim_hook(la, target)
        weight += 1


def residue_multiset(la, p):
    """Sorted residues (col - row) mod p over all nodes; block invariant."""
    return tuple(sorted((j - i) % p
                        for i in range(1, len(la) + 1)
                        for j in range(1, la[i - 1] + 1)))


# ---------------------------------------------------------------------------
# Specht irreducibility: valuation criterion, weight-one chains, Gram rank


def jm_irreducible(la, p):
    """Valuation form of the irreducibility criterion (p odd).

    Reducible iff some node (a,b) with p | hook carries, in its row and in
    its column, nodes whose hook valuations both differ from its own.
    """
    hooks = hook_lengths(la)
    vals = {node: valuation(h, p) for node, h in hooks.items()}
    for (a, b), v in vals.items():
        if v == 0:
            continue
        row_differs = any(vals[(a, y)] != v for y in range(1, la[a - 1] + 1))
        col_differs = any(vals[(x, b)] != v for (x, y) in vals if y == b)
        if row_differs and col_differs:
            return False
    return True


def weight_one_verdict(la, p):
    """Irreducibility for blocks of weight <= 1, from the decomposition chain.

    Weight 0: one Specht, irreducible.  Weight 1: the block is a dominance
    chain of p partitions and exactly the two ends are irreducible.
    """
    core, weight = rim_core_and_weight(la, p)
    if weight == 0:
        return True
    if weight != 1:
        raise ValueError(f"{la} has weight {weight}, not <= 1")
    n = sum(la)
    block = [mu for mu in partitions_of(n)
             if residue_multiset(mu, p) == residue_multiset(la, p)]
    block.sort(key=lambda mu: [sum(mu[:k]) for k in range(1, n + 1)])
    assert len(block) == p
    return la in (block[0], block[-1])


def standard_tableaux(la):
    """All standard tableaux of shape la, as tuples of row tuples."""
    n = sum(la)
    if n == 0:
        return [()]
    out = []
    corners = [i for i in range(1, len(la) + 1)
               if la[i - 1] > (la[i] if i < len(la) else 0)]
    for i in corners:
        smaller = tuple(part - (row == i) for row, part in enumerate(la, 1))
        smaller = tuple(part for part in smaller if part > 0)
        for t in standard_tableaux(smaller):
            rows = list(t) + [()] * (len(la) - len(t))
            rows[i - 1] = rows[i - 1] + (n,)
            out.append(tuple(rows))
    return out


def _polytabloid(t):
    """Tabloid expansion of e_t: {row-set tuple: signed count}."""
    columns = []
    width = len(t[0]) if t else 0
    for j in range(width):
        columns.append([row[j] for row in t if len(row) > j])
    coeffs = {}
    for perms in itertools.product(*(itertools.permutations(c)
                                     for c in columns)):
        sign = 1
        for original, arranged in zip(columns, perms):
            order = [original.index(v) for v in arranged]
            inversions = sum(1 for a in range(len(order))
                             for b in range(a + 1, len(order))
                             if order[a] > order[b])
            sign *= (-1) ** inversions
        rows = [[] for _ in t]
        for j, arranged in enumerate(perms):
            for depth, value in enumerate(arranged):
                rows[depth].append(value)
        key = tuple(frozenset(r) for r in rows)
        coeffs[key] = coeffs.get(key, 0) + sign
    return coeffs


def _rank_mod_p(matrix, p):
    rows = [[x % p for x in row] for row in matrix]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((r for r in range(rank, len(rows))
                      if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def gram_irreducible(la, p):
    """Ground truth for p-regular la: Specht irreducible iff the bilinear
    form on the standard polytabloids has full rank mod p."""
    tableaux = standard_tableaux(la)
    expansions = [_polytabloid(t) for t in tableaux]
    gram = [[sum(a.get(key, 0) * b[key] for key in b) for b in expansions]
            for a in expansions]
    return _rank_mod_p(gram, p) == len(tableaux)


# ---------------------------------------------------------------------------
# zigzag orbit enumeration


def brute_basis_orbits(p, m, d):
    """Degree histogram of d-letter words up to place permutation.

    Letters are triples (symbol, r, s) with r, s in [m]; per vertex there is
    one degree-0 and one degree-2 symbol (p-1 vertices) and the 2(p-2) arrow
    symbols have degree 1 and may not repeat.  Orbits are enumerated as an
    arrow subset times an even-letter multiset.
    """
    even_degrees = [0] * ((p - 1) * m * m) + [2] * ((p - 1) * m * m)
    odd_count = 2 * (p - 2) * m * m
    histogram = {}
    for k in range(0, d + 1):
        if k > odd_count:
            break
        subsets = sum(1 for _ in itertools.combinations(range(odd_count), k))
        for multiset in itertools.combinations_with_replacement(
                range(len(even_degrees)), d - k):
            degree = k + sum(even_degrees[idx] for idx in multiset)
            histogram[degree] = histogram.get(degree, 0) + subsets
    return histogram


def brute_degree_zero(p, m, d):
    """Count multisets of size d over the (p-1)m^2 degree-0 letters."""
    letters = (p - 1) * m * m
    return sum(1 for _ in itertools.combinations_with_replacement(
        range(letters), d))
