"""Multipartitions, updown tableaux, contents, and coset representatives.

Conventions used throughout:

- A partition is a tuple of weakly decreasing positive integers (no trailing
  zeros); a multipartition is an r-tuple of partitions.
- A node is a triple (i, j, s): row, column, component, all 1-based.
- An updown tableau is the tuple (t_1, ..., t_n) of multipartitions visited
  after each step, starting implicitly at the empty multipartition.  Standard
  tableaux are the special case where every step adds a box.
- Permutations are one-line tuples composed left to right as in ``diagrams``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .diagrams import perm_mult, perm_inverse  # noqa: F401  (re-exported)

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]
Node = tuple[int, int, int]
Tableau = tuple[Multipartition, ...]


def partitions(m: int) -> list[Partition]:
    """Partitions of m, descending lexicographic: (m) first, (1,..,1) last."""

    def rec(m, cap):
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in rec(m - first, first):
                yield (first,) + rest

    return list(rec(m, m))


def empty_mp(r: int) -> Multipartition:
    return ((),) * r


def mp_size(lam: Multipartition) -> int:
    return sum(sum(p) for p in lam)


def multipartitions(r: int, m: int) -> list[Multipartition]:
    """All r-component multipartitions of total size m, deterministic order."""

    def rec(r, m):
        if r == 1:
            for p in partitions(m):
                yield (p,)
            return
        for first_size in range(m, -1, -1):
            for p in partitions(first_size):
                for rest in rec(r - 1, m - first_size):
                    yield (p,) + rest

    return list(rec(r, m))


def reachable_shapes(r: int, n: int) -> list[Multipartition]:
    """Shapes whose modules occur at n strands: all r-multipartitions of
    total size n, n-2, n-4, ... — largest size first, each block in the
    order of :func:`multipartitions`."""
    out: list[Multipartition] = []
    for m in range(n, -1, -2):
        out.extend(multipartitions(r, m))
    return out


def addable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for s, p in enumerate(lam, start=1):
        for i in range(1, len(p) + 2):
            row = p[i - 1] if i <= len(p) else 0
            above = p[i - 2] if i >= 2 else None
            if i == 1 or row < above:
                out.append((i, row + 1, s))
    return out


def removable_nodes(lam: Multipartition) -> list[Node]:
    out = []
    for s, p in enumerate(lam, start=1):
        for i in range(1, len(p) + 1):
            below = p[i] if i < len(p) else 0
            if p[i - 1] > below:
                out.append((i, p[i - 1], s))
    return out


def node_content(node: Node, u, removed: bool = False) -> Fraction:
    i, j, s = node
    c = u[s - 1] + (j - i)
    return -c if removed else Fraction(c)


def addable_removable(lam: Multipartition, u) -> list[tuple[Node, Fraction, str]]:
    """All addable then all removable nodes with their exact contents."""
    out = [(a, node_content(a, u), "addable") for a in addable_nodes(lam)]
    out += [(b, node_content(b, u, removed=True), "removable")
            for b in removable_nodes(lam)]
    return out


def add_box(lam: Multipartition, node: Node) -> Multipartition:
    i, j, s = node
    p = list(lam[s - 1])
    if i == len(p) + 1:
        p.append(0)
    assert p[i - 1] == j - 1
    p[i - 1] = j
    return lam[:s - 1] + (tuple(p),) + lam[s:]


def remove_box(lam: Multipartition, node: Node) -> Multipartition:
    i, j, s = node
    p = list(lam[s - 1])
    assert p[i - 1] == j
    p[i - 1] = j - 1
    while p and p[-1] == 0:
        p.pop()
    return lam[:s - 1] + (tuple(p),) + lam[s:]


def box_diff(small: Multipartition, large: Multipartition) -> Node:
    """The node where two multipartitions differing by one box disagree."""
    for s, (p, q) in enumerate(zip(small, large), start=1):
        rows = max(len(p), len(q))
        for i in range(1, rows + 1):
            a = p[i - 1] if i <= len(p) else 0
            b = q[i - 1] if i <= len(q) else 0
            if a != b:
                assert abs(a - b) == 1
                return (i, max(a, b), s)
    raise ValueError("multipartitions are equal")


def mp_adjacent(a: Multipartition, b: Multipartition) -> bool:
    """True when b is a plus or minus one box away from a."""
    diff = 0
    for p, q in zip(a, b):
        rows = max(len(p), len(q))
        for i in range(rows):
            x = p[i] if i < len(p) else 0
            y = q[i] if i < len(q) else 0
            diff += abs(x - y)
    return diff == 1


def step_node(t: Tableau, k: int) -> tuple[Node, bool]:
    """(node, removed) describing step k of an updown tableau (1-based)."""
    prev = t[k - 2] if k >= 2 else empty_mp(len(t[0]))
    cur = t[k - 1]
    if mp_size(cur) > mp_size(prev):
        return box_diff(prev, cur), False
    return box_diff(cur, prev), True


def default_u(r: int, n: int) -> tuple[Fraction, ...]:
    """Integral parameters satisfying the positivity and genericity gaps.

    Magnitudes n + 2n(r-t) strictly decrease by 2n down to n, with signs
    alternating + - + - from the first component.
    """
    m = max(n, 1)
    return tuple(Fraction((-1) ** (t + 1) * (m + 2 * m * (r - t)))
                 for t in range(1, r + 1))


def content_sequence(t: Tableau, u) -> tuple[Fraction, ...]:
    out = []
    for k in range(1, len(t) + 1):
        node, removed = step_node(t, k)
        out.append(node_content(node, u, removed))
    return tuple(out)


def enumerate_updown(n: int, lam: Multipartition, u=None) -> list[Tableau]:
    """All updown tableaux from the empty multipartition to lam in n steps,
    sorted lexicographically by content sequence under u (default generic)."""
    r = len(lam)
    if (n - mp_size(lam)) % 2 or mp_size(lam) > n:
        raise ValueError(f"no updown tableaux: n={n}, |lam|={mp_size(lam)}")
    if u is None:
        u = default_u(r, n)

    out: list[Tableau] = []

    def walk(path: tuple[Multipartition, ...]):
        k = len(path)
        if k == n:
            if (path[-1] if path else empty_mp(r)) == lam:
                out.append(path)
            return
        cur = path[-1] if path else empty_mp(r)
        # |lam| must stay reachable in the remaining steps
        budget = n - k - 1
        for node in addable_nodes(cur):
            nxt = add_box(cur, node)
            if abs(mp_size(nxt) - mp_size(lam)) <= budget:
                walk(path + (nxt,))
        for node in removable_nodes(cur):
            nxt = remove_box(cur, node)
            if abs(mp_size(nxt) - mp_size(lam)) <= budget:
                walk(path + (nxt,))

    walk(())
    out.sort(key=lambda t: content_sequence(t, u))
    return out


def hook_product(p: Partition) -> int:
    conj = [sum(1 for row in p if row >= j) for j in range(1, (p[0] if p else 0) + 1)]
    out = 1
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            out *= (row - j) + (conj[j - 1] - i) + 1
    return out


def n_std(lam: Multipartition) -> int:
    """Number of standard tableaux: multinomial times hook-length factors."""
    total = mp_size(lam)
    out = math.factorial(total)
    for p in lam:
        out //= math.factorial(sum(p))
    for p in lam:
        out *= math.factorial(sum(p)) // hook_product(p)
    return out


def count_updown(n: int, lam: Multipartition) -> int:
    """r^m (n choose 2m) (2m-1)!! #std(lam) with 2m = n - |lam|."""
    r = len(lam)
    size = mp_size(lam)
    if (n - size) % 2 or size > n:
        raise ValueError(f"parity mismatch: n={n}, |lam|={size}")
    m = (n - size) // 2
    out = r ** m * math.comb(n, 2 * m) * n_std(lam)
    for odd in range(2 * m - 1, 1, -2):
        out *= odd
    return out


def standard_tableaux(lam: Multipartition) -> list[Tableau]:
    return enumerate_updown(mp_size(lam), lam)


def t_lambda(lam: Multipartition) -> Tableau:
    """The maximal standard tableau: fill components in order, rows in order."""
    path = []
    cur = empty_mp(len(lam))
    for s, p in enumerate(lam, start=1):
        for i, row in enumerate(p, start=1):
            for j in range(1, row + 1):
                cur = add_box(cur, (i, j, s))
                path.append(cur)
    return tuple(path)


def tableau_entries(t: Tableau) -> dict[Node, int]:
    """For a standard tableau, the entry written in each box."""
    out = {}
    for k in range(1, len(t) + 1):
        node, removed = step_node(t, k)
        assert not removed, "not a standard tableau"
        out[node] = k
    return out


def d_perm(t: Tableau) -> tuple[int, ...]:
    """The permutation carrying t^lambda to t entrywise: d(t^lam(box)) = t(box)."""
    if not t:
        return ()
    lam = t[-1]
    canon = tableau_entries(t_lambda(lam))
    mine = tableau_entries(t)
    d = [0] * len(t)
    for box, k in canon.items():
        d[k - 1] = mine[box]
    return tuple(d)


def k_neighbors(t: Tableau, k: int) -> list[Tableau]:
    """All updown tableaux equal to t except possibly at position k."""
    n = len(t)
    assert 1 <= k <= n
    if k == n:
        return [t]
    r = len(t[0])
    prev = t[k - 2] if k >= 2 else empty_mp(r)
    nxt = t[k]
    mids = []
    for node in addable_nodes(prev):
        mids.append(add_box(prev, node))
    for node in removable_nodes(prev):
        mids.append(remove_box(prev, node))
    return [t[:k - 1] + (mid,) + t[k:] for mid in mids if mp_adjacent(mid, nxt)]


def sk_action(t: Tableau, k: int):
    """Swap steps k and k+1; None when the swapped path leaves the lattice."""
    n = len(t)
    assert 1 <= k < n
    r = len(t[0])
    prev = t[k - 2] if k >= 2 else empty_mp(r)
    if prev == t[k]:
        raise ValueError("steps k, k+1 return to the start; swap is not defined")
    node2, removed2 = step_node(t, k + 1)
    try:
        mid = remove_box(prev, node2) if removed2 else add_box(prev, node2)
    except (AssertionError, IndexError):
        return None
    if any(any(row <= 0 for row in p) or list(p) != sorted(p, reverse=True)
           for p in mid):
        return None
    return t[:k - 1] + (mid,) + t[k:]


def dominance_mp(lam: Multipartition, mu: Multipartition) -> bool:
    """lam dominates mu: partial sums by component prefix never fall behind."""
    assert len(lam) == len(mu) and mp_size(lam) == mp_size(mu)
    r = len(lam)
    for s in range(1, r + 1):
        head_l = sum(mp_size((p,)) for p in lam[:s - 1])
        head_m = sum(mp_size((p,)) for p in mu[:s - 1])
        rows = max(len(lam[s - 1]), len(mu[s - 1]))
        for k in range(rows + 1):
            a = head_l + sum(lam[s - 1][:k])
            b = head_m + sum(mu[s - 1][:k])
            if a < b:
                return False
    return True


def dominance_std(s: Tableau, t: Tableau) -> bool:
    """s dominates t: shape restriction dominates at every step."""
    assert len(s) == len(t)
    return all(dominance_mp(s[k], t[k]) for k in range(len(s)))


def young_subgroup(lam: Multipartition, n: int) -> list[tuple[int, ...]]:
    """The row stabilizer of t^lambda as one-line permutations of {1..n}."""
    rows = []
    entry = 1
    for p in lam:
        for row in p:
            rows.append(list(range(entry, entry + row)))
            entry += row
    perms = [tuple(range(1, n + 1))]
    for row in rows:
        new = []
        for base in perms:
            for sigma in itertools.permutations(row):
                w = list(base)
                for pos, val in zip(row, sigma):
                    w[pos - 1] = val
                new.append(tuple(w))
        perms = new
    return perms


def coset_reps(n: int, f: int) -> list[tuple[int, ...]]:
    """Right coset representatives indexing the placements of f arcs.

    d qualifies when relabelling the reference two-component tableau
    ((n-2f), (2,2,...,2)) by d leaves every row increasing and the first
    column of the second component increasing downward.
    """
    assert 0 <= 2 * f <= n
    rows = [list(range(1, n - 2 * f + 1))] if n - 2 * f else []
    rows += [[n - 2 * f + 2 * i + 1, n - 2 * f + 2 * i + 2] for i in range(f)]
    out = []
    for d in itertools.permutations(range(1, n + 1)):
        image = [[d[x - 1] for x in row] for row in rows]
        if any(r != sorted(r) for r in image):
            continue
        arc_rows = image[1:] if n - 2 * f else image
        if any(arc_rows[i][0] > arc_rows[i + 1][0] for i in range(len(arc_rows) - 1)):
            continue
        out.append(d)
    return out
