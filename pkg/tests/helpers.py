"""Shared brute-force generators used by several test modules."""


def path_census(max_n: int) -> set[tuple[int, ...]]:
    """Self-intersection tuples of all contractible chain configurations.

    Breadth-first search over blow-up sequences that start from a single
    (-1)-curve and keep the configuration a path: blowing up a generic point
    of an end curve appends a fresh (-1), blowing up an intersection point
    inserts one between its two branches.  Results are deduplicated up to
    reversal (the moves commute with it) and capped at max_n vertices.
    """
    seed = (-1,)
    frontier = {seed}
    seen = {seed}
    out = {seed}
    while frontier:
        nxt = set()
        for t in frontier:
            if len(t) >= max_n:
                continue
            children = [
                t[:-1] + (t[-1] - 1, -1),
                (-1, t[0] - 1) + t[1:],
            ]
            for j in range(len(t) - 1):
                children.append(t[:j] + (t[j] - 1, -1, t[j + 1] - 1) + t[j + 2 :])
            for ch in children:
                key = min(ch, tuple(reversed(ch)))
                if key not in seen:
                    seen.add(key)
                    nxt.add(ch)
                    out.add(key)
        frontier = nxt
    return out


def census_blowdown_inputs(max_n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """(n, i, chain) triples with a unique interior (-1), up to reversal."""
    rows = []
    for t in sorted(path_census(max_n)):
        n = len(t)
        if n < 3 or t.count(-1) != 1:
            continue
        i = t.index(-1) + 1
        if 2 <= i <= n - 1:
            rows.append((n, i, t))
    return rows
