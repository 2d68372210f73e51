"""Independent oracles shared by the test modules.

Everything here is deliberately naive: direct digit walks, trial-gcd
totients, Pascal addition, recursive path enumeration.  The point is that
none of it shares code with the package.
"""

import math

# The worked 16-string binary example, in its printed order (strings read
# down the columns of the 4-line display).
B4_ROWS = (
    "0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001",
    "0110", "0101", "0011", "1110", "1101", "1011", "0111", "1111",
)


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def totient_oracle(k):
    return sum(1 for a in range(1, k + 1) if math.gcd(a, k) == 1)


def naive_scan(row_digit, candidate_digit, depth, window):
    """Direct digit-walk membership scan.

    row_digit(n, j) and candidate_digit(j) are 1-based accessors; returns
    (found_at, first_difference) like the package's report fields.
    """
    diffs = {}
    for n in range(1, depth + 1):
        hit = None
        for j in range(1, window + 1):
            if row_digit(n, j) != candidate_digit(j):
                hit = j
                break
        if hit is None:
            return n, diffs
        diffs[n] = hit
    return None, diffs


def reachable_by_paths(edges, start):
    """Nodes reachable from start along simple paths of length >= 1."""
    found = set()

    def walk(node, visited):
        for nxt in edges.get(node, ()):
            found.add(nxt)
            if nxt not in visited:
                walk(nxt, visited | {nxt})

    walk(start, frozenset({start}))
    return found


def random_chain_text(rng, max_links=10):
    """A grammar-valid chain with random connectives and terminal."""
    n = rng.randint(0, max_links)
    parts = ["~P"]
    for i in range(1, n + 1):
        parts.append(rng.choice(["=>", "<=>"]))
        parts.append(f"Q{i}")
    parts.append(rng.choice(["=>", "<=>"]))
    parts.append(rng.choice(["CONTRA", "P", "R & ~R", "P & ~P"]))
    return " ".join(parts)
