"""Independent reference implementations used only by the tests.

These work on plain tuples of signed ints and share no code with the
package, so they can check it rather than restate it.
"""

import math
from collections import deque


def _inv(w, n):
    return tuple(-k for k in reversed(w))


def _mir(w, n):
    return tuple(-k for k in w)


def _flip(w, n):
    return tuple((n - abs(k)) * (1 if k > 0 else -1) for k in w)


def _rot(w, n):
    return w[1:] + w[:1]


def brute_orbit(word, strands):
    """Closure of ``word`` under inverse, mirror, flip and one-step rotation (BFS)."""
    start = tuple(word)
    seen = {start}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for g in (_inv, _mir, _flip, _rot):
            x = g(w, strands)
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return seen


def reduced(w):
    return all(a != -b for a, b in zip(w, w[1:]))


def key(w):
    return tuple((abs(k), 0 if k > 0 else 1) for k in w)


def brute_canonical(word, strands):
    orb = brute_orbit(word, strands)
    cands = [w for w in orb if reduced(w)] or list(orb)
    return min(cands, key=key)


def all_reduced_words(strands, length):
    letters = [s * i for i in range(1, strands) for s in (1, -1)]
    words = [()]
    for _ in range(length):
        words = [w + (x,) for w in words for x in letters if not (w and w[-1] == -x)]
    return words


def orbit_partition(strands, length):
    """Partition all freely reduced words of a length into symmetry orbits."""
    remaining = set(all_reduced_words(strands, length))
    parts = []
    while remaining:
        w = min(remaining, key=key)
        orb = {x for x in brute_orbit(w, strands) if reduced(x)}
        parts.append(orb)
        remaining -= orb
    return parts


def hand_sigma(v, i, sign):
    """Generator action written out verbatim from the published formulas, 1-based."""
    a = {j + 1: v[2 * j] for j in range(len(v) // 2)}
    b = {j + 1: v[2 * j + 1] for j in range(len(v) // 2)}
    pos = lambda x: max(x, 0)
    neg = lambda x: min(x, 0)
    a2, b2 = dict(a), dict(b)
    if sign > 0:
        c = a[i] - neg(b[i]) - a[i + 1] + pos(b[i + 1])
        a2[i] = a[i] + pos(b[i]) + pos(pos(b[i + 1]) - c)
        b2[i] = b[i + 1] - pos(c)
        a2[i + 1] = a[i + 1] + neg(b[i + 1]) + neg(neg(b[i]) + c)
        b2[i + 1] = b[i] + pos(c)
    else:
        d = a[i] + neg(b[i]) - a[i + 1] - pos(b[i + 1])
        a2[i] = a[i] - pos(b[i]) - pos(pos(b[i + 1]) + d)
        b2[i] = b[i + 1] + neg(d)
        a2[i + 1] = a[i + 1] - neg(b[i + 1]) - neg(neg(b[i]) - d)
        b2[i + 1] = b[i] - neg(d)
    out = []
    for j in range(1, len(v) // 2 + 1):
        out += [a2[j], b2[j]]
    return tuple(out)


def hand_count(v):
    a, b = v[0::2], v[1::2]
    n = len(a)
    return (
        sum(abs(x) for x in b)
        + sum(abs(a[i + 1] - a[i]) for i in range(n - 1))
        + abs(a[0])
        + abs(a[-1])
    )


GOLDEN_ENTROPY = math.log((3 + math.sqrt(5)) / 2)
