"""Reference kernels in plain Python (plus numpy for the oracle sweep).

Every function here has a twin in ``_ckernels.pyx`` with the same
signature and the same results; ``modcong._kernels`` picks one at import.
Permutations are passed as sequences of images, ``p[x]`` is the image of
``x``, and composition is left to right: ``compose(a, b)[x] == b[a[x]]``.
"""
import numpy as np

GEN_L = 0
GEN_R = 1


def compose_images(a, b):
    return tuple([b[x] for x in a])


def power_images(images, k):
    n = len(images)
    out = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = images[x]
        length = len(cycle)
        shift = k % length
        for i, x in enumerate(cycle):
            out[x] = cycle[(i + shift) % length]
    return tuple(out)


def word_images(factors, images_l, images_r):
    """Evaluate ``factors`` (pairs ``(gen, exponent)``) on the two generators."""
    result = list(range(len(images_l)))
    gens = (images_l, images_r)
    for gen, exp in factors:
        step = power_images(gens[gen], exp)
        result = [step[x] for x in result]
    return tuple(result)


def bfs_relabel(images_l, images_r):
    """Return ``new`` with ``new[old]`` the breadth-first label of ``old``.

    Exploration starts at 0 and visits the L-image before the R-image of
    each point. Points not reachable from 0 keep the label -1.
    """
    n = len(images_l)
    new = [-1] * n
    new[0] = 0
    queue = [0]
    head = 0
    nxt = 1
    while head < len(queue):
        x = queue[head]
        head += 1
        for images in (images_l, images_r):
            y = images[x]
            if new[y] < 0:
                new[y] = nxt
                nxt += 1
                queue.append(y)
    return new


def labels_consistent(table, images_l, images_r):
    """Check that a BFS labelling of the Cayley graph respects every edge.

    ``table`` is a :class:`modcong.sl2zmod.CayleyTable`. Each start point is
    propagated along the spanning tree and then compared against all
    ``2 * len(table)`` edges; done in blocks of points so memory stays
    bounded.
    """
    sig = np.array([images_l, images_r], dtype=np.int64)
    degree = sig.shape[1]
    size = len(table.order)
    order, parent, via = table.order, table.parent, table.via
    starts = table.level_starts
    block = max(1, 4_000_000 // max(size, 1))
    for lo in range(0, degree, block):
        pts = np.arange(lo, min(degree, lo + block), dtype=np.int64)
        lab = np.empty((size, len(pts)), dtype=np.int64)
        lab[order[0]] = pts
        for s, e in zip(starts[:-1], starts[1:]):
            nodes = order[s:e]
            lab[nodes] = sig[via[nodes][:, None], lab[parent[nodes]]]
        if not np.array_equal(lab[table.next_l], sig[0][lab]):
            return False
        if not np.array_equal(lab[table.next_r], sig[1][lab]):
            return False
    return True
