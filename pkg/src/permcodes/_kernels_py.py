"""Pure-Python subset-product kernels.

Both kernels walk all ``2**k`` products of ``k`` pairwise commuting
involutions in Gray-code order.  Each generator is given as its list of
disjoint transpositions (zero-based), so flipping one generator in or out
of the product is a handful of swaps on the current image array.  A
histogram of displacements keeps the running maximum (the weight) current
without rescanning the array.
"""

from array import array


def _walk(swaps, degree, visit):
    k = len(swaps)
    cur = list(range(degree))
    hist = [0] * (degree + 1)
    hist[0] = degree
    top = 0
    mask = 0
    for step in range(1, 1 << k):
        bit = (step & -step).bit_length() - 1
        mask ^= 1 << bit
        for a, b in swaps[bit]:
            va, vb = cur[a], cur[b]
            hist[abs(va - a)] -= 1
            hist[abs(vb - b)] -= 1
            cur[a], cur[b] = vb, va
            da, db = abs(vb - a), abs(va - b)
            hist[da] += 1
            hist[db] += 1
            if da > top:
                top = da
            if db > top:
                top = db
        while top and not hist[top]:
            top -= 1
        visit(mask, top, cur)


def subset_weights(swaps, degree):
    """Weight of every subset product, indexed by generator bitmask."""
    out = array("i", bytes(4 * (1 << len(swaps))))

    def visit(mask, w, cur):
        out[mask] = w

    _walk(swaps, degree, visit)
    return out


def min_subset_weight(swaps, degree):
    """Smallest nonzero weight and the bitmask of its canonical witness.

    Ties are broken by the lexicographically smallest image array.  Returns
    ``(0, 0)`` when every product is the identity.
    """
    best = [0, 0, None]

    def visit(mask, w, cur):
        if w == 0:
            return
        if best[0] == 0 or w < best[0]:
            best[0], best[1], best[2] = w, mask, list(cur)
        elif w == best[0] and cur < best[2]:
            best[1], best[2] = mask, list(cur)

    _walk(swaps, degree, visit)
    return best[0], best[1]
