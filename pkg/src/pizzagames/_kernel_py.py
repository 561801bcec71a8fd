"""Pure-Python partition kernel.

Generic over any exact numeric type (int, Fraction); also accepts floats,
which is the benchmark-only approximate mode.  The compiled twin in
_kernel.pyx implements the same contract for machine integers.

All functions work on 0-based Python sequences.  A "cut" is a half-open
index range (start, end); slice cut lengths are always odd.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def split_left(a, lo, hi):
    """Repeatedly split slices off the left of a[lo:hi].

    One round: find the smallest even prefix length p whose alternating sum
    is > 0; if found, cut at the largest odd j < p where the alternating
    prefix sum is minimal.  Stops when no such p exists (the remainder then
    satisfies the even-prefix condition).  Returns (cuts, weights, new_lo).
    """
    cuts = []
    weights = []
    i = lo
    while i < hi:
        s = 0
        minval = None
        minj = -1
        found = False
        for k in range(i, hi):
            if (k - i) % 2 == 0:  # odd prefix length
                s = s + a[k]
                if minval is None or s <= minval:
                    minval = s
                    minj = k
            else:  # even prefix length
                s = s - a[k]
                if s > 0:
                    found = True
                    break
        if not found:
            break
        cuts.append((i, minj + 1))
        weights.append(minval)
        i = minj + 1
    return cuts, weights, i


def argmin_odd(a, lo, hi):
    """Largest index k in [lo,hi) at odd prefix length (of a[lo:hi]) with
    minimal alternating prefix sum.  Returns (k, minimal sum)."""
    s = 0
    minval = None
    minj = -1
    for k in range(lo, hi):
        if (k - lo) % 2 == 0:
            s = s + a[k]
            if minval is None or s <= minval:
                minval = s
                minj = k
        else:
            s = s - a[k]
    return minj, minval


def alt_sum(a, lo, hi):
    """Σ (−1)^i a[lo+i] over the range."""
    s = 0
    for k in range(lo, hi):
        s = s + a[k] if (k - lo) % 2 == 0 else s - a[k]
    return s


def tes_partition(a):
    """Slice partition of a two-ended-stack weight sequence.

    Returns (cuts, weights): odd-length cuts covering [0, n) whose weight
    sequence is U-shaped.
    """
    n = len(a)
    if n == 0:
        return [], []
    # part A: from the left
    cuts_l, w_l, i = split_left(a, 0, n)
    # part B: from the right (run part A on the reversed remainder)
    rev = a[i:n][::-1]
    cuts_rrev, w_r, consumed = split_left(rev, 0, len(rev))
    hi = n - consumed
    # map right-side cuts back to original coordinates, rightmost first
    cuts_r = [(n - e, n - s) for s, e in cuts_rrev]
    # part C: the middle satisfies the even-prefix condition both ways
    cuts_m = []
    w_m = []
    q = hi - i
    if q > 0:
        if q % 2 == 1:
            cuts_m = [(i, hi)]
            w_m = [alt_sum(a, i, hi)]
        else:
            j, minval = argmin_odd(a, i, hi)
            cuts_m = [(i, j + 1), (j + 1, hi)]
            w_m = [minval, alt_sum(a, j + 1, hi)]
    cuts = cuts_l + cuts_m + list(reversed(cuts_r))
    weights = w_l + w_m + list(reversed(w_r))
    return cuts, weights


def stack_partition(a):
    """Slice-plus-remainder partition of a stack weight sequence.

    Returns (cuts, weights, rem_start, x): slices cover [0, rem_start);
    the remainder a[rem_start:] is an ev-sequence of weight x >= 0
    (rem_start == len(a) and x == 0 when there is no remainder).
    """
    n = len(a)
    cuts, weights, i = split_left(a, 0, n)
    q = n - i
    if q % 2 == 1:
        j, minval = argmin_odd(a, i, n)
        cuts = cuts + [(i, j + 1)]
        weights = weights + [minval]
        i = j + 1
    x = -alt_sum(a, i, n)
    return cuts, weights, i, x


def menu_value(weights):
    """val⟨a1,…,an⟩ = alternating sum in non-increasing order."""
    s = 0
    for idx, w in enumerate(sorted(weights, reverse=True)):
        s = s + w if idx % 2 == 0 else s - w
    return s


def tes_value(a):
    _, weights = tes_partition(a)
    return menu_value(weights)


def stack_value(a):
    _, weights, _, x = stack_partition(a)
    mv = menu_value(weights)
    return mv - x if len(weights) % 2 == 0 else mv + x


def cycle_outcomes(seq, candidates):
    """For each candidate index v: seq[v] − tes_value(rest of the cycle
    clockwise from v).  The hot loop of the quadratic cycle solver."""
    out = []
    for v in candidates:
        rest = list(seq[v + 1 :]) + list(seq[:v])
        out.append(seq[v] - tes_value(rest))
    return out
