"""Pure-Python versions of the dynamic-programming kernels.

Both functions here have compiled twins in ``_kernels.pyx``; the two must
return identical results for every input.
"""

# Edit costs in tenths so that equal-cost paths compare exactly.
INS_COST = 10
DEL_COST = 10
SUB_COST = 11


def align_ops(x, y):
    """Minimum-cost edit script turning ``x`` into ``y``.

    Returns ``(ops, cost)`` where ``ops`` is a string over ``M`` (match),
    ``S`` (substitution), ``D`` (deletion of an input symbol) and ``I``
    (insertion of an output symbol), and ``cost`` is in tenths.

    The table holds the cost of aligning the *remaining* suffixes, so the
    path is read off left to right.  At every step the first optimal move in
    the order diagonal, deletion, insertion is taken.
    """
    n = len(x)
    m = len(y)
    width = m + 1
    table = [0] * ((n + 1) * width)
    for j in range(m - 1, -1, -1):
        table[n * width + j] = table[n * width + j + 1] + INS_COST
    for i in range(n - 1, -1, -1):
        row = i * width
        below = row + width
        table[row + m] = table[below + m] + DEL_COST
        xi = x[i]
        for j in range(m - 1, -1, -1):
            diag = table[below + j + 1] + (0 if xi == y[j] else SUB_COST)
            dele = table[below + j] + DEL_COST
            ins = table[row + j + 1] + INS_COST
            best = diag
            if dele < best:
                best = dele
            if ins < best:
                best = ins
            table[row + j] = best

    ops = []
    i = j = 0
    while i < n or j < m:
        here = table[i * width + j]
        if i < n and j < m:
            same = x[i] == y[j]
            if here == table[(i + 1) * width + j + 1] + (0 if same else SUB_COST):
                ops.append("M" if same else "S")
                i += 1
                j += 1
                continue
        if i < n and here == table[(i + 1) * width + j] + DEL_COST:
            ops.append("D")
            i += 1
        else:
            ops.append("I")
            j += 1
    return "".join(ops), table[0]


def levenshtein(a, b):
    """Unit-cost edit distance over code points."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]
