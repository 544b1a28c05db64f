"""Pure-Python backend for the exhaustive enumeration kernels.

Same signatures and identical results as the compiled backend in
``_fastcore``.  Field arithmetic arrives as flat lookup tables (q*q
row-major mul/add, q-long neg/inv) so the inner loops are plain
subscripting; all message/class spaces are walked as mixed-radix
odometers with incremental state updates.
"""

BACKEND_NAME = "pure"


def min_weight(gen, k, n, q, mul, add, neg):
    """Minimum Hamming weight over the q^k - 1 nonzero codewords of the
    k x n generator `gen` (flat row-major)."""
    cw = [0] * n
    digits = [0] * k
    weight = 0
    best = n + 1
    qm1 = q - 1
    for _ in range(q ** k - 1):
        pos = k - 1
        while True:
            old = digits[pos]
            new = 0 if old == qm1 else old + 1
            digits[pos] = new
            d = add[new * q + neg[old]]
            base = pos * n
            dq = d * q
            for j in range(n):
                g = gen[base + j]
                if g:
                    prev = cw[j]
                    cur = add[prev * q + mul[dq + g]]
                    cw[j] = cur
                    if prev:
                        if not cur:
                            weight -= 1
                    elif cur:
                        weight += 1
            if new:
                break
            pos -= 1
        if weight < best:
            best = weight
            if best == 1:
                break
    return best


def orthogonal_count(gen, k, n, q, mul, add, neg):
    """Number of codewords of `gen` orthogonal to every generator row,
    the zero word included.  Each codeword is enumerated explicitly and
    dotted against the rows; no Gram shortcut."""
    cw = [0] * n
    digits = [0] * k
    count = 1
    qm1 = q - 1
    for _ in range(q ** k - 1):
        pos = k - 1
        while True:
            old = digits[pos]
            new = 0 if old == qm1 else old + 1
            digits[pos] = new
            d = add[new * q + neg[old]]
            base = pos * n
            dq = d * q
            for j in range(n):
                g = gen[base + j]
                if g:
                    cw[j] = add[cw[j] * q + mul[dq + g]]
            if new:
                break
            pos -= 1
        ok = True
        for r in range(k):
            base = r * n
            s = 0
            for j in range(n):
                c = cw[j]
                if c:
                    g = gen[base + j]
                    if g:
                        s = add[s * q + mul[c * q + g]]
            if s:
                ok = False
                break
        if ok:
            count += 1
    return count


def _is_singular(gram, k, q, mul, add, neg, inv, scr):
    kk = k * k
    for i in range(kk):
        scr[i] = gram[i]
    for col in range(k):
        piv = -1
        for r in range(col, k):
            if scr[r * k + col]:
                piv = r
                break
        if piv < 0:
            return True
        if piv != col:
            a, b = piv * k, col * k
            for c in range(col, k):
                scr[a + c], scr[b + c] = scr[b + c], scr[a + c]
        pinv = inv[scr[col * k + col]]
        for r in range(col + 1, k):
            f = scr[r * k + col]
            if f:
                nf = neg[mul[f * q + pinv]]
                nfq = nf * q
                base_r, base_c = r * k, col * k
                for c in range(col, k):
                    v = scr[base_c + c]
                    if v:
                        scr[base_r + c] = add[scr[base_r + c] * q + mul[nfq + v]]
    return False


def first_singular_class(terms, n, k, q, classes, mul, add, neg, inv, start, stop):
    """Lexicographic rank in [start, stop) of the first scaling class u
    (coordinates drawn from `classes`, leftmost most significant) whose
    Gram sum(u_t * T_t) is singular; -1 if none.

    `terms` is flat n*k*k: T_t[i][j] = G[i][t] * G[j][t].
    """
    s = len(classes)
    kk = k * k
    digits = [0] * n
    r = start
    for i in range(n - 1, -1, -1):
        digits[i] = r % s
        r //= s
    gram = [0] * kk
    for t in range(n):
        u = classes[digits[t]]
        base = t * kk
        uq = u * q
        for idx in range(kk):
            v = terms[base + idx]
            if v:
                gram[idx] = add[gram[idx] * q + mul[uq + v]]
    scr = [0] * kk
    sm1 = s - 1
    for rank in range(start, stop):
        if _is_singular(gram, k, q, mul, add, neg, inv, scr):
            return rank
        if rank + 1 == stop:
            break
        pos = n - 1
        while True:
            old = digits[pos]
            new = 0 if old == sm1 else old + 1
            digits[pos] = new
            d = add[classes[new] * q + neg[classes[old]]]
            base = pos * kk
            dq = d * q
            for idx in range(kk):
                v = terms[base + idx]
                if v:
                    gram[idx] = add[gram[idx] * q + mul[dq + v]]
            if new:
                break
            pos -= 1
    return -1
