# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled single-line kernels; same contracts as ``glbranch._lines``."""

from libc.stdlib cimport malloc, free


cdef struct Line:
    int n
    int *x
    int *y
    char *alive


cdef int _load(Line *ln, segs) except -1:
    cdef int i, n = len(segs)
    ln.n = n
    ln.x = <int *> malloc((n + 1) * sizeof(int))
    ln.y = <int *> malloc((n + 1) * sizeof(int))
    ln.alive = <char *> malloc((n + 1) * sizeof(char))
    if ln.x == NULL or ln.y == NULL or ln.alive == NULL:
        raise MemoryError()
    for i in range(n):
        s = segs[i]
        ln.x[i] = s[0]
        ln.y[i] = s[1]
        ln.alive[i] = 1
    return 0


cdef void _release(Line *ln):
    free(ln.x)
    free(ln.y)
    free(ln.alive)


cdef inline bint _precedes(int px, int py, int qx, int qy):
    return px < qx and py < qy and qx <= py + 1


cdef tuple _collect(Line *ln, list extra):
    cdef int i
    out = [(ln.x[i], ln.y[i]) for i in range(ln.n) if ln.alive[i]]
    out.extend(extra)
    out.sort()
    return tuple(out)


def is_generic(segs):
    cdef Line ln
    cdef int i, j
    _load(&ln, segs)
    try:
        for i in range(ln.n):
            for j in range(i + 1, ln.n):
                if _precedes(ln.x[i], ln.y[i], ln.x[j], ln.y[j]) or _precedes(ln.x[j], ln.y[j], ln.x[i], ln.y[i]):
                    return False
        return True
    finally:
        _release(&ln)


cdef int _restrict(Line *ln, int a, int b, int *idx):
    cdef int i, k = 0
    for i in range(ln.n):
        if a <= ln.x[i] <= b + 1 and ln.y[i] >= b:
            idx[k] = i
            k += 1
    return k


def derivative_right(segs, int a, int b):
    cdef Line ln
    cdef int k, i, j, s, c, cur, nxt, nseq, target, top, hits, hit_i, hit_j, prev_start
    cdef int *idx
    cdef char *used
    cdef int *members      # flattened chain members (indices into ln)
    cdef int *seq_off      # chain i occupies members[seq_off[i]:seq_off[i+1]]
    cdef int *rf_end
    _load(&ln, segs)
    idx = <int *> malloc((ln.n + 1) * sizeof(int))
    used = <char *> malloc((ln.n + 1) * sizeof(char))
    members = <int *> malloc((ln.n + 1) * sizeof(int))
    seq_off = <int *> malloc((ln.n + 2) * sizeof(int))
    rf_end = <int *> malloc((ln.n + 1) * sizeof(int))
    try:
        k = _restrict(&ln, a, b, idx)
        if k == 0:
            return None
        for i in range(k):
            used[i] = 0
        # peel upward sequences
        nseq = 0
        c = 0
        while c < k:
            seq_off[nseq] = c
            cur = -1
            for i in range(k):
                if not used[i]:
                    if cur == -1 or ln.x[idx[i]] == ln.x[idx[cur]]:
                        cur = i  # sorted input: the last one with the least start is longest
                    else:
                        break
            while cur != -1:
                used[cur] = 1
                members[c] = cur
                c += 1
                nxt = -1
                for i in range(k):
                    if not used[i] and ln.x[idx[i]] > ln.x[idx[cur]] and _precedes(
                        ln.x[idx[cur]], ln.y[idx[cur]], ln.x[idx[i]], ln.y[idx[i]]
                    ):
                        if nxt == -1 or ln.x[idx[i]] < ln.x[idx[nxt]] or (
                            ln.x[idx[i]] == ln.x[idx[nxt]] and ln.y[idx[i]] > ln.y[idx[nxt]]
                        ):
                            nxt = i
                cur = nxt
            nseq += 1
        seq_off[nseq] = c
        for s in range(nseq):
            for j in range(seq_off[s], seq_off[s + 1]):
                if j + 1 < seq_off[s + 1]:
                    rf_end[j] = ln.x[idx[members[j + 1]]] - 2
                else:
                    rf_end[j] = ln.y[idx[members[j]]]
        chosen = []
        target = b
        top = nseq - 1
        while True:
            hit_i = -1
            hit_j = -1
            s = top
            while s >= 0:
                hits = 0
                for j in range(seq_off[s], seq_off[s + 1]):
                    if ln.x[idx[members[j]]] <= target <= rf_end[j]:
                        hits += 1
                        hit_j = j
                if hits > 1:
                    raise AssertionError("ambiguous selection in derivative step")
                if hits == 1:
                    hit_i = s
                    break
                s -= 1
            if hit_i == -1:
                break
            chosen.append(idx[members[hit_j]])
            target = ln.x[idx[members[hit_j]]] - 1
            top = hit_i
        if not chosen or ln.x[chosen[len(chosen) - 1]] != a:
            return None
        extra = []
        prev_start = b + 1
        for i in chosen:
            ln.alive[i] = 0
            if prev_start <= ln.y[i]:
                extra.append((prev_start, ln.y[i]))
            prev_start = ln.x[i]
        return _collect(&ln, extra)
    finally:
        free(idx)
        free(used)
        free(members)
        free(seq_off)
        free(rf_end)
        _release(&ln)


def integral_right(segs, int a, int b):
    cdef Line ln
    cdef int k, i, j, s, c, cur, nxt, nseq, point, top, hits, hit_i, hit_j, start, x, nx
    cdef int *idx
    cdef char *used
    cdef int *members
    cdef int *seq_off
    cdef int *af_lo
    cdef int *af_hi
    _load(&ln, segs)
    idx = <int *> malloc((ln.n + 1) * sizeof(int))
    used = <char *> malloc((ln.n + 1) * sizeof(char))
    members = <int *> malloc((ln.n + 1) * sizeof(int))
    seq_off = <int *> malloc((ln.n + 2) * sizeof(int))
    af_lo = <int *> malloc((ln.n + 1) * sizeof(int))
    af_hi = <int *> malloc((ln.n + 1) * sizeof(int))
    try:
        k = _restrict(&ln, a, b, idx)
        for i in range(k):
            used[i] = 0
        # peel downward sequences
        nseq = 0
        c = 0
        while c < k:
            seq_off[nseq] = c
            cur = -1
            i = k - 1
            while i >= 0:
                if not used[i]:
                    if cur == -1 or ln.x[idx[i]] == ln.x[idx[cur]]:
                        cur = i  # walking down: the last hit with the largest start is shortest
                    else:
                        break
                i -= 1
            while cur != -1:
                used[cur] = 1
                members[c] = cur
                c += 1
                nxt = -1
                for i in range(k):
                    if not used[i] and ln.x[idx[i]] < ln.x[idx[cur]] and _precedes(
                        ln.x[idx[i]], ln.y[idx[i]], ln.x[idx[cur]], ln.y[idx[cur]]
                    ):
                        if nxt == -1 or ln.x[idx[i]] > ln.x[idx[nxt]] or (
                            ln.x[idx[i]] == ln.x[idx[nxt]] and ln.y[idx[i]] < ln.y[idx[nxt]]
                        ):
                            nxt = i
                cur = nxt
            nseq += 1
        seq_off[nseq] = c
        for s in range(nseq):
            for j in range(seq_off[s], seq_off[s + 1]):
                x = ln.x[idx[members[j]]]
                if j + 1 < seq_off[s + 1]:
                    nx = ln.x[idx[members[j + 1]]]
                    af_lo[j] = nx + 1
                    af_hi[j] = x - 1
                else:
                    af_lo[j] = a
                    af_hi[j] = x - 1
        chosen = []
        point = a
        top = nseq - 1
        while True:
            hit_i = -1
            hit_j = -1
            s = top
            while s >= 0:
                hits = 0
                for j in range(seq_off[s], seq_off[s + 1]):
                    if af_lo[j] <= af_hi[j] and af_lo[j] <= point <= af_hi[j]:
                        hits += 1
                        hit_j = j
                if hits > 1:
                    raise AssertionError("ambiguous selection in integral step")
                if hits == 1:
                    hit_i = s
                    break
                s -= 1
            if hit_i == -1:
                break
            chosen.append(idx[members[hit_j]])
            point = ln.x[idx[members[hit_j]]]
            top = hit_i - 1
        extra = []
        start = a
        for i in chosen:
            ln.alive[i] = 0
            extra.append((start, ln.y[i]))
            start = ln.x[i]
        if start <= b:
            extra.append((start, b))
        return _collect(&ln, extra)
    finally:
        free(idx)
        free(used)
        free(members)
        free(seq_off)
        free(af_lo)
        free(af_hi)
        _release(&ln)


def mw_dual(segs):
    cdef Line ln
    cdef int i, left, e, cur, nxt, length
    _load(&ln, segs)
    out = []
    try:
        left = ln.n
        while left > 0:
            cur = -1
            for i in range(ln.n):
                if ln.alive[i] and (cur == -1 or ln.y[i] > ln.y[cur] or (ln.y[i] == ln.y[cur] and ln.x[i] > ln.x[cur])):
                    cur = i
            e = ln.y[cur]
            chain = [cur]
            while True:
                nxt = -1
                for i in range(ln.n):
                    if ln.alive[i] and ln.y[i] == ln.y[cur] - 1 and ln.x[i] < ln.x[cur]:
                        if nxt == -1 or ln.x[i] > ln.x[nxt]:
                            nxt = i
                if nxt == -1:
                    break
                cur = nxt
                chain.append(cur)
            length = len(chain)
            out.append((e - length + 1, e))
            for i in chain:
                ln.y[i] -= 1
                if ln.y[i] < ln.x[i]:
                    ln.alive[i] = 0
                    left -= 1
        out.sort()
        return tuple(out)
    finally:
        _release(&ln)


def hd_right_z(segs):
    cdef Line ln
    cdef int i, left, e, cur, nxt
    _load(&ln, segs)
    out = []
    try:
        left = ln.n
        while left > 0:
            cur = -1
            for i in range(ln.n):
                if ln.alive[i] and (cur == -1 or ln.y[i] < ln.y[cur] or (ln.y[i] == ln.y[cur] and ln.x[i] < ln.x[cur])):
                    cur = i
            e = ln.y[cur]
            ln.alive[cur] = 0
            left -= 1
            while True:
                nxt = -1
                for i in range(ln.n):
                    if ln.alive[i] and ln.y[i] == ln.y[cur] + 1 and ln.x[i] > ln.x[cur]:
                        if nxt == -1 or ln.x[i] < ln.x[nxt]:
                            nxt = i
                if nxt == -1:
                    break
                cur = nxt
                ln.alive[cur] = 0
                left -= 1
            out.append((e, ln.y[cur]))
        out.sort()
        return tuple(out)
    finally:
        _release(&ln)


def ul(segs):
    cdef Line ln
    cdef int i, j, n, lo, hi, found
    pool = sorted(segs)
    while True:
        n = len(pool)
        _load(&ln, pool)
        found = 0
        try:
            for i in range(n):
                for j in range(i + 1, n):
                    if _precedes(ln.x[i], ln.y[i], ln.x[j], ln.y[j]) or _precedes(ln.x[j], ln.y[j], ln.x[i], ln.y[i]):
                        found = 1
                        break
                if found:
                    break
            if not found:
                return tuple(pool)
            if ln.x[i] < ln.x[j]:
                lo, hi = i, j
            else:
                lo, hi = j, i
            merged = [(ln.x[lo], ln.y[hi])]
            if ln.x[hi] <= ln.y[lo]:
                merged.append((ln.x[hi], ln.y[lo]))
        finally:
            _release(&ln)
        del pool[j], pool[i]
        pool.extend(merged)
        pool.sort()
