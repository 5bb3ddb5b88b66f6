"""Single-line combinatorial kernels (pure Python reference implementation).

A line is a sorted tuple of integer pairs ``(x, y)`` with ``x <= y``; all
segments share one cuspidal line, so ``(x, y)`` stands for ``[r+x, r+y]``.
Functions return sorted tuples, or ``None`` for a vanishing derivative.
"""

from __future__ import annotations

from typing import Optional

IntSeg = tuple[int, int]
IntLine = tuple[IntSeg, ...]


def precedes(p: IntSeg, q: IntSeg) -> bool:
    return p[0] < q[0] and p[1] < q[1] and q[0] <= p[1] + 1


def linked(p: IntSeg, q: IntSeg) -> bool:
    return precedes(p, q) or precedes(q, p)


def is_generic(segs: IntLine) -> bool:
    n = len(segs)
    for i in range(n):
        for j in range(i + 1, n):
            if linked(segs[i], segs[j]):
                return False
    return True


def neg(segs) -> IntLine:
    """Reflection ``[x, y] -> [-y, -x]`` on a line."""
    return tuple(sorted((-y, -x) for x, y in segs))


def restrict(segs, a: int, b: int) -> IntLine:
    return tuple(s for s in segs if a <= s[0] <= b + 1 and s[1] >= b)


def _remove(pool: list, items) -> None:
    for s in items:
        pool.remove(s)


def upward_sequence(segs) -> list[IntSeg]:
    """Greedy chain: smallest start, longest there; then the smallest later start
    holding a segment preceded by the previous pick, longest such."""
    if not segs:
        return []
    pool = sorted(segs)
    a1 = pool[0][0]
    cur = max(s for s in pool if s[0] == a1)
    chain = [cur]
    while True:
        nxt = None
        for s in pool:
            if s[0] > cur[0] and precedes(cur, s):
                if nxt is None or s[0] < nxt[0] or (s[0] == nxt[0] and s[1] > nxt[1]):
                    nxt = s
        if nxt is None:
            return chain
        chain.append(nxt)
        cur = nxt


def downward_sequence(segs) -> list[IntSeg]:
    """Greedy chain: largest start, shortest there; then the largest earlier start
    holding a segment preceding the previous pick, shortest such."""
    if not segs:
        return []
    pool = sorted(segs)
    ak = pool[-1][0]
    cur = min(s for s in pool if s[0] == ak)
    chain = [cur]
    while True:
        nxt = None
        for s in pool:
            if s[0] < cur[0] and precedes(s, cur):
                if nxt is None or s[0] > nxt[0] or (s[0] == nxt[0] and s[1] < nxt[1]):
                    nxt = s
        if nxt is None:
            return chain
        chain.append(nxt)
        cur = nxt


def _peel(segs, seq_fn) -> list[list[IntSeg]]:
    pool = sorted(segs)
    out = []
    while pool:
        chain = seq_fn(pool)
        _remove(pool, chain)
        out.append(chain)
    return out


def upward_sequences(segs) -> list[list[IntSeg]]:
    return _peel(segs, upward_sequence)


def downward_sequences(segs) -> list[list[IntSeg]]:
    return _peel(segs, downward_sequence)


def derivative_right(segs, a: int, b: int) -> Optional[IntLine]:
    """Right derivative of ``L(segs)`` by ``[a, b]``; ``None`` when it vanishes."""
    seqs = upward_sequences(restrict(segs, a, b))
    if not seqs:
        return None
    # removable free sections as (start, end) per chain member
    rf = []
    for seq in seqs:
        row = []
        for j, (x, y) in enumerate(seq):
            row.append((x, seq[j + 1][0] - 2 if j + 1 < len(seq) else y))
        rf.append(row)
    chosen: list[IntSeg] = []
    target = b
    top = len(seqs) - 1
    while True:
        hit = None
        for i in range(top, -1, -1):
            js = [j for j, (x, e) in enumerate(rf[i]) if x <= target <= e]
            if js:
                if len(js) > 1:
                    raise AssertionError("ambiguous selection in derivative step")
                hit = (i, js[0])
                break
        if hit is None:
            break
        i, j = hit
        chosen.append(seqs[i][j])
        target = seqs[i][j][0] - 1
        top = i
    if not chosen or chosen[-1][0] != a:
        return None
    pool = list(segs)
    _remove(pool, chosen)
    prev_start = b + 1
    for x, y in chosen:
        if prev_start <= y:
            pool.append((prev_start, y))
        prev_start = x
    return tuple(sorted(pool))


def integral_right(segs, a: int, b: int) -> IntLine:
    """Right integral: the socle of ``L(segs) x St([a, b])``."""
    seqs = downward_sequences(restrict(segs, a, b))
    af = []
    for seq in seqs:
        row = []
        for q, (x, y) in enumerate(seq):
            if q + 1 < len(seq):
                nx = seq[q + 1][0]
                row.append((nx + 1, x - 1) if nx <= x - 2 else None)
            else:
                row.append((a, x - 1) if a < x else None)
        af.append(row)
    chosen: list[IntSeg] = []
    point = a
    top = len(seqs) - 1
    while True:
        hit = None
        for p in range(top, -1, -1):
            qs = [q for q, iv in enumerate(af[p]) if iv is not None and iv[0] <= point <= iv[1]]
            if qs:
                if len(qs) > 1:
                    raise AssertionError("ambiguous selection in integral step")
                hit = (p, qs[0])
                break
        if hit is None:
            break
        p, q = hit
        chosen.append(seqs[p][q])
        point = seqs[p][q][0]
        top = p - 1
    pool = list(segs)
    _remove(pool, chosen)
    start = a
    for x, y in chosen:
        pool.append((start, y))
        start = x
    if start <= b:
        pool.append((start, b))
    return tuple(sorted(pool))


def mw_dual(segs) -> IntLine:
    """Moeglin-Waldspurger involution on one line."""
    pool = sorted(segs)
    out = []
    while pool:
        e = max(y for _, y in pool)
        cur = max(s for s in pool if s[1] == e)  # shortest among those ending at e
        chain = [cur]
        while True:
            cands = [s for s in pool if s[1] == cur[1] - 1 and s[0] < cur[0]]
            if not cands:
                break
            cur = max(cands)
            chain.append(cur)
        out.append((e - len(chain) + 1, e))
        _remove(pool, chain)
        pool.extend((x, y - 1) for x, y in chain if y > x)
    return tuple(sorted(out))


def hd_right_z(segs) -> IntLine:
    """Highest right derivative multisegment of ``Z(segs)``."""
    pool = sorted(segs)
    out = []
    while pool:
        e = min(y for _, y in pool)
        cur = min(s for s in pool if s[1] == e)  # longest among those ending at e
        chain = [cur]
        while True:
            cands = [s for s in pool if s[1] == cur[1] + 1 and s[0] > cur[0]]
            if not cands:
                break
            cur = min(cands)
            chain.append(cur)
        out.append((e, chain[-1][1]))
        _remove(pool, chain)
    return tuple(sorted(out))


def ul(segs) -> IntLine:
    """Repeated intersection-union until pairwise unlinked."""
    pool = sorted(segs)
    while True:
        n = len(pool)
        pair = None
        for i in range(n):
            for j in range(i + 1, n):
                if linked(pool[i], pool[j]):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            return tuple(pool)
        p, q = pool[pair[0]], pool[pair[1]]
        del pool[pair[1]], pool[pair[0]]
        lo, hi = (p, q) if p[0] < q[0] else (q, p)
        pool.append((lo[0], hi[1]))
        if hi[0] <= lo[1]:
            pool.append((hi[0], lo[1]))
        pool.sort()


def removal_right(segs, a: int, b: int) -> IntLine:
    """Right removal process of ``[a, b]`` from ``segs``."""
    firsts = [s for s in segs if s[0] == a and s[1] >= b]
    if not firsts:
        raise ValueError("removal inapplicable")
    cur = min(firsts, key=lambda s: s[1])
    chain = [cur]
    while True:
        # chain members must still meet b+1, otherwise the truncation would grow them
        cands = [s for s in segs if cur[0] < s[0] <= b + 1 and b <= s[1] < cur[1]]
        if not cands:
            break
        cur = min(cands)
        chain.append(cur)
    pool = list(segs)
    _remove(pool, chain)
    for i, (x, y) in enumerate(chain):
        start = chain[i + 1][0] if i + 1 < len(chain) else b + 1
        if start <= y:
            pool.append((start, y))
    return tuple(sorted(pool))


def generic_witness(m, n) -> tuple[IntLine, IntLine, IntLine]:
    """``(p, q, t)`` for generic ``m``, ``n`` on one line."""
    pm, pn = sorted(m), sorted(n)
    p, q, t = [], [], []
    while pm:
        ai = pm[0][0]
        seg = max(s for s in pm if s[0] == ai)
        ai, bi = seg
        cands = [s for s in pn if ai <= s[0] <= bi <= s[1]]
        pm.remove(seg)
        if not cands:
            p.append(seg)
            continue
        a2, b2 = max(cands, key=lambda s: (s[1] - s[0], -s[0]))
        pn.remove((a2, b2))
        if ai <= a2 - 1:
            p.append((ai, a2 - 1))
        if bi + 1 <= b2:
            q.append((bi + 1, b2))
        t.append((a2, bi))
    q.extend(pn)
    return tuple(sorted(p)), tuple(sorted(q)), tuple(sorted(t))
