"""Pure-Python fundamental-identity sweep over sparse integer tables.

Works with arbitrary-size integers.  Only (x, y) pairs that can produce a
nonzero term are visited: for a fixed y the residual at x vanishes unless
[e_x] meets the support of ad_y or some x_i is moved by ad_y into a
nonzero bracket.
"""

from __future__ import annotations

from itertools import combinations


def sort_signed(t) -> tuple[int, tuple] | None:
    """(sign, sorted tuple) of a basis tuple, or None on a repeated index."""
    t = list(t)
    sign = 1
    for i in range(1, len(t)):
        v = t[i]
        j = i - 1
        while j >= 0 and t[j] > v:
            t[j + 1] = t[j]
            j -= 1
            sign = -sign
        t[j + 1] = v
        if j >= 0 and t[j] == v:
            return None
    return sign, tuple(t)


def _addto(acc: dict, c: int, v: dict) -> None:
    for k, x in v.items():
        nv = acc.get(k, 0) + c * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def fi_sweep(table: dict, n: int, d: int, xs=None) -> list:
    """Nonzero fundamental-identity residuals.

    ``table`` maps sorted 0-based n-tuples to sparse integer vectors
    ``{k: c}``.  ``xs`` optionally restricts the x-side tuples (a set).
    Returns ``[(x, y, {k: residual})]`` sorted by (x, y).
    """
    out = []
    for y in combinations(range(d), n - 1):
        ad = {}
        for m in range(d):
            if m in y:
                continue
            s = sort_signed((m,) + y)
            v = table.get(s[1])
            if v:
                sg = s[0]
                ad[m] = {k: sg * c for k, c in v.items()}
        if not ad:
            continue

        cand = set()
        for z, cz in table.items():
            if any(m in ad for m in cz):
                cand.add(z)
            for m in z:
                for src, img in ad.items():
                    if m in img and (src == m or src not in z):
                        cand.add(tuple(sorted(src if q == m else q for q in z)))
        if xs is not None:
            cand &= xs

        for x in cand:
            res: dict = {}
            cx = table.get(x)
            if cx:
                for m, c in cx.items():
                    img = ad.get(m)
                    if img:
                        _addto(res, c, img)
            for i, xi in enumerate(x):
                img = ad.get(xi)
                if not img:
                    continue
                for m, a in img.items():
                    t = x[:i] + (m,) + x[i + 1:]
                    s = sort_signed(t)
                    if s is None:
                        continue
                    v = table.get(s[1])
                    if v:
                        _addto(res, -a * s[0], v)
            if res:
                out.append((x, y, res))
    out.sort(key=lambda r: (r[0], r[1]))
    return out
