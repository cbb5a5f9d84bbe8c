# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of the exact integer predicate core.

This module mirrors _pure.py function for function and loop for loop; both
must produce identical results in identical order, so any change there must
be copied here verbatim. Values are arbitrary-precision Python ints; the
speedup comes from compiled control flow in the scan loops, not from native
arithmetic.
"""

from math import gcd


def norm2(n, d):
    """Canonical scalar for the fraction n/d. Pre: d != 0."""
    if d < 0:
        n = -n
        d = -d
    if n == 0:
        return (0, 1)
    g = gcd(n, d)
    return (n // g, d // g)


def cmp2(a, b):
    """Sign of a - b for canonical scalars."""
    t = a[0] * b[1] - b[0] * a[1]
    return (t > 0) - (t < 0)


def pt_cmp(p, q):
    """Lexicographic (x, then y) comparison of two points."""
    t = p[0] * q[1] - q[0] * p[1]
    if t:
        return 1 if t > 0 else -1
    t = p[2] * q[3] - q[2] * p[3]
    return (t > 0) - (t < 0)


def orient(p, q, r):
    """Sign of cross(q - p, r - p): 1 counterclockwise, -1 clockwise."""
    pxn, pxd, pyn, pyd = p
    qxn, qxd, qyn, qyd = q
    rxn, rxd, ryn, ryd = r
    ux = qxn * pxd - pxn * qxd
    uy = qyn * pyd - pyn * qyd
    vx = rxn * pxd - pxn * rxd
    vy = ryn * pyd - pyn * ryd
    t = ux * vy * (qyd * rxd) - uy * vx * (qxd * ryd)
    return (t > 0) - (t < 0)


def in_box(t, p, q):
    """t inside the coordinate bounding box of [p, q] (closed)."""
    lo = p[0] * q[1] - q[0] * p[1]  # sign of px - qx
    if lo <= 0:
        xok = p[0] * t[1] - t[0] * p[1] <= 0 and t[0] * q[1] - q[0] * t[1] <= 0
    else:
        xok = q[0] * t[1] - t[0] * q[1] <= 0 and t[0] * p[1] - p[0] * t[1] <= 0
    if not xok:
        return False
    lo = p[2] * q[3] - q[2] * p[3]
    if lo <= 0:
        return p[2] * t[3] - t[2] * p[3] <= 0 and t[2] * q[3] - q[2] * t[3] <= 0
    return q[2] * t[3] - t[2] * q[3] <= 0 and t[2] * p[3] - p[2] * t[3] <= 0


def on_seg(t, p, q):
    """t on the closed segment [p, q]."""
    return orient(p, q, t) == 0 and in_box(t, p, q)


def line3(p, q):
    """Canonical line through two distinct points. Pre: p != q."""
    pxn, pxd, pyn, pyd = p
    qxn, qxd, qyn, qyd = q
    dxn = qxn * pxd - pxn * qxd  # over qxd*pxd
    dyn = qyn * pyd - pyn * qyd  # over qyd*pyd
    a0 = -dyn * (qxd * pxd)
    b0 = dxn * (qyd * pyd)
    a = a0 * (pxd * pyd)
    b = b0 * (pxd * pyd)
    c = a0 * (pxn * pyd) + b0 * (pyn * pxd)
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    a //= g
    b //= g
    c //= g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return (a, b, c)


def line_meet(l1, l2):
    """Intersection of two canonical lines.

    Returns (0, None) disjoint parallels, (1, point) proper crossing,
    (2, None) same line. Canonical form makes 'same line' a tuple equality.
    """
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return (2, None) if l1 == l2 else (0, None)
    xn = c1 * b2 - c2 * b1
    yn = a1 * c2 - a2 * c1
    return (1, norm2(xn, det) + norm2(yn, det))


def axis_cross(l):
    """Crossing of a line with the x-axis.

    Returns (0, 0, 1) for a horizontal line off the axis, (2, 0, 1) when the
    line IS the axis, else (1, n, d) with x = n/d canonical.
    """
    a, b, c = l
    if a == 0:
        return (2, 0, 1) if c == 0 else (0, 0, 1)
    n, d = norm2(c, a)
    return (1, n, d)


def seg_meet(p1, q1, p2, q2):
    """Exact intersection of closed segments [p1,q1] and [p2,q2].

    Returns (0, None), (1, point), or (2, (lo, hi)) for a collinear overlap
    with lo < hi lexicographically.
    """
    o1 = orient(p1, q1, p2)
    o2 = orient(p1, q1, q2)
    o3 = orient(p2, q2, p1)
    o4 = orient(p2, q2, q1)
    if o1 == 0 and o2 == 0:
        # all four collinear: 1-D interval intersection in lex order
        lo1, hi1 = (p1, q1) if pt_cmp(p1, q1) <= 0 else (q1, p1)
        lo2, hi2 = (p2, q2) if pt_cmp(p2, q2) <= 0 else (q2, p2)
        lo = lo1 if pt_cmp(lo1, lo2) >= 0 else lo2
        hi = hi1 if pt_cmp(hi1, hi2) <= 0 else hi2
        s = pt_cmp(lo, hi)
        if s > 0:
            return (0, None)
        if s == 0:
            return (1, lo)
        return (2, (lo, hi))
    # endpoint touching a segment (at most one contact point possible)
    if o1 == 0 and in_box(p2, p1, q1):
        return (1, p2)
    if o2 == 0 and in_box(q2, p1, q1):
        return (1, q2)
    if o3 == 0 and in_box(p1, p2, q2):
        return (1, p1)
    if o4 == 0 and in_box(q1, p2, q2):
        return (1, q1)
    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        kind, z = line_meet(line3(p1, q1), line3(p2, q2))
        return (1, z)
    return (0, None)


def cross_lower(z, y):
    """Axis crossing abscissa of [z, y] as a canonical scalar.

    Pre: z strictly above the axis, y strictly below.
    """
    zxn, zxd, zyn, zyd = z
    yxn, yxd, yyn, yyd = y
    num = yxn * zyn * zxd * yyd - zxn * yyn * yxd * zyd
    den = zxd * yxd * (zyn * yyd - yyn * zyd)
    return norm2(num, den)


def _cross_zd(xn, yn, d, y):
    """cross_lower for z = (xn/d, yn/d) not necessarily reduced.

    Pre: d > 0, yn > 0 (z strictly upper), y strictly lower.
    """
    yxn, yxd, yyn, yyd = y
    num = yxn * yn * yyd - xn * yyn * yxd
    den = yxd * (yn * yyd - yyn * d)
    return norm2(num, den)


def viewer_scan(ys, alist, aset, lines):
    """First upper point seeing every y through admitted axis points.

    ys: the forbidden points (all strictly lower), in fixed order.
    alist: admitted axis abscissae in insertion order; aset: same as a set.
    lines: flat list, lines[u*len(ys) + i] = canonical line through
    (alist[u], 0) and ys[i].

    Scans candidates z = lines[u,i] x lines[v,j] over i < j, u != v in a
    fixed order; a candidate counts when it is strictly upper and the
    crossing of [z, ys[m]] is admitted for every other m. Returns the first
    such z (canonical point) or None. Any point seeing all of ys through
    the admitted set must see two of them through two distinct admitted
    points (a shared one would lie on a line through two ys, and those
    crossings are never admitted), so the scan is exhaustive.
    """
    cdef Py_ssize_t k1 = len(ys)
    cdef Py_ssize_t na = len(alist)
    cdef Py_ssize_t i, j, u, v, m
    cdef bint ok
    if na < k1:
        return None
    for i in range(k1):
        for j in range(i + 1, k1):
            for u in range(na):
                a1, b1, c1 = lines[u * k1 + i]
                for v in range(na):
                    if v == u:
                        continue
                    a2, b2, c2 = lines[v * k1 + j]
                    det = a1 * b2 - a2 * b1
                    if det == 0:
                        continue
                    yn = a1 * c2 - a2 * c1
                    if yn == 0 or (yn > 0) != (det > 0):
                        continue
                    xn = c1 * b2 - c2 * b1
                    if det < 0:
                        xn, yn, det = -xn, -yn, -det
                    ok = True
                    for m in range(k1):
                        if m == i or m == j:
                            continue
                        if _cross_zd(xn, yn, det, ys[m]) not in aset:
                            ok = False
                            break
                    if ok:
                        return norm2(xn, det) + norm2(yn, det)
    return None


def danger_scan(lines, old_count, ys, aset, bset, zseen, badd):
    """Process dangerous upper crossings of the admitted-line family.

    lines: flat family as in viewer_scan; entries from old_count on are new
    since the last scan. Every unordered pair involving a new line is
    intersected; a strictly upper crossing z not seen before is processed:
    the crossing of [z, ys[i]] for the least i with that crossing not
    admitted is added to the blocked set (bset, with badd recording fresh
    additions). If no such i exists, z already sees every forbidden point,
    which the caller treats as an invariant violation: z is returned.
    Returns None when all dangerous points were neutralized.
    """
    cdef Py_ssize_t n = len(lines)
    cdef Py_ssize_t start = old_count
    cdef Py_ssize_t i, j
    cdef bint blocked
    for i in range(start, n):
        a1, b1, c1 = lines[i]
        for j in range(i):
            a2, b2, c2 = lines[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            yn = a1 * c2 - a2 * c1
            if yn == 0 or (yn > 0) != (det > 0):
                continue
            xn = c1 * b2 - c2 * b1
            if det < 0:
                xn, yn, det = -xn, -yn, -det
            z = norm2(xn, det) + norm2(yn, det)
            if z in zseen:
                continue
            zseen.add(z)
            blocked = False
            for y in ys:
                c = _cross_zd(xn, yn, det, y)
                if c not in aset:
                    if c not in bset:
                        bset.add(c)
                        badd.append(c)
                    blocked = True
                    break
            if not blocked:
                return z
    return None
