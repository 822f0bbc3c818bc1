#!/usr/bin/env python3
"""Convert a closed planar polyline (a Lagrangian projection) into diagram JSON.

The height z is recovered by integrating y dx along the curve, so the input
must enclose zero signed area.  Crossing heights give chord lengths, tangent
rotation along capping paths gives degrees.  The rotation number is printed
on stderr.

usage: polyline_to_diagram.py points.json name > diagram.json
points.json: {"points": [[x, y], ...], "base_point_edge": 0,
              "flip": [names], "lengths": {name: "p/q"},
              "rename": {generated name: final name}}

"flip" swaps over/under at the named crossings and "lengths" overrides chord
lengths.  Both describe the same planar curve after an area-changing planar
isotopy, which is how face areas are made positive without redrawing; the C++
validator re-checks the resulting face areas.
"""
import json
import math
import sys
from fractions import Fraction


def seg_intersect(p, q, r, s):
    d = (q[0] - p[0]) * (s[1] - r[1]) - (q[1] - p[1]) * (s[0] - r[0])
    if d == 0:
        return None
    t = ((r[0] - p[0]) * (s[1] - r[1]) - (r[1] - p[1]) * (s[0] - r[0])) / d
    u = ((r[0] - p[0]) * (q[1] - p[1]) - (r[1] - p[1]) * (q[0] - p[0])) / d
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    return None


def angle(v):
    return math.atan2(float(v[1]), float(v[0]))


def main():
    cfg = json.load(open(sys.argv[1]))
    name = sys.argv[2]
    P = [(Fraction(x).limit_denominator(10**6), Fraction(y).limit_denominator(10**6))
         for x, y in cfg["points"]]
    n = len(P)
    segs = [(P[i], P[(i + 1) % n]) for i in range(n)]

    # z at vertices
    z = [Fraction(0)]
    for i in range(n):
        a, b = segs[i]
        z.append(z[-1] + (a[1] + b[1]) / 2 * (b[0] - a[0]))
    flips = set(cfg.get("flip", []))
    overrides = cfg.get("lengths", {})
    if z[-1] != 0 and not overrides:
        sys.exit("polyline does not enclose zero signed area: %s" % z[-1])

    def z_at(i, t):
        a, b = segs[i]
        x = a[0] + t * (b[0] - a[0])
        y = a[1] + t * (b[1] - a[1])
        return z[i] + (a[1] + y) / 2 * (x - a[0])

    # crossings as (param, other param)
    hits = []
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            r = seg_intersect(*segs[i], *segs[j])
            if r:
                hits.append((i + r[0], j + r[1]))
    # visits along the curve
    visits = []
    for k, (s1, s2) in enumerate(hits):
        for s in (s1, s2):
            visits.append((s, k))
    visits.sort()
    cr = []
    for k, (s1, s2) in enumerate(hits):
        z1 = z_at(int(s1), s1 - int(s1))
        z2 = z_at(int(s2), s2 - int(s2))
        assert z1 != z2
        over, under = (s1, s2) if z1 > z2 else (s2, s1)
        cr.append(dict(over=over, under=under, length=abs(z1 - z2)))
    # name crossings in order of first visit
    order = []
    for s, k in visits:
        if k not in order:
            order.append(k)
    names = {k: "c%d" % (i + 1) for i, k in enumerate(order)}
    renames = cfg.get("rename", {})
    for k in order:
        if names[k] in flips:
            cr[k]["over"], cr[k]["under"] = cr[k]["under"], cr[k]["over"]
        if names[k] in overrides:
            cr[k]["length"] = Fraction(overrides[names[k]])

    def direction(s):
        a, b = segs[int(s)]
        return (b[0] - a[0], b[1] - a[1])

    # tangent angle accumulated from parameter 0
    turn_at_vertex = []
    for i in range(n):
        d0 = direction(i - 1 + 0.5 if i > 0 else n - 0.5)
        d1 = direction(i + 0.5)
        da = angle(d1) - angle(d0)
        while da <= -math.pi:
            da += 2 * math.pi
        while da > math.pi:
            da -= 2 * math.pi
        turn_at_vertex.append(da)
    total = sum(turn_at_vertex)
    rot = round(total / (2 * math.pi))

    def cumulative(s):
        # tangent angle at parameter s, unwrapped, starting from segment 0
        base = angle(direction(0.5))
        return base + sum(turn_at_vertex[1:int(s) + 1])

    def rotation(s_from, s_to):
        a = cumulative(s_from)
        b = cumulative(s_to)
        if s_to < s_from:
            b += total
        return (b - a) / (2 * math.pi)

    crossings = []
    for k in order:
        c = cr[k]
        r = rotation(c["over"], c["under"])
        deg = math.floor(2 * r)
        ends = []
        for label, s, sgn in (("over-out", c["over"], 1), ("over-in", c["over"], -1),
                              ("under-out", c["under"], 1), ("under-in", c["under"], -1)):
            d = direction(s)
            ends.append((angle((sgn * d[0], sgn * d[1])) % (2 * math.pi), label))
        ends.sort()
        crossings.append(dict(name=names[k], degree=deg, length=str(c["length"]),
                              ends=[e[1] for e in ends]))
    traversal = []
    for s, k in visits:
        c = cr[k]
        traversal.append(dict(crossing=names[k], strand="over" if s == c["over"] else "under"))

    # outer face: the leftmost vertex lies on the outer face; decide side of the edge
    imin = min(range(n), key=lambda i: (P[i][0], P[i][1]))
    s_min = imin + 0.0
    # edge index containing s_min (edge k runs from visit k to visit k+1)
    vs = [v[0] for v in visits]
    edge = max([k for k, v in enumerate(vs) if v <= s_min], default=len(vs) - 1)
    # at the leftmost point, moving with +y means the outer face (x smaller) is on the left
    din = direction(imin - 0.5 if imin > 0 else n - 0.5)
    dout = direction(imin + 0.5)
    vy = din[1] + dout[1]
    side = "right" if vy < 0 else "left"

    out = dict(format="lagrangian-diagram", version=1, name=name,
               crossings=crossings, components=[traversal],
               outer_face=dict(edge=edge, side=side),
               base_point_edge=cfg.get("base_point_edge", 0),
               notes="generated from a planar polyline; rotation number %d" % rot)
    for c in crossings:
        c["name"] = renames.get(c["name"], c["name"])
    for v in traversal:
        v["crossing"] = renames.get(v["crossing"], v["crossing"])
    json.dump(out, sys.stdout, indent=2)
    print()
    print("rotation", rot, file=sys.stderr)


if __name__ == "__main__":
    main()
