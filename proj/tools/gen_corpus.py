#!/usr/bin/env python3
"""Regenerate data/knot_table.csv from Dowker-Thistlethwaite codes and braid words.

DT codes are realized by brute force over the two local rotation choices per
crossing, keeping the unique (up to reflection) genus-0 realization. Braid
closures are used for the torus links and the Borromean rings.
"""
import csv
import itertools
import sys

DT_CODES = {
    "3_1": "4 6 2",
    "4_1": "4 6 8 2",
    "5_1": "6 8 10 2 4",
    "5_2": "4 8 10 2 6",
    "6_1": "4 8 12 10 2 6",
    "6_2": "4 8 10 12 2 6",
    "6_3": "4 8 10 2 12 6",
    "7_1": "8 10 12 14 2 4 6",
    "7_2": "4 10 14 12 2 8 6",
    "7_3": "6 10 12 14 2 4 8",
    "7_4": "6 10 12 14 4 2 8",
    "7_5": "4 10 12 14 2 8 6",
    "7_6": "4 8 12 2 14 6 10",
    "7_7": "4 8 10 12 2 14 6",
    "8_1": "4 10 16 14 12 2 8 6",
    "8_2": "4 10 12 14 16 2 6 8",
    "8_3": "6 12 10 16 14 4 2 8",
    "8_4": "6 10 12 16 14 4 2 8",
    "8_5": "6 8 12 2 14 16 4 10",
    "8_6": "4 10 14 16 12 2 8 6",
    "8_7": "4 10 12 14 2 16 6 8",
    "8_8": "4 8 12 2 16 14 6 10",
    "8_9": "6 10 12 14 16 4 2 8",
    "8_10": "4 8 12 2 14 16 6 10",
    "8_11": "4 10 12 14 16 2 8 6",
    "8_12": "4 8 14 10 2 16 6 12",
    "8_13": "4 10 12 14 2 16 8 6",
    "8_14": "4 8 10 14 2 16 6 12",
    "8_15": "4 8 12 2 14 6 16 10",
    "8_16": "6 8 14 12 4 16 2 10",
    "8_17": "6 8 12 14 4 16 2 10",
    "8_18": "6 8 10 12 14 16 2 4",
    "8_19": "4 8 -12 2 -14 -16 -6 -10",
    "8_20": "4 8 -12 2 -14 -6 -16 -10",
    "8_21": "4 8 -12 2 14 -6 16 10",
}

BRAIDS = {
    "L2a1": (2, [1, 1]),
    "L4a1": (2, [1, 1, 1, 1]),
    "L6a3": (2, [1, 1, 1, 1, 1, 1]),
    "L6a4": (3, [1, -2, 1, -2, 1, -2]),
}


def face_count(crossings):
    where = {}
    for ci, slots in enumerate(crossings):
        for si, e in enumerate(slots):
            where.setdefault(e, []).append((ci, si))
    seen = set()
    faces = 0
    for ci in range(len(crossings)):
        for si in range(4):
            if (ci, si) in seen:
                continue
            faces += 1
            c, s = ci, si
            while (c, s) not in seen:
                seen.add((c, s))
                e = crossings[c][s]
                a, b = where[e]
                c2, s2 = b if a == (c, s) else a
                c, s = c2, (s2 + 1) % 4
    return faces


def dt_to_pd(code):
    evens = [int(t) for t in code.split()]
    n = len(evens)
    m = 2 * n
    visits = []
    for k, a in enumerate(evens):
        visits.append((2 * k + 1, abs(a), a < 0))

    def inn(p):
        return m if p == 1 else p - 1

    for bits in itertools.product([0, 1], repeat=n):
        if bits[0] == 1:
            continue
        rot = []
        for (p, q, _), b in zip(visits, bits):
            if b == 0:
                rot.append([inn(p), inn(q), p, q])
            else:
                rot.append([inn(p), q, p, inn(q)])
        if face_count(rot) != n + 2:
            continue
        out = []
        for (p, q, flipped), r in zip(visits, rot):
            odd_under = not flipped
            start = 0 if odd_under else r.index(inn(q))
            out.append(r[start:] + r[:start])
        return out
    raise ValueError("no planar realization for " + code)


def braid_to_pd(strands, word):
    label = list(range(1, strands + 1))
    initial = list(label)
    nxt = strands + 1
    raw = []
    for g in word:
        i = abs(g) - 1
        sw, se = label[i], label[i + 1]
        nw, ne = nxt, nxt + 1
        nxt += 2
        if g > 0:
            raw.append([sw, se, ne, nw])
        else:
            raw.append([se, ne, nw, sw])
        label[i], label[i + 1] = nw, ne
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in zip(label, initial):
        parent[find(a)] = find(b)
    order = {}
    for slots in raw:
        for e in slots:
            r = find(e)
            if r not in order:
                order[r] = len(order) + 1
    return [[order[find(e)] for e in slots] for slots in raw]


def fmt(pd):
    return " ".join("X(%s)" % ",".join(map(str, x)) for x in pd)


def main(path):
    rows = []
    for name, code in DT_CODES.items():
        pd = dt_to_pd(code)
        rows.append((name, len(pd), fmt(pd)))
    for name, (s, w) in BRAIDS.items():
        pd = braid_to_pd(s, w)
        assert face_count(pd) == len(pd) + 2
        rows.append((name, len(pd), fmt(pd)))
    with open(path, "w", newline="") as f:
        w = csv.writer(f, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        w.writerow(["name", "crossings", "pd"])
        for r in rows:
            w.writerow(r)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/knot_table.csv")
