#!/usr/bin/env python3
"""Regenerates crates/knotpoly/data/census.csv and k13_sample.pd.

PD codes are constructed from planar multigraph rotation systems via the
medial construction: one crossing per graph edge, strands running diagonally
through each crossing, over/under chosen per edge ("type"). Uniform types
give the alternating diagram of the graph; flipping all types gives the
mirror image.

Fixture families:
  * series-parallel continued-fraction graphs -> 2-bridge (rational) knots
    C(a1,...,an), including the T(2,n) torus knots as the one-part case
  * theta-of-bundles graphs -> pretzel knots, including the non-alternating
    (-2,p,q) family via per-bundle crossing types
  * a targeted search over 8-vertex 13-edge planar multigraphs for the
    13-crossing knot whose Jones polynomial matches the worked example

Volumes are the published hyperbolic volumes of these knots (Knotscape /
SnapPea census values); torus knots are non-hyperbolic and get volume 0.

Every generated PD is validated through the Rust pipeline (route agreement,
identity checks, torus-knot Jones formulas) before it is written.
"""

import csv
import itertools
import subprocess
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "crates" / "knotpoly" / "data"
BINARY = REPO / "target" / "debug" / "knotpoly"


# ---------------------------------------------------------------------------
# Laurent polynomials as {exponent: coefficient} dicts
# ---------------------------------------------------------------------------

def padd(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
        if out[e] == 0:
            del out[e]
    return out


def pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
            if out[e] == 0:
                del out[e]
    return out


def pscale(a, k):
    return {e: c * k for e, c in a.items()} if k else {}


def pshift(a, k):
    return {e + k: c for e, c in a.items()}


def pmirror(a):
    return {-e: c for e, c in a.items()}


def pdiv_exact(num, den):
    """Exact polynomial division, lowest degree first."""
    num = dict(num)
    q = {}
    dmin = min(den)
    dc = den[dmin]
    while num:
        e = min(num)
        c = num[e]
        assert c % dc == 0, "non-exact division"
        qe, qc = e - dmin, c // dc
        q[qe] = qc
        num = padd(num, pshift(pscale(den, -qc), qe))
    return q


def torus_jones(p, q):
    """V(T(p,q)) = t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)."""
    numerator = {0: 1, p + 1: -1, q + 1: -1, p + q: 1}
    quotient = pdiv_exact(numerator, {0: 1, 2: -1})
    return pshift(quotient, (p - 1) * (q - 1) // 2)


# worked-example Jones polynomial, ascending from t^-12
SAMPLE_COEFFS = [1, -4, 11, -23, 35, -47, 53, -52, 47, -34, 22, -11, 4, -1]
SAMPLE_JONES = {i - 12: c for i, c in enumerate(SAMPLE_COEFFS)}

FIGURE_EIGHT_JONES = {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}


# ---------------------------------------------------------------------------
# Rotation systems and the medial PD construction
# ---------------------------------------------------------------------------
# A graph is (n_vertices, edges) with edges a list of (u, v). A rotation
# system rot[w] lists darts (edge_id, end) counterclockwise around w, where
# end 0 sits at u and end 1 at v.

def face_count(n, rot):
    """Orbits of next(d) = rotate(reverse(d)) over directed darts."""
    pos = {}
    for w, darts in enumerate(rot):
        for i, d in enumerate(darts):
            pos[d] = (w, i)
    seen = set()
    faces = 0
    for start in pos:
        if start in seen:
            continue
        faces += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            far = (cur[0], 1 - cur[1])
            w, i = pos[far]
            cur = rot[w][(i + 1) % len(rot[w])]
    return faces


def medial_pd(n, edges, rot, types):
    """Build the PD code of the medial knot; returns None for links.

    Crossing i sits on edge i. Slots counterclockwise: s0 = u-side-left,
    s1 = u-side-right, s2 = v-side-right, s3 = v-side-left (left/right
    relative to the u->v direction). Strands run s0<->s2 and s1<->s3;
    type 0 puts the s0-s2 strand under, type 1 the s1-s3 strand.
    """
    m = len(edges)
    assert face_count(n, rot) == m - n + 2, "rotation system is not planar"

    # arcs: one per corner (w, position i): connects the "start" slot of
    # rot[w][i] to the "end" slot of rot[w][i+1]
    slot_arc = {}
    arcs = []
    for w in range(n):
        k = len(rot[w])
        for i in range(k):
            e1, end1 = rot[w][i]
            e2, end2 = rot[w][(i + 1) % k]
            a = (e1, 0 if end1 == 0 else 2)
            b = (e2, 1 if end2 == 0 else 3)
            arc_id = len(arcs)
            arcs.append((a, b))
            for slot in (a, b):
                assert slot not in slot_arc, "slot used twice"
                slot_arc[slot] = arc_id
    assert len(arcs) == 2 * m

    # walk the knot: enter a crossing, leave by the transversal partner
    entered = {}
    labels = {}
    start_arc = 0
    crossing, slot = arcs[start_arc][0]
    label = 0
    while True:
        label += 1
        labels[slot_arc[(crossing, slot)]] = label
        entered[(crossing, slot)] = True
        out_slot = (slot + 2) % 4
        arc = arcs[slot_arc[(crossing, out_slot)]]
        crossing, slot = arc[0] if arc[0] != (crossing, out_slot) else arc[1]
        if slot_arc[(crossing, slot)] == start_arc:
            break
    if label != 2 * m:
        return None  # medial has several components: a link, not a knot

    terms = []
    for e in range(m):
        slot_labels = [labels[slot_arc[(e, s)]] for s in range(4)]
        under = (0, 2) if types[e] == 0 else (1, 3)
        start = under[0] if entered.get((e, under[0])) else under[1]
        assert entered.get((e, start)), "under strand never entered"
        rotated = [slot_labels[(start + k) % 4] for k in range(4)]
        terms.append("X({},{},{},{})".format(*rotated))
    return " ".join(terms)


def embed_multigraph(n, classes):
    """Planar rotation system for a multigraph given as ((u,v), mu) classes:
    embed the simple base with networkx, then slide parallel copies in next
    to their base edge so each pair bounds a bigon."""
    import networkx as nx

    base = [uv for uv, _ in classes]
    g = nx.Graph(base)
    assert g.number_of_edges() == len(base), "class list has duplicate keys"
    ok, emb = nx.check_planarity(g)
    assert ok, "base graph is not planar"
    order = emb.get_data()

    edges = []
    edge_id = {}
    for (u, v), _ in classes:
        edge_id[(u, v)] = len(edges)
        edges.append((u, v))
    extra = []
    for (u, v), mu in classes:
        for _ in range(mu - 1):
            extra.append(((u, v), len(edges)))
            edges.append((u, v))

    rot = [[] for _ in range(n)]
    for w in range(n):
        for nb in order[w]:
            key = (w, nb) if (w, nb) in edge_id else (nb, w)
            e = edge_id[key]
            end = 0 if edges[e][0] == w else 1
            rot[w].append((e, end))

    m_now = len(base)
    for (u, v), copy_id in extra:
        e = edge_id[(u, v)]
        placed = False
        for du in (1, 0):
            for dv in (1, 0):
                trial = [list(r) for r in rot]
                iu = trial[u].index((e, 0 if edges[e][0] == u else 1))
                trial[u].insert(iu + du, (copy_id, 0 if edges[copy_id][0] == u else 1))
                iv = trial[v].index((e, 0 if edges[e][0] == v else 1))
                trial[v].insert(iv + dv, (copy_id, 0 if edges[copy_id][0] == v else 1))
                if face_count(n, trial) == (m_now + 1) - n + 2:
                    rot = trial
                    placed = True
                    break
            if placed:
                break
        assert placed, "could not place parallel copy"
        m_now += 1
    assert face_count(n, rot) == len(edges) - n + 2
    return edges, rot


# ---------------------------------------------------------------------------
# Fixture graph families
# ---------------------------------------------------------------------------

def rational_classes(parts):
    """Series-parallel continued-fraction graph of C(a1,...,an): odd
    positions add parallel bundles between the hubs, even positions extend
    by a path of new vertices; an even part count closes the path back to
    the first hub. The medial is the alternating 2-bridge diagram with one
    twist region per part."""
    u, v = 0, 1
    n = 2
    classes = []
    for i, a in enumerate(parts):
        if i % 2 == 0:
            classes.append(((u, v), a))
        else:
            closing = i == len(parts) - 1
            prev = v
            for j in range(a):
                last = closing and j == a - 1
                nxt = u if last else n
                if not last:
                    n += 1
                classes.append((tuple(sorted((prev, nxt))), 1))
                prev = nxt
            if not closing:
                v = prev
    merged = {}
    for key, mu in classes:
        merged[key] = merged.get(key, 0) + mu
    return n, sorted(merged.items())


def pretzel_classes(mults):
    """Checkerboard graph of a pretzel: two poles joined by one internally
    disjoint path per twist column, the column length giving the path
    length (a vertical twist region is a series chain, not a parallel
    bundle). Returns the class list plus the class indices of each column."""
    u, v = 0, 1
    n = 2
    classes = []
    columns = []
    for mu in mults:
        ids = []
        prev = u
        for j in range(mu):
            last = j == mu - 1
            nxt = v if last else n
            if not last:
                n += 1
            ids.append(len(classes))
            classes.append((tuple(sorted((prev, nxt))), 1))
            prev = nxt
        columns.append(ids)
    return n, classes, columns


# ---------------------------------------------------------------------------
# Rust pipeline checks
# ---------------------------------------------------------------------------

def rust(*args):
    return subprocess.run(
        [str(BINARY), *args], capture_output=True, text=True, check=False
    )


def rust_jones(pd, route):
    r = rust("jones", "--pd", pd, "--route", route, "--format", "csv")
    if r.returncode != 0:
        raise RuntimeError(f"jones --route {route} failed: {r.stderr.strip()}")
    poly = {}
    for line in r.stdout.splitlines()[1:]:
        e, c = line.split(",")
        if int(c):
            poly[int(e)] = int(c)
    return poly


def rust_verify_ok(pd):
    return rust("verify", "--pd", pd).returncode == 0


def same_or_mirror(a, b):
    return a == b or a == pmirror(b)


# ---------------------------------------------------------------------------
# Search for the worked-example knot
# ---------------------------------------------------------------------------
# Target: one checkerboard side has |V|=8, |E|=13, |E~|=11, n(2)=2, tri=1;
# the dual side has n*(2)=3. The 13 crossings therefore split into 8 twist
# regions (2 doubled classes, 3 series pairs, 3 single crossings), so
# collapsing twists leaves a 5-vertex 8-edge simple core: K5 minus two
# edges. Expanding (3 edges subdivided, 2 doubled) and matching
# T_H(-t,-1/t) against the worked example pins the graph.

def p_series(mu):
    return {-i: (1 if i % 2 == 0 else -1) for i in range(mu)}


class DSU:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb
            return True
        return False


def components(n, pairs):
    d = DSU(n)
    c = n
    for u, v in pairs:
        if d.union(u, v):
            c -= 1
    return c


def tutte_jones_eval(n, classes):
    """Weighted evaluation of T(-t,-1/t) over base-edge subsets."""
    a = {1: -1, 0: -1}    # -t - 1
    b = {0: -1, -1: -1}   # -1/t - 1
    a_pows = [{0: 1}]
    for _ in range(n):
        a_pows.append(pmul(a_pows[-1], a))
    b_pows = [{0: 1}]
    for _ in range(len(classes) + 1):
        b_pows.append(pmul(b_pows[-1], b))
    p_cache = {mu: p_series(mu) for _, mu in classes}

    total = {}
    base = [uv for uv, _ in classes]
    mus = [mu for _, mu in classes]
    for mask in range(1 << len(classes)):
        chosen = [base[i] for i in range(len(classes)) if mask >> i & 1]
        k = components(n, chosen)
        term = pmul(a_pows[k - 1], b_pows[len(chosen) - n + k])
        for i in range(len(classes)):
            if mask >> i & 1:
                term = pmul(term, p_cache[mus[i]])
        total = padd(total, term)
    return total


def triangle_count(n, base_edges):
    adj = [set() for _ in range(n)]
    for u, v in base_edges:
        adj[u].add(v)
        adj[v].add(u)
    return sum(
        1 for u, v in base_edges for w in (adj[u] & adj[v]) if w > max(u, v)
    )


def series_pair_classes(n, edges):
    """Sizes of the classes of edges that pairwise form 2-edge-cuts (the
    parallel classes of the dual)."""
    m = len(edges)
    assert components(n, edges) == 1
    for i in range(m):
        rest = [edges[j] for j in range(m) if j != i]
        assert components(n, rest) == 1, "graph has a bridge"
    d = DSU(m)
    for i, j in itertools.combinations(range(m), 2):
        rest = [edges[k] for k in range(m) if k not in (i, j)]
        if components(n, rest) > 1:
            d.union(i, j)
    sizes = {}
    for i in range(m):
        r = d.find(i)
        sizes[r] = sizes.get(r, 0) + 1
    return sorted(s for s in sizes.values() if s >= 2)


def three_edge_connected(n, edges):
    """No bridges and no 2-edge-cuts (over edge copies)."""
    m = len(edges)
    if components(n, edges) != 1:
        return False
    for drop in itertools.chain(
        ((i,) for i in range(m)), itertools.combinations(range(m), 2)
    ):
        rest = [edges[k] for k in range(m) if k not in drop]
        if components(n, rest) > 1:
            return False
    return True


def k13_cores():
    """Twist-collapsed cores: multigraphs on 5 vertices with 10 edges,
    planar base (a proper subgraph of K5), connected, 3-edge-connected."""
    pairs = list(itertools.combinations(range(5), 2))
    for mu_vec in itertools.product(range(6), repeat=10):
        if sum(mu_vec) != 10:
            continue
        if all(mu_vec):
            continue  # full K5 base is not planar
        classes = [(pairs[i], mu) for i, mu in enumerate(mu_vec) if mu]
        edges = []
        for (u, v), mu in classes:
            edges.extend([(u, v)] * mu)
        if not three_edge_connected(5, edges):
            continue
        yield classes


def k13_candidates():
    """Yield (n, classes) multigraphs with the worked example's statistics
    and Jones evaluation.

    Up to the Whitney moves that preserve both the Tutte polynomial and
    every statistic we match (and correspond to flypes of the diagram), the
    graph is a 5-vertex 10-edge core with its 3 series pairs expanded as
    subdivisions. Enumerate cores, distribute 3 subdivisions over the edge
    classes, and keep candidates with |E~| = 11, exactly two doubled
    classes, one base triangle and series classes [2, 2, 2].
    """
    target_w = pshift(pscale(pmirror(SAMPLE_JONES), -1), -5)
    seen = set()
    for core in k13_cores():
        mus = [mu for _, mu in core]
        k = len(core)
        # subdivision counts per class: sum 3, at most mu_i per class, and
        # afterwards the un-subdivided remainders must be exactly {2, 2, 1...}
        for counts in itertools.product(range(4), repeat=k):
            if sum(counts) != 3:
                continue
            remainders = [mu - c for mu, c in zip(mus, counts)]
            if any(c > mu for mu, c in zip(mus, counts)):
                continue
            if any(r > 2 for r in remainders):
                continue
            if sum(1 for r in remainders if r == 2) != 2:
                continue
            base_count = sum(2 * c + (1 if r else 0) for c, r in zip(counts, remainders))
            if base_count != 11:
                continue

            n = 5
            classes = []
            for ((u, v), _), c, r in zip(core, counts, remainders):
                if r:
                    classes.append(((u, v), r))
                for _ in range(c):
                    x = n
                    n += 1
                    classes.append((tuple(sorted((u, x))), 1))
                    classes.append((tuple(sorted((x, v))), 1))
            key = tuple(sorted(classes))
            if key in seen:
                continue
            seen.add(key)

            base = [uv for uv, _ in classes]
            if triangle_count(n, base) != 1:
                continue
            edges = []
            for (u, v), mu in classes:
                edges.extend([(u, v)] * mu)
            if series_pair_classes(n, edges) != [2, 2, 2]:
                continue
            if tutte_jones_eval(n, classes) == target_w:
                yield n, sorted(classes)


def find_k13_pd():
    for n, classes in k13_candidates():
        emb_edges, rot = embed_multigraph(n, classes)
        for t in (0, 1):
            pd = medial_pd(n, emb_edges, rot, [t] * len(emb_edges))
            if pd is None:
                continue
            jones = rust_jones(pd, "both")
            if jones == SAMPLE_JONES:
                print(f"  worked example found: classes {classes}")
                return pd
    raise RuntimeError("no 13-crossing match found; widen the search")


# ---------------------------------------------------------------------------
# Fixture table
# ---------------------------------------------------------------------------

def rational_pd(parts):
    n, classes = rational_classes(parts)
    edges, rot = embed_multigraph(n, classes)
    pd = medial_pd(n, edges, rot, [0] * len(edges))
    assert pd is not None, f"C{parts} closes up to a link"
    return pd


def pretzel_pd(mults, flipped_columns):
    n, classes, columns = pretzel_classes(mults)
    edges, rot = embed_multigraph(n, classes)
    # every class is simple, so edge ids equal class indices
    types = [0] * len(edges)
    for col in flipped_columns:
        for e in columns[col]:
            types[e] = 1
    pd = medial_pd(n, edges, rot, types)
    assert pd is not None, f"pretzel {mults}/{flipped_columns} closes up to a link"
    return pd


def check_rational(name, pd, parts):
    jones = rust_jones(pd, "both")
    lo, hi = min(jones), max(jones)
    span = hi - lo
    assert span == sum(parts), f"{name}: span {span} != crossings {sum(parts)}"
    assert abs(sum(jones.values())) == 1, f"{name}: V(1) != +-1"
    t1 = abs(jones.get(lo + 1, 0)) + abs(jones.get(hi - 1, 0))
    assert t1 == len(parts), f"{name}: T1 {t1} != twist regions {len(parts)}"
    assert rust_verify_ok(pd), f"{name}: identity checks failed"
    return jones


def check_torus(name, pd, p, q, route):
    jones = rust_jones(pd, route)
    expected = torus_jones(p, q)
    assert same_or_mirror(jones, expected), (
        f"{name}: Jones is not V(T({p},{q})): got {sorted(jones.items())}"
    )
    return jones


def build_records():
    records = []

    def add(name, crossings, alternating, prime, torus, pd, volume):
        records.append(
            {
                "name": name,
                "crossings": crossings,
                "alternating": int(alternating),
                "prime": int(prime),
                "torus": int(torus),
                "pd": pd,
                "volume": volume,
            }
        )

    # torus knots T(2,n): one twist region, non-hyperbolic
    for name, n in [("3_1", 3), ("5_1", 5), ("7_1", 7), ("9_1", 9)]:
        pd = rational_pd([n])
        check_torus(name, pd, 2, n, "both")
        assert rust_verify_ok(pd), f"{name}: identity checks failed"
        add(name, n, True, True, True, pd, "0")
        print(f"  {name}: torus T(2,{n}) ok")

    # hyperbolic 2-bridge knots with their published volumes
    rationals = [
        ("4_1", [2, 2], "2.0298832128"),
        ("5_2", [3, 2], "2.8281220883"),
        ("6_1", [4, 2], "3.1639632288"),
        ("6_2", [3, 1, 2], "4.4008325126"),
        ("6_3", [2, 1, 1, 2], "5.6930210951"),
        ("7_2", [5, 2], "3.3317442"),
        ("7_3", [4, 3], "4.5921256"),
        ("7_4", [3, 1, 3], "5.1379412018"),
        ("7_5", [3, 2, 2], "6.443537"),
        ("8_1", [6, 2], "3.4272052"),
        ("8_3", [4, 4], "5.238684"),
        ("9_2", [7, 2], "3.4866601"),
    ]
    for name, parts, vol in rationals:
        pd = rational_pd(parts)
        jones = check_rational(name, pd, parts)
        if name == "4_1":
            assert same_or_mirror(jones, FIGURE_EIGHT_JONES), "4_1 Jones mismatch"
        add(name, sum(parts), True, True, False, pd, vol)
        print(f"  {name}: rational C{parts} ok")

    # non-alternating pretzels: (-2,3,3) = T(3,4), (-2,3,5) = T(3,5),
    # and the hyperbolic (-2,3,7), which shares 5_2's volume
    p233 = pretzel_pd([2, 3, 3], [0])
    check_torus("8_19", p233, 3, 4, "bracket")
    add("8_19", 8, False, True, True, p233, "0")
    print("  8_19: pretzel (-2,3,3) = T(3,4) ok")

    p235 = pretzel_pd([2, 3, 5], [0])
    check_torus("10_124", p235, 3, 5, "bracket")
    add("10_124", 10, False, True, True, p235, "0")
    print("  10_124: pretzel (-2,3,5) = T(3,5) ok")

    p237 = pretzel_pd([2, 3, 7], [0])
    j237 = rust_jones(p237, "bracket")
    assert abs(sum(j237.values())) == 1
    add("12n242", 12, False, True, False, p237, "2.8281220883")
    print("  12n242: pretzel (-2,3,7) ok")

    # the worked example
    print("searching for the 13-crossing worked example...")
    k13 = find_k13_pd()
    assert rust_verify_ok(k13)
    add("13a_sample", 13, True, True, False, k13, "21.1052106828")
    (DATA / "k13_sample.pd").write_text(
        "# 13-crossing alternating knot whose Jones polynomial matches the\n"
        "# worked example: t^-12 - 4t^-11 + 11t^-10 - ... + 4 - t\n" + k13 + "\n"
    )
    return records


def main():
    if not BINARY.exists():
        sys.exit("build the knotpoly binary first: cargo build -p knotpoly")
    DATA.mkdir(parents=True, exist_ok=True)
    records = build_records()
    out = DATA / "census.csv"
    with out.open("w", newline="") as fh:
        w = csv.DictWriter(
            fh,
            fieldnames=["name", "crossings", "alternating", "prime", "torus", "pd", "volume"],
        )
        w.writeheader()
        for r in records:
            w.writerow(r)
    print(f"{len(records)} records -> {out}")


if __name__ == "__main__":
    main()
