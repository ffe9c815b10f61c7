#!/usr/bin/env python3
"""Regenerate data/exceptional/*.json from Bala-Carter labels.

Each label names a Levi subsystem L together with a distinguished orbit of L.
The characteristic h of that orbit is built inside the Cartan subalgebra of L
(2*rho-check of L for regular orbits, the classical partition recipe for
D_k(a_i) and C_k(a_1), or a distinguished diagram of E6/E7/F4/G2 itself),
conjugated into the dominant chamber of G, and read off as the weighted
Dynkin diagram.  Primed pairs (two non-conjugate Levis of the same type) are
resolved by enumerating every node subset of that type: the even diagram gets
the double prime.

Distinguished orbits of G are found by search over even diagrams whose
adjoint restriction is a genuine sl2-character with dim g_0 = dim g_2; the
search must return exactly as many as Bala-Carter predicts.

The optional "index" field is the Dynkin index computed from the label alone
(sum over the simple components of L), never from the diagram, so the C++
side can use it as an independent cross-check.

Usage: derive_exceptional_tables.py OUTDIR
"""

import itertools
import json
import sys
from fractions import Fraction

# --------------------------------------------------------------------------
# Root data (Bourbaki numbering, C[i][j] = <alpha_i, alpha_j^vee>)


def fix_cartan(series, rank):
    C = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        C[i][i] = 2

    def link(i, j, a=-1, b=-1):
        # a = <alpha_i, alpha_j^vee>, b = <alpha_j, alpha_i^vee>
        C[i][j] = a
        C[j][i] = b

    if series == "A":
        for i in range(rank - 1):
            link(i, i + 1)
    elif series == "B":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -2, -1)
    elif series == "C":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 2, rank - 1, -1, -2)
    elif series == "D":
        for i in range(rank - 2):
            link(i, i + 1)
        link(rank - 3, rank - 1)
    elif series == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, rank - 1):
            link(i, i + 1)
    elif series == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif series == "G":
        link(0, 1, -1, -3)
    return C


def positive_roots(C):
    r = len(C)
    simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
    roots = list(simple)
    seen = set(roots)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(beta[j] * C[j][i] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in seen:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in seen:
                        seen.add(up)
                        roots.append(up)
                        nxt.append(up)
        frontier = nxt
    return roots


def solve(M, b):
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [A[i][n] / A[i][i] for i in range(n)]


def diagram_from_levi(C, subset, levi_diagram):
    """h lives in span of coroots of `subset`; alpha_j(h) = levi_diagram on subset."""
    sub = list(subset)
    CS = [[C[j][i] for i in sub] for j in sub]
    coeff = solve(CS, levi_diagram)
    r = len(C)
    v = [sum(coeff[k] * C[j][sub[k]] for k in range(len(sub))) for j in range(r)]
    while True:
        neg = [k for k in range(r) if v[k] < 0]
        if not neg:
            break
        k = neg[0]
        vk = v[k]
        v = [v[j] - vk * C[j][k] for j in range(r)]
    assert all(x.denominator == 1 for x in v)
    return tuple(int(x) for x in v)


def adjoint_weights(C, roots, diag):
    r = len(C)
    counts = {0: r}
    for beta in roots:
        w = sum(b * d for b, d in zip(beta, diag))
        counts[w] = counts.get(w, 0) + 1
        counts[-w] = counts.get(-w, 0) + 1
    return counts


def is_sl2_character(counts):
    top = max(counts)
    for m in range(0, top + 1):
        if counts.get(m, 0) < counts.get(m + 2, 0):
            return False
    return True


def orbit_dim(C, roots, diag):
    counts = adjoint_weights(C, roots, diag)
    return sum(counts.values()) - counts.get(0, 0) - counts.get(1, 0)


def dynkin_index(C, roots, diag, long_sq_ratio):
    """sum over roots of alpha(h)^2 (alpha,alpha)/(long,long) ... via normalized form."""
    # (h,h) with long roots of squared length 2: h = sum c_i alpha_i^vee.
    r = len(C)
    # symmetric form: (alpha_i, alpha_j) = C[i][j] * len_j / 2
    lens = long_sq_ratio
    coeff = solve([[C[j][i] for i in range(r)] for j in range(r)], list(diag))
    # alpha_i^vee = 2 alpha_i / len_i ; (alpha_i^vee, alpha_j^vee) = 4 (alpha_i,alpha_j)/(len_i len_j)
    hh = Fraction(0)
    for i in range(r):
        for j in range(r):
            form = Fraction(C[i][j] * lens[j], 2)
            hh += coeff[i] * coeff[j] * 4 * form / (lens[i] * lens[j])
    return hh / 2


def root_lengths(series, rank):
    if series in "ADE":
        return [2] * rank
    if series == "B":
        return [2] * (rank - 1) + [1]
    if series == "C":
        return [1] * (rank - 1) + [2]
    if series == "F":
        return [2, 2, 1, 1]
    if series == "G":
        return [Fraction(2, 3), 2]


# --------------------------------------------------------------------------
# Subdiagram typing


def component_type(C, nodes, lens):
    """Return (series, rank, ordering) giving a Bourbaki numbering of the component."""
    nodes = list(nodes)
    k = len(nodes)
    adj = {a: [b for b in nodes if b != a and C[a][b] != 0] for a in nodes}
    if k == 1:
        return ("A", 1, nodes)
    degs = {a: len(adj[a]) for a in nodes}
    lset = set(lens[a] for a in nodes)
    if max(degs.values()) == 3:
        centre = next(a for a in nodes if degs[a] == 3)
        arms = []
        for start in adj[centre]:
            arm = [start]
            prev = centre
            while True:
                nxt = [b for b in adj[arm[-1]] if b != prev]
                if not nxt:
                    break
                prev = arm[-1]
                arm.append(nxt[0])
            arms.append(arm)
        arms.sort(key=len)
        lengths = [len(a) for a in arms]
        if lengths[0] == 1 and lengths[1] == 1:
            # D_k: long arm then centre then the two leaves
            order = list(reversed(arms[2])) + [centre, arms[0][0], arms[1][0]]
            return ("D", k, order)
        # E_k: arms of length 1, 2, k-4
        short, mid, long_ = arms
        order = [mid[1], short[0], mid[0], centre] + long_
        return ("E", k, order)
    ends = [a for a in nodes if degs[a] <= 1]
    start = ends[0]
    chain = [start]
    prev = None
    while len(chain) < k:
        nxt = [b for b in adj[chain[-1]] if b != prev]
        prev = chain[-1]
        chain.append(nxt[0])
    if len(lset) == 1:
        return ("A", k, chain)
    if k == 2 and any(abs(C[a][b]) == 3 for a in nodes for b in nodes if a != b):
        order = sorted(nodes, key=lambda a: lens[a])
        return ("G", 2, order)
    if k == 4:
        if lens[chain[0]] < lens[chain[-1]]:
            chain.reverse()
        return ("F", 4, chain)
    # B or C: orient so the odd-length node is last
    longs = [a for a in chain if lens[a] == max(lset)]
    shorts = [a for a in chain if lens[a] == min(lset)]
    if len(shorts) == 1:
        if chain[-1] != shorts[0]:
            chain.reverse()
        return ("B", k, chain)
    if len(longs) == 1:
        if chain[-1] != longs[0]:
            chain.reverse()
        return ("C", k, chain)
    raise ValueError("unrecognised component")


def components(C, subset):
    left = set(subset)
    comps = []
    while left:
        a = min(left)
        comp = {a}
        stack = [a]
        while stack:
            x = stack.pop()
            for y in list(left):
                if y not in comp and C[x][y] != 0:
                    comp.add(y)
                    stack.append(y)
        left -= comp
        comps.append(sorted(comp))
    return comps


# --------------------------------------------------------------------------
# Classical partition recipe for distinguished orbits of D_k and C_k


def classical_diagram(series, rank, parts):
    eig = []
    for d in parts:
        eig += [d - 1 - 2 * j for j in range(d)]
    eig.sort(reverse=True)
    D = eig[:rank]
    w = [D[i] - D[i + 1] for i in range(rank - 1)]
    if series == "B":
        w.append(D[-1])
    elif series == "C":
        w.append(2 * D[-1])
    elif series == "D":
        w = [D[i] - D[i + 1] for i in range(rank - 1)] + [D[-2] + D[-1]]
    return w


DISTINGUISHED_CLASSICAL = {
    ("D", 4, "a1"): [5, 3],
    ("D", 5, "a1"): [7, 3],
    ("D", 6, "a1"): [9, 3],
    ("D", 6, "a2"): [7, 5],
    ("C", 3, "a1"): [4, 2],
}


def principal_index(series, rank):
    roots_C = fix_cartan(series, rank)
    roots = positive_roots(roots_C)
    return dynkin_index(roots_C, roots, [2] * rank, root_lengths(series, rank))


def component_index(series, rank, tag, G_lens, comp_nodes):
    """Index of a distinguished orbit of a Levi component, times the embedding
    index of the component (ratio of long-root lengths)."""
    Cc = fix_cartan(series, rank)
    rts = positive_roots(Cc)
    if tag is None:
        w = [2] * rank
    elif (series, rank, tag) in DISTINGUISHED_CLASSICAL:
        w = classical_diagram(series, rank, DISTINGUISHED_CLASSICAL[(series, rank, tag)])
    else:
        w = DISTINGUISHED_EXC[(series, rank)][tag]
    ind = dynkin_index(Cc, rts, w, root_lengths(series, rank))
    comp_long = Fraction(max(G_lens[a] for a in comp_nodes))
    g_long = Fraction(max(G_lens))
    return ind * g_long / comp_long


# --------------------------------------------------------------------------
# Labels


def parse_label(label):
    """'D4(a1)+A1' -> [('D',4,'a1'), ('A',1,None)];  '2A2' -> two A2's;
    tilde component written as 'A1~' (short roots)."""
    label = label.replace("'", "")
    if label.startswith("("):
        label = label[1:-1]
    out = []
    for term in label.split("+"):
        mult = 1
        if term[0].isdigit():
            mult = int(term[0])
            term = term[1:]
        tag = None
        if "(" in term:
            term, tag = term[:-1].split("(")
        short = term.endswith("~")
        term = term.rstrip("~")
        out += [(term[0], int(term[1:]), tag, short)] * mult
    return out


E6_LABELS = ["A1", "2A1", "3A1", "A2", "A2+A1", "2A2", "A2+2A1", "A3", "2A2+A1",
             "A3+A1", "D4(a1)", "A4", "D4", "A4+A1", "A5", "D5(a1)", "E6(a3)",
             "D5", "E6(a1)", "E6"]

E7_LABELS = ["A1", "2A1", "(3A1)''", "(3A1)'", "A2", "4A1", "A2+A1", "A2+2A1",
             "A3", "2A2", "A2+3A1", "(A3+A1)''", "2A2+A1", "(A3+A1)'", "D4(a1)",
             "A3+2A1", "D4", "D4(a1)+A1", "A3+A2", "A4", "A3+A2+A1", "(A5)''",
             "D4+A1", "A4+A1", "D5(a1)", "A4+A2", "(A5)'", "A5+A1",
             "D5(a1)+A1", "D6(a2)", "E6(a3)", "D5", "E7(a5)", "A6", "D5+A1",
             "D6(a1)", "E7(a4)", "D6", "E6(a1)", "E6", "E7(a3)", "E7(a2)",
             "E7(a1)", "E7"]

F4_LABELS = ["A1", "A1~", "A1+A1~", "A2", "A2~", "A2+A1~", "B2", "A2~+A1",
             "C3(a1)", "F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4"]

G2_LABELS = ["A1", "A1~", "G2(a1)", "G2"]

DISTINGUISHED_EXC = {}

# Distinguished orbits of G ordered by decreasing orbit dimension.
DISTINGUISHED_TAGS = {
    ("G", 2): [None, "a1"],
    ("F", 4): [None, "a1", "a2", "a3"],
    ("E", 6): [None, "a1", "a3"],
    ("E", 7): [None, "a1", "a2", "a3", "a4", "a5"],
}


def find_distinguished(series, rank):
    C = fix_cartan(series, rank)
    roots = positive_roots(C)
    found = []
    for bits in itertools.product([0, 2], repeat=rank):
        if not any(bits):
            continue
        counts = adjoint_weights(C, roots, bits)
        if not is_sl2_character(counts):
            continue
        if counts.get(0, 0) != counts.get(2, 0):
            continue
        found.append((orbit_dim(C, roots, bits), bits))
    found.sort(reverse=True)
    return found


def label_matches_subset(C, lens, subset, spec):
    comps = components(C, subset)
    if len(comps) != len(spec):
        return None
    typed = [component_type(C, comp, lens) for comp in comps]
    g_long = max(lens)
    want = sorted((s, k, short) for s, k, _, short in spec)
    have = []
    for (s, k, order), comp in zip(typed, comps):
        short = s == "A" and all(lens[a] < g_long for a in comp)
        have.append((s, k, short))
    if sorted(have) != want:
        return None
    return list(zip(typed, comps))


def build_table(series, rank, labels):
    C = fix_cartan(series, rank)
    lens = root_lengths(series, rank)
    roots = positive_roots(C)
    dist = find_distinguished(series, rank)
    names = DISTINGUISHED_TAGS[(series, rank)]
    assert len(names) == len(dist)
    DISTINGUISHED_EXC[(series, rank)] = {}
    for name, (_, bits) in zip(names, dist):
        DISTINGUISHED_EXC[(series, rank)][name] = list(bits)
    out = []
    for label in labels:
        spec = parse_label(label)
        total_rank = sum(k for _, k, _, _ in spec)
        diagrams = {}
        index_from_label = None
        for subset in itertools.combinations(range(rank), total_rank):
            m = label_matches_subset(C, lens, subset, spec)
            if m is None:
                continue
            # assign tags to components: tagged components are matched by type
            pending = list(spec)
            levi_w = {}
            idx = Fraction(0)
            for (s, k, order), comp in m:
                short = s == "A" and all(lens[a] < max(lens) for a in comp)
                choice = next(p for p in pending if p[0] == s and p[1] == k and p[3] == short)
                pending.remove(choice)
                tag = choice[2]
                if tag is None:
                    w = [2] * k
                elif (s, k, tag) in DISTINGUISHED_CLASSICAL:
                    w = classical_diagram(s, k, DISTINGUISHED_CLASSICAL[(s, k, tag)])
                else:
                    w = DISTINGUISHED_EXC[(s, k)][tag]
                for node, val in zip(order, w):
                    levi_w[node] = val
                idx += component_index(s, k, tag, lens, comp)
            sub = sorted(levi_w)
            d = diagram_from_levi(C, sub, [levi_w[a] for a in sub])
            diagrams[d] = idx
        if not diagrams:
            raise RuntimeError("no Levi for %s" % label)
        ds = sorted(diagrams)
        if len(ds) == 1:
            pick = ds[0]
        else:
            assert len(ds) == 2, (label, ds)
            even = [d for d in ds if all(x % 2 == 0 for x in d)]
            assert len(even) == 1, (label, ds)
            pick = even[0] if label.endswith("''") else [d for d in ds if d != even[0]][0]
        idx = diagrams[pick]
        assert idx.denominator == 1
        out.append({"label": label, "diagram": list(pick), "index": int(idx)})
    # sanity
    diags = [tuple(e["diagram"]) for e in out]
    assert len(set(diags)) == len(diags), "duplicate diagrams"
    for e in out:
        counts = adjoint_weights(C, roots, e["diagram"])
        assert is_sl2_character(counts), e
        root_idx = dynkin_index(C, roots, e["diagram"], lens)
        assert root_idx == e["index"], (e, root_idx)
        e["_dim"] = orbit_dim(C, roots, e["diagram"])
    return out


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "."
    # distinguished orbits of the smaller exceptional groups are needed as
    # Levi components of the larger ones
    for series, rank, labels, expect in [("G", 2, G2_LABELS, 2), ("F", 4, F4_LABELS, 4),
                                         ("E", 6, E6_LABELS, 3), ("E", 7, E7_LABELS, 6)]:
        dist = find_distinguished(series, rank)
        if len(dist) != expect:
            raise RuntimeError("%s%d: %d distinguished candidates" % (series, rank, len(dist)))
        table = build_table(series, rank, labels)
        name = "%s%d" % (series, rank)
        for e in table:
            print(name, e["label"], e["diagram"], e["index"], e["_dim"], file=sys.stderr)
            del e["_dim"]
        rows = ",\n".join("    " + json.dumps(e) for e in table)
        with open("%s/%s.json" % (outdir, name), "w") as f:
            f.write('{\n  "group": "%s",\n  "classes": [\n%s\n  ]\n}\n' % (name, rows))


if __name__ == "__main__":
    main()
