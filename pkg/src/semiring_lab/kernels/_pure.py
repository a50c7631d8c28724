"""Pure-Python search kernels.

These are the reference implementations of the three hot loops of the
package: congruence closure, structure-preserving-map search, and the
commutative-monoid table census.  `_speedups.pyx` mirrors them in Cython;
the two backends must stay behaviourally identical, including output
order, so either can back the whole test suite.
"""

BACKEND = "pure"


def closure_labels(n, ops, pairs):
    """Smallest partition of range(n) identifying `pairs`, closed under `ops`.

    `ops` is a sequence of unary operation tables (length-n index rows);
    binary operations are handled by the caller passing all their
    translations.  Returns a label tuple in which blocks are numbered in
    order of their least element.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    stack = list(pairs)
    while stack:
        a, b = stack.pop()
        ra = find(a)
        rb = find(b)
        if ra == rb:
            continue
        if ra > rb:
            ra, rb = rb, ra
        parent[rb] = ra
        for op in ops:
            if op[a] != op[b]:
                stack.append((op[a], op[b]))

    labels = [0] * n
    seen = {}
    for i in range(n):
        r = find(i)
        if r not in seen:
            seen[r] = len(seen)
        labels[i] = seen[r]
    return tuple(labels)


def search_maps(n_src, n_dst, src_bin, dst_bin, src_un, dst_un,
                fixed, allowed, injective, limit):
    """Backtracking enumeration of operation-preserving maps src -> dst.

    Binary tables are flat row-major lists; a solution h satisfies
    h[t[i*n+j]] == u[h[i]*m+h[j]] for every paired (t, u) and
    h[p[i]] == q[h[i]] for every unary pair.  `fixed` pins images,
    `allowed[i][v]` (optional 0/1 rows) restricts them, `injective`
    forbids repeats, and `limit` caps the solution count (0 = all).
    Branching is over the least unassigned index with images tried in
    ascending order, so solutions are emitted in lexicographic order.
    """
    h = [-1] * n_src
    used = [False] * n_dst
    trail = []
    out = []
    nbin = len(src_bin)
    nun = len(src_un)

    def assign(i0, v0):
        queue = [(i0, v0)]
        while queue:
            i, v = queue.pop()
            cur = h[i]
            if cur >= 0:
                if cur != v:
                    return False
                continue
            if allowed is not None and not allowed[i][v]:
                return False
            if injective and used[v]:
                return False
            h[i] = v
            if injective:
                used[v] = True
            trail.append(i)
            for k in range(nun):
                queue.append((src_un[k][i], dst_un[k][v]))
            for k in range(nbin):
                sb = src_bin[k]
                db = dst_bin[k]
                for j in range(n_src):
                    w = h[j]
                    if w >= 0:
                        queue.append((sb[i * n_src + j], db[v * n_dst + w]))
                        queue.append((sb[j * n_src + i], db[w * n_dst + v]))
        return True

    def undo(mark):
        while len(trail) > mark:
            i = trail.pop()
            if injective:
                used[h[i]] = False
            h[i] = -1

    for i, v in fixed:
        if not assign(i, v):
            return out

    def dfs():
        i = 0
        while i < n_src and h[i] >= 0:
            i += 1
        if i == n_src:
            out.append(tuple(h))
            return limit == 0 or len(out) < limit
        for v in range(n_dst):
            mark = len(trail)
            if assign(i, v):
                if not dfs():
                    undo(mark)
                    return False
            undo(mark)
        return True

    dfs()
    return out


def comm_monoid_tables(m, limit=0):
    """All commutative monoid tables on range(m) with identity 0.

    Tables come out as flat row-major tuples in lexicographic order.
    Associativity is pruned incrementally while the upper triangle is
    filled cell by cell.
    """
    if m == 1:
        return [(0,)]
    t = [[-1] * m for _ in range(m)]
    for j in range(m):
        t[0][j] = j
        t[j][0] = j
    cells = [(i, j) for i in range(1, m) for j in range(i, m)]
    out = []

    def assoc_ok():
        # commutativity lets us assume a <= c in (a+b)+c == a+(b+c)
        for a in range(1, m):
            row_a = t[a]
            for b in range(1, m):
                ab = row_a[b]
                row_b = t[b]
                for c in range(a, m):
                    bc = row_b[c]
                    if ab >= 0 and bc >= 0:
                        x = t[ab][c]
                        y = row_a[bc]
                        if x >= 0 and y >= 0 and x != y:
                            return False
        return True

    def rec(k):
        if k == len(cells):
            out.append(tuple(v for row in t for v in row))
            return limit == 0 or len(out) < limit
        i, j = cells[k]
        for v in range(m):
            t[i][j] = v
            t[j][i] = v
            if assoc_ok():
                if not rec(k + 1):
                    t[i][j] = -1
                    t[j][i] = -1
                    return False
            t[i][j] = -1
            t[j][i] = -1
        return True

    rec(0)
    return out
