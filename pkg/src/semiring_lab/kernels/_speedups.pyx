# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirrors of the pure-Python kernels.

Semantics, including output order, must match `_pure.py` exactly; the
cross-backend tests enforce it.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef inline int _find(int *parent, int x) noexcept:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def closure_labels(n, ops, pairs):
    """See `_pure.closure_labels`."""
    cdef int cn = <int> n
    cdef list ops_list = [list(op) for op in ops]
    cdef list pair_list = list(pairs)
    cdef int nops = <int> len(ops_list)
    cdef Py_ssize_t npairs = len(pair_list)
    cdef long cap = npairs + (<long> nops) * cn + 4
    cdef int *op_data = <int *> malloc(sizeof(int) * (nops * cn if nops else 1))
    cdef int *parent = <int *> malloc(sizeof(int) * cn)
    cdef long *stack = <long *> malloc(sizeof(long) * 2 * cap)
    if op_data == NULL or parent == NULL or stack == NULL:
        free(op_data); free(parent); free(stack)
        raise MemoryError()
    cdef int i, k, a, b, ra, rb
    cdef long top = 0
    try:
        for k in range(nops):
            row = ops_list[k]
            for i in range(cn):
                op_data[k * cn + i] = row[i]
        for i in range(cn):
            parent[i] = i
        for pa, pb in pair_list:
            stack[2 * top] = pa
            stack[2 * top + 1] = pb
            top += 1
        while top > 0:
            top -= 1
            a = <int> stack[2 * top]
            b = <int> stack[2 * top + 1]
            ra = _find(parent, a)
            rb = _find(parent, b)
            if ra == rb:
                continue
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra
            for k in range(nops):
                if op_data[k * cn + a] != op_data[k * cn + b]:
                    stack[2 * top] = op_data[k * cn + a]
                    stack[2 * top + 1] = op_data[k * cn + b]
                    top += 1
        seen = {}
        labels = [0] * cn
        for i in range(cn):
            ra = _find(parent, i)
            if ra not in seen:
                seen[ra] = len(seen)
            labels[i] = seen[ra]
        return tuple(labels)
    finally:
        free(op_data)
        free(parent)
        free(stack)


ctypedef struct SearchState:
    int n_src
    int n_dst
    int nbin
    int nun
    int *h
    char *used
    int *trail
    int trail_len
    long *queue
    int *sbin
    int *dbin
    int *sun
    int *dun
    char *allowed
    bint has_allowed
    bint injective


cdef bint _assign(SearchState *st, int i0, int v0) noexcept:
    cdef long qtop = 0
    cdef int i, v, j, w, k, cur
    cdef int n_src = st.n_src
    cdef int n_dst = st.n_dst
    st.queue[0] = i0
    st.queue[1] = v0
    qtop = 1
    while qtop > 0:
        qtop -= 1
        i = <int> st.queue[2 * qtop]
        v = <int> st.queue[2 * qtop + 1]
        cur = st.h[i]
        if cur >= 0:
            if cur != v:
                return False
            continue
        if st.has_allowed and st.allowed[i * n_dst + v] == 0:
            return False
        if st.injective and st.used[v]:
            return False
        st.h[i] = v
        if st.injective:
            st.used[v] = 1
        st.trail[st.trail_len] = i
        st.trail_len += 1
        for k in range(st.nun):
            st.queue[2 * qtop] = st.sun[k * n_src + i]
            st.queue[2 * qtop + 1] = st.dun[k * n_dst + v]
            qtop += 1
        for k in range(st.nbin):
            for j in range(n_src):
                w = st.h[j]
                if w >= 0:
                    st.queue[2 * qtop] = st.sbin[k * n_src * n_src + i * n_src + j]
                    st.queue[2 * qtop + 1] = st.dbin[k * n_dst * n_dst + v * n_dst + w]
                    qtop += 1
                    st.queue[2 * qtop] = st.sbin[k * n_src * n_src + j * n_src + i]
                    st.queue[2 * qtop + 1] = st.dbin[k * n_dst * n_dst + w * n_dst + v]
                    qtop += 1
    return True


cdef void _undo(SearchState *st, int mark) noexcept:
    cdef int i
    while st.trail_len > mark:
        st.trail_len -= 1
        i = st.trail[st.trail_len]
        if st.injective:
            st.used[st.h[i]] = 0
        st.h[i] = -1


cdef bint _dfs(SearchState *st, list out, int limit):
    cdef int i = 0
    cdef int v, mark
    while i < st.n_src and st.h[i] >= 0:
        i += 1
    if i == st.n_src:
        out.append(tuple([st.h[j] for j in range(st.n_src)]))
        return limit == 0 or len(out) < limit
    for v in range(st.n_dst):
        mark = st.trail_len
        if _assign(st, i, v):
            if not _dfs(st, out, limit):
                _undo(st, mark)
                return False
        _undo(st, mark)
    return True


def search_maps(n_src, n_dst, src_bin, dst_bin, src_un, dst_un,
                fixed, allowed, injective, limit):
    """See `_pure.search_maps`."""
    cdef SearchState st
    cdef int cn = <int> n_src
    cdef int cm = <int> n_dst
    cdef list sbl = [list(t) for t in src_bin]
    cdef list dbl = [list(t) for t in dst_bin]
    cdef list sul = [list(t) for t in src_un]
    cdef list dul = [list(t) for t in dst_un]
    cdef int nbin = <int> len(sbl)
    cdef int nun = <int> len(sul)
    st.n_src = cn
    st.n_dst = cm
    st.nbin = nbin
    st.nun = nun
    st.has_allowed = allowed is not None
    st.injective = bool(injective)
    cdef long qcap = 2 * (1 + (<long> cn) * (nun + 2 * (<long> nbin) * cn) + 4)
    st.h = <int *> malloc(sizeof(int) * cn)
    st.used = <char *> malloc(sizeof(char) * (cm if cm else 1))
    st.trail = <int *> malloc(sizeof(int) * cn)
    st.queue = <long *> malloc(sizeof(long) * 2 * qcap)
    st.sbin = <int *> malloc(sizeof(int) * (nbin * cn * cn if nbin else 1))
    st.dbin = <int *> malloc(sizeof(int) * (nbin * cm * cm if nbin else 1))
    st.sun = <int *> malloc(sizeof(int) * (nun * cn if nun else 1))
    st.dun = <int *> malloc(sizeof(int) * (nun * cm if nun else 1))
    st.allowed = <char *> malloc(sizeof(char) * (cn * cm if cn * cm else 1))
    if (st.h == NULL or st.used == NULL or st.trail == NULL or st.queue == NULL
            or st.sbin == NULL or st.dbin == NULL or st.sun == NULL
            or st.dun == NULL or st.allowed == NULL):
        free(st.h); free(st.used); free(st.trail); free(st.queue)
        free(st.sbin); free(st.dbin); free(st.sun); free(st.dun); free(st.allowed)
        raise MemoryError()
    cdef int i, j, k
    cdef int climit = <int> limit
    cdef list out = []
    try:
        for i in range(cn):
            st.h[i] = -1
            st.trail[i] = 0
        for i in range(cm):
            st.used[i] = 0
        st.trail_len = 0
        for k in range(nbin):
            row = sbl[k]
            for i in range(cn * cn):
                st.sbin[k * cn * cn + i] = row[i]
            row = dbl[k]
            for i in range(cm * cm):
                st.dbin[k * cm * cm + i] = row[i]
        for k in range(nun):
            row = sul[k]
            for i in range(cn):
                st.sun[k * cn + i] = row[i]
            row = dul[k]
            for i in range(cm):
                st.dun[k * cm + i] = row[i]
        if st.has_allowed:
            for i in range(cn):
                row = allowed[i]
                for j in range(cm):
                    st.allowed[i * cm + j] = 1 if row[j] else 0
        ok = True
        for a, b in fixed:
            if not _assign(&st, <int> a, <int> b):
                ok = False
                break
        if ok:
            _dfs(&st, out, climit)
        return out
    finally:
        free(st.h); free(st.used); free(st.trail); free(st.queue)
        free(st.sbin); free(st.dbin); free(st.sun); free(st.dun); free(st.allowed)


cdef bint _assoc_ok(int *t, int m) noexcept:
    cdef int a, b, c, ab, bc, x, y
    for a in range(1, m):
        for b in range(1, m):
            ab = t[a * m + b]
            if ab < 0:
                continue
            for c in range(a, m):
                bc = t[b * m + c]
                if bc < 0:
                    continue
                x = t[ab * m + c]
                y = t[a * m + bc]
                if x >= 0 and y >= 0 and x != y:
                    return False
    return True


cdef bint _rec_monoid(int k, int ncells, int *ci, int *cj, int *t, int m,
                      list out, int limit):
    cdef int i, j, v
    if k == ncells:
        out.append(tuple([t[x] for x in range(m * m)]))
        return limit == 0 or len(out) < limit
    i = ci[k]
    j = cj[k]
    for v in range(m):
        t[i * m + j] = v
        t[j * m + i] = v
        if _assoc_ok(t, m):
            if not _rec_monoid(k + 1, ncells, ci, cj, t, m, out, limit):
                t[i * m + j] = -1
                t[j * m + i] = -1
                return False
        t[i * m + j] = -1
        t[j * m + i] = -1
    return True


def comm_monoid_tables(m, limit=0):
    """See `_pure.comm_monoid_tables`."""
    if m == 1:
        return [(0,)]
    cdef int cm = <int> m
    cdef int ncells = (cm - 1) * cm // 2
    cdef int *t = <int *> malloc(sizeof(int) * cm * cm)
    cdef int *ci = <int *> malloc(sizeof(int) * ncells)
    cdef int *cj = <int *> malloc(sizeof(int) * ncells)
    if t == NULL or ci == NULL or cj == NULL:
        free(t); free(ci); free(cj)
        raise MemoryError()
    cdef int i, j, k
    cdef list out = []
    try:
        for i in range(cm * cm):
            t[i] = -1
        for j in range(cm):
            t[j] = j
            t[j * cm] = j
        k = 0
        for i in range(1, cm):
            for j in range(i, cm):
                ci[k] = i
                cj[k] = j
                k += 1
        _rec_monoid(0, ncells, ci, cj, t, cm, out, <int> limit)
        return out
    finally:
        free(t)
        free(ci)
        free(cj)
