"""Quivers, path algebras, (deformed/derived) preprojective algebras,
Drinfeld derived quotients, and Kleinian block decompositions.

Paths compose left to right: e_v a = a for an arrow a starting at v, and
p*q means "p then q".  The preprojective relation at a vertex i is
sum over arrows of e_i [a, a*] e_i = lambda_i e_i with [a, a*] = a a* - a* a,
i.e. arrows starting at i contribute +a a* and arrows ending at i
contribute -a* a.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    InputError,
    NotIdempotent,
    NotQuasiDominant,
    WindowExceedsBound,
)
from .fields import QQ, QQI, GaussianRational
from .linalg import matrix_from_columns


class Quiver:
    """Finite quiver; arrows are (name, tail, head) with vertex indices."""

    __slots__ = ("vertices", "arrows", "extending")

    def __init__(self, vertices, arrows, extending=None):
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        n = len(self.vertices)
        for name, tail, head in self.arrows:
            if not (0 <= tail < n and 0 <= head < n):
                raise InputError(f"arrow {name} out of range")
        self.extending = extending

    @property
    def n(self):
        return len(self.vertices)

    def arrow_names(self):
        return [a[0] for a in self.arrows]

    def double(self):
        """Add a reversed arrow a* for every arrow a."""
        arrows = list(self.arrows)
        for name, tail, head in self.arrows:
            arrows.append((name + "*", head, tail))
        return Quiver(self.vertices, arrows, self.extending)

    def underlying_edges(self):
        return [(min(t, h), max(t, h)) for _, t, h in self.arrows]

    def to_json(self):
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"name": n, "from": self.vertices[t], "to": self.vertices[h]}
                for n, t, h in self.arrows
            ],
            "extending": self.extending,
        }

    @classmethod
    def from_json(cls, doc):
        vertices = tuple(doc["vertices"])
        arrows = []
        for a in doc["arrows"]:
            arrows.append(
                (a["name"], vertices.index(a["from"]), vertices.index(a["to"]))
            )
        return cls(vertices, arrows, doc.get("extending"))


# -- paths ----------------------------------------------------------------------

# a path is (start_vertex, tuple_of_arrow_indices)


def path_source(q, p):
    return p[0]


def path_target(q, p):
    start, arrows = p
    return q.arrows[arrows[-1]][2] if arrows else start


def path_basis(q, max_len):
    """Paths of length <= max_len, ordered by (length, arrow indices)."""
    out = [(v, ()) for v in range(q.n)]
    frontier = out[:]
    for _ in range(max_len):
        new = []
        for p in frontier:
            tgt = path_target(q, p)
            for i, (_, tail, _) in enumerate(q.arrows):
                if tail == tgt:
                    new.append((p[0], p[1] + (i,)))
        out.extend(new)
        frontier = new
    return out


def path_multiply(q, p1, p2):
    """Concatenation p1 then p2, or None when endpoints mismatch."""
    if path_target(q, p1) != path_source(q, p2):
        return None
    return (p1[0], p1[1] + p2[1])


def path_name(q, p):
    start, arrows = p
    if not arrows:
        return f"e_{q.vertices[start]}"
    return "".join(q.arrows[i][0] for i in arrows)


class PathElement:
    """Finite k-linear combination of paths."""

    __slots__ = ("quiver", "field", "terms")

    def __init__(self, quiver, field, terms):
        self.quiver = quiver
        self.field = field
        self.terms = {p: c for p, c in terms.items() if c}

    def __add__(self, other):
        terms = dict(self.terms)
        for p, c in other.terms.items():
            s = terms.get(p, self.field.zero()) + c
            if s:
                terms[p] = s
            else:
                terms.pop(p, None)
        return PathElement(self.quiver, self.field, terms)

    def __neg__(self):
        return PathElement(
            self.quiver, self.field, {p: -c for p, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                p = path_multiply(self.quiver, p1, p2)
                if p is None:
                    continue
                s = terms.get(p, self.field.zero()) + c1 * c2
                if s:
                    terms[p] = s
                else:
                    terms.pop(p, None)
        return PathElement(self.quiver, self.field, terms)

    def max_length(self):
        return max((len(p[1]) for p in self.terms), default=0)

    def __repr__(self):
        bits = [
            f"({c})*{path_name(self.quiver, p)}"
            for p, c in sorted(self.terms.items())
        ]
        return " + ".join(bits) or "0"


def idempotent_element(q, field, v):
    return PathElement(q, field, {(v, ()): field.one()})


def arrow_element(q, field, arrow_index):
    tail = q.arrows[arrow_index][1]
    return PathElement(q, field, {(tail, (arrow_index,)): field.one()})


# -- truncated dimensions ---------------------------------------------------------


def _span_of_products(q, relations, paths, index, max_len, field):
    """Echelonised span of all p * r * q with top length <= max_len."""
    from .linalg import SpanBuilder

    span = SpanBuilder(field, len(paths))
    for rel in relations:
        top = rel.max_length()
        starts = {path_source(q, pp) for pp in rel.terms}
        ends = {path_target(q, pp) for pp in rel.terms}
        for p in paths:
            if path_target(q, p) not in starts:
                continue
            for p2 in paths:
                if path_source(q, p2) not in ends:
                    continue
                if len(p[1]) + top + len(p2[1]) > max_len:
                    continue
                prod = (
                    PathElement(q, field, {p: field.one()})
                    * rel
                    * PathElement(q, field, {p2: field.one()})
                )
                if not prod.terms:
                    continue
                vec = [field.zero()] * len(paths)
                for pp, c in prod.terms.items():
                    vec[index[pp]] = vec[index[pp]] + c
                span.add(vec)
    return span


def truncated_algebra_dim(q, relations, max_len, field=QQ):
    """Dims of (paths of length <= l) / span{p r q} for l = 0..max_len.

    The ideal is approximated by products p*r*q whose top length stays
    within max_len; this is the length-filtered truncation used as the
    dimension oracle for (deformed) preprojective algebras.
    """
    paths = path_basis(q, max_len)
    index = {p: i for i, p in enumerate(paths)}
    span = _span_of_products(q, relations, paths, index, max_len, field)
    dims = []
    count = 0
    by_length = sorted(range(len(paths)), key=lambda i: len(paths[i][1]))
    pos = 0
    for l in range(max_len + 1):
        while pos < len(by_length) and len(paths[by_length[pos]][1]) <= l:
            i = by_length[pos]
            v = [field.zero()] * len(paths)
            v[i] = field.one()
            if span.add(v):
                count += 1
            pos += 1
        dims.append(count)
    return dims


# -- preprojective algebras --------------------------------------------------------


def preprojective_relations(q, lam=None, field=None):
    """One relation per vertex on the double quiver:
    sum_a e_i [a, a*] e_i - lambda_i e_i."""
    if field is None:
        field = QQI if lam is not None else QQ
    dq = q.double()
    m = len(q.arrows)
    rels = []
    for i in range(q.n):
        acc = PathElement(dq, field, {})
        for a, (_, tail, head) in enumerate(q.arrows):
            star = m + a
            if tail == i:
                acc = acc + arrow_element(dq, field, a) * arrow_element(
                    dq, field, star
                )
            if head == i:
                acc = acc - arrow_element(dq, field, star) * arrow_element(
                    dq, field, a
                )
        if lam is not None and lam[i]:
            acc = acc - PathElement(dq, field, {(i, ()): _as_scalar(field, lam[i])})
        rels.append(acc)
    return dq, rels


def _as_scalar(field, value):
    if isinstance(value, int):
        return field.from_int(value)
    if field == QQI and isinstance(value, (Fraction,)):
        return GaussianRational(value)
    return value


class DGQuiverAlgebra:
    """Derived (deformed) preprojective algebra: the doubled quiver in
    degree 0 plus degree -1 loops t_i with d(t_i) the deformed relation."""

    __slots__ = ("quiver", "double", "lam", "field", "relations")

    def __init__(self, q, lam=None, field=None):
        if field is None:
            field = QQI if lam is not None else QQ
        self.quiver = q
        self.lam = lam
        self.field = field
        self.double, self.relations = preprojective_relations(q, lam, field)

    def d_t(self, i):
        return self.relations[i]

    def h0_truncated_dims(self, max_len):
        """Truncated dims of H^0 computed through the differential: the
        degree -1 part is spanned by p t_i q and d(p t_i q) = p d(t_i) q
        (the Leibniz signs are trivial because p, q sit in degree 0)."""
        from .linalg import SpanBuilder

        dq = self.double
        field = self.field
        paths = path_basis(dq, max_len)
        index = {p: i for i, p in enumerate(paths)}
        span = SpanBuilder(field, len(paths))
        for i in range(self.quiver.n):
            rel = self.relations[i]
            for p in paths:
                if path_target(dq, p) != i:
                    continue
                for p2 in paths:
                    if path_source(dq, p2) != i:
                        continue
                    if len(p[1]) + 2 + len(p2[1]) > max_len:
                        continue
                    prod = (
                        PathElement(dq, field, {p: field.one()})
                        * rel
                        * PathElement(dq, field, {p2: field.one()})
                    )
                    if not prod.terms:
                        continue
                    vec = [field.zero()] * len(paths)
                    for pp, c in prod.terms.items():
                        vec[index[pp]] = vec[index[pp]] + c
                    span.add(vec)
        dims = []
        count = 0
        order = sorted(range(len(paths)), key=lambda k: len(paths[k][1]))
        pos = 0
        for l in range(max_len + 1):
            while pos < len(order) and len(paths[order[pos]][1]) <= l:
                v = [field.zero()] * len(paths)
                v[order[pos]] = field.one()
                if span.add(v):
                    count += 1
                pos += 1
            dims.append(count)
        return dims


def derived_preprojective(q, lam=None, field=None):
    return DGQuiverAlgebra(q, lam, field)


# -- quasi-dominance and Kleinian blocks ---------------------------------------------


def _re_im(value):
    if isinstance(value, GaussianRational):
        return value.re, value.im
    return Fraction(value), Fraction(0)


def quasi_dominant(lam):
    """Each entry has positive real part, or zero real part and
    nonnegative imaginary part."""
    for v in lam:
        re, im = _re_im(v)
        if re > 0:
            continue
        if re == 0 and im >= 0:
            continue
        return False
    return True


EXTENDED_DYNKIN_TYPES = ("A", "D", "E6", "E7", "E8")


def extended_dynkin(type_label):
    """Extended Dynkin quiver with extending vertex 0.

    Labels: A<n> (n>=1), D<n> (n>=4), E6, E7, E8.  Vertex numbering
    follows the usual tables; edge orientations are arbitrary (everything
    downstream only uses the underlying graph or the double)."""
    label = type_label.strip().upper().replace("~", "")
    kind = label[0]
    if kind == "A":
        n = int(label[1:])
        if n < 1:
            raise InputError("A_n needs n >= 1")
        vertices = [str(i) for i in range(n + 1)]
        arrows = [(f"a{i}", i, (i + 1) % (n + 1)) for i in range(n + 1)]
        if n == 1:
            arrows = [("a0", 0, 1), ("a1", 1, 0)]
        return Quiver(vertices, arrows, extending=0)
    if kind == "D":
        n = int(label[1:])
        if n < 4:
            raise InputError("D_n needs n >= 4")
        vertices = [str(i) for i in range(n + 1)]
        arrows = [("a0", 0, 2), ("a1", 1, 2)]
        arrows += [(f"a{i}", i, i + 1) for i in range(2, n - 2)]
        arrows += [(f"b{n-1}", n - 2, n - 1), (f"b{n}", n - 2, n)]
        return Quiver(vertices, arrows, extending=0)
    if label == "E6":
        edges = [(0, 1), (1, 4), (2, 3), (3, 4), (4, 5), (5, 6)]
    elif label == "E7":
        edges = [(0, 1), (1, 2), (2, 3), (3, 7), (3, 4), (4, 5), (5, 6)]
    elif label == "E8":
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 8), (5, 6), (6, 7)]
    else:
        raise InputError(f"unknown extended Dynkin label {type_label!r}")
    nv = max(max(e) for e in edges) + 1
    return Quiver(
        [str(i) for i in range(nv)],
        [(f"a{i}", t, h) for i, (t, h) in enumerate(edges)],
        extending=0,
    )


KLEINIAN_POLYNOMIALS = {
    "A": lambda n: f"x^2 + y^2 + z^{n + 1}",
    "D": lambda n: f"x^2 + y^2*z + z^{n - 1}",
    "E6": lambda _: "x^2 + y^3 + z^4",
    "E7": lambda _: "x^2 + y^3 + y*z^3",
    "E8": lambda _: "x^2 + y^3 + z^5",
}


def classify_dynkin_component(vertices, edges):
    """ADE label of a connected simply-laced tree, via leg lengths."""
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if len(edges) != len(vertices) - 1:
        raise InputError("component is not a tree")
    deg3 = [v for v in vertices if len(adj[v]) >= 3]
    if not deg3:
        return ("A", len(vertices))
    if len(deg3) > 1 or len(adj[deg3[0]]) > 3:
        raise InputError("not an ADE diagram")
    center = deg3[0]
    legs = []
    for start in adj[center]:
        length = 1
        prev, cur = center, start
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", len(vertices))
    if legs == [1, 2, 2]:
        return ("E6", 6)
    if legs == [1, 2, 3]:
        return ("E7", 7)
    if legs == [1, 2, 4]:
        return ("E8", 8)
    raise InputError("not an ADE diagram")


def block_polynomial(kind, size):
    if kind == "A":
        return KLEINIAN_POLYNOMIALS["A"](size)
    if kind == "D":
        return KLEINIAN_POLYNOMIALS["D"](size)
    return KLEINIAN_POLYNOMIALS[kind](size)


class BlockReport:
    """Dynkin components of the zero-weight subquiver with polynomials."""

    __slots__ = ("blocks",)

    def __init__(self, blocks):
        self.blocks = list(blocks)

    def to_json(self):
        return [
            {
                "type": f"{kind}{size}" if kind in ("A", "D") else kind,
                "vertices": sorted(vertices),
                "polynomial": block_polynomial(kind, size),
            }
            for (kind, size, vertices) in self.blocks
        ]


def dsg_blocks(type_label, lam):
    """Kleinian block decomposition for a deformation weight.

    lam lists the weights of the internal (non-extending) vertices in
    vertex order; it must be quasi-dominant (no normalisation is applied).
    Returns the connected components of the zero-weight full subquiver,
    classified as Dynkin types with their defining polynomials.
    """
    q = extended_dynkin(type_label)
    internal = [v for v in range(q.n) if v != q.extending]
    if len(lam) != len(internal):
        raise InputError(
            f"need {len(internal)} internal weights, got {len(lam)}"
        )
    if not quasi_dominant(lam):
        raise NotQuasiDominant("weights are not quasi-dominant")
    weight_of = dict(zip(internal, lam))
    zero = [v for v in internal if not _nonzero(weight_of[v])]
    zero_set = set(zero)
    edges = [
        (t, h)
        for (t, h) in q.underlying_edges()
        if t in zero_set and h in zero_set
    ]
    blocks = []
    seen = set()
    for v in sorted(zero):
        if v in seen:
            continue
        comp = {v}
        frontier = [v]
        while frontier:
            cur = frontier.pop()
            for (a, b) in edges:
                for other, this in ((a, b), (b, a)):
                    if this == cur and other not in comp:
                        comp.add(other)
                        frontier.append(other)
        seen |= comp
        comp_edges = [(a, b) for (a, b) in edges if a in comp and b in comp]
        kind, size = classify_dynkin_component(sorted(comp), comp_edges)
        blocks.append((kind, size, sorted(q.vertices[u] for u in comp)))
    blocks.sort(key=lambda b: b[2])
    return BlockReport(blocks)


def _nonzero(value):
    re, im = _re_im(value)
    return bool(re) or bool(im)


# -- Drinfeld derived quotient --------------------------------------------------------


class DrinfeldComplex:
    """Components Q^0 = A and Q^{-1-i} = Ae (x) R^i (x) eA, with the
    alternating signed sum of multiplications as the differential."""

    __slots__ = ("algebra", "e", "depth_bound", "ae", "r", "ea",
                 "_mul_cache")

    def __init__(self, algebra, e, depth_bound):
        if not algebra.is_idempotent(e):
            raise NotIdempotent("e^2 != e")
        self.algebra = algebra
        self.e = list(e)
        self.depth_bound = depth_bound
        a = algebra
        ae = a.subspace_basis([a.multiply(a.basis_vector(i), e)
                               for i in range(a.dim)])
        ea = a.subspace_basis([a.multiply(e, a.basis_vector(i))
                               for i in range(a.dim)])
        r = a.subspace_basis(
            [a.multiply(e, a.multiply(a.basis_vector(i), e))
             for i in range(a.dim)]
        )
        self.ae = ae
        self.r = r
        self.ea = ea
        self._mul_cache = {}

    def dims(self):
        out = {0: self.algebra.dim}
        for i in range(self.depth_bound + 1):
            out[-1 - i] = len(self.ae) * len(self.r) ** i * len(self.ea)
        return out

    def _coords(self, basis, vec):
        if not basis:
            return None
        mat = matrix_from_columns(self.algebra.field, basis,
                                  rows=self.algebra.dim)
        return mat.solve(vec)

    def _pair_products(self, left_basis, right_basis, target_basis):
        """[(left, right) -> coords in target] multiplication table."""
        key = (id(left_basis), id(right_basis), id(target_basis))
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        table = {}
        for i, u in enumerate(left_basis):
            for j, v in enumerate(right_basis):
                prod = self.algebra.multiply(u, v)
                if target_basis is None:
                    table[(i, j)] = prod  # full A coordinates
                else:
                    coords = self._coords(target_basis, prod)
                    if coords is None:
                        raise InputError("product leaves the subspace")
                    table[(i, j)] = coords
        self._mul_cache[key] = table
        return table

    def component_basis(self, degree):
        """Index tuples (ae, r_1..r_i, ea) for Q^{degree}."""
        if degree == 0:
            return [(k,) for k in range(self.algebra.dim)]
        i = -degree - 1
        out = []

        def rec(prefix, slots):
            if slots == 0:
                for b in range(len(self.ea)):
                    out.append(prefix + (b,))
                return
            for r in range(len(self.r)):
                rec(prefix + (r,), slots - 1)

        for a0 in range(len(self.ae)):
            rec((a0,), i)
        return out if (self.ae and self.ea) else []

    def differential(self, key, degree):
        """d of a tensor basis element at the given degree: {key: coeff}."""
        field = self.algebra.field
        out = {}
        if degree == 0:
            return out
        i = -degree - 1
        a0 = key[0]
        mids = key[1:-1]
        b0 = key[-1]

        def bump(tkey, coeff):
            if not coeff:
                return
            cur = out.get(tkey, field.zero()) + coeff
            if cur:
                out[tkey] = cur
            else:
                out.pop(tkey, None)

        if i == 0:
            ends = self._pair_products(self.ae, self.ea, None)
            prod = ends[(a0, b0)]
            for k, c in enumerate(prod):
                bump((k,), c)
            return out
        # join 0: (ae * r_1)
        left = self._pair_products(self.ae, self.r, self.ae)
        for k, c in enumerate(left[(a0, mids[0])]):
            bump((k,) + mids[1:] + (b0,), c)
        # inner joins
        mid = self._pair_products(self.r, self.r, self.r)
        for j in range(len(mids) - 1):
            sign = field.from_int(-1 if (j + 1) % 2 else 1)
            for k, c in enumerate(mid[(mids[j], mids[j + 1])]):
                bump(
                    (a0,) + mids[:j] + (k,) + mids[j + 2 :] + (b0,),
                    sign * c,
                )
        # last join: (r_i * ea)
        right = self._pair_products(self.r, self.ea, self.ea)
        sign = field.from_int(-1 if i % 2 else 1)
        for k, c in enumerate(right[(mids[-1], b0)]):
            bump((a0,) + mids[:-1] + (k,), sign * c)
        return out


def drinfeld_quotient(algebra, e, depth_bound):
    return DrinfeldComplex(algebra, e, depth_bound)


def drinfeld_cohomology(complex_, window):
    """Cohomology dims in a window of (nonpositive) degrees."""
    depth = max(-min(window), 0)
    if depth >= complex_.depth_bound - 1:
        raise WindowExceedsBound(
            f"window depth {depth} needs depth bound > {depth + 1}"
        )
    field = complex_.algebra.field
    dims = {}
    bases = {}
    for deg in range(min(window) - 1, 1):
        bases[deg] = complex_.component_basis(deg)
    for n in window:
        space = bases.get(n, [])
        if not space:
            dims[n] = 0
            continue
        index = {k: i for i, k in enumerate(space)}
        tgt = bases.get(n + 1, [])
        tgt_index = {k: i for i, k in enumerate(tgt)}
        cols = []
        for key in space:
            vec = [field.zero()] * len(tgt)
            for tkey, c in complex_.differential(key, n).items():
                vec[tgt_index[tkey]] = vec[tgt_index[tkey]] + c
            cols.append(vec)
        mat = matrix_from_columns(field, cols, rows=len(tgt))
        kernel = mat.kernel_basis()
        prev = bases.get(n - 1, [])
        ivecs = []
        for key in prev:
            vec = [field.zero()] * len(space)
            hit = False
            for tkey, c in complex_.differential(key, n - 1).items():
                pos = index.get(tkey)
                if pos is not None and c:
                    vec[pos] = vec[pos] + c
                    hit = True
            if hit:
                ivecs.append(vec)
        rank_i = (
            matrix_from_columns(field, ivecs, rows=len(space)).rank()
            if ivecs
            else 0
        )
        both = matrix_from_columns(
            field, ivecs + list(kernel), rows=len(space)
        ).rank()
        dims[n] = both - rank_i
    return dims
