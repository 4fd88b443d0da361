"""Named graph families, mixed extensions of stars, and the closed-form
characteristic polynomials known for the two- and three-class cases.

Vertex orderings are fixed per family (clique block first, then
attachments) so eccentricity matrices reproduce byte-for-byte in tests.
"""
from __future__ import annotations

from itertools import combinations

from .errors import InvalidParameters, InvalidType, SizeLimitExceeded, UnsupportedShape
from .exact import poly_mul, poly_pow
from .graphs import Graph

#: Largest order are_isomorphic will attempt (factorial search with pruning).
ISO_DEFAULT_LIMIT = 16


# ---------------------------------------------------------------------------
# mixed extensions of a star
# ---------------------------------------------------------------------------


def normalize_type(t) -> tuple[int, ...]:
    """Validate a mixed-extension type tuple; store +-1 classes as +1.

    Entry i is +r for a clique class of order r, -r for a coclique class;
    position 0 is the class replacing the star's center.  A class of one
    vertex is the same thing either way, hence the +1 normalization.
    """
    t = tuple(t)
    if not t:
        raise InvalidType("type tuple is empty")
    if any(not isinstance(v, int) or v == 0 for v in t):
        raise InvalidType("type entries must be nonzero integers")
    return tuple(1 if v == -1 else v for v in t)


def mixed_extension_star(t) -> Graph:
    """Replace the star's center by class 0 and its leaves by the rest.

    Class 0 is completely joined to every other class; leaf classes are
    pairwise non-adjacent; class i is internally complete iff t[i] > 0.
    Vertices are numbered class by class.
    """
    t = normalize_type(t)
    sizes = [abs(v) for v in t]
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    edges: list[tuple[int, int]] = []
    for i, v in enumerate(t):
        lo, hi = offsets[i], offsets[i + 1]
        if v > 0:
            edges.extend(combinations(range(lo, hi), 2))
        if i > 0:
            edges.extend((c, w) for c in range(offsets[1]) for w in range(lo, hi))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameters(msg)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Star on n vertices, center first."""
    _require(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, "complete bipartite needs positive part sizes")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def complete_multipartite(parts) -> Graph:
    parts = tuple(parts)
    _require(len(parts) >= 1 and all(p >= 1 for p in parts), "part sizes must be positive")
    n = sum(parts)
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    edges = [
        (u, v)
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
        for u in range(offsets[i], offsets[i + 1])
        for v in range(offsets[j], offsets[j + 1])
    ]
    return Graph.from_edges(n, edges)


def complete_split(n: int, alpha: int) -> Graph:
    """Clique on n - alpha vertices joined to an independent set of alpha."""
    _require(1 <= alpha <= n - 1, "complete split needs 1 <= alpha <= n - 1")
    clique = n - alpha
    edges = list(combinations(range(clique), 2))
    edges.extend((u, v) for u in range(clique) for v in range(clique, n))
    return Graph.from_edges(n, edges)


def pineapple(p: int, q: int) -> Graph:
    """Complete graph on p vertices with q pendants attached at vertex 0."""
    _require(p >= 1 and q >= 1, "pineapple needs p, q >= 1")
    edges = list(combinations(range(p), 2))
    edges.extend((0, p + i) for i in range(q))
    return Graph.from_edges(p + q, edges)


def kite(p: int, q: int) -> Graph:
    """Complete graph on p vertices with a path of q vertices hung off vertex 0."""
    _require(p >= 1 and q >= 1, "kite needs p, q >= 1")
    edges = list(combinations(range(p), 2))
    edges.append((0, p))
    edges.extend((p + i, p + i + 1) for i in range(q - 1))
    return Graph.from_edges(p + q, edges)


def windmill(m: int, l: int) -> Graph:
    """l copies of the complete graph on m vertices sharing vertex 0."""
    _require(m >= 2 and l >= 1, "windmill needs m >= 2 and l >= 1")
    edges: list[tuple[int, int]] = []
    for blade in range(l):
        lo = 1 + blade * (m - 1)
        block = [0] + list(range(lo, lo + m - 1))
        edges.extend(combinations(block, 2))
    return Graph.from_edges(1 + l * (m - 1), edges)


_FAMILIES = {
    "complete": (complete, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "complete_split": (complete_split, 2),
    "pineapple": (pineapple, 2),
    "kite": (kite, 2),
    "windmill": (windmill, 2),
    "mixed": (mixed_extension_star, None),
}


def construct_named(family: str, params) -> Graph:
    """Build a named family member; see _FAMILIES for the accepted names."""
    if family not in _FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    fn, arity = _FAMILIES[family]
    params = tuple(params)
    if arity is None:
        return fn(params)
    if len(params) != arity:
        raise InvalidParameters(f"{family} takes {arity} parameters, got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# isomorphism (backtracking, intended for small graphs)
# ---------------------------------------------------------------------------


def are_isomorphic(g: Graph, h: Graph, limit: int = ISO_DEFAULT_LIMIT) -> bool:
    """Adjacency-preserving bijection search with degree pruning.

    Exponential in the worst case; raises SizeLimitExceeded above
    ``limit`` vertices rather than silently taking forever.
    """
    if g.n > limit or h.n > limit:
        raise SizeLimitExceeded(f"isomorphism search is limited to {limit} vertices")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    deg_g = [g.degree(u) for u in range(n)]
    deg_h = [h.degree(u) for u in range(n)]
    if sorted(deg_g) != sorted(deg_h):
        return False

    # Map high-degree vertices first; they are the most constrained.
    order = sorted(range(n), key=lambda u: -deg_g[u])
    mapping = [-1] * n

    def extend(pos: int, used: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for w in range(n):
            if used >> w & 1 or deg_h[w] != deg_g[u]:
                continue
            ok = True
            for prev in order[:pos]:
                if g.has_edge(u, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[u] = w
                if extend(pos + 1, used | 1 << w):
                    return True
                mapping[u] = -1
        return False

    return extend(0, 0)


# ---------------------------------------------------------------------------
# closed-form characteristic polynomials for two- and three-class extensions
# ---------------------------------------------------------------------------


def closed_form_char_poly_s2(t) -> tuple[int, ...]:
    """Characteristic polynomial of the eccentricity matrix of (-r1, r2).

    The prefactors collect the within-class difference eigenvalues
    (-2 repeated r1-1 times from the coclique hub, -1 repeated r2-1
    times from the clique); the quadratic is the quotient's polynomial.
    Fully expanded, exact integer coefficients.
    """
    t = normalize_type(t)
    if len(t) != 2 or t[1] <= 0:
        raise UnsupportedShape("expected a type of shape (-r1, r2)")
    if t[0] > 1:
        raise UnsupportedShape("expected a coclique hub: (-r1, r2)")
    r1, r2 = abs(t[0]), t[1]
    quad = (r1 * r2 - 2 * r1 - 2 * r2 + 2, -(2 * r1 + r2 - 3), 1)
    return poly_mul(
        poly_mul(poly_pow((2, 1), r1 - 1), poly_pow((1, 1), r2 - 1)), quad
    )


def closed_form_char_poly_s3(t) -> tuple[int, ...]:
    """Characteristic polynomial of the eccentricity matrix of a
    three-class star extension, shapes (r1, r2, r3) and (r1, -r2, r3).

    All-clique leaves contribute zero eigenvalues (their within-class
    distances never realize an eccentricity), the clique hub contributes
    -1's, a coclique leaf class contributes -2's, and the 3x3 quotient
    supplies the remaining cubic.
    """
    t = normalize_type(t)
    if len(t) != 3 or t[0] <= 0 or t[2] <= 0:
        raise UnsupportedShape("expected (r1, r2, r3) or (r1, -r2, r3)")
    r1, r3 = t[0], t[2]
    if t[1] > 0:
        r2 = t[1]
        cubic = (
            -4 * r2 * r3,
            -(r1 * r2 + r1 * r3 + 4 * r2 * r3),
            -(r1 - 1),
            1,
        )
        pref = poly_mul(poly_pow((0, 1), r2 + r3 - 2), poly_pow((1, 1), r1 - 1))
        return poly_mul(pref, cubic)
    r2 = -t[1]
    cubic = (
        2 * r3 * (r1 * r2 - 2 * r2 - r1),
        r1 * r2 - 4 * r2 * r3 - r1 * r3 - 2 * r2 - 2 * r1 + 2,
        -(2 * r2 + r1 - 3),
        1,
    )
    pref = poly_mul(
        poly_mul(poly_pow((0, 1), r3 - 1), poly_pow((1, 1), r1 - 1)),
        poly_pow((2, 1), r2 - 1),
    )
    return poly_mul(pref, cubic)
