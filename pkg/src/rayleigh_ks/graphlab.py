"""Graph Laplacians, effective resistances, edge-vector systems, tree packing and thin trees.

Edge vectors are kept exactly in reduced incidence coordinates: vertex 0 is
grounded, ``b~_e`` is the incidence vector with row 0 dropped, and the metric is

    H = L_red^{-1}                 (no D; L_red = reduced Laplacian of G)
    H = E^T (D + L_G)^{-1} E       (with D; E = [-1^T; I] re-inserts row 0)

so <v_e, v_f> = sqrt(w_e w_f) b~_e^T H b~_f reproduces the Gram matrix of
L_G^{+/2} b_e (or (D + L_G)^{-1/2} b_e) exactly.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, InfiniteResistance, InternalConsistency, InvalidInput, NoBasis, PreconditionViolation
from .measures import DEFAULT_BUDGET
from .stablepoly import linalg as la
from .stablepoly.vectors import VectorSystem, exact_sqrt

EIG_CUTOFF = 1e-9
CUT_LIMIT = 24
# trees materialized for the exact descent; beyond this the pipeline samples
DESCENT_CAP = 2000


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    edges: tuple[tuple[int, int, Fraction], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("a graph needs at least one vertex")
        clean = []
        for e in self.edges:
            if len(e) == 2:
                u, v, w = e[0], e[1], Fraction(1)
            elif len(e) == 3:
                u, v, w = e
            else:
                raise InvalidInput(f"malformed edge {e!r}")
            u, v, w = int(u), int(v), la.to_fraction(w)
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidInput(f"edge ({u}, {v}) has a vertex outside 0..{self.n - 1}")
            if w <= 0:
                raise InvalidInput(f"edge ({u}, {v}) has non-positive weight")
            clean.append((u, v, w))
        object.__setattr__(self, "edges", tuple(clean))

    @classmethod
    def from_edges(cls, edges: Iterable, n: int | None = None) -> "WeightedGraph":
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e[0], e[1]) for e in edges), default=0)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weights(self) -> list[Fraction]:
        return [w for _, _, w in self.edges]

    def components(self, edge_ids: Iterable[int] | None = None) -> list[int]:
        """Component label per vertex, using only the given edges."""
        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in range(self.m) if edge_ids is None else edge_ids:
            u, v, _ = self.edges[e]
            parent[find(u)] = find(v)
        return [find(a) for a in range(self.n)]

    def is_connected(self, edge_ids: Iterable[int] | None = None) -> bool:
        return len(set(self.components(edge_ids))) == 1

    def is_spanning_tree(self, edge_ids: Sequence[int]) -> bool:
        ids = list(edge_ids)
        return len(ids) == self.n - 1 and len(set(ids)) == len(ids) and self.is_connected(ids)

    def subgraph(self, edge_ids: Sequence[int]) -> "WeightedGraph":
        return WeightedGraph(self.n, tuple(self.edges[e] for e in edge_ids))

    def reweighted(self, weights: Sequence) -> "WeightedGraph":
        return WeightedGraph(self.n, tuple((u, v, la.to_fraction(w)) for (u, v, _), w in zip(self.edges, weights)))

    def incidence(self, e: int) -> np.ndarray:
        u, v, _ = self.edges[e]
        b = np.zeros(self.n)
        b[u], b[v] = 1.0, -1.0
        return b

    def reduced_incidence(self, e: int) -> list[Fraction]:
        u, v, _ = self.edges[e]
        b = [Fraction(0)] * (self.n - 1)
        if u:
            b[u - 1] = Fraction(1)
        if v:
            b[v - 1] = Fraction(-1)
        return b

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v} {w}\n" for u, v, w in self.edges)


def read_edge_list(path: str | Path, n: int | None = None) -> WeightedGraph:
    return parse_edge_list(Path(path).read_text(), n)


def parse_edge_list(text: str, n: int | None = None) -> WeightedGraph:
    """Parse "u v [w]" lines (0-indexed, '#' comments)."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise InvalidInput(f"line {lineno}: expected 'u v [w]', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
            w = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
        except ValueError as exc:
            raise InvalidInput(f"line {lineno}: {exc}") from exc
        if u < 0 or v < 0:
            raise InvalidInput(f"line {lineno}: negative vertex index")
        edges.append((u, v, w))
    if not edges:
        raise InvalidInput("edge list is empty")
    return WeightedGraph.from_edges(edges, n)


# -- float spectral numerics ----------------------------------------------------


def laplacian(g: WeightedGraph, edge_ids: Iterable[int] | None = None) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for e in range(g.m) if edge_ids is None else edge_ids:
        u, v, w = g.edges[e]
        w = float(w)
        lap[u, u] += w
        lap[v, v] += w
        lap[u, v] -= w
        lap[v, u] -= w
    return lap


def _range_eig(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    vals, vecs = np.linalg.eigh((mat + mat.T) / 2)
    keep = vals > EIG_CUTOFF
    return vals[keep], vecs[:, keep]


def pseudo_inverse(g_or_matrix) -> np.ndarray:
    """Moore-Penrose inverse via eigendecomposition, dropping eigenvalues below the cutoff."""
    mat = laplacian(g_or_matrix) if isinstance(g_or_matrix, WeightedGraph) else np.asarray(g_or_matrix, float)
    vals, vecs = _range_eig(mat)
    return (vecs / vals) @ vecs.T


def _inv_sqrt(mat: np.ndarray) -> np.ndarray:
    vals, vecs = _range_eig(mat)
    return (vecs / np.sqrt(vals)) @ vecs.T


def pair_resistance(g: WeightedGraph, u: int, v: int, lpinv: np.ndarray | None = None) -> float:
    """(e_u - e_v)^T L^+ (e_u - e_v); infinite across components."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidInput(f"vertex out of range: {u}, {v}")
    comp = g.components()
    if comp[u] != comp[v]:
        raise InfiniteResistance(f"vertices {u} and {v} lie in different components")
    lpinv = pseudo_inverse(g) if lpinv is None else lpinv
    b = np.zeros(g.n)
    b[u] += 1
    b[v] -= 1
    return float(b @ lpinv @ b)


def effective_resistance(g: WeightedGraph, e: int, lpinv: np.ndarray | None = None) -> float:
    u, v, _ = g.edges[e]
    return pair_resistance(g, u, v, lpinv)


def effective_resistances(g: WeightedGraph) -> list[float]:
    lpinv = pseudo_inverse(g)
    return [effective_resistance(g, e, lpinv) for e in range(g.m)]


# -- exact edge-vector systems --------------------------------------------------


def _reduced_laplacian(g: WeightedGraph) -> la.Matrix:
    out = la.zeros(g.n - 1, g.n - 1)
    for e in range(g.m):
        b = g.reduced_incidence(e)
        w = g.edges[e][2]
        for i, bi in enumerate(b):
            if bi:
                for j, bj in enumerate(b):
                    if bj:
                        out[i][j] += w * bi * bj
    return out


def _check_pd(d_mat) -> la.Matrix:
    d = la.as_matrix(d_mat)
    if not la.is_square(d) or not la.is_symmetric(d):
        raise PreconditionViolation("D must be a symmetric square matrix")
    if np.linalg.eigvalsh(la.to_float(d))[0] <= 0:
        raise PreconditionViolation("D is not positive definite")
    return d


def reference_metric(g: WeightedGraph, d_mat=None) -> la.Matrix:
    """H on reduced coordinates: L_red^{-1} without D, E^T (D + L_G)^{-1} E with D."""
    if not g.is_connected():
        raise NoBasis("graph is disconnected")
    if d_mat is None:
        return la.inverse(_reduced_laplacian(g))
    d = _check_pd(d_mat)
    if len(d) != g.n:
        raise InvalidInput(f"D must be {g.n}x{g.n}")
    full = la.madd(d, [[la.to_fraction(x) for x in row] for row in _exact_laplacian(g)])
    inv = la.inverse(full)
    n = g.n
    # E^T M E with E = [-1^T; I]: entry (a, b) = M[a+1][b+1] - M[0][b+1] - M[a+1][0] + M[0][0]
    return [[inv[a + 1][b + 1] - inv[0][b + 1] - inv[a + 1][0] + inv[0][0] for b in range(n - 1)] for a in range(n - 1)]


def _exact_laplacian(g: WeightedGraph) -> la.Matrix:
    lap = la.zeros(g.n, g.n)
    for u, v, w in g.edges:
        lap[u][u] += w
        lap[v][v] += w
        lap[u][v] -= w
        lap[v][u] -= w
    return lap


@dataclass
class EdgeVectorSystem:
    basis: np.ndarray
    vectors: np.ndarray
    edge_ids: tuple[int, ...]
    system: VectorSystem

    @property
    def sq_norms(self) -> list[float]:
        return [float(x) for x in self.system.sq_norms()]


def edge_vectors(g: WeightedGraph, edge_ids: Sequence[int] | None = None, d_mat=None) -> EdgeVectorSystem:
    """v_e = sqrt(w_e) R^{-1/2} b_e for e in F, R = L_G or D + L_G, in reduced coordinates."""
    if g.n < 2:
        raise InvalidInput("edge vectors need at least two vertices")
    ids = tuple(range(g.m)) if edge_ids is None else tuple(edge_ids)
    if any(not 0 <= e < g.m for e in ids):
        raise InvalidInput("edge index out of range")
    h = reference_metric(g, d_mat)
    base = VectorSystem(g.n - 1, tuple(tuple(g.reduced_incidence(e)) for e in ids), tuple(map(tuple, h)))
    weights = [g.edges[e][2] for e in ids]
    if all(w == 1 for w in weights):
        system = base
    else:
        # sqrt(w_e) factors; the Gram matrix must stay rational
        gram = base.gram()
        scaled = la.zeros(len(ids), len(ids))
        for a in range(len(ids)):
            for b in range(len(ids)):
                if gram[a][b]:
                    root = exact_sqrt(weights[a] * weights[b])
                    if root is None:
                        raise InvalidInput("edge weights give irrational inner products; use square weights")
                    scaled[a][b] = root * gram[a][b]
        system = VectorSystem.from_gram(scaled, g.n - 1)
    ref = laplacian(g) if d_mat is None else laplacian(g) + la.to_float(la.as_matrix(d_mat))
    vals, basis = _range_eig(ref)
    root = _inv_sqrt(ref)
    vectors = np.array([math.sqrt(float(g.edges[e][2])) * (basis.T @ root @ g.incidence(e)) for e in ids])
    return EdgeVectorSystem(basis, vectors, ids, system)


# -- spanning trees ---------------------------------------------------------------


def spanning_trees(g: WeightedGraph, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All spanning trees as sorted edge-index tuples, by backtracking with union-find."""
    n, m = g.n, g.m
    if n == 1:
        return [()]
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int, parent: list[int]) -> None:
        if len(chosen) == n - 1:
            out.append(tuple(chosen))
            if len(out) > budget:
                raise BudgetExceeded(f"more than {budget} spanning trees")
            return
        need = n - 1 - len(chosen)
        for e in range(start, m - need + 1):
            u, v, _ = g.edges[e]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                continue
            nxt = list(parent)
            nxt[ru] = rv
            chosen.append(e)
            rec(e + 1, nxt)
            chosen.pop()

    rec(0, list(range(n)))
    return out


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        a = parent[a]
    return a


def count_spanning_trees_exact(g: WeightedGraph, lam: Sequence | None = None) -> Fraction:
    """Weighted matrix-tree theorem: det of the reduced Laplacian with weights lam (default: edge weights)."""
    if g.n == 1:
        return Fraction(1)
    weights = g.weights() if lam is None else [la.to_fraction(x) for x in lam]
    return la.det(_reduced_laplacian(g.reweighted(weights)))


def wilson_sample(g: WeightedGraph, rng: np.random.Generator, weights: Sequence[float] | None = None) -> tuple[int, ...]:
    """Random spanning tree with P(T) proportional to prod_{e in T} w_e (loop-erased random walks)."""
    if not g.is_connected():
        raise NoBasis("graph is disconnected")
    weights = [float(w) for w in (g.weights() if weights is None else weights)]
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    probs = []
    for a in range(g.n):
        w = np.array([weights[e] for _, e in adj[a]])
        probs.append(w / w.sum() if len(w) else w)
    in_tree = [False] * g.n
    in_tree[0] = True
    nxt_edge = [-1] * g.n
    nxt_vertex = [-1] * g.n
    for start in range(g.n):
        a = start
        while not in_tree[a]:
            k = int(rng.choice(len(adj[a]), p=probs[a]))
            nxt_vertex[a], nxt_edge[a] = adj[a][k]
            a = nxt_vertex[a]
        a = start
        while not in_tree[a]:
            in_tree[a] = True
            a = nxt_vertex[a]
    return tuple(sorted(nxt_edge[a] for a in range(1, g.n)))


# -- connectivity and packing -----------------------------------------------------


def _cuts(n: int):
    """Bitmasks of nonempty S avoiding vertex 0: one representative per cut."""
    if n > CUT_LIMIT:
        raise BudgetExceeded(f"cut enumeration limited to n <= {CUT_LIMIT}")
    for mask in range(1, 1 << (n - 1)):
        yield mask << 1


def _crossing(g: WeightedGraph, side: int, edge_ids: Iterable[int]) -> Fraction:
    total = Fraction(0)
    for e in edge_ids:
        u, v, w = g.edges[e]
        if ((side >> u) & 1) != ((side >> v) & 1):
            total += w
    return total


def edge_connectivity(g: WeightedGraph) -> int:
    """Minimum number of edges crossing a nontrivial cut (parallel edges counted)."""
    if g.n == 1:
        return 0
    best = None
    for side in _cuts(g.n):
        c = sum(1 for u, v, _ in g.edges if ((side >> u) & 1) != ((side >> v) & 1))
        best = c if best is None else min(best, c)
    return best


def _tree_path(forest: set[int], g: WeightedGraph, u: int, v: int) -> list[int] | None:
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in forest:
        a, b, _ = g.edges[e]
        adj.setdefault(a, []).append((b, e))
        adj.setdefault(b, []).append((a, e))
    prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b, e in adj.get(a, []):
            if b not in prev:
                prev[b] = (a, e)
                queue.append(b)
    if v not in prev:
        return None
    path = []
    a = v
    while a != u:
        a, e = prev[a]
        path.append(e)
    return path


def _matroid_partition(g: WeightedGraph, k: int) -> list[set[int]]:
    """k forests with maximum total size, by augmenting exchange paths."""
    forests: list[set[int]] = [set() for _ in range(k)]
    for e in range(g.m):
        # BFS over edges; label[x] = (previous edge, forest index it moves into)
        label: dict[int, tuple[int, int]] = {e: (-1, -1)}
        queue = deque([e])
        done = None
        while queue and done is None:
            x = queue.popleft()
            owner = next((i for i, f in enumerate(forests) if x in f), -1)
            u, v, _ = g.edges[x]
            for i, forest in enumerate(forests):
                if i == owner:
                    continue
                path = _tree_path(forest, g, u, v)
                if path is None:
                    done = (x, i)
                    break
                for y in path:
                    if y not in label:
                        label[y] = (x, i)
                        queue.append(y)
        if done is None:
            continue
        x, i = done
        while x != -1:
            owner = next((j for j, f in enumerate(forests) if x in f), -1)
            if owner >= 0:
                forests[owner].discard(x)
            forests[i].add(x)
            x, i = label[x]
    return forests


def _exhaustive_packing(g: WeightedGraph, k: int) -> list[tuple[int, ...]] | None:
    trees = spanning_trees(g)
    masks = [sum(1 << e for e in t) for t in trees]

    def rec(start: int, used: int, acc: list[int]) -> list[int] | None:
        if len(acc) == k:
            return acc
        for a in range(start, len(masks)):
            if not masks[a] & used:
                got = rec(a + 1, used | masks[a], acc + [a])
                if got is not None:
                    return got
        return None

    found = rec(0, 0, [])
    return None if found is None else [trees[a] for a in found]


@dataclass
class PackingResult:
    trees: list[tuple[int, ...]]
    want: int

    @property
    def found(self) -> int:
        return len(self.trees)

    @property
    def complete(self) -> bool:
        return self.found >= self.want


def disjoint_spanning_trees(g: WeightedGraph, want: int) -> PackingResult:
    if want < 1:
        raise InvalidInput("want must be positive")
    if not g.is_connected():
        raise NoBasis("graph is disconnected")
    if g.n == 1:
        return PackingResult([()] * want, want)
    for k in range(min(want, g.m // (g.n - 1)), 0, -1):
        forests = _matroid_partition(g, k)
        if all(len(f) == g.n - 1 for f in forests):
            trees = [tuple(sorted(f)) for f in forests]
            break
        if g.n <= 8:
            fallback = _exhaustive_packing(g, k)
            if fallback is not None:
                trees = fallback
                break
    else:
        trees = []
    for t in trees:
        if not g.is_spanning_tree(t):
            raise InternalConsistency("packing produced a non-spanning tree")
    if len({e for t in trees for e in t}) != sum(len(t) for t in trees):
        raise InternalConsistency("packing produced overlapping trees")
    return PackingResult(trees, want)


# -- thinness ----------------------------------------------------------------------


def _reference(g: WeightedGraph, d_mat=None) -> np.ndarray:
    ref = laplacian(g)
    if d_mat is not None:
        ref = ref + la.to_float(la.as_matrix(d_mat))
    return ref


def spectral_thinness(g: WeightedGraph, tree: Sequence[int], d_mat=None) -> float:
    """Smallest alpha with L_T <= alpha * R, R = L_G or L_G + D."""
    if not g.is_spanning_tree(tree):
        raise PreconditionViolation("T is not a spanning tree")
    root = _inv_sqrt(_reference(g, d_mat))
    m = root @ laplacian(g, tree) @ root
    return float(np.linalg.eigvalsh((m + m.T) / 2)[-1])


def combinatorial_thinness(g: WeightedGraph, tree: Sequence[int]) -> float:
    """max over cuts of |T(S, S^c)| / |E(S, S^c)|."""
    if not g.is_spanning_tree(tree):
        raise PreconditionViolation("T is not a spanning tree")
    best = Fraction(0)
    all_edges = range(g.m)
    for side in _cuts(g.n):
        ratio = _crossing(g, side, tree) / _crossing(g, side, all_edges)
        best = max(best, ratio)
    return float(best)


def cut_dominance(d_mat, g: WeightedGraph, tol: float = 1e-12) -> bool:
    """1_S^T D 1_S <= 1_S^T L_G 1_S for every proper nonempty S."""
    if g.n > CUT_LIMIT:
        raise BudgetExceeded(f"cut enumeration limited to n <= {CUT_LIMIT}")
    d = la.to_float(la.as_matrix(d_mat))
    if d.shape != (g.n, g.n):
        raise InvalidInput(f"D must be {g.n}x{g.n}")
    lap = laplacian(g)
    scale = 1.0 + float(np.abs(d).max())
    for mask in range(1, (1 << g.n) - 1):
        ind = np.array([(mask >> a) & 1 for a in range(g.n)], float)
        if ind @ d @ ind > ind @ lap @ ind + tol * scale:
            return False
    return True


# -- pipeline ------------------------------------------------------------------------


@dataclass
class ThinnessCertificate:
    tree: tuple[int, ...]
    alpha_spectral: float
    alpha_combinatorial: float | None
    k: int
    eps: float
    sampled: bool = False
    cut_dominated: bool | None = None
    lam: list[float] = field(default_factory=list)
    mixed_root: float | None = None

    def to_json(self) -> dict:
        return {
            "tree": list(self.tree),
            "alpha_spectral": self.alpha_spectral,
            "alpha_combinatorial": self.alpha_combinatorial,
            "k": self.k,
            "eps": self.eps,
            "sampled": self.sampled,
            "cut_dominated": self.cut_dominated,
            "lambda": self.lam,
            "mixed_root": self.mixed_root,
        }


def ust_marginals(g: WeightedGraph) -> list[float]:
    """P[e in T] for the weighted uniform spanning tree: w_e R_eff(e)."""
    lpinv = pseudo_inverse(g)
    return [float(w) * effective_resistance(g, e, lpinv) for e, (_, _, w) in enumerate(g.edges)]


def thin_tree_pipeline(
    g: WeightedGraph,
    edge_ids: Sequence[int] | None = None,
    d_mat=None,
    eps_target: float = 0.1,
    tol: float = 1e-9,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    samples: int = 200,
) -> ThinnessCertificate:
    """Pack trees in F, fit max-entropy weights to an interior point, descend to a tree."""
    from .charpoly import descend
    from .maxent import fit_lambda, interior_point
    from .measures import lambda_tree_distribution

    ids = list(range(g.m)) if edge_ids is None else sorted(set(edge_ids))
    if not ids or any(not 0 <= e < g.m for e in ids):
        raise InvalidInput("F must be a nonempty set of edge indices")
    if not g.is_connected(ids):
        raise NoBasis("(V, F) is disconnected")
    if not 0 <= eps_target <= 1:
        raise InvalidInput("eps_target must lie in [0, 1]")
    sub = g.subgraph(ids)
    evs = edge_vectors(g, ids, d_mat)
    vs = evs.system
    eps = float(vs.eps2)
    packing = disjoint_spanning_trees(sub, max(1, sub.m // max(1, g.n - 1)))
    k = packing.found
    point = interior_point(packing.trees, sub.m, eps_target, x1=ust_marginals(sub))
    model = fit_lambda(vs, point)
    lam = [Fraction(x).limit_denominator(10**6) for x in model.lam]
    weights = [w * l for w, l in zip(sub.weights(), lam)]
    sampled = False
    mixed_root = None
    if count_spanning_trees_exact(sub) <= min(budget, DESCENT_CAP):
        mu = lambda_tree_distribution(sub, weights, budget)
        cert = descend(mu, vs, tol)
        local = cert.set
        mixed_root = cert.mixed_root
    else:
        sampled = True
        rng = np.random.default_rng(seed)
        best, best_alpha = None, math.inf
        for _ in range(samples):
            cand = wilson_sample(sub, rng, [float(w) for w in weights])
            alpha = vs.spectral_norm(cand)
            if alpha < best_alpha - 1e-15:
                best, best_alpha = cand, alpha
        local = best
    tree = tuple(sorted(ids[e] for e in local))
    alpha_s = spectral_thinness(g, tree, d_mat)
    if abs(alpha_s - vs.spectral_norm(local)) > 1e-8:
        raise InternalConsistency("edge-vector norm disagrees with the generalized eigenvalue")
    dominated = None if d_mat is None else cut_dominance(d_mat, g)
    alpha_c = combinatorial_thinness(g, tree) if g.n <= CUT_LIMIT else None
    return ThinnessCertificate(
        tree=tree,
        alpha_spectral=alpha_s,
        alpha_combinatorial=alpha_c,
        k=k,
        eps=eps,
        sampled=sampled,
        cut_dominated=dominated,
        lam=[float(x) for x in lam],
        mixed_root=mixed_root,
    )
