"""Combinatorics of supersingular loci over the biregular Bruhat-Tits tree.

Vertices of the first kind have valency ``p^2 + 1`` and stand for the
irreducible components (the set N); vertices of the second kind have valency
``p + 1`` and stand for the superspecial points (the set M). A finite ball of
the tree is generated breadth first; vertices on the outer sphere are the
boundary and are exempt from the valency checks.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass

from .local_reps import is_prime

FIRST, SECOND = "first", "second"


class P1:
    """Marker for a fiber isomorphic to the projective line."""

    def __repr__(self) -> str:
        return "P1"

    def __eq__(self, other) -> bool:
        return isinstance(other, P1)

    def __hash__(self) -> int:
        return hash("P1")


P1_FIBER = P1()


def valency(kind: str, p: int) -> int:
    if kind == FIRST:
        return p * p + 1
    if kind == SECOND:
        return p + 1
    raise ValueError(f"unknown vertex kind {kind!r}")


def _other(kind: str) -> str:
    return SECOND if kind == FIRST else FIRST


@dataclass(frozen=True)
class BiregularTree:
    p: int
    radius: int
    root: int
    kinds: tuple[str, ...]
    depth: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return len(self.kinds)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(self.n_vertices)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def is_boundary(self, v: int) -> bool:
        return self.depth[v] == self.radius

    def interior(self) -> list[int]:
        return [v for v in range(self.n_vertices) if not self.is_boundary(v)]

    def is_bipartite(self) -> bool:
        return all(self.kinds[a] != self.kinds[b] for a, b in self.edges)

    def valency_violations(self) -> list[int]:
        adj = self.adjacency()
        return [v for v in self.interior() if len(adj[v]) != valency(self.kinds[v], self.p)]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "radius": self.radius,
            "root": self.root,
            "vertices": [
                {"id": v, "kind": k, "depth": d, "boundary": d == self.radius}
                for v, (k, d) in enumerate(zip(self.kinds, self.depth))
            ],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = [f"graph tree_p{self.p}_r{self.radius} {{"]
        for v, k in enumerate(self.kinds):
            shape = "circle" if k == FIRST else "box"
            style = ",style=dashed" if self.is_boundary(v) else ""
            lines.append(f"  v{v} [shape={shape}{style}];")
        for a, b in self.edges:
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_tree(p: int, root_kind: str = FIRST, radius: int = 1) -> BiregularTree:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if root_kind not in (FIRST, SECOND):
        raise ValueError(f"root_kind must be {FIRST!r} or {SECOND!r}")
    kinds = [root_kind]
    depth = [0]
    edges = []
    frontier = [0]
    for d in range(1, radius + 1):
        nxt = []
        for v in frontier:
            # the root has no parent; everyone else already has one edge
            children = valency(kinds[v], p) - (0 if v == 0 else 1)
            for _ in range(children):
                w = len(kinds)
                kinds.append(_other(kinds[v]))
                depth.append(d)
                edges.append((v, w))
                nxt.append(w)
        frontier = nxt
    return BiregularTree(p, radius, 0, tuple(kinds), tuple(depth), tuple(edges))


# -- incidence --------------------------------------------------------------


@dataclass(frozen=True)
class IncidenceModel:
    """Components (N), superspecial points (M) and their incidences.

    ``incidence`` is a list of (component, point) pairs and may repeat a pair.
    ``boundary`` lists labels exempt from the interior degree checks.
    """

    p: int
    components: tuple[str, ...]
    superspecial_points: tuple[str, ...]
    incidence: tuple[tuple[str, str], ...]
    boundary: frozenset = frozenset()

    def __post_init__(self):
        comps, pts = set(self.components), set(self.superspecial_points)
        if comps & pts:
            raise ValueError("component and point labels must be disjoint")
        for c, x in self.incidence:
            if c not in comps or x not in pts:
                raise ValueError(f"incidence ({c}, {x}) references unknown labels")

    @classmethod
    def free(cls, p: int, n_components: int, n_points: int, incidence=()) -> "IncidenceModel":
        """Model with |N|, |M| given directly (no tree)."""
        return cls(
            p,
            tuple(f"N{i}" for i in range(n_components)),
            tuple(f"M{i}" for i in range(n_points)),
            tuple(incidence),
        )

    def component_degrees(self) -> Counter:
        deg = Counter({c: 0 for c in self.components})
        deg.update(c for c, _ in self.incidence)
        return deg

    def point_degrees(self) -> Counter:
        deg = Counter({x: 0 for x in self.superspecial_points})
        deg.update(x for _, x in self.incidence)
        return deg

    def handshake(self) -> tuple[int, int]:
        return sum(self.component_degrees().values()), sum(self.point_degrees().values())

    def invariant_violations(self) -> list[str]:
        bad = []
        for c, d in self.component_degrees().items():
            if c not in self.boundary and d != self.p ** 2 + 1:
                bad.append(f"component {c} carries {d} superspecial points")
        for x, d in self.point_degrees().items():
            if x not in self.boundary and d != self.p + 1:
                bad.append(f"point {x} lies on {d} components")
        return bad

    def is_simple(self) -> bool:
        return len(set(self.incidence)) == len(self.incidence)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "components": list(self.components),
            "superspecial_points": list(self.superspecial_points),
            "incidence": [list(e) for e in self.incidence],
            "boundary": sorted(self.boundary),
        }

    def to_dot(self) -> str:
        lines = ["graph incidence {"]
        for c in self.components:
            lines.append(f'  "{c}" [shape=circle];')
        for x in self.superspecial_points:
            lines.append(f'  "{x}" [shape=point];')
        for c, x in self.incidence:
            lines.append(f'  "{c}" -- "{x}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def incidence_from_tree(tree: BiregularTree) -> IncidenceModel:
    def label(v):
        return f"N{v}" if tree.kinds[v] == FIRST else f"M{v}"

    comps = tuple(label(v) for v in range(tree.n_vertices) if tree.kinds[v] == FIRST)
    pts = tuple(label(v) for v in range(tree.n_vertices) if tree.kinds[v] == SECOND)
    inc = []
    for a, b in tree.edges:
        c, x = (a, b) if tree.kinds[a] == FIRST else (b, a)
        inc.append((label(c), label(x)))
    boundary = frozenset(label(v) for v in range(tree.n_vertices) if tree.is_boundary(v))
    return IncidenceModel(tree.p, comps, pts, tuple(inc), boundary)


@dataclass(frozen=True)
class SingularLocusModel:
    """Image of the E-components under the contraction: one singular point each."""

    singular_points: tuple[str, ...]
    contraction: tuple[tuple[str, str], ...]
    superspecial_points: tuple[str, ...]
    components_pairwise_disjoint: bool = True

    @property
    def size(self) -> int:
        return len(self.singular_points)

    def to_dict(self) -> dict:
        return {
            "sigma_size": self.size,
            "singular_points": list(self.singular_points),
            "contraction": dict(self.contraction),
            "superspecial_points": list(self.superspecial_points),
            "components_pairwise_disjoint": self.components_pairwise_disjoint,
        }


def contract_E(model: IncidenceModel | SingularLocusModel) -> SingularLocusModel:
    """Contract each E-component to a point of the singular locus."""
    if isinstance(model, SingularLocusModel):
        return model
    mapping = tuple((c, f"x_{c}") for c in model.components)
    return SingularLocusModel(
        tuple(x for _, x in mapping),
        mapping,
        model.superspecial_points,
        True,
    )


# -- Hecke correspondences --------------------------------------------------


class StratumA(str, enum.Enum):
    ordinary = "ordinary"
    p_rank_one = "p_rank_one"
    ss_not_superspecial = "ss_not_superspecial"
    superspecial = "superspecial"


class KernelType(str, enum.Enum):
    mu_p_x_Z_p = "mu_p×Z/p"
    I_1_1 = "I_{1,1}"
    alpha_p_x_alpha_p = "alpha_p×alpha_p"
    I_2_1_ambient = "I_{2,1}-ambient"


_KERNEL_ALIASES = {
    "mu_p_x_Z_p": KernelType.mu_p_x_Z_p,
    "I11": KernelType.I_1_1,
    "I_1_1": KernelType.I_1_1,
    "alpha_p_x_alpha_p": KernelType.alpha_p_x_alpha_p,
    "I21": KernelType.I_2_1_ambient,
    "I_2_1_ambient": KernelType.I_2_1_ambient,
}


def _kernel_type(s) -> KernelType:
    if isinstance(s, KernelType):
        return s
    return _KERNEL_ALIASES.get(s) or KernelType(s)


def fiber_card_a(stratum: StratumA | str, p: int):
    """Reduced fiber of the Klingen-to-hyperspecial map over a point of the stratum."""
    s = StratumA(stratum)
    if s is StratumA.ordinary:
        return 2 * (p + 1)
    if s is StratumA.p_rank_one:
        return 3
    if s is StratumA.ss_not_superspecial:
        return 1
    return P1_FIBER


def fiber_card_b(kernel: KernelType | str, p: int):
    """Reduced fiber of the Klingen-to-paramodular map, by ``(ker lambda)[p]``."""
    s = _kernel_type(kernel)
    if s is KernelType.mu_p_x_Z_p:
        return 2
    if s in (KernelType.I_1_1, KernelType.I_2_1_ambient):
        return 1
    return P1_FIBER


def generic_degree(correspondence: str, p: int) -> int:
    """Characteristic-zero degree: lines in F_p^4 for ``a``, in F_p^2 for ``b``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if correspondence == "a":
        return p ** 3 + p ** 2 + p + 1
    if correspondence == "b":
        return p + 1
    raise ValueError(f"unknown correspondence {correspondence!r}")


def dumps(obj) -> str:
    return json.dumps(obj.to_dict(), indent=2, sort_keys=True) + "\n"
