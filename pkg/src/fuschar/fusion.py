"""Element-level fusion data on a finite p-group S: the partition of S into
fusion classes, fully centralised representatives and their S-centralizer
orders.  Fusion comes from an overgroup, from merging classes of a base
partition, or (table mode) from explicit class data without any group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import Cyclotomic
from .groups import FiniteGroup, class_fusion_map, conjugacy_classes
from .intlinalg import is_prime, p_part


@dataclass(frozen=True)
class FusionClass:
    s_class_indices: tuple[int, ...]
    rep: object
    rep_order: int
    centralizer_order: int
    size: int


@dataclass
class FusionData:
    S: FiniteGroup
    p: int
    classes: list[FusionClass]
    provenance: str
    saturation_certified: bool
    sylow_in_overgroup: bool | None = None
    _class_of_s_class: dict = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_of_element(self, x) -> int:
        sc = conjugacy_classes(self.S)
        return self._class_of_s_class[sc.class_index_of(self.S, x)]


def _build_classes(S: FiniteGroup, groups: list[list[int]]) -> list[FusionClass]:
    """Assemble fusion classes from groups of S-class indices.

    The representative maximises |C_S| over the class (ties broken by the
    canonical element order), which is the fully-centralised choice.
    """
    sc = conjugacy_classes(S)
    out = []
    for grp in groups:
        best = min(grp, key=lambda i: (sc.classes[i].size, sc.classes[i].rep.encoding()))
        rep = sc.classes[best].rep
        out.append(FusionClass(
            s_class_indices=tuple(sorted(grp)),
            rep=rep,
            rep_order=sc.classes[best].rep_order,
            centralizer_order=sc.classes[best].centralizer_order,
            size=sum(sc.classes[i].size for i in grp),
        ))
    out.sort(key=lambda c: (c.size, c.rep_order, c.rep.encoding()))
    return out


def _finalise(S: FiniteGroup, p: int, groups: list[list[int]], provenance: str,
              certified: bool, sylow: bool | None = None) -> FusionData:
    classes = _build_classes(S, groups)
    fd = FusionData(S, p, classes, provenance, certified, sylow)
    for ci, fc in enumerate(classes):
        for si in fc.s_class_indices:
            fd._class_of_s_class[si] = ci
    # identity must be a singleton class and the partition must cover S
    assert fd.classes[0].size == 1 and fd.classes[0].rep_order == 1
    assert sum(c.size for c in fd.classes) == S.order
    return fd


def fusion_from_group(G: FiniteGroup, S: FiniteGroup, p: int) -> FusionData:
    """Fusion of S induced by G-conjugacy; classes are G-classes met with S."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if S.order != p_part(S.order, p):
        raise ValueError("S must be a p-group")
    if not S.is_subgroup_of(G):
        raise ValueError("S must be a subgroup of G")
    fusion = class_fusion_map(G, S)
    by_g_class: dict[int, list[int]] = {}
    for s_idx, g_idx in enumerate(fusion):
        by_g_class.setdefault(g_idx, []).append(s_idx)
    sylow = S.order == p_part(G.order, p)
    return _finalise(S, p, list(by_g_class.values()), "group", certified=sylow,
                     sylow=sylow)


def fusion_of_self(S: FiniteGroup, p: int) -> FusionData:
    return fusion_from_group(S, S, p)


def apply_merges(base: FusionData, merges: list[tuple]) -> FusionData:
    """Finest coarsening of `base` putting each merge pair in a common class.

    Pairs are elements of S of equal order.  Because element fusion is
    induced by injective homomorphisms, merging x with y also merges x^k
    with y^k for every k; the closure keeps the partition power-closed,
    which is what guarantees rank(stable lattice) = class count downstream.
    The result is not certified saturated.
    """
    parent = list(range(base.k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(a, b) -> None:
        ra, rb = find(base.class_of_element(a)), find(base.class_of_element(b))
        if ra != rb:
            parent[ra] = rb

    for a, b in merges:
        if a not in base.S.index or b not in base.S.index:
            raise ValueError("merge elements must lie in S")
        order_a = base.S.element_order(a)
        if order_a != base.S.element_order(b):
            raise ValueError("fused elements must have equal order")
        xa, xb = a, b
        for _ in range(order_a):
            union(xa, xb)
            xa, xb = xa * a, xb * b
    grouped: dict[int, list[int]] = {}
    for ci, fc in enumerate(base.classes):
        grouped.setdefault(find(ci), []).extend(fc.s_class_indices)
    return _finalise(base.S, base.p, list(grouped.values()),
                     f"merged({base.provenance})", certified=False,
                     sylow=base.sylow_in_overgroup)


def full_merge(base: FusionData) -> FusionData:
    """Merge all non-identity classes (the transitive partition)."""
    nontrivial = [c.rep for c in base.classes if c.rep_order > 1]
    merges = [(nontrivial[0], x) for x in nontrivial[1:]]
    return apply_merges(base, merges)


def fully_centralised_reps(F: FusionData) -> list[tuple]:
    """Ordered (rep, |C_S(rep)|) pairs, one per fusion class."""
    return [(c.rep, c.centralizer_order) for c in F.classes]


def centralizer_product(F: FusionData) -> int:
    prod = 1
    for c in F.classes:
        prod *= c.centralizer_order
    return prod


# -- table mode ----------------------------------------------------------------


@dataclass
class TableFusion:
    """Fusion data given by explicit class data instead of a group.

    `basis_values[i][j]` is the value of the i-th basis virtual character at
    the j-th class of the base partition; merging the listed label groups
    produces the fusion partition to verify.
    """

    p: int
    group_order: int
    labels: list[str]
    class_sizes: list[int]
    centralizer_orders: list[int]
    basis_values: list[list[Cyclotomic]]
    merge_groups: list[list[int]]  # groups of column indices to identify
    name: str = "table-mode"

    def __post_init__(self) -> None:
        k = len(self.labels)
        if not (len(self.class_sizes) == len(self.centralizer_orders) == k):
            raise ValueError("inconsistent table-mode class data")
        if any(len(row) != k for row in self.basis_values):
            raise ValueError("basis value matrix must be square over the classes")
        if sum(self.class_sizes) != self.group_order:
            raise ValueError("class sizes must sum to the group order")

    def merged_partition(self) -> list[list[int]]:
        merged = set()
        groups = []
        for grp in self.merge_groups:
            groups.append(sorted(grp))
            merged.update(grp)
        for j in range(len(self.labels)):
            if j not in merged:
                groups.append([j])
        groups.sort(key=lambda g: (sum(self.class_sizes[j] for j in g), g))
        return groups

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "group_order": self.group_order,
            "labels": list(self.labels),
            "class_sizes": list(self.class_sizes),
            "centralizer_orders": list(self.centralizer_orders),
            "basis_values": [[v.to_json() for v in row] for row in self.basis_values],
            "merge_groups": [list(g) for g in self.merge_groups],
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TableFusion":
        return cls(
            p=int(data["p"]),
            group_order=int(data["group_order"]),
            labels=[str(x) for x in data["labels"]],
            class_sizes=[int(x) for x in data["class_sizes"]],
            centralizer_orders=[int(x) for x in data["centralizer_orders"]],
            basis_values=[[Cyclotomic.from_json(v) for v in row]
                          for row in data["basis_values"]],
            merge_groups=[[int(j) for j in g] for g in data["merge_groups"]],
            name=str(data.get("name", "table-mode")),
        )
