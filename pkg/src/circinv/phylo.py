"""Distance matrices over genome collections, neighbour joining, PHYLIP/Newick I/O."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .lift import pair_distance
from .perm import CircularArrangement

__all__ = [
    "PhyloFormatError",
    "DistanceMatrix",
    "Node",
    "PhyloTree",
    "build_matrix",
    "neighbor_joining",
    "write_newick",
    "read_phylip",
    "write_phylip",
    "yersinia_fixture",
    "YERSINIA_LABELS",
    "YERSINIA_DISTANCES",
]

SYMMETRY_TOL = 1e-9


class PhyloFormatError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        values = np.array(self.values, dtype=float)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)
        n = len(labels)
        if n < 3:
            raise PhyloFormatError(f"need at least 3 taxa, got {n}")
        if any(not name for name in labels):
            raise PhyloFormatError("taxon labels must be non-empty")
        if len(set(labels)) != n:
            raise PhyloFormatError("duplicate taxon labels")
        if values.shape != (n, n):
            raise PhyloFormatError(f"matrix shape {values.shape} does not match {n} labels")
        if not np.allclose(values, values.T, rtol=0, atol=SYMMETRY_TOL):
            raise PhyloFormatError("matrix is not symmetric")
        if np.any(np.diag(values) != 0):
            raise PhyloFormatError("matrix diagonal is not zero")
        if np.any(values < 0):
            raise PhyloFormatError("negative distance")
        values.flags.writeable = False

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, key: tuple[str, str]) -> float:
        a, b = key
        return float(self.values[self.labels.index(a), self.labels.index(b)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.values, other.values)

    def reordered(self, labels: Sequence[str]) -> "DistanceMatrix":
        idx = [self.labels.index(x) for x in labels]
        return DistanceMatrix(tuple(labels), self.values[np.ix_(idx, idx)])


@dataclass
class Node:
    name: str | None = None
    length: float = 0.0
    children: list["Node"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> Iterator["Node"]:
        if self.is_leaf:
            yield self
        for child in self.children:
            yield from child.leaves()


@dataclass
class PhyloTree:
    """Unrooted tree, stored hanging from a basal internal node."""

    root: Node

    def leaf_names(self) -> list[str]:
        return [leaf.name for leaf in self.root.leaves()]

    def edges(self) -> Iterator[tuple[Node, Node]]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            for child in node.children:
                yield node, child
                stack.append(child)

    def splits(self) -> dict[frozenset[str], float]:
        """Bipartitions keyed by the side not containing the first leaf name.

        Pendant edges are included; edges joining the same bipartition
        (around a degree-2 root) have their lengths summed.
        """
        names = sorted(self.leaf_names())
        everything = frozenset(names)
        anchor = names[0]
        out: dict[frozenset[str], float] = {}
        for _, child in self.edges():
            side = frozenset(leaf.name for leaf in child.leaves())
            if anchor in side:
                side = everything - side
            if not side or side == everything:
                continue
            out[side] = out.get(side, 0.0) + child.length
        return out

    def topology(self) -> frozenset[frozenset[str]]:
        return frozenset(self.splits())

    def is_cherry(self, a: str, b: str) -> bool:
        """True iff leaves ``a`` and ``b`` hang from the same internal vertex."""
        for node in [self.root, *(c for _, c in self.edges())]:
            names = {c.name for c in node.children if c.is_leaf}
            if a in names and b in names:
                return True
        return False


def build_matrix(genomes: Sequence[tuple[str, CircularArrangement]]) -> DistanceMatrix:
    if len(genomes) < 3:
        raise PhyloFormatError(f"need at least 3 genomes, got {len(genomes)}")
    names = [name for name, _ in genomes]
    if len(set(names)) != len(names):
        raise PhyloFormatError("duplicate genome names")
    sizes = {g.n for _, g in genomes}
    if len(sizes) != 1:
        raise PhyloFormatError(f"genomes have different region counts: {sorted(sizes)}")
    k = len(genomes)
    values = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            d = pair_distance(genomes[i][1], genomes[j][1])
            values[i, j] = values[j, i] = d
    assert np.array_equal(values, values.T) and not np.any(np.diag(values))
    return DistanceMatrix(tuple(names), values)


def _clamp(length: float, label: str) -> float:
    if length < 0:
        warnings.warn(f"negative branch length {length:g} for {label} clamped to 0")
        return 0.0
    return length


def neighbor_joining(matrix: DistanceMatrix) -> PhyloTree:
    """Saitou-Nei neighbour joining.

    Joins the pair minimizing the Q-criterion (ties: lowest row, then
    column), places the new node last, and finishes with a three-way star.
    Negative branch lengths are clamped to zero with a warning.
    """
    d = np.array(matrix.values, dtype=float)
    nodes = [Node(name) for name in matrix.labels]
    while len(nodes) > 3:
        r = len(nodes)
        totals = d.sum(axis=1)
        q = (r - 2) * d - totals[:, None] - totals[None, :]
        iu, ju = np.triu_indices(r, k=1)
        best = int(np.argmin(q[iu, ju]))
        i, j = int(iu[best]), int(ju[best])
        li = 0.5 * d[i, j] + (totals[i] - totals[j]) / (2 * (r - 2))
        lj = d[i, j] - li
        a, b = nodes[i], nodes[j]
        a.length = _clamp(li, a.name or "internal node")
        b.length = _clamp(lj, b.name or "internal node")
        joined = Node(None, 0.0, [a, b])
        new_row = 0.5 * (d[i] + d[j] - d[i, j])
        keep = [k for k in range(r) if k not in (i, j)]
        reduced = np.zeros((r - 1, r - 1))
        reduced[:-1, :-1] = d[np.ix_(keep, keep)]
        reduced[-1, :-1] = reduced[:-1, -1] = new_row[keep]
        d = reduced
        nodes = [nodes[k] for k in keep] + [joined]
    x, y, z = nodes
    lx = 0.5 * (d[0, 1] + d[0, 2] - d[1, 2])
    ly = 0.5 * (d[0, 1] + d[1, 2] - d[0, 2])
    lz = 0.5 * (d[0, 2] + d[1, 2] - d[0, 1])
    for node, length in ((x, lx), (y, ly), (z, lz)):
        node.length = _clamp(length, node.name or "internal node")
    return PhyloTree(Node(None, 0.0, [x, y, z]))


_NEWICK_SPECIAL = set(" ():;,[]'\t\n")


def _newick_label(name: str) -> str:
    if any(c in _NEWICK_SPECIAL for c in name):
        return "'" + name.replace("'", "''") + "'"
    return name


def _newick_node(node: Node) -> str:
    if node.is_leaf:
        text = _newick_label(node.name or "")
    else:
        text = "(" + ",".join(_newick_node_with_length(c) for c in node.children) + ")"
        if node.name:
            text += _newick_label(node.name)
    return text


def _newick_node_with_length(node: Node) -> str:
    return f"{_newick_node(node)}:{node.length:.6g}"


def write_newick(tree: PhyloTree) -> str:
    return _newick_node(tree.root) + ";"


def _format_distance(x: float) -> str:
    if float(x).is_integer():
        return str(int(x))
    return repr(float(x))


def write_phylip(matrix: DistanceMatrix) -> str:
    width = max(10, max(len(name) for name in matrix.labels))
    lines = [f"{len(matrix)}"]
    for name, row in zip(matrix.labels, matrix.values):
        lines.append(name.ljust(width) + " " + " ".join(_format_distance(x) for x in row))
    return "\n".join(lines) + "\n"


def read_phylip(text: str) -> DistanceMatrix:
    """Parse square PHYLIP distances: a count line, then name + row per taxon."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise PhyloFormatError("empty PHYLIP input")
    try:
        count = int(lines[0].split()[0])
    except (ValueError, IndexError):
        raise PhyloFormatError(f"bad taxon count line {lines[0]!r}") from None
    rows = lines[1:]
    if len(rows) != count:
        raise PhyloFormatError(f"expected {count} rows, found {len(rows)}")
    labels, values = [], []
    for line in rows:
        fields = line.split()
        if len(fields) != count + 1:
            raise PhyloFormatError(
                f"row for {fields[0]!r} has {len(fields) - 1} values, expected {count}"
            )
        labels.append(fields[0])
        try:
            values.append([float(x) for x in fields[1:]])
        except ValueError:
            raise PhyloFormatError(f"non-numeric distance in row {fields[0]!r}") from None
    return DistanceMatrix(tuple(labels), np.array(values))


# Pairwise minimal two-region inversion distances among eight Yersinia genomes.
YERSINIA_LABELS = (
    "KIM",
    "ANTIQUA",
    "MICROTUS",
    "CO92",
    "NEPAL516",
    "PESTOIDES",
    "Yp_IP31758",
    "Yp_IP32953",
)
YERSINIA_DISTANCES = (
    (0, 233, 738, 188, 334, 515, 758, 738),
    (233, 0, 750, 319, 449, 664, 719, 712),
    (738, 750, 0, 745, 659, 809, 695, 706),
    (188, 319, 745, 0, 366, 595, 697, 760),
    (334, 449, 659, 366, 0, 659, 641, 759),
    (515, 664, 809, 595, 659, 0, 753, 695),
    (758, 719, 695, 697, 641, 753, 0, 589),
    (738, 712, 706, 760, 759, 695, 589, 0),
)


def yersinia_fixture() -> DistanceMatrix:
    return DistanceMatrix(YERSINIA_LABELS, np.array(YERSINIA_DISTANCES, dtype=float))
