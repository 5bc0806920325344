"""Tensor reflections, reflection closure, and Cartan-graph axioms.

A reflection at index l sends alpha_j to alpha_j - c_{l,j} alpha_l and
acts on a degree-d tensor through the d-th tensor power; on
sqrt-exponents the action is linear, so the closure of a tensor under
all reflections is computed exactly.  Objects are deduplicated by exact
equality of sqrt-exponent tensors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    AxiomViolation,
    InvalidArguments,
    ObjectLimitExceeded,
    OddDegreeError,
)
from .lattice import GammaVector, SqrtBraidingTensor
from .rosso import DEFAULT_M_MAX, GeneralizedCartanMatrix, cartan_matrix

DEFAULT_MAX_OBJECTS = 100000


def _sigma_columns(rank, l, c_row):
    """Per-basis-index expansion of the reflection at l.

    Returns, for each 1-based index i, the support of sigma_l(alpha_i)
    as ((basis index, coefficient), ...).
    """
    if len(c_row) != rank:
        raise InvalidArguments("Cartan row has wrong length")
    if c_row[l - 1] != 2:
        raise InvalidArguments("Cartan row must have 2 at the reflecting index")
    cols = {}
    for i in range(1, rank + 1):
        if i == l:
            cols[i] = ((l, -1),)
        else:
            c = c_row[i - 1]
            if c > 0:
                raise InvalidArguments("off-diagonal Cartan entries must be <= 0")
            terms = [(i, 1)]
            if c != 0:
                terms.append((l, -c))
            cols[i] = tuple(terms)
    return cols


def reflect(
    tensor: SqrtBraidingTensor, l: int, c_row
) -> SqrtBraidingTensor:
    """Reflected tensor: sqrt-exponents transformed by the tensor power.

    The new exponent at (i_1..i_d) is the pairing of the old exponents
    with the expansion of sigma_l(alpha_{i_1}) x .. x sigma_l(alpha_{i_d}),
    at most 2^d terms per entry, all mod M.
    """
    if not 1 <= l <= tensor.rank:
        raise InvalidArguments(f"index {l} out of range 1..{tensor.rank}")
    cols = _sigma_columns(tensor.rank, l, tuple(c_row))
    d = tensor.degree
    flat = []
    for out in tensor.index_tuples():
        total = 0
        for combo in itertools.product(*(cols[i] for i in out)):
            coeff = 1
            for _, kappa in combo:
                coeff *= kappa
            total += coeff * tensor.entry(tuple(b for b, _ in combo))
        flat.append(total % tensor.modulus)
    return SqrtBraidingTensor(tensor.rank, d, tensor.datum, flat)


def reflect_in_gamma_basis(
    v: GammaVector, l: int, j: int, c_row, rank: int = 2
) -> GammaVector:
    """Image of a gamma vector under the tensor-power reflection.

    Expands the vector into the full tensor basis over {l, j}-tuples,
    applies the reflection coordinatewise, and recollects; the image must
    again be constant on aggregate orbits, which is asserted.
    """
    cols = _sigma_columns(rank, l, tuple(c_row))
    d = v.degree
    image = {}
    for tup in itertools.product((l, j), repeat=d):
        k = sum(1 for i in tup if i == j)
        coeff = v.doubled[k]
        if not coeff:
            continue
        for combo in itertools.product(*(cols[i] for i in tup)):
            kappa = coeff
            for _, c in combo:
                kappa *= c
            key = tuple(b for b, _ in combo)
            image[key] = image.get(key, 0) + kappa
    out = [0] * (d + 1)
    seen = [False] * (d + 1)
    for tup, coeff in image.items():
        if coeff == 0:
            continue
        if any(i not in (l, j) for i in tup):
            raise InvalidArguments("reflection left the two-index span")
        k = sum(1 for i in tup if i == j)
        if seen[k] and out[k] != coeff:
            raise InvalidArguments("image is not constant on aggregate orbits")
        out[k] = coeff
        seen[k] = True
    return GammaVector(d, tuple(out))


@dataclass(frozen=True)
class CartanGraphObject:
    tensor: SqrtBraidingTensor
    cartan: GeneralizedCartanMatrix

    @property
    def key(self):
        return self.tensor.key()


@dataclass
class CartanGraph:
    rank: int
    objects: dict = field(default_factory=dict)  # key -> CartanGraphObject
    edges: dict = field(default_factory=dict)  # (key, i) -> key
    start: tuple = None

    def object_list(self):
        return list(self.objects.values())

    def neighbor(self, key, i):
        return self.edges[(key, i)]

    def __len__(self):
        return len(self.objects)


def generate_cartan_graph(
    tensor: SqrtBraidingTensor,
    m_max: int = DEFAULT_M_MAX,
    max_objects: int = DEFAULT_MAX_OBJECTS,
    validate: bool = True,
) -> CartanGraph:
    """Breadth-first closure of a tensor under all reflections.

    Deterministic: objects are explored in insertion order and
    reflections in index order.  Raises UndefinedCartanEntry if some
    object has no Cartan matrix within m_max and ObjectLimitExceeded if
    the closure grows past max_objects.

    The Cartan-graph axioms are asserted on the result; a violation
    raises AxiomViolation.  Violations are possible: the vanishing
    condition is preserved across a reflection at m = -c, but for degree
    >= 4 nothing forbids an earlier vanishing on the reflected tensor,
    and some tensors realize that (pass validate=False to inspect such a
    closure anyway).
    """
    if tensor.degree % 2 != 0:
        raise OddDegreeError(
            f"groupoid generation needs even degree, got {tensor.degree}"
        )
    graph = CartanGraph(rank=tensor.rank, start=tensor.key())
    queue = [tensor]
    graph.objects[tensor.key()] = CartanGraphObject(
        tensor, cartan_matrix(tensor, m_max)
    )
    head = 0
    while head < len(queue):
        current = queue[head]
        head += 1
        obj = graph.objects[current.key()]
        for i in range(1, graph.rank + 1):
            image = reflect(current, i, obj.cartan.row(i))
            key = image.key()
            if key not in graph.objects:
                if len(graph.objects) >= max_objects:
                    raise ObjectLimitExceeded(
                        f"closure exceeded {max_objects} objects"
                    )
                graph.objects[key] = CartanGraphObject(
                    image, cartan_matrix(image, m_max)
                )
                queue.append(image)
            graph.edges[(current.key(), i)] = key
    if validate:
        report = validate_axioms(graph)
        if not report.ok:
            raise AxiomViolation(report.failures())
    return graph


@dataclass
class AxiomReport:
    checks: list = field(default_factory=list)  # (label, ok, detail)

    def record(self, label, ok, detail=""):
        self.checks.append((label, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    def failures(self):
        return [(label, detail) for label, ok, detail in self.checks if not ok]


def validate_axioms(graph: CartanGraph) -> AxiomReport:
    """Itemized check of the matrix and graph axioms.

    M1/M2 per object (diagonal 2, off-diagonal <= 0, symmetric zero
    pattern); per edge, the reflection is an involution (C1) and the
    reflecting row of the Cartan matrix is preserved (C2).
    """
    report = AxiomReport()
    for pos, obj in enumerate(graph.object_list()):
        rows = obj.cartan.rows
        m1 = all(
            rows[i][i] == 2
            and all(rows[i][j] <= 0 for j in range(graph.rank) if j != i)
            for i in range(graph.rank)
        )
        report.record(f"M1 object {pos}", m1)
        m2 = all(
            (rows[i][j] == 0) == (rows[j][i] == 0)
            for i in range(graph.rank)
            for j in range(graph.rank)
        )
        report.record(f"M2 object {pos}", m2)
    index = {key: pos for pos, key in enumerate(graph.objects)}
    for (key, i), target in sorted(
        graph.edges.items(), key=lambda kv: (index[kv[0][0]], kv[0][1])
    ):
        pos = index[key]
        back = graph.edges.get((target, i))
        report.record(
            f"C1 object {pos} index {i}",
            back == key,
            detail="reflection is not an involution",
        )
        here = graph.objects[key].cartan
        there = graph.objects[target].cartan
        report.record(
            f"C2 object {pos} index {i}",
            all(
                here.entry(i, j) == there.entry(i, j)
                for j in range(1, graph.rank + 1)
            ),
            detail="Cartan row changed across the edge",
        )
    return report


@dataclass(frozen=True)
class DynkinDiagram:
    """Vertex labels are mu-exponents of diagonal values, edges carry the
    mu-exponent of the mixed product; edges only where that is nonzero."""

    modulus: int
    vertex_labels: tuple
    edges: tuple  # ((i, j, exponent), ...) with 1-based i < j


def dynkin_diagram(tensor: SqrtBraidingTensor) -> DynkinDiagram:
    if tensor.degree != 2:
        raise InvalidArguments("Dynkin diagrams are defined for degree 2 only")
    M = tensor.modulus
    n = tensor.rank
    vertices = tuple(2 * tensor.entry((i, i)) % M for i in range(1, n + 1))
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = 2 * (tensor.entry((i, j)) + tensor.entry((j, i))) % M
            if e != 0:
                edges.append((i, j, e))
    return DynkinDiagram(M, vertices, tuple(edges))
