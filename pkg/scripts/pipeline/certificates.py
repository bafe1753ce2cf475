"""
Сертификаты конвейера: правильная раскраска в пределах оценки или
индуцированная копия T_{r,k}. Проверки и JSON-представление общие для
конвейера и команды verify.
"""
import json
import logging
from dataclasses import dataclass, field

from scripts.errors import InputError, VerificationError
from scripts.geometry.boxes import Pattern
from scripts.graphs.graph_core import Coloring
from scripts.graphs.trees import make_trk, trk_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProperColoring:
    coloring: Coloring
    bound: int
    per_pattern: dict = field(default_factory=dict)
    omega: int = None
    paper_bound: int = None

    kind = "coloring"


@dataclass(frozen=True)
class InducedTree:
    """tree - T_{r,k}, phi - вершина дерева -> id бокса"""
    tree: object
    phi: dict
    r: int
    k: int
    omega: int = None

    kind = "induced_tree"


@dataclass(frozen=True)
class Violation:
    message: str
    witness: tuple


def coloring_violations(g, coloring, bound=None):
    problems = []
    for v, c in sorted(coloring.color.items()):
        if not 0 <= c < coloring.palette_size:
            problems.append(Violation(f"цвет {c} вершины {v} вне палитры 0..{coloring.palette_size - 1}", (v,)))
    for v in sorted(set(g.nodes) - set(coloring.color)):
        problems.append(Violation(f"вершина {v} без цвета", (v,)))
    for u, v in sorted(tuple(sorted(e)) for e in g.edges()):
        if u not in coloring.color or v not in coloring.color:
            continue
        if coloring.color[u] == coloring.color[v]:
            problems.append(Violation(f"ребро {u}-{v}: оба конца цвета {coloring.color[u]}", (u, v)))
    if bound is not None and coloring.palette_size > bound:
        problems.append(Violation(f"палитра {coloring.palette_size} превышает оценку {bound}", ()))
    return problems


def induced_tree_violations(g, tree, phi):
    """
    Попарная проверка: вершины дерева смежны в T тогда и только тогда,
    когда их образы смежны в g
    """
    image = [phi[v] for v in tree.vertices]
    if len(set(image)) != len(image):
        return [Violation("отображение дерева не инъективно", tuple(image))]

    tree_edges = {frozenset(arc) for arc in tree.arcs()}
    problems = []
    vertices = tree.vertices
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            in_tree = frozenset((a, b)) in tree_edges
            in_graph = g.has_edge(phi[a], phi[b])
            if in_tree and not in_graph:
                problems.append(Violation(
                    f"ребро дерева {a}-{b}: боксы {phi[a]} и {phi[b]} не пересекаются", (phi[a], phi[b])))
            elif in_graph and not in_tree:
                problems.append(Violation(
                    f"хорда: боксы {phi[a]} и {phi[b]} пересекаются, вершины {a} и {b} в дереве не соседние",
                    (phi[a], phi[b])))
    return problems


def _check_vertex_sets(g, cert):
    nodes = set(g.nodes)
    if cert.kind == "coloring":
        colored = set(cert.coloring.color)
        if colored != nodes:
            raise InputError(f"раскраска задана на {len(colored)} вершинах, в графе {len(nodes)}")
    else:
        missing = sorted(set(cert.phi.values()) - nodes)
        if missing:
            raise InputError(f"сертификат ссылается на отсутствующие боксы {missing[:5]}")


def certificate_violations(g, cert):
    _check_vertex_sets(g, cert)
    if cert.kind == "coloring":
        return coloring_violations(g, cert.coloring, cert.bound)
    return induced_tree_violations(g, cert.tree, cert.phi)


def verify_certificate(g, cert):
    """Проверка сертификата на графе g; VerificationError с первым нарушением"""
    problems = certificate_violations(g, cert)
    if problems:
        first = problems[0]
        raise VerificationError(first.message, witness=first.witness)
    logger.debug("Сертификат %s прошёл проверку", cert.kind)


def certificate_to_json(cert):
    if cert.kind == "coloring":
        data = {
            "kind": "coloring",
            "palette": cert.coloring.palette_size,
            "bound": cert.bound,
            "colors": {str(v): cert.coloring.color[v] for v in sorted(cert.coloring.color)},
        }
        if cert.omega is not None:
            data["omega"] = cert.omega
        if cert.paper_bound is not None:
            data["paper_bound"] = cert.paper_bound
        if cert.per_pattern:
            data["per_pattern"] = {p.label: size for p, size in sorted(cert.per_pattern.items())}
    else:
        data = {
            "kind": "induced_tree",
            "r": cert.r,
            "k": cert.k,
            "map": {str(v): cert.phi[v] for v in cert.tree.vertices},
        }
        if cert.omega is not None:
            data["omega"] = cert.omega
    return json.dumps(data, indent=2) + "\n"


def _int(value, what):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InputError(f"{what}: '{value}' не целое число") from None


def certificate_from_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"некорректный JSON сертификата: {e}") from None
    if not isinstance(data, dict):
        raise InputError("сертификат должен быть JSON-объектом")

    kind = data.get("kind")
    if kind == "coloring":
        try:
            colors = {_int(v, "вершина"): _int(c, "цвет") for v, c in data["colors"].items()}
            palette = _int(data["palette"], "palette")
            bound = _int(data["bound"], "bound")
        except (KeyError, AttributeError):
            raise InputError("в сертификате раскраски нужны ключи palette, bound, colors") from None
        per_pattern = {Pattern.from_label(label): _int(size, label)
                       for label, size in data.get("per_pattern", {}).items()}
        return ProperColoring(Coloring(colors, palette), bound, per_pattern,
                              omega=data.get("omega"), paper_bound=data.get("paper_bound"))

    if kind == "induced_tree":
        try:
            r, k = _int(data["r"], "r"), _int(data["k"], "k")
            phi = {_int(v, "вершина дерева"): _int(b, "бокс") for v, b in data["map"].items()}
        except (KeyError, AttributeError):
            raise InputError("в сертификате дерева нужны ключи r, k, map") from None
        if r < 0 or k < 1:
            raise InputError(f"нужно r >= 0 и k >= 1, получено r={r}, k={k}")
        # размер дерева сверяется до его построения
        size = trk_size(r, k)
        if len(phi) != size:
            raise InputError(f"map должно покрывать ровно {size} вершин T_{{{r},{k}}}, получено {len(phi)}")
        tree = make_trk(r, k)
        if set(phi) != set(tree.vertices):
            raise InputError(f"map должно покрывать ровно {tree.n} вершин T_{{{r},{k}}}")
        return InducedTree(tree, phi, r, k, omega=data.get("omega"))

    raise InputError(f"неизвестный вид сертификата '{kind}'")
