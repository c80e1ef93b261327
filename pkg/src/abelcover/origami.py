"""Square-tiled model of M_N(A).

Each element q of the deck group labels one white square q_w and one black
square q_b. White square q is glued along edge e to black square q + g_e,
with offsets

    g_T = 0,  g_R = -c_3,  g_B = -c_2 - c_3,  g_L = c_4

for the columns c_1..c_4 of A. The corners of the white square lie over
z_1 (bottom-left), z_2 (bottom-right), z_3 (top-right) and z_4 (top-left).
With these offsets the loop around z_j changes labels by exactly c_j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .errors import AbelCoverError
from .modspan import DEFAULT_CAP, ResidueVector, Subgroup, span_closure
from .presentation import Presentation, column_span

EDGES = ("T", "R", "B", "L")

# (first, second) edge around the corner over z_j: crossing the first edge
# from a white square and then the second edge from the black square moves
# the white label by g_first - g_second = c_j.
CORNER_EDGES = {1: ("B", "L"), 2: ("R", "B"), 3: ("T", "R"), 4: ("L", "T")}


class FormatError(AbelCoverError, ValueError):
    pass


@dataclass(frozen=True, order=True)
class Gluing:
    white: ResidueVector
    edge: str
    black: ResidueVector

    def line(self) -> str:
        return f"w:{self.white.label()} {self.edge} -- b:{self.black.label()} {self.edge}"


@dataclass(frozen=True)
class VertexCycle:
    branch_point: int
    corners: tuple[tuple[str, ResidueVector], ...]  # ("w" | "b", label), walk order

    def __len__(self):
        return len(self.corners)


@dataclass(frozen=True)
class SquareTiledModel:
    deck: Subgroup
    gluings: tuple[Gluing, ...]

    @property
    def modulus(self) -> int:
        return self.deck.modulus

    @property
    def degree(self) -> int:
        return len(self.deck)

    @property
    def squares(self) -> list[tuple[ResidueVector, str]]:
        return [(q, "w") for q in self.deck] + [(q, "b") for q in self.deck]

    @cached_property
    def _white_to_black(self) -> dict[tuple[ResidueVector, str], ResidueVector]:
        return {(g.white, g.edge): g.black for g in self.gluings}

    @cached_property
    def _black_to_white(self) -> dict[tuple[ResidueVector, str], ResidueVector]:
        return {(g.black, g.edge): g.white for g in self.gluings}

    def across(self, color: str, label: ResidueVector, edge: str) -> ResidueVector:
        """Label of the square on the other side of ``edge``."""
        if color == "w":
            return self._white_to_black[(label, edge)]
        return self._black_to_white[(label, edge)]

    @cached_property
    def vertex_cycles(self) -> tuple[VertexCycle, ...]:
        return vertex_cycles(self)


def edge_offsets(P: Presentation) -> dict[str, ResidueVector]:
    c1, c2, c3, c4 = P.columns
    zero = c1 - c1
    return {"T": zero, "R": -c3, "B": -(c2 + c3), "L": c4}


def build_model(P: Presentation, cap: int = DEFAULT_CAP) -> SquareTiledModel:
    deck = column_span(P, cap)
    g = edge_offsets(P)
    cols = P.columns
    for j, (first, second) in CORNER_EDGES.items():
        assert g[first] - g[second] == cols[j - 1], f"monodromy around z_{j} is not c_{j}"
    gluings = tuple(Gluing(q, e, q + g[e]) for q in deck for e in EDGES)
    return SquareTiledModel(deck, gluings)


def vertex_cycles(model: SquareTiledModel) -> tuple[VertexCycle, ...]:
    """Corner orbits, one family per branch point.

    Each square has one corner over each z_j, so a corner is identified by
    (color, label, j). The walk alternates white and black squares; a cycle
    over z_j contains 2 * order(c_j) corners.
    """
    cycles = []
    for j, (first, second) in CORNER_EDGES.items():
        seen = set()
        for start in model.deck:
            if start in seen:
                continue
            corners = []
            q = start
            while True:
                seen.add(q)
                corners.append(("w", q))
                b = model.across("w", q, first)
                corners.append(("b", b))
                q = model.across("b", b, second)
                if q == start:
                    break
            cycles.append(VertexCycle(j, tuple(corners)))
    return tuple(cycles)


def euler_characteristic(model: SquareTiledModel) -> int:
    d = model.degree
    return len(model.vertex_cycles) - 4 * d + 2 * d


def translate(model: SquareTiledModel, h: ResidueVector) -> frozenset[Gluing]:
    """Gluing set after adding the deck element ``h`` to every label."""
    return frozenset(Gluing(g.white + h, g.edge, g.black + h) for g in model.gluings)


def monodromy(model: SquareTiledModel, j: int) -> ResidueVector:
    """Label change of a white square after one loop around z_j."""
    first, second = CORNER_EDGES[j]
    q = model.deck.elements[0]
    b = model.across("w", q, first)
    return model.across("b", b, second) - q


# -- serialization ----------------------------------------------------------

def to_dict(model: SquareTiledModel) -> dict:
    return {
        "N": model.modulus,
        "degree": model.degree,
        "deck": [list(q.entries) for q in model.deck],
        "gluings": [
            {"white": list(g.white.entries), "edge": g.edge, "black": list(g.black.entries)}
            for g in model.gluings
        ],
        "vertex_cycles": [
            {
                "branch_point": c.branch_point,
                "corners": [[color, list(q.entries)] for color, q in c.corners],
            }
            for c in model.vertex_cycles
        ],
    }


def export(model: SquareTiledModel, format: str = "edge-list") -> str:
    if format == "edge-list":
        return "".join(g.line() + "\n" for g in model.gluings)
    if format == "json":
        return json.dumps(to_dict(model), indent=2) + "\n"
    raise FormatError(f"unknown export format {format!r} (expected 'edge-list' or 'json')")


def _model_from_gluings(modulus: int, gluings: list[Gluing]) -> SquareTiledModel:
    if not gluings:
        raise FormatError("no gluings found")
    labels = {g.white for g in gluings}
    deck = span_closure(labels, modulus=modulus, dimension=len(next(iter(labels))))
    if set(deck.elements) != labels:
        raise FormatError("square labels do not form a group")
    by_key = {(g.white, g.edge): g for g in gluings}
    if len(by_key) != len(gluings) or len(by_key) != 4 * len(deck):
        raise FormatError("gluings are not a perfect matching of white edges")
    ordered = tuple(by_key[(q, e)] for q in deck for e in EDGES)
    blacks = {(g.black, g.edge) for g in ordered}
    if len(blacks) != len(ordered) or any(b not in deck for b, _ in blacks):
        raise FormatError("gluings are not a perfect matching of black edges")
    return SquareTiledModel(deck, ordered)


def _parse_label(text: str, modulus: int) -> ResidueVector:
    return ResidueVector(modulus, tuple(int(x) for x in text.split(",")))


def from_edge_list(text: str, modulus: int) -> SquareTiledModel:
    """Inverse of ``export(model, "edge-list")``; the modulus is not in the text."""
    gluings = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            left, right = line.split(" -- ")
            wlab, e1 = left.split()
            blab, e2 = right.split()
            if not (wlab.startswith("w:") and blab.startswith("b:")) or e1 != e2 or e1 not in EDGES:
                raise ValueError
            gluings.append(
                Gluing(_parse_label(wlab[2:], modulus), e1, _parse_label(blab[2:], modulus))
            )
        except ValueError as exc:
            raise FormatError(f"line {lineno}: cannot parse gluing {line!r}") from exc
    return _model_from_gluings(modulus, gluings)


def from_json(text: str) -> SquareTiledModel:
    data = json.loads(text)
    n = data["N"]
    gluings = [
        Gluing(ResidueVector(n, tuple(g["white"])), g["edge"], ResidueVector(n, tuple(g["black"])))
        for g in data["gluings"]
    ]
    return _model_from_gluings(n, gluings)
