"""Edge colouring: Misra-Gries (Delta+1 colours) and the odd-order class-2 argument."""
from __future__ import annotations

from dataclasses import dataclass

from ..qgraph import Graph
from .certificates import EdgeColoringCertificate, verify_edge_coloring


def misra_gries(g: Graph) -> EdgeColoringCertificate:
    """Proper edge colouring with at most Delta + 1 colours (colours 0..Delta)."""
    n = g.order
    delta = max(g.degrees(), default=0)
    palette = delta + 1
    # at[v][c] = neighbour joined to v by an edge of colour c
    at: list[dict[int, int]] = [dict() for _ in range(n)]
    color: dict[tuple[int, int], int] = {}

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def free(v: int) -> int:
        used = at[v]
        for c in range(palette):
            if c not in used:
                return c
        raise AssertionError("no free colour; degree exceeds Delta")

    def is_free(v: int, c: int) -> bool:
        return c not in at[v]

    def set_color(a: int, b: int, c: int) -> None:
        old = color.get(key(a, b))
        if old is not None:
            del at[a][old]
            del at[b][old]
        color[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def uncolor(a: int, b: int) -> None:
        old = color.pop(key(a, b))
        del at[a][old]
        del at[b][old]

    for u, v in g.edges():
        # maximal fan of u starting at v
        fan = [v]
        in_fan = {v}
        extended = True
        while extended:
            extended = False
            last = fan[-1]
            for c, w in at[u].items():
                if w not in in_fan and is_free(last, c):
                    fan.append(w)
                    in_fan.add(w)
                    extended = True
                    break
        c = free(u)
        d = free(fan[-1])

        # invert the cd-path starting at u (it starts with a d-edge since c is free at u)
        if not is_free(u, d):
            path = [u]
            cur, want = u, d
            while want in at[cur]:
                nxt = at[cur][want]
                path.append(nxt)
                cur = nxt
                want = c if want == d else d
            edges_on_path = [(path[i], path[i + 1], color[key(path[i], path[i + 1])]) for i in range(len(path) - 1)]
            for a, b, _ in edges_on_path:
                uncolor(a, b)
            for a, b, col in edges_on_path:
                set_color(a, b, c if col == d else d)

        # first fan vertex w with d free such that fan[:w] is still a fan
        w_pos = None
        for i, w in enumerate(fan):
            if i > 0:
                prev = fan[i - 1]
                cw = color.get(key(u, w))
                if cw is None or not is_free(prev, cw):
                    break
            if is_free(w, d):
                w_pos = i
                break
        if w_pos is None:
            raise AssertionError("Misra-Gries invariant violated")

        # rotate the fan prefix and colour (u, w) with d
        for i in range(w_pos):
            nxt_color = color[key(u, fan[i + 1])]
            uncolor(u, fan[i + 1])
            set_color(u, fan[i], nxt_color)
        set_color(u, fan[w_pos], d)

    cert = EdgeColoringCertificate(tuple(sorted((a, b, col) for (a, b), col in color.items())))
    return cert


@dataclass(frozen=True)
class ClassOneObstruction:
    order: int
    order_odd: bool
    regular: bool
    degree: int | None
    certificate_colors: int
    certificate_valid: bool
    conclusion: str
    chromatic_index: int | None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def class_one_obstruction(g: Graph, cert: EdgeColoringCertificate | None = None) -> ClassOneObstruction:
    """Certify chi' = Delta + 1 for regular graphs of odd order.

    With Delta colours, each colour class of a Delta-regular graph would have
    to be a perfect matching, which odd order forbids.
    """
    degrees = g.degrees()
    regular = len(set(degrees)) == 1 and g.order > 0
    odd = g.order % 2 == 1
    if cert is None:
        cert = misra_gries(g)
    valid = bool(verify_edge_coloring(g, cert))
    delta = degrees[0] if regular else None
    if regular and odd and delta and valid and cert.color_count == delta + 1:
        conclusion = (
            f"each colour class of a {delta}-edge-colouring would be a perfect matching "
            f"on {g.order} (odd) vertices, impossible; the certificate uses {delta + 1} colours"
        )
        index = delta + 1
    else:
        conclusion = "obstruction inapplicable"
        index = None
    return ClassOneObstruction(g.order, odd, regular, delta, cert.color_count, valid, conclusion, index)
