"""Plain-text and SVG drawings of the objects."""

from __future__ import annotations

from .bijections import family_of
from .grid import Dims, all_edges, endpoints, is_vertex
from .objects import OsculatingNest, PartialFpl, PartialLinkPattern, RectIce, path_points
from .poset import OrderIdeal


def _matrix_text(rows) -> str:
    width = max((len(str(x)) for r in rows for x in r), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows) + "\n"


def _grid_canvas(dims: Dims) -> list[list[str]]:
    H, W = 2 * (dims.m + 1) + 1, 4 * (dims.n + 1) + 1
    canvas = [[" "] * W for _ in range(H)]
    for i in range(dims.m + 2):
        for j in range(dims.n + 2):
            if is_vertex(dims, (i, j)):
                canvas[2 * i][4 * j] = "+"
    return canvas


def _draw_edge(canvas: list[list[str]], e, glyphs=("---", "|")) -> None:
    kind, i, j = e
    if kind == "H":
        for k, ch in enumerate(glyphs[0]):
            canvas[2 * i][4 * j + 1 + k] = ch
    else:
        canvas[2 * i + 1][4 * j] = glyphs[1]


def _canvas_text(canvas: list[list[str]]) -> str:
    return "\n".join("".join(r).rstrip() for r in canvas) + "\n"


def fpl_ascii(F: PartialFpl) -> str:
    canvas = _grid_canvas(F.dims)
    for e in sorted(F.edges):
        _draw_edge(canvas, e)
    return _canvas_text(canvas)


def ice_ascii(I: RectIce) -> str:
    canvas = _grid_canvas(I.dims)
    for e in all_edges(I.dims):
        fwd = e in I.forward
        _draw_edge(canvas, e, ("->-" if fwd else "-<-", "v" if fwd else "^"))
    return _canvas_text(canvas)


def nest_ascii(N: OsculatingNest) -> str:
    m, n = N.dims.m, N.dims.n
    rows, cols = 2 * m - 1, 4 * n - 3
    canvas = [["."] * cols if r % 2 == 0 else [" "] * cols for r in range(rows)]
    for r in range(0, rows, 2):
        for c in range(cols):
            if c % 4:
                canvas[r][c] = " "
    for start, steps in N.paths:
        pts = path_points(start, steps)
        for (r1, c1), (r2, c2) in zip(pts, pts[1:]):
            if r1 == r2:
                for k in range(1, 4):
                    canvas[2 * (r1 - 1)][4 * (c1 - 1) + k] = "-"
            else:
                canvas[2 * r1 - 1][4 * (c1 - 1)] = "|"
        for r, c in pts:
            canvas[2 * (r - 1)][4 * (c - 1)] = "o"
    border = "+" + "-" * (cols + 2) + "+"
    body = ["| " + "".join(r) + " |" for r in canvas]
    return "\n".join([border, *body, border]) + "\n"


def _arc_levels(arcs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    level: dict[tuple[int, int], int] = {}
    for a, b in sorted(arcs, key=lambda x: x[1] - x[0]):
        inner = [level[x] for x in level if a < x[0] and x[1] < b]
        level[(a, b)] = 1 + max(inner, default=0)
    return level


def link_pattern_ascii(P: PartialLinkPattern) -> str:
    L = P.size
    arcs = sorted(P.arcs)
    level = _arc_levels(arcs)
    top = max(level.values(), default=0)
    width = 4 * L
    lines = []
    for lv in range(top, 0, -1):
        row = [" "] * width
        for (a, b), l in level.items():
            xa, xb = 4 * (a - 1) + 1, 4 * (b - 1) + 1
            if l == lv:
                row[xa] = row[xb] = "+"
                for x in range(xa + 1, xb):
                    row[x] = "-"
            elif l > lv:
                row[xa] = row[xb] = "|"
        lines.append("".join(row).rstrip())
    matched = P.matching()
    stubs = [" "] * width
    for k in range(1, L + 1):
        stubs[4 * (k - 1) + 1] = "|" if k in matched else "'"
    lines.append("".join(stubs).rstrip())
    lines.append("".join(str(k).center(4) for k in range(1, L + 1)).rstrip())
    return "\n".join(lines) + "\n"


def ideal_ascii(X: OrderIdeal) -> str:
    """One block per layer k: '#' where ``(a, b, k)`` is in the ideal, '.'
    where it is a poset element outside the ideal."""
    m, n = X.dims.m, X.dims.n
    blocks = []
    for k in range(min(m, n)):
        lines = [f"k={k}"]
        for a in range(m):
            row = []
            for b in range(n):
                if a < k or b < k:
                    row.append(" ")
                else:
                    row.append("#" if X.heights[a][b] > k else ".")
            lines.append(" ".join(row).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_ascii(obj) -> str:
    kind = family_of(obj)
    if kind in ("pasm", "corner_sum", "height"):
        return _matrix_text(obj.entries)
    if kind == "triangle":
        w = max(len(r) for r in obj.rows)
        return "\n".join((" " * (2 * (w - len(r)))) + "   ".join(str(x) for x in r) for r in obj.rows) + "\n"
    if kind == "fpl":
        return fpl_ascii(obj)
    if kind == "ice":
        return ice_ascii(obj)
    if kind == "ideal":
        return ideal_ascii(obj)
    if kind == "nest":
        return nest_ascii(obj)
    return link_pattern_ascii(obj)


# --- SVG ----------------------------------------------------------------------

_STEP = 40
_PAD = 20


def _svg(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _xy(v) -> tuple[int, int]:
    i, j = v
    return _PAD + _STEP * j, _PAD + _STEP * i


def _grid_svg(dims: Dims, heavy) -> str:
    body = []
    for e in all_edges(dims):
        (x1, y1), (x2, y2) = map(_xy, endpoints(e))
        style = 'stroke="black" stroke-width="4"' if e in heavy else 'stroke="#ccc" stroke-width="1"'
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" {style}/>')
    for i in range(dims.m + 2):
        for j in range(dims.n + 2):
            if is_vertex(dims, (i, j)):
                x, y = _xy((i, j))
                body.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
    w = 2 * _PAD + _STEP * (dims.n + 1)
    h = 2 * _PAD + _STEP * (dims.m + 1)
    return _svg(w, h, body)


def ice_svg(I: RectIce) -> str:
    body = [
        '<defs><marker id="head" markerWidth="8" markerHeight="8" refX="8" refY="4" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z" fill="black"/></marker></defs>'
    ]
    for e in all_edges(I.dims):
        (x1, y1), (x2, y2) = _xy(I.tail(e)), _xy(I.head(e))
        # stop short of the head vertex so the arrowhead stays visible
        x2, y2 = x1 + (x2 - x1) * 3 // 4, y1 + (y2 - y1) * 3 // 4
        body.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" marker-end="url(#head)"/>')
    w = 2 * _PAD + _STEP * (I.dims.n + 1)
    h = 2 * _PAD + _STEP * (I.dims.m + 1)
    return _svg(w, h, body)


def nest_svg(N: OsculatingNest) -> str:
    m, n = N.dims.m, N.dims.n
    body = []
    for r in range(1, m + 1):
        for c in range(1, n + 1):
            x, y = _xy((r - 1, c - 1))
            body.append(f'<circle cx="{x}" cy="{y}" r="2" fill="#999"/>')
    for start, steps in N.paths:
        pts = " ".join(f"{_xy((r - 1, c - 1))[0]},{_xy((r - 1, c - 1))[1]}" for r, c in path_points(start, steps))
        body.append(f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="3"/>')
    return _svg(2 * _PAD + _STEP * (n - 1), 2 * _PAD + _STEP * (m - 1), body)


def link_pattern_svg(P: PartialLinkPattern) -> str:
    L = P.size
    base = _PAD + _STEP * max(1, L // 2 + 1)
    body = []
    for k in range(1, L + 1):
        x = _PAD + _STEP * (k - 1)
        body.append(f'<circle cx="{x}" cy="{base}" r="3" fill="black"/>')
        body.append(f'<text x="{x}" y="{base + 16}" text-anchor="middle" font-size="12">{k}</text>')
    for a, b in sorted(P.arcs):
        xa, xb = _PAD + _STEP * (a - 1), _PAD + _STEP * (b - 1)
        r = (xb - xa) // 2
        body.append(f'<path d="M {xa} {base} A {r} {r} 0 0 1 {xb} {base}" fill="none" stroke="black" stroke-width="2"/>')
    for k in range(1, L + 1):
        if P.partner(k) is None:
            x = _PAD + _STEP * (k - 1)
            body.append(f'<line x1="{x}" y1="{base}" x2="{x}" y2="{base - _STEP // 3}" stroke="black" stroke-width="2"/>')
    return _svg(2 * _PAD + _STEP * max(L - 1, 1), base + _PAD + 10, body)


def render_svg(obj) -> str:
    kind = family_of(obj)
    if kind == "fpl":
        return _grid_svg(obj.dims, obj.edges)
    if kind == "ice":
        return ice_svg(obj)
    if kind == "nest":
        return nest_svg(obj)
    if kind == "link_pattern":
        return link_pattern_svg(obj)
    # matrix-like objects: a text table
    rows = {
        "pasm": lambda o: o.entries,
        "corner_sum": lambda o: o.entries,
        "height": lambda o: o.entries,
        "triangle": lambda o: o.rows,
        "ideal": lambda o: o.heights,
    }[kind](obj)
    body = []
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            body.append(f'<text x="{_PAD + 30 * j}" y="{_PAD + 24 * (i + 1)}" font-size="16">{x}</text>')
    w = 2 * _PAD + 30 * max(len(r) for r in rows)
    return _svg(w, 2 * _PAD + 24 * (len(rows) + 1), body)
