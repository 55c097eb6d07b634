import io

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.lines import Line2D
from matplotlib.patches import Polygon

from akdual.config import default_configuration
from akdual.core_diagram import admissible_chains, marked_order, polygon, relation_polygon
from akdual.dual import build_dual

POINTS_PER_INCH = 72
MARGIN = 2


def _layout(pattern, config):
    """x/y coordinates of every marked point on every curve, in SVG units."""
    strand = config['diagram_strand_pitch']
    pitch = config['diagram_point_pitch']
    curves = [marked_order(pattern, p) for p in pattern.vertices]
    coords = {}
    for curve in curves:
        y = (pattern.n - curve.index + 1) * strand
        for k, pt in enumerate(curve.points):
            coords[(curve.index, pt)] = (MARGIN * pitch + k * pitch, y)
    return curves, coords


def _outline(word, coords):
    """Closed path along the edges of a polygon word, stepping between strands at the vertices."""
    path = []
    for edge in word.edges:
        path.append(coords[(edge.curve, edge.start)])
        path.append(coords[(edge.curve, edge.end)])
    return path


def render_svg(pattern, config=None):
    """Schematic core diagram: one strand per curve with its marked points in order, shaded
    relation polygons and outlined admissible-chain polygons. Byte-identical for equal inputs.
    """
    if config is None:
        config = default_configuration()
    strand = config['diagram_strand_pitch']
    pitch = config['diagram_point_pitch']
    curves, coords = _layout(pattern, config)
    width = (2 * MARGIN + max(len(c.points) for c in curves) - 1) * pitch
    height = (pattern.n + 2) * strand

    with plt.rc_context({'svg.hashsalt': config['diagram_hashsalt'], 'svg.fonttype': 'none'}):
        fig = plt.figure(figsize=(width / POINTS_PER_INCH, height / POINTS_PER_INCH),
                         dpi=POINTS_PER_INCH)
        ax = fig.add_axes([0, 0, 1, 1])
        ax.set_xlim(0, width)
        ax.set_ylim(height, 0)
        ax.set_axis_off()

        for curve in curves:
            xs = [coords[(curve.index, pt)][0] for pt in curve.points]
            y = coords[(curve.index, curve.root)][1]
            line = Line2D([xs[0], xs[-1]], [y, y], color='#435058', lw=1.5, zorder=10)
            line.set_gid("curve-%d" % curve.index)
            ax.add_line(line)
            ax.text(pitch / 2, y, "S%d" % curve.index, ha="center", va="center", size=9)
            ax.plot(xs[0], y, color='#435058', marker='s', markersize=4, zorder=12)

        # each intersection point: its copy on the upper curve, the lower curve, and a connector
        for curve in curves:
            for pt in curve.plain_side:
                j, i = pt
                upper, lower = coords[(j, pt)], coords[(i, pt)]
                marker = Line2D([upper[0], lower[0]], [upper[1], lower[1]], color='#0FA3B1',
                                lw=0.5, linestyle='dotted', marker='o', markersize=3, zorder=20)
                marker.set_gid("pt-%d-%d" % (j, i))
                ax.add_line(marker)

        for j in range(1, pattern.m + 1):
            patch = Polygon(_outline(relation_polygon(pattern, j), coords), closed=True,
                            facecolor="#82b7b7", edgecolor="none", alpha=0.5, zorder=5)
            patch.set_gid("poly-rel-%d" % j)
            ax.add_patch(patch)

        for chain in admissible_chains(pattern, build_dual(pattern)):
            patch = Polygon(_outline(polygon(pattern, chain.vertices), coords), closed=True,
                            fill=False, edgecolor='#F77936', lw=1.0, linestyle='dashed', zorder=15)
            patch.set_gid("poly-chain-%s" % "-".join(str(v) for v in chain.vertices))
            ax.add_patch(patch)

        buf = io.BytesIO()
        fig.savefig(buf, format='svg', metadata={'Date': None})
        plt.close(fig)
    return buf.getvalue()
