"""Write every catalog graph as JSON and DOT, plus its surgery trace per cut.

    python scripts/render_catalog.py --out figures/
    neato -n -Tpng figures/square-loop.dot -o square-loop.png
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from gridstates.catalog import NAMED, SQUARE_LOOP_STITCHES
from gridstates.classify import classify
from gridstates.formats import export_dot, serialize_graph
from gridstates.graph import all_cuts, flatten
from gridstates.surgery import product_span_bound, surgery_terminals


@dataclass
class RenderConfig:
    out: Path
    max_lines: int = 200


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    parser.add_argument("--max-lines", type=int, default=200)
    cfg = RenderConfig(**vars(parser.parse_args()))
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, gen in NAMED.items():
        G = gen().graph
        (cfg.out / f"{name}.json").write_bytes(serialize_graph(G))
        (cfg.out / f"{name}.dot").write_text(export_dot(G))
        stitch = SQUARE_LOOP_STITCHES if name == "square-loop" else ()
        lines = [f"{name}: {classify(G).label.value}"]
        for cut in all_cuts(G.nparties):
            terminals, trace = surgery_terminals(flatten(G, cut), stitch=stitch)
            lines.append(f"cut {cut}: span bound {product_span_bound(terminals)}")
            lines.append(trace.render(cfg.max_lines))
        (cfg.out / f"{name}.trace.txt").write_text("\n".join(lines) + "\n")
        print(lines[0])


if __name__ == "__main__":
    main()
