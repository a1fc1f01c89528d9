#!/usr/bin/env python3
"""Write every connected graph of order 1..7 (one per isomorphism class) as graph6.

Uses the networkx graph atlas, which lists all 1253 graphs on at most 7 vertices.
Usage: gen_connected_g6.py [max_n] > connected.g6
"""
import sys

import networkx as nx


def main() -> None:
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    if max_n > 7:
        sys.exit("graph atlas only covers orders up to 7")
    out = sys.stdout
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(g):
            continue
        out.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")


if __name__ == "__main__":
    main()
