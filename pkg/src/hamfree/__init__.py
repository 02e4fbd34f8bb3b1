"""Small-graph engine for hamiltonicity under forbidden disconnected subgraphs."""
