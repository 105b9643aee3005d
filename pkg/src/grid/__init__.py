"""Region encodings, plane graphs and dual-graph construction."""
