"""planlearn: graph encodings of classical planning tasks, message-passing
heuristic learning, greedy best-first search, and expressiveness checks."""

__version__ = "0.1.0"
