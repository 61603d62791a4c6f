from ._spg import (
    Diagram,
    Embedding,
    GeometryError,
    Graph,
    InputError,
    a2,
    canonical,
    catalog,
    graph,
    linking_number,
    random_linear_embedding,
    search,
    twist_embedding,
    wu_rank,
)

__all__ = [
    "Diagram",
    "Embedding",
    "GeometryError",
    "Graph",
    "InputError",
    "a2",
    "canonical",
    "catalog",
    "graph",
    "linking_number",
    "random_linear_embedding",
    "search",
    "twist_embedding",
    "wu_rank",
]
