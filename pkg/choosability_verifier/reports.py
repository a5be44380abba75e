"""
Report builders shared by the command line and the HTTP API
"""
from typing import Optional

from .configs import match_all, match_config, summarize
from .graph.embedding import EmbeddedGraph
from .graph.neighbors import base_class, neighbor_classification
from .models import ClassifyReport, ConfigId, FaceInfo, FacesReport, MatchReport


def faces_report(g: EmbeddedGraph) -> FacesReport:
    faces = [FaceInfo(index=f.index, degree=f.degree, vertices=list(g.face_vertices(f))) for f in g.faces]
    return FacesReport(
        vertices=len(g),
        edges=g.num_edges,
        euler_characteristic=len(g) - g.num_edges + len(faces),
        faces=faces,
    )


def classify_report(g: EmbeddedGraph, u: int, v: int) -> ClassifyReport:
    g.require_edge(u, v)
    cls = neighbor_classification(g, u, v)
    _, witness = base_class(g, u, v)
    return ClassifyReport(u=u, v=v, base=cls.base, special=cls.special, witness_faces=witness)


def match_report(g: EmbeddedGraph, config: Optional[ConfigId] = None) -> MatchReport:
    if config is None:
        found = match_all(g)
    else:
        found = {config: match_config(g, config)}
    return MatchReport(
        summary=summarize(found),
        matches=[m for matches in found.values() for m in matches],
    )
