"""causemap: an opinion observatory over comment corpora.

Pipeline: ingest line-delimited article/comment records, extract causation
frames from comment sentences, aggregate cause/effect statements into
shared-lemma belief graphs, and serve macro / micro / overlay views of the
resulting opinion landscape through a CLI and a read-only HTTP API.
"""

__version__ = "0.1.0"
