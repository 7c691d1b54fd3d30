"""Word-representability and 1-11-representability of graphs: deciders,
representant searches, a certificate-producing prover and its checker."""

__version__ = "0.1.0"
