"""girth-kit: girth approximation, roundtrip covers and roundtrip spanners for weighted digraphs."""

__version__ = '0.1.0'
