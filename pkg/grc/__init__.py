"""grc: RePair grammars from plain text or directly from a straight-line program"""

__version__ = "1.0.0"
