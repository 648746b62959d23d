"""bibracket: exact q-series algebra for bi-brackets."""

__version__ = "0.1.0"
