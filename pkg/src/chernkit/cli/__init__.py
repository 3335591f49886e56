"""Input language, command runner and entry point of the ``chernkit`` tool."""

from .main import main
from .parser import Document, ParseError, format_document, parse
from .runner import Report, RunOptions, run

__all__ = ["Document", "ParseError", "Report", "RunOptions", "format_document", "main", "parse", "run"]
