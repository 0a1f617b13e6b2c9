from .formats import (
    format_coloring,
    format_graph,
    format_lists,
    parse_coloring,
    parse_graph,
    parse_lists,
    read_coloring,
    read_graph,
    read_lists,
    read_text,
    write_text,
)

__all__ = [
    "format_coloring",
    "format_graph",
    "format_lists",
    "parse_coloring",
    "parse_graph",
    "parse_lists",
    "read_coloring",
    "read_graph",
    "read_lists",
    "read_text",
    "write_text",
]
