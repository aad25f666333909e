"""graph6 and edge-list readers/writers, and DOT export."""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ng_chromatic.graph import Graph, GraphError, edges, from_edges, pair_table
from ng_chromatic.types import Assignment

GRAPH6_HEADER = ">>graph6<<"

# Short-form graph6 encodes the order in a single byte.
GRAPH6_MAX_ORDER = 62

_FIRST_PRINTABLE = 63
_LAST_PRINTABLE = 126


class Graph6Error(ValueError):
    """Raised for malformed graph6 records."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class UnsupportedFormatError(Graph6Error):
    """Raised for valid but unsupported graph6 variants (long form)."""


class EdgeListError(ValueError):
    """Raised for malformed edge-list input."""


def graph6_length(n: int) -> int:
    """Length of the short-form record for order ``n``."""
    return 1 + (n * (n - 1) // 2 + 5) // 6


def parse_graph6(record: str, line: Optional[int] = None) -> Graph:
    """Decode one short-form graph6 record.

    Surrounding whitespace and a leading ``>>graph6<<`` header are ignored.

    Raises:
        UnsupportedFormatError: For long-form records (order above 62).
        Graph6Error: For bytes outside 63..126, a truncated or over-long
            payload, or non-zero padding bits.
    """
    text = record.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record", line)
    for position, char in enumerate(text):
        if not _FIRST_PRINTABLE <= ord(char) <= _LAST_PRINTABLE:
            raise Graph6Error(
                f"byte {ord(char)} at offset {position} is outside the range 63-126", line
            )
    if ord(text[0]) == _LAST_PRINTABLE:
        raise UnsupportedFormatError(
            "long-form graph6 (order above 62) is not supported", line
        )

    n = ord(text[0]) - _FIRST_PRINTABLE
    expected = graph6_length(n)
    if len(text) < expected:
        raise Graph6Error(
            f"truncated payload: order {n} needs {expected} bytes, got {len(text)}", line
        )
    if len(text) > expected:
        raise Graph6Error(
            f"trailing bytes: order {n} needs {expected} bytes, got {len(text)}", line
        )

    pairs = pair_table(n)
    selected = []
    bit = 0
    for char in text[1:]:
        value = ord(char) - _FIRST_PRINTABLE
        for shift in range(5, -1, -1):
            if value >> shift & 1:
                if bit >= len(pairs):
                    raise Graph6Error("non-zero padding bits", line)
                selected.append(pairs[bit])
            bit += 1
    return from_edges(n, selected)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a short-form graph6 record (no header, no newline).

    Raises:
        UnsupportedFormatError: If the order is above 62.
    """
    if g.order > GRAPH6_MAX_ORDER:
        raise UnsupportedFormatError(
            f"order {g.order} needs long-form graph6, which is not supported"
        )
    chars = [chr(g.order + _FIRST_PRINTABLE)]
    value = 0
    filled = 0
    for u, v in pair_table(g.order):
        value = value << 1 | (g.rows[v] >> u & 1)
        filled += 1
        if filled == 6:
            chars.append(chr(value + _FIRST_PRINTABLE))
            value = filled = 0
    if filled:
        chars.append(chr((value << (6 - filled)) + _FIRST_PRINTABLE))
    return "".join(chars)


def read_graph6_stream(source: Union[str, Iterable[str]]) -> Iterator[Tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each record in a graph6 stream.

    Blank lines are skipped; an optional ``>>graph6<<`` header is consumed
    once, at the start of the stream. Errors carry the 1-based line number.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    first = True
    for number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if first and text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
            if not text:
                first = False
                continue
        first = False
        yield number, parse_graph6(text, line=number)


def _is_index(token: str) -> bool:
    # str.isdigit also accepts superscripts and other non-ASCII digits
    return token.isascii() and token.isdigit()


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (0-based).

    Blank lines and lines starting with ``#`` are ignored.

    Raises:
        EdgeListError: On a malformed line, an out-of-range index or a loop.
    """
    n: Optional[int] = None
    pairs = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n" or not _is_index(fields[1]):
                raise EdgeListError(f"line {number}: expected 'n <count>', got '{line}'")
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(_is_index(f) for f in fields):
            raise EdgeListError(f"line {number}: expected 'u v', got '{line}'")
        u, v = int(fields[0]), int(fields[1])
        if u >= n or v >= n:
            raise EdgeListError(f"line {number}: vertex index out of range 0..{n - 1}")
        if u == v:
            raise EdgeListError(f"line {number}: loop at vertex {u}")
        pairs.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n <count>' header line")
    try:
        return from_edges(n, pairs)
    except GraphError as e:
        raise EdgeListError(str(e)) from e


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.order}"]
    lines.extend(f"{u} {v}" for u, v in edges(g))
    return "\n".join(lines) + "\n"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    g: Graph,
    labels: Optional[Sequence[str]] = None,
    coloring: Optional[Assignment] = None,
    name: str = "G",
) -> str:
    """Render ``g`` as an undirected DOT document.

    Vertices are declared in index order and each edge appears once. With
    ``coloring`` (1-based colors, e.g. a certificate) vertices are filled
    from a 12-colour Brewer scheme, cycling past 12 colours.

    Raises:
        ValueError: If ``labels`` does not have one entry per vertex.
    """
    if labels is not None and len(labels) != g.order:
        raise ValueError(f"Expected {g.order} labels, got {len(labels)}")
    lines: List[str] = [f"graph {_quote(name)} {{"]
    if coloring:
        lines.append('  node [style=filled, colorscheme="set312"];')
    for v in range(g.order):
        attributes = []
        if labels is not None:
            attributes.append(f"label={_quote(labels[v])}")
        if coloring and v in coloring:
            attributes.append(f"fillcolor={(coloring[v] - 1) % 12 + 1}")
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        lines.append(f"  {v}{suffix};")
    for u, v in edges(g):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
