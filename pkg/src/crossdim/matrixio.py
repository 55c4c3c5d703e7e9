"""Reading and writing matrices as text or as structured (JSON) documents.

Text form: rows separated by newlines or ``;``, entries separated by
whitespace.  An entry is an integer (``-3``), a fraction (``2/3``) or a
decimal (``0.5``), and decimals are converted exactly.

Structured form: ``{"rows": m, "cols": n, "data": [[...], ...]}`` with entries
as strings in the same grammar.  Extra keys are ignored, so the structured
output of the CLI can be fed back in.
"""
import json
import re
from fractions import Fraction

from .errors import DomainError, ParseError
from .matrix import Matrix

_INT = r"[+-]?\d+"
_TOKEN = re.compile(rf"(?P<frac>{_INT}/\d+)|(?P<dec>[+-]?(?:\d+\.\d*|\.\d+))|(?P<int>{_INT})")


def parse_entry(token, line=None, column=None):
    m = _TOKEN.fullmatch(token)
    if m is None:
        raise ParseError(f"malformed entry {token!r}", line, column)
    if m.group("frac"):
        num, den = token.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {token!r}", line, column)
        return Fraction(int(num), int(den))
    if m.group("dec"):
        sign = -1 if token.startswith("-") else 1
        whole, _, frac = token.lstrip("+-").partition(".")
        return sign * Fraction(int(whole or "0") * 10 ** len(frac) + int(frac or "0"), 10 ** len(frac))
    return Fraction(int(token))


def _parse_text(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        offset = 0
        for segment in line.split(";"):
            row = []
            for tok in re.finditer(r"\S+", segment):
                row.append(parse_entry(tok.group(), lineno, offset + tok.start() + 1))
            if row:
                if rows and len(row) != len(rows[0][1]):
                    raise ParseError(
                        f"ragged rows: expected {len(rows[0][1])} entries, found {len(row)}",
                        lineno,
                        offset + 1,
                    )
                rows.append((lineno, row))
            offset += len(segment) + 1
    if not rows:
        raise ParseError("empty matrix input", 1, 1)
    return Matrix.from_rows([r for _, r in rows])


def _parse_structured(text):
    try:
        doc = json.loads(text, parse_float=str, parse_int=str)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return document_to_matrix(doc)


def document_to_matrix(doc):
    if not isinstance(doc, dict) or "data" not in doc:
        raise ParseError("structured matrix must be an object with 'rows', 'cols' and 'data'", 1, 1)
    data = doc["data"]
    if not isinstance(data, list) or not data:
        raise ParseError("empty matrix input", 1, 1)
    rows = []
    for i, row in enumerate(data):
        if not isinstance(row, list):
            raise ParseError(f"data row {i} is not an array", 1, 1)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"ragged rows: row 0 has {len(rows[0])} entries, row {i} has {len(row)}", 1, 1)
        entries = []
        for j, e in enumerate(row):
            if not isinstance(e, str):
                raise ParseError(f"entry ({i}, {j}) must be a string or number, got {e!r}", 1, 1)
            try:
                entries.append(parse_entry(e.strip()))
            except ParseError as exc:
                raise ParseError(f"entry ({i}, {j}): {exc}", 1, 1) from None
        rows.append(entries)
    if not rows[0]:
        raise ParseError("empty matrix input", 1, 1)
    declared = (doc.get("rows"), doc.get("cols"))
    for name, want, got in (("rows", declared[0], len(rows)), ("cols", declared[1], len(rows[0]))):
        if want is not None and str(want) != str(got):
            raise ParseError(f"declared {name}={want} but data has {got}", 1, 1)
    return Matrix.from_rows(rows)


def parse_matrix(text):
    """Parse either input format into a Matrix."""
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    try:
        return _parse_text(text)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def load_matrix(arg, stdin=None):
    """Interpret a command-line operand: ``@path`` reads a file, ``@-`` reads stdin, else inline text."""
    if arg.startswith("@"):
        path = arg[1:]
        if path == "-":
            if stdin is None:
                raise ParseError("no standard input available for @-")
            text = stdin.read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc.strerror}") from None
        return parse_matrix(text)
    return parse_matrix(arg)


def format_entry(x):
    return str(x)


def format_matrix(m):
    width = max(len(format_entry(x)) for x in m.entries)
    return "\n".join(" ".join(format_entry(x).rjust(width) for x in m.row(i)) for i in range(m.rows))


def to_document(m):
    return {"rows": m.rows, "cols": m.cols, "data": [[format_entry(x) for x in m.row(i)] for i in range(m.rows)]}


def dumps_matrix(m):
    return json.dumps(to_document(m))
