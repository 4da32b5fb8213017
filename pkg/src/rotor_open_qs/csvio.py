"""CSV output: one '#' metadata line, a header row, 12-significant-digit
numbers, written atomically (temp file then rename) so reruns are
byte-identical and never leave partial files."""

from __future__ import annotations

import os
import tempfile


def format_number(x) -> str:
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, (int,)):
        return str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def metadata_line(params: dict) -> str:
    parts = []
    for key in sorted(params):
        value = params[key]
        if isinstance(value, (list, tuple)):
            value = "[" + " ".join(format_number(v) for v in value) + "]"
        elif value is None:
            value = "none"
        else:
            value = format_number(value)
        parts.append(f"{key}={value}")
    return "# " + " ".join(parts)


def write_csv(path: str, header: list[str], rows: list[list], params: dict) -> None:
    text_rows = [metadata_line(params), ",".join(header)]
    for row in rows:
        text_rows.append(",".join(format_number(x) for x in row))
    payload = "\n".join(text_rows) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
