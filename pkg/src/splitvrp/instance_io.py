"""Text format for Split instances.

Line-oriented, whitespace-separated, '#' starts a comment anywhere:

    SPLIT 1
    n Q alpha
    q_i d_prev_i d_from_depot_i d_to_depot_i      (one line per position)

Integer-valued data round-trips losslessly; other values are written with
full float precision.
"""

from __future__ import annotations

from pathlib import Path

from .model import Instance, ParseError, make_instance

_MAGIC = "SPLIT"
_VERSION = "1"


def fmt_number(x: float) -> str:
    if float(x).is_integer() and abs(x) < 2 ** 53:
        return str(int(x))
    return repr(float(x))


def write_instance(inst: Instance, path) -> None:
    lines = [f"{_MAGIC} {_VERSION}",
             f"{inst.n} {fmt_number(inst.capacity)} {fmt_number(inst.alpha)}"]
    for i in range(1, inst.n + 1):
        lines.append(f"{fmt_number(inst.demand[i])} {fmt_number(inst.dist_prev[i])} "
                     f"{fmt_number(inst.dist_from_depot[i])} "
                     f"{fmt_number(inst.dist_to_depot[i])}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _significant_lines(path):
    """Yield (lineno, tokens) for lines that carry data."""
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield lineno, line.split()


def read_instance(path) -> Instance:
    lines = iter(_significant_lines(path))

    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty file: missing 'SPLIT 1' header") from None
    if tokens != [_MAGIC, _VERSION]:
        raise ParseError(f"line {lineno}: expected '{_MAGIC} {_VERSION}' "
                         f"header, got {' '.join(tokens)!r}")

    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing 'n Q alpha' line") from None
    if len(tokens) != 3:
        raise ParseError(f"line {lineno}: expected 'n Q alpha' "
                         f"(3 values), got {len(tokens)}")
    try:
        n = int(tokens[0])
        capacity = float(tokens[1])
        alpha = float(tokens[2])
    except ValueError:
        raise ParseError(f"line {lineno}: bad number in 'n Q alpha' "
                         f"line") from None
    if n < 0:
        raise ParseError(f"line {lineno}: n must be >= 0, got {n}")

    rows = ([], [], [], [])
    for k in range(1, n + 1):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"file ends early: customer line {k} of {n} "
                             f"is missing") from None
        if len(tokens) != 4:
            raise ParseError(f"line {lineno}: customer line {k} needs 4 "
                             f"values (q d_prev d_from d_to), got "
                             f"{len(tokens)}")
        try:
            values = [float(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"line {lineno}: bad number on customer "
                             f"line {k}") from None
        for row, v in zip(rows, values):
            row.append(v)

    extra = next(lines, None)
    if extra is not None:
        raise ParseError(f"line {extra[0]}: unexpected data after "
                         f"{n} customer lines")
    return make_instance(rows[0], rows[1], rows[2], rows[3], capacity, alpha)
