"""
Plain-text dump of an IneqSystem.

    kind m nu k r [N]
    m lines of nu integers (B, row-major)
    one line of m integers (c)

Integers are written in decimal, so a dump reproduces the system exactly.
"""
import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from algebra.errors import AlgebraError
from polyhedra.linsys import IneqSystem, SystemKind

logger = logging.getLogger(__name__)


class DumpFormatError(AlgebraError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def dumps(sys: IneqSystem) -> str:
    header = [sys.kind.value, sys.m, sys.nu, sys.k, sys.r]
    if sys.kind is SystemKind.SAT:
        header.append(sys.sat_n)
    lines = [" ".join(str(v) for v in header)]
    lines.extend(" ".join(str(v) for v in row) for row in sys.B)
    lines.append(" ".join(str(v) for v in sys.c))
    return "\n".join(lines) + "\n"


def write_dump(sys: IneqSystem, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps(sys), encoding="utf-8")
    logger.info(f"Wrote {sys.kind.value} system ({sys.m}x{sys.nu}) to {path}")


def _ints(text: str, line: int, expected: int) -> List[int]:
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError:
        raise DumpFormatError(f"non-integer entry in {text!r}", line) from None
    if len(values) != expected:
        raise DumpFormatError(f"expected {expected} integers, got {len(values)}", line)
    return values


def loads(text: str) -> IneqSystem:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DumpFormatError("empty dump", 1)

    head = lines[0].split()
    try:
        kind = SystemKind(head[0])
    except (IndexError, ValueError):
        raise DumpFormatError(f"unknown kind in header {lines[0]!r}", 1) from None
    arity = 6 if kind is SystemKind.SAT else 5
    m, nu, k, r, *rest = _ints(" ".join(head[1:]), 1, arity - 1)

    if len(lines) != m + 2:
        raise DumpFormatError(
            f"expected {m} rows of B and one row of c, got {len(lines) - 1} lines", len(lines)
        )
    B = tuple(tuple(_ints(lines[1 + i], 2 + i, nu)) for i in range(m))
    c = tuple(_ints(lines[m + 1], m + 2, m))
    try:
        return IneqSystem(
            kind=kind, r=r, k=k, m=m, nu=nu, B=B, c=c, sat_n=rest[0] if rest else None
        )
    except ValidationError as e:
        raise DumpFormatError(f"inconsistent system: {e.errors()[0]['msg']}", 1) from e


def read_dump(path: Union[str, Path]) -> IneqSystem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise DumpFormatError("not a text dump", 1) from e
    return loads(text)
