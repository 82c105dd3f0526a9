import logging
from pathlib import Path
from typing import Optional

from app.core.errors import InputFormatError
from app.models.chemgraph import Family, HexCoord, StructureInput, TubuleneSpec

logger = logging.getLogger(__name__)

SUFFIXES = {
    ".benzenoid": Family.BENZENOID,
    ".tubulene": Family.TUBULENE,
    ".fullerene": Family.FULLERENE,
}


def _rows(text: str) -> list[list[int]]:
    """Integer rows of a text file; '#' starts a comment, blank lines are skipped."""
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            rows.append([int(token) for token in content.split()])
        except ValueError as e:
            raise InputFormatError(f"line {number}: expected integers, got {content!r}") from e
    return rows


class StructureRepository:
    """Reads and writes the benzenoid, tubulene and fullerene text formats.

    Benzenoid: one "q r" hexagon per line. Tubulene: "n m rings" on one line.
    Fullerene: line i lists the three neighbours of vertex i in cyclic order.
    """

    def detect_family(self, text: str, path: Optional[Path] = None) -> Family:
        """Family from the file suffix, or from the row shapes when the suffix is unknown."""
        if path is not None and path.suffix in SUFFIXES:
            return SUFFIXES[path.suffix]
        rows = _rows(text)
        if rows and all(len(row) == 2 for row in rows):
            return Family.BENZENOID
        if len(rows) == 1 and len(rows[0]) == 3:
            return Family.TUBULENE
        if rows and all(len(row) == 3 for row in rows):
            return Family.FULLERENE
        raise InputFormatError("cannot tell the input format; pass it explicitly")

    def parse(self, text: str, family: Family) -> StructureInput:
        rows = _rows(text)
        if family == Family.BENZENOID:
            bad = [row for row in rows if len(row) != 2]
            if bad:
                raise InputFormatError(f"benzenoid lines need two integers, got {bad[0]}")
            return StructureInput(family=family, hexagons=tuple(HexCoord(q, r) for q, r in rows))
        if family == Family.TUBULENE:
            if len(rows) != 1 or len(rows[0]) != 3:
                raise InputFormatError("tubulene input is a single 'n m rings' line")
            n, m, rings = rows[0]
            if rings < 1:
                raise InputFormatError(f"rings must be positive, got {rings}")
            return StructureInput(family=family, tubulene=TubuleneSpec(n, m, rings))
        return StructureInput(family=family, rotation=tuple(tuple(row) for row in rows))

    def serialize(self, structure: StructureInput, comment: Optional[str] = None) -> str:
        lines = [f"# {comment}"] if comment else []
        if structure.family == Family.BENZENOID:
            lines += [f"{h.q} {h.r}" for h in structure.hexagons]
        elif structure.family == Family.TUBULENE:
            spec = structure.tubulene
            lines.append(f"{spec.n} {spec.m} {spec.rings}")
        else:
            lines += [" ".join(str(w) for w in nbrs) for nbrs in structure.rotation]
        return "\n".join(lines) + "\n"

    def load(self, path: Path, family: Optional[Family] = None) -> StructureInput:
        try:
            text = path.read_text()
        except OSError as e:
            raise InputFormatError(f"cannot read {path}: {e.strerror}") from e
        family = family or self.detect_family(text, path)
        logger.debug(f"Loading {family.value} input from {path}")
        return self.parse(text, family)

    def save(self, path: Path, structure: StructureInput, comment: Optional[str] = None) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.serialize(structure, comment))
        logger.info(f"Wrote {structure.family.value} input to {path}")
        return path

    @staticmethod
    def file_name(name: str, family: Family) -> str:
        """File name for a preset, e.g. ``tube_2_2_1.tubulene``."""
        stem = name.replace(":", "_").replace(",", "_")
        return f"{stem}.{family.value}"
