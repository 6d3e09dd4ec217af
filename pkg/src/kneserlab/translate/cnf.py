"""CNF instances, DIMACS interchange and solving through pysat."""

from __future__ import annotations

import io
import re
from pathlib import Path

from loguru import logger
from pydantic import BaseModel, Field
from pysat.formula import CNF
from pysat.solvers import Solver

from kneserlab.coloring import Coloring
from kneserlab.config import get_settings
from kneserlab.core import kneser_edges, vertex_index
from kneserlab.exceptions import ColoringFormatError, InvalidParametersError
from kneserlab.translate.kneser import kneser_instance, kneser_var

_NAME_LINE = re.compile(r"^c var (\d+) (\S+)$")


class Cnf(BaseModel):
    """Clauses over dense variable ids 1..num_vars with a name table."""

    num_vars: int
    clauses: list[list[int]]
    names: dict[str, int] = Field(default_factory=dict)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def var(self, name: str) -> int:
        return self.names[name]

    def to_pysat(self) -> CNF:
        cnf = CNF(from_clauses=self.clauses)
        cnf.nv = max(cnf.nv, self.num_vars)
        cnf.comments = [f"c var {vid} {name}" for name, vid in sorted(self.names.items(), key=lambda x: x[1])]
        return cnf

    def to_dimacs(self) -> str:
        buffer = io.StringIO()
        self.to_pysat().to_fp(buffer)
        return buffer.getvalue()

    def write(self, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_dimacs(), encoding="utf-8")
        return path

    @classmethod
    def from_dimacs(cls, text: str) -> Cnf:
        try:
            cnf = CNF(from_string=text)
        except Exception as exc:  # pysat raises plain exceptions on bad input
            raise ColoringFormatError(f"cannot parse DIMACS text: {exc}") from exc
        names: dict[str, int] = {}
        for comment in cnf.comments:
            if match := _NAME_LINE.match(comment.strip()):
                names[match.group(2)] = int(match.group(1))
        num_vars = max([cnf.nv, *names.values()], default=0)
        header = re.search(r"^p cnf (\d+) (\d+)", text, flags=re.MULTILINE)
        if header:
            num_vars = max(num_vars, int(header.group(1)))
        return cls(num_vars=num_vars, clauses=[list(c) for c in cnf.clauses], names=names)

    @classmethod
    def read(cls, path: Path) -> Cnf:
        try:
            return cls.from_dimacs(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ColoringFormatError(f"cannot read {path}: {exc}") from exc


class SolveResult(BaseModel):
    satisfiable: bool
    model: list[int] | None = None


def solve_cnf(cnf: Cnf, solver: str | None = None) -> SolveResult:
    """Run a pysat solver (``translate.solver`` by default) on ``cnf``."""
    name = solver or get_settings().translate.solver
    with Solver(name=name, bootstrap_with=cnf.clauses) as engine:
        satisfiable = bool(engine.solve())
        model = engine.get_model() if satisfiable else None
    logger.debug("{} on {} vars / {} clauses: sat={}", name, cnf.num_vars, cnf.num_clauses, satisfiable)
    return SolveResult(satisfiable=satisfiable, model=list(model) if model else None)


def kneser_cnf(n: int, k: int, m: int | None = None) -> Cnf:
    """Clauses whose models are exactly the proper m-colorings (up to extra colors).

    p[r, i] has id r * m + i. Vertex clauses come first in rank order, then
    one binary clause per edge and color in edge order.
    """
    params, m = kneser_instance(n, k, m)
    if m < 1:
        raise InvalidParametersError(f"need m >= 1, got m={m}")
    index = vertex_index(n, k)
    size = len(index)
    names = {kneser_var(r, i): r * m + i for r in range(size) for i in range(1, m + 1)}
    clauses = [[r * m + i for i in range(1, m + 1)] for r in range(size)]
    for s, t in kneser_edges(params):
        rs, rt = index.ranks[s], index.ranks[t]
        clauses.extend([-(rs * m + i), -(rt * m + i)] for i in range(1, m + 1))
    return Cnf(num_vars=size * m, clauses=clauses, names=names)


def decode_kneser_model(n: int, k: int, m: int, model: list[int]) -> Coloring:
    """Give every vertex the least color whose variable is true in ``model``."""
    true_ids = {lit for lit in model if lit > 0}
    colors = []
    for r in range(len(vertex_index(n, k))):
        color = next((i for i in range(1, m + 1) if r * m + i in true_ids), None)
        if color is None:
            raise InvalidParametersError(f"model leaves vertex of rank {r} uncolored")
        colors.append(color)
    return Coloring(n=n, k=k, m=m, colors=tuple(colors))
