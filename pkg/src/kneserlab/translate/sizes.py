"""Empirical size measurements of the generated formulas."""

from __future__ import annotations

import csv
import io
import math

import numpy as np
from loguru import logger
from pydantic import BaseModel

from kneserlab.config import get_settings
from kneserlab.core import InstanceParams
from kneserlab.exceptions import InvalidParametersError
from kneserlab.translate.counting import Counter, Encoding
from kneserlab.translate.formula import And, Formula, Var, dag_size
from kneserlab.translate.gadgets import DescentGadgets, GadgetVariant, VarSource
from kneserlab.translate.kneser import kneser_formula_size


class SizeRow(BaseModel):
    n: int
    k: int
    m: int
    kneser: int
    star_node: int
    star: int
    discard_color: int
    discard_node: int
    renum_node: int
    renum_color: int
    pprime: int
    gadgets: int
    threshold_tree: int
    threshold_dag: int


class SizeReport(BaseModel):
    k: int
    variant: GadgetVariant
    encoding: str
    rows: list[SizeRow]
    kneser_exponent: float | None = None
    gadget_exponent: float | None = None

    def to_csv(self) -> str:
        buffer = io.StringIO()
        fields = list(SizeRow.model_fields)
        writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row.model_dump())
        return buffer.getvalue()


def fitted_exponent(ns: list[int], sizes: list[int]) -> float | None:
    """Slope of log(size) against log(n) by least squares."""
    if len(ns) < 2:
        return None
    xs = np.log(np.array(ns, dtype=float))
    ys = np.array([math.log(s) for s in sizes], dtype=float)
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def threshold_sizes(count: int, t: int, encoding: Encoding | None = None) -> tuple[int, int]:
    """(tree size, DAG size) of "fewer than t of ``count`` variables"."""
    xs = [Var(f"x[{i}]") for i in range(count)]
    formula = Counter(xs, encoding).less(t)
    return formula.size, dag_size(formula)


def size_report(
    k: int,
    n_list: list[int],
    variant: GadgetVariant | str = GadgetVariant.EF,
    encoding: Encoding | None = None,
) -> SizeReport:
    """Measure the Kneser formula and one descent round of gadgets for each n."""
    variant = GadgetVariant(variant)
    rows: list[SizeRow] = []
    for n in sorted(n_list):
        params = InstanceParams.kneser(n, k)
        gadgets = DescentGadgets(params, variant, encoding=encoding)
        families = gadgets.family_sizes()
        tree, dag = threshold_sizes(n, n // 2, encoding)
        rows.append(
            SizeRow(
                n=n,
                k=k,
                m=params.m,
                kneser=kneser_formula_size(n, k),
                star_node=families["star_node"],
                star=families["star"],
                discard_color=families["discard_color"],
                discard_node=families["discard_node"],
                renum_node=families["renum_node"],
                renum_color=families["renum_color"],
                pprime=families["pprime"],
                gadgets=families["total"],
                threshold_tree=tree,
                threshold_dag=dag,
            )
        )
        logger.debug("sizes n={} k={}: gadgets={}", n, k, families["total"])
    ns = [row.n for row in rows]
    return SizeReport(
        k=k,
        variant=variant,
        encoding=encoding or get_settings().translate.counting,
        rows=rows,
        kneser_exponent=fitted_exponent(ns, [row.kneser for row in rows]),
        gadget_exponent=fitted_exponent(ns, [row.gadgets for row in rows]),
    )


class RoundSize(BaseModel):
    round: int
    n: int
    m: int
    pprime: int
    gadgets: int
    dag: int


def extension_var(round_no: int, r: int, color: int) -> str:
    """Name of the extension variable standing for round ``round_no``'s p'."""
    return f"p'{round_no}[{r},{color}]"


def _extension_source(round_no: int) -> VarSource:
    def source(r: int, color: int) -> Formula:
        return Var(extension_var(round_no, r, color))

    return source


def multi_round_sizes(
    n: int,
    k: int,
    rounds: int,
    variant: GadgetVariant | str = GadgetVariant.EF,
    unwind: bool = False,
    m: int | None = None,
    encoding: Encoding | None = None,
) -> list[RoundSize]:
    """Sizes of successive descent rounds feeding each other.

    Round t reads round t-1's p' either through fresh extension variables or,
    with ``unwind``, through the p' formulas themselves.
    """
    params = InstanceParams(n=n, k=k, m=n - 2 * k + 1 if m is None else m)
    params.require_kneser()
    results: list[RoundSize] = []
    previous: DescentGadgets | None = None
    for round_no in range(1, rounds + 1):
        source: VarSource | None = None
        if previous is not None:
            source = previous.pprime if unwind else _extension_source(round_no - 1)
        try:
            gadgets = DescentGadgets(params, variant, source=source, encoding=encoding)
        except InvalidParametersError:
            break
        families = gadgets.family_sizes()
        roots = [gadgets.discard_node(i) for i in range(1, params.n + 1)]
        roots += [gadgets.discard_color(c) for c in range(1, params.m + 1)]
        dag = dag_size(And(roots)) - 1
        results.append(
            RoundSize(
                round=round_no, n=params.n, m=params.m,
                pprime=families["pprime"], gadgets=families["total"], dag=dag,
            )
        )
        previous = gadgets
        params = InstanceParams(n=gadgets.n_out, k=k, m=gadgets.m_out)
    return results
