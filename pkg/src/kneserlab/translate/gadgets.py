"""Formulas describing one descent round over the variables p[r, color].

Every family is built lazily and cached, so formulas that mention the same
Star, DiscardColor or DiscardNode share one node. The ``ef`` variant
discards the first star-shaped class only; the ``frege`` variant discards
the first ceil(n/2k) of them, selected with threshold formulas.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from enum import Enum
from itertools import product

from kneserlab.core import InstanceParams, Vertex, vertex_index
from kneserlab.descent import discard_count
from kneserlab.exceptions import InvalidParametersError
from kneserlab.translate.counting import Counter, Encoding
from kneserlab.translate.formula import FALSE, And, Formula, Not, Or, Var, conj, disj
from kneserlab.translate.kneser import kneser_var

VarSource = Callable[[int, int], Formula]


class GadgetVariant(str, Enum):
    EF = "ef"
    FREGE = "frege"


def default_source(r: int, color: int) -> Formula:
    return Var(kneser_var(r, color))


class DescentGadgets:
    """Star, DiscardColor, DiscardNode, RenumNode, RenumColor and p' for one round.

    Args:
        params: Instance (n, k, m) the round starts from.
        variant: ``ef`` (one color and node) or ``frege`` (ceil(n/2k) of each).
        source: Formula standing for "vertex of rank r has color c"; plain
            variables by default, or the previous round's p' when unwinding.
        encoding: Counting encoding for the frege thresholds.
    """

    def __init__(
        self,
        params: InstanceParams,
        variant: GadgetVariant | str = GadgetVariant.EF,
        source: VarSource | None = None,
        encoding: Encoding | None = None,
    ) -> None:
        self.params = params
        self.n, self.k, self.m = params.n, params.k, params.m
        self.variant = GadgetVariant(variant)
        self.d = 1 if self.variant is GadgetVariant.EF else discard_count(self.n, self.k)
        self.n_out = self.n - self.d
        self.m_out = self.m - self.d
        if self.n_out < self.k or self.m_out < 1:
            raise InvalidParametersError(
                f"a {self.variant.value} round on {params.label} leaves nothing to color"
            )
        self.source = source or default_source
        self.encoding = encoding
        self.index = vertex_index(self.n, self.k)
        self.out_index = vertex_index(self.n_out, self.k)
        self._p: dict[tuple[int, int], Formula] = {}
        self._neg: dict[tuple[int, int], Formula] = {}
        self._star_node: dict[tuple[int, int], Formula] = {}
        self._star: dict[int, Formula] = {}
        self._discard_color: dict[int, Formula] = {}
        self._discard_node: dict[int, Formula] = {}
        self._least_central: dict[tuple[int, int], Formula] = {}
        self._star_counters: dict[int, Counter] = {}
        self._node_counters: dict[int, Counter] = {}
        self._color_counters: dict[int, Counter] = {}
        self._renum_node: dict[tuple[int, int], Formula] = {}
        self._renum_color: dict[tuple[int, int], Formula] = {}
        self._pprime: dict[tuple[int, int], Formula] = {}
        self._discard_totals: tuple[int, int] | None = None

    def p(self, r: int, color: int) -> Formula:
        key = (r, color)
        if key not in self._p:
            self._p[key] = self.source(r, color)
        return self._p[key]

    def _not_p(self, r: int, color: int) -> Formula:
        key = (r, color)
        if key not in self._neg:
            self._neg[key] = Not(self.p(r, color))
        return self._neg[key]

    def star_node(self, i: int, color: int) -> Formula:
        """Star(i, color): no vertex avoiding node i has this color."""
        key = (i, color)
        if key not in self._star_node:
            bit = 1 << (i - 1)
            self._star_node[key] = And(
                self._not_p(r, color) for r, mask in enumerate(self.index.masks) if not mask & bit
            )
        return self._star_node[key]

    def star(self, color: int) -> Formula:
        """Star(color): the class has a central element."""
        if color not in self._star:
            self._star[color] = Or(self.star_node(i, color) for i in range(1, self.n + 1))
        return self._star[color]

    def _star_counter(self, color: int) -> Counter:
        if color not in self._star_counters:
            stars = [self.star(c) for c in range(1, color + 1)]
            self._star_counters[color] = Counter(stars, self.encoding)
        return self._star_counters[color]

    def discard_color(self, color: int) -> Formula:
        """DiscardColor(color) for this round's variant."""
        if color not in self._discard_color:
            if self.variant is GadgetVariant.EF:
                earlier = [Not(self.star(c)) for c in range(1, color)]
                formula = conj([self.star(color), *earlier])
            else:
                formula = And((self.star(color), self._star_counter(color).at_most(self.d)))
            self._discard_color[color] = formula
        return self._discard_color[color]

    def least_central(self, i: int, color: int) -> Formula:
        key = (i, color)
        if key not in self._least_central:
            earlier = [Not(self.star_node(j, color)) for j in range(1, i)]
            self._least_central[key] = conj([self.star_node(i, color), *earlier])
        return self._least_central[key]

    def discard_node(self, i: int) -> Formula:
        """DiscardNode(i): i is the least central element of a discarded class."""
        if i not in self._discard_node:
            self._discard_node[i] = Or(
                And((self.discard_color(c), self.least_central(i, c)))
                for c in range(1, self.m + 1)
            )
        return self._discard_node[i]

    def _prefix_counter(self, cache: dict[int, Counter], gadget: Callable[[int], Formula], upto: int) -> Counter:
        if upto not in cache:
            cache[upto] = Counter([gadget(x) for x in range(1, upto + 1)], self.encoding)
        return cache[upto]

    def _renumber(
        self,
        new: int,
        old: int,
        discarded: Callable[[int], Formula],
        counters: dict[int, Counter],
    ) -> Formula:
        shift = old - new
        if not 0 <= shift <= self.d:
            return FALSE
        kept = Not(discarded(old))
        if self.variant is GadgetVariant.EF:
            before = disj([discarded(x) for x in range(1, old)])
            return And((kept, Not(before) if shift == 0 else before))
        count = self._prefix_counter(counters, discarded, old - 1)
        return And((kept, count.equal(shift)))

    def renum_node(self, new: int, old: int) -> Formula:
        """RenumNode(new, old): old is the new-th node that is not discarded."""
        key = (new, old)
        if key not in self._renum_node:
            self._renum_node[key] = self._renumber(new, old, self.discard_node, self._node_counters)
        return self._renum_node[key]

    def renum_color(self, new: int, old: int) -> Formula:
        """RenumColor(new, old): old is the new-th color that is not discarded."""
        key = (new, old)
        if key not in self._renum_color:
            self._renum_color[key] = self._renumber(new, old, self.discard_color, self._color_counters)
        return self._renum_color[key]

    def _ef_terms(self, vertex: Vertex, color: int) -> Iterator[tuple[int, int, int, int]]:
        """(node, discarded color, source rank, source color) of every ef term."""
        for i in range(1, self.n + 1):
            lifted = tuple(s if s < i else s + 1 for s in vertex)
            r = self.index.ranks[lifted]
            for c in range(1, self.m + 1):
                yield i, c, r, color if color < c else color + 1

    def _frege_tuples(self, vertex: Vertex) -> Iterator[tuple[int, ...]]:
        windows = [range(s, min(s + self.d, self.n) + 1) for s in vertex]
        for nodes in product(*windows):
            if all(a < b for a, b in zip(nodes, nodes[1:])):
                yield nodes

    def _color_window(self, color: int) -> range:
        return range(color, min(color + self.d, self.m) + 1)

    def pprime(self, r_new: int, color_new: int) -> Formula:
        """p'[r_new, color_new] over the instance (n - d, k, m - d)."""
        key = (r_new, color_new)
        if key not in self._pprime:
            vertex = self.out_index.vertices[r_new]
            if self.variant is GadgetVariant.EF:
                terms = [
                    And((self.discard_node(i), self.discard_color(c), self.p(r, j)))
                    for i, c, r, j in self._ef_terms(vertex, color_new)
                ]
            else:
                terms = [
                    And((
                        *(self.renum_node(s_new, s) for s_new, s in zip(vertex, nodes)),
                        self.renum_color(color_new, j),
                        self.p(self.index.ranks[nodes], j),
                    ))
                    for nodes in self._frege_tuples(vertex)
                    for j in self._color_window(color_new)
                ]
            self._pprime[key] = Or(terms)
        return self._pprime[key]

    def pprime_size(self, r_new: int, color_new: int) -> int:
        """Symbol count of :meth:`pprime` without building its terms."""
        if (r_new, color_new) in self._pprime:
            return self._pprime[r_new, color_new].size
        vertex = self.out_index.vertices[r_new]
        total = 1
        if self.variant is GadgetVariant.EF:
            # every (node, color) pair is one And; colors above color_new read p[., color_new]
            if self._discard_totals is None:
                self._discard_totals = (
                    sum(self.discard_node(i).size for i in range(1, self.n + 1)),
                    sum(self.discard_color(c).size for c in range(1, self.m + 1)),
                )
            nodes_total, colors_total = self._discard_totals
            total += self.n * self.m + self.m * nodes_total + self.n * colors_total
            for i in range(1, self.n + 1):
                r = self.index.ranks[tuple(s if s < i else s + 1 for s in vertex)]
                total += color_new * self.p(r, color_new + 1).size
                total += (self.m - color_new) * self.p(r, color_new).size
            return total
        for nodes in self._frege_tuples(vertex):
            renum = sum(self.renum_node(s_new, s).size for s_new, s in zip(vertex, nodes))
            for j in self._color_window(color_new):
                total += 1 + renum + self.renum_color(color_new, j).size
                total += self.p(self.index.ranks[nodes], j).size
        return total

    def family_sizes(self) -> dict[str, int]:
        """Total symbol count of every gadget family of the round."""
        n, m = self.n, self.m
        sizes = {
            "star_node": sum(self.star_node(i, c).size for i in range(1, n + 1) for c in range(1, m + 1)),
            "star": sum(self.star(c).size for c in range(1, m + 1)),
            "discard_color": sum(self.discard_color(c).size for c in range(1, m + 1)),
            "discard_node": sum(self.discard_node(i).size for i in range(1, n + 1)),
            "renum_node": sum(
                self.renum_node(new, old).size
                for new in range(1, self.n_out + 1)
                for old in range(new, min(new + self.d, n) + 1)
            ),
            "renum_color": sum(
                self.renum_color(new, old).size
                for new in range(1, self.m_out + 1)
                for old in range(new, min(new + self.d, m) + 1)
            ),
            "pprime": sum(
                self.pprime_size(r, c)
                for r in range(len(self.out_index))
                for c in range(1, self.m_out + 1)
            ),
        }
        sizes["total"] = sum(sizes.values())
        return sizes
