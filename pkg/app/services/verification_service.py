import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional

from app.core.config import settings
from app.core.errors import BudgetExceededError
from app.models.chemgraph import MolecularGraph
from app.models.graph import ResonanceGraph
from app.models.matching import PerfectMatching
from app.models.polynomial import BivariatePolynomial, poly_eq
from app.schemas.report import GraphSummary, RunReport
from app.services.bijection_service import verify_bijection, verify_four_cycle_lemma
from app.services.clarcover_service import gzz_polynomial
from app.services.cube_service import gc_polynomial
from app.services.matching_service import enumerate_perfect_matchings
from app.services.resonance_service import build_resonance_graph

logger = logging.getLogger(__name__)


def summarize(g: MolecularGraph) -> GraphSummary:
    return GraphSummary(
        family=g.family,
        vertices=g.vertex_count,
        edges=g.edge_count,
        hexagons=g.hexagon_count,
        pentagons=g.pentagon_count,
    )


class VerificationService:
    """Budgeted computation of both polynomials and the bijection checks for one graph.

    Budgets and the worker cap default to the application settings; per-call
    overrides never touch the shared settings instance.
    """

    def __init__(
        self,
        g: MolecularGraph,
        max_vertices: Optional[int] = None,
        max_resonance_vertices: Optional[int] = None,
        threads: Optional[int] = None,
    ):
        self.g = g
        self.max_vertices = settings.MAX_VERTICES if max_vertices is None else max_vertices
        self.max_resonance_vertices = (
            settings.MAX_RESONANCE_VERTICES if max_resonance_vertices is None else max_resonance_vertices
        )
        self.threads = max(1, settings.THREADS if threads is None else threads)
        self.timings_ms: dict[str, float] = {}
        self._matchings: Optional[list[PerfectMatching]] = None
        self._resonance: Optional[ResonanceGraph] = None

    @contextmanager
    def _phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        elapsed = (time.perf_counter() - start) * 1000
        self.timings_ms[name] = round(elapsed, 3)
        logger.info(f"Phase {name} finished in {elapsed:.1f} ms")

    def check_vertex_budget(self) -> None:
        if self.g.vertex_count > self.max_vertices:
            raise BudgetExceededError(
                f"{self.g.vertex_count} vertices exceed the budget of {self.max_vertices}"
            )

    def matchings(self) -> list[PerfectMatching]:
        if self._matchings is None:
            self.check_vertex_budget()
            with self._phase("matchings"):
                self._matchings = enumerate_perfect_matchings(self.g)
        return self._matchings

    def resonance_graph(self) -> ResonanceGraph:
        if self._resonance is None:
            ms = self.matchings()
            if len(ms) > self.max_resonance_vertices:
                raise BudgetExceededError(
                    f"resonance graph has {len(ms)} vertices, budget is {self.max_resonance_vertices}"
                )
            with self._phase("resonance"):
                self._resonance = build_resonance_graph(self.g, ms)
        return self._resonance

    def gzz(self) -> BivariatePolynomial:
        self.check_vertex_budget()
        with self._phase("gzz"):
            return gzz_polynomial(self.g)

    def gc(self) -> BivariatePolynomial:
        r = self.resonance_graph()
        with self._phase("gc"):
            return gc_polynomial(r, self.threads)

    def run(self) -> RunReport:
        """GZZ, GC, the bijection and the 4-cycle checks; raises BudgetExceededError before heavy phases."""
        summary = summarize(self.g)
        logger.info(
            f"Verifying {summary.family.value}: {summary.vertices} vertices, "
            f"{summary.hexagons} hexagons, {summary.pentagons} pentagons"
        )
        # budget checks happen before any expensive phase
        r = self.resonance_graph()
        gzz = self.gzz()
        gc = self.gc()
        with self._phase("bijection"):
            bijection = verify_bijection(self.g, r, self.matchings(), gzz, gc, self.threads)
        with self._phase("four_cycles"):
            four_cycles = verify_four_cycle_lemma(self.g, r)

        equal = poly_eq(gzz, gc)
        if not equal:
            logger.warning(f"GZZ {gzz} differs from GC {gc}")
        return RunReport(
            **summary.model_dump(),
            matchings=len(self.matchings()),
            gzz=gzz.to_json(),
            gc=gc.to_json(),
            equal=equal,
            timings_ms=dict(self.timings_ms),
            bijection=bijection,
            four_cycles=four_cycles,
        )
