from pydantic import BaseModel, Field

from app.models.polynomial import BivariatePolynomial
from app.schemas.report import GraphSummary


class PolynomialResponse(BaseModel):
    """Schema for a computed polynomial."""
    polynomial: str = Field(..., description="Canonical text form, e.g. '3+2x+y'")
    terms: list[list[int]] = Field(..., description="[k, l, coefficient] triples in canonical order")
    graph: GraphSummary

    @classmethod
    def from_polynomial(cls, polynomial: BivariatePolynomial, graph: GraphSummary) -> "PolynomialResponse":
        return cls(polynomial=str(polynomial), terms=polynomial.to_json(), graph=graph)
