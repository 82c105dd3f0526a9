import logging

from fastapi import APIRouter, HTTPException

from app.core.errors import BudgetExceededError
from app.schemas.resonance import ResonanceGraphExport
from app.schemas.structure import StructureRequest
from app.services.resonance_service import export_resonance_graph
from app.services.structure_service import StructureService
from app.services.verification_service import VerificationService

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("", response_model=ResonanceGraphExport)
def build_resonance_graph(request: StructureRequest):
    """
    Build the resonance graph: one node per perfect matching, one edge per hexagon flip.
    """
    logger.info(f"Building resonance graph for {request.preset or 'uploaded structure'}")
    try:
        g = StructureService().from_request(request)
        service = VerificationService(g, request.max_vertices, request.max_resonance_vertices)
        return export_resonance_graph(service.resonance_graph(), service.matchings())
    except BudgetExceededError as e:
        logger.warning(f"Budget exceeded building resonance graph: {str(e)}")
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        logger.warning(f"Validation error building resonance graph: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error building resonance graph: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")
