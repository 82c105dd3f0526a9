import logging

from fastapi import APIRouter, HTTPException

from app.core.errors import BudgetExceededError
from app.schemas.report import RunReport
from app.schemas.structure import StructureRequest
from app.services.structure_service import StructureService
from app.services.verification_service import VerificationService

router = APIRouter()
logger = logging.getLogger(__name__)


@router.post("", response_model=RunReport)
def verify_structure(request: StructureRequest):
    """
    Compute GZZ and GC, then check the cover/subgraph bijection and the 4-cycle labelling.

    A failed check is reported in the body (**equal**, **bijection**, **four_cycles**), not as an error status.
    """
    logger.info(f"Verifying {request.preset or 'uploaded structure'}")
    try:
        g = StructureService().from_request(request)
        report = VerificationService(g, request.max_vertices, request.max_resonance_vertices).run()
        logger.info(f"Verification finished: passed={report.passed}")
        return report
    except BudgetExceededError as e:
        logger.warning(f"Budget exceeded during verification: {str(e)}")
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        logger.warning(f"Validation error during verification: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error during verification: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")
