import logging

from fastapi import APIRouter, HTTPException

from app.core.errors import BudgetExceededError
from app.schemas.polynomial import PolynomialResponse
from app.schemas.structure import StructureRequest
from app.services.structure_service import StructureService
from app.services.verification_service import VerificationService, summarize

router = APIRouter()
logger = logging.getLogger(__name__)


def _service(request: StructureRequest) -> VerificationService:
    g = StructureService().from_request(request)
    return VerificationService(g, request.max_vertices, request.max_resonance_vertices)


@router.post("/gzz", response_model=PolynomialResponse)
def compute_gzz(request: StructureRequest):
    """
    Compute the generalized Zhang-Zhang polynomial of a structure.

    - **preset** or **text**: the structure
    - **family**: format of **text** (detected when omitted)
    """
    logger.info(f"Computing GZZ for {request.preset or 'uploaded structure'}")
    try:
        service = _service(request)
        return PolynomialResponse.from_polynomial(service.gzz(), summarize(service.g))
    except BudgetExceededError as e:
        logger.warning(f"Budget exceeded computing GZZ: {str(e)}")
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        logger.warning(f"Validation error computing GZZ: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error computing GZZ: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")


@router.post("/zz", response_model=PolynomialResponse)
def compute_zz(request: StructureRequest):
    """
    Compute the classic Zhang-Zhang polynomial (the y = 0 slice of GZZ).
    """
    logger.info(f"Computing ZZ for {request.preset or 'uploaded structure'}")
    try:
        service = _service(request)
        return PolynomialResponse.from_polynomial(service.gzz().y0_slice(), summarize(service.g))
    except BudgetExceededError as e:
        logger.warning(f"Budget exceeded computing ZZ: {str(e)}")
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        logger.warning(f"Validation error computing ZZ: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error computing ZZ: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")


@router.post("/gc", response_model=PolynomialResponse)
def compute_gc(request: StructureRequest):
    """
    Compute the generalized cube polynomial of the structure's resonance graph.

    - **max_resonance_vertices**: refuse resonance graphs larger than this
    """
    logger.info(f"Computing GC for {request.preset or 'uploaded structure'}")
    try:
        service = _service(request)
        return PolynomialResponse.from_polynomial(service.gc(), summarize(service.g))
    except BudgetExceededError as e:
        logger.warning(f"Budget exceeded computing GC: {str(e)}")
        raise HTTPException(status_code=413, detail=str(e))
    except ValueError as e:
        logger.warning(f"Validation error computing GC: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error computing GC: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")
