from fastapi import APIRouter
from app.api.v1.endpoints import polynomials, presets, resonance, verification

api_router = APIRouter()
api_router.include_router(polynomials.router, prefix="/polynomials", tags=["polynomials"])
api_router.include_router(verification.router, prefix="/verification", tags=["verification"])
api_router.include_router(resonance.router, prefix="/resonance-graph", tags=["resonance"])
api_router.include_router(presets.router, prefix="/presets", tags=["presets"])
