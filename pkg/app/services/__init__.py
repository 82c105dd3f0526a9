from app.services.structure_service import StructureService
from app.services.verification_service import VerificationService

__all__ = [
    "StructureService",
    "VerificationService",
]
