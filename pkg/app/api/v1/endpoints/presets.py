import logging

from fastapi import APIRouter, HTTPException

from app.core.errors import UnknownPresetError
from app.repositories.preset_repository import PresetRepository
from app.schemas.structure import PresetResponse
from app.services.structure_service import StructureService

router = APIRouter()
logger = logging.getLogger(__name__)


@router.get("", response_model=list[str])
def list_presets():
    """
    List representative preset names.
    """
    return PresetRepository().names()


@router.get("/{name}", response_model=PresetResponse)
def get_preset(name: str):
    """
    Resolve a preset (e.g. `linear:3`, `tube:2,2,1`, `c60`) and return its canonical input file.
    """
    logger.info(f"Fetching preset: {name}")
    try:
        return StructureService().preset(name)
    except UnknownPresetError as e:
        logger.warning(f"Unknown preset: {name}")
        raise HTTPException(status_code=404, detail=str(e))
    except ValueError as e:
        logger.warning(f"Invalid preset {name}: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error fetching preset {name}: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Internal server error: {str(e)}")
