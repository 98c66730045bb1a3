"""Service layer: pydantic models, handler functions and the FastAPI app."""

from . import handlers, models

__all__ = ["handlers", "models"]
