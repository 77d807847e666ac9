"""
Pydantic schema for serialized family elements
"""
from pydantic import BaseModel, ConfigDict


class ElementSchema(BaseModel):
    """JSON form of a Pascal family element"""

    family: str
    n: int
    vertex: str
    payload: str

    model_config = ConfigDict(frozen=True)
