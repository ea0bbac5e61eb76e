from typing import Annotated, Any

import numpy as np
from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def _as_frozen_array(value: Any) -> np.ndarray:
    """
    Coerce lists and arrays into a read-only float64 numpy array.
    """
    array = np.array(value, dtype=np.float64)
    array.setflags(write=False)
    return array


FrozenArray = Annotated[
    np.ndarray,
    BeforeValidator(_as_frozen_array),
    PlainSerializer(lambda array: array.tolist(), return_type=list),
]


class LabModel(BaseModel):
    """
    A base schema for every domain type of the lab.
    """

    model_config = ConfigDict(
        frozen=True,
        populate_by_name=True,
        arbitrary_types_allowed=True,
        from_attributes=True,
    )
