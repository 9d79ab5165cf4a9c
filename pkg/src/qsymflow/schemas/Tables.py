from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class TableModel(BaseModel):
    kind: str
    n: int
    nu: Optional[int] = None
    rows: List[str]
    columns: List[str]
    entries: List[List[str]]

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "kind": "wt",
                "n": 3,
                "nu": None,
                "rows": ["{}", "{1}", "{2}", "{1,2}"],
                "columns": ["1", "2"],
                "entries": [["1", "1"], ["1", "2"], ["1", "1"], ["1", "2"]],
            }
        }
    )

    @model_validator(mode="after")
    def rectangular(self):
        if len(self.entries) != len(self.rows):
            raise ValueError("one entry row per row label")
        if any(len(row) != len(self.columns) for row in self.entries):
            raise ValueError("every entry row needs one value per column")
        return self
