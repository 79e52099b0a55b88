import json
import logging
import sys
from functools import wraps
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Union

import pandas as pd

logger = logging.getLogger(__name__)

# Goedel codes of nested Tr sentences can exceed the default decimal conversion limit.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def log_decorator(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            result = func(*args, **kwargs)
            logger.info(f"{func.__name__} executed successfully.")
            return result
        except Exception as e:
            logger.error(f"Error in {func.__name__}: {str(e)}")
            raise
    return wrapper


class Utils:

    @log_decorator
    def load_document(self, path: Union[str, Path]) -> Dict[str, Any]:
        """
        Load a structured JSON document (structure file, subset file, report).
        """
        try:
            with open(path, "r", encoding="utf-8") as handle:
                return json.load(handle)
        except FileNotFoundError:
            logger.error("File not found.")
            raise

    @log_decorator
    def save_document(self, document: Mapping[str, Any], path: Union[str, Path]) -> None:
        """
        Save a structured document as canonical JSON.
        """
        try:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(self.dumps(document))
                handle.write("\n")
            logger.info("Document saved successfully!")
        except Exception as e:
            logger.error(f"Saving failed: {str(e)}")
            raise

    @staticmethod
    def dumps(document: Any) -> str:
        # sort_keys keeps reports byte-identical across runs
        return json.dumps(document, sort_keys=True, indent=2, default=_jsonable)

    @staticmethod
    def table(rows: Iterable[Mapping[str, Any]], columns: List[str] = None) -> pd.DataFrame:
        """
        Build a report table from row records.
        """
        rows = list(rows)
        if not rows:
            return pd.DataFrame(columns=columns or [])
        frame = pd.DataFrame.from_records(rows)
        if columns is not None:
            frame = frame[columns]
        return frame

    @staticmethod
    def format_table(df: pd.DataFrame) -> str:
        if df.empty:
            return "(empty)"
        return df.to_string(index=False)

    @staticmethod
    def records(df: pd.DataFrame) -> List[Dict[str, Any]]:
        return [{key: _jsonable(value) for key, value in row.items()}
                for row in df.to_dict(orient="records")]

    @staticmethod
    def shorten(text: str, width: int = 72) -> str:
        if len(text) <= width:
            return text
        return text[:width - 3] + "..."


def _jsonable(value: Any) -> Any:
    # numpy scalars, sets and tuples show up in reports
    if hasattr(value, "item") and not isinstance(value, (list, dict)):
        return value.item()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, tuple):
        return list(value)
    return value
