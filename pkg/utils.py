# utils.py
import json
from typing import Optional

from fastapi import Header, HTTPException, status

import config
from exceptions import ParseError
from plucker import Pair, parse_pair
from strata import AdmissibleSet, admissible_set


async def verify_token(authorization: Optional[str] = Header(None)):
    """Dependency to verify the bearer token; a no-op when AUTH_TOKEN is unset."""
    if not config.AUTH_TOKEN:
        return
    if not authorization or not authorization.startswith("Bearer "):
        raise HTTPException(
            status_code=status.HTTP_401_UNAUTHORIZED,
            detail="Invalid authentication scheme.",
        )

    token = authorization.split(" ")[1]
    if token != config.AUTH_TOKEN:
        raise HTTPException(
            status_code=status.HTTP_401_UNAUTHORIZED,
            detail="Invalid token.",
        )



def parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{what} is not valid JSON: {e}")


def parse_sigma(data, n: int = 5) -> AdmissibleSet:
    """
    An admissible set from JSON text or an already decoded list. Accepted
    forms: [[1,2],[1,3]], ["12","13"] and "12,13".
    """
    if isinstance(data, str):
        text = data.strip()
        if text.startswith("["):
            data = parse_json(text, "sigma")
        else:
            data = [p for p in text.replace(" ", "").split(",") if p]
    if not isinstance(data, list) or not data:
        raise ParseError(f"sigma must be a nonempty list of pairs, got {data!r}")
    return admissible_set(n, data)


def parse_chart(text) -> Pair:
    return parse_pair(text)


def parse_matrix_text(text: str):
    """A matrix from JSON text: a list of rows of Gaussian-rational literals."""
    data = parse_json(text, "matrix")
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise ParseError("matrix must be a JSON list of rows")
    return [[str(x) for x in row] for row in data]
