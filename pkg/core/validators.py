"""Shared validation utilities for the engine"""

from typing import Iterable, List, Optional, Sequence, Tuple

from core.exceptions import InputError


def validate_dimension(value: int, field_name: str, minimum: int = 1, maximum: Optional[int] = None) -> int:
    """Validate an integer dimension-like field"""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f'{field_name} must be an integer')
    if value < minimum:
        raise InputError(f'{field_name} must be at least {minimum}, got {value}')
    if maximum is not None and value > maximum:
        raise InputError(f'{field_name} must be at most {maximum}, got {value}')
    return value


def validate_and_clean_point(coords: Sequence[int], ambient_dim: int) -> Tuple[int, ...]:
    """Validate a lattice point and return it as an integer tuple"""
    if len(coords) != ambient_dim:
        raise InputError(f'Point {tuple(coords)} has length {len(coords)}, expected {ambient_dim}')

    cleaned = []
    for c in coords:
        if isinstance(c, bool) or int(c) != c:
            raise InputError(f'Point {tuple(coords)} has a non-integer coordinate')
        cleaned.append(int(c))
    return tuple(cleaned)


def validate_and_clean_points(points: Iterable[Sequence[int]], ambient_dim: int) -> List[Tuple[int, ...]]:
    """Validate a list of lattice points, dropping duplicates and keeping first-seen order"""
    seen = {}
    for p in points:
        point = validate_and_clean_point(p, ambient_dim)
        seen.setdefault(point, None)
    return list(seen)


def validate_variable_names(names: Sequence[str]) -> List[str]:
    """Validate a declared variable ordering"""
    if not names:
        raise InputError('At least one variable name is required')

    cleaned = [name.strip() for name in names]
    if any(not name or not (name.isidentifier()) for name in cleaned):
        raise InputError(f'Invalid variable name in {list(names)}')
    if len(set(cleaned)) != len(cleaned):
        raise InputError(f'Duplicate variable name in {list(names)}')
    return cleaned
