"""
Validation helpers for command-line spec flags.

Supported Lie families and the range checks applied to (family, rank, level)
before any computation starts.
"""

from utils.errors import InvalidSpecError

FAMILY_DESCRIPTIONS = {
    'A': 'sl(r+1), rank r >= 1',
    'B': 'so(2r+1), rank r >= 1 (theorem grid starts at r = 2)',
    'C': 'sp(2r), rank r >= 1 (theorem grid starts at r = 2)',
    'G2': 'exceptional g2, rank 2',
}


def get_available_families() -> dict:
    """
    Get all supported Lie families.

    Returns:
        Dictionary of family codes and descriptions
    """
    return dict(FAMILY_DESCRIPTIONS)


def normalize_family(family: str) -> str:
    """Upper-cases a family code and checks it is supported."""
    code = (family or '').strip().upper()
    if code not in FAMILY_DESCRIPTIONS:
        raise InvalidSpecError(f"Unknown family '{family}'. Choose one of {', '.join(FAMILY_DESCRIPTIONS)}", flag='--family')
    return code


def validate_spec_flags(family: str, rank: int, level: int) -> tuple:
    """
    Validate the (family, rank, level) triple from the command line.

    Args:
        family: Family code (A, B, C, G2), case-insensitive
        rank: Rank; G2 accepts only 2 (or None)
        level: Positive level

    Returns:
        The normalized (family, rank, level) triple

    Raises:
        InvalidSpecError naming the offending flag
    """
    code = normalize_family(family)
    if code == 'G2':
        if rank not in (None, 2):
            raise InvalidSpecError("G2 has rank 2", flag='--rank')
        rank = 2
    if rank is None or rank < 1:
        raise InvalidSpecError(f"Rank must be a positive integer, got {rank}", flag='--rank')
    if level is None or level < 1:
        raise InvalidSpecError(f"Level must be a positive integer, got {level}", flag='--level')
    return code, rank, level


def validate_spec(family: str, rank: int, level: int) -> bool:
    """
    Validate a spec triple without raising.

    Returns:
        True if valid, False otherwise
    """
    try:
        validate_spec_flags(family, rank, level)
        return True
    except InvalidSpecError:
        return False
