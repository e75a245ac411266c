from .base import HlabError

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Any, Dict


def format_error(error):
    # type: (Exception) -> Dict[str, Any]
    formatted_error = {
        "type": error.__class__.__name__,
        "message": str(error),
    }  # type: Dict[str, Any]
    if isinstance(error, HlabError) and error.extensions is not None:
        formatted_error["extensions"] = error.extensions
    return formatted_error
