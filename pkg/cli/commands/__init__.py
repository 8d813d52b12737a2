from typing import Any, List, Optional

from schemas.command import CommandResult


def make_result(args, result: Any, inputs: Any, breakdown: Optional[List[Any]] = None,
                seed: Optional[int] = None, notes: Optional[List[str]] = None) -> CommandResult:
    """CommandResult for a dispatched command; breakdowns are kept only with --verbose"""
    return CommandResult(
        command=args.command_name,
        inputs_digest=CommandResult.digest(inputs),
        result=result,
        breakdown=breakdown if getattr(args, "verbose", False) else None,
        seed=seed,
        notes=notes or [],
    )
