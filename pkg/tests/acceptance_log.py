"""Shared record of acceptance outcomes, printed at the end of the session."""

LINES: dict[int, str] = {}


def record(n: int, ok: bool, detail: str) -> None:
    line = f"CRITERION {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    LINES[n] = line
    print(line)
