"""Shared record of acceptance outcomes; printed at the end of the pytest run."""
RESULTS: dict = {}


def record(number: int, ok: bool, detail: str, seconds: float) -> str:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}  ({seconds:.2f} s)"
    RESULTS[number] = line
    return line
