"""Collects one PASS/FAIL line per acceptance check for the pytest summary."""

LINES: dict[tuple, str] = {}


def report(key: tuple, ok: bool, text: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {key[0]}: {text}"
    LINES[key] = line
    print(line)
    return ok


def ordered() -> list[str]:
    return [LINES[k] for k in sorted(LINES)]
