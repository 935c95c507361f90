"""One result line per acceptance criterion, filled in by test_acceptance."""

LINES: dict[tuple, str] = {}


def record(n: int, title: str, ok: bool, detail: str, seconds: float, part: str = "") -> str:
    line = f"criterion {n:2d}{part:1s} {'PASS' if ok else 'FAIL'} {title}: {detail} [{seconds:.1f} s]"
    LINES[(n, part)] = line
    print(line)
    return line
