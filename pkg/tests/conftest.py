from collections import defaultdict

import pytest

# criterion number -> list of (check name, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)


@pytest.fixture
def record_criterion():
    def record(number: int, name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE[number].append((name, bool(passed), detail))
        print(f"criterion {number} / {name}: {'PASS' if passed else 'FAIL'} {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[number]
        ok = all(passed for _, passed, _ in checks)
        failed = [f"{name} ({detail})" for name, passed, detail in checks if not passed]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} [{len(checks)} checks]"
        if failed:
            line += " failed: " + "; ".join(failed)
        terminalreporter.write_line(line)
