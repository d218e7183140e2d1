from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

import time

ACCEPTANCE_LINES: list[str] = []
_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        tr.write_line(line)
    elapsed = time.perf_counter() - _START
    full = tr.config.args == [] or any(a.rstrip("/") == "tests" for a in tr.config.args)
    if full:
        status = "PASS" if elapsed < 60 else "FAIL"
        tr.write_line(f"{status} criterion 7 (runtime): full suite took {elapsed:.1f} s, limit 60 s")
