"""Echo acceptance-criterion result lines even while output capture is on."""


def pytest_runtest_logreport(report):
    if report.when != "call" or not getattr(report, "capstdout", ""):
        return
    for line in report.capstdout.splitlines():
        if line.startswith(("PASS criterion", "FAIL criterion")):
            print(f"\n  {line}", end="")
