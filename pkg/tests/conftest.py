"""Prints one line per acceptance criterion at the end of the run."""


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome, props.get("detail", "")))
    if not lines:
        return
    key = lambda t: tuple(int(x) if x.isdigit() else x for x in t[0].replace("-", " ").split())  # noqa: E731
    terminalreporter.section("acceptance criteria")
    for crit, outcome, detail in sorted(lines, key=key):
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {crit}: {word}  {detail}")
