def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if rep.when != "call" or "criterion" not in props:
                continue
            mark = "PASS" if outcome == "passed" else "FAIL"
            rows.append((rep.location[1], f"[{mark}] {props['criterion']}", props.get("report")))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for _, line, report in sorted(rows):
        terminalreporter.write_line(line)
        if report:
            for extra in report.splitlines():
                terminalreporter.write_line("    " + extra)
