import pytest

from plasmonio import plasmons, wellbands


@pytest.fixture(scope="session")
def well15():
    """15 nm GaInAs/AlInAs well at 1.5e13 cm^-2."""
    profile = wellbands.WellProfile.square_well(15.0, Ns_cm2=1.5e13)
    transitions = wellbands.well_transitions(profile)
    return profile, transitions, plasmons.plasmon_modes(transitions)


ACCEPTANCE = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""
    def record(number, title, ok, detail):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
        ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
