import collections

import pytest

from radial2d import Family, MolecularParams, from_molecular

DE_VALUES = (1.0, 2.0, 4.0)
RHO_E_VALUES = (0.5, 1.0, 2.0)
M_VALUES = range(6)

_criteria = collections.OrderedDict()


def record(criterion: str, ok: bool, detail: str = ""):
    """Register one acceptance sub-check; reported in the terminal summary."""
    _criteria.setdefault(criterion, []).append((ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, parts in _criteria.items():
        ok = all(p[0] for p in parts)
        details = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {details}")


def molecular_specs(family):
    return [
        ((De, re), from_molecular(family, MolecularParams(De, re)))
        for De in DE_VALUES
        for re in RHO_E_VALUES
    ]


@pytest.fixture(params=list(Family), ids=lambda f: f.value)
def family(request):
    return request.param
