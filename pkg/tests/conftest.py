import json
from pathlib import Path

import pytest

from entlink.index import build_index
from entlink.kb import KnowledgeBase, load_dump

FIXTURES = Path(__file__).parent / "fixtures"
MINITAC = FIXTURES / "minitac"


def make_kb(rows):
    return KnowledgeBase.from_records(rows)


def ent(eid, text="", aliases=(), links=(), name=None, **extra):
    row = {"id": eid, "name": name or eid.replace("_", " "), "aliases": list(aliases),
           "text": text, "links": list(links)}
    row.update(extra)
    return row


@pytest.fixture(scope="session")
def minitac_kb():
    return load_dump(MINITAC / "kb.jsonl")


@pytest.fixture(scope="session")
def minitac_index(minitac_kb):
    return build_index(minitac_kb)


@pytest.fixture(scope="session")
def minitac_expected():
    return json.loads((MINITAC / "expected.json").read_text())


@pytest.fixture
def write_jsonl(tmp_path):
    def _write(rows, name="dump.jsonl"):
        path = tmp_path / name
        path.write_text("".join(json.dumps(r) + "\n" for r in rows), encoding="utf-8")
        return path
    return _write


@pytest.fixture(scope="session")
def einstein_kb():
    """Three entities around the Einstein sentence, densely interlinked."""
    return make_kb([
        ent("Albert_Einstein", "Albert Einstein was a physicist born in Ulm who developed relativity.",
            ["Einstein"], ["Ulm", "Mileva_Maric"]),
        ent("Ulm", "Ulm is a city in Germany on the Danube, birthplace of Albert Einstein.",
            [], ["Albert_Einstein"]),
        ent("Mileva_Maric", "Mileva Maric was a physicist and the first wife of Albert Einstein.",
            ["Mileva"], ["Albert_Einstein", "Ulm"]),
    ])


# ---------------------------------------------------------------- acceptance report

_CRITERIA: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by a test")


def pytest_runtest_logreport(report):
    marker = dict(report.user_properties).get("criterion")
    if marker is None:
        return
    number, title = marker
    detail = dict(report.user_properties).get("detail", "")
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title, detail)


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        item.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title, detail = _CRITERIA[number]
        line = f"criterion {number}: {status}  {title}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)


@pytest.fixture
def detail(request):
    """Attach a one-line measurement summary to the acceptance report."""
    def _set(text):
        request.node.user_properties.append(("detail", text))
    return _set
