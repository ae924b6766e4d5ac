import version


def test_version_string():
    assert version.VERSION == "0.3.0"


def test_release_date_string():
    assert version.RELEASE_DATE == "2026-10-18"
