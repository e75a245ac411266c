"""PEP 440 version strings from the VERSION 5-tuple in hlab/__init__.py."""

# Necessary for static type checking
if False:  # flake8: noqa
    from typing import Optional, Tuple

    VersionInfo = Tuple[int, int, int, str, int]

RELEASE_LEVELS = {"alpha": "a", "beta": "b", "rc": "rc", "final": ""}


def check_version(version):
    # type: (VersionInfo) -> VersionInfo
    assert len(version) == 5, "VERSION is (major, minor, micro, level, serial)."
    assert version[3] in RELEASE_LEVELS, "Unknown release level {!r}.".format(version[3])
    return version


def get_version(version=None):
    # type: (Optional[VersionInfo]) -> str
    """1.2 for a final release without micro, 1.2.3.dev for the first alpha,
    1.2.3b2 for a later pre-release."""
    if version is None:
        from hlab import VERSION as version
    major, minor, micro, level, serial = check_version(version)
    fields = (major, minor, micro) if micro else (major, minor)
    release = ".".join(str(field) for field in fields)
    if level == "final":
        return release
    if level == "alpha" and serial == 0:
        return release + ".dev"
    return "{}{}{}".format(release, RELEASE_LEVELS[level], serial)
