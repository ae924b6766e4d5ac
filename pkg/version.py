VERSION = "0.3.0"
RELEASE_DATE = "2026-10-18"
