import pytest

from config import runtime_settings as settings
from state.caches import clear_caches, double_cache, spec_file_cache
from utils.report import Report


def test_defaults_loaded():
    assert settings.VERDICT_TOL > 0
    assert settings.PRUNE_THRESHOLD < settings.VERDICT_TOL
    assert settings.SECOND_LEVEL_MAX_DIM >= 4


def test_override_and_gates():
    settings.override(tol=1e-7, seed=3, force_deep_checks=True)
    assert settings.VERDICT_TOL == 1e-7
    assert settings.SEED == 3
    assert settings.deep_checks_allowed(1000, settings.PHI1_MAX_DIM)


def test_gate_without_force():
    settings.FORCE_DEEP_CHECKS = False
    assert settings.deep_checks_allowed(settings.PHI1_MAX_DIM, settings.PHI1_MAX_DIM)
    assert not settings.deep_checks_allowed(settings.PHI1_MAX_DIM + 1, settings.PHI1_MAX_DIM)


def test_invalid_tolerance_is_rejected():
    with pytest.raises(ValueError):
        settings.override(tol=-1)


def test_report_merge_and_lookup():
    inner = Report("inner")
    inner.add("phi/pentagon", "pentagon identity", 0.0)
    inner.add_flag("mu/bijective", "μ is bijective", False, detail="rank 3 of 4")
    outer = Report("outer")
    outer.merge(inner, prefix="double")
    assert len(outer) == 2
    assert outer.get("phi/pentagon").name == "double/phi/pentagon"
    assert not outer.passed
    assert [c.name for c in outer.failures()] == ["double/mu/bijective"]
    records = list(outer.records(emit_passing=False))
    assert records == [{
        "check": "double/mu/bijective", "anchor": "μ is bijective", "residual": 1.0, "tol": 0.5,
        "verdict": "fail", "detail": "rank 3 of 4", "report": "outer",
    }]


def test_clear_caches():
    spec_file_cache["x"] = object()
    clear_caches()
    assert not spec_file_cache
    assert not double_cache
