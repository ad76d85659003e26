import pytest

from xiprime.config import AlphaGrid, RunConfig, build_config, load_config_data, parse_key_values, save_config
from xiprime.errors import ConfigError


def test_parse_key_values_nests_dotted_keys():
    data = parse_key_values(
        """
        # comment line
        t_max = 5000   # trailing comment
        alpha_grid.step = 0.02
        ah.count = 300
        """
    )
    assert data == {"t_max": "5000", "alpha_grid": {"step": "0.02"}, "ah": {"count": "300"}}


def test_parse_key_values_rejects_bare_lines():
    with pytest.raises(ConfigError) as info:
        parse_key_values("t_max = 10\nwindow\n", source="run.conf")
    assert "run.conf:2" in str(info.value)


def test_defaults_are_valid(monkeypatch):
    monkeypatch.delenv("XIPRIME_CACHE", raising=False)
    cfg = build_config()
    assert cfg.K == 8 and cfg.j_max == 8
    assert cfg.window == 200.0
    assert cfg.rs_crossover == 500.0
    assert cfg.cache_dir.is_absolute()


@pytest.mark.parametrize(
    "overrides",
    [
        {"K": 9},
        {"ef_window": 400.0},
        {"rs_crossover": 100.0},
        {"alpha_grid": "0,1.5,0.1"},
        {"workers": 0},
    ],
)
def test_invalid_settings_raise_config_error(overrides):
    with pytest.raises(ConfigError):
        build_config(overrides=overrides)


def test_layering(tmp_path, monkeypatch):
    conf = tmp_path / "run.conf"
    conf.write_text("t_max = 5000\nseed = 4\nalpha_grid = 0,0.5,0.1\ncache_dir = from-file\n", encoding="utf-8")
    monkeypatch.setenv("XIPRIME_CACHE", str(tmp_path / "env-cache"))
    cfg = build_config(conf, {"seed": 9, "window": None})
    assert cfg.t_max == 5000.0
    assert cfg.seed == 9
    assert cfg.window == 200.0
    assert cfg.cache_dir == tmp_path / "env-cache"
    assert cfg.alpha_grid.values() == [0.0, 0.1, 0.2, 0.3, 0.4, 0.5]


def test_flag_beats_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("XIPRIME_CACHE", str(tmp_path / "env-cache"))
    cfg = build_config(overrides={"cache_dir": str(tmp_path / "flag-cache")})
    assert cfg.cache_dir == tmp_path / "flag-cache"


def test_missing_file_falls_back_to_defaults(tmp_path):
    assert load_config_data(tmp_path / "absent.conf") == {}


def test_json_config(tmp_path):
    conf = tmp_path / "run.json"
    conf.write_text('{"K": 3, "ah": {"count": 500}}', encoding="utf-8")
    cfg = build_config(conf)
    assert cfg.K == 3
    assert cfg.ah.count == 500
    conf.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        build_config(conf)


def test_save_then_load(tmp_path):
    cfg = RunConfig(t_max=777.0, gap_thresholds=[0.3, 0.4], alpha_grid=AlphaGrid(stop=0.5, step=0.05))
    path = tmp_path / "saved.conf"
    assert save_config(cfg, path)
    again = build_config(path)
    assert again.t_max == 777.0
    assert again.gap_thresholds == [0.3, 0.4]
    assert again.alpha_grid == cfg.alpha_grid


def test_alpha_grid():
    assert AlphaGrid(start=0.0, stop=0.05, step=0.01).values() == [0.0, 0.01, 0.02, 0.03, 0.04, 0.05]
    with pytest.raises(ValueError):
        AlphaGrid(step=0.0)
