"""
命令行测试

apply 的样例文件、各类错误的退出码与诊断信息、bench 的 CSV 结构以及 calibrate 的配置回读。
"""

import json
import logging
from logging.handlers import RotatingFileHandler

import numpy as np
import pytest

from src.cli.commands import main, parse_se
from src.core.errors import EvenExtentError, InvalidParameterError
from src.core.model import Image
from src.formats.pgm import PgmVariant, read_pgm, write_pgm
from src.morphology.dispatch import ConfigSource, DispatchConfig

from .conftest import ERODE_3X3_REPLICATE, FIXTURE_3X3


@pytest.fixture(autouse=True)
def reset_logging():
    """main() 会重新配置根日志，测试结束后移除它安装的处理器"""
    yield
    for name in ("", "performance"):
        logger = logging.getLogger(name)
        for handler in logger.handlers[:]:
            if type(handler) in (logging.StreamHandler, RotatingFileHandler):
                logger.removeHandler(handler)
                handler.close()


@pytest.fixture
def fixture_file(tmp_path):
    path = tmp_path / "fixture.pgm"
    path.write_bytes(write_pgm(Image.from_array(FIXTURE_3X3)))
    return path


def test_parse_se():
    se = parse_se("7x5")
    assert (se.w_h, se.w_v) == (7, 5)
    with pytest.raises(InvalidParameterError):
        parse_se("7by5")
    with pytest.raises(EvenExtentError):
        parse_se("4x3")


class TestApply:
    def test_golden_erode(self, tmp_path, fixture_file):
        out = tmp_path / "out.pgm"
        assert main(["apply", "--op", "erode", "--se", "3x3", "--border", "replicate",
                     str(fixture_file), str(out)]) == 0
        expected = write_pgm(Image.from_array(ERODE_3X3_REPLICATE))
        assert out.read_bytes() == expected

    def test_single_pixel_window(self, tmp_path, random_image):
        src = random_image(13, 7)
        inp, out = tmp_path / "in.pgm", tmp_path / "out.pgm"
        inp.write_bytes(write_pgm(src, PgmVariant.P2))
        assert main(["apply", "--op", "dilate", "--se", "1x1", str(inp), str(out)]) == 0
        assert read_pgm(out.read_bytes()) == src

    def test_gradient_of_constant_image(self, tmp_path):
        inp, out = tmp_path / "in.pgm", tmp_path / "out.pgm"
        inp.write_bytes(write_pgm(Image.from_array(np.full((9, 14), 77, dtype=np.uint8))))
        assert main(["apply", "--op", "gradient", "--se", "5x3", str(inp), str(out)]) == 0
        assert np.all(read_pgm(out.read_bytes()).pixels == 0)

    def test_output_independent_of_config(self, tmp_path, random_image):
        inp = tmp_path / "in.pgm"
        inp.write_bytes(write_pgm(random_image(40, 30)))
        config = tmp_path / "dispatch.txt"
        DispatchConfig(threshold_h=1, threshold_v=1, source=ConfigSource.CALIBRATED).save(config)
        plain, tuned = tmp_path / "a.pgm", tmp_path / "b.pgm"
        assert main(["apply", "--op", "close", "--se", "9x7", str(inp), str(plain)]) == 0
        assert main(["apply", "--op", "close", "--se", "9x7", "--config", str(config), str(inp), str(tuned)]) == 0
        assert plain.read_bytes() == tuned.read_bytes()

    def test_constant_border(self, tmp_path, fixture_file):
        out = tmp_path / "out.pgm"
        assert main(["apply", "--op", "dilate", "--se", "3x3", "--border", "constant:0",
                     str(fixture_file), str(out)]) == 0
        assert read_pgm(out.read_bytes()).pixels.tolist() == [[9, 9, 8], [9, 9, 8], [6, 6, 5]]


class TestErrors:
    def _run(self, capsys, argv):
        status = main(argv)
        err = capsys.readouterr().err
        return status, err

    def test_even_se(self, capsys, tmp_path, fixture_file):
        status, err = self._run(capsys, ["apply", "--op", "erode", "--se", "4x3",
                                         str(fixture_file), str(tmp_path / "o.pgm")])
        assert status == 1
        assert "EVEN_EXTENT" in err
        assert str(fixture_file) in err

    def test_missing_input(self, capsys, tmp_path):
        missing = tmp_path / "missing.pgm"
        status, err = self._run(capsys, ["apply", "--op", "erode", "--se", "3x3", str(missing),
                                         str(tmp_path / "o.pgm")])
        assert status == 1
        assert "missing.pgm" in err

    def test_bad_pgm(self, capsys, tmp_path):
        bad = tmp_path / "bad.pgm"
        bad.write_bytes(b"P6\n1 1\n255\n\x00")
        status, err = self._run(capsys, ["apply", "--op", "erode", "--se", "3x3", str(bad),
                                         str(tmp_path / "o.pgm")])
        assert status == 1
        assert "BAD_MAGIC" in err
        assert "bad.pgm" in err

    def test_unknown_operation(self, capsys):
        status, err = self._run(capsys, ["apply", "--op", "blur", "--se", "3x3", "a", "b"])
        assert status == 1
        assert "USAGE_ERROR" in err

    def test_no_command(self, capsys):
        status, err = self._run(capsys, [])
        assert status == 1
        assert "USAGE_ERROR" in err

    @pytest.mark.parametrize("windows", ["4..10", "11..3"])
    def test_bad_range(self, capsys, tmp_path, windows):
        status, err = self._run(capsys, ["bench", "--width", "8", "--height", "8", "--windows", windows,
                                         "--reps", "3", "--out", str(tmp_path / "b.csv")])
        assert status == 1
        assert "BAD_RANGE" in err

    def test_insufficient_reps(self, capsys, tmp_path):
        status, err = self._run(capsys, ["calibrate", "--width", "8", "--height", "8", "--windows", "3..5",
                                         "--reps", "2", "--out", str(tmp_path / "c.txt")])
        assert status == 1
        assert "INSUFFICIENT_REPS" in err

    def test_bad_config_file(self, capsys, tmp_path, fixture_file):
        config = tmp_path / "dispatch.txt"
        config.write_text("threshold_h=69\n", encoding="ascii")
        status, err = self._run(capsys, ["apply", "--op", "erode", "--se", "3x3", "--config", str(config),
                                         str(fixture_file), str(tmp_path / "o.pgm")])
        assert status == 1
        assert "CONFIG_ERROR" in err

    def test_missing_settings_file(self, capsys, tmp_path):
        missing = tmp_path / "nowhere.json"
        status, err = self._run(capsys, ["--settings", str(missing), "bench", "--windows", "3..3",
                                         "--reps", "3", "--out", str(tmp_path / "b.csv")])
        assert status == 1
        assert "IO_ERROR" in err
        assert "nowhere.json" in err
        assert not (tmp_path / "b.csv").exists()

    @pytest.mark.parametrize("content", ["{not json", "[1, 2]"])
    def test_broken_settings_file(self, capsys, tmp_path, content):
        broken = tmp_path / "broken.json"
        broken.write_text(content, encoding="utf-8")
        status, err = self._run(capsys, ["--settings", str(broken), "bench", "--windows", "3..3",
                                         "--reps", "3", "--out", str(tmp_path / "b.csv")])
        assert status == 1
        assert "SETTINGS_ERROR" in err
        assert "broken.json" in err


def test_bench_csv(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--width", "32", "--height", "24", "--windows", "3..9", "--reps", "3",
                 "--out", str(out)]) == 0
    lines = out.read_text(encoding="ascii").splitlines()
    assert lines[0] == "axis,algorithm,window,image_w,image_h,reps,median_ns"
    assert len(lines) - 1 == 2 * 2 * 4
    for line in lines[1:]:
        axis, algorithm, window, width, height, reps, median = line.split(",")
        assert axis in ("horizontal", "vertical")
        assert algorithm in ("linear", "vanherk")
        assert int(window) % 2 == 1
        assert (width, height, reps) == ("32", "24", "3")
        assert int(median) > 0
    assert "16" in capsys.readouterr().out


def test_bench_with_transpose(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--width", "20", "--height", "18", "--windows", "3..3", "--reps", "3",
                 "--transpose", "--op", "dilate", "--out", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text(encoding="ascii").splitlines()[1:]]
    assert len(rows) == 4 + 8
    assert {row[1] for row in rows if row[0] == "transpose"} == {"tiled", "scalar"}


def test_bench_scalar_baseline(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--width", "12", "--height", "10", "--windows", "3..5", "--reps", "3",
                 "--scalar-baseline", "--out", str(out)]) == 0
    rows = [line.split(",") for line in out.read_text(encoding="ascii").splitlines()[1:]]
    assert len(rows) == 2 * 3 * 2
    assert {row[1] for row in rows} == {"linear", "vanherk", "vanherk_scalar"}


def test_bench_uses_settings_file(tmp_path):
    settings = tmp_path / "settings.json"
    settings.write_text(json.dumps({"bench": {"width": 16, "height": 16, "reps": 3, "windows": "3..5"}}),
                        encoding="utf-8")
    out = tmp_path / "bench.csv"
    assert main(["--settings", str(settings), "bench", "--out", str(out)]) == 0
    lines = out.read_text(encoding="ascii").splitlines()
    assert len(lines) == 1 + 2 * 2 * 2
    assert lines[1].split(",")[3:6] == ["16", "16", "3"]


def test_calibrate_round_trip(tmp_path, capsys):
    out = tmp_path / "dispatch.txt"
    assert main(["calibrate", "--width", "40", "--height", "30", "--windows", "3..9", "--reps", "3",
                 "--out", str(out)]) == 0
    cfg = DispatchConfig.load(out)
    assert cfg.source is ConfigSource.CALIBRATED
    for threshold in (cfg.threshold_h, cfg.threshold_v):
        assert threshold in (1, 3, 5, 7, 9)
    assert f"threshold_h={cfg.threshold_h}" in capsys.readouterr().out


def test_log_dir_receives_performance_log(tmp_path):
    logs = tmp_path / "logs"
    assert main(["--log-dir", str(logs), "bench", "--width", "16", "--height", "16", "--windows", "3..3",
                 "--reps", "3", "--out", str(tmp_path / "b.csv")]) == 0
    assert (logs / "system.log").exists()
    assert "horizontal,linear,3" in (logs / "performance.log").read_text(encoding="utf-8")


def test_settings_file_level_reaches_log_files(tmp_path):
    settings = tmp_path / "settings.json"
    settings.write_text(json.dumps({"logging": {"file_level": "ERROR", "log_dir": str(tmp_path / "logs")}}),
                        encoding="utf-8")
    assert main(["--settings", str(settings), "bench", "--width", "16", "--height", "16", "--windows", "3..3",
                 "--reps", "3", "--out", str(tmp_path / "b.csv")]) == 0
    files = [h for h in logging.getLogger().handlers if isinstance(h, RotatingFileHandler)]
    system = [h for h in files if h.baseFilename.endswith("system.log")]
    assert system and system[0].level == logging.ERROR


@pytest.mark.slow
def test_benchmark_shape(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--width", "256", "--height", "256", "--windows", "3..127", "--reps", "21",
                 "--out", str(out)]) == 0
    medians = {}
    for line in out.read_text(encoding="ascii").splitlines()[1:]:
        axis, algorithm, window, *_, median = line.split(",")
        medians[(axis, algorithm, int(window))] = int(median)
    for axis in ("horizontal", "vertical"):
        assert medians[(axis, "linear", 127)] >= 4 * medians[(axis, "linear", 3)]
        assert medians[(axis, "vanherk", 127)] <= 3 * medians[(axis, "vanherk", 3)]


@pytest.mark.slow
def test_calibration_acceptance(tmp_path, random_image):
    config = tmp_path / "dispatch.txt"
    assert main(["calibrate", "--width", "256", "--height", "256", "--windows", "3..127", "--reps", "5",
                 "--out", str(config)]) == 0
    cfg = DispatchConfig.load(config)
    assert 3 <= cfg.threshold_h <= 127
    assert 3 <= cfg.threshold_v <= 127

    inp = tmp_path / "in.pgm"
    inp.write_bytes(write_pgm(random_image(120, 90)))
    a, b = tmp_path / "a.pgm", tmp_path / "b.pgm"
    assert main(["apply", "--op", "erode", "--se", "81x65", str(inp), str(a)]) == 0
    assert main(["apply", "--op", "erode", "--se", "81x65", "--config", str(config), str(inp), str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
