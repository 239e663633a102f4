import json
import math
import random

import pytest

from jacobint.common import ParameterError
from jacobint.types import IntegralKind
from jacobint.verifycli import (
    SweepConfig,
    compare_spec,
    draw_spec,
    main,
    parse_config,
    run_sweep,
)


class TestConfigParsing:
    def test_defaults(self):
        cfg = parse_config("")
        assert cfg == SweepConfig()

    def test_ranges_and_scalars(self):
        cfg = parse_config(
            """
            # comment
            alpha_range = -0.5:1.5
            lambda_range = 0.2:0.8
            samples = 7
            seed = 99
            tol = 1e-6
            """
        )
        assert cfg.alpha_range == (-0.5, 1.5)
        assert cfg.lambda_range == (0.2, 0.8)
        assert cfg.samples == 7
        assert cfg.seed == 99
        assert cfg.tol == 1e-6

    def test_unknown_key(self):
        with pytest.raises(ParameterError):
            parse_config("bogus = 3")

    def test_bad_range(self):
        with pytest.raises(ParameterError):
            parse_config("alpha_range = oops")

    def test_out_of_domain_range(self):
        with pytest.raises(ParameterError):
            parse_config("z_range = 0.5:2.0")


class TestDraws:
    def test_draws_respect_preconditions(self):
        cfg = SweepConfig(samples=5)
        rng = random.Random(3)
        for kind in IntegralKind:
            for _ in range(20):
                spec = draw_spec(kind, cfg, rng)
                spec.validate()
                if kind is IntegralKind.REMARK_WEIGHT:
                    assert spec.params.beta - spec.lam > -0.9

    def test_draws_deterministic(self):
        cfg = SweepConfig()
        a = [draw_spec(IntegralKind.FULL_RANGE, cfg, random.Random(5)) for _ in range(10)]
        b = [draw_spec(IntegralKind.FULL_RANGE, cfg, random.Random(5)) for _ in range(10)]
        assert a == b


class TestCompare:
    def test_record_schema(self):
        cfg = SweepConfig()
        spec = draw_spec(IntegralKind.UPPER_TAIL, cfg, random.Random(8))
        rec = compare_spec(spec, 1e-7)
        row = rec.to_row()
        assert set(row) == {
            "kind",
            "alpha",
            "beta",
            "n",
            "lambda",
            "point",
            "closed_re",
            "closed_im",
            "oracle",
            "rel_error",
            "pass",
            "wall_time_ms",
        }
        assert row["pass"] is True

    def test_small_sweep_all_pass(self):
        records = run_sweep(SweepConfig(samples=2, seed=17, n_max=6))
        assert len(records) == 12
        assert all(r.passed for r in records)


class TestCli:
    def test_eval_prints_value(self, capsys):
        code = main(
            "eval --theorem 1 --alpha 0 --beta 0 --n 0 --lambda 1 --z 3".split()
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "0.69314718056" in out

    def test_eval_complex_output(self, capsys):
        code = main(
            "eval --theorem 4 --alpha 0.5 --beta 1.25 --n 2 --lambda 0.4 --x 0.1".split()
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "imag" in out

    def test_verify_pass_exit_zero(self, capsys):
        code = main(
            "verify --theorem 3 --alpha 0 --beta 0 --n 0 --lambda 0.5".split()
        )
        assert code == 0
        assert "PASS" in capsys.readouterr().out

    def test_verify_fail_exit_one(self, capsys):
        code = main(
            "verify --theorem 3 --alpha 0 --beta 0 --n 0 --lambda 0.5 --tol 1e-18".split()
        )
        assert code == 1
        assert "FAIL" in capsys.readouterr().out

    def test_invalid_parameters_exit_two(self, capsys):
        code = main(
            "verify --theorem 2 --alpha 0 --beta 0 --n 0 --lambda 1.5 --x 0".split()
        )
        err = capsys.readouterr().err
        assert code == 2
        assert "lambda" in err

    def test_missing_flag_exit_two(self, capsys):
        code = main("eval --theorem 1 --alpha 0 --beta 0 --n 0 --lambda 1".split())
        assert code == 2
        assert "--z" in capsys.readouterr().err

    def test_env_var_tolerance(self, capsys, monkeypatch):
        monkeypatch.setenv("JACOBINT_TOL", "1e-18")
        code = main("verify --theorem 3 --alpha 0 --beta 0 --n 0 --lambda 0.5".split())
        assert code == 1

    def test_legendre_route_flag(self, capsys):
        code = main("eval --legendre-route --a 1 --n 0 --lambda 0.5".split())
        out = capsys.readouterr().out
        assert code == 0
        assert "1.748038" in out

    def test_gegenbauer_verify(self, capsys):
        code = main("verify --gegenbauer --a 1 --n 0 --lambda 0.5".split())
        assert code == 0

    def test_verify_json_report(self, tmp_path, capsys):
        out = tmp_path / "one.json"
        code = main(
            f"verify --remark --alpha 0 --beta 1 --n 1 --lambda 0.5 --json {out}".split()
        )
        assert code == 0
        row = json.loads(out.read_text().strip())
        assert row["pass"] is True and row["kind"] == "remark_weight"


def strip_timing(path):
    rows = []
    for line in open(path, encoding="utf-8"):
        d = json.loads(line)
        d.pop("wall_time_ms", None)
        rows.append(json.dumps(d, sort_keys=True))
    return rows


class TestSweepCommand:
    def test_deterministic_report(self, tmp_path, capsys):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("samples = 2\nseed = 31\nn_max = 5\n")
        out1 = tmp_path / "r1.jsonl"
        out2 = tmp_path / "r2.jsonl"
        assert main(["sweep", "--config", str(cfg), "--out", str(out1)]) == 0
        assert main(["sweep", "--config", str(cfg), "--out", str(out2)]) == 0
        assert strip_timing(out1) == strip_timing(out2)

    def test_report_has_header_and_records(self, tmp_path, capsys):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("samples = 1\nseed = 2\nn_max = 4\n")
        out = tmp_path / "r.jsonl"
        main(["sweep", "--config", str(cfg), "--out", str(out)])
        lines = out.read_text().splitlines()
        header = json.loads(lines[0])
        assert header["type"] == "header"
        assert header["config"]["seed"] == 2
        assert len(lines) == 1 + 6


class TestIdentitiesCommand:
    def test_exit_zero_and_json(self, tmp_path, capsys):
        out = tmp_path / "identities.jsonl"
        code = main(["identities", "--seed", "12345", "--json", str(out)])
        assert code == 0
        rows = [json.loads(line) for line in out.read_text().splitlines()]
        assert len(rows) == 10
        assert all(r["passed"] for r in rows)
        stdout = capsys.readouterr().out
        assert stdout.count("PASS") == 10
