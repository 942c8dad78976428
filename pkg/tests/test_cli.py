"""CLI entry points: run, eval, and argument handling."""

from __future__ import annotations

import json

import pytest

from hybridsum.cli import main


@pytest.fixture
def config_path(tmp_path, fixtures_dir):
    body = f"""
input = "{fixtures_dir}/corpus_tiny.csv"
references = "{fixtures_dir}/references_tiny.csv"
stopwords = "{fixtures_dir}/stopwords_en.txt"
lexicon = "{fixtures_dir}/lexicon.tsv"
output = "run"
"""
    path = tmp_path / "config.toml"
    path.write_text(body, encoding="utf-8")
    return path


class TestRun:
    def test_run_succeeds(self, config_path, capsys):
        assert main(["run", "--config", str(config_path)]) == 0
        out = capsys.readouterr().out
        assert "summarized 3" in out
        assert (config_path.parent / "run" / "results.jsonl").is_file()

    def test_bad_config_path(self, tmp_path, capsys):
        assert main(["run", "--config", str(tmp_path / "none.toml")]) == 1
        assert "error" in capsys.readouterr().err

    def test_bad_input_no_partial_outputs(self, tmp_path, fixtures_dir, capsys):
        body = f"""
input = "{fixtures_dir}/absent.csv"
references = "{fixtures_dir}/references_tiny.csv"
stopwords = "{fixtures_dir}/stopwords_en.txt"
output = "run"
"""
        path = tmp_path / "config.toml"
        path.write_text(body, encoding="utf-8")
        assert main(["run", "--config", str(path)]) == 1
        assert not (tmp_path / "run").exists()

    def test_threshold_override(self, config_path):
        assert main(["run", "--config", str(config_path), "--threshold", "0.0"]) == 0
        labels = (config_path.parent / "run" / "labels.csv").read_text(encoding="utf-8")
        # with threshold 0 every labeled post is P
        assert labels.count(",P,threshold") == 2

    def test_hashtag_override(self, config_path, capsys):
        assert main(["run", "--config", str(config_path), "--hashtags", "art"]) == 0
        out = capsys.readouterr().out
        assert "(2 after filter" in out

    def test_output_override(self, config_path):
        assert main(["run", "--config", str(config_path), "--output", "other"]) == 0
        assert (config_path.parent / "other" / "results.jsonl").is_file()


class TestEval:
    def test_eval_recomputes_metrics(self, config_path, capsys):
        assert main(["run", "--config", str(config_path)]) == 0
        capsys.readouterr()
        assert main(["eval", "--config", str(config_path)]) == 0
        out = capsys.readouterr().out
        assert "accuracy=" in out
        metrics = json.loads(
            (config_path.parent / "run" / "metrics.json").read_text(encoding="utf-8")
        )
        assert "confusion" in metrics

    def test_eval_without_run_fails(self, config_path, capsys):
        assert main(["eval", "--config", str(config_path)]) == 1
        assert "run the pipeline first" in capsys.readouterr().err


class TestParser:
    def test_missing_subcommand_exits(self):
        with pytest.raises(SystemExit):
            main([])

    def test_serve_requires_port(self):
        with pytest.raises(SystemExit):
            main(["serve", "--config", "x.toml"])
