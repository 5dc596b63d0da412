import itertools
import json
import subprocess
import sys

import pytest

from efsynth import InconsistentSampleError, SampleParseError, deserialize
from efsynth.cli import main, parse_sample

LEXICON = "# four labelled words\n+ stviil\n- ktvive\n+ stviie\n- stpiie\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def lexicon_file(tmp_path):
    p = tmp_path / "lexicon.sample"
    p.write_text(LEXICON)
    return p


def test_parse_lexicon():
    s = parse_sample(LEXICON)
    assert s.positive == ("stviil", "stviie") and s.negative == ("ktvive", "stpiie")


def test_parse_directives_and_errors():
    s = parse_sample("@alphabet a b c\n+ ab  # trailing comment\n+ ab\n-\tc\n")
    assert s.alphabet.symbols == ("a", "b", "c") and s.positive == ("ab",)
    cases = {
        "+ ab\n- ab\n": InconsistentSampleError,
        "# comment only\n": SampleParseError,
        "+ ab\n* ba\n": SampleParseError,
        "+ ab\n-\n": SampleParseError,
        "@alphabet ab\n+ abc\n": SampleParseError,
        "+ab\n": SampleParseError,
        "@colour red\n": SampleParseError,
    }
    for text, exc in cases.items():
        with pytest.raises(exc):
            parse_sample(text)
    with pytest.raises(SampleParseError, match="line 2"):
        parse_sample("+ ab\n* ba\n")


def test_synth(capsys, lexicon_file, tmp_path):
    code, out, _ = run(capsys, "synth", lexicon_file)
    assert code == 0 and "rank: 1" in out
    code, out, _ = run(capsys, "synth", lexicon_file, "--minimize")
    assert code == 0 and 'formula: (pref_1 = "s" & gamma("v") >= 1)' in out
    code, out, _ = run(capsys, "synth", lexicon_file, "--expand")
    assert "P_s(min)" in out and "pref_1" not in out

    code, out, _ = run(capsys, "synth", lexicon_file, "--json")
    payload = json.loads(out)
    assert payload["rank"] == 1
    f = tmp_path / "h.json"
    f.write_text(out)
    deserialize(out)
    code, out, _ = run(capsys, "check", lexicon_file, f, "--cross-check")
    assert code == 0 and "consistent: yes" in out
    code, out, _ = run(capsys, "eval", "stviil", f)
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "eval", "ktvive", f)
    assert (code, out) == (1, "false\n")


def test_check_reports_violations(capsys, lexicon_file, tmp_path):
    f = tmp_path / "true.json"
    f.write_text('{"kind":"true"}')
    code, out, _ = run(capsys, "check", lexicon_file, f)
    assert code == 1 and "false positives: ktvive stpiie" in out


def test_efsim(capsys):
    code, out, _ = run(capsys, "efsim", "aaacbbb", "aaabbbbb")
    assert code == 0
    assert out.splitlines() == [
        "simLength = 3", "simPref = 2", "simSuff = 2", "simSub = 1", "min = 1"]
    code, out, _ = run(capsys, "efsim", "ab", "ba")
    assert "simLength = inf" in out


def test_phi(capsys):
    code, out, _ = run(capsys, "phi", "aaacbbb", "aaabbbbb", 2)
    assert code == 0 and 'pref(cmp==, k=4)\tpref_4 = "aaac"' in out
    code, out, _ = run(capsys, "phi", "aaa", "aaaa", 0)
    assert code == 1 and out == "0 formulas\n"


def test_game(capsys):
    code, out, _ = run(capsys, "game", "aaa", "aaaa", 1, "--oracle")
    assert code == 0 and out.splitlines() == ["winner: Spoiler", "oracle: Spoiler", "agreement: yes"]
    code, out, _ = run(capsys, "game", "aaa", "aaaa", 0)
    assert code == 1 and out == "winner: Duplicator\n"


def test_game_oracle_sweep(capsys):
    words = ["".join(p) for n in range(1, 5) for p in itertools.product("ab", repeat=n)]
    for u, v in itertools.combinations(words, 2):
        for r in range(3):
            _, out, _ = run(capsys, "game", u, v, r, "--oracle")
            assert out.endswith("agreement: yes\n"), (u, v, r)


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "phi", "a", "b", "-1")[0] == 2
    assert run(capsys, "synth", tmp_path / "missing")[0] == 3
    bad = tmp_path / "bad.sample"
    bad.write_text("+ ab\n- ab\n")
    code, _, err = run(capsys, "synth", bad)
    assert code == 3 and "line 2" in err
    f = tmp_path / "bad.json"
    f.write_text("{bad")
    assert run(capsys, "eval", "ab", f)[0] == 3
    assert run(capsys, "efsim", "ab", "ab")[0] == 3
    code, _, err = run(capsys, "game", "a" * 20, "a" * 21, 4, "--oracle", "--max-states", 5)
    assert code == 4 and "capacity" in err


def test_deterministic_and_module_entry(lexicon_file):
    cmd = [sys.executable, "-m", "efsynth", "synth", str(lexicon_file), "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b'{"formula":{"kind":"or"')
