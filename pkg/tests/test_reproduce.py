import pytest


def test_display_docstring():
    from permspec.reproduce import BaseCheck

    class FailingCheck(BaseCheck):
        """A check that always fails

        Error handling:
        - First hint
          continued
        - Second hint
        """

        def make_check(self):
            raise ArithmeticError("boom")

    check = FailingCheck().run_check()
    assert check.result is False
    assert check.error_msg == "ArithmeticError: boom"
    assert check.error_handling == "- First hint\n  continued\n- Second hint"
    assert check.todict()["check"] == "FailingCheck"


def test_multiple_error_handling():
    from permspec.reproduce import BaseCheck

    class BrokenDoc(BaseCheck):
        """
        Error handling:
        - one
        Error handling:
        - two
        """

    with pytest.raises(ValueError, match="multiple Error handlings"):
        BrokenDoc().display_docstring()


def test_result_must_be_set():
    from permspec.reproduce import BaseCheck

    class Lazy(BaseCheck):
        def make_check(self):
            pass

    with pytest.raises(ValueError, match="not updated"):
        Lazy().run_check()


def test_seed_from_settings(monkeypatch):
    from permspec.reproduce import BaseCheck

    monkeypatch.setenv("PERMSPEC_SEED", "17")
    assert BaseCheck().seed == 17
    assert BaseCheck(seed=3).seed == 3


@pytest.mark.parametrize(
    "name",
    ["CirculantCheck", "WeightedExampleCheck", "ParityCensusCheck", "ExtremalCheck"],
)
def test_quick_checks_pass(name):
    from permspec import reproduce

    check = getattr(reproduce, name)().run_check()
    assert check.result is True, check.error_msg


def test_print_summary(capsys):
    from permspec.reproduce import BaseCheck, ExtremalCheck, print_summary

    class Failing(BaseCheck):
        """Error handling:
        - look elsewhere
        """

        label = "always fails"

        def make_check(self):
            self.result = False
            self.error_msg = "expected failure"

    checks = [ExtremalCheck().run_check(), Failing().run_check()]
    print_summary(checks)
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" in out
    assert "expected failure" in out
    assert "- look elsewhere" in out
