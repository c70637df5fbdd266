import pytest

from bstat.distributions import SizeLimitError
from bstat.verify import (
    GROUP_CAPS,
    GROUPS,
    CheckResult,
    check_bijection,
    check_carlitz,
    check_fiber_identities,
    check_global_identities,
    check_lemmas,
    run_all,
)


def by_identity(results):
    return {r.identity: r for r in results}


# ------------------------------------------------------------------ happy path


def test_run_all_passes_at_small_sizes():
    results = run_all(4)
    assert results and all(r.ok for r in results)
    assert all(r.witness is None for r in results)
    # every group contributes every size up to its cap
    seen = {(r.identity, r.n) for r in results}
    assert ("fibers.neg", 4) in seen
    assert ("global.equidistribution", 4) in seen
    assert ("bijection.fibers", 4) in seen
    assert ("carlitz.classical", 4) in seen
    assert ("lemmas.symdiff", 4) in seen


def test_identity_names_are_stable():
    results = run_all(1)
    assert [r.identity for r in results] == [
        "fibers.neg",
        "fibers.flag",
        "global.neg",
        "global.flag",
        "global.equidistribution",
        "bijection.roundtrip",
        "bijection.weights",
        "bijection.fibers",
        "carlitz.classical",
        "carlitz.neg",
        "carlitz.flag",
        "lemmas.flip",
        "lemmas.symdiff",
    ]


def test_checked_counts_reflect_the_enumeration():
    fibers = by_identity(check_fiber_identities(3))
    assert fibers["fibers.neg"].checked == 6  # one comparison per u in S_3
    bij = by_identity(check_bijection(3))
    assert bij["bijection.roundtrip"].checked == 48
    assert bij["bijection.fibers"].checked == 6
    glob = by_identity(check_global_identities(3))
    assert glob["global.neg"].checked == 48
    carlitz = by_identity(check_carlitz(2, trunc=6))
    assert carlitz["carlitz.neg"].checked == 7


def test_carlitz_default_truncation_scales_with_n():
    results = check_carlitz(3)
    assert all(r.checked == 2 * 3 + 4 + 1 for r in results)
    assert all(r.ok for r in results)


def test_check_result_ok_property():
    good = CheckResult("x", 1, "pass", 10)
    bad = CheckResult("x", 1, "fail", 10, witness="w")
    assert good.ok and not bad.ok


# -------------------------------------------------------------------- selection


def test_only_restricts_the_groups():
    results = run_all(2, only=["carlitz"])
    assert {r.identity.split(".")[0] for r in results} == {"carlitz"}
    results = run_all(2, only=["fibers", "lemmas"])
    assert {r.identity.split(".")[0] for r in results} == {"fibers", "lemmas"}


def test_unknown_group_is_rejected():
    with pytest.raises(ValueError, match="bogus"):
        run_all(2, only=["bogus"])


def test_n_max_out_of_range_is_rejected():
    with pytest.raises(SizeLimitError):
        run_all(0)
    with pytest.raises(SizeLimitError):
        run_all(max(GROUP_CAPS.values()) + 1)


def test_group_caps_clamp_the_size(monkeypatch):
    monkeypatch.setitem(GROUP_CAPS, "lemmas", 2)
    results = run_all(4, only=["lemmas"])
    assert {r.n for r in results} == {1, 2}


def test_trunc_override_reaches_carlitz():
    results = run_all(2, trunc=3, only=["carlitz"])
    assert all(r.checked == 4 for r in results)
    assert all(r.ok for r in results)


# ------------------------------------------------------- mutation sensitivity
#
# Deliberately broken statistics must be caught with a witness; the
# untouched family keeps passing, which pins down what each check
# actually exercises.


def test_broken_fdes_breaks_flag_checks(broken_flag_descent, python_kernel):
    fibers = by_identity(check_fiber_identities(3))
    assert fibers["fibers.neg"].ok
    assert not fibers["fibers.flag"].ok
    assert "u=" in fibers["fibers.flag"].witness

    glob = by_identity(check_global_identities(3))
    assert glob["global.neg"].ok
    assert not glob["global.flag"].ok
    assert not glob["global.equidistribution"].ok
    assert "coefficient" in glob["global.flag"].witness

    bij = by_identity(check_bijection(3))
    assert bij["bijection.roundtrip"].ok  # the map itself is untouched
    assert not bij["bijection.weights"].ok
    assert "w=" in bij["bijection.weights"].witness


def test_integer_ranking_breaks_standardization_checks(integer_letter_ranking):
    fibers = by_identity(check_fiber_identities(3))
    assert not fibers["fibers.neg"].ok
    assert "u=" in fibers["fibers.neg"].witness
    # the magnitude fiber never standardizes, so the flag side still passes
    assert fibers["fibers.flag"].ok

    bij = by_identity(check_bijection(3))
    assert not (bij["bijection.roundtrip"].ok and bij["bijection.weights"].ok)
    failing = [r for r in bij.values() if not r.ok]
    assert failing and all(r.witness for r in failing)


def test_checks_recover_after_mutants():
    # fixtures from the two tests above must not leak
    assert all(r.ok for r in check_fiber_identities(2))
    assert all(r.ok for r in check_bijection(2))
