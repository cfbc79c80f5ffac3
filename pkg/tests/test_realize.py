import random

import pytest

from residuemat import (
    CycMatrix,
    NoneFoundAtDegreeError,
    NotCoprimeError,
    NotRealizableError,
    RealizeError,
    RealizeOptions,
    ResourceExhaustedError,
    RootIndex,
    SymbolContext,
    choose_residue_with_symbol,
    crt_combine,
    find_irreducible_in_class,
    format_poly,
    is_irreducible,
    parse_poly,
    realize,
    residue_matrix,
    symbol,
    variable,
    zero,
)
from residuemat.realize import _choose_residue

from conftest import get_context, get_field


def mat(n, d, *rows):
    return CycMatrix(n, d, [list(r) for r in rows])


# -- residue selection ---------------------------------------------------


def test_choose_residue_deterministic():
    ctx = get_context(3, 2)
    f = ctx.field
    t1 = parse_poly("t+1", f)
    assert choose_residue_with_symbol(ctx, t1, 1) == parse_poly("2", f)
    assert choose_residue_with_symbol(ctx, t1, 0) == parse_poly("1", f)
    ctx54 = get_context(5, 4)
    f5 = ctx54.field
    assert choose_residue_with_symbol(ctx54, variable(f5), 1) == parse_poly("2", f5)
    # RootIndex targets are accepted too
    assert choose_residue_with_symbol(
        ctx54, variable(f5), RootIndex(1, 4)
    ) == parse_poly("2", f5)


def test_choose_residue_target_zero_is_one():
    # 1 has symbol 0 everywhere and is the first residue scanned
    for q, d in ((3, 2), (5, 4), (9, 8)):
        ctx = get_context(q, d)
        t = variable(ctx.field)
        u = choose_residue_with_symbol(ctx, t, 0)
        assert u == parse_poly("1", ctx.field)


@pytest.mark.parametrize("q,d", [(5, 4), (9, 2), (13, 6)])
def test_choose_residue_hits_every_target(q, d):
    ctx = get_context(q, d)
    f = ctx.field
    for P in (variable(f), parse_poly("t+1", f)):
        for k in range(d):
            u = choose_residue_with_symbol(ctx, P, k)
            assert symbol(ctx, u, P).k == k
            assert u.degree < P.degree


def test_choose_residue_random_mode():
    ctx = get_context(5, 4)
    t = variable(ctx.field)
    opts = RealizeOptions(seed=7, deterministic=False)
    u = choose_residue_with_symbol(ctx, t, 3, opts)
    assert symbol(ctx, u, t).k == 3
    # same seed, same draw
    assert choose_residue_with_symbol(ctx, t, 3, opts) == u


def test_choose_residue_rejection_rate():
    # symbols are equidistributed, so trials are geometric with mean d
    ctx = get_context(5, 4)
    t = variable(ctx.field)
    rng = random.Random(2024)
    trials = [_choose_residue(ctx, t, i % 4, rng)[1] for i in range(1000)]
    mean = sum(trials) / len(trials)
    assert 2.0 < mean < 6.0


def test_choose_residue_target_range(f5):
    ctx = get_context(5, 4)
    with pytest.raises(ValueError):
        choose_residue_with_symbol(ctx, variable(f5), 4)
    with pytest.raises(ValueError):
        choose_residue_with_symbol(ctx, variable(f5), -1)


# -- CRT -------------------------------------------------------------------


def test_crt_combine_example(f3):
    t = variable(f3)
    t1 = parse_poly("t+1", f3)
    u0, Q = crt_combine([(parse_poly("1", f3), t), (parse_poly("2", f3), t1)])
    assert u0 == parse_poly("2*t+1", f3)
    assert Q == t * t1


def test_crt_combine_single(f3):
    u0, Q = crt_combine([(parse_poly("2", f3), variable(f3))])
    assert u0 == parse_poly("2", f3) and Q == variable(f3)


def test_crt_combine_reconstructs(f5):
    moduli = [parse_poly(s, f5) for s in ("t", "t+1", "t^2+2")]
    residues = [parse_poly(s, f5) for s in ("3", "2", "t+4")]
    u0, Q = crt_combine(list(zip(residues, moduli)))
    assert Q.degree == 4
    assert u0.degree < Q.degree
    for u, P in zip(residues, moduli):
        assert u0 % P == u


def test_crt_combine_zero_residues_allowed(f3):
    u0, Q = crt_combine(
        [(zero(f3), variable(f3)), (parse_poly("1", f3), parse_poly("t+1", f3))]
    )
    assert u0 % variable(f3) == zero(f3)
    assert u0 % parse_poly("t+1", f3) == parse_poly("1", f3)


def test_crt_combine_errors(f3, f5):
    t = variable(f3)
    t1 = parse_poly("t+1", f3)
    with pytest.raises(ValueError, match="at least one"):
        crt_combine([])
    with pytest.raises(ValueError, match="repeated"):
        crt_combine([(parse_poly("1", f3), t), (parse_poly("2", f3), t)])
    with pytest.raises(ValueError, match="not reduced"):
        crt_combine([(t, t)])
    with pytest.raises(ValueError, match="irreducible"):
        crt_combine([(parse_poly("1", f3), parse_poly("t^2+2*t+1", f3))])
    with pytest.raises(ValueError, match="mixed fields"):
        crt_combine([(parse_poly("1", f3), t), (parse_poly("1", f5), variable(f5))])


# -- irreducible search in a residue class --------------------------------


def test_find_irreducible_examples(f3):
    ctx = get_context(3, 2)
    t = variable(f3)
    got = find_irreducible_in_class(ctx, parse_poly("1", f3), t, 1)
    assert got == parse_poly("t+1", f3)
    got = find_irreducible_in_class(ctx, parse_poly("2", f3), t, 2)
    assert got == parse_poly("t^2+t+2", f3)  # t^2+2 comes first but has root 1
    got = find_irreducible_in_class(
        ctx, parse_poly("2", f3), t, 2, exclude={parse_poly("t^2+t+2", f3)}
    )
    assert got == parse_poly("t^2+2*t+2", f3)


def test_find_irreducible_respects_class_and_degree(f5):
    ctx = get_context(5, 4)
    Q = parse_poly("t^2+2", f5)
    u0 = parse_poly("t+1", f5)
    for deg in (3, 4, 5):
        P = find_irreducible_in_class(ctx, u0, Q, deg)
        assert P.degree == deg and P.is_monic() and is_irreducible(P)
        assert P % Q == u0


def test_find_irreducible_none_at_degree():
    ctx = get_context(2, 1)
    f2 = ctx.field
    Q = parse_poly("t^2+t+1", f2)
    u0 = variable(f2)
    # the only degree-2 candidate is Q + t = t^2 + 1 = (t+1)^2
    with pytest.raises(NoneFoundAtDegreeError) as exc:
        find_irreducible_in_class(ctx, u0, Q, 2)
    assert exc.value.degree == 2 and exc.value.tested == 1
    assert find_irreducible_in_class(ctx, u0, Q, 3) == parse_poly("t^3+t+1", f2)


def test_find_irreducible_not_coprime(f3):
    ctx = get_context(3, 2)
    t = variable(f3)
    Q = t * parse_poly("t+1", f3)
    with pytest.raises(NotCoprimeError):
        find_irreducible_in_class(ctx, t, Q, 3)
    with pytest.raises(NotCoprimeError):
        find_irreducible_in_class(ctx, zero(f3), t, 2)


def test_find_irreducible_argument_errors(f3):
    ctx = get_context(3, 2)
    t = variable(f3)
    with pytest.raises(ValueError, match="monic"):
        find_irreducible_in_class(ctx, parse_poly("1", f3), parse_poly("2*t", f3), 2)
    with pytest.raises(ValueError, match="reduced"):
        find_irreducible_in_class(ctx, parse_poly("t^2", f3), t, 3)
    with pytest.raises(ValueError, match="below deg Q"):
        find_irreducible_in_class(ctx, parse_poly("1", f3), parse_poly("t^2+1", f3), 1)


def test_find_irreducible_random_mode(f5):
    ctx = get_context(5, 4)
    Q = variable(f5)
    u0 = parse_poly("2", f5)
    opts = RealizeOptions(seed=11, deterministic=False)
    P = find_irreducible_in_class(ctx, u0, Q, 4, opts=opts)
    assert P.degree == 4 and is_irreducible(P) and P % Q == u0
    assert find_irreducible_in_class(ctx, u0, Q, 4, opts=opts) == P


# -- options ---------------------------------------------------------------


def test_realize_options_validation():
    RealizeOptions(seed=5, max_degree=10, base_degree_odd=3, base_degree_even=4)
    with pytest.raises(ValueError):
        RealizeOptions(max_degree=1)
    with pytest.raises(ValueError):
        RealizeOptions(base_degree_odd=2)
    with pytest.raises(ValueError):
        RealizeOptions(base_degree_even=3)
    with pytest.raises(ValueError):
        RealizeOptions(base_degree_odd=-1)


# -- realize ----------------------------------------------------------------


def check_realization(ctx, M, res):
    assert len(res.polys) == M.n == len(set(res.polys))
    for P in res.polys:
        assert P.is_monic() and is_irreducible(P)
    assert residue_matrix(ctx, res.polys) == M
    assert len(res.transcript) == M.n
    for i, st in enumerate(res.transcript):
        assert st.position == i + 1
        assert st.chosen == res.polys[res.sigma[i]]
        for choice in st.residues:
            assert st.chosen % choice.modulus == choice.residue
            assert symbol(ctx, choice.residue, choice.modulus).k == choice.target
        if i:
            assert st.degrees_tried[-1] == st.chosen.degree


def test_realize_one_by_one():
    ctx = get_context(3, 2)
    res = realize(ctx, CycMatrix(1, 2, [[None]]))
    assert res.polys == (variable(ctx.field),)
    assert res.branch == "odd" and res.s == 1 and res.sigma == (0,)
    check_realization(ctx, CycMatrix(1, 2, [[None]]), res)


def test_realize_one_by_one_symmetric_branch():
    ctx = get_context(5, 2)
    res = realize(ctx, CycMatrix(1, 2, [[None]]))
    assert res.branch == "symmetric" and res.s is None
    assert res.polys == (variable(ctx.field),)


def test_realize_symmetric_pair():
    ctx = get_context(5, 2)
    M = mat(2, 2, (None, 1), (1, None))
    res = realize(ctx, M)
    check_realization(ctx, M, res)
    assert res.branch == "symmetric"


def test_realize_skew_pair_odd_degrees():
    ctx = get_context(5, 4)
    M = mat(2, 4, (None, 1), (3, None))
    res = realize(ctx, M)
    check_realization(ctx, M, res)
    assert res.s == 2
    assert all(P.degree % 2 == 1 for P in res.polys)


def test_realize_parity_follows_s():
    # over q = 13, d = 4 the odd law applies; each admissible matrix takes
    # odd degrees at its s skew positions and even degrees elsewhere
    ctx = get_context(13, 4)
    cases = {
        1: mat(3, 4, (None, 1, 0), (1, None, 2), (0, 2, None)),
        2: mat(3, 4, (None, 3, 0), (1, None, 2), (0, 2, None)),
        3: mat(3, 4, (None, 3, 1), (1, None, 2), (3, 0, None)),
    }
    for s, M in cases.items():
        res = realize(ctx, M)
        check_realization(ctx, M, res)
        assert res.s == s
        for i in range(M.n):
            want_odd = 1 if i < s else 0
            assert res.polys[res.sigma[i]].degree % 2 == want_odd


def test_realize_all_two_by_two():
    from residuemat import classify, iter_all_matrices

    for q, d in ((5, 2), (5, 4), (9, 4), (13, 4)):
        ctx = get_context(q, d)
        for M in iter_all_matrices(2, d):
            if classify(M, q).realizable:
                check_realization(ctx, M, realize(ctx, M))


def test_realize_not_realizable():
    ctx = get_context(9, 4)
    with pytest.raises(NotRealizableError, match="witness"):
        realize(ctx, mat(2, 4, (None, 1), (2, None)))
    ctx54 = get_context(5, 4)
    with pytest.raises(NotRealizableError, match="pair"):
        realize(ctx54, mat(2, 4, (None, 0), (1, None)))
    with pytest.raises(NotRealizableError, match="diagonal"):
        realize(ctx54, mat(3, 4, (None, 0, 0), (2, None, 0), (2, 0, None)))


def test_realize_resource_exhausted():
    ctx = get_context(3, 2)
    M = mat(2, 2, (None, 1), (0, None))  # skew: position 2 needs odd degree >= 3
    with pytest.raises(ResourceExhaustedError):
        realize(ctx, M, RealizeOptions(max_degree=2))
    res = realize(ctx, M)  # the default cutoff is fine
    check_realization(ctx, M, res)
    assert res.polys[res.sigma[1]].degree == 3


def test_realize_d_mismatch():
    ctx = get_context(5, 2)
    with pytest.raises(ValueError, match="d = 4"):
        realize(ctx, mat(2, 4, (None, 1), (1, None)))


def test_realize_deterministic_reproducible():
    ctx = get_context(5, 4)
    M = mat(2, 4, (None, 1), (3, None))
    assert realize(ctx, M) == realize(ctx, M)


def test_realize_random_mode():
    ctx = get_context(5, 4)
    M = mat(3, 4, (None, 1, 2), (3, None, 0), (2, 0, None))
    opts = RealizeOptions(seed=42, deterministic=False)
    res = realize(ctx, M, opts)
    check_realization(ctx, M, res)
    assert realize(ctx, M, opts) == res
    # a different seed still realizes the same matrix
    res2 = realize(ctx, M, RealizeOptions(seed=43, deterministic=False))
    check_realization(ctx, M, res2)


def test_realize_base_degree_knobs():
    ctx = get_context(5, 2)
    M = mat(2, 2, (None, 1), (1, None))
    res = realize(ctx, M, RealizeOptions(base_degree_odd=3))
    check_realization(ctx, M, res)
    assert res.transcript[0].chosen.degree == 3


def test_realization_json_shape():
    ctx = get_context(5, 4)
    M = mat(2, 4, (None, 1), (3, None))
    res = realize(ctx, M)
    out = res.to_json_dict()
    assert set(out) == {"polys", "branch", "s", "sigma", "transcript"}
    assert out["polys"] == [format_poly(P) for P in res.polys]
    assert out["sigma"] == [i + 1 for i in res.sigma]
    assert out["s"] == 2
    step = out["transcript"][1]
    assert step["position"] == 2
    assert step["residues"][0]["modulus"] == format_poly(res.transcript[1].residues[0].modulus)
    assert isinstance(step["degrees_tried"], list)
    first = out["transcript"][0]
    assert first["crt_residue"] is None and first["crt_modulus"] is None
