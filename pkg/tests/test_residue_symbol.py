import pytest

from residuemat import (
    CycMatrix,
    RootIndex,
    SymbolContext,
    from_code,
    index_to_element,
    is_irreducible,
    mod_pow,
    monic_irreducibles,
    norm,
    one,
    parse_poly,
    reciprocity_index,
    residue_matrix,
    symbol,
    variable,
    verify_reciprocity,
    verify_symbol_structure,
    zero,
)

from conftest import get_context, get_field
from naive import naive_symbol_index


def test_context_validates_d(f5):
    SymbolContext(f5, 4)
    with pytest.raises(ValueError):
        SymbolContext(f5, 3)
    with pytest.raises(ValueError):
        SymbolContext(f5, 0)


def test_zeta_power_table(f13):
    ctx = SymbolContext(f13, 4)
    assert ctx.zeta_powers == tuple(index_to_element(f13, 4, k) for k in range(4))
    zeta = ctx.zeta_powers[1]
    assert f13.pow(zeta, 4) == 1
    assert all(f13.pow(zeta, k) != 1 for k in range(1, 4))
    assert ctx.zeta_powers[0] == 1


# Values below were computed with the defining power map
# a^((|P|-1)/d) mod P followed by a generator-power scan (see naive.py),
# then frozen.


def test_symbol_small_prime_fields():
    ctx32 = get_context(3, 2)
    f3 = ctx32.field
    t = variable(f3)
    t1 = parse_poly("t+1", f3)
    # t = -1 mod t+1 and (-1)^1 = zeta^1 for d = 2
    assert symbol(ctx32, t, t1) == RootIndex(1, 2)
    assert symbol(ctx32, parse_poly("2", f3), t1) == RootIndex(1, 2)
    assert symbol(ctx32, t1, t) == RootIndex(0, 2)
    # t^2 + 1 = (-1)^2 + 1 = 2 = -1 mod t+1
    assert symbol(ctx32, parse_poly("t^2+1", f3), t1) == RootIndex(1, 2)

    ctx54 = get_context(5, 4)
    f5 = ctx54.field
    assert symbol(ctx54, variable(f5), parse_poly("t+2", f5)) == RootIndex(3, 4)
    assert symbol(ctx54, parse_poly("t+2", f5), variable(f5)) == RootIndex(1, 4)
    assert symbol(ctx54, parse_poly("2", f5), variable(f5)) == RootIndex(1, 4)


def test_symbol_extension_field():
    ctx = get_context(9, 4)
    f9 = ctx.field
    P = parse_poly("t^2 + {0,1}*t + {1,1}", f9)
    assert is_irreducible(P)
    expected = {"t": 1, "t + 1": 0, "{0,1}": 0, "t + {1,1}": 1}
    for text, k in expected.items():
        assert symbol(ctx, parse_poly(text, f9), P) == RootIndex(k, 4)
    Q = parse_poly("t + {0,1}", f9)
    assert symbol(ctx, variable(f9), Q) == RootIndex(2, 4)
    assert symbol(ctx, parse_poly("{1,1}", f9), Q) == RootIndex(1, 4)


@pytest.mark.parametrize(
    "q,d",
    [(3, 2), (5, 2), (5, 4), (7, 3), (7, 6), (9, 4), (9, 8), (4, 3), (8, 7), (13, 4)],
)
def test_symbol_matches_defining_computation(q, d):
    # exhaustive over residues, against the schoolbook power map; a handful
    # of moduli per degree keeps the cross product affordable
    ctx = get_context(q, d)
    f = ctx.field
    for deg in (1, 2):
        moduli = []
        for P in monic_irreducibles(f, deg):
            moduli.append(P)
            if len(moduli) == 3:
                break
        for P in moduli:
            for code in range(1, q**deg):
                a = from_code(f, code)
                assert symbol(ctx, a, P).k == naive_symbol_index(ctx, a, P)


def test_symbol_depends_only_on_residue_class():
    ctx = get_context(9, 8)
    f = ctx.field
    P = parse_poly("t^2 + {0,1}*t + {1,1}", f)
    for a_code in (1, 5, 17, 40):
        a = from_code(f, a_code)
        base = symbol(ctx, a, P)
        for h_code in (1, 9, 33):
            shifted = a + from_code(f, h_code) * P
            assert symbol(ctx, shifted, P) == base


def test_symbol_multiplicative():
    ctx = get_context(5, 4)
    f = ctx.field
    P = parse_poly("t^2 + 2", f)
    assert is_irreducible(P)
    units = [from_code(f, c) for c in range(1, 25)]
    ks = {u: symbol(ctx, u, P).k for u in units}
    for a in units[:8]:
        for b in units:
            prod = (a * b) % P
            assert ks[prod] == (ks[a] + ks[b]) % 4


def test_symbol_power_residue_criterion():
    # index 0 exactly on the d-th powers of the unit group
    ctx = get_context(5, 4)
    f = ctx.field
    P = parse_poly("t^2 + 2", f)
    units = [from_code(f, c) for c in range(1, 25)]
    powers = {mod_pow(u, 4, P) for u in units}
    zero_set = {u for u in units if symbol(ctx, u, P).k == 0}
    assert zero_set == powers
    assert len(zero_set) == 24 // 4


def test_symbol_agrees_with_direct_mod_pow():
    # the norm shortcut must equal the textbook exponentiation route
    for q, d in ((9, 2), (13, 6), (8, 7)):
        ctx = get_context(q, d)
        f = ctx.field
        for P in monic_irreducibles(f, 3):
            for code in (1, 2, q + 3, q**2 + 1):
                a = from_code(f, code)
                r = mod_pow(a, (norm(P) - 1) // d, P)
                assert r.degree == 0
                assert ctx.zeta_powers[symbol(ctx, a, P).k] == r.coeffs[0]
            break  # one modulus per field is plenty at degree 3


def test_symbol_errors(f3, f5):
    ctx = get_context(3, 2)
    t = variable(f3)
    with pytest.raises(ValueError, match="symbol undefined: a divisible by P"):
        symbol(ctx, t, t)
    with pytest.raises(ValueError, match="symbol undefined"):
        symbol(ctx, zero(f3), t)
    with pytest.raises(ValueError, match="not irreducible"):
        symbol(ctx, one(f3), parse_poly("t^2+2*t+1", f3))
    with pytest.raises(ValueError, match="monic"):
        symbol(ctx, one(f3), parse_poly("2*t+1", f3))
    with pytest.raises(ValueError, match="monic"):
        symbol(ctx, t, one(f3))
    with pytest.raises(ValueError, match="different field"):
        symbol(ctx, variable(f5), t)
    with pytest.raises(ValueError, match="different field"):
        symbol(ctx, t, variable(f5))


def test_reciprocity_index_values():
    # characteristic 2: the sign is always trivial
    ctx43 = get_context(4, 3)
    assert reciprocity_index(ctx43, 1, 1) == RootIndex(0, 3)
    assert reciprocity_index(ctx43, 3, 5) == RootIndex(0, 3)
    # (q-1)/d even: trivial again
    assert reciprocity_index(get_context(5, 2), 1, 1) == RootIndex(0, 2)
    assert reciprocity_index(get_context(7, 3), 2, 3) == RootIndex(0, 3)
    # (q-1)/d odd and both degrees odd: index d/2
    assert reciprocity_index(get_context(5, 4), 1, 1) == RootIndex(2, 4)
    assert reciprocity_index(get_context(9, 8), 1, 3) == RootIndex(4, 8)
    assert reciprocity_index(get_context(7, 6), 1, 1) == RootIndex(3, 6)
    # one even degree kills the sign
    assert reciprocity_index(get_context(7, 6), 1, 2) == RootIndex(0, 6)
    assert reciprocity_index(get_context(5, 4), 2, 3) == RootIndex(0, 4)
    with pytest.raises(ValueError):
        reciprocity_index(ctx43, 0, 1)


@pytest.mark.parametrize("q,d", [(3, 2), (4, 3), (5, 4), (9, 8)])
def test_reciprocity_law_small(q, d):
    ctx = get_context(q, d)
    f = ctx.field
    polys = [P for deg in (1, 2) for P in monic_irreducibles(f, deg)]
    for P in polys:
        for Q in polys:
            if P == Q:
                continue
            lhs = (symbol(ctx, P, Q).k - symbol(ctx, Q, P).k) % d
            assert lhs == reciprocity_index(ctx, P.degree, Q.degree).k


def test_verify_reciprocity_counts():
    ctx = get_context(3, 2)
    rep = verify_reciprocity(ctx, 3)
    # 3 + 3 + 8 = 14 irreducibles of degree <= 3, so 14*13 ordered pairs
    assert (rep.q, rep.d, rep.max_deg) == (3, 2, 3)
    assert rep.pairs == 182
    assert rep.failures == ()
    assert rep.ok
    assert verify_reciprocity(ctx, 2).pairs == 30
    with pytest.raises(ValueError):
        verify_reciprocity(ctx, 0)


def test_verify_symbol_structure_counts():
    rep = verify_symbol_structure(get_context(3, 2), 2)
    assert (rep.moduli, rep.residues, rep.products) == (6, 30, 117)
    assert rep.mult_failures == () and rep.surjectivity_failures == ()
    assert rep.ok
    with pytest.raises(ValueError):
        verify_symbol_structure(get_context(3, 2), 0)


@pytest.mark.parametrize("q,d", [(5, 4), (7, 6), (9, 8), (4, 3)])
def test_verify_symbol_structure_ok(q, d):
    assert verify_symbol_structure(get_context(q, d), 2).ok


def test_residue_matrix_entries():
    ctx = get_context(3, 2)
    f = ctx.field
    t = variable(f)
    t1 = parse_poly("t+1", f)
    M = residue_matrix(ctx, [t, t1])
    assert M == CycMatrix(2, 2, [[None, 1], [0, None]])
    assert M.entry(0, 1) == 1  # symbol(t, t+1)
    assert M.entry(1, 0) == 0  # symbol(t+1, t)
    single = residue_matrix(ctx, [t])
    assert single.n == 1 and single.d == 2


def test_residue_matrix_larger():
    ctx = get_context(5, 4)
    f = ctx.field
    polys = [parse_poly(s, f) for s in ("t", "t+1", "t^2+2")]
    M = residue_matrix(ctx, polys)
    assert M.n == 3 and M.d == 4
    for i in range(3):
        for j in range(3):
            if i != j:
                assert M.entry(i, j) == symbol(ctx, polys[i], polys[j]).k


def test_residue_matrix_errors(f3):
    ctx = get_context(3, 2)
    t = variable(f3)
    with pytest.raises(ValueError, match="duplicate"):
        residue_matrix(ctx, [t, t])
    with pytest.raises(ValueError, match="not irreducible"):
        residue_matrix(ctx, [t, parse_poly("t^2+2*t+1", f3)])
    with pytest.raises(ValueError, match="at least one"):
        residue_matrix(ctx, [])
