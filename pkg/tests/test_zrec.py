from qtetra.ops3d import family
from qtetra.qcoeff import ONE, QCoeff, ZERO
from qtetra.tensor import enumerate_weighted, tuples_up_to, weight_values
from qtetra.zrec import ZFamily, XOracleFamily, x_raw, z_gamma, z_raw


def qp(n):
    return QCoeff.q_power(n)


def sp(n):
    return QCoeff.s_power(n)


def test_z_base_and_weight_zero():
    for i in range(4):
        assert z_raw(i, 0, 0, 0, i, 0, 0, 0) == ONE
    assert z_raw(1, 0, 0, 0, 2, 0, 0, 0).is_zero()
    # b = c = d = 0 with nonzero (j, k, l) violates conservation
    assert z_raw(0, 1, 0, 0, 1, 0, 0, 0).is_zero()


def test_z_block_0112():
    zf = ZFamily()
    got = {sup: c for sup, c in zf.cols_for_sub((0, 1, 1, 2))}
    pq, mq = ONE + qp(1), ONE - qp(1)
    want = {
        (0, 0, 3, 1): qp(4) * pq * pq * (ONE + qp(2)),
        (0, 1, 1, 2): -(qp(2) * (ONE - qp(4) - sp(14))),
        (1, 0, 2, 2): -(qp(3) * pq * (ONE + qp(1) + qp(2) + qp(3) + qp(5))),
        (1, 1, 0, 3): ONE - qp(4) - sp(14),
        (2, 0, 1, 3): -(qp(5) * (ONE + qp(3)) / mq),
        (3, 0, 0, 4): qp(2) * pq / mq,
    }
    assert got == want


def test_z_block_2010():
    zf = ZFamily()
    got = {sup: c for sup, c in zf.cols_for_sub((2, 0, 1, 0))}
    mq = ONE - qp(1)
    want = {
        (2, 0, 1, 0): -(ONE - qp(2) + qp(3)),
        (1, 1, 0, 0): qp(1) * mq * mq,
        (3, 0, 0, 1): qp(1),
    }
    assert got == want


def test_z_weight_forms():
    zf = ZFamily()
    for sup in tuples_up_to(zf.signature, 2):
        if sum(sup) > 4:
            continue
        for sub, _ in zf.rows_for_sup(sup):
            assert weight_values(zf.weight_forms, sub) == weight_values(
                zf.weight_forms, sup
            )


def test_x_raw_seeds():
    assert x_raw(0, 0, 0, 0, 0, 0, 0, 0) == ONE
    assert x_raw(0, 0, 1, 0, 0, 1, 0, 1) == -(sp(1) * (ONE + qp(1)))
    assert x_raw(0, 1, 0, 1, 0, 1, 0, 1) == ONE - qp(1) - qp(2)
    # isotropic positions cap at 1
    assert x_raw(2, 0, 0, 0, 2, 0, 0, 0).is_zero()


def test_x_oracle_agrees_small():
    X, XO = family("X"), XOracleFamily()
    for sup in tuples_up_to(X.signature, 2):
        targets = weight_values(X.weight_forms, sup)
        for sub in enumerate_weighted(X.signature, X.weight_forms, targets):
            assert X.element(sub, sup) == XO.element(sub, sup), (sub, sup)


def test_z_gamma_is_reversal_conversion():
    # one hand computation: in (0,0,0,1) -> out (0,0,0,1) is q-diagonal-free
    assert z_gamma((0, 0, 0, 1), (0, 0, 0, 1)) == ONE
    assert z_gamma((1, 0, 0, 0), (1, 0, 0, 0)) == ONE
