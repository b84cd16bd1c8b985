from fractions import Fraction as F

from tpbessel.audit import AuditedRational, SubtractionAudit
from tpbessel.bessel import bd_bessel_collocation
from tpbessel.bidiagonal import expand
from tpbessel.matrices import NodeSequence
from tpbessel.solvers import solve


def audited_bd(bd, audit):
    return bd.map(lambda x: AuditedRational(x, audit))


def test_arithmetic_matches_fractions():
    audit = SubtractionAudit()
    a = AuditedRational(F(3, 4), audit)
    b = AuditedRational(F(-1, 2), audit)
    assert (a + b).value == F(1, 4)
    assert (a * b).value == F(-3, 8)
    assert (a / b).value == F(-3, 2)
    assert (-a).value == F(-3, 4)
    assert a > b
    assert (2 * a).value == F(3, 2)


def test_same_sign_subtraction_counted():
    audit = SubtractionAudit()
    a = AuditedRational(F(3), audit)
    b = AuditedRational(F(1), audit)
    _ = a - b
    assert audit.same_sign_subtractions == 1
    assert audit.total_subtractions == 1


def test_opposite_sign_subtraction_not_counted():
    audit = SubtractionAudit()
    a = AuditedRational(F(3), audit)
    b = AuditedRational(F(-1), audit)
    _ = a - b
    assert audit.same_sign_subtractions == 0
    assert audit.total_subtractions == 1


def test_cancelling_addition_counted():
    audit = SubtractionAudit()
    a = AuditedRational(F(3), audit)
    b = AuditedRational(F(-1), audit)
    _ = a + b
    assert audit.same_sign_subtractions == 1


def test_expand_is_subtraction_free():
    bd = bd_bessel_collocation(NodeSequence.integers(6))
    audit = SubtractionAudit()
    expand(audited_bd(bd, audit))
    assert audit.same_sign_subtractions == 0


def test_solve_alternating_is_cancellation_free():
    bd = bd_bessel_collocation(NodeSequence.integers(6))
    audit = SubtractionAudit()
    b = [AuditedRational(F((-1) ** i * (i + 1)), audit) for i in range(6)]
    solve(audited_bd(bd, audit), b)
    assert audit.same_sign_subtractions == 0


def test_solve_general_rhs_triggers_the_instrument():
    # control case: a same-sign right-hand side must be detected
    bd = bd_bessel_collocation(NodeSequence.integers(6))
    audit = SubtractionAudit()
    b = [AuditedRational(F(i + 1), audit) for i in range(6)]
    solve(audited_bd(bd, audit), b)
    assert audit.same_sign_subtractions > 0
