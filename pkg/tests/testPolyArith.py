""" Exact polynomial arithmetic over Q """
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from .base import GcdIterTestCase, poly, nonzeropolys, smallpolys
from gcditer.errors import ParseError, PreconditionError, UndefinedGcdError
from gcditer.polyarith import (ONE, ZERO, RatPoly, coprime_basis, parse_poly,
                               parse_rational, poly_gcd, poly_lcm, poly_pow,
                               poly_eval, squarefree_part)


class TestRatPoly(GcdIterTestCase):

    def test_normalization(self):
        f = RatPoly([1, 2, 0, 0])
        self.assertEqual(f.coeffs, (Fraction(1), Fraction(2)))
        self.assertEqual(f.degree, 1)
        self.assertEqual(RatPoly([0, 0]).degree, -1)
        self.assertFalse(RatPoly([0]))
        self.assertEqual(RatPoly(['-3/2']), Fraction(-3, 2))

    def test_format(self):
        self.assertEqual(str(RatPoly([1, 1, 1])), 't^2+t+1')
        self.assertEqual(str(RatPoly([-1, 1, 0, '-3/2'])), '-3/2*t^3+t-1')
        self.assertEqual(str(ZERO), '0')
        self.assertEqual(str(RatPoly([0, -1])), '-t')

    def test_parse(self):
        self.assertPolyEqual(parse_poly('t^2+t+1'), RatPoly([1, 1, 1]))
        self.assertPolyEqual(parse_poly(' 2*t^3 - t + 1/2 '),
                             RatPoly(['1/2', -1, 0, 2]))
        self.assertPolyEqual(parse_poly('3t'), RatPoly([0, 3]))
        self.assertPolyEqual(parse_poly('t+t'), RatPoly([0, 2]))
        self.assertPolyEqual(parse_poly('-1'), RatPoly([-1]))
        self.assertEqual(parse_rational('-3/2'), Fraction(-3, 2))

    def test_parse_roundtrip(self):
        for text in ('t^2+t+1', '-3/2*t^3+t-1', 't', '-t^4+2', '0'):
            self.assertEqual(str(parse_poly(text)), text)

    def test_parse_errors(self):
        with self.assertRaises(ParseError) as cm:
            parse_poly('t^2+x', 'f')
        self.assertEqual(cm.exception.position, 4)
        self.assertEqual(cm.exception.parameter, 'f')
        self.assertIn('f:', str(cm.exception))
        with self.assertRaises(ParseError):
            parse_poly('')
        with self.assertRaises(ParseError):
            parse_poly('1/0*t')
        with self.assertRaises(ParseError):
            parse_rational('3/')
        with self.assertRaises(ParseError) as cm:
            parse_poly('t^')
        self.assertEqual(cm.exception.position, 1)
        self.assertEqual(cm.exception.reason, 'exponent expected')
        with self.assertRaises(ParseError) as cm:
            parse_poly('2*t ^ +1')
        self.assertEqual(cm.exception.position, 4)
        self.assertEqual(cm.exception.reason, 'exponent expected')
        self.assertTrue(issubclass(ParseError, PreconditionError))

    def test_divmod(self):
        q, r = divmod(poly('t^3+1'), poly('t+1'))
        self.assertPolyEqual(q, 't^2-t+1')
        self.assertFalse(r)
        self.assertTrue(poly('t+1').divides(poly('t^2-1')))
        self.assertFalse(poly('t+2').divides(poly('t^2-1')))
        self.assertTrue(poly('t').divides(ZERO))


class TestPolyGcdPrimitives(GcdIterTestCase):

    def test_gcd_examples(self):
        self.assertEqual(poly_gcd(poly('t^2-1'), poly('t^2+2*t')), ONE)
        f = poly_pow(poly('t+1'), 6) - 1
        self.assertPolyEqual(poly_gcd(poly('t^6-1'), f), 't^2+t+1')
        self.assertPolyEqual(poly_gcd(poly('2*t+4'), ZERO), 't+2')
        with self.assertRaises(UndefinedGcdError):
            poly_gcd(ZERO, ZERO)

    def test_lcm(self):
        self.assertPolyEqual(poly_lcm(poly('t^2-1'), poly('t+1')), 't^2-1')
        self.assertEqual(poly_lcm(poly('t'), ZERO), ZERO)

    def test_pow(self):
        self.assertPolyEqual(poly_pow(poly('t+1'), 2), 't^2+2*t+1')
        self.assertEqual(poly_pow(poly('t^3-7'), 0), ONE)
        self.assertPolyEqual(poly_pow(poly('t'), 6), 't^6')
        with self.assertRaises(PreconditionError):
            poly_pow(poly('t'), -1)

    def test_eval(self):
        f = poly('t^2+t+1')
        self.assertEqual(poly_eval(f, 1), 3)
        self.assertEqual(poly_eval(f, -1), 1)
        self.assertEqual(poly_eval(poly('t^6-1'), 1), 0)
        self.assertEqual(poly_eval(f, Fraction(1, 2)), Fraction(7, 4))

    def test_squarefree(self):
        self.assertPolyEqual(squarefree_part(poly('t^2+2*t+1')), 't+1')
        self.assertPolyEqual(squarefree_part(poly('t^2+t+1')), 't^2+t+1')
        self.assertPolyEqual(squarefree_part(poly('12*t^3')), 't')
        with self.assertRaises(UndefinedGcdError):
            squarefree_part(ZERO)

    def test_coprime_basis(self):
        cb = coprime_basis([poly('t^2'), poly('t^3')])
        self.assertEqual(cb.basis, (poly('t'),))
        self.assertEqual(cb.exponents, ((2,), (3,)))

        cb = coprime_basis([poly('t^2+t'), poly('t^2+2*t+1')])
        self.assertEqual(cb.basis, (poly('t'), poly('t+1')))
        self.assertEqual(cb.exponents, ((1, 1), (0, 2)))

        cb = coprime_basis([poly('t^2+t'), poly('t^2-1')])
        self.assertEqual(cb.basis, (poly('t'), poly('t+1'), poly('t-1')))
        self.assertEqual(cb.exponents, ((1, 1, 0), (0, 1, 1)))

        cb = coprime_basis([poly('-2*t^2')])
        self.assertEqual(cb.constants, (Fraction(-2),))
        self.assertPolyEqual(cb.reconstruct(0), '-2*t^2')

        with self.assertRaises(PreconditionError):
            coprime_basis([poly('t'), poly('3')])


class TestPolyArithProperties(GcdIterTestCase):

    @settings(max_examples=60, deadline=None)
    @given(smallpolys, smallpolys)
    def test_gcd_divides_both(self, f, g):
        if not f and not g:
            return
        h = poly_gcd(f, g)
        self.assertTrue(h.ismonic())
        self.assertDivides(h, f)
        self.assertDivides(h, g)
        if f and g:
            self.assertEqual(poly_gcd(f.exquo(h), g.exquo(h)), ONE)

    @settings(max_examples=30, deadline=None)
    @given(nonzeropolys, st.integers(0, 8), st.integers(0, 8))
    def test_pow_adds_exponents(self, f, j, k):
        self.assertEqual(poly_pow(f, j + k), poly_pow(f, j) * poly_pow(f, k))

    @settings(max_examples=40, deadline=None)
    @given(nonzeropolys, nonzeropolys)
    def test_squarefree_ignores_multiplicity(self, f, g):
        if poly_gcd(f, g) != 1:
            return
        self.assertEqual(squarefree_part(f*f*g), squarefree_part(f*g))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(nonzeropolys.filter(lambda f: f.degree >= 1),
                    min_size=1, max_size=4))
    def test_coprime_basis_reconstructs(self, inputs):
        cb = coprime_basis(inputs)
        for index, f in enumerate(inputs):
            self.assertEqual(cb.reconstruct(index), f)
        for i, a in enumerate(cb.basis):
            self.assertTrue(a.ismonic())
            for b in cb.basis[i+1:]:
                self.assertEqual(poly_gcd(a, b), ONE)

    @settings(max_examples=40, deadline=None)
    @given(smallpolys)
    def test_text_roundtrip(self, f):
        self.assertEqual(parse_poly(str(f)), f)
