//! Exact univariate Laurent polynomials in `A` with Gaussian-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A Gaussian integer `re + im·i`.
pub type GaussInt = Complex<i64>;

/// Sparse Laurent polynomial `Σ c_k A^k`.
///
/// The map never stores a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, GaussInt>,
}

impl LaurentPoly {
    pub fn monomial(coeff: GaussInt, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// The integer constant `c`.
    pub fn constant(c: i64) -> Self {
        Self::monomial(GaussInt::new(c, 0), 0)
    }

    /// `c·A^exp` with an integer coefficient.
    pub fn int_monomial(c: i64, exp: i32) -> Self {
        Self::monomial(GaussInt::new(c, 0), exp)
    }

    /// The variable `A`.
    pub fn var() -> Self {
        Self::int_monomial(1, 1)
    }

    /// The imaginary unit as a constant.
    pub fn i() -> Self {
        Self::monomial(GaussInt::new(0, 1), 0)
    }

    /// The loop value `δ = −A² − A⁻²`.
    pub fn delta() -> Self {
        Self::from_terms([(2, GaussInt::new(-1, 0)), (-2, GaussInt::new(-1, 0))])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, GaussInt)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Integer-coefficient constructor, `[(exp, coeff)]`.
    pub fn from_int_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, GaussInt::new(c, 0))))
    }

    fn add_term(&mut self, exp: i32, c: GaussInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(GaussInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> GaussInt {
        self.coeffs.get(&exp).copied().unwrap_or_else(GaussInt::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, GaussInt)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// If `self` is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(i32, GaussInt)> {
        if self.coeffs.len() == 1 {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: GaussInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &x)| (e, x * c)).collect() }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power of a monomial, negative exponents allowed when the
    /// coefficient is a unit.
    pub fn monomial_pow(&self, n: i32) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        if n >= 0 {
            return Some(self.pow(n as u32));
        }
        let inv = unit_inverse(c)?;
        Some(Self::monomial(inv, -e).pow(n.unsigned_abs()))
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (d_lo, d_hi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(hi) = rem.max_exp() {
            let lo = rem.min_exp().expect("nonempty");
            if hi - lo < d_hi - d_lo {
                return None;
            }
            let c = gauss_div_exact(rem.coeff(hi), lead)?;
            let term = LaurentPoly::monomial(c, hi - d_hi);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }
}

fn unit_inverse(c: GaussInt) -> Option<GaussInt> {
    // units of Z[i] are ±1, ±i; their inverse is the conjugate
    if c.norm_sqr() == 1 {
        Some(c.conj())
    } else {
        None
    }
}

fn gauss_div_exact(a: GaussInt, b: GaussInt) -> Option<GaussInt> {
    let n = b.norm_sqr();
    if n == 0 {
        return None;
    }
    let num = a * b.conj();
    if num.re % n != 0 || num.im % n != 0 {
        return None;
    }
    Some(GaussInt::new(num.re / n, num.im / n))
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

// Text form: exponent-descending signed monomials, e.g. "-A^2 - A^-2".

fn fmt_coeff_body(c: GaussInt, exp: i32) -> String {
    let show_unit = exp == 0;
    match (c.re, c.im) {
        (re, 0) => {
            let m = re.abs();
            if m == 1 && !show_unit {
                String::new()
            } else {
                m.to_string()
            }
        }
        (0, im) => {
            let m = im.abs();
            if m == 1 {
                "i".to_string()
            } else {
                format!("{m}i")
            }
        }
        (re, im) => {
            let sign = if im < 0 { '-' } else { '+' };
            let m = im.abs();
            if m == 1 {
                format!("({re}{sign}i)")
            } else {
                format!("({re}{sign}{m}i)")
            }
        }
    }
}

fn coeff_is_negative(c: GaussInt) -> bool {
    (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = coeff_is_negative(c);
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&fmt_coeff_body(c, e))?;
            match e {
                0 => {}
                1 => f.write_str("A")?,
                _ => write!(f, "A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct PolyLexer<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> PolyLexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.chars().map(|c| if c == '\u{2212}' { '-' } else { c }).filter(|c| !c.is_whitespace()).collect();
        PolyLexer { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn err(&self, msg: &str) -> Error {
        Error::PolySyntax(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn int(&mut self) -> Result<Option<i64>, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map(Some).map_err(|_| self.err("integer overflow"))
    }

    fn signed_int(&mut self) -> Result<i64, Error> {
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self.int()?.ok_or_else(|| self.err("expected integer"))?;
        Ok(if neg { -v } else { v })
    }

    fn complex_paren(&mut self) -> Result<GaussInt, Error> {
        // "(a+bi)" with the imaginary part optional
        let re = self.signed_int()?;
        let mut im = 0;
        if matches!(self.peek(), Some('+') | Some('-')) {
            let neg = self.bump() == Some('-');
            let m = self.int()?.unwrap_or(1);
            if self.bump() != Some('i') {
                return Err(self.err("expected 'i'"));
            }
            im = if neg { -m } else { m };
        }
        if self.bump() != Some(')') {
            return Err(self.err("expected ')'"));
        }
        Ok(GaussInt::new(re, im))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut lx = PolyLexer::new(s);
        if lx.chars.is_empty() {
            return Err(lx.err("empty polynomial"));
        }
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while lx.peek().is_some() {
            let sign = match lx.peek() {
                Some('+') => {
                    lx.bump();
                    1
                }
                Some('-') => {
                    lx.bump();
                    -1
                }
                _ if first => 1,
                _ => return Err(lx.err("expected '+' or '-'")),
            };
            first = false;
            let mut coeff = match lx.peek() {
                Some('(') => {
                    lx.bump();
                    Some(lx.complex_paren()?)
                }
                _ => lx.int()?.map(|v| GaussInt::new(v, 0)),
            };
            if lx.peek() == Some('i') {
                lx.bump();
                let m = coeff.map(|c| c.re).unwrap_or(1);
                coeff = Some(GaussInt::new(0, m));
            }
            let exp = if lx.peek() == Some('A') {
                lx.bump();
                if lx.peek() == Some('^') {
                    lx.bump();
                    i32::try_from(lx.signed_int()?).map_err(|_| lx.err("exponent overflow"))?
                } else {
                    1
                }
            } else {
                if coeff.is_none() {
                    return Err(lx.err("expected coefficient or 'A'"));
                }
                0
            };
            let c = coeff.unwrap_or_else(GaussInt::one) * sign;
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

// JSON form: array of [exponent, [re, im]] pairs, ascending exponent.

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i32, [i64; 2])> = self.terms().map(|(e, c)| (e, [c.re, c.im])).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, [i64; 2])> = Vec::deserialize(d)?;
        Ok(LaurentPoly::from_terms(pairs.into_iter().map(|(e, [re, im])| (e, GaussInt::new(re, im)))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        let a = LaurentPoly::var();
        let ainv = LaurentPoly::int_monomial(1, -1);
        assert_eq!(&(&a + &ainv) * &(&a - &ainv), p("A^2 - A^-2"));
        let q = p("3A^5 - 2i + A^-1");
        assert_eq!(&q * &LaurentPoly::one(), q);
        let ia = &LaurentPoly::i() * &a;
        assert_eq!(&ia * &ia, p("-A^2"));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(LaurentPoly::delta().to_string(), "-A^2 - A^-2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(p("-iA + (2-3i)A^-4 + 5").to_string(), "-iA + 5 + (2-3i)A^-4");
        assert_eq!(p("−A^2 − A^-2"), LaurentPoly::delta());
        assert_eq!(p("A - A"), LaurentPoly::zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("A^".parse::<LaurentPoly>().is_err());
        assert!("2A 3".parse::<LaurentPoly>().is_err());
        assert!("(1+2)A".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let d = LaurentPoly::delta();
        let q = p("A^6 + A^2 + A^-2 + A^-6");
        assert_eq!(q.div_exact(&d), Some(p("-A^4 - A^-4")));
        assert_eq!(LaurentPoly::one().div_exact(&d), None);
        assert_eq!(p("A^3 + 1").div_exact(&p("2")), None);
    }

    #[test]
    fn monomial_powers() {
        let t = p("-A^3");
        assert_eq!(t.monomial_pow(-2), Some(p("A^-6")));
        assert_eq!(t.monomial_pow(3), Some(p("-A^9")));
        assert_eq!(p("2A").monomial_pow(-1), None);
        assert_eq!(p("A + 1").monomial_pow(1), None);
    }

    #[test]
    fn json_form() {
        let j = serde_json::to_string(&p("iA^2 - 3")).unwrap();
        assert_eq!(j, "[[0,[-3,0]],[2,[0,1]]]");
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p("iA^2 - 3"));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -3i64..4, -3i64..4), 0..5)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, re, im)| (e, GaussInt::new(re, im)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, LaurentPoly::zero());
            prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }

        #[test]
        fn division_inverts_product(a in arb_poly()) {
            let prod = &a * &LaurentPoly::delta();
            prop_assert_eq!(prod.div_exact(&LaurentPoly::delta()), Some(a));
        }
    }
}
