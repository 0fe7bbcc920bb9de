//! Exact univariate polynomials over the rationals with Sturm-sequence root
//! counting, square-free decomposition and Newton power sums.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial with rational coefficients stored in ascending degree order,
/// trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_asc(vec![BigRational::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        Self::from_asc(c)
    }

    pub fn from_asc(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    /// From integer coefficients, highest degree first.
    pub fn from_desc_ints<T: Into<BigInt> + Copy>(desc: &[T]) -> Self {
        Self::from_asc(desc.iter().rev().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_desc(desc: Vec<BigRational>) -> Self {
        let mut asc = desc;
        asc.reverse();
        Self::from_asc(asc)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs_asc(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeffs_desc(&self) -> Vec<BigRational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, highest degree first, if all are integers.
    pub fn integer_coeffs_desc(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().rev().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn coeffs_desc_f64(&self) -> Vec<f64> {
        self.coeffs.iter().rev().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_asc((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_asc((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_asc(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_asc(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_asc(self.coeffs.iter().map(|c| -c).collect())
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_asc(
            self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::from_asc(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64)).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_asc(q), Self::from_asc(rem)))
    }

    /// Monic scalar multiple; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_rational();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients.
    fn primitive_rational(&self) -> Self {
        match primitive_integer(self) {
            Some(ints) => Self::from_asc(ints.into_iter().map(BigRational::from_integer).collect()),
            None => Self::zero(),
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Square-free decomposition `f = lc * prod f_i^i` (Yun); returns the
    /// non-constant monic factors with their multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0)?.0;
        let c = fp.div_rem(&a0)?.0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.div_rem(&a)?.0;
            let nc = d.div_rem(&a)?.0;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.monic(), i));
            }
            d = nc.sub(&nb.derivative());
            b = nb;
            i += 1;
        }
        Ok(out)
    }

    /// Square-free part (product of the distinct irreducible factors), monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let g = f.gcd(&f.derivative());
        Ok(f.div_rem(&g)?.0.monic())
    }
}

impl fmt::Display for ExactPolynomial {
    /// Coefficients highest degree first, separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(fmt_rational).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPolynomial[{self}]")
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Exact conversion of a finite float to a rational.
/// Nearest `f64` (NaN when out of range).
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(Error::OutOfRange(x))
}

fn primitive_integer(p: &ExactPolynomial) -> Option<Vec<BigInt>> {
    if p.is_zero() {
        return None;
    }
    let mut l = BigInt::one();
    for c in &p.coeffs {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    Some(ints.into_iter().map(|c| c / &g).collect())
}

/// Sign of an ascending integer polynomial at a rational point, without
/// building rationals: `sum a_i p^i q^(d-i)` with `q > 0`.
fn sign_at(coeffs: &[BigInt], x: &BigRational) -> Ordering {
    let (p, q) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut qpow = BigInt::one();
    for c in coeffs.iter().rev() {
        acc = acc * p + c * &qpow;
        qpow *= q;
    }
    acc.sign_cmp()
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Sturm chain of a square-free polynomial, each member scaled to a primitive
/// integer polynomial by a positive factor.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
    bound: BigRational,
}

impl SturmChain {
    pub fn new(p: &ExactPolynomial) -> Result<Self> {
        let g = p.squarefree_part()?;
        let bound = root_bound(&g);
        let mut chain = Vec::new();
        let mut a = g.primitive_rational();
        let mut b = g.derivative().primitive_rational();
        chain.push(primitive_integer(&a).unwrap());
        while !b.is_zero() {
            chain.push(primitive_integer(&b).unwrap());
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.neg().primitive_rational();
        }
        Ok(SturmChain { chain, bound })
    }

    /// Power-of-two bound strictly exceeding every root's absolute value.
    pub fn bound(&self) -> &BigRational {
        &self.bound
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in &self.chain {
            let sg = sign_at(s, x);
            if sg == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && sg != last {
                count += 1;
            }
            last = sg;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Number of distinct real roots.
    pub fn count(&self) -> usize {
        let b = self.bound.clone();
        self.count_in(&(-b.clone()), &b)
    }

    /// Isolating interval `(lo, hi]` of the largest real root, with
    /// `hi - lo <= width`; `None` without real roots.
    pub fn max_root_interval(&self, width: &BigRational) -> Option<(BigRational, BigRational)> {
        let mut hi = self.bound.clone();
        let mut lo = -hi.clone();
        if self.count_in(&lo, &hi) == 0 {
            return None;
        }
        let two = rat(2);
        while &hi - &lo > *width || self.count_in(&lo, &hi) > 1 {
            let mid = (&lo + &hi) / &two;
            if self.count_in(&mid, &hi) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some((lo, hi))
    }

    /// Disjoint isolating intervals `(lo, hi]` of all distinct real roots in
    /// increasing order.
    pub fn isolate(&self) -> Vec<(BigRational, BigRational)> {
        let mut out = Vec::new();
        let b = self.bound.clone();
        let mut stack = vec![(-b.clone(), b)];
        let two = rat(2);
        while let Some((lo, hi)) = stack.pop() {
            match self.count_in(&lo, &hi) {
                0 => {}
                1 => out.push((lo, hi)),
                _ => {
                    let mid = (&lo + &hi) / &two;
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        out.sort();
        out
    }
}

/// Power of two strictly larger than `1 + max |a_i / a_d|` (Cauchy).
fn root_bound(p: &ExactPolynomial) -> BigRational {
    let Some(lead) = p.leading() else {
        return BigRational::one();
    };
    let mut m = BigRational::zero();
    for c in &p.coeffs[..p.coeffs.len() - 1] {
        let r = (c / lead).abs();
        if r > m {
            m = r;
        }
    }
    let target = m + BigRational::one();
    let mut b = BigRational::one();
    while b <= target {
        b *= rat(2);
    }
    b
}

/// Outcome of an exact real-rootedness test.
#[derive(Clone, Debug)]
pub struct RealRootCertificate {
    pub real_rooted: bool,
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_roots: usize,
    /// Square-free factors as `(multiplicity, distinct real roots, degree)`.
    pub factors: Vec<(usize, usize, usize)>,
    /// Isolating intervals `(lo, hi]` of the distinct real roots with their
    /// multiplicities, increasing.
    pub intervals: Vec<(BigRational, BigRational, usize)>,
}

/// Exact Sturm-sequence test that every root of `p` is real.
pub fn certify_real_rooted(p: &ExactPolynomial) -> Result<RealRootCertificate> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut real_roots = 0;
    let mut factors = Vec::new();
    let mut intervals = Vec::new();
    for (f, mult) in p.squarefree_decomposition()? {
        let chain = SturmChain::new(&f)?;
        let iso = chain.isolate();
        real_roots += mult * iso.len();
        factors.push((mult, iso.len(), f.degree().unwrap_or(0)));
        intervals.extend(iso.into_iter().map(|(a, b)| (a, b, mult)));
    }
    intervals.sort();
    Ok(RealRootCertificate { real_rooted: real_roots == degree, degree, real_roots, factors, intervals })
}

/// Number of roots strictly greater than `t`, counted with multiplicity.
pub fn count_roots_above(p: &ExactPolynomial, t: &BigRational) -> Result<usize> {
    let mut total = 0;
    for (f, mult) in p.squarefree_decomposition()? {
        let chain = SturmChain::new(&f)?;
        let b = chain.bound().clone();
        if *t < b {
            total += mult * chain.count_in(t, &b);
        }
    }
    Ok(total)
}

/// Isolating interval of the largest real root, width at most `tol`.
pub fn max_root(p: &ExactPolynomial, tol: f64) -> Result<Option<(f64, f64)>> {
    let chain = SturmChain::new(p)?;
    let w = rational_from_f64(tol.max(1e-300))?;
    Ok(chain
        .max_root_interval(&w)
        .map(|(a, b)| (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN))))
}

/// Isolating interval `[lo, hi]` of width at most `tol` around the largest
/// absolute value of a root of a real-rooted polynomial.
pub fn max_abs_root(p: &ExactPolynomial, tol: f64) -> Result<(f64, f64)> {
    let cert = certify_real_rooted(p)?;
    if !cert.real_rooted {
        return Err(Error::NotRealRooted);
    }
    if p.degree() == Some(0) {
        return Ok((0.0, 0.0));
    }
    let refl = p.reflect();
    let pick = if cmp_max_root(p, &refl)? == Ordering::Less { &refl } else { p };
    let (lo, hi) = max_root(pick, tol)?.expect("real-rooted polynomial of positive degree has a root");
    if hi <= 0.0 {
        // all roots are zero
        return Ok((0.0, 0.0));
    }
    Ok((lo.max(0.0), hi))
}

/// Exact comparison of the largest real roots of two polynomials, each of
/// which must have a real root.
pub fn cmp_max_root(p: &ExactPolynomial, q: &ExactPolynomial) -> Result<Ordering> {
    let cp = SturmChain::new(p)?;
    let cq = SturmChain::new(q)?;
    let big = cp.bound().clone().max(cq.bound().clone()) * rat(2);
    let (mut pl, mut ph) = cp.max_root_interval(&big).ok_or(Error::NotRealRooted)?;
    let (mut ql, mut qh) = cq.max_root_interval(&big).ok_or(Error::NotRealRooted)?;
    let g = p.squarefree_part()?.gcd(&q.squarefree_part()?);
    let cg = if g.degree().unwrap_or(0) > 0 { Some(SturmChain::new(&g)?) } else { None };
    let two = rat(2);
    for _ in 0..4000 {
        // half-open intervals (lo, hi]
        if ph <= ql {
            return Ok(Ordering::Less);
        }
        if qh <= pl {
            return Ok(Ordering::Greater);
        }
        let lo = pl.clone().min(ql.clone());
        let hi = ph.clone().max(qh.clone());
        if let Some(cg) = &cg {
            if cp.count_in(&lo, &hi) == 1 && cq.count_in(&lo, &hi) == 1 && cg.count_in(&lo, &hi) >= 1 {
                return Ok(Ordering::Equal);
            }
        }
        let pm = (&pl + &ph) / &two;
        if cp.count_in(&pm, &ph) >= 1 {
            pl = pm;
        } else {
            ph = pm;
        }
        let qm = (&ql + &qh) / &two;
        if cq.count_in(&qm, &qh) >= 1 {
            ql = qm;
        } else {
            qh = qm;
        }
    }
    Err(Error::Degenerate("maximum root comparison did not resolve".into()))
}

/// Newton power sums `p_1..p_K` of the roots of a monic polynomial.
pub fn power_sums(p: &ExactPolynomial, k_max: usize) -> Result<Vec<BigRational>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    // e_k = (-1)^k a_k with a_k the coefficient of x^(n-k)
    let e = |k: usize| -> BigRational {
        if k > n {
            return BigRational::zero();
        }
        let a = p.coeff(n - k);
        if k % 2 == 1 {
            -a
        } else {
            a
        }
    };
    let sgn = |i: usize| if i % 2 == 1 { BigRational::one() } else { -BigRational::one() };
    let mut ps: Vec<BigRational> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let mut v = sgn(k) * rat(k as i64) * e(k);
        for i in 1..k {
            v += sgn(i) * e(i) * &ps[k - i - 1];
        }
        ps.push(v);
    }
    Ok(ps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_desc_ints(desc)
    }

    fn ints(v: &[BigRational]) -> Vec<i64> {
        v.iter().map(|r| r.to_integer().to_i64().unwrap()).collect()
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[1, 0, -4, 0, 2]).to_string(), "1 0 -4 0 2");
        let half = ExactPolynomial::from_desc(vec![rat(1), BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "1 1/2");
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(ints(&power_sums(&p(&[1, 0, -1]), 4).unwrap()), vec![0, 2, 0, 2]);
        assert_eq!(ints(&power_sums(&p(&[1, 0, -3, -2]), 2).unwrap()), vec![0, 6]);
        assert_eq!(ints(&power_sums(&p(&[1, 0, 0, 0]), 5).unwrap()), vec![0; 5]);
        assert_eq!(ints(&power_sums(&p(&[1, 0, -4, 0, 2]), 4).unwrap()), vec![0, 8, 0, 24]);
        assert!(matches!(power_sums(&p(&[2, 1]), 2), Err(Error::NotMonic)));
    }

    #[test]
    fn real_rootedness() {
        assert!(certify_real_rooted(&p(&[1, 0, -1])).unwrap().real_rooted);
        assert!(!certify_real_rooted(&p(&[1, 0, 1])).unwrap().real_rooted);
        // (x - 2)(x + 1)^2 has a repeated root
        let c = certify_real_rooted(&p(&[1, 0, -3, -2])).unwrap();
        assert!(c.real_rooted);
        assert_eq!(c.real_roots, 3);
        assert_eq!(c.intervals.len(), 2);
        assert!(matches!(certify_real_rooted(&ExactPolynomial::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn squarefree() {
        // (x-1)^3 (x+2)
        let f = p(&[1, -1]).mul(&p(&[1, -1])).mul(&p(&[1, -1])).mul(&p(&[1, 2]));
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d, vec![(p(&[1, 2]), 1), (p(&[1, -1]), 3)]);
    }

    #[test]
    fn max_abs_root_examples() {
        let (lo, hi) = max_abs_root(&p(&[1, 0, -4, 0, 2]), 1e-12).unwrap();
        let exact = (2.0f64 + 2.0f64.sqrt()).sqrt();
        assert!(lo <= exact && exact <= hi && hi - lo <= 1e-12);
        let (lo, hi) = max_abs_root(&p(&[1, 0, -1]), 1e-12).unwrap();
        assert!(lo <= 1.0 && 1.0 <= hi);
        // largest absolute root on the negative side: (x + 3)(x - 1)
        let (lo, hi) = max_abs_root(&p(&[1, 2, -3]), 1e-12).unwrap();
        assert!(lo <= 3.0 && 3.0 <= hi);
        assert!(matches!(max_abs_root(&p(&[1, 0, 1]), 1e-9), Err(Error::NotRealRooted)));
    }

    #[test]
    fn max_root_comparison() {
        // x^2 - 2 vs x - 1: sqrt 2 > 1
        assert_eq!(cmp_max_root(&p(&[1, 0, -2]), &p(&[1, -1])).unwrap(), Ordering::Greater);
        // equal irrational maxroots with different other roots
        let a = p(&[1, 0, -2]);
        let b = a.mul(&p(&[1, 5]));
        assert_eq!(cmp_max_root(&a, &b).unwrap(), Ordering::Equal);
        assert_eq!(cmp_max_root(&p(&[1, -1]), &p(&[1, -1])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn roots_above() {
        let f = p(&[1, -1]).mul(&p(&[1, -1])).mul(&p(&[1, 3]));
        assert_eq!(count_roots_above(&f, &rat(0)).unwrap(), 2);
        assert_eq!(count_roots_above(&f, &rat(1)).unwrap(), 0);
        assert_eq!(count_roots_above(&f, &rat(-4)).unwrap(), 3);
    }
}
