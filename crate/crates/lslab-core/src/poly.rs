//! Dense univariate polynomials over exact rationals.
//!
//! Supports the handful of operations the connector curves need: Horner
//! evaluation, formal derivatives, Sturm-sequence root isolation on (0, 1),
//! and certified suprema of |p| over [0, 1]. Degrees never exceed 2k+1 for
//! the configured smoothness cap, so quadratic-time algorithms are fine.

use crate::rat::{rat, rint, Rational};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>, // ascending powers, no trailing zeros
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rint(i as i64))
            .collect();
        Poly::new(coeffs)
    }

    pub fn derivative_n(&self, n: u32) -> Poly {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Euclidean division remainder.
    fn rem(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.coeffs.last().unwrap();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    r[idx] = &r[idx] - &(dc * &factor);
                }
            }
            r.pop();
        }
        Poly::new(r)
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free(&self) -> Poly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, d: &Poly) -> Poly {
        assert!(!d.is_zero());
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lead = d.coeffs.last().unwrap();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            let factor = r[k].clone() / lead;
            q[k - dd] = factor.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                r[idx] = &r[idx] - &(dc * &factor);
            }
            r.pop();
        }
        debug_assert!(Poly::new(r).is_zero(), "inexact polynomial division");
        Poly::new(q)
    }

    /// Synthetic division by (x - r); the remainder must vanish.
    pub fn deflate_root(&self, r: &Rational) -> Poly {
        let mut out = vec![Rational::zero(); self.coeffs.len().saturating_sub(1)];
        let mut acc = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i == 0 {
                debug_assert!((&acc * r + c).is_zero(), "deflation at a non-root");
            } else {
                acc = &acc * r + c;
                out[i - 1] = acc.clone();
            }
        }
        Poly::new(out)
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&rint(-1)));
    }
    chain
}

fn sign_variations(chain: &[Poly], x: &Rational) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None; // sign as is_positive
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(ps) = prev {
            if ps != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

/// Roots of `p` strictly inside (0, 1): rational roots found exactly, the
/// rest bracketed to width 2^-refine_bits with a sign change across each
/// bracket.
pub struct UnitRoots {
    pub exact: Vec<Rational>,
    pub brackets: Vec<(Rational, Rational)>,
}

pub fn roots_in_open_unit(p: &Poly, refine_bits: u32) -> UnitRoots {
    let mut exact = Vec::new();
    let mut brackets = Vec::new();
    if p.is_zero() || p.degree() == 0 {
        return UnitRoots { exact, brackets };
    }

    let zero = Rational::zero();
    let one = Rational::one();
    let mut s = p.square_free();

    'restart: loop {
        while !s.is_zero() && s.eval(&zero).is_zero() {
            s = s.deflate_root(&zero);
        }
        while !s.is_zero() && s.eval(&one).is_zero() {
            s = s.deflate_root(&one);
        }
        if s.degree() == 0 || s.is_zero() {
            break;
        }

        let chain = sturm_chain(&s);
        let v0 = sign_variations(&chain, &zero);
        let v1 = sign_variations(&chain, &one);
        if v0 == v1 {
            break;
        }

        let mut isolated: Vec<(Rational, Rational)> = Vec::new();
        let mut stack = vec![(zero.clone(), one.clone(), v0, v1)];
        while let Some((a, b, va, vb)) = stack.pop() {
            let n = va - vb;
            if n == 0 {
                continue;
            }
            if n == 1 {
                isolated.push((a, b));
                continue;
            }
            let mid = (&a + &b) / rint(2);
            if s.eval(&mid).is_zero() {
                exact.push(mid.clone());
                s = s.deflate_root(&mid);
                continue 'restart;
            }
            let vm = sign_variations(&chain, &mid);
            stack.push((a, mid.clone(), va, vm));
            stack.push((mid, b, vm, vb));
        }

        'bracket: for (mut a, mut b) in isolated {
            for _ in 0..refine_bits {
                let mid = (&a + &b) / rint(2);
                let v = s.eval(&mid);
                if v.is_zero() {
                    exact.push(mid);
                    continue 'bracket;
                }
                if s.eval(&a).is_positive() != v.is_positive() {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            brackets.push((a, b));
        }
        break;
    }

    UnitRoots { exact, brackets }
}

/// Supremum of |p| over [0, 1].
///
/// Exact whenever the maximum is attained at 0, 1, or a rational critical
/// point; otherwise a certified upper bound whose slack is bounded by the
/// bracket width times a coefficient bound on |p'|.
pub struct SupBound {
    pub value: Rational,
    pub exact: bool,
}

pub fn sup_abs_on_unit(p: &Poly, refine_bits: u32) -> SupBound {
    if p.is_zero() {
        return SupBound {
            value: Rational::zero(),
            exact: true,
        };
    }
    if p.degree() == 0 {
        return SupBound {
            value: p.coeffs[0].abs(),
            exact: true,
        };
    }

    let q = p.derivative();
    let roots = roots_in_open_unit(&q, refine_bits);

    let mut best_exact = p.eval(&Rational::zero()).abs();
    let at_one = p.eval(&Rational::one()).abs();
    if at_one > best_exact {
        best_exact = at_one;
    }
    for r in &roots.exact {
        let v = p.eval(r).abs();
        if v > best_exact {
            best_exact = v;
        }
    }

    // |p'| <= sum of |coefficients| on [0, 1]
    let qbound: Rational = q
        .coeffs()
        .iter()
        .fold(Rational::zero(), |acc, c| acc + c.abs());

    let mut value = best_exact.clone();
    let mut exact = true;
    for (a, b) in &roots.brackets {
        let lo = p.eval(a).abs().max(p.eval(b).abs());
        let hi = lo + (b - a) * &qbound;
        if hi > value {
            value = hi.clone();
        }
        if hi > best_exact {
            exact = false;
        }
    }

    SupBound { value, exact }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::new(cs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        // 1 - 3x + 2x^2
        let p = poly(&[(1, 1), (-3, 1), (2, 1)]);
        assert_eq!(p.eval(&rat(1, 2)), rint(0));
        assert_eq!(p.eval(&rint(1)), rint(0));
        assert_eq!(p.derivative(), poly(&[(-3, 1), (4, 1)]));
        assert_eq!(p.derivative_n(2), poly(&[(4, 1)]));
        assert!(p.derivative_n(3).is_zero());
    }

    #[test]
    fn deflation() {
        // (x - 1/2)(x - 2) = x^2 - 5/2 x + 1
        let p = poly(&[(1, 1), (-5, 2), (1, 1)]);
        let d = p.deflate_root(&rat(1, 2));
        assert_eq!(d.eval(&rint(2)), rint(0));
        assert_eq!(d.degree(), 1);
    }

    #[test]
    fn isolates_rational_and_irrational_roots() {
        // x^2 - 2: one root in (0,1)? none. sqrt(2) > 1.
        let p = poly(&[(-2, 1), (0, 1), (1, 1)]);
        let r = roots_in_open_unit(&p, 32);
        assert!(r.exact.is_empty() && r.brackets.is_empty());

        // (x - 1/2)(x^2 - 1/2): roots 1/2 and 1/sqrt(2) ~ 0.7071
        let p = poly(&[(-1, 4), (-1, 2), (1, 2), (1, 1)]);
        let r = roots_in_open_unit(&p, 48);
        assert_eq!(r.exact, vec![rat(1, 2)]);
        assert_eq!(r.brackets.len(), 1);
        let (a, b) = &r.brackets[0];
        let target = 0.7071067811865476;
        assert!(crate::rat::to_f64(a) < target && target < crate::rat::to_f64(b));
        assert!((b - a) <= rpow2(-48));
    }

    fn rpow2(e: i32) -> Rational {
        crate::rat::rpow(&rat(1, 2), -e)
    }

    #[test]
    fn multiple_roots_are_handled() {
        // x^2 (x - 1/3)^2 has a double root at 1/3
        let f = poly(&[(0, 1), (0, 1), (1, 9), (-2, 3), (1, 1)]);
        let r = roots_in_open_unit(&f, 32);
        assert_eq!(r.exact, vec![rat(1, 3)]);
        assert!(r.brackets.is_empty());
    }

    #[test]
    fn sup_exact_at_rational_critical_point() {
        // 6t(1-t): max 3/2 at t = 1/2
        let p = poly(&[(0, 1), (6, 1), (-6, 1)]);
        let s = sup_abs_on_unit(&p, 64);
        assert!(s.exact);
        assert_eq!(s.value, rat(3, 2));
    }

    #[test]
    fn sup_certified_at_irrational_critical_point() {
        // p = t^3 - t: critical point 1/sqrt(3), |p| max = 2/(3 sqrt 3) ~ 0.3849
        let p = poly(&[(0, 1), (-1, 1), (0, 1), (1, 1)]);
        let s = sup_abs_on_unit(&p, 64);
        let truth = 2.0 / (3.0 * 3.0_f64.sqrt());
        let got = crate::rat::to_f64(&s.value);
        assert!(got >= truth - 1e-15);
        assert!(got <= truth + 1e-12);
    }
}
