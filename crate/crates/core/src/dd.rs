//! Double-double arithmetic built from error-free transformations.
//!
//! The alternating sums behind the closed-form and series routes cancel up to
//! twenty decimal digits near `q -> 1`, which is beyond what a single binary
//! double can carry. A `Dd` value keeps an unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant digits for the few hot
//! loops that need them. Inputs enter exactly (from `f64` or integers), so the
//! only rounding left inside a sum is at the 1e-32 level.

/// Unevaluated sum of two doubles, `hi + lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum of two doubles (Knuth two-sum).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free sum assuming `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

pub(crate) const DD_ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
pub(crate) const DD_ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact conversion of an unsigned 128-bit integer (binomials up to n=128).
    pub fn from_u128(x: u128) -> Self {
        let hi = x as f64;
        // hi rounds to at most 2^127; the remainder fits a second double for
        // every binomial this crate produces.
        let lo = if hi >= 0.0 && hi <= (u128::MAX as f64) {
            let hi_int = hi as u128;
            if hi_int >= x {
                -((hi_int - x) as f64)
            } else {
                (x - hi_int) as f64
            }
        } else {
            0.0
        };
        Dd::norm(hi, lo)
    }

    #[inline]
    fn norm(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        Dd::norm(s, e)
    }

    #[inline]
    pub fn add_f64(self, o: f64) -> Dd {
        let (s, e) = two_sum(self.hi, o);
        Dd::norm(s, e + self.lo)
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        Dd::norm(p, e)
    }

    #[inline]
    pub fn mul_f64(self, o: f64) -> Dd {
        let (p, e) = two_prod(self.hi, o);
        Dd::norm(p, e + self.lo * o)
    }

    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Dd::norm(h, l + q3)
    }

    pub fn recip(self) -> Dd {
        DD_ONE.div(self)
    }

    /// Integer power by binary exponentiation; `powi(_, 0) == 1` including for
    /// a zero base (the 0^0 = 1 convention the coefficient sums rely on).
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return DD_ONE;
        }
        let mut e = n.unsigned_abs();
        let mut base = self;
        let mut acc = DD_ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(base);
            }
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}
