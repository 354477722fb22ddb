//! Coefficient fields for polynomial computation: exact rationals and
//! prime fields with a runtime-configurable prime.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Q,
    Fp(u64),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "q"),
            FieldTag::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb: u128 = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

impl Coeff {
    pub fn zero(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => Coeff::Q(BigRational::zero()),
            FieldTag::Fp(p) => Coeff::Fp { v: 0, p },
        }
    }

    pub fn one(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => Coeff::Q(BigRational::one()),
            FieldTag::Fp(p) => Coeff::Fp { v: 1, p },
        }
    }

    pub fn from_rational(tag: FieldTag, q: &BigRational) -> Self {
        match tag {
            FieldTag::Q => Coeff::Q(q.clone()),
            FieldTag::Fp(p) => {
                let pb = BigInt::from(p);
                let red = |n: &BigInt| -> u64 {
                    let m = ((n % &pb) + &pb) % &pb;
                    let digits = m.to_u64_digits().1;
                    digits.first().copied().unwrap_or(0)
                };
                let num = red(q.numer());
                let den = red(q.denom());
                assert!(den != 0, "denominator divisible by the prime {p}");
                let v = (num as u128 * mod_pow(den, p - 2, p) as u128 % p as u128) as u64;
                Coeff::Fp { v, p }
            }
        }
    }

    pub fn from_int(tag: FieldTag, n: i64) -> Self {
        Self::from_rational(tag, &BigRational::from_integer(BigInt::from(n)))
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            Coeff::Q(_) => FieldTag::Q,
            Coeff::Fp { p, .. } => FieldTag::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_zero(),
            Coeff::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_one(),
            Coeff::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a + b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2);
                Coeff::Fp { v: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, o: &Coeff) -> Coeff {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Q(a) => Coeff::Q(-a),
            Coeff::Fp { v, p } => Coeff::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    pub fn mul(&self, o: &Coeff) -> Coeff {
        match (self, o) {
            (Coeff::Q(a), Coeff::Q(b)) => Coeff::Q(a * b),
            (Coeff::Fp { v: a, p }, Coeff::Fp { v: b, p: p2 }) => {
                assert_eq!(p, p2);
                Coeff::Fp { v: (*a as u128 * *b as u128 % *p as u128) as u64, p: *p }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Q(a) => {
                assert!(!a.is_zero());
                Coeff::Q(a.recip())
            }
            Coeff::Fp { v, p } => {
                assert!(*v != 0);
                Coeff::Fp { v: mod_pow(*v, p - 2, *p), p: *p }
            }
        }
    }

    pub fn div(&self, o: &Coeff) -> Coeff {
        self.mul(&o.inv())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Coeff {
    /// Display with a sign convention: rationals print negatives naturally,
    /// prime-field values in [0, p).
    pub fn is_negative_display(&self) -> bool {
        match self {
            Coeff::Q(q) => q.is_negative(),
            Coeff::Fp { .. } => false,
        }
    }
}
