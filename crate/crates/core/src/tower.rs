//! Tower-function arithmetic and the lower-bound formulas built on it.
//!
//! A [`TowerValue`] is exact while its binary length stays within
//! [`EXACT_BIT_CAP`]; beyond that it is kept as a right-nested power tower of
//! twos over a seed, optionally scaled by a small coefficient.
//!
//! Rendering grammar (no spaces):
//!
//! ```text
//! value  := [coeff "*"] term ("^" term)*
//! coeff  := digits
//! term   := digits
//! ```
//!
//! `^` is right-associative. The coefficient prefix only appears on scaled
//! symbolic values such as `4*2^2^65536`; exact values print as plain decimal.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Values whose binary length exceeds this are held symbolically.
pub const EXACT_BIT_CAP: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum TowerValue {
    Exact(BigUint),
    /// `coefficient * 2^2^...^top` with `levels` twos. Canonical: `levels >= 1`
    /// and `top >= 64`, so no further level can be folded into `top`.
    Symbolic {
        coefficient: u64,
        levels: u32,
        top: BigUint,
    },
}

impl TowerValue {
    /// `coefficient * (2^)^levels top`, normalized.
    fn from_tower(coefficient: u64, mut levels: u32, top: BigUint) -> Result<Self> {
        let mut top = top;
        while levels > 0 && top < BigUint::from(64u32) {
            let e = top.to_u32().expect("small");
            top = BigUint::one() << e;
            levels -= 1;
        }
        let cap = BigUint::from(EXACT_BIT_CAP);
        let mut value = top.clone();
        for _ in 0..levels {
            // bit length of 2^value is value + 1
            if &value + 1u32 > cap {
                return Ok(TowerValue::Symbolic {
                    coefficient,
                    levels,
                    top,
                });
            }
            let e = value.to_u64().expect("below the cap");
            value = BigUint::one() << e;
        }
        Ok(TowerValue::Exact(value * coefficient))
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            TowerValue::Exact(v) => Some(v),
            TowerValue::Symbolic { .. } => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, TowerValue::Exact(_))
    }

    /// Multiplies by a small constant.
    pub fn scale(&self, factor: u64) -> Result<Self> {
        match self {
            TowerValue::Exact(v) => Ok(TowerValue::Exact(v * factor)),
            TowerValue::Symbolic {
                coefficient,
                levels,
                top,
            } => {
                let coefficient = coefficient
                    .checked_mul(factor)
                    .ok_or_else(|| Error::param("tower coefficient overflow"))?;
                Ok(TowerValue::Symbolic {
                    coefficient,
                    levels: *levels,
                    top: top.clone(),
                })
            }
        }
    }

    /// Binary length when it is representable in 64 bits.
    pub fn bit_length(&self) -> Option<u64> {
        match self {
            TowerValue::Exact(v) => Some(v.bits()),
            TowerValue::Symbolic { .. } => None,
        }
    }
}

impl fmt::Display for TowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerValue::Exact(v) => write!(f, "{v}"),
            TowerValue::Symbolic {
                coefficient,
                levels,
                top,
            } => {
                if *coefficient != 1 {
                    write!(f, "{coefficient}*")?;
                }
                for _ in 0..*levels {
                    write!(f, "2^")?;
                }
                write!(f, "{top}")
            }
        }
    }
}

impl fmt::Debug for TowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerValue::Exact(v) if v.bits() > 256 => write!(f, "Exact(<{} bits>)", v.bits()),
            _ => write!(f, "{self}"),
        }
    }
}

impl Serialize for TowerValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TowerValue {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(1, format!("{msg}: {text:?}"));
        let (coefficient, body) = match text.split_once('*') {
            Some((c, rest)) => {
                if c.is_empty() || !c.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("coefficient must be decimal digits"));
                }
                let c: u64 = c.parse().map_err(|_| bad("coefficient out of range"))?;
                if c == 0 {
                    return Err(bad("coefficient must be positive"));
                }
                (c, rest)
            }
            None => (1, text),
        };
        let terms: Vec<&str> = body.split('^').collect();
        if terms
            .iter()
            .any(|t| t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()))
        {
            return Err(bad("terms must be non-empty decimal digits"));
        }
        let terms: Vec<BigUint> = terms
            .iter()
            .map(|t| BigUint::parse_bytes(t.as_bytes(), 10).expect("digits"))
            .collect();

        // Fold from the right. Runs of base 2 stay symbolic; any other base
        // forces exact evaluation of everything to its right.
        let mut levels: u32 = 0;
        let mut top = terms.last().expect("split yields one term").clone();
        let two = BigUint::from(2u32);
        for base in terms[..terms.len() - 1].iter().rev() {
            if *base == two {
                levels += 1;
                continue;
            }
            let exponent = match TowerValue::from_tower(1, levels, top)? {
                TowerValue::Exact(v) => v,
                TowerValue::Symbolic { .. } => {
                    return Err(bad("non-2 base over a symbolic exponent"))
                }
            };
            top = exact_pow(base, &exponent).ok_or_else(|| bad("value exceeds the exact cap"))?;
            levels = 0;
        }
        if coefficient != 1 && levels == 0 {
            return Ok(TowerValue::Exact(top * coefficient));
        }
        TowerValue::from_tower(coefficient, levels, top)
    }
}

fn exact_pow(base: &BigUint, exponent: &BigUint) -> Option<BigUint> {
    if base.is_zero() {
        return Some(if exponent.is_zero() {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    if base.is_one() || exponent.is_zero() {
        return Some(BigUint::one());
    }
    let e = exponent.to_u64()?;
    if (base.bits() - 1).saturating_mul(e) > EXACT_BIT_CAP {
        return None;
    }
    Some(num_traits::pow::Pow::pow(base, e))
}

/// `tw_1(x) = x`, `tw_{i+1}(x) = 2^{tw_i(x)}`.
pub fn tw(i: u32, x: u64) -> Result<TowerValue> {
    if i == 0 {
        return Err(Error::param("tower height must be at least 1"));
    }
    if x == 0 {
        return Err(Error::param("tower seed must be at least 1"));
    }
    TowerValue::from_tower(1, i - 1, BigUint::from(x))
}

/// Lower bound `s(k) >= 4 tw_{k-3}(2)` on the largest N with a proper
/// 3-coloring of `Sh(N, k)`.
pub fn s_lower(k: u32) -> Result<TowerValue> {
    if k < 4 {
        return Err(Error::Domain(format!(
            "s_lower needs k >= 4 (tower height k-3 >= 1), got k={k}"
        )));
    }
    tw(k - 3, 2)?.scale(4)
}

/// Lower bound `s_4(k) >= 4 tw_k(2)` for four colors.
pub fn s4_lower(k: u32) -> Result<TowerValue> {
    if k < 1 {
        return Err(Error::Domain("s4_lower needs k >= 1".into()));
    }
    tw(k, 2)?.scale(4)
}

/// Which Ramsey lower bound [`bound_table`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `R_k(k+1, k+1) >= s(floor(k/4))`
    Diag,
    /// `R_k(k+1, k+2) >= s(k-4)`
    K1K2,
    /// `R_k(k+2, k+2) >= s(k-1)`
    K2K2,
    /// `R_k(k+1, 2k+1) >= s(k)`
    K1_2K1,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::Diag,
        BoundKind::K1K2,
        BoundKind::K2K2,
        BoundKind::K1_2K1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Diag => "diag",
            BoundKind::K1K2 => "k1k2",
            BoundKind::K2K2 => "k2k2",
            BoundKind::K1_2K1 => "k1_2k1",
        }
    }

    /// Smallest k for which the tower height is at least 1.
    pub fn min_k(self) -> u32 {
        match self {
            BoundKind::Diag => 16,
            BoundKind::K1K2 => 8,
            BoundKind::K2K2 => 5,
            BoundKind::K1_2K1 => 4,
        }
    }

    /// The argument handed to `s_lower`.
    fn reduce(self, k: u32) -> u32 {
        match self {
            BoundKind::Diag => k / 4,
            BoundKind::K1K2 => k - 4,
            BoundKind::K2K2 => k - 1,
            BoundKind::K1_2K1 => k,
        }
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::param(format!("unknown bound kind {s:?}")))
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn bound_table(k: u32, kind: BoundKind) -> Result<TowerValue> {
    if k < kind.min_k() {
        return Err(Error::Domain(format!(
            "bound {kind} needs k >= {}, got k={k}",
            kind.min_k()
        )));
    }
    s_lower(kind.reduce(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: u64) -> TowerValue {
        TowerValue::Exact(BigUint::from(v))
    }

    #[test]
    fn small_towers() {
        assert_eq!(tw(1, 2).unwrap(), exact(2));
        assert_eq!(tw(2, 2).unwrap(), exact(4));
        assert_eq!(tw(3, 2).unwrap(), exact(16));
        assert_eq!(tw(4, 2).unwrap(), exact(65536));
        assert_eq!(tw(2, 3).unwrap(), exact(8));
        assert_eq!(tw(3, 3).unwrap(), exact(256));
        assert!(tw(0, 2).is_err());
    }

    #[test]
    fn crosses_the_cap_between_heights_five_and_six() {
        let five = tw(5, 2).unwrap();
        assert_eq!(five.bit_length(), Some(65537));
        assert_eq!(five.exact().unwrap(), &(BigUint::one() << 65536u32));
        let six = tw(6, 2).unwrap();
        assert!(!six.is_exact());
        assert_eq!(six.to_string(), "2^2^65536");
        assert_eq!(tw(8, 2).unwrap().to_string(), "2^2^2^2^65536");
    }

    #[test]
    fn recurrence_holds_on_exact_range() {
        for x in 1..=3u64 {
            for i in 1..=4 {
                let a = tw(i, x).unwrap();
                let b = tw(i + 1, x).unwrap();
                let (Some(a), Some(b)) = (a.exact(), b.exact()) else {
                    continue;
                };
                let e = a.to_u64().unwrap();
                assert_eq!(b, &(BigUint::one() << e), "i={i} x={x}");
                assert!(b > a);
            }
        }
        for i in 1..=4 {
            for x in 1..3u64 {
                let (a, b) = (tw(i, x).unwrap(), tw(i, x + 1).unwrap());
                if let (Some(a), Some(b)) = (a.exact(), b.exact()) {
                    assert!(b > a, "i={i} x={x}");
                }
            }
        }
    }

    #[test]
    fn bound_formulas() {
        assert_eq!(s_lower(4).unwrap(), exact(8));
        assert_eq!(s_lower(5).unwrap(), exact(16));
        assert_eq!(s_lower(7).unwrap(), exact(262144));
        assert!(matches!(s_lower(3), Err(Error::Domain(_))));
        assert_eq!(s4_lower(1).unwrap(), exact(8));
        assert_eq!(s4_lower(3).unwrap(), exact(64));
        assert_eq!(s4_lower(4).unwrap(), exact(262144));
        assert_eq!(s_lower(9).unwrap().to_string(), "4*2^2^65536");

        assert_eq!(bound_table(16, BoundKind::Diag).unwrap(), exact(8));
        assert_eq!(bound_table(8, BoundKind::K1K2).unwrap(), exact(8));
        assert_eq!(bound_table(4, BoundKind::K1_2K1).unwrap(), exact(8));
        assert_eq!(bound_table(5, BoundKind::K2K2).unwrap(), exact(8));
        for kind in BoundKind::ALL {
            assert!(matches!(
                bound_table(kind.min_k() - 1, kind),
                Err(Error::Domain(_))
            ));
        }
        for k in 16..=64 {
            assert_eq!(
                bound_table(k, BoundKind::Diag).unwrap(),
                s_lower(k / 4).unwrap()
            );
        }
    }

    #[test]
    fn rendering_round_trips() {
        for v in [
            tw(6, 2).unwrap(),
            tw(9, 3).unwrap(),
            s_lower(10).unwrap(),
            tw(3, 2).unwrap(),
        ] {
            let back: TowerValue = v.to_string().parse().unwrap();
            assert_eq!(back, v);
        }
        // Non-canonical spellings normalize to the same value.
        assert_eq!("2^2^2^16".parse::<TowerValue>().unwrap(), tw(6, 2).unwrap());
        assert_eq!(
            "2^2^2^2^2^2".parse::<TowerValue>().unwrap(),
            tw(6, 2).unwrap()
        );
        assert_eq!("3^2^2".parse::<TowerValue>().unwrap(), exact(81));
        assert_eq!("4*16".parse::<TowerValue>().unwrap(), exact(64));
        for bad in ["", "2^", "^2", "2 ^2", "a", "3^2^2^65536", "0*5"] {
            assert!(bad.parse::<TowerValue>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn bound_kind_names() {
        for kind in BoundKind::ALL {
            assert_eq!(kind.name().parse::<BoundKind>().unwrap(), kind);
        }
        assert!("diagonal".parse::<BoundKind>().is_err());
    }
}
