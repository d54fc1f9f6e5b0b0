//! Lebesgue exponents in `[1, ∞]` and the exponent bookkeeping shared by the
//! weighted estimates.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Lebesgue exponent. Serialized as a JSON number, or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinite,
}

impl Exponent {
    pub fn new(p: f64) -> Self {
        if p.is_infinite() {
            Exponent::Infinite
        } else {
            Exponent::Finite(p)
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Exponent::Finite(p) => p,
            Exponent::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinite)
    }

    /// `1/p`, with `1/∞ = 0`.
    pub fn reciprocal(self) -> f64 {
        match self {
            Exponent::Finite(p) => 1.0 / p,
            Exponent::Infinite => 0.0,
        }
    }
}

impl From<f64> for Exponent {
    fn from(p: f64) -> Self {
        Exponent::new(p)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => serializer.serialize_f64(*p),
            Exponent::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(p) => Ok(Exponent::new(p)),
            Raw::Text(t) if matches!(t.as_str(), "inf" | "infinity" | "Infinity") => {
                Ok(Exponent::Infinite)
            }
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "expected a number or \"inf\", got {t:?}"
            ))),
        }
    }
}

/// Hölder conjugate: `p/(p−1)`, with `1' = ∞` and `∞' = 1`.
pub fn conjugate_exponent(p: Exponent) -> Result<Exponent> {
    match p {
        Exponent::Infinite => Ok(Exponent::Finite(1.0)),
        Exponent::Finite(p) if !(p >= 1.0) => {
            Err(Error::param("p", p, "exponent must be at least 1"))
        }
        Exponent::Finite(1.0) => Ok(Exponent::Infinite),
        Exponent::Finite(p) => Ok(Exponent::Finite(p / (p - 1.0))),
    }
}

/// Every exponent derived from `(p, α, n, s)` in the critical-index setting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedExponents {
    pub p: f64,
    /// `1/q = 1/p − α/n`; infinite when `p = n/α`.
    pub q: Exponent,
    pub p_conj: Exponent,
    pub q_conj: Exponent,
    /// `κ = p/q = 1 − αp/n`.
    pub kappa: f64,
    pub s: Exponent,
    pub s_conj: Exponent,
    /// `s'(p/s')' = ps'/(p − s')`, infinite when `p = s'`.
    pub composite: Exponent,
}

const IDENTITY_TOL: f64 = 1e-12;

/// Derives `q, p', q', κ, s', s'(p/s')'` and checks the exponent identities
/// `1/p' + 1/q = 1 − α/n`, `s'(p/s')' = ps'/(p−s')` and
/// `1/(s'(p/s')') + 1/q = 1 − α/n − 1/s`.
pub fn exponent_identities(
    p: f64,
    q: Option<Exponent>,
    alpha: f64,
    n: usize,
    s: Exponent,
) -> Result<DerivedExponents> {
    let nf = n as f64;
    if !(alpha > 0.0 && alpha < nf) {
        return Err(Error::param("alpha", alpha, "must lie in (0, n)"));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::param("p", p, "must be a finite exponent >= 1"));
    }
    let inv_q = 1.0 / p - alpha / nf;
    if inv_q < -IDENTITY_TOL {
        return Err(Error::param("p", p, "must not exceed n/alpha"));
    }
    let inv_q = inv_q.max(0.0);
    let q_derived = if inv_q == 0.0 {
        Exponent::Infinite
    } else {
        Exponent::Finite(1.0 / inv_q)
    };
    if let Some(q) = q {
        if (q.reciprocal() - inv_q).abs() > IDENTITY_TOL {
            return Err(Error::Exponents(format!(
                "inconsistent triple: 1/q = {} but 1/p - alpha/n = {inv_q}",
                q.reciprocal()
            )));
        }
    }
    let s_conj = conjugate_exponent(s)?;
    if s_conj.value() > p * (1.0 + IDENTITY_TOL) {
        return Err(Error::param("p", p, "requires s' <= p"));
    }
    let p_conj = conjugate_exponent(Exponent::Finite(p))?;
    let q_conj = match q_derived {
        Exponent::Infinite => Exponent::Finite(1.0),
        Exponent::Finite(q) => conjugate_exponent(Exponent::Finite(q))?,
    };
    let sc = s_conj.value();
    let ratio = p / sc;
    let composite = if (ratio - 1.0).abs() <= IDENTITY_TOL {
        Exponent::Infinite
    } else {
        let via_conjugate = sc * conjugate_exponent(Exponent::Finite(ratio))?.value();
        let closed = p * sc / (p - sc);
        if ((via_conjugate - closed) / closed).abs() > IDENTITY_TOL {
            return Err(Error::Exponents(format!(
                "s'(p/s')' = {via_conjugate} disagrees with ps'/(p-s') = {closed}"
            )));
        }
        Exponent::Finite(closed)
    };
    let lhs = p_conj.reciprocal() + inv_q;
    if (lhs - (1.0 - alpha / nf)).abs() > IDENTITY_TOL {
        return Err(Error::Exponents(format!(
            "1/p' + 1/q = {lhs} but 1 - alpha/n = {}",
            1.0 - alpha / nf
        )));
    }
    let lhs = composite.reciprocal() + inv_q;
    let rhs = 1.0 - alpha / nf - s.reciprocal();
    if (lhs - rhs).abs() > IDENTITY_TOL {
        return Err(Error::Exponents(format!(
            "1/(s'(p/s')') + 1/q = {lhs} but 1 - alpha/n - 1/s = {rhs}"
        )));
    }
    Ok(DerivedExponents {
        p,
        q: q_derived,
        p_conj,
        q_conj,
        kappa: p * inv_q,
        s,
        s_conj,
        composite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn conjugates() {
        assert_eq!(
            conjugate_exponent(Exponent::Finite(2.0)).unwrap(),
            Exponent::Finite(2.0)
        );
        assert_eq!(
            conjugate_exponent(Exponent::Finite(1.0)).unwrap(),
            Exponent::Infinite
        );
        assert_eq!(
            conjugate_exponent(Exponent::Infinite).unwrap(),
            Exponent::Finite(1.0)
        );
        assert_eq!(
            conjugate_exponent(Exponent::Finite(4.0)).unwrap(),
            Exponent::Finite(4.0 / 3.0)
        );
        assert!(conjugate_exponent(Exponent::Finite(0.5)).is_err());
    }

    #[test]
    fn composite_exponent() {
        // p = 4, s' = 2 → s'(p/s')' = 8/2 = 4
        let d = exponent_identities(4.0, None, 0.1, 1, Exponent::Finite(2.0)).unwrap();
        assert_relative_eq!(d.composite.value(), 4.0, max_relative = 1e-14);
    }

    #[test]
    fn critical_triples() {
        let d = exponent_identities(1.0, None, 0.5, 1, Exponent::Infinite).unwrap();
        assert_relative_eq!(d.q.value(), 2.0);
        assert_relative_eq!(d.kappa, 0.5);
        assert_eq!(d.p_conj, Exponent::Infinite);
        assert_eq!(d.composite, Exponent::Infinite);

        let d = exponent_identities(
            4.0 / 3.0,
            Some(Exponent::Finite(4.0)),
            1.0,
            2,
            Exponent::Infinite,
        )
        .unwrap();
        assert_relative_eq!(d.q.value(), 4.0, max_relative = 1e-12);
        assert_relative_eq!(d.kappa, 1.0 / 3.0, max_relative = 1e-12);

        // p = n/α gives q = ∞ and κ = 0
        let d = exponent_identities(2.0, None, 0.5, 1, Exponent::Infinite).unwrap();
        assert_eq!(d.q, Exponent::Infinite);
        assert_eq!(d.kappa, 0.0);
    }

    #[test]
    fn rejects_bad_triples() {
        // s = 2 → s' = 2 > p = 1
        assert!(exponent_identities(1.0, None, 0.5, 1, Exponent::Finite(2.0)).is_err());
        assert!(
            exponent_identities(1.0, Some(Exponent::Finite(3.0)), 0.5, 1, Exponent::Infinite)
                .is_err()
        );
        assert!(exponent_identities(3.0, None, 0.5, 1, Exponent::Infinite).is_err());
        assert!(exponent_identities(1.0, None, 1.0, 1, Exponent::Infinite).is_err());
    }

    #[test]
    fn serde_infinity() {
        let e: Exponent = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(e, Exponent::Infinite);
        let e: Exponent = serde_json::from_str("2.5").unwrap();
        assert_eq!(e, Exponent::Finite(2.5));
        assert_eq!(
            serde_json::to_string(&Exponent::Infinite).unwrap(),
            "\"inf\""
        );
        assert!(serde_json::from_str::<Exponent>("\"big\"").is_err());
    }
}
