//! Exact evaluation of the closed-form height and class-size bounds.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rounding {
    Exact,
    /// A rational expression was floored.
    FlooredRational,
    /// A non-integral exponent was rounded up, so the value over-approximates.
    OverApproximatedExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub params: Vec<Param>,
    #[serde(serialize_with = "decimal")]
    pub value: BigUint,
    pub digits: usize,
    pub rounding: Rounding,
    pub note: Option<String>,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl BoundReport {
    fn new(name: &str, params: &[(&str, u64)], value: BigUint, rounding: Rounding) -> Self {
        Self {
            name: name.to_string(),
            params: params
                .iter()
                .map(|&(name, value)| Param {
                    name: name.to_string(),
                    value,
                })
                .collect(),
            digits: value.to_string().len(),
            value,
            rounding,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(big(base), exp as usize)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(what.to_string()))
    }
}

/// `(2l - 1)(n - 1)(n - 2) / 2`, the bound for 2-letter periods.
pub fn beth2(l: u64, n: u64) -> Result<BoundReport> {
    require(l >= 1, "beth2 needs l >= 1")?;
    require(n >= 3, "beth2 needs n >= 3")?;
    let v = big(2 * l - 1) * big(n - 1) * big(n - 2) / big(2);
    Ok(BoundReport::new(
        "beth2",
        &[("l", l), ("n", n)],
        v,
        Rounding::Exact,
    ))
}

/// `(2l - 1)(n - 1)(n - 2)`, the bound for 3-letter periods.
pub fn beth3(l: u64, n: u64) -> Result<BoundReport> {
    require(l >= 1, "beth3 needs l >= 1")?;
    require(n >= 3, "beth3 needs n >= 3")?;
    let v = big(2 * l - 1) * big(n - 1) * big(n - 2);
    Ok(BoundReport::new(
        "beth3",
        &[("l", l), ("n", n)],
        v,
        Rounding::Exact,
    ))
}

/// `(l - 2)(n - 1)`, the bound for periods of length `n - 1`.
pub fn beth_nminus1(l: u64, n: u64) -> Result<BoundReport> {
    require(l >= 2, "beth_nminus1 needs l >= 2")?;
    require(n >= 3, "beth_nminus1 needs n >= 3")?;
    let v = big(l - 2) * big(n - 1);
    Ok(BoundReport::new(
        "beth_nminus1",
        &[("l", l), ("n", n)],
        v,
        Rounding::Exact,
    ))
}

/// `(l - 2^{n-1})(n - 2)(n - 3) / 2`, the lower bound from the extremal words.
pub fn psi_lower(n: u64, l: u64) -> Result<BoundReport> {
    require(n >= 3, "psi_lower needs n >= 3")?;
    let threshold = pow(2, n - 1);
    require(big(l) > threshold, "psi_lower needs l > 2^(n-1)")?;
    let v = (big(l) - threshold) * big(n - 2) * big(n - 3) / big(2);
    Ok(BoundReport::new(
        "psi_lower",
        &[("n", n), ("l", l)],
        v,
        Rounding::Exact,
    ))
}

/// `8 (l + 1)^n n^6 l` as stated; see [`upsilon_proof`] for the variant without the last factor.
pub fn upsilon(n: u64, l: u64) -> Result<BoundReport> {
    require(n >= 1 && l >= 1, "upsilon needs positive n and l")?;
    let v = big(8) * pow(l + 1, n) * pow(n, 6) * big(l);
    Ok(
        BoundReport::new("upsilon", &[("n", n), ("l", l)], v, Rounding::Exact)
            .with_note("the value reached at the end of the proof lacks the factor l; see upsilon_proof"),
    )
}

/// `8 (l + 1)^n n^6`.
pub fn upsilon_proof(n: u64, l: u64) -> Result<BoundReport> {
    require(n >= 1 && l >= 1, "upsilon needs positive n and l")?;
    let v = big(8) * pow(l + 1, n) * pow(n, 6);
    Ok(BoundReport::new(
        "upsilon_proof",
        &[("n", n), ("l", l)],
        v,
        Rounding::Exact,
    ))
}

/// `8 (l + 1)^{n+1} n^6`.
pub fn phi(n: u64, l: u64) -> Result<BoundReport> {
    require(n >= 1 && l >= 1, "phi needs positive n and l")?;
    let v = big(8) * pow(l + 1, n + 1) * pow(n, 6);
    Ok(BoundReport::new("phi", &[("n", n), ("l", l)], v, Rounding::Exact))
}

/// `(l - 1) m^2 / 4 + 1`, floored.
pub fn height_lower(l: u64, m: u64) -> Result<BoundReport> {
    require(l >= 1 && m >= 1, "height_lower needs positive l and m")?;
    let numerator = big(l - 1) * big(m) * big(m);
    let rounding = if (&numerator % big(4)) == big(0) {
        Rounding::Exact
    } else {
        Rounding::FlooredRational
    };
    let v = numerator / big(4) + big(1);
    Ok(BoundReport::new(
        "height_lower",
        &[("l", l), ("m", m)],
        v,
        rounding,
    ))
}

/// Smallest `e` with `3^e >= x`, and whether equality holds.
fn ceil_log3(x: &BigUint) -> (u64, bool) {
    let mut e = 0;
    let mut p = big(1);
    while &p < x {
        p *= 3u32;
        e += 1;
    }
    (e, &p == x)
}

/// `2^87 l n^{12 log_3 n + 48}`, exponent rounded up to an integer.
pub fn bk_height(l: u64, n: u64) -> Result<BoundReport> {
    require(l >= 1 && n >= 1, "bk_height needs positive l and n")?;
    let (e, exact) = ceil_log3(&pow(n, 12));
    let v = pow(2, 87) * big(l) * pow(n, e + 48);
    let rounding = if exact {
        Rounding::Exact
    } else {
        Rounding::OverApproximatedExponent
    };
    Ok(BoundReport::new("bk_height", &[("l", l), ("n", n)], v, rounding)
        .with_note(format!("exponent {}", e + 48)))
}

/// `2^18 l (nd)^{3 log_3(nd) + 13} d^2`, exponent rounded up to an integer.
pub fn bk_psi(n: u64, d: u64, l: u64) -> Result<BoundReport> {
    require(n >= 1 && d >= 1 && l >= 1, "bk_psi needs positive n, d and l")?;
    let nd = n * d;
    let (e, exact) = ceil_log3(&pow(nd, 3));
    let v = pow(2, 18) * big(l) * pow(nd, e + 13) * big(d) * big(d);
    let rounding = if exact {
        Rounding::Exact
    } else {
        Rounding::OverApproximatedExponent
    };
    Ok(
        BoundReport::new("bk_psi", &[("n", n), ("d", d), ("l", l)], v, rounding)
            .with_note(format!("exponent {}", e + 13)),
    )
}

/// `4 (l + 1)^n n^4`, a strict upper bound on good class sizes for any period length `t`.
pub fn ess_l4_bound(t: u64, l: u64, n: u64) -> Result<BoundReport> {
    require(
        t >= 1 && l >= 1 && n >= 1,
        "ess_l4_bound needs positive t, l and n",
    )?;
    let v = big(4) * pow(l + 1, n) * pow(n, 4);
    Ok(BoundReport::new(
        "ess_l4_bound",
        &[("t", t), ("l", l), ("n", n)],
        v,
        Rounding::Exact,
    ))
}

/// `2(n - 1)` times the class bound for period length `k`. When `n - 1`
/// coincides with 2 or 3 the dedicated 2- or 3-letter bound is used.
pub fn co1_bound(k: u64, l: u64, n: u64) -> Result<BoundReport> {
    let inner = match k {
        2 => beth2(l, n)?,
        3 => beth3(l, n)?,
        _ if n >= 1 && k == n - 1 => beth_nminus1(l, n)?,
        _ => {
            return Err(Error::Domain(format!(
                "co1_bound supports k in {{2, 3, n - 1}}, got k = {k}"
            )))
        }
    };
    let v = big(2) * big(n - 1) * &inner.value;
    Ok(
        BoundReport::new("co1_bound", &[("k", k), ("l", l), ("n", n)], v, Rounding::Exact)
            .with_note(format!("2(n-1) * {}", inner.name)),
    )
}

/// Every bound that is defined for the given parameters.
pub fn bound_table(l: u64, n: u64, m: u64, d: u64) -> Vec<BoundReport> {
    [
        beth2(l, n),
        beth3(l, n),
        beth_nminus1(l, n),
        psi_lower(n, l),
        upsilon(n, l),
        upsilon_proof(n, l),
        phi(n, l),
        height_lower(l, m),
        bk_height(l, n),
        bk_psi(n, d, l),
        ess_l4_bound(2, l, n),
        co1_bound(2, l, n),
        co1_bound(3, l, n),
        co1_bound(n.saturating_sub(1), l, n),
    ]
    .into_iter()
    .filter_map(Result::ok)
    .fold(Vec::new(), |mut rows: Vec<BoundReport>, r| {
        if !rows.iter().any(|x| x.name == r.name && x.params == r.params) {
            rows.push(r);
        }
        rows
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(r: Result<BoundReport>) -> BigUint {
        r.unwrap().value
    }

    #[test]
    fn small_values() {
        assert_eq!(val(beth2(3, 4)), big(15));
        assert_eq!(val(beth2(1, 3)), big(1));
        assert!(beth2(3, 2).is_err());
        assert_eq!(val(beth3(3, 4)), big(30));
        assert_eq!(val(beth_nminus1(4, 5)), big(8));
        assert_eq!(val(beth_nminus1(2, 7)), big(0));
        assert_eq!(val(psi_lower(4, 10)), big(2));
        assert!(psi_lower(4, 8).is_err());
        assert_eq!(val(upsilon(3, 2)), big(314_928));
        assert_eq!(val(upsilon_proof(3, 2)), big(157_464));
        assert_eq!(val(phi(1, 1)), big(32));
        assert_eq!(val(ess_l4_bound(2, 2, 3)), big(8748));
        assert_eq!(val(co1_bound(2, 3, 4)), big(90));
        assert!(co1_bound(5, 3, 4).is_err());
    }

    #[test]
    fn height_lower_floors() {
        let r = height_lower(2, 4).unwrap();
        assert_eq!((r.value.clone(), r.rounding), (big(5), Rounding::Exact));
        let r = height_lower(2, 3).unwrap();
        assert_eq!((r.value.clone(), r.rounding), (big(3), Rounding::FlooredRational));
    }

    #[test]
    fn exponent_rounding() {
        let r = bk_height(2, 3).unwrap();
        assert_eq!(r.rounding, Rounding::Exact);
        assert_eq!(r.value, pow(2, 88) * pow(3, 60));
        let r = bk_height(1, 2).unwrap();
        assert_eq!(r.rounding, Rounding::OverApproximatedExponent);
        // 3^8 = 6561 >= 2^12 = 4096 > 3^7
        assert_eq!(r.value, pow(2, 87) * pow(2, 56));
        let r = bk_psi(3, 1, 1).unwrap();
        assert_eq!(r.rounding, Rounding::Exact);
        assert_eq!(r.value, pow(2, 18) * pow(3, 16));
    }

    #[test]
    fn digit_counts_match() {
        for r in bound_table(5, 6, 7, 2) {
            assert_eq!(r.digits, r.value.to_string().len(), "{}", r.name);
        }
    }

    #[test]
    fn co1_uses_class_bounds_and_lower_bound_stays_below() {
        for l in 1..30 {
            for n in 3..8 {
                assert_eq!(val(co1_bound(2, l, n)), big(2 * (n - 1)) * val(beth2(l, n)));
                if let Ok(p) = psi_lower(n, l) {
                    assert!(p.value <= val(beth2(l, n)));
                }
            }
        }
    }

    #[test]
    fn json_value_is_decimal() {
        let json = serde_json::to_string(&beth2(3, 4).unwrap()).unwrap();
        assert!(json.contains("\"value\":\"15\""));
    }
}
