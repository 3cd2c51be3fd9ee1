//! Counting bounds for the number of vertices `V(n, d)` of `Ω_n^d`.
//!
//! Integer-valued bounds are exact big integers. The logarithmic bounds are
//! `f64`; where the source formula carries an `o(·)` tail the value is the
//! leading terms only and is flagged as such, never used as an inequality.

use std::f64::consts::LOG2_E;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::json;

pub fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// `C(top, bottom)`, zero when `bottom > top`.
pub fn binomial(top: &BigUint, bottom: &BigUint) -> BigUint {
    if bottom > top {
        return BigUint::zero();
    }
    let k = std::cmp::min(bottom.clone(), top - bottom);
    let mut acc = BigUint::one();
    let mut i = BigUint::zero();
    while i < k {
        // acc * (top - i) is divisible by (i + 1) after the multiplication.
        acc = acc * (top - &i) / (&i + 1u32);
        i += 1u32;
    }
    acc
}

/// `n^d − (n−1)^d`, the largest possible support of a vertex.
pub fn support_cardinality_bound(n: usize, d: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    pow(n, d) - pow(n - 1, d)
}

/// Upper bound on vertices of an `m`-dimensional polytope with `k` facets,
/// specialised to `k = n^d`, `m = (n−1)^d`.
pub fn mcmullen_upper_bound(n: usize, d: usize) -> BigUint {
    let k = pow(n, d);
    let m = pow(n.saturating_sub(1), d);
    let bottom = &k - &m;
    let half_up = (&m + 1u32) / 2u32;
    let half_up2 = (&m + 2u32) / 2u32;
    binomial(&(&k - half_up), &bottom) + binomial(&(&k - half_up2), &bottom)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LowerBoundCase {
    /// `n = 4`: `2^{d−1} + d·log₂3 + 1`, the `o(1)` term dropped.
    OrderFour,
    /// `n = 5`: `3^{(d−1)/3} − 0.072`.
    OrderFive,
    /// even `n ≥ 6`: `(n/2)^{d−1}`.
    EvenOrder,
    /// odd `n ≥ 7`: `((n−3)/2)^{(d−1)/2} · ((n−1)/2)^{(d−1)/2}`.
    OddOrder,
}

impl LowerBoundCase {
    pub fn tag(&self) -> &'static str {
        match self {
            LowerBoundCase::OrderFour => "n=4",
            LowerBoundCase::OrderFive => "n=5",
            LowerBoundCase::EvenOrder => "even n>=6",
            LowerBoundCase::OddOrder => "odd n>=7",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Log2Lower {
    pub case: LowerBoundCase,
    pub value: f64,
    /// Present when the formula evaluates to an integer.
    pub exact: Option<BigUint>,
    pub tail_dropped: bool,
}

/// Lower bound on `log₂ V(n, d)` for fixed order; `None` for `n ≤ 3`.
pub fn log2_lower_bound(n: usize, d: usize) -> Option<Log2Lower> {
    let e = d.saturating_sub(1);
    let out = match n {
        0..=3 => return None,
        4 => Log2Lower {
            case: LowerBoundCase::OrderFour,
            value: 2f64.powi(e as i32) + d as f64 * 3f64.log2() + 1.0,
            exact: None,
            tail_dropped: true,
        },
        5 => Log2Lower {
            case: LowerBoundCase::OrderFive,
            value: 3f64.powf(e as f64 / 3.0) - 0.072,
            exact: None,
            tail_dropped: false,
        },
        _ if n.is_multiple_of(2) => {
            let exact = pow(n / 2, e);
            Log2Lower {
                case: LowerBoundCase::EvenOrder,
                value: exact.to_f64().unwrap_or(f64::INFINITY),
                exact: Some(exact),
                tail_dropped: false,
            }
        }
        _ => {
            let base = (n - 3) / 2 * ((n - 1) / 2);
            let exact = e.is_multiple_of(2).then(|| pow(base, e / 2));
            let value = match &exact {
                Some(v) => v.to_f64().unwrap_or(f64::INFINITY),
                None => (base as f64).powf(e as f64 / 2.0),
            };
            Log2Lower {
                case: LowerBoundCase::OddOrder,
                value,
                exact,
                tail_dropped: false,
            }
        }
    };
    Some(out)
}

/// Leading terms of the fixed-order upper bound on `log₂ V(n, d)`, the
/// `o((n−1)^d)` tail dropped.
pub fn log2_upper_bound_leading(n: usize, d: usize) -> f64 {
    let m = ((n - 1) as f64).powi(d as i32);
    let gap = (n as f64).log2() - ((n - 1) as f64).log2();
    d as f64 * m / 2.0 * gap + m / 2.0 * (1.0 + LOG2_E)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    pub support_bound: BigUint,
    pub mcmullen_upper: BigUint,
    pub log2_lower: Option<Log2Lower>,
    pub log2_upper_leading: f64,
    pub notes: Vec<String>,
}

pub fn bound_report(n: usize, d: usize) -> BoundReport {
    let log2_lower = log2_lower_bound(n, d);
    let mut notes = vec![
        "log2_upper_leading: asymptotic, o((n-1)^d) tail dropped; not an inequality at finite n, d"
            .to_string(),
    ];
    match &log2_lower {
        Some(l) if l.tail_dropped => notes.push(
            "log2_lower: asymptotic, o(1) tail dropped; leading terms only".to_string(),
        ),
        None => notes.push("log2_lower: no closed form for n <= 3".to_string()),
        _ => {}
    }
    BoundReport {
        n,
        d,
        support_bound: support_cardinality_bound(n, d),
        mcmullen_upper: mcmullen_upper_bound(n, d),
        log2_lower,
        log2_upper_leading: log2_upper_bound_leading(n, d),
        notes,
    }
}

impl BoundReport {
    pub fn to_text(&self) -> String {
        let lower = match &self.log2_lower {
            None => "none".to_string(),
            Some(l) => {
                let value = match &l.exact {
                    Some(v) => v.to_string(),
                    None => format!("{:.10}", l.value),
                };
                let tail = if l.tail_dropped { ", leading terms" } else { "" };
                format!("{value} ({}{tail})", l.case.tag())
            }
        };
        let mut out = format!(
            "n: {}\nd: {}\nsupport_bound: {}\nmcmullen_upper: {}\nlog2_lower: {}\nlog2_upper_leading: {:.10} (leading terms)\n",
            self.n, self.d, self.support_bound, self.mcmullen_upper, lower, self.log2_upper_leading
        );
        for note in &self.notes {
            out.push_str("note: ");
            out.push_str(note);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let lower = self.log2_lower.as_ref().map(|l| {
            json!({
                "case": l.case.tag(),
                "value": l.value,
                "exact": l.exact.as_ref().map(|v| v.to_string()),
                "tail_dropped": l.tail_dropped,
            })
        });
        json!({
            "n": self.n,
            "d": self.d,
            "support_bound": self.support_bound.to_string(),
            "mcmullen_upper": self.mcmullen_upper.to_string(),
            "log2_lower": lower,
            "log2_upper_leading": self.log2_upper_leading,
            "notes": self.notes,
        })
        .to_string()
    }
}
