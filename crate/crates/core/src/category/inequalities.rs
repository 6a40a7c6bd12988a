use serde::Serialize;

use crate::category::{scat, wscat, CatResult, ScatOptions};
use crate::complex::Complex;
use crate::constructions::{product, sd};
use crate::error::Result;

/// Closed interval of possible values; `hi = None` means unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl Interval {
    pub fn exact(v: usize) -> Self {
        Interval { lo: v, hi: Some(v) }
    }

    fn of(r: &CatResult) -> Self {
        Interval {
            lo: r.lower,
            hi: Some(r.upper),
        }
    }

    fn map(self, f: impl Fn(usize) -> usize) -> Self {
        Interval {
            lo: f(self.lo),
            hi: self.hi.map(f),
        }
    }

    fn times(self, other: Interval) -> Self {
        Interval {
            lo: self.lo * other.lo,
            hi: self.hi.zip(other.hi).map(|(a, b)| a * b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Confirmed,
    Violated,
    Inconclusive,
    Skipped,
}

impl Verdict {
    /// Verdict for `lhs ≤ rhs` over all values in the intervals.
    pub fn le(lhs: Interval, rhs: Interval) -> Self {
        if lhs.hi.is_some_and(|h| h <= rhs.lo) {
            Verdict::Confirmed
        } else if rhs.hi.is_some_and(|h| lhs.lo > h) {
            Verdict::Violated
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityCheck {
    pub name: String,
    pub lhs: Option<Interval>,
    pub rhs: Option<Interval>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct InequalityReport {
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict == Verdict::Violated).count()
    }

    fn push(&mut self, name: impl Into<String>, lhs: Interval, rhs: Interval) {
        self.checks.push(InequalityCheck {
            name: name.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            verdict: Verdict::le(lhs, rhs),
        });
    }

    fn skip(&mut self, name: impl Into<String>) {
        self.checks.push(InequalityCheck {
            name: name.into(),
            lhs: None,
            rhs: None,
            verdict: Verdict::Skipped,
        });
    }
}

/// Largest product (vertices) for which the product inequality is checked.
const PRODUCT_VERTEX_LIMIT: usize = 64;
/// Largest complex (vertices) for which `scat ≤ wscat` is checked.
const WSCAT_VERTEX_LIMIT: usize = 5;

/// Checks, with interval semantics, the known inequalities relating
/// `scat`, `wscat`, subdivision, products, and core sizes on `K` and `L`.
pub fn verify_inequalities(k: &Complex, l: &Complex, opts: &ScatOptions) -> Result<InequalityReport> {
    let mut report = InequalityReport::default();
    let sk = scat(k, opts)?;
    let sl = scat(l, opts)?;
    for (name, x, sx) in [("K", k, &sk), ("L", l, &sl)] {
        let sub = sd(x);
        match scat(&sub, opts) {
            Ok(s) => report.push(format!("scat(sd {name}) <= scat {name}"), Interval::of(&s), Interval::of(sx)),
            Err(_) => report.skip(format!("scat(sd {name}) <= scat {name}")),
        }
    }
    let kl = product(k, l);
    let name = "scat(K x L) + 1 <= (scat K + 1)(scat L + 1)";
    if kl.num_vertices() <= PRODUCT_VERTEX_LIMIT {
        match scat(&kl, opts) {
            Ok(s) => report.push(
                name,
                Interval::of(&s).map(|v| v + 1),
                Interval::of(&sk).map(|v| v + 1).times(Interval::of(&sl).map(|v| v + 1)),
            ),
            Err(_) => report.skip(name),
        }
    } else {
        report.skip(name);
    }
    for (name, x, sx) in [("K", k, &sk), ("L", l, &sl)] {
        let check = format!("scat {name} <= wscat {name}");
        if x.is_connected() && x.num_vertices() <= WSCAT_VERTEX_LIMIT {
            let base = x.labels()[0].clone();
            let (lo, hi, _) = wscat(x, &base, 1, opts.budget)?;
            report.push(check, Interval::of(sx), Interval { lo, hi });
        } else {
            report.skip(check);
        }
        let core = x.core().complex;
        report.push(
            format!("scat {name} < vertices(core {name})"),
            Interval::of(sx).map(|v| v + 1),
            Interval::exact(core.num_vertices()),
        );
        report.push(
            format!("scat {name} < facets(core {name})"),
            Interval::of(sx).map(|v| v + 1),
            Interval::exact(core.num_facets()),
        );
    }
    Ok(report)
}
