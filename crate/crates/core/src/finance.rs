//! Capital-budgeting kernel: NPV, IRR root-finding, payback and the
//! prototype-to-production price rule.

use crate::error::{Error, Result};

/// Total estimated cost of the system prototype, USD.
pub const PROTOTYPE_TOTAL_COST: f64 = 6_733_070.0;
/// Adopted series-production unit price, USD.
pub const PRODUCTION_UNIT_PRICE: f64 = 1_000_000.0;

/// An initial outlay followed by annual net flows for years 1..=n.
#[derive(Debug, Clone, PartialEq)]
pub struct CashFlowSeries {
    investment: f64,
    flows: Vec<f64>,
}

impl CashFlowSeries {
    pub fn new(investment: f64, flows: Vec<f64>) -> Result<Self> {
        if investment < 0.0 {
            return Err(Error::Domain(
                "investment is a positive magnitude; it is subtracted at t=0".into(),
            ));
        }
        if flows.is_empty() {
            return Err(Error::Domain("a cash-flow series needs at least one year".into()));
        }
        Ok(Self { investment, flows })
    }

    /// A constant annual flow over `years` years.
    pub fn constant(investment: f64, flow: f64, years: u32) -> Result<Self> {
        Self::new(investment, vec![flow; years.max(1) as usize])
    }

    pub fn investment(&self) -> f64 {
        self.investment
    }

    pub fn flows(&self) -> &[f64] {
        &self.flows
    }

    fn sign_changes(&self) -> usize {
        let mut count = 0;
        let mut last = -self.investment;
        for &f in &self.flows {
            if f == 0.0 {
                continue;
            }
            if last != 0.0 && (last < 0.0) != (f < 0.0) {
                count += 1;
            }
            last = f;
        }
        count
    }
}

/// Payback accumulation policy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PaybackMode {
    /// Plain cumulative flows; matches the published payback of 2 for the
    /// strongest rows.
    #[default]
    Undiscounted,
    /// Flows discounted at the MARR before accumulating.
    Discounted,
}

impl PaybackMode {
    pub fn label(&self) -> &'static str {
        match self {
            PaybackMode::Undiscounted => "undiscounted",
            PaybackMode::Discounted => "discounted",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "undiscounted" => Ok(PaybackMode::Undiscounted),
            "discounted" => Ok(PaybackMode::Discounted),
            other => Err(Error::Config(format!(
                "unknown payback_mode '{other}' (expected undiscounted or discounted)"
            ))),
        }
    }
}

/// Hurdle rate and horizon of the appraisal.
#[derive(Debug, Clone, PartialEq)]
pub struct FinanceParams {
    /// Minimum attractive rate of return per year.
    pub marr: f64,
    pub horizon_years: u32,
    pub max_payback_years: u32,
    pub payback_mode: PaybackMode,
}

impl Default for FinanceParams {
    fn default() -> Self {
        Self {
            marr: 0.18,
            horizon_years: 15,
            max_payback_years: 5,
            payback_mode: PaybackMode::Undiscounted,
        }
    }
}

impl FinanceParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.marr > -1.0) {
            return Err(Error::Config("marr must exceed -100%".into()));
        }
        if self.horizon_years < 1 {
            return Err(Error::Config("horizon_years must be at least 1".into()));
        }
        Ok(())
    }
}

fn npv_unchecked(series: &CashFlowSeries, rate: f64) -> f64 {
    let mut acc = -series.investment;
    let mut discount = 1.0;
    for &flow in &series.flows {
        discount *= 1.0 + rate;
        acc += flow / discount;
    }
    acc
}

/// Net present value: `-I + sum(FC_t / (1+rate)^t)` for t = 1..=n.
pub fn npv(series: &CashFlowSeries, rate: f64) -> Result<f64> {
    if rate <= -1.0 {
        return Err(Error::Domain(format!(
            "discount rate must exceed -100%, got {rate}"
        )));
    }
    Ok(npv_unchecked(series, rate))
}

/// Search bracket for the internal rate of return.
pub const IRR_BRACKET: (f64, f64) = (-0.999, 10.0);

/// Outcome of the IRR search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrrResult {
    /// Root of the NPV function inside the bracket, if any. With several
    /// roots the one nearest zero is reported.
    pub rate: Option<f64>,
    /// True when the series changes sign more than once, so the root need
    /// not be unique.
    pub non_conventional: bool,
}

/// Internal rate of return: the discount rate zeroing NPV.
///
/// Absence of a root (no sign change, or no crossing inside the bracket) is
/// a value, not an error.
pub fn irr(series: &CashFlowSeries) -> Option<f64> {
    irr_detailed(series).rate
}

pub fn irr_detailed(series: &CashFlowSeries) -> IrrResult {
    let changes = series.sign_changes();
    let non_conventional = changes > 1;
    if changes == 0 {
        return IrrResult { rate: None, non_conventional };
    }

    let (lo, hi) = IRR_BRACKET;
    let steps = 4400usize;
    let f = |r: f64| npv_unchecked(series, r);
    let mut roots: Vec<f64> = Vec::new();
    let mut prev_r = lo;
    let mut prev_v = f(lo);
    for i in 1..=steps {
        let r = lo + (hi - lo) * i as f64 / steps as f64;
        let v = f(r);
        if prev_v == 0.0 {
            roots.push(prev_r);
        } else if prev_v * v < 0.0 {
            roots.push(bisect(&f, prev_r, r));
        }
        prev_r = r;
        prev_v = v;
    }
    if prev_v == 0.0 {
        roots.push(prev_r);
    }

    let rate = roots
        .into_iter()
        .min_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    IrrResult { rate, non_conventional }
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return mid;
        }
        if (flo < 0.0) == (fmid < 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// First year at which cumulative (optionally discounted) flows recover the
/// investment; `None` when the horizon never recovers it.
pub fn payback(series: &CashFlowSeries, params: &FinanceParams) -> Option<u32> {
    let tol = 1e-9 * series.investment.max(1.0);
    let mut cumulative = 0.0;
    let mut discount = 1.0;
    for (t, &flow) in series.flows.iter().enumerate() {
        discount *= 1.0 + params.marr;
        cumulative += match params.payback_mode {
            PaybackMode::Undiscounted => flow,
            PaybackMode::Discounted => flow / discount,
        };
        if cumulative >= series.investment - tol {
            return Some(t as u32 + 1);
        }
    }
    None
}

/// Series-production unit price from a prototype cost, using the
/// prototype-costs-5-to-6-times-production rule.
pub fn production_price(prototype_cost: f64, divisor: f64) -> Result<f64> {
    if !(5.0..=6.0).contains(&divisor) {
        return Err(Error::Domain(format!(
            "prototype-to-production divisor must lie in [5, 6], got {divisor}"
        )));
    }
    Ok(prototype_cost / divisor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn npv_of_nothing_is_zero() {
        let s = CashFlowSeries::new(0.0, vec![0.0, 0.0]).unwrap();
        assert_eq!(npv(&s, 0.10).unwrap(), 0.0);
    }

    #[test]
    fn npv_two_term_example() {
        let s = CashFlowSeries::new(100.0, vec![60.0, 60.0]).unwrap();
        let v = npv(&s, 0.10).unwrap();
        assert!((v - 4.132231404958674).abs() < 1e-9);
        assert!((v - 4.13).abs() < 0.01);
    }

    #[test]
    fn npv_at_zero_rate_is_plain_sum() {
        let s = CashFlowSeries::new(250.0, vec![100.0, -40.0, 75.5]).unwrap();
        assert_eq!(npv(&s, 0.0).unwrap(), 100.0 - 40.0 + 75.5 - 250.0);
    }

    #[test]
    fn npv_rejects_rates_at_or_below_minus_one() {
        let s = CashFlowSeries::new(100.0, vec![60.0]).unwrap();
        assert!(matches!(npv(&s, -1.0), Err(Error::Domain(_))));
        assert!(matches!(npv(&s, -2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn npv_published_ch53_cedar_row() {
        let s = CashFlowSeries::constant(88_094_340.0, 7_680_400.0 - 27_597_600.0, 15).unwrap();
        let v = npv(&s, 0.18).unwrap();
        assert!((v - (-190.31e6)).abs() <= 0.01 * 190.31e6, "{v}");
    }

    #[test]
    fn irr_single_period_identity() {
        let s = CashFlowSeries::new(100.0, vec![110.0]).unwrap();
        let r = irr(&s).unwrap();
        assert!((r - 0.10).abs() < 1e-9, "{r}");
    }

    #[test]
    fn irr_published_rows() {
        // oracle values from bisection on the constant-annuity equation
        let s = CashFlowSeries::constant(11_094_340.0, 3_623_620.0, 15).unwrap();
        let r = irr(&s).unwrap();
        assert!((r - 0.3216373379984).abs() < 1e-9, "{r}");
        assert!((r - 0.32).abs() <= 0.02);

        let s = CashFlowSeries::constant(11_094_340.0, 10_848_500.0, 15).unwrap();
        let r = irr(&s).unwrap();
        assert!((r - 0.9778056743233).abs() < 1e-9, "{r}");
        assert!((r - 0.97).abs() <= 0.02);
    }

    #[test]
    fn irr_none_without_sign_change() {
        let s = CashFlowSeries::constant(10.0, -5.0, 15).unwrap();
        let out = irr_detailed(&s);
        assert_eq!(out.rate, None);
        assert!(!out.non_conventional);
        let s = CashFlowSeries::constant(0.0, 5.0, 3).unwrap();
        assert_eq!(irr(&s), None);
    }

    #[test]
    fn irr_flags_non_conventional_series() {
        // two sign changes, roots at 25% and 400%; the one nearest zero wins
        let s = CashFlowSeries::new(4000.0, vec![25_000.0, -25_000.0]).unwrap();
        let out = irr_detailed(&s);
        assert!(out.non_conventional);
        let r = out.rate.unwrap();
        assert!((r - 0.25).abs() < 1e-9, "{r}");
        assert!(npv(&s, r).unwrap().abs() < 1e-6 * 4000.0);
    }

    #[test]
    fn irr_negative_rates_found() {
        // recovers less than invested: the root lies below zero
        let s = CashFlowSeries::constant(40_094_340.0, 2_316_400.0, 15).unwrap();
        let r = irr(&s).unwrap();
        assert!(r < 0.0 && r > -0.1, "{r}");
    }

    #[test]
    fn payback_examples() {
        let p = FinanceParams::default();
        let s = CashFlowSeries::new(100.0, vec![60.0, 60.0]).unwrap();
        assert_eq!(payback(&s, &p), Some(2));
        let s = CashFlowSeries::constant(11_094_340.0, 10_848_500.0, 15).unwrap();
        assert_eq!(payback(&s, &p), Some(2));
        let s = CashFlowSeries::new(1000.0, vec![10.0, 10.0]).unwrap();
        assert_eq!(payback(&s, &p), None);
    }

    #[test]
    fn payback_exact_crossing_counts() {
        let p = FinanceParams::default();
        let s = CashFlowSeries::new(120.0, vec![60.0, 60.0]).unwrap();
        assert_eq!(payback(&s, &p), Some(2));
    }

    #[test]
    fn discounted_payback_is_later() {
        let p = FinanceParams { payback_mode: PaybackMode::Discounted, ..Default::default() };
        let s = CashFlowSeries::constant(100.0, 40.0, 15).unwrap();
        assert_eq!(payback(&s, &FinanceParams::default()), Some(3));
        assert_eq!(payback(&s, &p), Some(4));
    }

    #[test]
    fn production_price_rule() {
        let p = production_price(PROTOTYPE_TOTAL_COST, 5.5).unwrap();
        assert!((p - 1_224_194.5454545454).abs() < 1e-6);
        let p = production_price(PROTOTYPE_TOTAL_COST, 6.0).unwrap();
        assert!((p - 1_122_178.3333333333).abs() < 1e-6);
        let p = production_price(PROTOTYPE_TOTAL_COST, 5.0).unwrap();
        assert_eq!(p, 1_346_614.0);
        assert!(matches!(production_price(PROTOTYPE_TOTAL_COST, 4.9), Err(Error::Domain(_))));
        assert!(matches!(production_price(PROTOTYPE_TOTAL_COST, 6.1), Err(Error::Domain(_))));
    }

    proptest! {
        #[test]
        fn irr_zeroes_npv(inv in 1.0f64..1e8, flow in 1.0f64..1e7, years in 1u32..25) {
            let s = CashFlowSeries::constant(inv, flow, years).unwrap();
            if let Some(r) = irr(&s) {
                let residual = npv(&s, r).unwrap().abs();
                prop_assert!(residual <= 1e-6 * inv.max(1.0), "residual {residual}");
            }
        }

        #[test]
        fn npv_decreasing_in_rate_for_positive_flows(
            inv in 0.0f64..1e6,
            flow in 1.0f64..1e6,
            years in 1u32..30,
            r1 in -0.9f64..9.0,
            gap in 0.001f64..1.0,
        ) {
            let s = CashFlowSeries::constant(inv, flow, years).unwrap();
            let v1 = npv(&s, r1).unwrap();
            let v2 = npv(&s, r1 + gap).unwrap();
            prop_assert!(v2 < v1);
        }

        #[test]
        fn scale_invariance(
            inv in 1.0f64..1e6,
            flow in 1.0f64..1e6,
            years in 1u32..20,
            scale in 0.001f64..1000.0,
            rate in -0.5f64..2.0,
        ) {
            let s = CashFlowSeries::constant(inv, flow, years).unwrap();
            let scaled = CashFlowSeries::constant(inv * scale, flow * scale, years).unwrap();
            let p = FinanceParams::default();
            prop_assert_eq!(payback(&s, &p), payback(&scaled, &p));
            match (irr(&s), irr(&scaled)) {
                (Some(a), Some(b)) => prop_assert!((a - b).abs() < 1e-9),
                (a, b) => prop_assert_eq!(a, b),
            }
            let v = npv(&s, rate).unwrap();
            let vs = npv(&scaled, rate).unwrap();
            prop_assert!((vs - v * scale).abs() <= (v * scale).abs() * 1e-9 + 1e-9);
        }
    }
}
