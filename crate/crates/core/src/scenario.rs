//! Assembles species, helicopter, stem dimensions, distance and finance
//! parameters into feasibility rows, and runs grid sweeps.
//!
//! Cash flows are composed as annual timber revenue minus annual flight
//! cost, constant over the horizon; the investment is the helicopter price
//! plus one production system unit plus the sawmill. Every row carries the
//! `simple-flow-model` flag so consumers know which published NPV cells
//! cannot match (those tables embed cost lines absent from the published
//! inputs).

use crate::error::{Error, Result};
use crate::finance::{irr_detailed, npv, payback, CashFlowSeries, FinanceParams};
use crate::fleet::{annual_flight_cost, EnvelopeParams, HelicopterSpec};
use crate::payload::{annual_revenue_detail, SawmillSpec};
use crate::round::CompatMode;
use crate::species::{SpeciesSpec, StemDims};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Stem-dimension preset named on the command line and in grids.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DimsPreset {
    /// 80 cm DBH, 25 m height.
    Scenario1,
    /// 100 cm DBH, 30 m height.
    Scenario2,
    Custom { dbh_cm: f64, height_m: f64 },
}

impl DimsPreset {
    pub fn dims(&self) -> Result<StemDims> {
        match *self {
            DimsPreset::Scenario1 => Ok(StemDims::scenario1()),
            DimsPreset::Scenario2 => Ok(StemDims::scenario2()),
            DimsPreset::Custom { dbh_cm, height_m } => StemDims::new(dbh_cm, height_m),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            DimsPreset::Scenario1 => "scenario1".into(),
            DimsPreset::Scenario2 => "scenario2".into(),
            DimsPreset::Custom { dbh_cm, height_m } => format!("{dbh_cm}x{height_m}"),
        }
    }

    /// Parses `scenario1`, `scenario2` or `<dbh>x<height>` (e.g. `80x25`).
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "scenario1" => Ok(DimsPreset::Scenario1),
            "scenario2" => Ok(DimsPreset::Scenario2),
            other => {
                let (d, h) = other.split_once('x').ok_or_else(|| {
                    Error::Config(format!(
                        "unknown dims preset '{other}' (expected scenario1, scenario2 or <dbh>x<height>)"
                    ))
                })?;
                let parse = |v: &str| {
                    v.trim().parse::<f64>().map_err(|_| {
                        Error::Config(format!("cannot parse '{v}' as a dimension in '{other}'"))
                    })
                };
                Ok(DimsPreset::Custom { dbh_cm: parse(d)?, height_m: parse(h)? })
            }
        }
    }
}

/// One evaluation request.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub helicopter: String,
    pub condition: String,
    pub species: String,
    pub dims: DimsPreset,
    pub distance_km: f64,
}

/// Shared registries and parameters a scenario is evaluated against.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalContext {
    pub species: Vec<SpeciesSpec>,
    pub helicopters: Vec<HelicopterSpec>,
    pub envelope: EnvelopeParams,
    pub finance: FinanceParams,
    pub sawmill: SawmillSpec,
    /// Price of one production harvesting system, part of the investment.
    pub uriel_unit_price: f64,
    pub mode: CompatMode,
}

impl Default for EvalContext {
    fn default() -> Self {
        Self {
            species: crate::species::builtin_species(),
            helicopters: crate::fleet::builtin_catalog(),
            envelope: EnvelopeParams::default(),
            finance: FinanceParams::default(),
            sawmill: SawmillSpec::default(),
            uriel_unit_price: crate::finance::PRODUCTION_UNIT_PRICE,
            mode: CompatMode::PaperCompat,
        }
    }
}

impl EvalContext {
    pub fn species(&self, id: &str) -> Result<&SpeciesSpec> {
        self.species
            .iter()
            .find(|s| s.id == id)
            .ok_or_else(|| Error::Config(format!("unknown species '{id}'")))
    }

    pub fn helicopter(&self, id: &str) -> Result<&HelicopterSpec> {
        self.helicopters
            .iter()
            .find(|h| h.id == id)
            .ok_or_else(|| Error::Config(format!("unknown helicopter '{id}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Viable,
    NonViable,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Viable => "viable",
            Verdict::NonViable => "non_viable",
        }
    }
}

/// One evaluated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityRow {
    pub scenario: Scenario,
    /// Helicopter price plus one system unit plus sawmill capex, USD.
    pub investment: f64,
    pub annual_revenue: f64,
    pub annual_cost: f64,
    pub npv: f64,
    pub irr: Option<f64>,
    pub payback: Option<u32>,
    pub verdict: Verdict,
    pub flags: Vec<String>,
}

/// Evaluates one scenario into a feasibility row.
pub fn evaluate(ctx: &EvalContext, scenario: &Scenario) -> Result<FeasibilityRow> {
    let species = ctx.species(&scenario.species)?;
    let heli = ctx.helicopter(&scenario.helicopter)?;
    let price = heli.price(&scenario.condition)?;
    let dims = scenario.dims.dims()?;

    let revenue = annual_revenue_detail(
        heli,
        species,
        dims,
        scenario.distance_km,
        &ctx.envelope,
        &ctx.sawmill,
        ctx.mode,
    )?;
    let annual_cost = annual_flight_cost(heli, &ctx.envelope);
    let investment = price + ctx.uriel_unit_price + ctx.sawmill.capex;

    let series = CashFlowSeries::constant(
        investment,
        revenue.annual_revenue - annual_cost,
        ctx.finance.horizon_years,
    )?;
    let npv_at_marr = npv(&series, ctx.finance.marr)?;
    let irr_result = irr_detailed(&series);
    let payback_years = payback(&series, &ctx.finance);

    let verdict = match (irr_result.rate, payback_years) {
        (Some(r), Some(t))
            if r >= ctx.finance.marr - 1e-12 && t <= ctx.finance.max_payback_years =>
        {
            Verdict::Viable
        }
        _ => Verdict::NonViable,
    };

    let mut flags = vec!["simple-flow-model".to_string()];
    if revenue.economics.reduction_factor < 1.0 {
        flags.push("reduction-applied".to_string());
    }
    if irr_result.non_conventional {
        flags.push("non-conventional-flows".to_string());
    }

    Ok(FeasibilityRow {
        scenario: scenario.clone(),
        investment,
        annual_revenue: revenue.annual_revenue,
        annual_cost,
        npv: npv_at_marr,
        irr: irr_result.rate,
        payback: payback_years,
        verdict,
        flags,
    })
}

/// Cartesian sweep grid. Row order is helicopter, species, dims, distance.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Grid {
    /// (helicopter id, condition label) pairs.
    pub helicopters: Vec<(String, String)>,
    pub species: Vec<String>,
    pub dims: Vec<DimsPreset>,
    pub distances_km: Vec<f64>,
}

impl Grid {
    pub fn scenarios(&self) -> Vec<Scenario> {
        let mut out = Vec::with_capacity(
            self.helicopters.len() * self.species.len() * self.dims.len() * self.distances_km.len(),
        );
        for (heli, condition) in &self.helicopters {
            for species in &self.species {
                for dims in &self.dims {
                    for &distance_km in &self.distances_km {
                        out.push(Scenario {
                            helicopter: heli.clone(),
                            condition: condition.clone(),
                            species: species.clone(),
                            dims: *dims,
                            distance_km,
                        });
                    }
                }
            }
        }
        out
    }
}

/// Sweep row: an evaluated scenario, or the error that kept it from
/// evaluating (an out-of-radius target never aborts the sweep).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub scenario: Scenario,
    pub outcome: Result<FeasibilityRow>,
}

fn run_scenario(ctx: &EvalContext, scenario: Scenario) -> SweepRow {
    let outcome = evaluate(ctx, &scenario);
    SweepRow { scenario, outcome }
}

/// Evaluates the grid's cartesian product in deterministic row order.
///
/// With the `parallel` feature rows are evaluated on the rayon pool; order
/// and content are identical to [`sweep_sequential`].
pub fn sweep(ctx: &EvalContext, grid: &Grid) -> Vec<SweepRow> {
    #[cfg(feature = "parallel")]
    {
        grid.scenarios()
            .into_par_iter()
            .map(|s| run_scenario(ctx, s))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_sequential(ctx, grid)
    }
}

/// Single-threaded sweep, always available.
pub fn sweep_sequential(ctx: &EvalContext, grid: &Grid) -> Vec<SweepRow> {
    grid.scenarios()
        .into_iter()
        .map(|s| run_scenario(ctx, s))
        .collect()
}
