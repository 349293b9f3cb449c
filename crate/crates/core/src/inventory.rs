//! Harvest-area inventory and the multi-module rotation plan.
//!
//! Tree counts come from the stand frequency times the fraction of stems in
//! the harvested diameter band. The published analysis reads that fraction
//! (12.5%) off a lognormal density plot; the statistically consistent
//! complementary-CDF tail is offered side by side.

use crate::error::{Error, Result};
use crate::species::SpeciesSpec;

/// A circular harvest area inside the reserve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarvestArea {
    pub radius_km: f64,
    pub area_ha: f64,
    pub reserve_total_ha: f64,
}

/// Total reserve area, hectares.
pub const RESERVE_TOTAL_HA: f64 = 647_610.0;

impl HarvestArea {
    pub fn circle(radius_km: f64) -> Result<Self> {
        Ok(Self {
            radius_km,
            area_ha: circle_area_ha(radius_km)?,
            reserve_total_ha: RESERVE_TOTAL_HA,
        })
    }

    pub fn with_reserve(radius_km: f64, reserve_total_ha: f64) -> Result<Self> {
        if !(reserve_total_ha > 0.0) {
            return Err(Error::Domain("reserve area must be positive".into()));
        }
        Ok(Self { reserve_total_ha, ..Self::circle(radius_km)? })
    }
}

/// Area of a circle of the given radius, in hectares.
pub fn circle_area_ha(radius_km: f64) -> Result<f64> {
    if !(radius_km > 0.0) {
        return Err(Error::Domain(format!("radius must be positive, got {radius_km}")));
    }
    Ok(std::f64::consts::PI * radius_km * radius_km * 100.0)
}

/// How the harvested-diameter fraction is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailMode {
    /// The published fixed fraction (a density read at the threshold).
    #[default]
    PaperFixed,
    /// Complementary CDF of the lognormal at the threshold factor.
    LognormalCdf,
}

impl TailMode {
    pub fn label(&self) -> &'static str {
        match self {
            TailMode::PaperFixed => "paper_fixed",
            TailMode::LognormalCdf => "lognormal_cdf",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "paper_fixed" => Ok(TailMode::PaperFixed),
            "lognormal_cdf" => Ok(TailMode::LognormalCdf),
            other => Err(Error::Config(format!(
                "unknown tail_mode '{other}' (expected paper_fixed or lognormal_cdf)"
            ))),
        }
    }
}

/// Lognormal model of the dimensionless DBH factor.
#[derive(Debug, Clone, PartialEq)]
pub struct DbhDistribution {
    pub sigma: f64,
    pub mu: f64,
    pub tail_mode: TailMode,
    /// Fraction used in fixed-fraction mode.
    pub paper_tail: f64,
    /// Dimensionless DBH factor marking the harvested band.
    pub threshold_factor: f64,
}

impl Default for DbhDistribution {
    fn default() -> Self {
        Self {
            sigma: 0.5,
            mu: 0.0,
            tail_mode: TailMode::PaperFixed,
            paper_tail: 0.125,
            threshold_factor: 2.0,
        }
    }
}

impl DbhDistribution {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma > 0.0) {
            return Err(Error::Config("distribution sigma must be positive".into()));
        }
        if !(self.paper_tail > 0.0 && self.paper_tail < 1.0) {
            return Err(Error::Config("paper_tail must lie in (0, 1)".into()));
        }
        if !(self.threshold_factor > 0.0) {
            return Err(Error::Config("threshold_factor must be positive".into()));
        }
        Ok(())
    }

    fn with_mode(&self, tail_mode: TailMode) -> Self {
        Self { tail_mode, ..self.clone() }
    }
}

/// Fraction of stems in the harvested diameter band.
pub fn lognormal_tail(dist: &DbhDistribution) -> f64 {
    match dist.tail_mode {
        TailMode::PaperFixed => dist.paper_tail,
        TailMode::LognormalCdf => {
            let z = (dist.threshold_factor.ln() - dist.mu) / dist.sigma;
            0.5 * libm::erfc(z / std::f64::consts::SQRT_2)
        }
    }
}

/// Harvestable stems of one species inside the area.
pub fn harvestable_count(area: &HarvestArea, species: &SpeciesSpec, dist: &DbhDistribution) -> u64 {
    (area.area_ha * species.trees_per_ha * lognormal_tail(dist) + 1e-9).floor() as u64
}

/// Days to fly out `count` stems at one stem per ride, rounded to the
/// nearest whole day.
pub fn harvest_duration_days(count: u64, rides_per_day: u32) -> Result<u64> {
    if count == 0 {
        return Ok(0);
    }
    if rides_per_day == 0 {
        return Err(Error::Domain(
            "zero rides per day cannot complete a harvest".into(),
        ));
    }
    Ok((count as f64 / rides_per_day as f64 + 0.5).floor() as u64)
}

/// Module count and return cycle of the reserve rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationPlan {
    pub module_count: u64,
    pub return_cycle_years: u64,
}

/// Splits the reserve into harvest modules and derives the return cycle.
pub fn rotation_plan(
    reserve_ha: f64,
    module_area_ha: f64,
    module_years: u64,
) -> Result<RotationPlan> {
    if !(module_area_ha > 0.0) || module_area_ha > reserve_ha {
        return Err(Error::Domain(format!(
            "module area must be positive and no larger than the reserve ({module_area_ha} vs {reserve_ha} ha)"
        )));
    }
    let module_count = (reserve_ha / module_area_ha).floor() as u64;
    Ok(RotationPlan { module_count, return_cycle_years: module_count * module_years })
}

/// Years to harvest one module: total days over 365, and its nearest-integer
/// rounding used by the rotation plan.
pub fn module_years_from_days(total_days: u64) -> (f64, u64) {
    let exact = total_days as f64 / 365.0;
    (exact, (exact + 0.5).floor() as u64)
}

/// Per-species inventory line.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesInventory {
    pub species_id: String,
    pub count_fixed_tail: u64,
    pub count_cdf_tail: u64,
    /// Days at one tree per ride, from the fixed-fraction count.
    pub duration_days: u64,
}

/// Inventory of the harvest area with both tail modes side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct InventoryReport {
    pub area: HarvestArea,
    pub rides_per_day: u32,
    pub tail_fixed: f64,
    pub tail_cdf: f64,
    pub rows: Vec<SpeciesInventory>,
    pub total_duration_days: u64,
    pub module_years_exact: f64,
    pub module_years: u64,
    pub plan: RotationPlan,
}

/// Builds the inventory and rotation report for a species registry.
pub fn inventory_report(
    area: &HarvestArea,
    species: &[SpeciesSpec],
    dist: &DbhDistribution,
    rides_per_day: u32,
) -> Result<InventoryReport> {
    let fixed = dist.with_mode(TailMode::PaperFixed);
    let cdf = dist.with_mode(TailMode::LognormalCdf);
    let mut rows = Vec::with_capacity(species.len());
    let mut total_days = 0u64;
    for sp in species {
        let count_fixed = harvestable_count(area, sp, &fixed);
        let count_cdf = harvestable_count(area, sp, &cdf);
        let planned = match dist.tail_mode {
            TailMode::PaperFixed => count_fixed,
            TailMode::LognormalCdf => count_cdf,
        };
        let duration = harvest_duration_days(planned, rides_per_day)?;
        total_days += duration;
        rows.push(SpeciesInventory {
            species_id: sp.id.clone(),
            count_fixed_tail: count_fixed,
            count_cdf_tail: count_cdf,
            duration_days: duration,
        });
    }
    let (exact, years) = module_years_from_days(total_days);
    let plan = rotation_plan(area.reserve_total_ha, area.area_ha, years)?;
    Ok(InventoryReport {
        area: *area,
        rides_per_day,
        tail_fixed: lognormal_tail(&fixed),
        tail_cdf: lognormal_tail(&cdf),
        rows,
        total_duration_days: total_days,
        module_years_exact: exact,
        module_years: years,
        plan,
    })
}
