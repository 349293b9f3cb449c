//! Species registry and the stem-cubing and green-density models.
//!
//! Stem volume follows the log-linear allometric form
//! `ln V = b0 + b1 ln(dbh) + b2 ln(h)` with per-species coefficients; the
//! error term of the fitted model is taken as zero. Green density converts
//! basic specific gravity at 15% moisture into as-lifted mass per cubic
//! metre, valid for moisture contents of 30% and above.

use crate::error::{Error, Result};
use crate::round::{trunc_dp, CompatMode};

/// Allometric coefficients and economic parameters for one timber species.
#[derive(Debug, Clone, PartialEq)]
pub struct SpeciesSpec {
    /// Registry key, lower-case ASCII (`cedar`, `ipe`, `jatoba`, ...).
    pub id: String,
    /// Name as printed in reports.
    pub name: String,
    /// Intercept of the log-linear cubing model.
    pub beta0: f64,
    /// Diameter exponent, must be positive.
    pub beta1: f64,
    /// Height exponent, must be positive.
    pub beta2: f64,
    /// Specific gravity at 15% moisture, g/cm3.
    pub specific_gravity_15: f64,
    /// Green moisture content, percent on a dry-mass basis.
    pub green_moisture_pct: f64,
    /// Market price of sawn timber, USD per m3.
    pub price_per_m3: f64,
    /// Average stand frequency, trees per hectare.
    pub trees_per_ha: f64,
}

impl SpeciesSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.beta1 > 0.0) || !(self.beta2 > 0.0) {
            return Err(Error::Config(format!(
                "species {}: beta1 and beta2 must be positive (volume must grow with size)",
                self.id
            )));
        }
        if !(self.specific_gravity_15 > 0.0 && self.specific_gravity_15 < 1.5) {
            return Err(Error::Config(format!(
                "species {}: specific_gravity_15 must lie in (0, 1.5)",
                self.id
            )));
        }
        if !(self.green_moisture_pct >= 30.0) {
            return Err(Error::Config(format!(
                "species {}: green_moisture_pct must be >= 30 (density relation validity)",
                self.id
            )));
        }
        if !(self.price_per_m3 > 0.0) {
            return Err(Error::Config(format!(
                "species {}: price_per_m3 must be positive",
                self.id
            )));
        }
        if !(self.trees_per_ha > 0.0) {
            return Err(Error::Config(format!(
                "species {}: trees_per_ha must be positive",
                self.id
            )));
        }
        Ok(())
    }
}

/// Maximum diameter at breast height accepted by the models, cm.
pub const MAX_DBH_CM: f64 = 100.0;
/// Maximum stem height accepted by the models, m.
pub const MAX_HEIGHT_M: f64 = 30.0;

/// Validated stem dimensions: DBH in (0, 100] cm, height in (0, 30] m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StemDims {
    dbh_cm: f64,
    height_m: f64,
}

impl StemDims {
    pub fn new(dbh_cm: f64, height_m: f64) -> Result<Self> {
        if !(dbh_cm > 0.0 && dbh_cm <= MAX_DBH_CM) {
            return Err(Error::Domain(format!(
                "dbh must lie in (0, {MAX_DBH_CM}] cm, got {dbh_cm}"
            )));
        }
        if !(height_m > 0.0 && height_m <= MAX_HEIGHT_M) {
            return Err(Error::Domain(format!(
                "height must lie in (0, {MAX_HEIGHT_M}] m, got {height_m}"
            )));
        }
        Ok(Self { dbh_cm, height_m })
    }

    /// 80 cm DBH, 25 m height.
    pub fn scenario1() -> Self {
        Self { dbh_cm: 80.0, height_m: 25.0 }
    }

    /// 100 cm DBH, 30 m height.
    pub fn scenario2() -> Self {
        Self { dbh_cm: 100.0, height_m: 30.0 }
    }

    pub fn dbh_cm(&self) -> f64 {
        self.dbh_cm
    }

    pub fn height_m(&self) -> f64 {
        self.height_m
    }
}

/// Predicted stem volume in m3.
///
/// Paper-compatible mode truncates to two decimal places; all published
/// figures downstream (mass, money) are computed from the truncated value.
pub fn stem_volume(species: &SpeciesSpec, dims: StemDims, mode: CompatMode) -> f64 {
    let raw = (species.beta0
        + species.beta1 * dims.dbh_cm().ln()
        + species.beta2 * dims.height_m().ln())
    .exp();
    match mode {
        CompatMode::PaperCompat => trunc_dp(raw, 2),
        CompatMode::FullPrecision => raw,
    }
}

/// Green density in kg/m3: `1000 * G * (1 + M/100)`.
///
/// The relation is stated for moisture contents above 30%; lower values are
/// rejected.
pub fn green_density(species: &SpeciesSpec) -> Result<f64> {
    if species.green_moisture_pct < 30.0 {
        return Err(Error::Validity(format!(
            "green density relation requires moisture >= 30%, got {}%",
            species.green_moisture_pct
        )));
    }
    Ok(1000.0 * species.specific_gravity_15 * (1.0 + species.green_moisture_pct / 100.0))
}

/// Green mass of the full stem in kg: volume (per rounding mode) times
/// green density.
pub fn green_mass(species: &SpeciesSpec, dims: StemDims, mode: CompatMode) -> Result<f64> {
    Ok(stem_volume(species, dims, mode) * green_density(species)?)
}

/// The built-in three-species registry.
pub fn builtin_species() -> Vec<SpeciesSpec> {
    vec![
        SpeciesSpec {
            id: "cedar".into(),
            name: "Cedar".into(),
            beta0: -9.99,
            beta1: 2.19,
            beta2: 0.57,
            specific_gravity_15: 0.53,
            green_moisture_pct: 100.0,
            price_per_m3: 1059.0,
            trees_per_ha: 4.0,
        },
        SpeciesSpec {
            id: "ipe".into(),
            name: "Ipe".into(),
            beta0: -9.40,
            beta1: 1.94,
            beta2: 1.01,
            specific_gravity_15: 0.96,
            green_moisture_pct: 100.0,
            price_per_m3: 1446.0,
            trees_per_ha: 3.0,
        },
        SpeciesSpec {
            id: "jatoba".into(),
            name: "Jatoba".into(),
            beta0: -7.21,
            beta1: 1.77,
            beta2: 0.44,
            specific_gravity_15: 0.96,
            green_moisture_pct: 100.0,
            price_per_m3: 868.0,
            trees_per_ha: 3.0,
        },
    ]
}
