//! Run configuration: a flat, sectioned, human-readable key-value file.
//!
//! Grammar: `[section]` headers followed by `key = value` lines; `#` starts
//! a comment line; blank lines are ignored. Sections are `[species.<id>]`,
//! `[helicopter.<id>]`, `[envelope]`, `[finance]`, `[sawmill]`,
//! `[distribution]`, `[grid]` and `[output]`. Unknown sections or keys are
//! rejected. Every value defaults to the published study setup, so an empty
//! config reproduces it exactly.

use crate::error::{Error, Result};
use crate::finance::{FinanceParams, PaybackMode, PRODUCTION_UNIT_PRICE};
use crate::fleet::{EnvelopeParams, HelicopterSpec, RideRounding};
use crate::inventory::{DbhDistribution, HarvestArea, TailMode, RESERVE_TOTAL_HA};
use crate::payload::SawmillSpec;
use crate::scenario::{DimsPreset, EvalContext, Grid};
use crate::species::SpeciesSpec;

/// Rendering target for emitted rows and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Markdown,
}

impl OutputFormat {
    pub fn label(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            other => Err(Error::Config(format!(
                "unknown output format '{other}' (expected csv or markdown)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputConfig {
    pub format: OutputFormat,
    /// Directory the table bundle is written into.
    pub dir: String,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self { format: OutputFormat::Csv, dir: "tables-out".into() }
    }
}

/// Effective configuration of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub species: Vec<SpeciesSpec>,
    pub helicopters: Vec<HelicopterSpec>,
    pub envelope: EnvelopeParams,
    pub finance: FinanceParams,
    pub sawmill: SawmillSpec,
    pub distribution: DbhDistribution,
    /// Radius of the circular harvest area, km.
    pub radius_km: f64,
    pub reserve_total_ha: f64,
    /// Price of one production harvesting system, USD.
    pub uriel_unit_price: f64,
    pub grid: Grid,
    pub output: OutputConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            species: crate::species::builtin_species(),
            helicopters: crate::fleet::builtin_catalog(),
            envelope: EnvelopeParams::default(),
            finance: FinanceParams::default(),
            sawmill: SawmillSpec::default(),
            distribution: DbhDistribution::default(),
            radius_km: 10.0,
            reserve_total_ha: RESERVE_TOTAL_HA,
            uriel_unit_price: PRODUCTION_UNIT_PRICE,
            grid: default_grid(),
            output: OutputConfig::default(),
        }
    }
}

/// Default sweep grid: every catalog airframe and condition over both
/// dimension presets at 10, 50 and 100 km.
pub fn default_grid() -> Grid {
    Grid {
        helicopters: vec![
            ("CH47".into(), "new".into()),
            ("CH47".into(), "used-new".into()),
            ("CH47".into(), "used-old".into()),
            ("CH53".into(), "new".into()),
            ("MI26".into(), "new".into()),
        ],
        species: vec!["cedar".into(), "ipe".into(), "jatoba".into()],
        dims: vec![DimsPreset::Scenario1, DimsPreset::Scenario2],
        distances_km: vec![10.0, 50.0, 100.0],
    }
}

impl RunConfig {
    pub fn context(&self) -> EvalContext {
        EvalContext {
            species: self.species.clone(),
            helicopters: self.helicopters.clone(),
            envelope: self.envelope.clone(),
            finance: self.finance.clone(),
            sawmill: self.sawmill.clone(),
            uriel_unit_price: self.uriel_unit_price,
            mode: Default::default(),
        }
    }

    pub fn harvest_area(&self) -> Result<HarvestArea> {
        HarvestArea::with_reserve(self.radius_km, self.reserve_total_ha)
    }

    pub fn validate(&self) -> Result<()> {
        for s in &self.species {
            s.validate()?;
        }
        for h in &self.helicopters {
            h.validate(self.envelope.uriel_mass_kg)?;
        }
        self.envelope.validate()?;
        self.finance.validate()?;
        self.sawmill.validate()?;
        self.distribution.validate()?;
        if !(self.radius_km > 0.0) {
            return Err(Error::Config("distribution radius_km must be positive".into()));
        }
        if !(self.reserve_total_ha > 0.0) {
            return Err(Error::Config("reserve_total_ha must be positive".into()));
        }
        if self.uriel_unit_price < 0.0 {
            return Err(Error::Config("uriel_unit_price must be non-negative".into()));
        }
        // grid references must resolve; a bad condition label is a config
        // error, never a silent default
        for (heli, condition) in &self.grid.helicopters {
            let spec = self
                .helicopters
                .iter()
                .find(|h| &h.id == heli)
                .ok_or_else(|| Error::Config(format!("grid references unknown helicopter '{heli}'")))?;
            spec.price(condition)?;
        }
        for sp in &self.grid.species {
            if !self.species.iter().any(|s| &s.id == sp) {
                return Err(Error::Config(format!("grid references unknown species '{sp}'")));
            }
        }
        Ok(())
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    value: &'a str,
}

fn fail(line: usize, msg: impl AsRef<str>) -> Error {
    Error::Config(format!("line {line}: {}", msg.as_ref()))
}

fn parse_f64(l: &Line) -> Result<f64> {
    l.value
        .parse::<f64>()
        .map_err(|_| fail(l.no, format!("cannot parse '{}' as a number for {}", l.value, l.key)))
}

fn parse_u32(l: &Line) -> Result<u32> {
    l.value
        .parse::<u32>()
        .map_err(|_| fail(l.no, format!("cannot parse '{}' as an integer for {}", l.value, l.key)))
}

fn split_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

/// Parses a config file on top of the built-in defaults and validates the
/// result.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut section: Option<(String, usize)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| fail(no, "unterminated section header"))?
                .trim();
            if name.is_empty() {
                return Err(fail(no, "empty section name"));
            }
            validate_section_name(name, no)?;
            section = Some((name.to_string(), no));
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| fail(no, format!("expected 'key = value', got '{line}'")))?;
        let l = Line { no, key: key.trim(), value: value.trim() };
        let (section_name, _) = section
            .as_ref()
            .ok_or_else(|| fail(no, "key outside of any [section]"))?;
        apply_key(&mut cfg, section_name, &l)?;
    }

    cfg.validate()?;
    Ok(cfg)
}

fn validate_section_name(name: &str, no: usize) -> Result<()> {
    let known = matches!(
        name,
        "envelope" | "finance" | "sawmill" | "distribution" | "grid" | "output"
    ) || name.strip_prefix("species.").is_some_and(|id| !id.is_empty())
        || name.strip_prefix("helicopter.").is_some_and(|id| !id.is_empty());
    if known {
        Ok(())
    } else {
        Err(fail(no, format!("unknown section [{name}]")))
    }
}

fn apply_key(cfg: &mut RunConfig, section: &str, l: &Line) -> Result<()> {
    if let Some(id) = section.strip_prefix("species.") {
        return apply_species_key(cfg, id, l);
    }
    if let Some(id) = section.strip_prefix("helicopter.") {
        return apply_helicopter_key(cfg, id, l);
    }
    match section {
        "envelope" => apply_envelope_key(cfg, l),
        "finance" => apply_finance_key(cfg, l),
        "sawmill" => apply_sawmill_key(cfg, l),
        "distribution" => apply_distribution_key(cfg, l),
        "grid" => apply_grid_key(cfg, l),
        "output" => apply_output_key(cfg, l),
        other => Err(fail(l.no, format!("unknown section [{other}]"))),
    }
}

fn apply_species_key(cfg: &mut RunConfig, id: &str, l: &Line) -> Result<()> {
    if !cfg.species.iter().any(|s| s.id == id) {
        // new species start from a template that fails validation unless
        // every model field is supplied
        cfg.species.push(SpeciesSpec {
            id: id.to_string(),
            name: id.to_string(),
            beta0: f64::NAN,
            beta1: f64::NAN,
            beta2: f64::NAN,
            specific_gravity_15: f64::NAN,
            green_moisture_pct: f64::NAN,
            price_per_m3: f64::NAN,
            trees_per_ha: f64::NAN,
        });
    }
    let sp = cfg.species.iter_mut().find(|s| s.id == id).unwrap();
    match l.key {
        "name" => sp.name = l.value.to_string(),
        "beta0" => sp.beta0 = parse_f64(l)?,
        "beta1" => sp.beta1 = parse_f64(l)?,
        "beta2" => sp.beta2 = parse_f64(l)?,
        "specific_gravity_15" => sp.specific_gravity_15 = parse_f64(l)?,
        "green_moisture_pct" => sp.green_moisture_pct = parse_f64(l)?,
        "price_per_m3" => sp.price_per_m3 = parse_f64(l)?,
        "trees_per_ha" => sp.trees_per_ha = parse_f64(l)?,
        other => return Err(fail(l.no, format!("unknown key '{other}' in [species.{id}]"))),
    }
    Ok(())
}

fn apply_helicopter_key(cfg: &mut RunConfig, id: &str, l: &Line) -> Result<()> {
    if !cfg.helicopters.iter().any(|h| h.id == id) {
        cfg.helicopters.push(HelicopterSpec {
            id: id.to_string(),
            name: id.to_string(),
            payload_kg: f64::NAN,
            mission_radius_km: f64::NAN,
            cruise_kmh: f64::NAN,
            flight_hour_cost: f64::NAN,
            acquisition_prices: Vec::new(),
            section_cap_kg: None,
        });
    }
    let heli = cfg.helicopters.iter_mut().find(|h| h.id == id).unwrap();
    if let Some(condition) = l.key.strip_prefix("price.") {
        let price = parse_f64(l)?;
        match heli.acquisition_prices.iter_mut().find(|(c, _)| c == condition) {
            Some((_, p)) => *p = price,
            None => heli.acquisition_prices.push((condition.to_string(), price)),
        }
        return Ok(());
    }
    match l.key {
        "name" => heli.name = l.value.to_string(),
        "payload_kg" => heli.payload_kg = parse_f64(l)?,
        "mission_radius_km" => heli.mission_radius_km = parse_f64(l)?,
        "cruise_kmh" => heli.cruise_kmh = parse_f64(l)?,
        "flight_hour_cost" => heli.flight_hour_cost = parse_f64(l)?,
        "section_cap_kg" => heli.section_cap_kg = Some(parse_f64(l)?),
        other => return Err(fail(l.no, format!("unknown key '{other}' in [helicopter.{id}]"))),
    }
    Ok(())
}

fn apply_envelope_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "workday_hours" => cfg.envelope.workday_hours = parse_f64(l)?,
        "working_days_per_year" => cfg.envelope.working_days_per_year = parse_f64(l)?,
        "fixed_cycle_min" => cfg.envelope.fixed_cycle_min = parse_f64(l)?,
        "rounding_mode" => {
            cfg.envelope.rounding_mode =
                RideRounding::parse(l.value).map_err(|e| fail(l.no, e.to_string()))?
        }
        "uriel_mass_kg" => cfg.envelope.uriel_mass_kg = parse_f64(l)?,
        other => return Err(fail(l.no, format!("unknown key '{other}' in [envelope]"))),
    }
    Ok(())
}

fn apply_finance_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "marr" => cfg.finance.marr = parse_f64(l)?,
        "horizon_years" => cfg.finance.horizon_years = parse_u32(l)?,
        "max_payback_years" => cfg.finance.max_payback_years = parse_u32(l)?,
        "payback_mode" => {
            cfg.finance.payback_mode =
                PaybackMode::parse(l.value).map_err(|e| fail(l.no, e.to_string()))?
        }
        "uriel_unit_price" => cfg.uriel_unit_price = parse_f64(l)?,
        other => return Err(fail(l.no, format!("unknown key '{other}' in [finance]"))),
    }
    Ok(())
}

fn apply_sawmill_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "capex" => cfg.sawmill.capex = parse_f64(l)?,
        "processing_cost_per_m3" => cfg.sawmill.processing_cost_per_m3 = parse_f64(l)?,
        other => return Err(fail(l.no, format!("unknown key '{other}' in [sawmill]"))),
    }
    Ok(())
}

fn apply_distribution_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "sigma" => cfg.distribution.sigma = parse_f64(l)?,
        "mu" => cfg.distribution.mu = parse_f64(l)?,
        "tail_mode" => {
            cfg.distribution.tail_mode =
                TailMode::parse(l.value).map_err(|e| fail(l.no, e.to_string()))?
        }
        "paper_tail" => cfg.distribution.paper_tail = parse_f64(l)?,
        "threshold_factor" => cfg.distribution.threshold_factor = parse_f64(l)?,
        "radius_km" => cfg.radius_km = parse_f64(l)?,
        "reserve_total_ha" => cfg.reserve_total_ha = parse_f64(l)?,
        other => return Err(fail(l.no, format!("unknown key '{other}' in [distribution]"))),
    }
    Ok(())
}

fn apply_grid_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "helicopters" => {
            let mut pairs = Vec::new();
            for item in split_list(l.value) {
                let (heli, condition) = item.split_once(':').ok_or_else(|| {
                    fail(l.no, format!("grid helicopter '{item}' must be <model>:<condition>"))
                })?;
                pairs.push((heli.trim().to_string(), condition.trim().to_string()));
            }
            cfg.grid.helicopters = pairs;
        }
        "species" => cfg.grid.species = split_list(l.value),
        "scenarios" => {
            let mut dims = Vec::new();
            for item in split_list(l.value) {
                dims.push(DimsPreset::parse(&item).map_err(|e| fail(l.no, e.to_string()))?);
            }
            cfg.grid.dims = dims;
        }
        "distances_km" => {
            let mut out = Vec::new();
            for item in split_list(l.value) {
                out.push(item.parse::<f64>().map_err(|_| {
                    fail(l.no, format!("cannot parse distance '{item}'"))
                })?);
            }
            cfg.grid.distances_km = out;
        }
        other => return Err(fail(l.no, format!("unknown key '{other}' in [grid]"))),
    }
    Ok(())
}

fn apply_output_key(cfg: &mut RunConfig, l: &Line) -> Result<()> {
    match l.key {
        "format" => {
            cfg.output.format = OutputFormat::parse(l.value).map_err(|e| fail(l.no, e.to_string()))?
        }
        "dir" => cfg.output.dir = l.value.to_string(),
        other => return Err(fail(l.no, format!("unknown key '{other}' in [output]"))),
    }
    Ok(())
}

/// Renders the effective configuration in the same grammar `parse_config`
/// reads; the round trip is lossless.
pub fn dump_config(cfg: &RunConfig) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "# heli-feas configuration (effective values)");
    for sp in &cfg.species {
        let _ = writeln!(out);
        let _ = writeln!(out, "[species.{}]", sp.id);
        let _ = writeln!(out, "name = {}", sp.name);
        let _ = writeln!(out, "beta0 = {}", sp.beta0);
        let _ = writeln!(out, "beta1 = {}", sp.beta1);
        let _ = writeln!(out, "beta2 = {}", sp.beta2);
        let _ = writeln!(out, "specific_gravity_15 = {}", sp.specific_gravity_15);
        let _ = writeln!(out, "green_moisture_pct = {}", sp.green_moisture_pct);
        let _ = writeln!(out, "price_per_m3 = {}", sp.price_per_m3);
        let _ = writeln!(out, "trees_per_ha = {}", sp.trees_per_ha);
    }
    for h in &cfg.helicopters {
        let _ = writeln!(out);
        let _ = writeln!(out, "[helicopter.{}]", h.id);
        let _ = writeln!(out, "name = {}", h.name);
        let _ = writeln!(out, "payload_kg = {}", h.payload_kg);
        let _ = writeln!(out, "mission_radius_km = {}", h.mission_radius_km);
        let _ = writeln!(out, "cruise_kmh = {}", h.cruise_kmh);
        let _ = writeln!(out, "flight_hour_cost = {}", h.flight_hour_cost);
        for (condition, price) in &h.acquisition_prices {
            let _ = writeln!(out, "price.{condition} = {price}");
        }
        if let Some(cap) = h.section_cap_kg {
            let _ = writeln!(out, "section_cap_kg = {cap}");
        }
    }
    let e = &cfg.envelope;
    let _ = writeln!(out);
    let _ = writeln!(out, "[envelope]");
    let _ = writeln!(out, "workday_hours = {}", e.workday_hours);
    let _ = writeln!(out, "working_days_per_year = {}", e.working_days_per_year);
    let _ = writeln!(out, "fixed_cycle_min = {}", e.fixed_cycle_min);
    let _ = writeln!(out, "rounding_mode = {}", e.rounding_mode.label());
    let _ = writeln!(out, "uriel_mass_kg = {}", e.uriel_mass_kg);
    let f = &cfg.finance;
    let _ = writeln!(out);
    let _ = writeln!(out, "[finance]");
    let _ = writeln!(out, "marr = {}", f.marr);
    let _ = writeln!(out, "horizon_years = {}", f.horizon_years);
    let _ = writeln!(out, "max_payback_years = {}", f.max_payback_years);
    let _ = writeln!(out, "payback_mode = {}", f.payback_mode.label());
    let _ = writeln!(out, "uriel_unit_price = {}", cfg.uriel_unit_price);
    let _ = writeln!(out);
    let _ = writeln!(out, "[sawmill]");
    let _ = writeln!(out, "capex = {}", cfg.sawmill.capex);
    let _ = writeln!(out, "processing_cost_per_m3 = {}", cfg.sawmill.processing_cost_per_m3);
    let d = &cfg.distribution;
    let _ = writeln!(out);
    let _ = writeln!(out, "[distribution]");
    let _ = writeln!(out, "sigma = {}", d.sigma);
    let _ = writeln!(out, "mu = {}", d.mu);
    let _ = writeln!(out, "tail_mode = {}", d.tail_mode.label());
    let _ = writeln!(out, "paper_tail = {}", d.paper_tail);
    let _ = writeln!(out, "threshold_factor = {}", d.threshold_factor);
    let _ = writeln!(out, "radius_km = {}", cfg.radius_km);
    let _ = writeln!(out, "reserve_total_ha = {}", cfg.reserve_total_ha);
    let g = &cfg.grid;
    let _ = writeln!(out);
    let _ = writeln!(out, "[grid]");
    let helis: Vec<String> =
        g.helicopters.iter().map(|(h, c)| format!("{h}:{c}")).collect();
    let _ = writeln!(out, "helicopters = {}", helis.join(", "));
    let _ = writeln!(out, "species = {}", g.species.join(", "));
    let dims: Vec<String> = g.dims.iter().map(|d| d.label()).collect();
    let _ = writeln!(out, "scenarios = {}", dims.join(", "));
    let distances: Vec<String> = g.distances_km.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "distances_km = {}", distances.join(", "));
    let _ = writeln!(out);
    let _ = writeln!(out, "[output]");
    let _ = writeln!(out, "format = {}", cfg.output.format.label());
    let _ = writeln!(out, "dir = {}", cfg.output.dir);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_is_the_published_setup() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg, RunConfig::default());
    }

    #[test]
    fn dump_round_trips() {
        let cfg = RunConfig::default();
        let dumped = dump_config(&cfg);
        let reparsed = parse_config(&dumped).unwrap();
        assert_eq!(reparsed, cfg);
        assert_eq!(dump_config(&reparsed), dumped);
    }

    #[test]
    fn overrides_merge_over_defaults() {
        let text = "
[species.cedar]
price_per_m3 = 1200

[helicopter.CH47]
section_cap_kg = 10000

[envelope]
fixed_cycle_min = 15

[finance]
marr = 0.12
";
        let cfg = parse_config(text).unwrap();
        let cedar = cfg.species.iter().find(|s| s.id == "cedar").unwrap();
        assert_eq!(cedar.price_per_m3, 1200.0);
        assert_eq!(cedar.beta0, -9.99);
        let ch47 = cfg.helicopters.iter().find(|h| h.id == "CH47").unwrap();
        assert_eq!(ch47.section_cap_kg, Some(10_000.0));
        assert_eq!(cfg.envelope.fixed_cycle_min, 15.0);
        assert_eq!(cfg.finance.marr, 0.12);
    }

    #[test]
    fn new_species_requires_all_fields() {
        let partial = "
[species.mahogany]
price_per_m3 = 3000
";
        assert!(matches!(parse_config(partial), Err(Error::Config(_))));
        let complete = "
[species.mahogany]
name = Mahogany
beta0 = -9.0
beta1 = 2.0
beta2 = 0.8
specific_gravity_15 = 0.6
green_moisture_pct = 90
price_per_m3 = 3000
trees_per_ha = 1
";
        let cfg = parse_config(complete).unwrap();
        assert!(cfg.species.iter().any(|s| s.id == "mahogany"));
    }

    #[test]
    fn unknown_sections_and_keys_rejected() {
        assert!(matches!(parse_config("[bogus]\nx = 1\n"), Err(Error::Config(_))));
        assert!(matches!(parse_config("[envelope]\nbogus = 1\n"), Err(Error::Config(_))));
        assert!(matches!(parse_config("[finance]\nmarr = fast\n"), Err(Error::Config(_))));
        assert!(matches!(parse_config("stray = 1\n"), Err(Error::Config(_))));
        let err = parse_config("[envelope]\nbogus = 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn grid_reference_validation() {
        let bad_condition = "
[grid]
helicopters = CH53:used-old
";
        assert!(matches!(parse_config(bad_condition), Err(Error::Config(_))));
        let bad_species = "
[grid]
species = oak
";
        assert!(matches!(parse_config(bad_species), Err(Error::Config(_))));
    }

    #[test]
    fn empty_grid_lists_parse() {
        let cfg = parse_config("[grid]\ndistances_km =\n").unwrap();
        assert!(cfg.grid.distances_km.is_empty());
        assert!(!cfg.grid.helicopters.is_empty());
    }

    #[test]
    fn custom_dims_in_grid() {
        let cfg = parse_config("[grid]\nscenarios = scenario1, 90x28\n").unwrap();
        assert_eq!(cfg.grid.dims.len(), 2);
        assert_eq!(cfg.grid.dims[1], DimsPreset::Custom { dbh_cm: 90.0, height_m: 28.0 });
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let cfg = parse_config("# top comment\n\n[sawmill]\n# mid comment\ncapex = 100000\n").unwrap();
        assert_eq!(cfg.sawmill.capex, 100_000.0);
    }

    #[test]
    fn invariant_violations_are_config_errors() {
        assert!(parse_config("[species.cedar]\nbeta1 = -1\n").is_err());
        assert!(parse_config("[species.cedar]\ngreen_moisture_pct = 10\n").is_err());
        assert!(parse_config("[helicopter.CH47]\npayload_kg = 1000\n").is_err());
        assert!(parse_config("[finance]\nmarr = -2\n").is_err());
        assert!(parse_config("[distribution]\nsigma = 0\n").is_err());
    }
}
