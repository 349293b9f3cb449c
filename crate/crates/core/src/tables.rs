//! Reproduction of the published feasibility tables and the discrepancy
//! report.
//!
//! Every table the study prints is recomputed from the engine's own
//! pipeline and emitted as CSV. Cells where the engine and the published
//! figure differ beyond tolerance land in the discrepancy report, each
//! annotated with the conflict that explains it. The published figures are
//! embedded here as comparison data.

use crate::config::RunConfig;
use crate::error::Result;
use crate::fleet::{annual_flight_cost, rides_per_day, round_trip_minutes, usable_payload};
use crate::payload::{per_ride_billing, section_cap_mass, LogEconomics};
use crate::render::{fmt_irr, fmt_num, fmt_usd};
use crate::round::trunc_dp;
use crate::scenario::{evaluate, DimsPreset, EvalContext, Scenario, Verdict};
use crate::species::{green_density, stem_volume, StemDims};

/// Tolerance for flight minutes and raw rides per day.
pub const ENVELOPE_TOL: f64 = 0.01;
/// Tolerance for per-ride money cells, USD.
pub const MONEY_TOL: f64 = 0.25;
/// Tolerance for reduction factors.
pub const REDUCTION_TOL: f64 = 0.001;
/// Relative tolerance for published NPV cells.
pub const NPV_REL_TOL: f64 = 0.01;
/// Tolerance for published IRR cells, absolute on the rate.
pub const IRR_TOL: f64 = 0.02;
/// Tolerance for green-mass cells, kg.
pub const MASS_TOL: f64 = 3.0;

/// One cell (or row) where the engine and the published table disagree
/// beyond tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub table: String,
    pub location: String,
    pub published_value: String,
    pub engine_value: String,
    pub note: String,
}

/// The reproduced tables plus everything that did not match.
#[derive(Debug, Clone, PartialEq)]
pub struct TableBundle {
    /// `(file name, content)` pairs, one CSV per reproduced table.
    pub files: Vec<(String, String)>,
    pub discrepancies: Vec<Discrepancy>,
}

impl TableBundle {
    pub fn file(&self, name: &str) -> Option<&str> {
        self.files
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.as_str())
    }
}

mod published {
    //! Published values used as comparison targets.

    /// Table 23: (helicopter, km, flight minutes, raw rides, rounded rides).
    pub const T23: [(&str, f64, f64, f64, u32); 18] = [
        ("CH47", 10.0, 4.12, 19.89, 20),
        ("CH47", 50.0, 20.61, 11.81, 12),
        ("CH47", 100.0, 41.23, 7.83, 8),
        ("CH47", 150.0, 61.85, 5.86, 6),
        ("CH47", 200.0, 82.47, 4.68, 5),
        ("CH47", 300.0, 123.71, 3.34, 3),
        ("CH53", 10.0, 4.44, 19.63, 20),
        ("CH53", 50.0, 22.22, 11.36, 11),
        ("CH53", 100.0, 44.44, 7.44, 7),
        ("CH53", 150.0, 66.66, 5.53, 5),
        ("CH53", 200.0, 88.88, 4.40, 4),
        ("MI26", 10.0, 4.70, 19.42, 19),
        ("MI26", 50.0, 23.52, 11.02, 11),
        ("MI26", 100.0, 47.05, 7.15, 7),
        ("MI26", 150.0, 70.58, 5.29, 5),
        ("MI26", 200.0, 94.11, 4.20, 4),
        ("MI26", 300.0, 141.17, 2.97, 3),
        ("MI26", 400.0, 188.23, 2.30, 2),
    ];

    /// Table 24: (helicopter, payload excl. system kg, day cost, 100-day cost).
    pub const T24: [(&str, f64, f64, f64); 3] = [
        ("CH47", 10_485.0, 53_640.0, 5_364_000.0),
        ("CH53", 14_249.0, 275_976.0, 27_597_600.0),
        ("MI26", 17_920.0, 120_000.0, 12_000_000.0),
    ];

    /// Tables 25/27: (species, m3/log, green kg, sawmill, gross, billing).
    pub const T25: [(&str, f64, f64, f64, f64, f64); 3] = [
        ("cedar", 4.22, 4_473.0, 628.78, 4_468.98, 3_840.20),
        ("ipe", 10.50, 20_160.0, 1_564.50, 15_183.00, 13_618.50),
        ("jatoba", 7.11, 13_651.0, 1_059.39, 6_171.48, 5_112.09),
    ];
    pub const T27: [(&str, f64, f64, f64, f64, f64); 3] = [
        ("cedar", 7.64, 8_098.0, 1_138.36, 8_090.76, 6_952.40),
        ("ipe", 19.47, 37_382.0, 2_901.03, 28_153.62, 25_252.59),
        ("jatoba", 11.44, 21_964.0, 1_704.56, 9_929.92, 8_225.36),
    ];

    /// Tables 26/28: (species, helicopter, factor, sawmill, gross, billing).
    pub const T26: [(&str, &str, f64, f64, f64, f64); 3] = [
        ("ipe", "CH47", 0.595, 931.25, 9_037.50, 8_106.25),
        ("jatoba", "CH47", 0.879, 931.26, 5_425.07, 4_493.81),
        ("ipe", "CH53", 0.793, 1_241.66, 12_050.00, 10_808.33),
    ];
    pub const T28: [(&str, &str, f64, f64, f64, f64); 6] = [
        ("ipe", "CH47", 0.321, 931.25, 9_037.59, 8_106.33),
        ("jatoba", "CH47", 0.546, 931.28, 5_425.19, 4_493.91),
        ("ipe", "CH53", 0.428, 1_241.67, 12_050.12, 10_808.45),
        ("jatoba", "CH53", 0.728, 1_241.71, 7_233.59, 5_991.88),
        ("ipe", "MI26", 0.535, 1_552.09, 15_062.66, 13_510.56),
        ("jatoba", "MI26", 0.910, 1_552.13, 9_041.99, 7_489.85),
    ];

    /// Tables 29/30: (helicopter, km, species, billing/log, trips, revenue).
    pub const T29: [(&str, f64, &str, f64, u32, f64); 27] = [
        ("CH47", 10.0, "cedar", 3_840.20, 20, 7_680_400.0),
        ("CH47", 10.0, "ipe", 8_106.25, 20, 16_212_500.0),
        ("CH47", 10.0, "jatoba", 4_493.81, 20, 8_987_620.0),
        ("CH47", 50.0, "cedar", 3_840.20, 12, 4_608_240.0),
        ("CH47", 50.0, "ipe", 8_106.25, 12, 9_727_500.0),
        ("CH47", 50.0, "jatoba", 4_493.81, 12, 5_392_572.0),
        ("CH47", 100.0, "cedar", 3_840.20, 8, 3_072_160.0),
        ("CH47", 100.0, "ipe", 8_106.25, 8, 6_485_000.0),
        ("CH47", 100.0, "jatoba", 4_493.81, 8, 3_595_048.0),
        ("CH53", 10.0, "cedar", 3_840.20, 20, 7_680_400.0),
        ("CH53", 10.0, "ipe", 8_106.25, 20, 16_212_500.0),
        ("CH53", 10.0, "jatoba", 4_493.81, 20, 8_987_620.0),
        ("CH53", 50.0, "cedar", 3_840.20, 11, 4_224_220.0),
        ("CH53", 50.0, "ipe", 8_106.25, 11, 8_916_875.0),
        ("CH53", 50.0, "jatoba", 4_493.81, 11, 4_943_191.0),
        ("CH53", 100.0, "cedar", 3_840.20, 7, 2_688_140.0),
        ("CH53", 100.0, "ipe", 8_106.25, 7, 5_674_375.0),
        ("CH53", 100.0, "jatoba", 4_493.81, 7, 3_145_667.0),
        ("MI26", 10.0, "cedar", 3_840.20, 19, 7_296_000.0),
        ("MI26", 10.0, "ipe", 8_106.25, 19, 15_401_875.0),
        ("MI26", 10.0, "jatoba", 4_493.81, 19, 8_537_099.0),
        ("MI26", 50.0, "cedar", 3_840.20, 11, 4_224_220.0),
        ("MI26", 50.0, "ipe", 8_106.25, 11, 8_916_875.0),
        ("MI26", 50.0, "jatoba", 4_493.81, 11, 4_943_191.0),
        ("MI26", 100.0, "cedar", 3_840.20, 7, 2_688_140.0),
        ("MI26", 100.0, "ipe", 8_106.25, 7, 5_674_375.0),
        ("MI26", 100.0, "jatoba", 4_493.81, 7, 3_145_667.0),
    ];
    pub const T30: [(&str, f64, &str, f64, u32, f64); 27] = [
        ("CH47", 10.0, "cedar", 6_952.40, 20, 13_904_800.0),
        ("CH47", 10.0, "ipe", 8_106.25, 20, 16_212_500.0),
        ("CH47", 10.0, "jatoba", 4_493.81, 20, 8_987_620.0),
        ("CH47", 50.0, "cedar", 6_952.40, 12, 8_342_880.0),
        ("CH47", 50.0, "ipe", 8_106.25, 12, 16_212_500.0),
        ("CH47", 50.0, "jatoba", 4_493.81, 12, 8_987_620.0),
        ("CH47", 100.0, "cedar", 6_952.40, 8, 5_561_920.0),
        ("CH47", 100.0, "ipe", 8_106.25, 8, 16_212_500.0),
        ("CH47", 100.0, "jatoba", 4_493.81, 8, 8_987_620.0),
        ("CH53", 10.0, "cedar", 6_952.40, 20, 13_904_800.0),
        ("CH53", 10.0, "ipe", 10_808.45, 20, 21_616_900.0),
        ("CH53", 10.0, "jatoba", 5_991.88, 20, 11_983_760.0),
        ("CH53", 50.0, "cedar", 6_952.40, 11, 7_647_640.0),
        ("CH53", 50.0, "ipe", 10_808.45, 11, 11_889_295.0),
        ("CH53", 50.0, "jatoba", 5_991.88, 11, 4_943_191.0),
        ("CH53", 100.0, "cedar", 6_952.40, 7, 4_866_680.0),
        ("CH53", 100.0, "ipe", 10_808.45, 7, 7_565_915.0),
        ("CH53", 100.0, "jatoba", 5_991.88, 7, 4_194_316.0),
        ("MI26", 10.0, "cedar", 6_952.40, 19, 13_209_560.0),
        ("MI26", 10.0, "ipe", 13_510.56, 19, 25_670_064.0),
        ("MI26", 10.0, "jatoba", 7_489.85, 19, 14_230_715.0),
        ("MI26", 50.0, "cedar", 6_952.40, 11, 7_647_640.0),
        ("MI26", 50.0, "ipe", 13_510.56, 11, 14_861_616.0),
        ("MI26", 50.0, "jatoba", 7_489.85, 11, 8_238_835.0),
        ("MI26", 100.0, "cedar", 6_952.40, 7, 4_866_680.0),
        ("MI26", 100.0, "ipe", 13_510.56, 7, 9_457_392.0),
        ("MI26", 100.0, "jatoba", 7_489.85, 7, 5_242_895.0),
    ];

    /// One feasibility-table row: (scenario, condition-or-species, km,
    /// investment, revenue, NPV in 1e6 USD, IRR %, payback years).
    pub type FeasRow = (
        u8,
        &'static str,
        f64,
        f64,
        f64,
        f64,
        Option<f64>,
        Option<u32>,
    );

    /// Table 2: CH-47 on cedar; key is the condition label.
    pub const T2: [FeasRow; 9] = [
        (1, "new", 10.0, 40_094_340.0, 7_680_400.0, -37.50, None, None),
        (1, "used-new", 10.0, 21_094_340.0, 7_680_400.0, -18.50, None, None),
        (1, "used-old", 10.0, 11_094_340.0, 7_680_400.0, -8.50, None, None),
        (2, "new", 10.0, 40_094_340.0, 13_904_800.0, -5.97, None, None),
        (2, "used-new", 10.0, 21_094_340.0, 13_904_800.0, 13.02, Some(40.0), Some(4)),
        (2, "used-old", 10.0, 11_094_340.0, 13_904_800.0, 23.02, Some(76.0), Some(3)),
        (1, "used-old", 50.0, 11_094_340.0, 7_680_400.0, -24.29, None, None),
        (2, "used-old", 50.0, 11_094_340.0, 8_342_880.0, 4.42, Some(25.0), Some(8)),
        (2, "used-old", 100.0, 11_094_340.0, 5_561_920.0, -9.65, None, None),
    ];

    /// Table 3: CH-47 on ipe.
    pub const T3: [FeasRow; 10] = [
        (1, "new", 10.0, 40_094_340.0, 16_212_500.0, 5.71, Some(26.0), Some(5)),
        (1, "used-new", 10.0, 21_094_340.0, 16_212_500.0, 24.71, Some(51.0), Some(3)),
        (1, "used-old", 10.0, 11_094_340.0, 16_212_500.0, 34.71, Some(97.0), Some(2)),
        (2, "new", 10.0, 40_094_340.0, 16_212_500.0, 5.71, Some(26.0), Some(5)),
        (2, "used-new", 10.0, 21_094_340.0, 16_212_500.0, 24.71, Some(51.0), Some(3)),
        (2, "used-old", 10.0, 11_094_340.0, 16_212_500.0, 34.71, Some(97.0), Some(2)),
        (1, "used-old", 50.0, 11_094_340.0, 9_727_500.0, 1.36, Some(38.0), Some(5)),
        (1, "used-old", 100.0, 11_094_340.0, 6_485_000.0, -15.03, None, None),
        (2, "used-old", 50.0, 11_094_340.0, 16_212_500.0, 1.36, Some(38.0), Some(5)),
        (2, "used-old", 100.0, 11_094_340.0, 16_212_500.0, -15.03, None, None),
    ];

    /// Table 4: CH-47 on jatoba.
    pub const T4: [FeasRow; 10] = [
        (1, "new", 10.0, 40_094_340.0, 8_987_620.0, -21.87, None, None),
        (1, "used-new", 10.0, 21_094_340.0, 8_987_620.0, -2.87, None, None),
        (1, "used-old", 10.0, 11_094_340.0, 8_987_620.0, 7.12, Some(32.0), Some(3)),
        (2, "new", 10.0, 40_094_340.0, 8_987_620.0, -21.87, None, None),
        (2, "used-new", 10.0, 21_094_340.0, 8_987_620.0, -2.87, None, None),
        (2, "used-old", 10.0, 11_094_340.0, 8_987_620.0, 7.12, Some(32.0), Some(3)),
        (1, "used-old", 50.0, 11_094_340.0, 5_392_572.0, -11.36, None, None),
        (1, "used-old", 100.0, 11_094_340.0, 3_595_048.0, -11.36, None, None),
        (2, "used-old", 50.0, 11_094_340.0, 8_987_620.0, -21.87, None, None),
        (2, "used-old", 100.0, 11_094_340.0, 8_987_620.0, -2.7, None, None),
    ];

    /// Table 5: CH-53 (new) across species; key is the species id.
    pub const T5: [FeasRow; 6] = [
        (1, "cedar", 10.0, 88_094_340.0, 7_680_400.0, -190.31, None, None),
        (1, "ipe", 10.0, 88_094_340.0, 16_212_500.0, -120.64, None, None),
        (1, "jatoba", 10.0, 88_094_340.0, 8_987_620.0, -168.80, None, None),
        (2, "cedar", 10.0, 88_094_340.0, 13_904_800.0, -159.19, None, None),
        (2, "ipe", 10.0, 88_094_340.0, 21_616_900.0, -120.64, None, None),
        (2, "jatoba", 10.0, 88_094_340.0, 11_983_760.0, -167.80, None, None),
    ];

    /// Table 6: MI-26 (new) across species.
    pub const T6: [FeasRow; 8] = [
        (1, "cedar", 10.0, 26_094_340.0, 7_296_000.0, -49.20, None, None),
        (2, "cedar", 10.0, 26_094_340.0, 7_296_000.0, -18.41, None, None),
        (1, "ipe", 10.0, 26_094_340.0, 25_670_064.0, 47.52, Some(55.0), Some(2)),
        (2, "ipe", 10.0, 26_094_340.0, 25_670_064.0, 46.45, Some(55.0), Some(2)),
        (1, "ipe", 50.0, 26_094_340.0, 8_916_875.0, -10.73, None, None),
        (2, "ipe", 50.0, 26_094_340.0, 14_861_616.0, -11.33, None, None),
        (1, "jatoba", 10.0, 26_094_340.0, 8_537_099.0, -36.62, None, None),
        (2, "jatoba", 10.0, 26_094_340.0, 14_230_715.0, -13.10, None, None),
    ];
}

fn scenario_dims(scenario: u8) -> (DimsPreset, StemDims) {
    match scenario {
        1 => (DimsPreset::Scenario1, StemDims::scenario1()),
        _ => (DimsPreset::Scenario2, StemDims::scenario2()),
    }
}

struct Reproduction<'a> {
    ctx: &'a EvalContext,
    files: Vec<(String, String)>,
    discrepancies: Vec<Discrepancy>,
}

impl<'a> Reproduction<'a> {
    fn flag(
        &mut self,
        table: &str,
        location: impl Into<String>,
        published: impl Into<String>,
        engine: impl Into<String>,
        note: &str,
    ) {
        self.discrepancies.push(Discrepancy {
            table: table.to_string(),
            location: location.into(),
            published_value: published.into(),
            engine_value: engine.into(),
            note: note.to_string(),
        });
    }

    fn catalog_csv(&mut self) {
        let mut csv = String::from(
            "helicopter,condition,payload_kg,mission_radius_km,cruise_kmh,flight_hour_cost,price,section_cap_kg\n",
        );
        for h in &self.ctx.helicopters {
            for (condition, price) in &h.acquisition_prices {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    h.id,
                    condition,
                    fmt_num(h.payload_kg),
                    fmt_num(h.mission_radius_km),
                    fmt_num(h.cruise_kmh),
                    fmt_usd(h.flight_hour_cost),
                    fmt_usd(*price),
                    fmt_num(section_cap_mass(h, &self.ctx.envelope)),
                ));
            }
        }
        self.files.push(("catalog.csv".into(), csv));
    }

    fn table23(&mut self) -> Result<()> {
        let mut csv =
            String::from("helicopter,distance_km,flight_time_min,rides_raw,rides_rounded,rounding_mode\n");
        let mode = self.ctx.envelope.rounding_mode.label();
        for (heli_id, km, p_min, p_raw, p_rounded) in published::T23 {
            let heli = self.ctx.helicopter(heli_id)?;
            let minutes = round_trip_minutes(heli, km)?;
            let rides = rides_per_day(heli, km, &self.ctx.envelope)?;
            csv.push_str(&format!(
                "{},{},{:.2},{:.2},{},{}\n",
                heli_id,
                fmt_num(km),
                trunc_dp(minutes, 2),
                trunc_dp(rides.raw, 2),
                rides.rounded,
                mode,
            ));
            let loc = format!("{heli_id} @{} km", fmt_num(km));
            if (minutes - p_min).abs() > ENVELOPE_TOL {
                self.flag("table23", &loc, format!("{p_min}"), format!("{minutes:.4}"),
                    "flight time differs beyond tolerance");
            }
            if (rides.raw - p_raw).abs() > ENVELOPE_TOL {
                self.flag("table23", &loc, format!("{p_raw}"), format!("{:.4}", rides.raw),
                    "raw rides differ beyond tolerance");
            }
            if rides.rounded != p_rounded {
                self.flag(
                    "table23",
                    &loc,
                    p_rounded.to_string(),
                    rides.rounded.to_string(),
                    "published integer conflicts with the rounding pattern of the other rows; the table footnote (fractional part disregarded) contradicts them as well",
                );
            }
        }
        self.files.push(("table23.csv".into(), csv));
        Ok(())
    }

    fn table24(&mut self) -> Result<()> {
        let mut csv = String::from("helicopter,usable_payload_kg,day_cost,annual_cost\n");
        for (heli_id, p_payload, p_day, p_annual) in published::T24 {
            let heli = self.ctx.helicopter(heli_id)?;
            let payload = usable_payload(heli, self.ctx.envelope.uriel_mass_kg)?;
            let day = heli.flight_hour_cost * self.ctx.envelope.workday_hours;
            let annual = annual_flight_cost(heli, &self.ctx.envelope);
            csv.push_str(&format!(
                "{},{},{},{}\n",
                heli_id,
                fmt_num(payload),
                fmt_usd(day),
                fmt_usd(annual)
            ));
            if (payload - p_payload).abs() > 0.5 {
                self.flag("table24", heli_id, fmt_num(p_payload), fmt_num(payload),
                    "usable payload differs");
            }
            if (day - p_day).abs() > 0.005 || (annual - p_annual).abs() > 0.005 {
                self.flag("table24", heli_id, fmt_usd(p_annual), fmt_usd(annual),
                    "operating cost differs");
            }
        }
        self.files.push(("table24.csv".into(), csv));
        Ok(())
    }

    fn full_log_table(
        &mut self,
        name: &str,
        dims: StemDims,
        rows: &[(&str, f64, f64, f64, f64, f64)],
    ) -> Result<()> {
        let mut csv = String::from(
            "species,volume_m3,price_per_m3,green_mass_kg,sawmill_cost,gross_revenue,boards_billing\n",
        );
        for &(species_id, p_vol, p_mass, p_saw, p_gross, p_bill) in rows {
            let sp = self.ctx.species(species_id)?;
            let vol = stem_volume(sp, dims, self.ctx.mode);
            let mass = vol * green_density(sp)?;
            // full-log economics: the whole stem, no section cap
            let saw_raw = vol * self.ctx.sawmill.processing_cost_per_m3;
            let gross_raw = vol * sp.price_per_m3;
            let bill_raw = gross_raw - saw_raw;
            csv.push_str(&format!(
                "{},{:.2},{},{},{},{},{}\n",
                species_id,
                vol,
                fmt_num(sp.price_per_m3),
                fmt_num((mass + 1e-6).floor()),
                fmt_usd(trunc_dp(saw_raw, 2)),
                fmt_usd(trunc_dp(gross_raw, 2)),
                fmt_usd(trunc_dp(bill_raw, 2)),
            ));
            if (vol - p_vol).abs() > 0.01 {
                self.flag(name, species_id, format!("{p_vol}"), format!("{vol:.4}"),
                    "stem volume differs beyond tolerance");
            }
            if (mass - p_mass).abs() > MASS_TOL {
                self.flag(name, species_id, fmt_num(p_mass), format!("{mass:.1}"),
                    "green mass differs beyond tolerance");
            }
            for (label, engine, published) in [
                ("sawmill cost", trunc_dp(saw_raw, 2), p_saw),
                ("gross revenue", trunc_dp(gross_raw, 2), p_gross),
                ("boards billing", trunc_dp(bill_raw, 2), p_bill),
            ] {
                if (engine - published).abs() > MONEY_TOL {
                    self.flag(name, format!("{species_id} {label}"), fmt_usd(published),
                        fmt_usd(engine), "per-log money cell differs beyond tolerance");
                }
            }
        }
        self.files.push((format!("{name}.csv"), csv));
        Ok(())
    }

    fn reduced_rows(&self, dims: StemDims) -> Result<Vec<(String, String, LogEconomics)>> {
        let mut out = Vec::new();
        for heli in &self.ctx.helicopters {
            for sp in &self.ctx.species {
                let econ = per_ride_billing(
                    heli,
                    sp,
                    dims,
                    &self.ctx.sawmill,
                    &self.ctx.envelope,
                    self.ctx.mode,
                )?;
                if econ.reduction_factor < 1.0 {
                    out.push((sp.id.clone(), heli.id.clone(), econ));
                }
            }
        }
        Ok(out)
    }

    fn reduced_log_table(
        &mut self,
        name: &str,
        dims: StemDims,
        rows: &[(&str, &str, f64, f64, f64, f64)],
    ) -> Result<()> {
        let engine_rows = self.reduced_rows(dims)?;
        let mut csv = String::from(
            "species,helicopter,reduction_factor,sawmill_cost,gross_revenue,boards_billing\n",
        );
        for (species_id, heli_id, econ) in &engine_rows {
            csv.push_str(&format!(
                "{},{},{:.3},{},{},{}\n",
                species_id,
                heli_id,
                econ.published_reduction_factor(),
                fmt_usd(econ.published_sawmill_cost()),
                fmt_usd(econ.published_gross_revenue()),
                fmt_usd(econ.published_boards_billing()),
            ));
        }
        self.files.push((format!("{name}.csv"), csv));

        for &(species_id, heli_id, p_rf, p_saw, p_gross, p_bill) in rows {
            let loc = format!("{heli_id} {species_id}");
            let Some((_, _, econ)) = engine_rows
                .iter()
                .find(|(s, h, _)| s == species_id && h == heli_id)
            else {
                self.flag(name, &loc, format!("factor {p_rf}"), "no reduction".to_string(),
                    "engine applies no reduction for this combination");
                continue;
            };
            if (econ.reduction_factor - p_rf).abs() > REDUCTION_TOL {
                self.flag(name, &loc, format!("{p_rf}"),
                    format!("{:.4}", econ.reduction_factor),
                    "reduction factor differs beyond tolerance");
            }
            for (label, engine, published) in [
                ("sawmill cost", econ.published_sawmill_cost(), p_saw),
                ("gross revenue", econ.published_gross_revenue(), p_gross),
                ("boards billing", econ.published_boards_billing(), p_bill),
            ] {
                if (engine - published).abs() > MONEY_TOL {
                    self.flag(name, format!("{loc} {label}"), fmt_usd(published),
                        fmt_usd(engine), "per-ride money cell differs beyond tolerance");
                }
            }
        }
        for (species_id, heli_id, econ) in &engine_rows {
            if !rows.iter().any(|(s, h, ..)| s == species_id && h == heli_id) {
                self.flag(
                    name,
                    format!("{heli_id} {species_id}"),
                    "row absent".to_string(),
                    format!(
                        "factor {:.3}, billing {}",
                        econ.published_reduction_factor(),
                        fmt_usd(econ.published_boards_billing())
                    ),
                    "stem mass exceeds this airframe's section cap but the published table has no such row",
                );
            }
        }
        Ok(())
    }

    fn revenue_table(
        &mut self,
        name: &str,
        dims: StemDims,
        rows: &[(&str, f64, &str, f64, u32, f64)],
    ) -> Result<()> {
        let mut csv = String::from(
            "helicopter,distance_km,species,billing_per_log,rides_per_day,annual_revenue\n",
        );
        for &(heli_id, km, species_id, p_bill, p_trips, p_revenue) in rows {
            let heli = self.ctx.helicopter(heli_id)?;
            let sp = self.ctx.species(species_id)?;
            let econ =
                per_ride_billing(heli, sp, dims, &self.ctx.sawmill, &self.ctx.envelope, self.ctx.mode)?;
            let rides = rides_per_day(heli, km, &self.ctx.envelope)?;
            let billing = econ.published_boards_billing();
            let revenue = billing * rides.effective * self.ctx.envelope.working_days_per_year;
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                heli_id,
                fmt_num(km),
                species_id,
                fmt_usd(billing),
                rides.rounded,
                fmt_usd(revenue),
            ));
            let loc = format!("{heli_id} {species_id} @{} km", fmt_num(km));
            if rides.rounded != p_trips {
                self.flag(name, &loc, p_trips.to_string(), rides.rounded.to_string(),
                    "ride count differs");
            }
            // a one-cent billing difference scales with rides and days
            let tol = 0.01 * rides.effective * self.ctx.envelope.working_days_per_year + 1e-6;
            if (revenue - p_revenue).abs() > tol {
                // a row equal to its own 10 km sibling despite fewer rides
                // was held constant in the source
                let held_constant = rows.iter().any(|&(h, k, s, b, t, r)| {
                    h == heli_id
                        && s == species_id
                        && k == 10.0
                        && km > 10.0
                        && t > p_trips
                        && (r - p_revenue).abs() < 0.5
                        && (b - p_bill).abs() < 0.005
                });
                let note = if (billing - p_bill).abs() > MONEY_TOL {
                    "published row carries another airframe/scenario's per-ride billing; the engine bills against this airframe's own section cap"
                } else if held_constant {
                    "published revenue is constant across distances while ride counts fall; engine multiplies billing by the actual ride count"
                } else {
                    "published billing times trips does not equal the published revenue (arithmetic slip in the source row)"
                };
                self.flag(name, &loc, fmt_usd(p_revenue), fmt_usd(revenue), note);
            }
        }
        self.files.push((format!("{name}.csv"), csv));
        Ok(())
    }

    fn feasibility_table(
        &mut self,
        name: &str,
        heli_id: &str,
        keyed_by_species: bool,
        condition: &str,
        species_id: &str,
        rows: &[published::FeasRow],
    ) -> Result<()> {
        let mut csv = String::from(
            "scenario,condition,species,distance_km,investment,annual_revenue,annual_cost,npv,irr,payback,verdict,flags\n",
        );
        for &(scen, key, km, p_inv, p_rev, p_npv_m, p_irr_pct, p_payback) in rows {
            let (preset, _) = scenario_dims(scen);
            let (condition, species_id) = if keyed_by_species {
                (condition, key)
            } else {
                (key, species_id)
            };
            let scenario = Scenario {
                helicopter: heli_id.to_string(),
                condition: condition.to_string(),
                species: species_id.to_string(),
                dims: preset,
                distance_km: km,
            };
            let row = evaluate(self.ctx, &scenario)?;
            csv.push_str(&format!(
                "scenario{},{},{},{},{},{},{},{},{},{},{},{}\n",
                scen,
                condition,
                species_id,
                fmt_num(km),
                fmt_usd(row.investment),
                fmt_usd(row.annual_revenue),
                fmt_usd(row.annual_cost),
                fmt_usd(row.npv),
                fmt_irr(row.irr),
                row.payback.map(|p| p.to_string()).unwrap_or_default(),
                row.verdict.label(),
                row.flags.join(";"),
            ));

            let loc = format!("{condition} {species_id} scenario{scen} @{} km", fmt_num(km));
            if (row.investment - p_inv).abs() > 0.005 {
                self.flag(name, &loc, fmt_usd(p_inv), fmt_usd(row.investment),
                    "investment differs");
            }
            let heli = self.ctx.helicopter(heli_id)?;
            let rides = rides_per_day(heli, km, &self.ctx.envelope)?;
            let rev_tol =
                0.01 * rides.effective * self.ctx.envelope.working_days_per_year + 1e-6;
            if (row.annual_revenue - p_rev).abs() > rev_tol {
                self.flag(name, format!("{loc} revenue"), fmt_usd(p_rev),
                    fmt_usd(row.annual_revenue),
                    "published revenue does not follow from this row's billing and ride count (copied from another row, scenario or airframe)");
            }
            let p_npv = p_npv_m * 1e6;
            if (row.npv - p_npv).abs() > NPV_REL_TOL * p_npv.abs() {
                self.flag(
                    name,
                    format!("{loc} NPV"),
                    format!("{p_npv_m}e6"),
                    format!("{:.2}e6", row.npv / 1e6),
                    "published NPV embeds cost lines not derivable from the published inputs; engine flows are revenue minus flight cost",
                );
            }
            match (p_irr_pct, row.irr) {
                (Some(pct), Some(r)) => {
                    if (r - pct / 100.0).abs() > IRR_TOL {
                        self.flag(name, format!("{loc} IRR"), format!("{pct}%"),
                            format!("{:.1}%", r * 100.0), "IRR differs beyond two percentage points");
                    }
                }
                (Some(pct), None) => {
                    self.flag(name, format!("{loc} IRR"), format!("{pct}%"), "none".to_string(),
                        "engine finds no IRR for this row");
                }
                (None, _) => {
                    if row.verdict == Verdict::Viable {
                        self.flag(name, &loc, "non-viable (no IRR/payback printed)".to_string(),
                            format!("viable, IRR {}", fmt_irr(row.irr)),
                            "published row implies non-viability; under revenue-minus-flight-cost flows the row clears both hurdles");
                    }
                }
            }
            if let Some(p_pb) = p_payback {
                if row.payback != Some(p_pb) {
                    self.flag(
                        name,
                        format!("{loc} payback"),
                        p_pb.to_string(),
                        row.payback.map(|p| p.to_string()).unwrap_or_else(|| "none".into()),
                        "published payback matches neither undiscounted nor MARR-discounted accumulation of the published flows",
                    );
                }
            }
        }
        self.files.push((format!("{name}.csv"), csv));
        Ok(())
    }
}

/// Recomputes every published table from the engine pipeline and collects
/// all cells that differ beyond tolerance.
pub fn reproduce_tables(cfg: &RunConfig) -> Result<TableBundle> {
    let ctx = cfg.context();
    let mut rep = Reproduction { ctx: &ctx, files: Vec::new(), discrepancies: Vec::new() };

    rep.catalog_csv();
    rep.table23()?;
    rep.table24()?;
    rep.full_log_table("table25", StemDims::scenario1(), &published::T25)?;
    rep.reduced_log_table("table26", StemDims::scenario1(), &published::T26)?;
    rep.full_log_table("table27", StemDims::scenario2(), &published::T27)?;
    rep.reduced_log_table("table28", StemDims::scenario2(), &published::T28)?;
    rep.revenue_table("table29", StemDims::scenario1(), &published::T29)?;
    rep.revenue_table("table30", StemDims::scenario2(), &published::T30)?;
    rep.feasibility_table("table2", "CH47", false, "", "cedar", &published::T2)?;
    rep.feasibility_table("table3", "CH47", false, "", "ipe", &published::T3)?;
    rep.feasibility_table("table4", "CH47", false, "", "jatoba", &published::T4)?;
    rep.feasibility_table("table5", "CH53", true, "new", "", &published::T5)?;
    rep.feasibility_table("table6", "MI26", true, "new", "", &published::T6)?;

    Ok(TableBundle { files: rep.files, discrepancies: rep.discrepancies })
}

/// Renders the discrepancy list as a markdown report.
pub fn discrepancies_markdown(cfg: &RunConfig, discrepancies: &[Discrepancy]) -> String {
    let mut out = String::new();
    out.push_str("# Discrepancy report\n\n");
    out.push_str(
        "Cells where the engine and the published tables differ beyond tolerance.\n\
         Engine conventions: cash flows are annual revenue minus annual flight cost\n\
         (simple-flow model); published intermediates are truncated (volumes at two\n\
         decimals, factors at three, money at cents); reduction factors divide the\n\
         section cap by the green mass floored to whole kilograms.\n\n",
    );
    out.push_str(&format!(
        "Ride rounding mode: {}. Fixed cycle: {} min. Payback mode: {}.\n\n",
        cfg.envelope.rounding_mode.label(),
        fmt_num(cfg.envelope.fixed_cycle_min),
        cfg.finance.payback_mode.label(),
    ));
    out.push_str(&format!(
        "Tolerances: envelope {ENVELOPE_TOL}; per-ride money {MONEY_TOL} USD; reduction \
         factor {REDUCTION_TOL}; annual revenue one cent per ride-day; NPV {:.0}%; IRR \
         {:.0} percentage points.\n\n",
        NPV_REL_TOL * 100.0,
        IRR_TOL * 100.0,
    ));
    if discrepancies.is_empty() {
        out.push_str("No discrepancies.\n");
        return out;
    }
    out.push_str("| table | location | published | engine | note |\n");
    out.push_str("|---|---|---|---|---|\n");
    for d in discrepancies {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            d.table, d.location, d.published_value, d.engine_value, d.note
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle() -> TableBundle {
        reproduce_tables(&RunConfig::default()).unwrap()
    }

    #[test]
    fn bundle_contains_every_table() {
        let b = bundle();
        let expected = [
            "catalog.csv", "table23.csv", "table24.csv", "table25.csv", "table26.csv",
            "table27.csv", "table28.csv", "table29.csv", "table30.csv", "table2.csv",
            "table3.csv", "table4.csv", "table5.csv", "table6.csv",
        ];
        for name in expected {
            assert!(b.file(name).is_some(), "missing {name}");
        }
        assert_eq!(b.files.len(), expected.len());
    }

    #[test]
    fn table23_has_all_rows_and_one_rounding_exception() {
        let b = bundle();
        assert_eq!(b.file("table23.csv").unwrap().lines().count(), 19);
        let t23: Vec<_> = b.discrepancies.iter().filter(|d| d.table == "table23").collect();
        assert_eq!(t23.len(), 1, "{t23:?}");
        assert!(t23[0].location.contains("CH53 @150"));
        assert_eq!(t23[0].published_value, "5");
        assert_eq!(t23[0].engine_value, "6");
    }

    #[test]
    fn per_log_tables_match_to_the_cent_tolerance() {
        let b = bundle();
        for t in ["table24", "table25", "table26", "table27", "table28"] {
            assert!(
                !b.discrepancies.iter().any(|d| d.table == t && !d.note.contains("no such row")),
                "unexpected discrepancy in {t}"
            );
        }
        // the engine reduces scenario-1 ipe on the MI-26 (20,160 kg over a
        // 20,000 kg cap); the published table has no such row
        assert!(b
            .discrepancies
            .iter()
            .any(|d| d.table == "table26" && d.location == "MI26 ipe"));
    }

    #[test]
    fn revenue_inconsistencies_are_reported_with_engine_values() {
        let b = bundle();
        let d = b
            .discrepancies
            .iter()
            .find(|d| d.table == "table29" && d.location.contains("CH53 ipe @10"))
            .expect("CH53 scenario-1 billing inconsistency");
        assert_eq!(d.engine_value, "21616660.00");
        let d = b
            .discrepancies
            .iter()
            .find(|d| d.table == "table30" && d.location.contains("CH47 ipe @50"))
            .expect("CH47 constant-revenue row");
        assert_eq!(d.published_value, "16212500.00");
        assert!(d.engine_value.starts_with("9727"));
        // the published CH53 jatoba @50 km row multiplies wrong
        assert!(b
            .discrepancies
            .iter()
            .any(|d| d.table == "table30"
                && d.location.contains("CH53 jatoba @50")
                && d.note.contains("arithmetic slip")));
        // MI26 cedar @10 km: published billing times trips is not the revenue
        assert!(b
            .discrepancies
            .iter()
            .any(|d| d.table == "table29" && d.location.contains("MI26 cedar @10")));
    }

    #[test]
    fn consistent_revenue_rows_have_no_flags() {
        let b = bundle();
        for loc in ["CH47 cedar", "CH47 ipe @10", "CH53 cedar", "MI26 ipe"] {
            let flagged = b
                .discrepancies
                .iter()
                .filter(|d| d.table == "table29" && d.location.starts_with(loc))
                .count();
            if loc == "CH47 cedar" || loc == "CH53 cedar" || loc == "CH47 ipe @10" {
                assert_eq!(flagged, 0, "{loc}");
            }
        }
        assert!(!b
            .discrepancies
            .iter()
            .any(|d| d.table == "table30" && d.location.contains("MI26 ipe")));
    }

    #[test]
    fn feasibility_npv_cells_are_enumerated() {
        let b = bundle();
        // every NPV cell of the CH-47 tables diverges from the simple-flow
        // model and must be listed
        for (t, rows) in [("table2", 9), ("table3", 10), ("table4", 10)] {
            let n = b
                .discrepancies
                .iter()
                .filter(|d| d.table == t && d.location.contains("NPV"))
                .count();
            assert_eq!(n, rows, "{t} NPV cells");
        }
        // IRR cells reproduce, so none are flagged
        for t in ["table2", "table3", "table4"] {
            assert!(!b
                .discrepancies
                .iter()
                .any(|d| d.table == t && d.location.contains("IRR")));
        }
        // three of the six table5 NPV rows diverge
        let t5: Vec<_> = b
            .discrepancies
            .iter()
            .filter(|d| d.table == "table5" && d.location.contains("NPV"))
            .collect();
        assert_eq!(t5.len(), 3, "{t5:?}");
        assert!(t5.iter().all(|d| d.location.contains("ipe") || d.location.contains("jatoba scenario1")));
    }

    #[test]
    fn markdown_report_renders() {
        let cfg = RunConfig::default();
        let b = bundle();
        let md = discrepancies_markdown(&cfg, &b.discrepancies);
        assert!(md.contains("# Discrepancy report"));
        assert!(md.contains("| table29 |"));
        assert!(md.contains("nearest"));
    }
}
