//! Helicopter catalog and operational-envelope arithmetic.
//!
//! A mission is a round trip to the target plus a fixed on-site cycle; the
//! workday divides into rides accordingly. The fixed cycle defaults to 20
//! minutes, the value every row of the published envelope table satisfies.
//! The narrative 15-minute harvesting figure and the simulated 6/9-minute
//! cycle times are kept as named presets.

use crate::error::{Error, Result};
use crate::round::round_half_up_dp;

/// Fixed on-site cycle consistent with the published envelope table, minutes.
pub const TABLE_CYCLE_MIN: f64 = 20.0;
/// Harvesting time per helicopter quoted in the narrative, minutes.
pub const PROSE_HARVEST_CYCLE_MIN: f64 = 15.0;
/// Simulated harvesting cycle time, minutes.
pub const SIM_HARVEST_CYCLE_MIN: f64 = 6.0;
/// Simulated post-harvest silvicultural treatment cycle time, minutes.
pub const SIM_HST_CYCLE_MIN: f64 = 9.0;

/// Mass of the pod-mounted harvesting system subtracted from payload, kg.
pub const URIEL_MASS_KG: f64 = 2080.0;

/// One airframe's catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct HelicopterSpec {
    /// Catalog key (`CH47`, `CH53`, `MI26`, ...).
    pub id: String,
    /// Name as printed in reports.
    pub name: String,
    /// Nominal useful load, kg.
    pub payload_kg: f64,
    pub mission_radius_km: f64,
    pub cruise_kmh: f64,
    /// Flight-hour cost including crew, USD/h.
    pub flight_hour_cost: f64,
    /// Acquisition price per condition label, insertion-ordered.
    pub acquisition_prices: Vec<(String, f64)>,
    /// Per-ride timber mass cap, kg. `None` falls back to the usable payload.
    pub section_cap_kg: Option<f64>,
}

impl HelicopterSpec {
    /// Acquisition price for a condition label. Labels absent from the price
    /// map are a configuration error, never a silent default.
    pub fn price(&self, condition: &str) -> Result<f64> {
        self.acquisition_prices
            .iter()
            .find(|(c, _)| c == condition)
            .map(|(_, p)| *p)
            .ok_or_else(|| {
                Error::Config(format!(
                    "helicopter {} has no acquisition price for condition '{}' (known: {})",
                    self.id,
                    condition,
                    self.acquisition_prices
                        .iter()
                        .map(|(c, _)| c.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            })
    }

    pub fn validate(&self, uriel_mass_kg: f64) -> Result<()> {
        if !(self.payload_kg > uriel_mass_kg) {
            return Err(Error::Config(format!(
                "helicopter {}: payload {} kg does not exceed the carried system mass {} kg",
                self.id, self.payload_kg, uriel_mass_kg
            )));
        }
        if !(self.cruise_kmh > 0.0) || !(self.mission_radius_km > 0.0) {
            return Err(Error::Config(format!(
                "helicopter {}: cruise speed and mission radius must be positive",
                self.id
            )));
        }
        if !(self.flight_hour_cost > 0.0) {
            return Err(Error::Config(format!(
                "helicopter {}: flight_hour_cost must be positive",
                self.id
            )));
        }
        if self.acquisition_prices.is_empty() {
            return Err(Error::Config(format!(
                "helicopter {}: at least one acquisition price is required",
                self.id
            )));
        }
        Ok(())
    }
}

/// Integerization policy for rides per day.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RideRounding {
    /// Half-up to the nearest integer; matches 17 of the 18 published rows.
    #[default]
    Nearest,
    Floor,
    Ceil,
    /// No integerization: downstream revenue math keeps the fractional value.
    Raw,
}

impl RideRounding {
    pub fn label(&self) -> &'static str {
        match self {
            RideRounding::Nearest => "nearest",
            RideRounding::Floor => "floor",
            RideRounding::Ceil => "ceil",
            RideRounding::Raw => "raw",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "nearest" => Ok(RideRounding::Nearest),
            "floor" => Ok(RideRounding::Floor),
            "ceil" => Ok(RideRounding::Ceil),
            "raw" => Ok(RideRounding::Raw),
            other => Err(Error::Config(format!(
                "unknown rounding_mode '{other}' (expected nearest, floor, ceil or raw)"
            ))),
        }
    }
}

/// Workday and cycle parameters of the operation.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopeParams {
    pub workday_hours: f64,
    pub working_days_per_year: f64,
    pub fixed_cycle_min: f64,
    pub rounding_mode: RideRounding,
    /// Mass of the carried harvesting system, kg.
    pub uriel_mass_kg: f64,
}

impl Default for EnvelopeParams {
    fn default() -> Self {
        Self {
            workday_hours: 8.0,
            working_days_per_year: 100.0,
            fixed_cycle_min: TABLE_CYCLE_MIN,
            rounding_mode: RideRounding::Nearest,
            uriel_mass_kg: URIEL_MASS_KG,
        }
    }
}

impl EnvelopeParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.workday_hours > 0.0
            && self.working_days_per_year >= 0.0
            && self.fixed_cycle_min > 0.0
            && self.uriel_mass_kg >= 0.0)
        {
            return Err(Error::Config(
                "envelope parameters must be positive (working days may be zero)".into(),
            ));
        }
        Ok(())
    }
}

fn check_distance(heli: &HelicopterSpec, distance_km: f64) -> Result<()> {
    if !(distance_km > 0.0) {
        return Err(Error::Domain(format!(
            "target distance must be positive, got {distance_km} km"
        )));
    }
    if distance_km > heli.mission_radius_km {
        return Err(Error::Envelope(format!(
            "target at {distance_km} km exceeds the {} km mission radius of {}",
            heli.mission_radius_km, heli.id
        )));
    }
    Ok(())
}

/// Round-trip flight time to a target and back, minutes.
pub fn round_trip_minutes(heli: &HelicopterSpec, distance_km: f64) -> Result<f64> {
    check_distance(heli, distance_km)?;
    Ok(2.0 * distance_km / heli.cruise_kmh * 60.0)
}

/// Rides per day, before and after integerization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RidesPerDay {
    pub raw: f64,
    pub rounded: u32,
    /// Value fed into revenue math: the integer, or `raw` in raw mode.
    pub effective: f64,
}

/// Rides achievable in one workday: workday minutes divided by round trip
/// plus the fixed on-site cycle.
pub fn rides_per_day(
    heli: &HelicopterSpec,
    distance_km: f64,
    params: &EnvelopeParams,
) -> Result<RidesPerDay> {
    let trip = round_trip_minutes(heli, distance_km)?;
    let raw = params.workday_hours * 60.0 / (trip + params.fixed_cycle_min);
    let rounded = match params.rounding_mode {
        RideRounding::Nearest => round_half_up_dp(raw, 0),
        RideRounding::Floor | RideRounding::Raw => raw.floor(),
        RideRounding::Ceil => raw.ceil(),
    } as u32;
    let effective = match params.rounding_mode {
        RideRounding::Raw => raw,
        _ => rounded as f64,
    };
    Ok(RidesPerDay { raw, rounded, effective })
}

/// Cost of flying every working day of the year, USD/year.
pub fn annual_flight_cost(heli: &HelicopterSpec, params: &EnvelopeParams) -> f64 {
    heli.flight_hour_cost * params.workday_hours * params.working_days_per_year
}

/// Payload left for timber once the harvesting system is slung, kg.
pub fn usable_payload(heli: &HelicopterSpec, uriel_mass_kg: f64) -> Result<f64> {
    let left = heli.payload_kg - uriel_mass_kg;
    if left <= 0.0 {
        return Err(Error::Config(format!(
            "helicopter {}: carried system mass {} kg leaves no usable payload",
            heli.id, uriel_mass_kg
        )));
    }
    Ok(left)
}

/// The built-in three-airframe catalog with table-derived section caps.
pub fn builtin_catalog() -> Vec<HelicopterSpec> {
    vec![
        HelicopterSpec {
            id: "CH47".into(),
            name: "CH-47".into(),
            payload_kg: 12_565.0,
            mission_radius_km: 306.0,
            cruise_kmh: 291.0,
            flight_hour_cost: 6_705.0,
            acquisition_prices: vec![
                ("new".into(), 39_000_000.0),
                ("used-new".into(), 20_000_000.0),
                ("used-old".into(), 10_000_000.0),
            ],
            section_cap_kg: Some(12_000.0),
        },
        HelicopterSpec {
            id: "CH53".into(),
            name: "CH-53".into(),
            payload_kg: 16_329.0,
            mission_radius_km: 200.0,
            cruise_kmh: 270.0,
            flight_hour_cost: 34_497.0,
            acquisition_prices: vec![("new".into(), 87_000_000.0)],
            section_cap_kg: Some(16_000.0),
        },
        HelicopterSpec {
            id: "MI26".into(),
            name: "MI-26".into(),
            payload_kg: 20_000.0,
            mission_radius_km: 400.0,
            cruise_kmh: 255.0,
            flight_hour_cost: 15_000.0,
            acquisition_prices: vec![("new".into(), 25_000_000.0)],
            section_cap_kg: Some(20_000.0),
        },
    ]
}

/// The built-in catalog with the narrative uniform 10,000 kg section cap,
/// for sensitivity runs.
pub fn builtin_catalog_prose_caps() -> Vec<HelicopterSpec> {
    let mut catalog = builtin_catalog();
    for heli in &mut catalog {
        heli.section_cap_kg = Some(10_000.0);
    }
    catalog
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn heli(id: &str) -> HelicopterSpec {
        builtin_catalog().into_iter().find(|h| h.id == id).unwrap()
    }

    #[test]
    fn catalog_is_valid() {
        for h in builtin_catalog() {
            h.validate(URIEL_MASS_KG).unwrap();
        }
    }

    #[test]
    fn round_trip_examples() {
        let t = round_trip_minutes(&heli("CH47"), 10.0).unwrap();
        assert!((t - 4.12).abs() < 0.01, "{t}");
        let t = round_trip_minutes(&heli("MI26"), 50.0).unwrap();
        assert!((t - 23.52).abs() < 0.01, "{t}");
    }

    #[test]
    fn round_trip_vanishes_with_distance() {
        let t = round_trip_minutes(&heli("CH47"), 1e-6).unwrap();
        assert!(t > 0.0 && t < 1e-3);
    }

    #[test]
    fn distance_beyond_radius_is_envelope_error() {
        assert!(matches!(
            round_trip_minutes(&heli("CH47"), 500.0),
            Err(Error::Envelope(_))
        ));
        assert!(matches!(
            round_trip_minutes(&heli("CH47"), 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rides_examples() {
        let p = EnvelopeParams::default();
        let r = rides_per_day(&heli("CH47"), 10.0, &p).unwrap();
        assert!((r.raw - 19.89).abs() < 0.01);
        assert_eq!(r.rounded, 20);
        let r = rides_per_day(&heli("CH47"), 100.0, &p).unwrap();
        assert!((r.raw - 7.83).abs() < 0.01);
        assert_eq!(r.rounded, 8);
        let r = rides_per_day(&heli("MI26"), 400.0, &p).unwrap();
        assert!((r.raw - 2.30).abs() < 0.01);
        assert_eq!(r.rounded, 2);
    }

    #[test]
    fn rides_saturation_below_one() {
        // a slow airframe with a wide radius: a full-radius mission eats the workday
        let slow = HelicopterSpec {
            id: "slow".into(),
            name: "slow".into(),
            payload_kg: 10_000.0,
            mission_radius_km: 400.0,
            cruise_kmh: 100.0,
            flight_hour_cost: 1_000.0,
            acquisition_prices: vec![("new".into(), 1.0)],
            section_cap_kg: None,
        };
        let mut p = EnvelopeParams::default();
        let r = rides_per_day(&slow, 400.0, &p).unwrap();
        assert!(r.raw < 1.0);
        assert_eq!(r.rounded, 1); // nearest
        p.rounding_mode = RideRounding::Floor;
        assert_eq!(rides_per_day(&slow, 400.0, &p).unwrap().rounded, 0);
        p.rounding_mode = RideRounding::Raw;
        let r = rides_per_day(&slow, 400.0, &p).unwrap();
        assert_eq!(r.effective, r.raw);
    }

    #[test]
    fn annual_cost_table_values() {
        let p = EnvelopeParams::default();
        assert_eq!(annual_flight_cost(&heli("CH47"), &p), 5_364_000.0);
        assert_eq!(annual_flight_cost(&heli("CH53"), &p), 27_597_600.0);
        assert_eq!(annual_flight_cost(&heli("MI26"), &p), 12_000_000.0);
    }

    #[test]
    fn zero_working_days_means_zero_cost() {
        let p = EnvelopeParams { working_days_per_year: 0.0, ..Default::default() };
        assert_eq!(annual_flight_cost(&heli("CH47"), &p), 0.0);
    }

    #[test]
    fn usable_payload_values() {
        assert_eq!(usable_payload(&heli("CH47"), URIEL_MASS_KG).unwrap(), 10_485.0);
        assert_eq!(usable_payload(&heli("CH53"), URIEL_MASS_KG).unwrap(), 14_249.0);
        assert_eq!(usable_payload(&heli("MI26"), URIEL_MASS_KG).unwrap(), 17_920.0);
        assert_eq!(usable_payload(&heli("CH47"), 0.0).unwrap(), 12_565.0);
        assert!(usable_payload(&heli("CH47"), 13_000.0).is_err());
    }

    #[test]
    fn unknown_condition_is_config_error() {
        assert!(matches!(heli("CH53").price("used-old"), Err(Error::Config(_))));
        assert_eq!(heli("CH47").price("used-old").unwrap(), 10_000_000.0);
    }

    proptest! {
        #[test]
        fn rides_identity_and_monotonicity(
            d1 in 0.5f64..305.0,
            gap in 0.1f64..1.0,
        ) {
            let h = heli("CH47");
            let p = EnvelopeParams::default();
            let r1 = rides_per_day(&h, d1, &p).unwrap();
            let trip = round_trip_minutes(&h, d1).unwrap();
            // raw rides times the full mission time recovers the workday
            let workday = r1.raw * (trip + p.fixed_cycle_min);
            prop_assert!((workday - 480.0).abs() < 480.0 * 1e-12);
            let d2 = (d1 + gap).min(306.0);
            let r2 = rides_per_day(&h, d2, &p).unwrap();
            prop_assert!(r2.raw < r1.raw);
        }
    }
}
