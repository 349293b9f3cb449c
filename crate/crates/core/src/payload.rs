//! Per-ride timber economics: section caps, reduction factors, sawmill cost,
//! gross revenue and boards billing.
//!
//! A stem whose green mass exceeds the helicopter's per-ride section cap is
//! flown in sections; each ride then carries the capped fraction of the full
//! stem and is billed independently. In paper-compatible mode the reduction
//! factor is taken against the green mass floored to whole kilograms, which
//! is how the published revenue tables were computed.

use crate::error::Result;
use crate::fleet::{rides_per_day, EnvelopeParams, HelicopterSpec, RidesPerDay};
use crate::round::{trunc_dp, CompatMode};
use crate::species::{green_density, stem_volume, SpeciesSpec, StemDims};

/// Sawmill investment and processing cost.
#[derive(Debug, Clone, PartialEq)]
pub struct SawmillSpec {
    /// Investment to set up a large-scale sawmill, USD.
    pub capex: f64,
    /// Cost to process one cubic metre into sawn boards, USD/m3.
    pub processing_cost_per_m3: f64,
}

impl Default for SawmillSpec {
    fn default() -> Self {
        Self { capex: 94_340.0, processing_cost_per_m3: 149.0 }
    }
}

impl SawmillSpec {
    pub fn validate(&self) -> Result<()> {
        if self.capex < 0.0 || self.processing_cost_per_m3 < 0.0 {
            return Err(crate::error::Error::Config(
                "sawmill capex and processing cost must be non-negative".into(),
            ));
        }
        Ok(())
    }
}

/// Economics of one helicopter ride on one stem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogEconomics {
    pub full_volume_m3: f64,
    pub full_green_mass_kg: f64,
    /// Fraction of the stem carried per ride, in (0, 1].
    pub reduction_factor: f64,
    pub ride_volume_m3: f64,
    pub sawmill_cost: f64,
    pub gross_revenue: f64,
    /// Always exactly `gross_revenue - sawmill_cost`.
    pub boards_billing: f64,
}

impl LogEconomics {
    /// Reduction factor as printed: three decimals, truncated.
    pub fn published_reduction_factor(&self) -> f64 {
        trunc_dp(self.reduction_factor, 3)
    }

    pub fn published_sawmill_cost(&self) -> f64 {
        trunc_dp(self.sawmill_cost, 2)
    }

    pub fn published_gross_revenue(&self) -> f64 {
        trunc_dp(self.gross_revenue, 2)
    }

    pub fn published_boards_billing(&self) -> f64 {
        trunc_dp(self.boards_billing, 2)
    }
}

/// Per-ride timber mass cap in kg. Catalog airframes carry table-derived
/// caps; anything without one falls back to its usable payload.
pub fn section_cap_mass(heli: &HelicopterSpec, params: &EnvelopeParams) -> f64 {
    heli.section_cap_kg
        .unwrap_or(heli.payload_kg - params.uriel_mass_kg)
}

/// Mass basis the reduction factor divides into. Paper-compatible mode floors
/// to whole kilograms, matching the printed green masses the published
/// factors were derived from.
fn reduction_mass_basis(mass: f64, mode: CompatMode) -> f64 {
    match mode {
        CompatMode::PaperCompat => (mass + 1e-6).floor(),
        CompatMode::FullPrecision => mass,
    }
}

/// Fraction of the full stem carried per ride: `min(1, cap / green mass)`.
pub fn reduction_factor(
    heli: &HelicopterSpec,
    species: &SpeciesSpec,
    dims: StemDims,
    params: &EnvelopeParams,
    mode: CompatMode,
) -> Result<f64> {
    Ok(per_ride_billing(heli, species, dims, &SawmillSpec::default(), params, mode)?
        .reduction_factor)
}

/// Full per-ride economics for one stem flown by one helicopter.
pub fn per_ride_billing(
    heli: &HelicopterSpec,
    species: &SpeciesSpec,
    dims: StemDims,
    sawmill: &SawmillSpec,
    params: &EnvelopeParams,
    mode: CompatMode,
) -> Result<LogEconomics> {
    let full_volume = stem_volume(species, dims, mode);
    let density = green_density(species)?;
    let full_mass = full_volume * density;
    let cap = section_cap_mass(heli, params);
    let basis = reduction_mass_basis(full_mass, mode);
    let rf = if basis <= cap || basis == 0.0 { 1.0 } else { cap / basis };
    let ride_volume = rf * full_volume;
    let sawmill_cost = ride_volume * sawmill.processing_cost_per_m3;
    let gross_revenue = ride_volume * species.price_per_m3;
    Ok(LogEconomics {
        full_volume_m3: full_volume,
        full_green_mass_kg: full_mass,
        reduction_factor: rf,
        ride_volume_m3: ride_volume,
        sawmill_cost,
        gross_revenue,
        boards_billing: gross_revenue - sawmill_cost,
    })
}

/// Number of rides needed to fly out one whole stem.
pub fn sections_per_tree(
    heli: &HelicopterSpec,
    species: &SpeciesSpec,
    dims: StemDims,
    params: &EnvelopeParams,
    mode: CompatMode,
) -> Result<u64> {
    let econ = per_ride_billing(heli, species, dims, &SawmillSpec::default(), params, mode)?;
    let cap = section_cap_mass(heli, params);
    let basis = reduction_mass_basis(econ.full_green_mass_kg, mode);
    Ok(((basis / cap).ceil() as u64).max(1))
}

/// Revenue over the working year together with its per-ride breakdown.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RevenueBreakdown {
    pub economics: LogEconomics,
    pub rides: RidesPerDay,
    /// Billing per ride that enters the annual product (published value in
    /// paper-compatible mode, raw otherwise).
    pub billing_per_ride: f64,
    pub annual_revenue: f64,
}

/// Annual timber revenue: per-ride billing times rides per day times working
/// days.
pub fn annual_revenue_detail(
    heli: &HelicopterSpec,
    species: &SpeciesSpec,
    dims: StemDims,
    distance_km: f64,
    params: &EnvelopeParams,
    sawmill: &SawmillSpec,
    mode: CompatMode,
) -> Result<RevenueBreakdown> {
    let economics = per_ride_billing(heli, species, dims, sawmill, params, mode)?;
    let rides = rides_per_day(heli, distance_km, params)?;
    let billing_per_ride = match mode {
        CompatMode::PaperCompat => economics.published_boards_billing(),
        CompatMode::FullPrecision => economics.boards_billing,
    };
    Ok(RevenueBreakdown {
        economics,
        rides,
        billing_per_ride,
        annual_revenue: billing_per_ride * rides.effective * params.working_days_per_year,
    })
}

pub fn annual_revenue(
    heli: &HelicopterSpec,
    species: &SpeciesSpec,
    dims: StemDims,
    distance_km: f64,
    params: &EnvelopeParams,
    sawmill: &SawmillSpec,
    mode: CompatMode,
) -> Result<f64> {
    Ok(annual_revenue_detail(heli, species, dims, distance_km, params, sawmill, mode)?
        .annual_revenue)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fleet::builtin_catalog;
    use crate::species::builtin_species;
    use proptest::prelude::*;

    fn heli(id: &str) -> HelicopterSpec {
        builtin_catalog().into_iter().find(|h| h.id == id).unwrap()
    }

    fn species(id: &str) -> SpeciesSpec {
        builtin_species().into_iter().find(|s| s.id == id).unwrap()
    }

    fn econ(h: &str, s: &str, dims: StemDims) -> LogEconomics {
        per_ride_billing(
            &heli(h),
            &species(s),
            dims,
            &SawmillSpec::default(),
            &EnvelopeParams::default(),
            CompatMode::PaperCompat,
        )
        .unwrap()
    }

    #[test]
    fn section_caps() {
        let p = EnvelopeParams::default();
        assert_eq!(section_cap_mass(&heli("CH47"), &p), 12_000.0);
        assert_eq!(section_cap_mass(&heli("CH53"), &p), 16_000.0);
        assert_eq!(section_cap_mass(&heli("MI26"), &p), 20_000.0);
        let mut custom = heli("CH47");
        custom.section_cap_kg = None;
        assert_eq!(section_cap_mass(&custom, &p), 10_485.0);
    }

    #[test]
    fn caps_rederive_from_published_gross_revenue() {
        // cap = (published gross / price) * green density, per airframe
        let ch47 = (9_037.50f64 / 1446.0) * 1920.0;
        assert!((ch47 - 12_000.0).abs() < 1e-9, "{ch47}");
        let ch53 = (12_050.00f64 / 1446.0) * 1920.0;
        assert!((ch53 - 16_000.0).abs() < 1e-9, "{ch53}");
        let mi26 = (15_062.66f64 / 1446.0) * 1920.0;
        assert!((mi26 - 20_000.0).abs() < 0.3, "{mi26}");
    }

    #[test]
    fn published_reduction_factors() {
        let s1 = StemDims::scenario1();
        let s2 = StemDims::scenario2();
        let cases = [
            ("CH47", "ipe", s1, 0.595),
            ("CH47", "jatoba", s1, 0.879),
            ("CH53", "ipe", s1, 0.793),
            ("CH47", "ipe", s2, 0.321),
            ("CH47", "jatoba", s2, 0.546),
            ("CH53", "ipe", s2, 0.428),
            ("CH53", "jatoba", s2, 0.728),
            ("MI26", "ipe", s2, 0.535),
            ("MI26", "jatoba", s2, 0.910),
        ];
        for (h, s, dims, expected) in cases {
            let e = econ(h, s, dims);
            assert_eq!(e.published_reduction_factor(), expected, "{h}/{s}");
            assert!((e.reduction_factor - expected).abs() <= 0.001);
        }
    }

    #[test]
    fn cedar_is_never_reduced() {
        for h in ["CH47", "CH53", "MI26"] {
            assert_eq!(econ(h, "cedar", StemDims::scenario1()).reduction_factor, 1.0);
            assert_eq!(econ(h, "cedar", StemDims::scenario2()).reduction_factor, 1.0);
        }
        // jatoba fits the CH-53 and MI-26 in scenario 1 as well
        assert_eq!(econ("CH53", "jatoba", StemDims::scenario1()).reduction_factor, 1.0);
    }

    #[test]
    fn billing_examples() {
        let e = econ("CH47", "cedar", StemDims::scenario1());
        assert_eq!(e.published_boards_billing(), 3_840.20);
        assert_eq!(e.published_sawmill_cost(), 628.78);
        assert_eq!(e.published_gross_revenue(), 4_468.98);

        let e = econ("CH47", "ipe", StemDims::scenario1());
        assert_eq!(e.published_boards_billing(), 8_106.25);

        let e = econ("MI26", "jatoba", StemDims::scenario2());
        assert!((e.published_boards_billing() - 7_489.85).abs() <= 0.25);
    }

    #[test]
    fn billing_is_gross_minus_sawmill_exactly() {
        for h in ["CH47", "CH53", "MI26"] {
            for s in ["cedar", "ipe", "jatoba"] {
                for dims in [StemDims::scenario1(), StemDims::scenario2()] {
                    let e = econ(h, s, dims);
                    assert_eq!(e.boards_billing, e.gross_revenue - e.sawmill_cost);
                    assert!(e.reduction_factor > 0.0 && e.reduction_factor <= 1.0);
                    let capped = e.full_green_mass_kg.floor() > section_cap_mass(&heli(h), &EnvelopeParams::default());
                    assert_eq!(e.reduction_factor < 1.0, capped, "{h}/{s}");
                }
            }
        }
    }

    #[test]
    fn sections_per_tree_counts() {
        let p = EnvelopeParams::default();
        let m = CompatMode::PaperCompat;
        let one =
            sections_per_tree(&heli("CH47"), &species("cedar"), StemDims::scenario1(), &p, m);
        assert_eq!(one.unwrap(), 1);
        let four = sections_per_tree(&heli("CH47"), &species("ipe"), StemDims::scenario2(), &p, m);
        assert_eq!(four.unwrap(), 4); // 37,382 kg over a 12,000 kg cap
    }

    #[test]
    fn annual_revenue_examples() {
        let p = EnvelopeParams::default();
        let saw = SawmillSpec::default();
        let m = CompatMode::PaperCompat;
        let r = annual_revenue(&heli("CH47"), &species("cedar"), StemDims::scenario1(), 10.0, &p, &saw, m)
            .unwrap();
        assert!((r - 7_680_400.0).abs() < 0.005);
        let r = annual_revenue(&heli("MI26"), &species("ipe"), StemDims::scenario2(), 10.0, &p, &saw, m)
            .unwrap();
        assert!((r - 25_670_064.0).abs() < 0.005);
        let r = annual_revenue(&heli("CH53"), &species("ipe"), StemDims::scenario2(), 10.0, &p, &saw, m)
            .unwrap();
        assert!((r - 21_616_900.0).abs() <= 0.01 * 20.0 * 100.0 + 1e-6, "{r}");
    }

    #[test]
    fn zero_rides_means_zero_revenue() {
        let slow = HelicopterSpec {
            id: "slow".into(),
            name: "slow".into(),
            payload_kg: 30_000.0,
            mission_radius_km: 500.0,
            cruise_kmh: 100.0,
            flight_hour_cost: 1_000.0,
            acquisition_prices: vec![("new".into(), 1.0)],
            section_cap_kg: Some(20_000.0),
        };
        let p = EnvelopeParams {
            rounding_mode: crate::fleet::RideRounding::Floor,
            ..Default::default()
        };
        let r = annual_revenue(
            &slow,
            &species("cedar"),
            StemDims::scenario1(),
            500.0,
            &p,
            &SawmillSpec::default(),
            CompatMode::PaperCompat,
        )
        .unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn envelope_error_propagates() {
        let r = annual_revenue(
            &heli("CH47"),
            &species("cedar"),
            StemDims::scenario1(),
            500.0,
            &EnvelopeParams::default(),
            &SawmillSpec::default(),
            CompatMode::PaperCompat,
        );
        assert!(matches!(r, Err(crate::error::Error::Envelope(_))));
    }

    proptest! {
        #[test]
        fn billing_linear_in_margin(price in 200.0f64..4000.0, dbh in 30.0f64..100.0) {
            // billing equals ride volume times (price - processing cost)
            let mut s = species("ipe");
            s.price_per_m3 = price;
            let dims = StemDims::new(dbh, 25.0).unwrap();
            let e = per_ride_billing(
                &heli("CH47"), &s, dims,
                &SawmillSpec::default(), &EnvelopeParams::default(), CompatMode::FullPrecision,
            ).unwrap();
            let expected = e.ride_volume_m3 * (price - 149.0);
            prop_assert!((e.boards_billing - expected).abs() <= expected.abs() * 1e-12 + 1e-9);
        }

        #[test]
        fn revenue_non_increasing_in_distance(d1 in 1.0f64..300.0, gap in 0.5f64..50.0) {
            let d2 = (d1 + gap).min(306.0);
            let p = EnvelopeParams::default();
            let saw = SawmillSpec::default();
            let near = annual_revenue(&heli("CH47"), &species("ipe"), StemDims::scenario1(), d1, &p, &saw, CompatMode::PaperCompat).unwrap();
            let far = annual_revenue(&heli("CH47"), &species("ipe"), StemDims::scenario1(), d2, &p, &saw, CompatMode::PaperCompat).unwrap();
            prop_assert!(far <= near + 1e-9);
        }
    }
}
