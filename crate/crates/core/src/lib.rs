//! heli-feas: a deterministic techno-economic feasibility engine for
//! helicopter-based selective logging.
//!
//! The pipeline runs from tree dimensions and species coefficients through
//! per-ride timber billing and helicopter operational envelopes to
//! multi-year cash flows, NPV/IRR/payback verdicts and harvest-area
//! rotation plans. A zero-override configuration reproduces the published
//! feasibility study; every divergence between the engine and the published
//! tables is surfaced in a discrepancy report rather than papered over.

// negated comparisons in validation guards are load-bearing: they reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod error;
pub mod finance;
pub mod fleet;
pub mod inventory;
pub mod payload;
pub mod render;
pub mod round;
pub mod scenario;
pub mod species;
pub mod tables;

pub use config::{dump_config, parse_config, OutputConfig, OutputFormat, RunConfig};
pub use error::{Error, Result};
pub use finance::{
    irr, irr_detailed, npv, payback, production_price, CashFlowSeries, FinanceParams, IrrResult,
    PaybackMode,
};
pub use fleet::{
    annual_flight_cost, builtin_catalog, rides_per_day, round_trip_minutes, usable_payload,
    EnvelopeParams, HelicopterSpec, RideRounding, RidesPerDay,
};
pub use inventory::{
    circle_area_ha, harvest_duration_days, harvestable_count, inventory_report, lognormal_tail,
    rotation_plan, DbhDistribution, HarvestArea, InventoryReport, RotationPlan, TailMode,
};
pub use payload::{
    annual_revenue, annual_revenue_detail, per_ride_billing, reduction_factor, section_cap_mass,
    sections_per_tree, LogEconomics, SawmillSpec,
};
pub use round::CompatMode;
pub use scenario::{
    evaluate, sweep, sweep_sequential, DimsPreset, EvalContext, FeasibilityRow, Grid, Scenario,
    SweepRow, Verdict,
};
pub use species::{builtin_species, green_density, green_mass, stem_volume, SpeciesSpec, StemDims};
pub use tables::{discrepancies_markdown, reproduce_tables, Discrepancy, TableBundle};
