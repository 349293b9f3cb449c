//! Rounding conventions shared by the whole engine.
//!
//! The reproduction targets print truncated values: volumes at two decimal
//! places, reduction factors at three, money at whole cents. Downstream
//! arithmetic in those tables is carried out on the truncated intermediates,
//! so the engine offers a paper-compatible mode that does the same, next to
//! a full-precision mode for analysis work.

/// Value-handling policy for model outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompatMode {
    /// Truncate published intermediates the way the reference tables do.
    #[default]
    PaperCompat,
    /// Keep every intermediate at full f64 precision.
    FullPrecision,
}

/// Truncates toward zero at `dp` decimal places.
///
/// A small cushion keeps values that are exact in decimal but one ulp low in
/// binary (4.22 * 1059 = 4468.9799...96) from losing a whole cent.
pub fn trunc_dp(x: f64, dp: u32) -> f64 {
    let scale = 10f64.powi(dp as i32);
    let s = x * scale;
    let cushion = (s.abs() * 1e-12).max(1e-7);
    (s + cushion.copysign(s)).trunc() / scale
}

/// Rounds half away from zero at `dp` decimal places.
pub fn round_half_up_dp(x: f64, dp: u32) -> f64 {
    let scale = 10f64.powi(dp as i32);
    let s = x * scale;
    let r = if s >= 0.0 {
        (s + 0.5).floor()
    } else {
        (s - 0.5).ceil()
    };
    r / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_matches_printed_volumes() {
        assert_eq!(trunc_dp(4.226599, 2), 4.22);
        assert_eq!(trunc_dp(10.508624, 2), 10.50);
        assert_eq!(trunc_dp(7.117044, 2), 7.11);
        assert_eq!(trunc_dp(19.477102, 2), 19.47);
    }

    #[test]
    fn truncation_does_not_drop_a_cent_on_binary_noise() {
        // 4.22 * 1059 is exactly 4468.98 in decimal but lands just below in f64
        assert_eq!(trunc_dp(4.22 * 1059.0, 2), 4468.98);
        assert_eq!(trunc_dp(10.50 * 1446.0, 2), 15183.00);
    }

    #[test]
    fn three_decimal_truncation() {
        assert_eq!(trunc_dp(0.7936508, 3), 0.793);
        assert_eq!(trunc_dp(0.910581, 3), 0.910);
    }

    #[test]
    fn half_up_rounding() {
        assert_eq!(round_half_up_dp(19.8974, 0), 20.0);
        assert_eq!(round_half_up_dp(5.5385, 0), 6.0);
        assert_eq!(round_half_up_dp(4.4082, 0), 4.0);
        assert_eq!(round_half_up_dp(2.5, 0), 3.0);
        assert_eq!(round_half_up_dp(-2.5, 0), -3.0);
    }

    #[test]
    fn zero_and_tiny_values() {
        assert_eq!(trunc_dp(0.0, 2), 0.0);
        assert_eq!(trunc_dp(1e-300, 2), 0.0);
    }
}
