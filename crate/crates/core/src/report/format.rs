//! Number formatting shared by the text reports.

/// SNR values: four decimals.
pub fn snr(x: f64) -> String {
    format!("{x:.4}")
}

/// Powers and totals: an integer when within 1e-6 of one, otherwise six
/// significant digits.
pub fn quantity(x: f64) -> String {
    let rounded = x.round();
    if (x - rounded).abs() <= 1e-6 {
        // Avoid "-0".
        return format!("{}", rounded as i128);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Comma-free CSV number: shortest representation that round-trips,
/// in exponent form for very small or very large magnitudes.
pub fn csv_number(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}
