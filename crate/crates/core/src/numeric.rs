//! Small numeric helpers shared across modules: exactly rounded summation
//! and decimal formatting with half-up rounding.

/// Correctly rounded sum of `values` (Shewchuk's partials, as in Python's
/// `math.fsum`). The result does not depend on the input order.
pub fn exact_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut partials: Vec<f64> = Vec::new();
    for mut x in values {
        let mut kept = 0;
        for j in 0..partials.len() {
            let mut y = partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                partials[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        partials.truncate(kept);
        partials.push(x);
    }

    let Some(mut hi) = partials.pop() else {
        return 0.0;
    };
    let mut lo = 0.0;
    while let Some(y) = partials.pop() {
        let x = hi;
        hi = x + y;
        let yr = hi - x;
        lo = y - yr;
        if lo != 0.0 {
            break;
        }
    }
    // Half-even correction when the remaining partials push past a tie.
    if let Some(&next) = partials.last() {
        if (lo < 0.0 && next < 0.0) || (lo > 0.0 && next > 0.0) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
    }
    hi
}

/// Formats `x` with at most `decimals` fractional digits, rounding half away
/// from zero on the shortest decimal representation of `x` (so `1.005` at
/// two places gives `1.01`).
///
/// With `trim` set, trailing zeros and a dangling decimal point are removed.
/// Negative zero prints as `0`. Non-finite input prints as `0`.
pub fn format_decimal(x: f64, decimals: usize, trim: bool) -> String {
    if !x.is_finite() {
        return "0".to_string();
    }
    let repr = format!("{}", x.abs());
    let (int_part, frac_part) = match repr.split_once('.') {
        Some((i, f)) => (i, f),
        None => (repr.as_str(), ""),
    };

    let mut digits: Vec<u8> = int_part.bytes().chain(frac_part.bytes().take(decimals)).collect();
    let mut frac_len = frac_part.len().min(decimals);
    while frac_len < decimals {
        digits.push(b'0');
        frac_len += 1;
    }

    let round_up = frac_part.as_bytes().get(decimals).is_some_and(|&d| d >= b'5');
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let split = digits.len() - decimals;
    let int_digits = std::str::from_utf8(&digits[..split]).unwrap_or("0");
    let frac_digits = std::str::from_utf8(&digits[split..]).unwrap_or("");
    let mut out = String::with_capacity(digits.len() + 2);
    out.push_str(if int_digits.is_empty() { "0" } else { int_digits });
    if !frac_digits.is_empty() {
        out.push('.');
        out.push_str(frac_digits);
    }
    if trim && out.contains('.') {
        while out.ends_with('0') {
            out.pop();
        }
        if out.ends_with('.') {
            out.pop();
        }
    }
    let is_zero = out.bytes().all(|b| b == b'0' || b == b'.');
    if x < 0.0 && !is_zero {
        out.insert(0, '-');
    }
    out
}

/// Rounds half away from zero at `decimals` places, via [`format_decimal`].
pub fn round_half_up(x: f64, decimals: usize) -> f64 {
    format_decimal(x, decimals, true).parse().unwrap_or(0.0)
}
