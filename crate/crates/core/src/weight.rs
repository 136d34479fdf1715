//! Exact rational arithmetic helpers.
//!
//! Every weight and every guarantee bound in this crate is an exact
//! rational; approximation inequalities are checked without any floating
//! point. Natural logarithms (which appear in the set-cover and coloring
//! bounds) are handled through provable rational enclosures.

use alloc::string::String;
use alloc::{format, vec::Vec};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational weight.
pub type Weight = BigRational;

/// `x` as a weight.
pub fn w_int(x: i64) -> Weight {
    BigRational::from_integer(BigInt::from(x))
}

/// `num/den` as a weight.
pub fn w_ratio(num: i64, den: i64) -> Weight {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an exact rational from a decimal (`"3"`, `"-2.75"`) or fraction
/// (`"8/3"`) literal.
pub fn parse_rational(s: &str) -> Option<Weight> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let valid = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !valid(int_part) || !valid(frac_part) {
        return None;
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().ok()?
    };
    let mut den = BigInt::one();
    for b in frac_part.bytes() {
        num = num * 10 + (b - b'0');
        den *= 10;
    }
    Some(BigRational::new(num * sign, den))
}

/// Formats a rational exactly: as a decimal when the denominator divides a
/// power of ten, as `p/q` otherwise.
pub fn format_exact(w: &Weight) -> String {
    let w = w.reduced();
    if w.denom().is_one() {
        return format!("{}", w.numer());
    }
    // Denominator of the reduced form must be 2^a * 5^b for a finite decimal.
    let mut den: BigUint = w.denom().magnitude().clone();
    let mut twos = 0usize;
    let mut fives = 0usize;
    let two = BigUint::from(2u32);
    let five = BigUint::from(5u32);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", w.numer(), w.denom());
    }
    let places = twos.max(fives);
    let mut scaled = w.numer().magnitude().clone();
    for _ in 0..(places - twos) {
        scaled *= &two;
    }
    for _ in 0..(places - fives) {
        scaled *= &five;
    }
    let digits = scaled.to_str_radix(10);
    let digits = if digits.len() <= places {
        let mut padded = String::new();
        for _ in 0..(places + 1 - digits.len()) {
            padded.push('0');
        }
        padded + &digits
    } else {
        digits
    };
    let split = digits.len() - places;
    let sign = if w.numer().is_negative() { "-" } else { "" };
    format!("{}{}.{}", sign, &digits[..split], &digits[split..])
}

/// A short decimal approximation for human-readable tables only.
pub fn approx_decimal(w: &Weight, places: usize) -> String {
    let mut scale = BigInt::one();
    for _ in 0..places {
        scale *= 10;
    }
    let scaled = (w * BigRational::from_integer(scale.clone())).round();
    let v = scaled.to_integer();
    let (sign, mag) = if v.is_negative() {
        ("-", -v)
    } else {
        ("", v)
    };
    let digits = mag.to_str_radix(10);
    let digits = if digits.len() <= places {
        let mut padded = String::new();
        for _ in 0..(places + 1 - digits.len()) {
            padded.push('0');
        }
        padded + &digits
    } else {
        digits
    };
    let split = digits.len() - places;
    format!("{}{}.{}", sign, &digits[..split], &digits[split..])
}

/// Harmonic number `H_k = 1 + 1/2 + ... + 1/k` (`H_0 = 0`), exactly.
pub fn harmonic(k: usize) -> Weight {
    let mut h = BigRational::zero();
    for i in 1..=k {
        h += BigRational::new(BigInt::one(), BigInt::from(i));
    }
    h
}

/// `⌈a/b⌉` for positive rationals expressed as a pair of integers.
pub fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `⌈x⌉` of a rational as a `BigInt`.
pub fn ceil_rational(x: &Weight) -> BigInt {
    x.ceil().to_integer()
}

/// `⌈n / r⌉` for a rational rate `r > 0`.
pub fn ceil_div_rational(n: usize, r: &Weight) -> usize {
    let q = BigRational::from_integer(BigInt::from(n)) / r;
    let c = ceil_rational(&q);
    // Desk-scale instance sizes always fit.
    let (_, digits) = c.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0] as usize,
        _ => usize::MAX,
    }
}

/// Rational enclosure `(lo, hi)` with `lo <= ln(x) <= hi`, tightened to
/// roughly `10^-target_digits` width.
///
/// Uses `ln x = 2 atanh((x-1)/(x+1))` after range reduction by powers of
/// two; the series remainder is bounded by a geometric tail, so the
/// enclosure is rigorous.
pub fn ln_bounds(x: &Weight, target_digits: u32) -> (Weight, Weight) {
    assert!(x.is_positive(), "ln requires a positive argument");
    let one = BigRational::one();
    if x < &one {
        let (lo, hi) = ln_bounds(&(one / x), target_digits);
        return (-hi, -lo);
    }
    // Reduce x into [1, 2): x = 2^k * m.
    let two = w_int(2);
    let mut m = x.clone();
    let mut k = 0u32;
    while m >= two {
        m /= &two;
        k += 1;
    }
    let mut tol = BigRational::one();
    for _ in 0..target_digits {
        tol /= w_int(10);
    }
    let (m_lo, m_hi) = atanh_bounds(&m, &tol);
    if k == 0 {
        return (m_lo, m_hi);
    }
    let (ln2_lo, ln2_hi) = atanh_bounds(&two, &tol);
    let kw = w_int(i64::from(k));
    (m_lo + &kw * ln2_lo, m_hi + kw * ln2_hi)
}

/// Enclosure of `ln x = 2 atanh((x-1)/(x+1))` for `x >= 1` via the series
/// `2 * sum z^(2i+1)/(2i+1)` with `z = (x-1)/(x+1) in [0, 1/3]` after range
/// reduction (or up to 1/3 for the ln 2 constant itself).
fn atanh_bounds(x: &Weight, tol: &Weight) -> (Weight, Weight) {
    let one = BigRational::one();
    let z = (x - &one) / (x + &one);
    if z.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let z2 = &z * &z;
    let mut term = z.clone();
    let mut sum = BigRational::zero();
    let mut i = 0u64;
    loop {
        sum += &term / w_int((2 * i + 1) as i64);
        term *= &z2;
        i += 1;
        // Tail <= term/(2i+1) * 1/(1 - z^2).
        let tail = (&term / w_int((2 * i + 1) as i64)) / (&one - &z2);
        if &tail < tol {
            let lo = &sum * w_int(2);
            let hi = (&sum + tail) * w_int(2);
            return (lo, hi);
        }
    }
}

/// `⌈c * ln r⌉` for rationals `c >= 0`, `r >= 1`, computed exactly.
///
/// For rational `r != 1` the product `c * ln r` is irrational (unless
/// `c = 0`), so a tight enough enclosure always pins the ceiling down.
pub fn ceil_mul_ln(c: &Weight, r: &Weight) -> BigInt {
    assert!(!c.is_negative() && r >= &BigRational::one());
    if c.is_zero() || r.is_one() {
        return BigInt::zero();
    }
    let mut digits = 25;
    loop {
        let (lo, hi) = ln_bounds(r, digits);
        let lo = ceil_rational(&(c * lo));
        let hi = ceil_rational(&(c * hi));
        if lo == hi {
            return lo;
        }
        digits += 25;
    }
}

/// Mean of a non-empty slice of rationals.
pub fn mean(values: &[Weight]) -> Weight {
    let sum: Weight = values.iter().fold(BigRational::zero(), |a, b| a + b);
    sum / w_int(values.len() as i64)
}

/// FNV-1a over a canonical byte feed; used for instance digests.
#[derive(Debug, Clone)]
pub struct Digest(u64);

impl Digest {
    pub fn new() -> Self {
        Digest(0xcbf2_9ce4_8422_2325)
    }

    pub fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x1000_0000_01b3);
        }
    }

    pub fn update_usize(&mut self, v: usize) {
        self.update(&(v as u64).to_le_bytes());
    }

    pub fn update_rational(&mut self, w: &Weight) {
        let r = w.reduced();
        self.update(&r.numer().to_signed_bytes_le());
        self.update(b"/");
        self.update(&r.denom().to_signed_bytes_le());
    }

    pub fn finish(&self) -> u64 {
        self.0
    }
}

impl Default for Digest {
    fn default() -> Self {
        Self::new()
    }
}

/// Sums an iterator of weights.
pub fn sum<'a>(iter: impl Iterator<Item = &'a Weight>) -> Weight {
    iter.fold(BigRational::zero(), |a, b| a + b)
}

/// Collects `values` and returns the exact maximum (None when empty).
pub fn max_weight(values: impl Iterator<Item = Weight>) -> Option<Weight> {
    let collected: Vec<Weight> = values.collect();
    collected.into_iter().reduce(|a, b| if b > a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("3.25").unwrap(), w_ratio(13, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), w_ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), w_int(7));
        assert_eq!(parse_rational("8/3").unwrap(), w_ratio(8, 3));
        assert!(parse_rational("1.2.3").is_none());
        assert!(parse_rational("").is_none());
        assert!(parse_rational("1/0").is_none());
    }

    #[test]
    fn formats_exactly() {
        assert_eq!(format_exact(&w_ratio(13, 4)), "3.25");
        assert_eq!(format_exact(&w_int(-7)), "-7");
        assert_eq!(format_exact(&w_ratio(1, 3)), "1/3");
        assert_eq!(format_exact(&w_ratio(1, 40)), "0.025");
        assert_eq!(
            parse_rational(&format_exact(&w_ratio(123456, 125))).unwrap(),
            w_ratio(123456, 125)
        );
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), w_int(0));
        assert_eq!(harmonic(1), w_int(1));
        assert_eq!(harmonic(4), w_ratio(25, 12));
        // H_8 - H_4 = 1/5 + 1/6 + 1/7 + 1/8 = 533/840.
        assert_eq!(harmonic(8) - harmonic(4), w_ratio(533, 840));
    }

    #[test]
    fn ln_enclosure_brackets_ln2() {
        let (lo, hi) = ln_bounds(&w_int(2), 30);
        // 0.693147180559945 < ln 2 < 0.693147180559946
        assert!(lo < hi);
        assert!(lo > w_ratio(693147180559945, 1_000_000_000_000_000));
        assert!(hi < w_ratio(693147180559946, 1_000_000_000_000_000));
        let (lo, hi) = ln_bounds(&w_ratio(1, 2), 20);
        assert!(lo < hi && hi.is_negative());
    }

    #[test]
    fn ceil_mul_ln_values() {
        // 2 ln 2 = 1.386... -> 2; 3 ln 2 = 2.079... -> 3; 2 ln 4 = 2.772... -> 3.
        assert_eq!(ceil_mul_ln(&w_int(2), &w_int(2)).to_string(), "2");
        assert_eq!(ceil_mul_ln(&w_int(3), &w_int(2)).to_string(), "3");
        assert_eq!(ceil_mul_ln(&w_int(2), &w_int(4)).to_string(), "3");
        assert_eq!(ceil_mul_ln(&w_int(0), &w_int(5)).to_string(), "0");
        assert_eq!(ceil_mul_ln(&w_int(9), &w_int(1)).to_string(), "0");
    }

    #[test]
    fn ceil_div_rational_matches_integer_form() {
        assert_eq!(ceil_div_rational(8, &w_int(2)), 4);
        assert_eq!(ceil_div_rational(8, &w_ratio(8, 3)), 3);
        assert_eq!(ceil_div_rational(7, &w_int(2)), 4);
        assert_eq!(ceil_div_rational(0, &w_int(3)), 0);
    }
}
