use crate::classify::Rgb;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SchemeKind {
    Sequential,
    Diverging,
}

include!("schemes_data.rs");

/// Names of the bundled ColorBrewer schemes.
pub fn scheme_names() -> impl Iterator<Item = &'static str> {
    SCHEMES.iter().map(|(name, _, _)| *name)
}

/// `k` colors of a named scheme, light to dark (sequential) or end to end
/// (diverging). Two classes use the ends of the three-class table.
pub fn scheme_colors(name: &str, k: usize) -> Result<Vec<Rgb>> {
    let (_, _, sizes) = SCHEMES
        .iter()
        .find(|(n, _, _)| n.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownScheme(name.to_string()))?;
    let hex: Vec<&str> = match k {
        2 => vec![sizes[0][0], sizes[0][2]],
        3..=9 => sizes[k - 3].to_vec(),
        _ => return Err(Error::InvalidStyle(format!("color schemes support 2 to 9 classes, got {k}"))),
    };
    hex.into_iter().map(|h| h.parse()).collect()
}
