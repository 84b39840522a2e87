use std::fmt::Display;

use num_rational::Ratio;
use serde::Serializer;

/// Writes a ratio as `"p/q"`, including integral values (`"10/1"`).
pub fn format<T: Clone + Display + num_integer::Integer>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer.
pub fn parse(text: &str) -> Option<Ratio<u64>> {
    match text.split_once('/') {
        Some((p, q)) => {
            let q: u64 = q.trim().parse().ok()?;
            (q != 0).then_some(())?;
            Some(Ratio::new(p.trim().parse().ok()?, q))
        }
        None => text.trim().parse().ok().map(Ratio::from_integer),
    }
}

pub(crate) fn serialize<S, T>(r: &Ratio<T>, s: S) -> Result<S::Ok, S::Error>
where
    S: Serializer,
    T: Clone + Display + num_integer::Integer,
{
    s.serialize_str(&format(r))
}
