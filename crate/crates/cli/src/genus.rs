use std::ops::RangeInclusive;
use std::str::FromStr;

use l2mcg::verify::MAX_GENUS;

/// Inclusive genus range written `N` or `A..B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusRange(RangeInclusive<usize>);

impl GenusRange {
    pub fn start(&self) -> usize {
        *self.0.start()
    }

    pub fn iter(&self) -> RangeInclusive<usize> {
        self.0.clone()
    }
}

impl FromStr for GenusRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a genus"))
        };
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        if a > b {
            return Err(format!("empty range {a}..{b}"));
        }
        if a < 2 {
            return Err("genus must be at least 2".into());
        }
        if b > MAX_GENUS {
            return Err(format!(
                "genus {b} exceeds {MAX_GENUS}; degree 3 tensor spaces have g^3 coordinates"
            ));
        }
        Ok(GenusRange(a..=b))
    }
}
