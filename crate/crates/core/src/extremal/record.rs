use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How a minimum over `G(n, m)` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every labeled graph.
    Exhaustive,
    /// One representative per isomorphism class.
    Canonical,
    /// Edge-swap descent; the value is an upper bound.
    LocalSearch,
}

impl Mode {
    pub fn is_exact(self) -> bool {
        !matches!(self, Mode::LocalSearch)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Canonical => "canonical",
            Mode::LocalSearch => "local-search",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "canonical" => Ok(Mode::Canonical),
            "local-search" => Ok(Mode::LocalSearch),
            other => Err(Error::Argument(format!(
                "unknown mode {other:?} (expected exhaustive, canonical or local-search)"
            ))),
        }
    }
}

/// Nonnegative rational kept as a reduced integer pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Argument("zero denominator".into()));
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    /// Decimal rendering with six places, rounded half up.
    pub fn decimal(&self) -> String {
        let scaled = (self.num as u128 * 1_000_000 * 2 + self.den as u128) / (2 * self.den as u128);
        format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses `NUM/DEN` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Argument(format!("expected a rational NUM/DEN, got {s:?}"));
        let (num, den) = match s.trim().split_once('/') {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Fraction::new(num, den)
    }
}

/// `Δ_r(n, m)` for one `(n, m, r)` with a minimizing witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    /// Exact minimum for exhaustive and canonical modes, an upper bound otherwise.
    pub delta_min: usize,
    pub mode: Mode,
    /// graph6 of a minimizer.
    pub witness: String,
    /// `2rm/n`.
    pub lower_2rm_over_n: Fraction,
    pub lower_2rm_over_n_decimal: String,
    pub graphs_examined: u64,
}

impl ScanRecord {
    pub(crate) fn new(
        n: usize,
        m: usize,
        r: usize,
        delta_min: usize,
        mode: Mode,
        witness: String,
        graphs_examined: u64,
    ) -> Self {
        let lower = Fraction::new((2 * r * m) as u64, n as u64).expect("n >= 1");
        ScanRecord {
            n,
            m,
            r,
            delta_min,
            mode,
            witness,
            lower_2rm_over_n: lower,
            lower_2rm_over_n_decimal: lower.decimal(),
            graphs_examined,
        }
    }

    /// `2rm ≤ Δ·n`.
    pub fn meets_lower_bound(&self) -> bool {
        self.delta_min * self.n >= 2 * self.r * self.m
    }

    /// `Δ·n < 2rm + rn`.
    pub fn below_upper_bound(&self) -> bool {
        self.delta_min * self.n < 2 * self.r * self.m + self.r * self.n
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    m: usize,
    r: usize,
    mode: &'a str,
    delta_min: usize,
    ratio_num: u64,
    ratio_den: u64,
    witness_g6: &'a str,
    graphs_examined: u64,
}

pub const CSV_HEADER: &str = "n,m,r,mode,delta_min,ratio_num,ratio_den,witness_g6,graphs_examined";

pub fn write_csv<'a, W: Write, I: IntoIterator<Item = &'a ScanRecord>>(out: W, records: I) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    for rec in records {
        w.serialize(CsvRow {
            n: rec.n,
            m: rec.m,
            r: rec.r,
            mode: rec.mode.as_str(),
            delta_min: rec.delta_min,
            ratio_num: rec.lower_2rm_over_n.num,
            ratio_den: rec.lower_2rm_over_n.den,
            witness_g6: &rec.witness,
            graphs_examined: rec.graphs_examined,
        })
        .map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string<'a, I: IntoIterator<Item = &'a ScanRecord>>(records: I) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(&mut buf, records)?;
    if buf.is_empty() {
        buf.extend_from_slice(CSV_HEADER.as_bytes());
        buf.push(b'\n');
    }
    String::from_utf8(buf).map_err(|e| Error::Io(e.to_string()))
}
