use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dormancy::connection::{LogConnection, Matrix2};
use dormancy::{GaloisField, RatFunc};
use serde::Deserialize;

/// One matrix entry as ascending integer coefficient lists.
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct EntryCoefficients {
    #[serde(default)]
    pub num: Vec<i64>,
    #[serde(default = "one")]
    pub den: Vec<i64>,
}

fn one() -> Vec<i64> {
    vec![1]
}

/// ```toml
/// p = 5
/// points = [0]
/// splitting = [1, -1]
///
/// [matrix]
/// a11 = { num = [1], den = [0, 1] }
/// a22 = { num = [-1], den = [0, 1] }
/// ```
/// Missing entries are zero.
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ConnectionFile {
    pub p: u64,
    pub points: Vec<u64>,
    pub splitting: [i64; 2],
    #[serde(default)]
    pub matrix: BTreeMap<String, EntryCoefficients>,
}

impl ConnectionFile {
    pub fn parse(text: &str) -> Result<ConnectionFile> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<ConnectionFile> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        ConnectionFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn build(&self) -> Result<LogConnection> {
        let field = GaloisField::prime(self.p)?;
        for key in self.matrix.keys() {
            if !["a11", "a12", "a21", "a22"].contains(&key.as_str()) {
                bail!("unknown matrix entry `{key}` (expected a11, a12, a21, a22)");
            }
        }
        let entry = |key: &str| -> Result<RatFunc> {
            match self.matrix.get(key) {
                None => Ok(RatFunc::zero(field)),
                Some(e) => RatFunc::from_ints(field, &e.num, &e.den)
                    .with_context(|| format!("entry {key}")),
            }
        };
        let matrix: Matrix2<RatFunc> = [
            [entry("a11")?, entry("a12")?],
            [entry("a21")?, entry("a22")?],
        ];
        let points = self
            .points
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LogConnection::new(
            points,
            matrix,
            (self.splitting[0], self.splitting[1]),
        )?)
    }
}
