//! Tables of Haar values of one order, and their JSON form.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::normalform::{enumerate_basis, StdExponents};
use crate::qfield::QRational;

pub const FORMAT_VERSION: u64 = 1;

/// Haar values of every basis monomial of one order.
#[derive(Clone, Debug, PartialEq)]
pub struct HaarTable {
    pub order: u32,
    pub values: BTreeMap<StdExponents, QRational>,
}

impl HaarTable {
    pub fn get(&self, e: &StdExponents) -> Option<&QRational> {
        self.values.get(e)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let mut vals = Map::new();
        for (e, v) in &self.values {
            vals.insert(e.key(), v.to_json());
        }
        let mut m = Map::new();
        m.insert("order".into(), Value::from(self.order));
        m.insert("values".into(), Value::Object(vals));
        m.insert("format_version".into(), Value::from(FORMAT_VERSION));
        Value::Object(m)
    }

    /// Reads a table, checking the version, that keys are exactly the
    /// basis of the stated order, and that every value is canonical.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |msg: &str| Error::Cache(msg.to_string());
        if v.get("format_version").and_then(Value::as_u64) != Some(FORMAT_VERSION) {
            return Err(bad("unsupported or missing format_version"));
        }
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing order"))? as u32;
        let obj = v
            .get("values")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing values"))?;
        let mut values = BTreeMap::new();
        for (k, x) in obj {
            let e = StdExponents::parse_key(k)?;
            if e.order() != order || !e.is_basis() {
                return Err(Error::Cache(format!("key {k} is not a basis monomial of order {order}")));
            }
            values.insert(e, QRational::from_json(x)?);
        }
        let basis = enumerate_basis(order);
        if values.len() != basis.len() || basis.iter().any(|e| !values.contains_key(e)) {
            return Err(bad("table does not cover the basis"));
        }
        Ok(HaarTable { order, values })
    }

    pub fn cache_path(dir: &Path, m: u32) -> PathBuf {
        dir.join(format!("haar_order_{m}.json"))
    }

    /// Loads a cached table if present.
    pub fn load(dir: &Path, m: u32) -> Result<Option<Self>> {
        let path = Self::cache_path(dir, m);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        let t = Self::from_json(&v).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        if t.order != m {
            return Err(Error::Cache(format!("{} holds order {}", path.display(), t.order)));
        }
        Ok(Some(t))
    }

    /// Writes the table, replacing any previous file atomically.
    pub fn store(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let path = Self::cache_path(dir, self.order);
        let tmp = path.with_extension(format!("json.tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string_pretty(&self.to_json())? + "\n")?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip_and_validation() {
        let t = HaarTable {
            order: 0,
            values: [(StdExponents::default(), QRational::one())].into_iter().collect(),
        };
        let v = t.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"order":0,"values":{"0.0.0.0.0.0":{"num":[1],"den":[1]}},"format_version":1}"#
        );
        assert_eq!(HaarTable::from_json(&v).unwrap(), t);
        let mut broken = v.clone();
        broken["format_version"] = Value::from(2);
        assert!(HaarTable::from_json(&broken).is_err());
        let mut broken = v.clone();
        broken["order"] = Value::from(1);
        assert!(HaarTable::from_json(&broken).is_err());
    }
}
