//! Machine-readable output documents. The JSON layout is part of the CLI
//! contract: fixed key order, `u` explicitly null for simplex codes, and
//! distribution keys as decimal strings in ascending numeric order.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use zqcodes::code::{GeneratorMatrix, WeightDistribution};
use zqcodes::construct::CodeSpec;

/// Weight-to-count map with string keys on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistributionMap(pub BTreeMap<u64, u64>);

impl From<&WeightDistribution> for DistributionMap {
    fn from(dist: &WeightDistribution) -> Self {
        Self(dist.counts().iter().map(|(&w, &c)| (w as u64, c)).collect())
    }
}

impl Serialize for DistributionMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (weight, count) in &self.0 {
            map.serialize_entry(&weight.to_string(), count)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for DistributionMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MapVisitor;

        impl<'de> Visitor<'de> for MapVisitor {
            type Value = DistributionMap;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from decimal weight strings to counts")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, u64>()? {
                    let weight = key
                        .parse::<u64>()
                        .map_err(|_| serde::de::Error::custom(format!("bad weight key {key:?}")))?;
                    out.insert(weight, value);
                }
                Ok(DistributionMap(out))
            }
        }

        deserializer.deserialize_map(MapVisitor)
    }
}

/// The JSON document `wdist` emits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WdistDocument {
    pub family: String,
    pub q: u64,
    pub k: u32,
    pub u: Option<u32>,
    pub n: u64,
    pub method: String,
    pub distribution: DistributionMap,
}

impl WdistDocument {
    pub fn new(spec: &CodeSpec, method: &str, dist: &WeightDistribution) -> Self {
        Self {
            family: spec.family.to_string(),
            q: spec.q,
            k: spec.k,
            u: spec.u,
            n: dist.n() as u64,
            method: method.to_string(),
            distribution: DistributionMap::from(dist),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// The JSON document `construct` emits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub family: String,
    pub q: u64,
    pub k: u32,
    pub u: Option<u32>,
    pub n: u64,
    pub rows: Vec<Vec<u64>>,
}

impl MatrixDocument {
    pub fn new(spec: &CodeSpec, matrix: &GeneratorMatrix) -> Self {
        Self {
            family: spec.family.to_string(),
            q: spec.q,
            k: spec.k,
            u: spec.u,
            n: matrix.n() as u64,
            rows: matrix.rows().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `weight,count` rows in ascending weight order.
pub fn render_csv(dist: &WeightDistribution) -> String {
    let mut out = String::from("weight,count\n");
    for (weight, count) in dist.counts() {
        out.push_str(&format!("{weight},{count}\n"));
    }
    out
}
