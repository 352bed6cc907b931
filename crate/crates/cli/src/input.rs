//! Reading JSON inputs. A string that names no existing file is read as a
//! standard category name such as `walking-arrow` or `chain:3`.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use ensketch::fcat::{FCategoryDoc, FMap, FObject, FObjectDoc, FiniteFCategory};
use ensketch::fincat::{CategorySpec, FiniteCategory, FunctorDoc};
use ensketch::{Error, Result};

/// An F-map written as its two objects and the functor on loose parts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FMapDoc {
    pub source: FObjectDoc,
    pub target: FObjectDoc,
    pub loose: FunctorDoc,
}

impl FMapDoc {
    pub fn build(&self) -> Result<FMap> {
        let (s, t) = (self.source.build()?, self.target.build()?);
        let loose = self.loose.build(&s.loose, &t.loose)?;
        FMap::from_loose(&s, &t, loose).ok_or_else(|| Error::Invalid("the map sends a tight object to a loose one".into()))
    }
}

/// Any document `validate` accepts.
pub enum Document {
    Category(FiniteCategory),
    FObject(FObject),
    FCategory(FiniteFCategory),
    FMap(FMap),
}

pub fn read_json(path: &str) -> Result<Value> {
    if !Path::new(path).exists() {
        return Ok(Value::String(path.to_string()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn parse<T: DeserializeOwned>(path: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn has(v: &Value, key: &str) -> bool {
    v.get(key).is_some()
}

/// Builds whichever kind of document the file holds, judged by its keys.
pub fn document(path: &str) -> Result<Document> {
    let v = read_json(path)?;
    if has(&v, "homs") {
        Ok(Document::FCategory(parse::<FCategoryDoc>(path, v)?.build()?))
    } else if has(&v, "loose_cat") {
        Ok(Document::FObject(parse::<FObjectDoc>(path, v)?.build()?))
    } else if has(&v, "source") && has(&v, "loose") {
        Ok(Document::FMap(parse::<FMapDoc>(path, v)?.build()?))
    } else {
        Ok(Document::Category(parse::<CategorySpec>(path, v)?.build()?))
    }
}

pub fn category(path: &str) -> Result<Arc<FiniteCategory>> {
    Ok(Arc::new(parse::<CategorySpec>(path, read_json(path)?)?.build()?))
}

/// An F-object, or a category read as the chordate F-object on it.
pub fn fobject(path: &str) -> Result<FObject> {
    let v = read_json(path)?;
    if has(&v, "loose_cat") {
        parse::<FObjectDoc>(path, v)?.build()
    } else {
        Ok(FObject::chordate(Arc::new(parse::<CategorySpec>(path, v)?.build()?)))
    }
}

pub fn fmap(path: &str) -> Result<FMap> {
    parse::<FMapDoc>(path, read_json(path)?)?.build()
}
