//! Serde helpers writing scalars as decimal strings, so arbitrary-precision
//! values survive JSON consumers limited to 53-bit numbers.

use std::fmt::Display;

use serde::ser::SerializeTuple;
use serde::Serializer;

pub fn pair<S: Serializer, T: Display>(v: &(T, T), s: S) -> Result<S::Ok, S::Error> {
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&v.0.to_string())?;
    t.serialize_element(&v.1.to_string())?;
    t.end()
}

pub fn display<S: Serializer, T: Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
