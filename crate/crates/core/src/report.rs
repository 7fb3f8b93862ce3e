//! An ordered result tree with two renderings.
//!
//! Every report in the crate converts to a [`Tree`]. Map keys keep their
//! insertion order and every number is carried as a decimal string, so both
//! renderings are byte-stable.
//!
//! The text rendering is an indented outline:
//!
//! ```text
//! key: scalar
//! key:
//!   nested: scalar
//! list:
//!   - scalar
//!   -
//!     nested: scalar
//! ```
//!
//! Absent values render as `~` in text and `null` in JSON.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tree {
    Null,
    Bool(bool),
    Str(String),
    List(Vec<Tree>),
    Map(Vec<(String, Tree)>),
}

impl Tree {
    pub fn map() -> MapBuilder {
        MapBuilder(Vec::new())
    }

    pub fn str(s: impl ToString) -> Tree {
        Tree::Str(s.to_string())
    }

    pub fn list<I, T>(items: I) -> Tree
    where
        I: IntoIterator<Item = T>,
        T: Into<Tree>,
    {
        Tree::List(items.into_iter().map(Into::into).collect())
    }

    /// Looks up a key of a map node.
    pub fn get(&self, key: &str) -> Option<&Tree> {
        match self {
            Tree::Map(entries) => entries.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Tree::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serialization is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Tree::Map(_) | Tree::List(_) => write_block(self, 0, &mut out),
            scalar => {
                out.push_str(&scalar_text(scalar));
                out.push('\n');
            }
        }
        out
    }
}

fn scalar_text(tree: &Tree) -> String {
    match tree {
        Tree::Null => "~".into(),
        Tree::Bool(b) => b.to_string(),
        Tree::Str(s) => s.clone(),
        Tree::List(items) if items.is_empty() => "[]".into(),
        Tree::Map(entries) if entries.is_empty() => "{}".into(),
        _ => unreachable!("not a scalar"),
    }
}

fn is_block(tree: &Tree) -> bool {
    match tree {
        Tree::List(items) => !items.is_empty(),
        Tree::Map(entries) => !entries.is_empty(),
        _ => false,
    }
}

fn write_block(tree: &Tree, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match tree {
        Tree::Map(entries) => {
            for (key, value) in entries {
                if is_block(value) {
                    out.push_str(&format!("{pad}{key}:\n"));
                    write_block(value, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{key}: {}\n", scalar_text(value)));
                }
            }
        }
        Tree::List(items) => {
            for item in items {
                if is_block(item) {
                    out.push_str(&format!("{pad}-\n"));
                    write_block(item, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                }
            }
        }
        _ => unreachable!("not a block"),
    }
}

impl Serialize for Tree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Tree::Null => serializer.serialize_none(),
            Tree::Bool(b) => serializer.serialize_bool(*b),
            Tree::Str(s) => serializer.serialize_str(s),
            Tree::List(items) => {
                let mut seq = serializer.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            Tree::Map(entries) => {
                let mut map = serializer.serialize_map(Some(entries.len()))?;
                for (k, v) in entries {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
    }
}

pub struct MapBuilder(Vec<(String, Tree)>);

impl MapBuilder {
    pub fn entry(mut self, key: &str, value: impl Into<Tree>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }

    pub fn build(self) -> Tree {
        Tree::Map(self.0)
    }
}

impl From<MapBuilder> for Tree {
    fn from(b: MapBuilder) -> Tree {
        b.build()
    }
}

impl From<&str> for Tree {
    fn from(s: &str) -> Tree {
        Tree::Str(s.to_string())
    }
}

impl From<String> for Tree {
    fn from(s: String) -> Tree {
        Tree::Str(s)
    }
}

impl From<bool> for Tree {
    fn from(b: bool) -> Tree {
        Tree::Bool(b)
    }
}

impl<T: Into<Tree>> From<Option<T>> for Tree {
    fn from(v: Option<T>) -> Tree {
        v.map_or(Tree::Null, Into::into)
    }
}

/// Types with a canonical report tree.
pub trait ToTree {
    fn to_tree(&self) -> Tree;
}
