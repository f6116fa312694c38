//! Semigroup description files.
//!
//! ```json
//! {"type": "cayley", "table": [[0, 0], [1, 1]]}
//! {"type": "transformations", "degree": 2, "generators": [[1, 0], [0, 0]]}
//! ```
//!
//! Indices are 0-based. A Cayley table must be square with entries below its
//! size; transformation images must be below `degree`.

use std::fmt;
use std::path::Path;

use semirep_core::{Error, Semigroup};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Description {
    Cayley { table: Vec<Vec<usize>> },
    Transformations { degree: usize, generators: Vec<Vec<usize>> },
}

#[derive(Debug)]
pub enum InputError {
    Io(String, std::io::Error),
    Syntax(serde_json::Error),
    Field(String),
    Semigroup(Error),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            InputError::Syntax(e) => write!(f, "line {}, column {}: {e}", e.line(), e.column()),
            InputError::Field(msg) => write!(f, "{msg}"),
            InputError::Semigroup(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

impl Description {
    pub fn parse(text: &str) -> Result<Description, InputError> {
        serde_json::from_str(text).map_err(InputError::Syntax)
    }

    pub fn build(&self) -> Result<Semigroup, InputError> {
        match self {
            Description::Cayley { table } => Semigroup::from_cayley_table(table).map_err(|e| match e {
                Error::IndexOutOfRange { row, col, value, size } => InputError::Field(format!(
                    "table[{row}][{col}]: entry {value} is out of range for size {size}"
                )),
                e => InputError::Semigroup(e),
            }),
            Description::Transformations { degree, generators } => {
                if *degree == 0 {
                    return Err(InputError::Field("degree: must be positive".into()));
                }
                if generators.is_empty() {
                    return Err(InputError::Field("generators: at least one is required".into()));
                }
                for (i, g) in generators.iter().enumerate() {
                    if g.len() != *degree {
                        return Err(InputError::Field(format!(
                            "generators[{i}]: has {} images, expected {degree}",
                            g.len()
                        )));
                    }
                    if let Some(k) = g.iter().position(|&x| x >= *degree) {
                        return Err(InputError::Field(format!(
                            "generators[{i}][{k}]: image {} is not below degree {degree}",
                            g[k]
                        )));
                    }
                }
                Semigroup::from_transformations(generators).map_err(InputError::Semigroup)
            }
        }
    }
}

pub fn load(path: &Path) -> Result<Semigroup, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io(path.display().to_string(), e))?;
    Description::parse(&text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        let c = Description::parse(r#"{"type":"cayley","table":[[0,0],[1,1]]}"#).unwrap();
        assert_eq!(c.build().unwrap().size(), 2);
        let t = Description::parse(r#"{"type":"transformations","degree":2,"generators":[[1,0],[0,0]]}"#).unwrap();
        assert_eq!(t.build().unwrap().size(), 4);
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let e = Description::parse("{\"type\":\"cayley\",\n\"table\":[[0,0],[1]]").unwrap_err();
        assert!(e.to_string().starts_with("line 2"));
        let e = Description::parse(r#"{"type":"cayley","table":[[0,5],[1,1]]}"#).unwrap().build().unwrap_err();
        assert_eq!(e.to_string(), "table[0][1]: entry 5 is out of range for size 2");
        let e = Description::parse(r#"{"type":"transformations","degree":2,"generators":[[1,0,1]]}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(e.to_string().starts_with("generators[0]"));
        let e = Description::parse(r#"{"type":"transformations","degree":2,"generators":[[1,2]]}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(e.to_string().starts_with("generators[0][1]"));
        assert!(Description::parse(r#"{"type":"matrix","table":[]}"#).is_err());
        assert!(Description::parse(r#"{"type":"cayley","table":[[0]],"extra":1}"#).is_err());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let e = Description::parse(r#"{"type":"cayley","table":[[0,1],[0,0]]}"#).unwrap().build().unwrap_err();
        assert!(matches!(e, InputError::Semigroup(Error::NonAssociative(..))));
    }
}
