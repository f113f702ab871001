use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered list of variable names shared by every polynomial built over it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || !a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidArgument(format!("bad variable name `{a}`")));
            }
            if !a.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::InvalidArgument(format!("bad variable name `{a}`")));
            }
            if names[..i].contains(a) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{a}`")));
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The knot ring `Z[u±, x±, d±]`.
    pub fn knot() -> Self {
        VarSet::new(&["u", "x", "d"]).unwrap()
    }

    /// The ring `Z[x±, d±]` of the quotient tower.
    pub fn xd() -> Self {
        VarSet::new(&["x", "d"]).unwrap()
    }

    /// Single-variable ring.
    pub fn single(name: &str) -> Self {
        VarSet::new(&[name]).unwrap()
    }

    /// The link ring `Z[u_i±, x_i±, y±, d±]` for `l` components.
    pub fn link(l: usize) -> Self {
        let mut names: Vec<String> = (1..=l).map(|i| format!("u{i}")).collect();
        names.extend((1..=l).map(|i| format!("x{i}")));
        names.push("y".into());
        names.push("d".into());
        VarSet::new(&names).unwrap()
    }

    /// Colour variables `s1..sl` for root-of-unity values.
    pub fn colours(l: usize) -> Self {
        let names: Vec<String> = if l == 1 {
            vec!["s".into()]
        } else {
            (1..=l).map(|i| format!("s{i}")).collect()
        };
        VarSet::new(&names).unwrap()
    }

    pub(crate) fn describe(&self) -> String {
        self.0.join(",")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet[{}]", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarSet::new(&["x", "x"]).is_err());
        assert!(VarSet::new(&["1x"]).is_err());
        assert!(VarSet::new(&["x^"]).is_err());
        assert!(VarSet::new::<&str>(&[]).is_ok());
    }

    #[test]
    fn link_layout() {
        let v = VarSet::link(2);
        assert_eq!(v.names(), &["u1", "u2", "x1", "x2", "y", "d"]);
        assert_eq!(v.index("y"), Some(4));
        assert_eq!(VarSet::colours(1).names(), &["s"]);
    }
}
