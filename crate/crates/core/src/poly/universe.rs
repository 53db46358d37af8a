use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which block a variable belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// A variable of the base ring `K[x_1, ..., x_n]`.
    X,
    /// The scheme coordinate `c_{ij}` (1-based indices).
    C { i: usize, j: usize },
    /// The deformation parameter.
    Param,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

impl Variable {
    pub fn x(name: impl Into<String>) -> Self {
        Variable {
            name: name.into(),
            kind: VarKind::X,
        }
    }

    pub fn c(i: usize, j: usize) -> Self {
        Variable {
            name: c_name(i, j),
            kind: VarKind::C { i, j },
        }
    }

    pub fn param(name: impl Into<String>) -> Self {
        Variable {
            name: name.into(),
            kind: VarKind::Param,
        }
    }

    fn block_key(&self) -> (u8, usize, usize) {
        match self.kind {
            VarKind::X => (0, 0, 0),
            VarKind::C { i, j } => (1, j, i),
            VarKind::Param => (2, 0, 0),
        }
    }
}

/// Display name of the coordinate `c_{ij}`.
pub fn c_name(i: usize, j: usize) -> String {
    format!("c[{i},{j}]")
}

/// Default names for `n` base-ring variables: `x, y, z` up to three, `x1..xn` beyond.
pub fn standard_x_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|k| format!("x{k}")).collect()
    }
}

/// An ordered set of variables shared by every polynomial built over it.
///
/// Variables are stored in canonical order: the x-block in the order given,
/// then the c-block sorted by `(j, i)`, then the parameter. Exponent vectors
/// are indexed by this position.
#[derive(Debug, Clone)]
pub struct Universe {
    vars: Vec<Variable>,
    index: HashMap<String, usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for Universe {}

impl Universe {
    pub fn new(mut vars: Vec<Variable>) -> Result<Arc<Self>> {
        let mut names = HashSet::new();
        let mut keys = HashSet::new();
        let mut params = 0;
        for v in &vars {
            if v.name.is_empty() {
                return Err(Error::InvalidUniverse("empty variable name".into()));
            }
            if !names.insert(v.name.clone()) {
                return Err(Error::InvalidUniverse(format!(
                    "duplicate variable `{}`",
                    v.name
                )));
            }
            match v.kind {
                VarKind::C { i, j } => {
                    if i == 0 || j == 0 {
                        return Err(Error::InvalidUniverse(format!(
                            "c-indices are 1-based, got ({i},{j})"
                        )));
                    }
                    if !keys.insert((i, j)) {
                        return Err(Error::InvalidUniverse(format!(
                            "duplicate c-key ({i},{j})"
                        )));
                    }
                }
                VarKind::Param => params += 1,
                VarKind::X => {}
            }
        }
        if params > 1 {
            return Err(Error::InvalidUniverse(
                "at most one deformation parameter".into(),
            ));
        }
        vars.sort_by_key(|v| v.block_key());
        let index = vars
            .iter()
            .enumerate()
            .map(|(k, v)| (v.name.clone(), k))
            .collect();
        Ok(Arc::new(Universe { vars, index }))
    }

    /// Universe with only base-ring variables.
    pub fn with_x<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        Self::new(names.iter().map(|s| Variable::x(s.as_ref())).collect())
    }

    /// Universe `x-block + c-block (+ parameter)`.
    pub fn with_blocks<S: AsRef<str>>(
        x_names: &[S],
        c_keys: &[(usize, usize)],
        param: Option<&str>,
    ) -> Result<Arc<Self>> {
        let mut vars: Vec<Variable> = x_names.iter().map(|s| Variable::x(s.as_ref())).collect();
        vars.extend(c_keys.iter().map(|&(i, j)| Variable::c(i, j)));
        if let Some(p) = param {
            vars.push(Variable::param(p));
        }
        Self::new(vars)
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var(&self, idx: usize) -> &Variable {
        &self.vars[idx]
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vars[idx].name
    }

    pub fn names(&self) -> Vec<String> {
        self.vars.iter().map(|v| v.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn c_index(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&c_name(i, j))
    }

    pub fn x_indices(&self) -> Vec<usize> {
        self.indices_where(|v| v.kind == VarKind::X)
    }

    pub fn c_indices(&self) -> Vec<usize> {
        self.indices_where(|v| matches!(v.kind, VarKind::C { .. }))
    }

    pub fn param_index(&self) -> Option<usize> {
        self.indices_where(|v| v.kind == VarKind::Param).first().copied()
    }

    fn indices_where(&self, pred: impl Fn(&Variable) -> bool) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| pred(v))
            .map(|(k, _)| k)
            .collect()
    }

    /// Sub-universe keeping the variables accepted by `keep`, in the same order.
    pub fn restrict(&self, keep: impl Fn(&Variable) -> bool) -> Arc<Universe> {
        let vars: Vec<Variable> = self.vars.iter().filter(|v| keep(v)).cloned().collect();
        Universe::new(vars).expect("restriction of a valid universe is valid")
    }

    /// Universe with `extra` variables appended (then re-canonicalized).
    pub fn extend(&self, extra: Vec<Variable>) -> Result<Arc<Universe>> {
        let mut vars = self.vars.clone();
        vars.extend(extra);
        Universe::new(vars)
    }

    /// Whether `a` and `b` denote the same universe (cheap pointer check first).
    pub fn same(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names().join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_puts_c_by_column() {
        let u = Universe::with_blocks(&["x", "y"], &[(2, 1), (1, 2), (1, 1)], Some("t")).unwrap();
        assert_eq!(
            u.names(),
            vec!["x", "y", "c[1,1]", "c[2,1]", "c[1,2]", "t"]
        );
        assert_eq!(u.c_index(1, 2), Some(4));
        assert_eq!(u.param_index(), Some(5));
    }

    #[test]
    fn rejects_duplicates() {
        assert!(Universe::with_x(&["x", "x"]).is_err());
        assert!(Universe::new(vec![Variable::c(1, 1), Variable::c(1, 1)]).is_err());
        assert!(Universe::new(vec![Variable::x("c[1,1]"), Variable::c(1, 1)]).is_err());
        assert!(Universe::new(vec![Variable::param("t"), Variable::param("s")]).is_err());
    }

    #[test]
    fn default_names() {
        assert_eq!(standard_x_names(2), vec!["x", "y"]);
        assert_eq!(standard_x_names(4)[3], "x4");
    }
}
