use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};

/// Absolute tolerance used for every row and bound check.
pub const TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    Continuous,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

impl Sense {
    pub fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Eq => "=",
            Sense::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub usize);

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(VarId, f64)>,
    pub sense: Sense,
    pub rhs: f64,
}

impl Constraint {
    pub fn activity(&self, values: &[f64]) -> f64 {
        self.terms.iter().map(|&(v, c)| c * values[v.0]).sum()
    }

    pub fn is_satisfied(&self, values: &[f64]) -> bool {
        let lhs = self.activity(values);
        match self.sense {
            Sense::Le => lhs <= self.rhs + TOLERANCE,
            Sense::Ge => lhs >= self.rhs - TOLERANCE,
            Sense::Eq => (lhs - self.rhs).abs() <= TOLERANCE,
        }
    }
}

/// Variable name to value.
pub type Assignment = BTreeMap<String, f64>;

/// Solver-agnostic minimization model: typed bounded variables, named linear
/// rows and a linear objective. Metadata pairs are carried into emitted files
/// as comments.
#[derive(Debug, Clone, Default)]
pub struct MipModel {
    pub name: String,
    variables: Vec<Variable>,
    constraints: Vec<Constraint>,
    objective: Vec<(VarId, f64)>,
    metadata: Vec<(String, String)>,
    by_name: HashMap<String, VarId>,
    row_names: HashMap<String, usize>,
}

impl MipModel {
    pub fn new(name: impl Into<String>) -> Self {
        MipModel { name: name.into(), ..Default::default() }
    }

    pub fn add_var(&mut self, name: impl Into<String>, kind: VarKind, lower: f64, upper: f64) -> Result<VarId> {
        let name = name.into();
        if self.by_name.contains_key(&name) {
            return Err(Error::DuplicateVariable(name));
        }
        let id = VarId(self.variables.len());
        self.by_name.insert(name.clone(), id);
        self.variables.push(Variable { name, kind, lower, upper });
        Ok(id)
    }

    pub fn add_binary(&mut self, name: impl Into<String>) -> Result<VarId> {
        self.add_var(name, VarKind::Binary, 0.0, 1.0)
    }

    pub fn add_continuous(&mut self, name: impl Into<String>, lower: f64, upper: f64) -> Result<VarId> {
        self.add_var(name, VarKind::Continuous, lower, upper)
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: Vec<(VarId, f64)>,
        sense: Sense,
        rhs: f64,
    ) -> Result<()> {
        let name = name.into();
        if self.row_names.contains_key(&name) {
            return Err(Error::DuplicateConstraint(name));
        }
        if let Some((v, _)) = terms.iter().find(|(v, _)| v.0 >= self.variables.len()) {
            return Err(Error::InvalidArgument(format!("row `{name}` references undeclared variable #{}", v.0)));
        }
        self.row_names.insert(name.clone(), self.constraints.len());
        self.constraints.push(Constraint { name, terms, sense, rhs });
        Ok(())
    }

    pub fn set_objective(&mut self, terms: Vec<(VarId, f64)>) {
        self.objective = terms;
    }

    pub fn push_metadata(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.metadata.push((key.into(), value.into()));
    }

    pub fn metadata(&self) -> &[(String, String)] {
        &self.metadata
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable(&self, id: VarId) -> &Variable {
        &self.variables[id.0]
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn constraint(&self, name: &str) -> Option<&Constraint> {
        self.row_names.get(name).map(|&i| &self.constraints[i])
    }

    pub fn objective(&self) -> &[(VarId, f64)] {
        &self.objective
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    /// Drops every row matching `pred`. Used to build deliberately broken
    /// models when testing the verifiers.
    pub fn remove_constraints_where(&mut self, pred: impl Fn(&Constraint) -> bool) {
        self.constraints.retain(|c| !pred(c));
        self.row_names = self.constraints.iter().enumerate().map(|(i, c)| (c.name.clone(), i)).collect();
    }

    pub fn objective_value(&self, values: &[f64]) -> f64 {
        self.objective.iter().map(|&(v, c)| c * values[v.0]).sum()
    }

    /// Bounds, integrality and every row, within [`TOLERANCE`]. `values` is
    /// indexed by variable id.
    pub fn is_satisfied(&self, values: &[f64]) -> bool {
        self.first_violation(values).is_none()
    }

    /// Name of the first violated bound or row, if any.
    pub fn first_violation(&self, values: &[f64]) -> Option<String> {
        assert_eq!(values.len(), self.variables.len());
        for (var, &val) in self.variables.iter().zip(values) {
            if !val.is_finite() || val < var.lower - TOLERANCE || val > var.upper + TOLERANCE {
                return Some(format!("bounds of {}", var.name));
            }
            if var.kind == VarKind::Binary && (val - val.round()).abs() > TOLERANCE {
                return Some(format!("integrality of {}", var.name));
            }
        }
        self.constraints.iter().find(|c| !c.is_satisfied(values)).map(|c| c.name.clone())
    }

    /// Converts a named assignment to a dense value vector.
    pub fn values_from(&self, assignment: &Assignment) -> Result<Vec<f64>> {
        self.variables
            .iter()
            .map(|v| assignment.get(&v.name).copied().ok_or_else(|| Error::MissingVariable(v.name.clone())))
            .collect()
    }

    pub fn assignment_from(&self, values: &[f64]) -> Assignment {
        self.variables.iter().zip(values).map(|(v, &x)| (v.name.clone(), x)).collect()
    }
}

/// True iff `assignment` satisfies every bound, integrality requirement and
/// row of `m` within an absolute tolerance of `1e-6`.
pub fn check_integer_point(m: &MipModel, assignment: &Assignment) -> Result<bool> {
    Ok(m.is_satisfied(&m.values_from(assignment)?))
}
