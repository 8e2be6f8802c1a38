//! LP text output.

use std::fmt::Write;

use super::model::{MipModel, VarId, VarKind};

/// Terms per line before wrapping.
const TERMS_PER_LINE: usize = 8;

fn number(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

fn linear(m: &MipModel, terms: &[(VarId, f64)]) -> String {
    if terms.is_empty() {
        return match m.variables().first() {
            Some(v) => format!("0 {}", v.name),
            None => "0".to_string(),
        };
    }
    let mut out = String::new();
    for (i, &(id, coef)) in terms.iter().enumerate() {
        if i > 0 && i % TERMS_PER_LINE == 0 {
            out.push_str("\n  ");
        }
        let sign = if coef < 0.0 { "-" } else { "+" };
        if i == 0 {
            if coef < 0.0 {
                out.push_str("- ");
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let mag = coef.abs();
        if mag != 1.0 {
            let _ = write!(out, "{} ", number(mag));
        }
        out.push_str(&m.variable(id).name);
    }
    out
}

/// Renders `m` in the CPLEX LP dialect: metadata as `\` comment lines, then
/// `Minimize`, `Subject To` (rows in declaration order), `Bounds` for the
/// continuous variables, `Binaries` and `End`. Output depends only on the model.
pub fn write_lp(m: &MipModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\ model: {}", m.name);
    for (key, value) in m.metadata() {
        let _ = writeln!(out, "\\ {key}: {value}");
    }
    out.push_str("Minimize\n");
    let _ = writeln!(out, " obj: {}", linear(m, m.objective()));
    out.push_str("Subject To\n");
    for row in m.constraints() {
        let _ = writeln!(out, " {}: {} {} {}", row.name, linear(m, &row.terms), row.sense.symbol(), number(row.rhs));
    }
    out.push_str("Bounds\n");
    for var in m.variables().iter().filter(|v| v.kind == VarKind::Continuous) {
        if var.lower == var.upper {
            let _ = writeln!(out, " {} = {}", var.name, number(var.lower));
        } else if var.upper.is_infinite() {
            let _ = writeln!(out, " {} >= {}", var.name, number(var.lower));
        } else {
            let _ = writeln!(out, " {} <= {} <= {}", number(var.lower), var.name, number(var.upper));
        }
    }
    let binaries: Vec<&str> =
        m.variables().iter().filter(|v| v.kind == VarKind::Binary).map(|v| v.name.as_str()).collect();
    if !binaries.is_empty() {
        out.push_str("Binaries\n");
        for chunk in binaries.chunks(TERMS_PER_LINE) {
            let _ = writeln!(out, " {}", chunk.join(" "));
        }
    }
    out.push_str("End\n");
    out
}
