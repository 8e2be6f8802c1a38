//! Oracles shared by the integration tests. Nothing here calls into the
//! formulation code except to obtain the text to parse.

#![allow(dead_code)]

use std::collections::BTreeMap;

use cvc_core::Graph;

/// Minimal reader for the LP files written by `write_lp`, written against the
/// format rather than the writer.
#[derive(Debug, Default)]
pub struct LpFile {
    pub rows: Vec<LpRow>,
    pub bounds: BTreeMap<String, (f64, f64)>,
    pub binaries: Vec<String>,
    pub objective: Vec<(f64, String)>,
}

#[derive(Debug)]
pub struct LpRow {
    pub name: String,
    pub terms: Vec<(f64, String)>,
    pub sense: String,
    pub rhs: f64,
}

fn parse_terms(tokens: &[&str]) -> Vec<(f64, String)> {
    let mut out = Vec::new();
    let mut sign = 1.0;
    let mut coef: Option<f64> = None;
    for tok in tokens {
        match *tok {
            "+" => sign = 1.0,
            "-" => sign = -1.0,
            t => match t.parse::<f64>() {
                Ok(c) => coef = Some(c),
                Err(_) => {
                    out.push((sign * coef.unwrap_or(1.0), t.to_string()));
                    sign = 1.0;
                    coef = None;
                }
            },
        }
    }
    out
}

pub fn parse_lp(text: &str) -> LpFile {
    let mut lp = LpFile::default();
    let mut section = "";
    let mut pending = String::new();
    let mut statements = Vec::new();
    for line in text.lines() {
        if line.starts_with('\\') {
            continue;
        }
        let trimmed = line.trim();
        if matches!(trimmed, "Minimize" | "Subject To" | "Bounds" | "Binaries" | "End") {
            if !pending.is_empty() {
                statements.push((section, std::mem::take(&mut pending)));
            }
            section = match trimmed {
                "Minimize" => "obj",
                "Subject To" => "rows",
                "Bounds" => "bounds",
                "Binaries" => "bin",
                _ => "end",
            };
            continue;
        }
        // continuation lines are indented further than a statement start
        if !line.starts_with("   ") && !pending.is_empty() {
            statements.push((section, std::mem::take(&mut pending)));
        }
        pending.push(' ');
        pending.push_str(trimmed);
    }
    assert_eq!(section, "end", "missing End");
    for (section, stmt) in statements {
        let tokens: Vec<&str> = stmt.split_whitespace().collect();
        match section {
            "obj" => lp.objective = parse_terms(&tokens[1..]),
            "rows" => {
                let name = tokens[0].trim_end_matches(':').to_string();
                let k = tokens.iter().position(|t| matches!(*t, "<=" | ">=" | "=")).expect("sense");
                lp.rows.push(LpRow {
                    name,
                    terms: parse_terms(&tokens[1..k]),
                    sense: tokens[k].to_string(),
                    rhs: tokens[k + 1].parse().unwrap(),
                });
            }
            "bounds" => {
                let (name, lo, hi) = match tokens.as_slice() {
                    [lo, "<=", name, "<=", hi] => (*name, lo.parse().unwrap(), hi.parse().unwrap()),
                    [name, "=", v] => (*name, v.parse().unwrap(), v.parse().unwrap()),
                    [name, ">=", lo] => (*name, lo.parse().unwrap(), f64::INFINITY),
                    other => panic!("bad bound {other:?}"),
                };
                lp.bounds.insert(name.to_string(), (lo, hi));
            }
            "bin" => lp.binaries.extend(tokens.iter().map(|t| t.to_string())),
            _ => {}
        }
    }
    lp
}

impl LpFile {
    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.binaries.clone();
        names.extend(self.bounds.keys().cloned());
        names
    }

    /// Feasibility of a point under the parsed file, with absolute tolerance 1e-6.
    pub fn satisfied(&self, point: &BTreeMap<String, f64>) -> bool {
        let tol = 1e-6;
        for b in &self.binaries {
            let v = point[b];
            if (v - v.round()).abs() > tol || v < -tol || v > 1.0 + tol {
                return false;
            }
        }
        for (name, &(lo, hi)) in &self.bounds {
            let v = point[name];
            if v < lo - tol || v > hi + tol {
                return false;
            }
        }
        self.rows.iter().all(|row| {
            let lhs: f64 = row.terms.iter().map(|(c, name)| c * point[name]).sum();
            match row.sense.as_str() {
                "<=" => lhs <= row.rhs + tol,
                ">=" => lhs >= row.rhs - tol,
                _ => (lhs - row.rhs).abs() <= tol,
            }
        })
    }
}

/// Number of spanning trees, as the determinant of a reduced Laplacian
/// computed with fraction-free elimination.
pub fn spanning_tree_count(g: &Graph) -> i128 {
    let n = g.n();
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a: Vec<Vec<i128>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i128
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for p in 0..k {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

/// Articulation points by deleting each vertex and counting components.
pub fn cut_vertices_by_deletion(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let components = |skip: Option<usize>| {
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in (0..n).filter(|&v| Some(v) != skip) {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if Some(w) != skip && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    };
    let base = components(None);
    (0..n).filter(|&v| components(Some(v)) > base).collect()
}
