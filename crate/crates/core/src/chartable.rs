//! Character tables: one row per vector of vertical-edge counts
//! `(ℓ_1, ..., ℓ_c)`, one column per irreducible label.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::combinatorics::compositions;
use crate::diagram::{Diagram, Edge};
use crate::repr::{character, character_by_trace, IrrepLabel};
use crate::witness::{VerifyError, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRow {
    /// `(ℓ_1, ..., ℓ_c)`
    pub vertical: Vec<usize>,
    pub values: Vec<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub c: usize,
    pub labels: Vec<IrrepLabel>,
    pub rows: Vec<CharacterRow>,
}

/// A diagram with only vertical edges: `ℓ_1` of color 1 on the leftmost
/// vertices, then `ℓ_2` of color 2, and so on.
pub fn vertical_representative(n: usize, c: usize, vertical: &[usize]) -> Diagram {
    assert_eq!(vertical.len(), c);
    assert!(vertical.iter().sum::<usize>() <= n);
    let mut edges = Vec::new();
    let mut v = 1;
    for (k, &count) in vertical.iter().enumerate() {
        for _ in 0..count {
            edges.push(Edge::new(v, v, k + 1));
            v += 1;
        }
    }
    Diagram::new(n, c, edges).expect("vertical edges form a valid diagram")
}

/// Closed-form character table. Rows follow the colex order of
/// `(n - Σℓ, ℓ_1, ..., ℓ_c)`, columns the colex order of labels.
pub fn character_table(n: usize, c: usize) -> CharacterTable {
    let labels = IrrepLabel::all(n, c);
    let rows = compositions(n, c + 1)
        .into_iter()
        .map(|counts| {
            let vertical = counts[1..].to_vec();
            let d = vertical_representative(n, c, &vertical);
            let values = labels.iter().map(|l| character(&d, l).expect("shapes agree")).collect();
            CharacterRow { vertical, values }
        })
        .collect();
    CharacterTable { n, c, labels, rows }
}

impl CharacterTable {
    /// Header `l1|...|lc,<label>,...` with labels written `n0|n1|...|nc`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let key: Vec<String> = (1..=self.c).map(|i| format!("l{i}")).collect();
        out.push_str(&key.join("|"));
        for l in &self.labels {
            out.push(',');
            out.push_str(&l.pipe_key());
        }
        out.push('\n');
        for row in &self.rows {
            let key: Vec<String> = row.vertical.iter().map(usize::to_string).collect();
            out.push_str(&key.join("|"));
            for v in &row.values {
                write!(out, ",{v}").expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }

    /// Recomputes every entry as the trace of the action matrix.
    pub fn verify_by_trace(&self) -> Result<(), VerifyError> {
        for row in &self.rows {
            let d = vertical_representative(self.n, self.c, &row.vertical);
            for (label, value) in self.labels.iter().zip(&row.values) {
                let trace = character_by_trace(&d, label).map_err(|e| VerifyError::Invalid(e.to_string()))?;
                if &trace != value {
                    return Err(VerifyError::Failed(
                        Witness::new("character table entry differs from the trace", vec![d.clone()])
                            .with_detail(format!("label {label}: table {value}, trace {trace}")),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_planar;
    use std::collections::HashMap;

    #[test]
    fn n2_c1_table() {
        let t = character_table(2, 1);
        assert_eq!(t.to_csv(), "l1,2|0,1|1,0|2\n0,1,0,0\n1,1,1,0\n2,1,2,1\n");
        t.verify_by_trace().unwrap();
    }

    #[test]
    fn all_isolated_column_is_constant_one() {
        for (n, c) in [(3, 1), (3, 2), (2, 3)] {
            let t = character_table(n, c);
            let col = t.labels.iter().position(|l| l.parts()[0] == n).unwrap();
            assert!(t.rows.iter().all(|r| r.values[col] == BigUint::from(1u32)));
        }
    }

    #[test]
    fn zero_vertical_row_vanishes_off_the_trivial_label() {
        let t = character_table(3, 2);
        let row = &t.rows[0];
        assert_eq!(row.vertical, vec![0, 0]);
        for (l, v) in t.labels.iter().zip(&row.values) {
            assert_eq!(*v == BigUint::from(1u32), l.parts()[1..].iter().all(|&p| p == 0));
        }
    }

    #[test]
    fn character_depends_only_on_vertical_counts() {
        let labels = IrrepLabel::all(3, 2);
        let mut seen: HashMap<Vec<usize>, Vec<BigUint>> = HashMap::new();
        for d in enumerate_planar(3, 2) {
            let values: Vec<BigUint> = labels.iter().map(|l| character_by_trace(&d, l).unwrap()).collect();
            let prior = seen.entry(d.vertical_counts()).or_insert_with(|| values.clone());
            assert_eq!(*prior, values, "{d}");
        }
    }

    #[test]
    fn tables_verify_by_trace() {
        for (n, c) in [(4, 1), (3, 2), (2, 3)] {
            character_table(n, c).verify_by_trace().unwrap();
        }
    }
}
