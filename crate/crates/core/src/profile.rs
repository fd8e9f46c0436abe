use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{compositions, ordered_set_partitions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("expected {expected} parts, got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("vertex {0} is missing from every part")]
    Missing(usize),
}

/// An ordered partition `(P_0, P_1, ..., P_c)` of `{1..n}` into possibly
/// empty parts. Part 0 is the isolated vertices of a row; part `k` the
/// endpoints of color-`k` edges. Parts are kept sorted, so the derived
/// ordering is lexicographic on sorted part contents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Profile {
    n: usize,
    c: usize,
    parts: Vec<Vec<usize>>,
}

impl Profile {
    pub fn new(n: usize, c: usize, mut parts: Vec<Vec<usize>>) -> Result<Self, ProfileError> {
        if parts.len() != c + 1 {
            return Err(ProfileError::PartCount { expected: c + 1, got: parts.len() });
        }
        let mut seen = vec![false; n + 1];
        for part in &mut parts {
            part.sort_unstable();
            for &v in part.iter() {
                if v == 0 || v > n {
                    return Err(ProfileError::OutOfRange(v));
                }
                if seen[v] {
                    return Err(ProfileError::Repeated(v));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v]) {
            return Err(ProfileError::Missing(v));
        }
        Ok(Profile { n, c, parts })
    }

    pub(crate) fn from_parts_unchecked(n: usize, c: usize, parts: Vec<Vec<usize>>) -> Self {
        Profile { n, c, parts }
    }

    /// `word[v - 1]` is the part containing vertex `v`.
    pub fn from_word(c: usize, word: &[usize]) -> Self {
        let mut parts = vec![Vec::new(); c + 1];
        for (i, &k) in word.iter().enumerate() {
            parts[k].push(i + 1);
        }
        Profile { n: word.len(), c, parts }
    }

    /// The profile placing part 0 first as `{1..n_0}`, then part 1, and so on.
    pub fn sorted_representative(sizes: &[usize]) -> Self {
        assert!(!sizes.is_empty(), "a profile has at least one part");
        let mut next = 1;
        let parts = sizes
            .iter()
            .map(|&s| {
                let part: Vec<usize> = (next..next + s).collect();
                next += s;
                part
            })
            .collect();
        Profile { n: next - 1, c: sizes.len() - 1, parts }
    }

    /// All profiles with the given part sizes, in lexicographic order.
    pub fn all_with_sizes(sizes: &[usize]) -> Vec<Profile> {
        let n = sizes.iter().sum();
        let c = sizes.len() - 1;
        ordered_set_partitions(sizes).into_iter().map(|parts| Profile { n, c, parts }).collect()
    }

    /// Every profile on `n` vertices with `c` colors: sizes in colex order,
    /// then lexicographic.
    pub fn all(n: usize, c: usize) -> Vec<Profile> {
        compositions(n, c + 1).iter().flat_map(|s| Profile::all_with_sizes(s)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn part(&self, k: usize) -> &[usize] {
        &self.parts[k]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Vec<usize>> {
        self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn same_sizes(&self, other: &Profile) -> bool {
        self.c == other.c && self.parts.iter().zip(&other.parts).all(|(a, b)| a.len() == b.len())
    }

    /// Index of the part containing vertex `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.binary_search(&v).is_ok())
    }

    /// Whether `P_k ⊆ other.P_k` for every color part `k` in `1..=c`.
    /// Part 0 is not compared.
    pub fn colors_contained_in(&self, other: &Profile) -> bool {
        (1..=self.c).all(|k| self.parts[k].iter().all(|v| other.parts[k].binary_search(v).is_ok()))
    }

    /// Drops vertex `n` and returns the resulting profile on `n - 1`
    /// vertices together with the part that held it.
    pub fn without_last(&self) -> Option<(Profile, usize)> {
        let last = self.n;
        let j = self.part_of(last)?;
        let mut parts = self.parts.clone();
        parts[j].pop();
        Some((Profile { n: last - 1, c: self.c, parts }, j))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let items: Vec<String> = part.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Profile::new(3, 1, vec![vec![3, 1], vec![2]]).is_ok());
        assert_eq!(Profile::new(3, 1, vec![vec![1]]), Err(ProfileError::PartCount { expected: 2, got: 1 }));
        assert_eq!(Profile::new(2, 1, vec![vec![1], vec![1, 2]]), Err(ProfileError::Repeated(1)));
        assert_eq!(Profile::new(2, 1, vec![vec![1], vec![]]), Err(ProfileError::Missing(2)));
        assert_eq!(Profile::new(2, 1, vec![vec![1], vec![3]]), Err(ProfileError::OutOfRange(3)));
    }

    #[test]
    fn word_and_display() {
        let p = Profile::from_word(2, &[2, 1, 2, 0, 1]);
        assert_eq!(p.to_string(), "({4},{2,5},{1,3})");
        assert_eq!(p.sizes(), vec![1, 2, 2]);
        assert_eq!(p.part_of(5), Some(1));
        let (q, j) = p.without_last().unwrap();
        assert_eq!(j, 1);
        assert_eq!(q.to_string(), "({4},{2},{1,3})");
    }

    #[test]
    fn sorted_representative_layout() {
        let p = Profile::sorted_representative(&[1, 0, 2]);
        assert_eq!(p.parts(), &[vec![1], vec![], vec![2, 3]]);
        assert_eq!(p.n(), 3);
        assert_eq!(p.c(), 2);
    }

    #[test]
    fn containment_ignores_part_zero() {
        let a = Profile::from_word(1, &[1, 0]);
        let b = Profile::from_word(1, &[1, 1]);
        assert!(a.colors_contained_in(&b));
        assert!(!b.colors_contained_in(&a));
    }

    #[test]
    fn all_profiles_count() {
        // (c+1)^n ordered partitions in total
        assert_eq!(Profile::all(3, 2).len(), 27);
        assert_eq!(Profile::all(0, 2).len(), 1);
    }
}
