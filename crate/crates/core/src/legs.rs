//! Conjugacy classes in `GL_n` given by Jordan type, and the type-A legs
//! of their minimal markings.
//!
//! Eigenvalues are opaque labels. For an eigenvalue whose Jordan blocks have
//! sizes `π = (π_1 ≥ π_2 ≥ …)`, applying one more factor `(A − λ)` after
//! `t` uses drops the rank by `π'_{t+1}`, the number of blocks of size
//! greater than `t`. Everything below is computed from these counts.

use std::fmt;

use crate::error::{Error, Result};

/// Conjugate (transposed) partition.
pub fn conjugate_partition(parts: &[u64]) -> Vec<u64> {
    let largest = parts.first().copied().unwrap_or(0);
    (1..=largest)
        .map(|i| parts.iter().filter(|&&p| p >= i).count() as u64)
        .collect()
}

/// A conjugacy class: eigenvalue labels with the Jordan block sizes of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanClass {
    n: u64,
    entries: Vec<(String, Vec<u64>)>,
}

impl JordanClass {
    /// Validates labels and partitions; parts are sorted into weakly
    /// decreasing order.
    pub fn new<L: Into<String>>(entries: impl IntoIterator<Item = (L, Vec<u64>)>) -> Result<Self> {
        let mut out: Vec<(String, Vec<u64>)> = Vec::new();
        for (label, mut parts) in entries {
            let label = label.into();
            if out.iter().any(|(l, _)| *l == label) {
                return Err(Error::validation(format!(
                    "eigenvalue label `{label}` repeated in a class"
                )));
            }
            if parts.is_empty() || parts.contains(&0) {
                return Err(Error::validation(format!(
                    "eigenvalue `{label}` needs a partition of positive parts"
                )));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.push((label, parts));
        }
        if out.is_empty() {
            return Err(Error::validation(
                "a conjugacy class needs at least one eigenvalue",
            ));
        }
        let n = out.iter().map(|(_, p)| p.iter().sum::<u64>()).sum();
        Ok(JordanClass { n, entries: out })
    }

    /// Diagonalizable with `n` distinct eigenvalues `e1, …, en`.
    pub fn regular_semisimple(n: u64) -> Self {
        assert!(n >= 1);
        JordanClass {
            n,
            entries: (1..=n).map(|i| (format!("e{i}"), vec![1])).collect(),
        }
    }

    /// The scalar class in `GL_n`.
    pub fn central(n: u64) -> Self {
        assert!(n >= 1);
        JordanClass {
            n,
            entries: vec![("e1".to_string(), vec![1; n as usize])],
        }
    }

    pub fn size(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[(String, Vec<u64>)] {
        &self.entries
    }

    pub fn is_central(&self) -> bool {
        self.entries.len() == 1 && self.entries[0].1.iter().all(|&p| p == 1)
    }

    /// Block direct sum; shared labels have their blocks merged.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (label, parts) in &other.entries {
            match entries.iter_mut().find(|(l, _)| l == label) {
                Some((_, p)) => {
                    p.extend(parts);
                    p.sort_unstable_by(|a, b| b.cmp(a));
                }
                None => entries.push((label.clone(), parts.clone())),
            }
        }
        JordanClass {
            n: self.n + other.n,
            entries,
        }
    }

    /// Degree of the minimal polynomial: the sum of the largest block sizes.
    pub fn min_poly_degree(&self) -> u64 {
        self.entries.iter().map(|(_, p)| p[0]).sum()
    }

    /// `dim C = n² − Σ_λ Σ_i (π'_{λ,i})²`, the dimension of the class.
    pub fn class_dim(&self) -> u64 {
        let centralizer: u64 = self
            .entries
            .iter()
            .flat_map(|(_, p)| conjugate_partition(p))
            .map(|c| c * c)
            .sum();
        self.n * self.n - centralizer
    }

    /// Dimension vector `(n = d_1, …, d_w)` down the leg of the canonical
    /// minimal marking (largest available rank drop first, ties in input
    /// order), `w` the minimal polynomial degree.
    pub fn leg_dims(&self) -> Vec<u64> {
        let drops: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|(_, p)| conjugate_partition(p))
            .collect();
        let mut used = vec![0usize; drops.len()];
        let mut dims = vec![self.n];
        let mut current = self.n;
        loop {
            let best = drops
                .iter()
                .enumerate()
                .filter_map(|(j, d)| d.get(used[j]).map(|&drop| (j, drop)))
                .fold(None, |best: Option<(usize, u64)>, (j, drop)| match best {
                    Some((_, b)) if b >= drop => best,
                    _ => Some((j, drop)),
                });
            let Some((j, drop)) = best else { break };
            used[j] += 1;
            current -= drop;
            if current == 0 {
                break;
            }
            dims.push(current);
        }
        debug_assert_eq!(current, 0);
        debug_assert_eq!(dims.len() as u64, self.min_poly_degree());
        dims
    }

    /// Leg dimensions for an explicit marking, given as the sequence of entry
    /// indices used for the successive factors. `None` unless the sequence is
    /// a minimal marking (entry `j` used exactly `max part of j` times).
    pub fn leg_dims_for_marking(&self, order: &[usize]) -> Option<Vec<u64>> {
        let mut used = vec![0u64; self.entries.len()];
        for &j in order {
            *used.get_mut(j)? += 1;
        }
        if used.iter().zip(&self.entries).any(|(u, (_, p))| *u != p[0]) {
            return None;
        }
        let drops: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|(_, p)| conjugate_partition(p))
            .collect();
        let mut taken = vec![0usize; drops.len()];
        let mut dims = vec![self.n];
        let mut current = self.n;
        for &j in order {
            current -= drops[j][taken[j]];
            taken[j] += 1;
            if current > 0 {
                dims.push(current);
            }
        }
        Some(dims)
    }
}

/// `2 Σ d_k² − 2 Σ d_k d_{k+1}` over a leg, `d_{w+1} = 0`.
pub fn leg_pairing_contribution(dims: &[u64]) -> i64 {
    let sq: i64 = dims.iter().map(|&d| 2 * (d * d) as i64).sum();
    let cross: i64 = dims.windows(2).map(|w| 2 * (w[0] * w[1]) as i64).sum();
    sq - cross
}

impl fmt::Display for JordanClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, parts)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{label}: [")?;
            for (k, p) in parts.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(entries: &[(&str, &[u64])]) -> JordanClass {
        JordanClass::new(entries.iter().map(|(l, p)| (*l, p.to_vec()))).unwrap()
    }

    #[test]
    fn minimal_polynomial_degrees() {
        assert_eq!(JordanClass::regular_semisimple(2).min_poly_degree(), 2);
        assert_eq!(cls(&[("a", &[1])]).min_poly_degree(), 1);
        assert_eq!(cls(&[("l", &[2, 2]), ("m", &[1])]).min_poly_degree(), 3);
    }

    #[test]
    fn class_dimensions() {
        assert_eq!(JordanClass::regular_semisimple(2).class_dim(), 2);
        assert_eq!(JordanClass::central(4).class_dim(), 0);
        assert_eq!(cls(&[("l", &[2, 1])]).class_dim(), 4);
        assert_eq!(cls(&[("l", &[2, 2]), ("m", &[1])]).class_dim(), 16);
    }

    #[test]
    fn legs() {
        assert_eq!(JordanClass::regular_semisimple(2).leg_dims(), vec![2, 1]);
        assert_eq!(JordanClass::central(3).leg_dims(), vec![3]);
        assert_eq!(
            cls(&[("l", &[2, 2]), ("m", &[1])]).leg_dims(),
            vec![5, 3, 1]
        );
    }

    #[test]
    fn explicit_markings() {
        let c = cls(&[("l", &[2, 2]), ("m", &[1])]);
        assert_eq!(c.leg_dims_for_marking(&[0, 0, 1]), Some(vec![5, 3, 1]));
        assert_eq!(c.leg_dims_for_marking(&[0, 1, 0]), Some(vec![5, 3, 2]));
        assert_eq!(c.leg_dims_for_marking(&[1, 0, 0]), Some(vec![5, 4, 2]));
        assert_eq!(c.leg_dims_for_marking(&[0, 1]), None);
        assert_eq!(c.leg_dims_for_marking(&[0, 0, 1, 1]), None);
        let contributions: Vec<i64> = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
            .iter()
            .map(|o| leg_pairing_contribution(&c.leg_dims_for_marking(o).unwrap()))
            .collect();
        assert!(contributions.iter().all(|&x| x == contributions[0]));
    }

    #[test]
    fn leg_contribution_recovers_class_dim() {
        // 2 n² − contribution = dim C
        let c = cls(&[("l", &[3, 1]), ("m", &[2, 2, 1])]);
        let n = c.size() as i64;
        assert_eq!(
            2 * n * n - leg_pairing_contribution(&c.leg_dims()),
            c.class_dim() as i64
        );
    }

    #[test]
    fn validation() {
        assert!(JordanClass::new([("a", vec![1]), ("a", vec![1])]).is_err());
        assert!(JordanClass::new([("a", vec![0])]).is_err());
        assert!(JordanClass::new(Vec::<(String, Vec<u64>)>::new()).is_err());
        let c = cls(&[("a", &[1, 2])]);
        assert_eq!(c.entries()[0].1, vec![2, 1]);
        assert!(JordanClass::central(3).is_central());
        assert!(!cls(&[("a", &[2])]).is_central());
    }

    #[test]
    fn direct_sum_merges_labels() {
        let a = cls(&[("a", &[1]), ("b", &[1])]);
        let b = cls(&[("a", &[2])]);
        let s = a.direct_sum(&b);
        assert_eq!(s.size(), 4);
        assert_eq!(s.entries()[0].1, vec![2, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(
            cls(&[("a", &[2, 1]), ("b", &[1])]).to_string(),
            "{a: [2, 1], b: [1]}"
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn jordan() -> impl Strategy<Value = JordanClass> {
            prop::collection::vec(prop::collection::vec(1u64..=3, 1..=3), 1..=3).prop_map(|ps| {
                JordanClass::new(
                    ps.into_iter()
                        .enumerate()
                        .map(|(i, p)| (format!("l{i}"), p)),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn leg_shape(c in jordan()) {
                let d = c.leg_dims();
                prop_assert_eq!(d[0], c.size());
                prop_assert!(d.windows(2).all(|w| w[0] >= w[1]));
                prop_assert!(*d.last().unwrap() >= 1);
                prop_assert_eq!(d.len() as u64, c.min_poly_degree());
            }

            #[test]
            fn class_dim_parity(c in jordan()) {
                prop_assert_eq!(c.class_dim() % 2, 0);
                prop_assert_eq!(c.class_dim() == 0, c.is_central());
                let n = c.size() as i64;
                prop_assert_eq!(2 * n * n - leg_pairing_contribution(&c.leg_dims()), c.class_dim() as i64);
            }
        }
    }
}
