//! Grothendieck-group classes over the canonical tilting basis
//! `{[O(x)] : 0 <= x <= c}`, ordered as `[O]`, `[O(l*xi)]` for `i = 1,2,3`
//! and `1 <= l <= pi-1`, then `[O(c)]`. Every line-bundle class expands as
//! `[O(x)] = sum_i [O(li*xi)] + l[O(c)] - (l+2)[O]` in normal-form
//! coordinates, and a sum of two line-bundle classes determines the pair
//! `{x,y}` up to the closed matching criterion in [`pair_sum_equal`].

use std::fmt;

use crate::bundles::ExtensionBundle;
use crate::lgroup::{LElement, WeightTriple};

/// The canonical tilting basis for a weight triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct K0Basis {
    weights: WeightTriple,
}

impl K0Basis {
    pub fn new(weights: WeightTriple) -> Self {
        K0Basis { weights }
    }

    /// Number of basis classes, `(p1-1) + (p2-1) + (p3-1) + 2`.
    pub fn size(&self) -> usize {
        self.weights.weights().iter().map(|&p| p as usize - 1).sum::<usize>() + 2
    }

    pub fn index_of_zero(&self) -> usize {
        0
    }

    /// Index of `[O(l * x_{axis+1})]` for `1 <= l <= p-1`.
    pub fn index_of_gen(&self, axis: usize, l: i64) -> usize {
        assert!((1..self.weights.weight(axis)).contains(&l));
        let offset: usize = (0..axis)
            .map(|i| self.weights.weight(i) as usize - 1)
            .sum();
        1 + offset + (l as usize - 1)
    }

    pub fn index_of_canonical(&self) -> usize {
        self.size() - 1
    }

    /// Twist of the `idx`-th basis line bundle as an element of `L`.
    pub fn label_element(&self, idx: usize) -> LElement {
        assert!(idx < self.size());
        if idx == 0 {
            return self.weights.zero();
        }
        if idx == self.index_of_canonical() {
            return self.weights.canonical();
        }
        let mut rest = idx - 1;
        for axis in 0..3 {
            let span = self.weights.weight(axis) as usize - 1;
            if rest < span {
                return self.weights.generator(axis).scaled(rest as i64 + 1);
            }
            rest -= span;
        }
        unreachable!()
    }

    pub fn label(&self, idx: usize) -> String {
        let e = self.label_element(idx);
        if e.is_zero() {
            "O".to_string()
        } else {
            format!("O({e})")
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }
}

/// An element of `K0(X)` as an integer vector over the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct K0Class {
    weights: WeightTriple,
    coeffs: Vec<i64>,
}

impl K0Class {
    pub fn zero(weights: WeightTriple) -> Self {
        K0Class {
            weights,
            coeffs: vec![0; K0Basis::new(weights).size()],
        }
    }

    pub fn weights(&self) -> WeightTriple {
        self.weights
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Rank linear form: every basis class is a line bundle, so the rank is
    /// the coefficient sum.
    pub fn rank(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Degree linear form, `deg [O(x)] = delta(x)` on basis classes.
    pub fn degree(&self) -> i64 {
        let b = K0Basis::new(self.weights);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &k)| k * b.label_element(i).delta())
            .sum()
    }

    /// Determinant linear form into `L`, `det [O(x)] = x` on basis classes.
    pub fn determinant(&self) -> LElement {
        let b = K0Basis::new(self.weights);
        let mut acc = self.weights.zero();
        for (i, &k) in self.coeffs.iter().enumerate() {
            if k != 0 {
                acc = &acc + &b.label_element(i).scaled(k);
            }
        }
        acc
    }
}

impl std::ops::Add for &K0Class {
    type Output = K0Class;
    fn add(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.weights, rhs.weights, "weight mismatch");
        K0Class {
            weights: self.weights,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &K0Class {
    type Output = K0Class;
    fn sub(self, rhs: &K0Class) -> K0Class {
        assert_eq!(self.weights, rhs.weights, "weight mismatch");
        K0Class {
            weights: self.weights,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &K0Class {
    type Output = K0Class;
    fn neg(self) -> K0Class {
        K0Class {
            weights: self.weights,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl serde::Serialize for K0Class {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("K0Class", 2)?;
        st.serialize_field("basis", &K0Basis::new(self.weights).labels())?;
        st.serialize_field("coeffs", &self.coeffs)?;
        st.end()
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = K0Basis::new(self.weights);
        let mut first = true;
        for (i, &k) in self.coeffs.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if first {
                if k < 0 {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if k > 0 { "+" } else { "-" })?;
            }
            if k.abs() != 1 {
                write!(f, "{}", k.abs())?;
            }
            write!(f, "[{}]", b.label(i))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Expansion of `[O(x)]` over the canonical basis.
pub fn line_bundle_class(x: &LElement) -> K0Class {
    let w = x.weights();
    let b = K0Basis::new(w);
    let mut coeffs = vec![0i64; b.size()];
    let l = x.c_coeff();
    coeffs[b.index_of_zero()] -= l + 2;
    for axis in 0..3 {
        let li = x.coords()[axis];
        if li == 0 {
            coeffs[b.index_of_zero()] += 1;
        } else {
            coeffs[b.index_of_gen(axis, li)] += 1;
        }
    }
    coeffs[b.index_of_canonical()] += l;
    K0Class { weights: w, coeffs }
}

/// Class `[O(t+omega)] + [O(t+x)]` of an extension bundle.
pub fn extension_bundle_class(e: &ExtensionBundle) -> K0Class {
    let w = e.weights();
    let a = &e.twist() + &w.omega();
    let b = &e.twist() + e.interior();
    &line_bundle_class(&a) + &line_bundle_class(&b)
}

/// Whether `[O(x)] + [O(y)] = [O(z)] + [O(u)]`, decided by the closed
/// criterion: equal `c`-coefficient sums and, in every coordinate, equal
/// unordered coordinate pairs.
pub fn pair_sum_equal(x: &LElement, y: &LElement, z: &LElement, u: &LElement) -> bool {
    let result = x.c_coeff() + y.c_coeff() == z.c_coeff() + u.c_coeff()
        && (0..3).all(|i| {
            let mut left = [x.coords()[i], y.coords()[i]];
            let mut right = [z.coords()[i], u.coords()[i]];
            left.sort_unstable();
            right.sort_unstable();
            left == right
        });
    debug_assert_eq!(
        result,
        &line_bundle_class(x) + &line_bundle_class(y)
            == &line_bundle_class(z) + &line_bundle_class(u),
        "closed pair-sum criterion disagrees with class expansion for \
         ({x}) + ({y}) vs ({z}) + ({u})"
    );
    result
}
