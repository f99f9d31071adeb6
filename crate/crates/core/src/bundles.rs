//! Rank-two extension bundles `E<x>(t)`: the middle term of the extension of
//! `O(t+x)` by `O(t+omega)` determined by an interior point
//! `x = l1*x1 + l2*x2 + l3*x3`, `0 <= li <= pi-2`. Two such bundles are
//! isomorphic iff their interiors agree (with zero twist difference) or are
//! related by one of the three coordinate flips with its forced twist; the
//! class in `K0` detects this exactly, which is the cross-check wired into
//! every decision here.

use std::fmt;

use num_rational::Ratio;

use crate::lgroup::{LElement, WeightTriple};
use crate::{k0, orbits, Error, Result};

/// Whether `x` is an interior point: normal form `l1*x1+l2*x2+l3*x3` with
/// `0 <= li <= pi - 2`.
pub fn is_interior(x: &LElement) -> bool {
    let w = x.weights();
    x.c_coeff() == 0 && (0..3).all(|i| x.coords()[i] <= w.weight(i) - 2)
}

/// An extension bundle `E<interior>(twist)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionBundle {
    twist: LElement,
    interior: LElement,
}

impl ExtensionBundle {
    pub fn new(twist: LElement, interior: LElement) -> Result<Self> {
        assert_eq!(twist.weights(), interior.weights(), "weight mismatch");
        if !is_interior(&interior) {
            return Err(Error::InvalidInterior(interior.to_string()));
        }
        Ok(ExtensionBundle { twist, interior })
    }

    /// The Auslander bundle `E<0>` of the structure sheaf.
    pub fn auslander(w: WeightTriple) -> Self {
        ExtensionBundle {
            twist: w.zero(),
            interior: w.zero(),
        }
    }

    /// `E<interior>` with zero twist.
    pub fn of_interior(interior: LElement) -> Result<Self> {
        let zero = interior.weights().zero();
        ExtensionBundle::new(zero, interior)
    }

    pub fn weights(&self) -> WeightTriple {
        self.twist.weights()
    }

    pub fn twist(&self) -> LElement {
        self.twist.clone()
    }

    pub fn interior(&self) -> &LElement {
        &self.interior
    }

    /// The line-bundle twist `E(z)`.
    pub fn twisted(&self, z: &LElement) -> Self {
        ExtensionBundle {
            twist: &self.twist + z,
            interior: self.interior.clone(),
        }
    }

    /// Class `[O(t+omega)] + [O(t+x)]` in `K0`.
    pub fn k0_class(&self) -> k0::K0Class {
        k0::extension_bundle_class(self)
    }

    /// Whether this bundle is an Auslander bundle, i.e. a line-bundle twist
    /// of `E<0>`: interior `0` or a full flip `sum_{i != j} (pi-2) xi`.
    pub fn is_auslander(&self) -> bool {
        let w = self.weights();
        if self.interior.is_zero() {
            return true;
        }
        (0..3).any(|j| {
            let mut coords = [0i64; 3];
            for i in 0..3 {
                if i != j {
                    coords[i] = w.weight(i) - 2;
                }
            }
            self.interior.coords() == coords
        })
    }

    /// Lexicographically smallest interior in the Klein-four orbit of the
    /// interior; a twist-independent isomorphism invariant.
    pub fn canonical_rep(&self) -> LElement {
        orbits::KleinAction::new(self.weights())
            .orbit(&self.interior)
            .into_iter()
            .min()
            .expect("orbit is nonempty")
    }

    /// Multiset of line-bundle twists of the projective cover in vect-X:
    /// `{t+omega} ∪ {t+x-(li+1)xi : i}`.
    pub fn projective_cover(&self) -> SummandList {
        let w = self.weights();
        let top = &self.twist + &self.interior;
        let mut items = vec![&self.twist + &w.omega()];
        for i in 0..3 {
            let li = self.interior.coords()[i];
            items.push(&top - &w.generator(i).scaled(li + 1));
        }
        SummandList::new(items)
    }

    /// Multiset of line-bundle twists of the injective hull in vect-X:
    /// `{t+x} ∪ {t+omega+(li+1)xi : i}`, the dual of the cover formula.
    pub fn injective_hull(&self) -> SummandList {
        let w = self.weights();
        let bottom = &self.twist + &w.omega();
        let mut items = vec![&self.twist + &self.interior];
        for i in 0..3 {
            let li = self.interior.coords()[i];
            items.push(&bottom + &w.generator(i).scaled(li + 1));
        }
        SummandList::new(items)
    }

    /// Exact slope `(delta(t+omega) + delta(t+x)) / 2`.
    pub fn slope(&self) -> Ratio<i64> {
        let a = (&self.twist + &self.weights().omega()).delta();
        let b = (&self.twist + &self.interior).delta();
        Ratio::new(a + b, 2)
    }

    /// Stability trichotomy: with `x` the interior, semistable iff
    /// `delta(omega) <= delta(x) <= delta(omega) + 2(li+1) delta(xi)` for
    /// every axis, stable iff all inequalities are strict. Twists never
    /// change the verdict.
    pub fn stability(&self) -> Stability {
        let w = self.weights();
        let dw = w.delta_omega();
        let dx = self.interior.delta();
        let mut stable = dw < dx;
        let mut semistable = dw <= dx;
        for i in 0..3 {
            let bound = dw + 2 * (self.interior.coords()[i] + 1) * w.delta_gen(i);
            stable &= dx < bound;
            semistable &= dx <= bound;
        }
        if stable {
            Stability::Stable
        } else if semistable {
            Stability::SemistableNotStable
        } else {
            Stability::NotSemistable
        }
    }
}

impl fmt::Display for ExtensionBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist.is_zero() {
            write!(f, "E<{}>", self.interior)
        } else {
            write!(f, "E<{}>({})", self.interior, self.twist)
        }
    }
}

/// Isomorphism test `E<x> ≅ E<y>(z)` by the closed criterion: either `y = x`
/// and `z = 0`, or for some axis `j` the interior is flipped away from `j`
/// (`y_i = pi-2-li` for `i != j`, `y_j = l_j`) and
/// `z = sum_{i != j} (li+1) xi - c`. Debug builds recompute the answer from
/// the `K0` pair-sum criterion.
pub fn iso_test(x: &LElement, y: &LElement, z: &LElement) -> bool {
    debug_assert!(is_interior(x) && is_interior(y), "iso_test needs interiors");
    let trivial = y == x && z.is_zero();
    let flipped = (0..3).any(|j| {
        let (yy, zz) = flip_partner(x, j);
        *y == yy && *z == zz
    });
    let result = trivial || flipped;
    debug_assert_eq!(
        result,
        {
            let w = x.weights();
            k0::pair_sum_equal(&w.omega(), x, &(&w.omega() + z), &(y + z))
        },
        "closed isomorphism criterion disagrees with K0 for x={x} y={y} z={z}"
    );
    result
}

/// The flip partner of `x` away from axis `j`: interior with `li -> pi-2-li`
/// for `i != j`, and the forced twist `sum_{i != j} (li+1) xi - c`.
pub fn flip_partner(x: &LElement, j: usize) -> (LElement, LElement) {
    let w = x.weights();
    let mut y = [0i64; 3];
    let mut z = [0i64; 3];
    for i in 0..3 {
        if i == j {
            y[i] = x.coords()[i];
        } else {
            y[i] = w.weight(i) - 2 - x.coords()[i];
            z[i] = x.coords()[i] + 1;
        }
    }
    (w.normalize(y, 0), w.normalize(z, -1))
}

/// Isomorphism of two arbitrarily twisted extension bundles, reduced to
/// [`iso_test`] on the twist difference; debug builds compare against
/// equality of `K0` classes.
pub fn iso_test_general(e: &ExtensionBundle, f: &ExtensionBundle) -> bool {
    assert_eq!(e.weights(), f.weights(), "weight mismatch");
    let z = &f.twist() - &e.twist();
    let result = iso_test(e.interior(), f.interior(), &z);
    debug_assert_eq!(
        result,
        e.k0_class() == f.k0_class(),
        "twist reduction disagrees with K0 classes for {e} vs {f}"
    );
    result
}

/// A sorted multiset of line-bundle twists (cover or hull summands).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SummandList(Vec<LElement>);

impl SummandList {
    fn new(mut items: Vec<LElement>) -> Self {
        items.sort();
        SummandList(items)
    }

    pub fn elements(&self) -> &[LElement] {
        &self.0
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|e| e.to_string()).collect()
    }
}

impl fmt::Display for SummandList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

/// Stability verdict of [`ExtensionBundle::stability`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    SemistableNotStable,
    NotSemistable,
}

impl Stability {
    pub fn is_semistable(&self) -> bool {
        !matches!(self, Stability::NotSemistable)
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stability::Stable => "stable",
            Stability::SemistableNotStable => "semistable-not-stable",
            Stability::NotSemistable => "not-semistable",
        };
        f.write_str(s)
    }
}

/// Report of a single bundle for machine output.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BundleReport {
    pub weights: [i64; 3],
    pub twist: String,
    pub interior: String,
    pub auslander: bool,
    pub canonical_interior: String,
    pub slope: String,
    pub stability: Stability,
    pub cover: Vec<String>,
    pub hull: Vec<String>,
    pub class: k0::K0Class,
}

impl ExtensionBundle {
    pub fn report(&self) -> BundleReport {
        BundleReport {
            weights: self.weights().weights(),
            twist: self.twist.to_string(),
            interior: self.interior.to_string(),
            auslander: self.is_auslander(),
            canonical_interior: self.canonical_rep().to_string(),
            slope: self.slope().to_string(),
            stability: self.stability(),
            cover: self.projective_cover().to_strings(),
            hull: self.injective_hull().to_strings(),
            class: self.k0_class(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p1: i64, p2: i64, p3: i64) -> WeightTriple {
        WeightTriple::new(p1, p2, p3).unwrap()
    }

    fn interior(t: &WeightTriple, coords: [i64; 3]) -> LElement {
        let x = t.normalize(coords, 0);
        assert!(is_interior(&x));
        x
    }

    #[test]
    fn interior_validation() {
        let t = w(2, 3, 7);
        assert!(is_interior(&t.zero()));
        assert!(is_interior(&t.normalize([0, 1, 5], 0)));
        assert!(!is_interior(&t.generator(0))); // l1 = 1 > p1-2
        assert!(!is_interior(&t.canonical()));
        assert!(ExtensionBundle::of_interior(t.generator(0)).is_err());
        assert!(ExtensionBundle::of_interior(t.generator(1)).is_ok());
    }

    #[test]
    fn iso_examples_237() {
        let t = w(2, 3, 7);
        let zero = t.zero();
        // E<0> against its flip partner at j = 1.
        let y = interior(&t, [0, 1, 5]);
        let z = t.parse("x2+x3-c").unwrap();
        assert!(iso_test(&zero, &y, &z));
        // Same partner, wrong twist.
        assert!(!iso_test(&zero, &y, &zero));
        // Distinct interiors with no twist cannot be isomorphic.
        assert!(!iso_test(&zero, &t.generator(1), &zero));
        assert!(iso_test(&zero, &zero, &zero));
    }

    #[test]
    fn iso_general_and_twists() {
        let t = w(2, 3, 7);
        let e = ExtensionBundle::auslander(t);
        assert!(iso_test_general(&e, &e));
        let f = ExtensionBundle::new(t.parse("x2+x3-c").unwrap(), interior(&t, [0, 1, 5])).unwrap();
        assert!(iso_test_general(&e, &f));
        // Twisting both sides by the same z preserves isomorphism.
        for z in [t.generator(2), t.omega(), t.parse("x1-2c").unwrap()] {
            assert!(iso_test_general(&e.twisted(&z), &f.twisted(&z)));
        }
        assert!(!iso_test_general(&e, &f.twisted(&t.generator(0))));
    }

    #[test]
    fn auslander_detection() {
        let t = w(2, 3, 7);
        assert!(ExtensionBundle::auslander(t).is_auslander());
        let full_flip = ExtensionBundle::of_interior(interior(&t, [0, 1, 5])).unwrap();
        assert!(full_flip.is_auslander());
        let not = ExtensionBundle::of_interior(t.generator(2)).unwrap();
        assert!(!not.is_auslander());
        // The invariant: Auslander iff the canonical representative is zero.
        for triple in [w(2, 3, 7), w(2, 4, 6), w(3, 3, 3), w(2, 2, 5)] {
            for x in crate::orbits::interiors(&triple) {
                let e = ExtensionBundle::of_interior(x).unwrap();
                assert_eq!(e.is_auslander(), e.canonical_rep().is_zero(), "{e}");
            }
        }
    }

    #[test]
    fn canonical_rep_examples() {
        let t = w(2, 3, 7);
        let e = ExtensionBundle::of_interior(interior(&t, [0, 1, 5])).unwrap();
        assert!(e.canonical_rep().is_zero());
        // (2,4,6): the all-midpoint interior is fixed by every flip.
        let m = w(2, 4, 6);
        let mid = ExtensionBundle::of_interior(interior(&m, [0, 1, 2])).unwrap();
        assert_eq!(mid.canonical_rep(), *mid.interior());
        assert_eq!(
            crate::orbits::KleinAction::new(m).orbit(mid.interior()).len(),
            1
        );
    }

    #[test]
    fn cover_and_hull_golden() {
        let t = w(2, 3, 7);
        let e = ExtensionBundle::auslander(t);
        let cover = e.projective_cover();
        let expected = SummandList::new(vec![
            t.omega(),
            -&t.generator(0),
            -&t.generator(1),
            -&t.generator(2),
        ]);
        assert_eq!(cover, expected);
        let hull = e.injective_hull();
        let expected = SummandList::new(vec![t.zero(), t.xbar(0), t.xbar(1), t.xbar(2)]);
        assert_eq!(hull, expected);
    }

    #[test]
    fn cover_matches_along_isomorphism() {
        let t = w(2, 3, 7);
        let e = ExtensionBundle::auslander(t);
        let f = ExtensionBundle::new(t.parse("x2+x3-c").unwrap(), interior(&t, [0, 1, 5])).unwrap();
        assert!(iso_test_general(&e, &f));
        assert_eq!(e.projective_cover(), f.projective_cover());
        assert_eq!(e.injective_hull(), f.injective_hull());
    }

    #[test]
    fn cover_hull_twist_equivariance() {
        let t = w(3, 4, 5);
        let e = ExtensionBundle::of_interior(interior(&t, [1, 2, 3])).unwrap();
        let z = t.parse("x1+2x3-c").unwrap();
        let shifted: Vec<LElement> = e
            .projective_cover()
            .elements()
            .iter()
            .map(|s| s + &z)
            .collect();
        assert_eq!(e.twisted(&z).projective_cover(), SummandList::new(shifted));
    }

    #[test]
    fn slopes() {
        let t = w(2, 3, 7);
        let e = ExtensionBundle::auslander(t);
        assert_eq!(e.slope(), Ratio::new(1, 2));
        assert_eq!(e.k0_class().degree(), 1);
        assert_eq!(e.k0_class().rank(), 2);
        let s = w(3, 3, 3);
        let f = ExtensionBundle::of_interior(s.generator(0)).unwrap();
        assert_eq!(f.slope(), Ratio::new(1, 2));
        // Twisting shifts the slope by delta.
        let z = t.parse("x3-c").unwrap();
        assert_eq!(
            e.twisted(&z).slope(),
            e.slope() + Ratio::from_integer(z.delta())
        );
    }

    #[test]
    fn stability_examples() {
        // Wild: the Auslander bundle of (2,3,7) is not semistable.
        let e = ExtensionBundle::auslander(w(2, 3, 7));
        assert_eq!(e.stability(), Stability::NotSemistable);
        // Tubular (2,3,6): semistable but not stable.
        let f = ExtensionBundle::auslander(w(2, 3, 6));
        assert_eq!(f.stability(), Stability::SemistableNotStable);
        // Tubular (3,3,3) with interior x1: stable.
        let s = w(3, 3, 3);
        let g = ExtensionBundle::of_interior(s.generator(0)).unwrap();
        assert_eq!(g.stability(), Stability::Stable);
    }

    #[test]
    fn tubular_stability_tables() {
        // (3,3,3): stable iff l1+l2+l3 in {1,3}.
        let t = w(3, 3, 3);
        for x in crate::orbits::interiors(&t) {
            let sum: i64 = x.coords().iter().sum();
            let e = ExtensionBundle::of_interior(x).unwrap();
            assert_eq!(e.stability() == Stability::Stable, sum == 1 || sum == 3);
            assert!(e.stability().is_semistable());
        }
        // (2,3,6): stable iff l3 not in {0,4}.
        let t = w(2, 3, 6);
        for x in crate::orbits::interiors(&t) {
            let l3 = x.coords()[2];
            let e = ExtensionBundle::of_interior(x).unwrap();
            assert_eq!(e.stability() == Stability::Stable, l3 != 0 && l3 != 4);
            assert!(e.stability().is_semistable());
        }
        // (2,4,4): stable iff l2 = 1 or l3 = 1.
        let t = w(2, 4, 4);
        for x in crate::orbits::interiors(&t) {
            let [_, l2, l3] = x.coords();
            let e = ExtensionBundle::of_interior(x).unwrap();
            assert_eq!(e.stability() == Stability::Stable, l2 == 1 || l3 == 1);
            assert!(e.stability().is_semistable());
        }
    }

    #[test]
    fn tubular_stable_iff_not_auslander() {
        for t in [w(3, 3, 3), w(2, 3, 6), w(2, 4, 4)] {
            for x in crate::orbits::interiors(&t) {
                let e = ExtensionBundle::of_interior(x).unwrap();
                assert_eq!(e.stability() == Stability::Stable, !e.is_auslander());
            }
        }
    }

    #[test]
    fn report_is_serializable() {
        let e = ExtensionBundle::auslander(w(2, 3, 7));
        let json = serde_json::to_value(e.report()).unwrap();
        assert_eq!(json["slope"], "1/2");
        assert_eq!(json["stability"], "not_semistable");
        assert_eq!(json["class"]["coeffs"].as_array().unwrap().len(), 11);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn triple() -> impl Strategy<Value = WeightTriple> {
            (2i64..=6, 2i64..=6, 2i64..=6).prop_map(|(a, b, c)| w(a, b, c))
        }

        fn bundle(t: WeightTriple) -> impl Strategy<Value = ExtensionBundle> {
            (
                [0i64..12, 0i64..12, 0i64..12],
                -2i64..3,
                [0i64..5, 0i64..5, 0i64..5],
            )
                .prop_map(move |(tw, c, int)| {
                    let twist = t.normalize(tw, c);
                    let interior = t.normalize(
                        [
                            int[0].min(t.weight(0) - 2),
                            int[1].min(t.weight(1) - 2),
                            int[2].min(t.weight(2) - 2),
                        ],
                        0,
                    );
                    ExtensionBundle::new(twist, interior).unwrap()
                })
        }

        proptest! {
            #[test]
            fn iso_is_twist_equivariant(
                (e, z) in triple().prop_flat_map(|t| {
                    (bundle(t), ([0i64..9, 0i64..9, 0i64..9], -2i64..3)
                        .prop_map(move |(c, cc)| t.normalize(c, cc)))
                })
            ) {
                // Each flip partner really is isomorphic, under any twist.
                for j in 0..3 {
                    let (y, zz) = flip_partner(e.interior(), j);
                    let f = ExtensionBundle::new(&(&e.twist() + &zz) + &z, y).unwrap();
                    prop_assert!(iso_test_general(&e.twisted(&z), &f));
                }
                // Slope moves linearly, stability and covers are rigid.
                prop_assert_eq!(
                    e.twisted(&z).slope() - e.slope(),
                    Ratio::from_integer(z.delta())
                );
                prop_assert_eq!(e.twisted(&z).stability(), e.stability());
                prop_assert_eq!(e.twisted(&z).canonical_rep(), e.canonical_rep());
            }
        }
    }
}
