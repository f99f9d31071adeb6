//! The stable category of vector bundles: suspension of extension bundles,
//! hom-space dimensions for Auslander bundles, and the tilting objects
//! (extension-bundle cuboid for arbitrary weights, the two Auslander-bundle
//! ladders `t1`/`t2` for weight type `(2,p,q)`) together with their
//! endomorphism quivers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bundles::{self, ExtensionBundle};
use crate::lgroup::{LElement, WeightTriple};
use crate::orbits;
use crate::{Error, Result};

/// Suspension along one axis: `E<x>(t)[1] = E<flip_i x>(t + (l_i+1) x_i)`,
/// where `flip_i` replaces `l_i` by `p_i - 2 - l_i` and fixes the other
/// coordinates. The three axes give isomorphic results, and suspending twice
/// along the same axis is exactly the `c`-twist.
pub fn suspend(e: &ExtensionBundle, axis: usize) -> ExtensionBundle {
    assert!(axis < 3);
    let w = e.weights();
    let mut coords = e.interior().coords();
    let l = coords[axis];
    coords[axis] = w.weight(axis) - 2 - l;
    let twist = &e.twist() + &w.generator(axis).scaled(l + 1);
    ExtensionBundle::new(twist, w.normalize(coords, 0)).expect("flip stays interior")
}

/// For weight type `(2,p,q)` the first coordinate of an interior point is
/// forced to zero, so suspension along the first axis is literally the
/// `x1`-twist. Verifies that identity over all interiors and a few twists.
pub fn suspension_is_x1_twist_check(w: &WeightTriple) -> Result<bool> {
    if w.weight(0) != 2 {
        return Err(Error::FirstWeightNotTwo("the suspension shortcut"));
    }
    let x1 = w.generator(0);
    for x in orbits::interiors(w) {
        for t in [w.zero(), w.omega(), w.generator(2), w.canonical()] {
            let e = ExtensionBundle::new(t, x.clone())?;
            let s = suspend(&e, 0);
            if s.interior() != e.interior() || s.twist() != &e.twist() + &x1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Hom-space dimension between twists of the Auslander bundle `E` in the
/// stable category: `Hom(E, E(shift))` is one-dimensional when `shift` lies
/// in `{0, xbar_1, xbar_2, xbar_3}` and vanishes otherwise.
pub fn auslander_hom_dim(shift: &LElement) -> i64 {
    let w = shift.weights();
    if shift.is_zero() || (0..3).any(|i| *shift == w.xbar(i)) {
        1
    } else {
        0
    }
}

/// All degrees `n` with `Hom(E(u), E(v)[n]) != 0` for the Auslander bundle
/// `E` in weight type `(2,p,q)`, where `[1]` is the `x1`-twist. The set is
/// finite because the degree map separates the finitely many hom-carrying
/// shifts.
pub fn hom_degrees(u: &LElement, v: &LElement) -> Result<BTreeSet<i64>> {
    let w = u.weights();
    if w.weight(0) != 2 {
        return Err(Error::FirstWeightNotTwo("hom-degree enumeration"));
    }
    let diff = v - u;
    let x1 = w.generator(0);
    let step = x1.delta();
    debug_assert!(step > 0);
    let mut degrees = BTreeSet::new();
    for target in [w.zero(), w.xbar(0), w.xbar(1), w.xbar(2)] {
        let gap = target.delta() - diff.delta();
        if gap % step != 0 {
            continue;
        }
        let n = i64::try_from(gap / step).expect("hom degree fits i64");
        if &diff + &x1.scaled(n) == target {
            degrees.insert(n);
        }
    }
    Ok(degrees)
}

/// Which tilting object to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TiltingKind {
    /// Cuboid of all extension bundles `E<x>`, any weight type.
    Cub,
    /// Ladder of Auslander-bundle twists along `xbar_2` and `xbar_3`;
    /// weight type `(2,p,q)` only.
    T1,
    /// Ladder of Auslander-bundle twists along `xbar_1` and `xbar_3`;
    /// weight type `(2,p,q)` only.
    T2,
}

impl fmt::Display for TiltingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TiltingKind::Cub => write!(f, "cub"),
            TiltingKind::T1 => write!(f, "t1"),
            TiltingKind::T2 => write!(f, "t2"),
        }
    }
}

/// A tilting object in the stable category, as an explicit summand list.
/// Ladder summands carry grid coordinates `(a, b)` meaning the twist
/// `a*u + b*v` with `(u, v) = (xbar_2, xbar_3)` for `t1` and
/// `(xbar_1, xbar_3)` for `t2`, over `0 <= a <= q-2`, `0 <= b <= p-2`.
#[derive(Debug, Clone)]
pub struct TiltingObject {
    kind: TiltingKind,
    weights: WeightTriple,
    summands: Vec<ExtensionBundle>,
    grid: Vec<(i64, i64)>,
}

impl TiltingObject {
    pub fn kind(&self) -> TiltingKind {
        self.kind
    }

    pub fn weights(&self) -> WeightTriple {
        self.weights
    }

    pub fn summands(&self) -> &[ExtensionBundle] {
        &self.summands
    }

    /// Grid coordinates parallel to [`TiltingObject::summands`]; empty for
    /// the cuboid.
    pub fn grid(&self) -> &[(i64, i64)] {
        &self.grid
    }

    pub fn summand_labels(&self) -> Vec<String> {
        self.summands
            .iter()
            .map(|e| format!("E<{}>({})", e.interior(), e.twist()))
            .collect()
    }

    /// No two summands are isomorphic.
    pub fn pairwise_nonisomorphic(&self) -> bool {
        for (i, e) in self.summands.iter().enumerate() {
            for f in &self.summands[i + 1..] {
                if bundles::iso_test_general(e, f) {
                    return false;
                }
            }
        }
        true
    }
}

/// Build a tilting object. The ladders reject weight types with `p1 != 2`.
pub fn build_tilting(w: &WeightTriple, kind: TiltingKind) -> Result<TiltingObject> {
    let mut summands = Vec::new();
    let mut grid = Vec::new();
    match kind {
        TiltingKind::Cub => {
            for x in orbits::interiors(w) {
                summands.push(ExtensionBundle::new(w.zero(), x)?);
            }
        }
        TiltingKind::T1 | TiltingKind::T2 => {
            if w.weight(0) != 2 {
                let name = match kind {
                    TiltingKind::T1 => "the t1 ladder",
                    _ => "the t2 ladder",
                };
                return Err(Error::FirstWeightNotTwo(name));
            }
            let (u, v) = match kind {
                TiltingKind::T1 => (w.xbar(1), w.xbar(2)),
                _ => (w.xbar(0), w.xbar(2)),
            };
            let (p, q) = (w.weight(1), w.weight(2));
            for a in 0..=q - 2 {
                for b in 0..=p - 2 {
                    let shift = &u.scaled(a) + &v.scaled(b);
                    summands.push(ExtensionBundle::new(shift, w.zero())?);
                    grid.push((a, b));
                }
            }
        }
    }
    Ok(TiltingObject {
        kind,
        weights: *w,
        summands,
        grid,
    })
}

/// Scan a ladder for nonzero self-extensions: every triple `(i, j, n)` with
/// `n != 0` and `Hom(T_i, T_j[n]) != 0`. Empty means extension-free, which
/// tilting requires. The cuboid is rejected because its hom spaces are not
/// covered by the Auslander-bundle dimension formula.
pub fn check_extension_free(t: &TiltingObject) -> Result<Vec<(usize, usize, i64)>> {
    if t.kind == TiltingKind::Cub {
        return Err(Error::CubNotSupported);
    }
    let mut violations = Vec::new();
    for (i, ei) in t.summands.iter().enumerate() {
        for (j, ej) in t.summands.iter().enumerate() {
            for n in hom_degrees(&ei.twist(), &ej.twist())? {
                if n != 0 {
                    violations.push((i, j, n));
                }
            }
        }
    }
    Ok(violations)
}

/// Total dimension of the endomorphism algebra of a ladder: the number of
/// ordered summand pairs whose twist difference carries a hom.
pub fn end_dimension(t: &TiltingObject) -> Result<i64> {
    if t.kind == TiltingKind::Cub {
        return Err(Error::CubNotSupported);
    }
    let mut dim = 0;
    for ei in &t.summands {
        for ej in &t.summands {
            dim += auslander_hom_dim(&(&ej.twist() - &ei.twist()));
        }
    }
    Ok(dim)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverVertex {
    /// DOT node id, `v_{a}_{b}`.
    pub name: String,
    pub grid: (i64, i64),
    pub shift: LElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuiverArrow {
    pub from: usize,
    pub to: usize,
    /// `x` for an `xbar_2` shift, `y` for `xbar_3`, `z` for `xbar_1` (the
    /// latter occurs only in the degenerate `t2` ladder with `p = 2`).
    pub label: char,
}

/// One relation of the quadratic part of the defining ideal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuiverRelation {
    /// Two parallel length-two paths with the same nonzero composite.
    Commute { from: usize, to: usize },
    /// A length-two path whose composite hom space vanishes.
    Zero { path: (usize, usize, usize) },
}

/// Endomorphism quiver of a ladder. Arrows are the irreducible hom-carrying
/// pairs (hom-carrying pairs that do not factor through a third summand);
/// `relations` holds the quadratic part of the ideal: commutativity squares
/// and vanishing two-arrow compositions.
#[derive(Debug, Clone)]
pub struct Quiver {
    pub vertices: Vec<QuiverVertex>,
    pub arrows: Vec<QuiverArrow>,
    pub relations: Vec<QuiverRelation>,
}

impl Quiver {
    pub fn arrow_count(&self, label: char) -> usize {
        self.arrows.iter().filter(|a| a.label == label).count()
    }

    pub fn commute_count(&self) -> usize {
        self.relations
            .iter()
            .filter(|r| matches!(r, QuiverRelation::Commute { .. }))
            .count()
    }

    pub fn zero_count(&self) -> usize {
        self.relations
            .iter()
            .filter(|r| matches!(r, QuiverRelation::Zero { .. }))
            .count()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| match r {
                QuiverRelation::Commute { from, to } => format!(
                    "commute {} -> {}",
                    self.vertices[*from].name, self.vertices[*to].name
                ),
                QuiverRelation::Zero { path: (i, k, j) } => format!(
                    "zero {} -> {} -> {}",
                    self.vertices[*i].name, self.vertices[*k].name, self.vertices[*j].name
                ),
            })
            .collect()
    }

    /// Deterministic DOT rendering: vertices in grid order, arrows sorted by
    /// (from, to, label), relations as a trailing comment block.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph endomorphism_quiver {\n  rankdir=LR;\n");
        for v in &self.vertices {
            out.push_str(&format!(
                "  {} [label=\"({},{})\"];\n",
                v.name, v.grid.0, v.grid.1
            ));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                self.vertices[a.from].name, self.vertices[a.to].name, a.label
            ));
        }
        if !self.relations.is_empty() {
            out.push_str("  // relations:\n");
            for r in self.relation_strings() {
                out.push_str(&format!("  // {r}\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Build the endomorphism quiver of an extension-free ladder.
pub fn build_quiver(t: &TiltingObject) -> Result<Quiver> {
    if t.kind == TiltingKind::Cub {
        return Err(Error::CubNotSupported);
    }
    assert!(
        check_extension_free(t)?.is_empty(),
        "quiver presentation requires an extension-free tilting object"
    );
    let w = t.weights;
    let shifts: Vec<LElement> = t.summands.iter().map(|e| e.twist()).collect();
    let vertices: Vec<QuiverVertex> = t
        .grid
        .iter()
        .zip(&shifts)
        .map(|(&(a, b), shift)| QuiverVertex {
            name: format!("v_{a}_{b}"),
            grid: (a, b),
            shift: shift.clone(),
        })
        .collect();
    let n = shifts.len();
    let hom = |i: usize, j: usize| -> bool {
        let d = &shifts[j] - &shifts[i];
        !d.is_zero() && auslander_hom_dim(&d) == 1
    };
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !hom(i, j) {
                continue;
            }
            let factors = (0..n).any(|k| k != i && k != j && hom(i, k) && hom(k, j));
            if factors {
                continue;
            }
            let d = &shifts[j] - &shifts[i];
            let label = if d == w.xbar(1) {
                'x'
            } else if d == w.xbar(2) {
                'y'
            } else {
                debug_assert_eq!(d, w.xbar(0));
                'z'
            };
            arrows.push(QuiverArrow { from: i, to: j, label });
        }
    }
    arrows.sort();
    let mut zero_paths = Vec::new();
    let mut composites: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for a in &arrows {
        for b in &arrows {
            if a.to != b.from {
                continue;
            }
            let (i, k, j) = (a.from, a.to, b.to);
            if auslander_hom_dim(&(&shifts[j] - &shifts[i])) == 0 {
                zero_paths.push(QuiverRelation::Zero { path: (i, k, j) });
            } else {
                composites.entry((i, j)).or_default().push(k);
            }
        }
    }
    let mut relations: Vec<QuiverRelation> = composites
        .into_iter()
        .filter(|(_, vias)| vias.len() > 1)
        .map(|((from, to), _)| QuiverRelation::Commute { from, to })
        .collect();
    zero_paths.sort();
    relations.extend(zero_paths);
    Ok(Quiver {
        vertices,
        arrows,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p1: i64, p2: i64, p3: i64) -> WeightTriple {
        WeightTriple::new(p1, p2, p3).unwrap()
    }

    fn bundle(w: &WeightTriple, twist: &str, interior: [i64; 3]) -> ExtensionBundle {
        ExtensionBundle::new(w.parse(twist).unwrap(), w.normalize(interior, 0)).unwrap()
    }

    #[test]
    fn suspension_examples() {
        let t = w(2, 3, 7);
        let e = bundle(&t, "0", [0, 1, 5]);
        let s = suspend(&e, 2);
        assert_eq!(s.interior(), &t.normalize([0, 1, 0], 0));
        assert_eq!(s.twist(), t.parse("6x3").unwrap());
        let s0 = suspend(&e, 0);
        assert_eq!(s0.interior(), e.interior());
        assert_eq!(s0.twist(), t.generator(0));
        let boundary = bundle(&t, "0", [0, 0, 0]);
        let s1 = suspend(&boundary, 1);
        assert_eq!(s1.interior(), &t.normalize([0, 1, 0], 0));
        assert_eq!(s1.twist(), t.generator(1));
    }

    #[test]
    fn double_suspension_is_canonical_twist() {
        for t in [w(2, 3, 7), w(3, 4, 5), w(2, 2, 2)] {
            for x in orbits::interiors(&t) {
                let e = ExtensionBundle::new(t.parse("x3-c").unwrap(), x).unwrap();
                for axis in 0..3 {
                    let s2 = suspend(&suspend(&e, axis), axis);
                    assert_eq!(s2.interior(), e.interior());
                    assert_eq!(s2.twist(), &e.twist() + &t.canonical());
                }
                // Mixed axes still give the c-twist up to isomorphism.
                let mixed = suspend(&suspend(&e, 0), 1);
                assert!(bundles::iso_test_general(
                    &mixed,
                    &e.twisted(&t.canonical())
                ));
            }
        }
    }

    #[test]
    fn suspension_is_axis_independent_up_to_iso() {
        for t in [w(2, 3, 7), w(3, 4, 5), w(2, 2, 5), w(3, 3, 3)] {
            for x in orbits::interiors(&t) {
                let e = ExtensionBundle::new(t.omega(), x).unwrap();
                for i in 0..3 {
                    for j in 0..3 {
                        assert!(bundles::iso_test_general(
                            &suspend(&e, i),
                            &suspend(&e, j)
                        ));
                    }
                }
            }
        }
    }

    #[test]
    fn x1_twist_shortcut() {
        assert_eq!(suspension_is_x1_twist_check(&w(2, 3, 7)), Ok(true));
        assert_eq!(suspension_is_x1_twist_check(&w(2, 2, 2)), Ok(true));
        assert_eq!(
            suspension_is_x1_twist_check(&w(3, 3, 3)),
            Err(Error::FirstWeightNotTwo("the suspension shortcut"))
        );
    }

    #[test]
    fn auslander_hom_dims() {
        let t = w(2, 3, 7);
        assert_eq!(auslander_hom_dim(&t.zero()), 1);
        for i in 0..3 {
            assert_eq!(auslander_hom_dim(&t.xbar(i)), 1);
        }
        assert_eq!(auslander_hom_dim(&t.omega()), 0);
        assert_eq!(auslander_hom_dim(&t.canonical()), 0);
        assert_eq!(auslander_hom_dim(&t.generator(0)), 0);
    }

    #[test]
    fn hom_degree_sets() {
        let t = w(2, 3, 7);
        let zero = t.zero();
        assert_eq!(
            hom_degrees(&zero, &t.xbar(1)).unwrap(),
            BTreeSet::from([0])
        );
        assert_eq!(hom_degrees(&zero, &zero).unwrap(), BTreeSet::from([0]));
        // Twice along the ladder: no hom in any degree (this is x^2 = 0).
        let twice = &t.xbar(1) + &t.xbar(1);
        assert_eq!(hom_degrees(&zero, &twice).unwrap(), BTreeSet::new());
        // The x1-twist is the suspension itself, so it carries a hom in
        // degree -1.
        assert_eq!(
            hom_degrees(&zero, &t.generator(0)).unwrap(),
            BTreeSet::from([-1])
        );
        // Serre duality: the omega-twist carries a hom in degree one,
        // because omega + x1 = xbar_1.
        assert_eq!(
            hom_degrees(&zero, &t.omega()).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            hom_degrees(&w(3, 3, 3).zero(), &w(3, 3, 3).zero()),
            Err(Error::FirstWeightNotTwo("hom-degree enumeration"))
        );
    }

    #[test]
    fn tilting_sizes_and_distinctness() {
        let t = w(2, 3, 7);
        let cub = build_tilting(&t, TiltingKind::Cub).unwrap();
        assert_eq!(cub.summands().len(), 12);
        assert!(cub.grid().is_empty());
        assert!(cub.pairwise_nonisomorphic());
        let t1 = build_tilting(&t, TiltingKind::T1).unwrap();
        assert_eq!(t1.summands().len(), 12);
        assert!(t1.pairwise_nonisomorphic());
        let t2 = build_tilting(&t, TiltingKind::T2).unwrap();
        assert_eq!(t2.summands().len(), 12);
        assert!(t2.pairwise_nonisomorphic());
        assert_eq!(
            build_tilting(&w(3, 3, 3), TiltingKind::T1).err(),
            Some(Error::FirstWeightNotTwo("the t1 ladder"))
        );
        let cub333 = build_tilting(&w(3, 3, 3), TiltingKind::Cub).unwrap();
        assert_eq!(cub333.summands().len(), 8);
        assert!(cub333.pairwise_nonisomorphic());
    }

    #[test]
    fn ladders_are_extension_free() {
        for t in [w(2, 3, 7), w(2, 3, 3), w(2, 2, 5), w(2, 4, 5)] {
            for kind in [TiltingKind::T1, TiltingKind::T2] {
                let obj = build_tilting(&t, kind).unwrap();
                assert_eq!(check_extension_free(&obj).unwrap(), vec![], "{t} {kind}");
            }
        }
        let cub = build_tilting(&w(2, 3, 7), TiltingKind::Cub).unwrap();
        assert_eq!(check_extension_free(&cub), Err(Error::CubNotSupported));
        assert_eq!(end_dimension(&cub), Err(Error::CubNotSupported));
    }

    #[test]
    fn quiver_golden_237_t1() {
        let obj = build_tilting(&w(2, 3, 7), TiltingKind::T1).unwrap();
        let quiver = build_quiver(&obj).unwrap();
        assert_eq!(quiver.vertices.len(), 12);
        assert_eq!(quiver.arrow_count('x'), 10);
        assert_eq!(quiver.arrow_count('y'), 6);
        assert_eq!(quiver.arrow_count('z'), 0);
        assert_eq!(quiver.commute_count(), 5);
        assert_eq!(quiver.zero_count(), 8);
        assert_eq!(end_dimension(&obj).unwrap(), 33);
    }

    #[test]
    fn quiver_golden_233() {
        let t = w(2, 3, 3);
        let t1 = build_quiver(&build_tilting(&t, TiltingKind::T1).unwrap()).unwrap();
        assert_eq!(t1.vertices.len(), 4);
        assert_eq!(t1.arrow_count('x'), 2);
        assert_eq!(t1.arrow_count('y'), 2);
        assert_eq!(t1.commute_count(), 1);
        assert_eq!(t1.zero_count(), 0);
        let t2 = build_quiver(&build_tilting(&t, TiltingKind::T2).unwrap()).unwrap();
        assert_eq!(t2.vertices.len(), 4);
        // Sheared ladder: the x-arrow runs (a, b+1) -> (a+1, b).
        assert_eq!(t2.arrow_count('x'), 1);
        assert_eq!(t2.arrow_count('y'), 2);
        assert_eq!(t2.relations.len(), 0);
        let x_arrow = t2.arrows.iter().find(|a| a.label == 'x').unwrap();
        assert_eq!(t2.vertices[x_arrow.from].grid, (0, 1));
        assert_eq!(t2.vertices[x_arrow.to].grid, (1, 0));
        assert_eq!(end_dimension(&build_tilting(&t, TiltingKind::T1).unwrap()).unwrap(), 9);
        assert_eq!(end_dimension(&build_tilting(&t, TiltingKind::T2).unwrap()).unwrap(), 9);
    }

    #[test]
    fn degenerate_ladders() {
        // (2,2,q): the t2 grid is a single row and the xbar_1 homs become
        // irreducible.
        let t = w(2, 2, 3);
        let t2 = build_quiver(&build_tilting(&t, TiltingKind::T2).unwrap()).unwrap();
        assert_eq!(t2.vertices.len(), 2);
        assert_eq!(t2.arrow_count('z'), 1);
        assert_eq!(t2.arrow_count('x') + t2.arrow_count('y'), 0);
        assert_eq!(end_dimension(&build_tilting(&t, TiltingKind::T2).unwrap()).unwrap(), 3);
        // (2,2,2): one vertex, no arrows, one endomorphism.
        let tiny = build_tilting(&w(2, 2, 2), TiltingKind::T1).unwrap();
        let q = build_quiver(&tiny).unwrap();
        assert_eq!(q.vertices.len(), 1);
        assert!(q.arrows.is_empty());
        assert_eq!(end_dimension(&tiny).unwrap(), 1);
    }

    #[test]
    fn end_dimension_formula_sweep() {
        for p in 2..=6 {
            for q in p..=6 {
                let t = w(2, p, q);
                for kind in [TiltingKind::T1, TiltingKind::T2] {
                    let obj = build_tilting(&t, kind).unwrap();
                    assert_eq!(
                        end_dimension(&obj).unwrap(),
                        (2 * q - 3) * (2 * p - 3),
                        "{t} {kind}"
                    );
                }
            }
        }
    }

    #[test]
    fn dot_golden() {
        let obj = build_tilting(&w(2, 2, 3), TiltingKind::T1).unwrap();
        let quiver = build_quiver(&obj).unwrap();
        let expected = "digraph endomorphism_quiver {\n  rankdir=LR;\n  v_0_0 [label=\"(0,0)\"];\n  v_1_0 [label=\"(1,0)\"];\n  v_0_0 -> v_1_0 [label=\"x\"];\n}\n";
        assert_eq!(quiver.to_dot(), expected);
        assert_eq!(quiver.to_dot(), quiver.to_dot());
    }

    #[test]
    fn summand_labels_describe_bundles() {
        let obj = build_tilting(&w(2, 3, 3), TiltingKind::T1).unwrap();
        let labels = obj.summand_labels();
        assert_eq!(labels[0], "E<0>(0)");
        assert!(labels.iter().all(|l| l.starts_with("E<0>(")));
        let cub = build_tilting(&w(2, 3, 3), TiltingKind::Cub).unwrap();
        assert!(cub.summand_labels().contains(&"E<x2+x3>(0)".to_string()));
    }
}
