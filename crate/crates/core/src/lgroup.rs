//! The rank-one grading group `L(p1,p2,p3)`: generators `x1,x2,x3` subject to
//! `p1*x1 = p2*x2 = p3*x3 = c`. Every element has a unique normal form
//! `l1*x1 + l2*x2 + l3*x3 + l*c` with `0 <= li <= pi - 1`, which is what
//! [`LElement`] stores. The degree map `delta` sends `xi` to `lcm/pi`, the
//! dualizing element is `omega = c - x1 - x2 - x3`, and the sign of
//! `delta(omega)` splits weight types into domestic / tubular / wild.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::{snf, Error, Result, MAX_WEIGHT};

/// Representation type of a weight triple, by the sign of `delta(omega)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightClass {
    Domestic,
    Tubular,
    Wild,
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WeightClass::Domestic => "domestic",
            WeightClass::Tubular => "tubular",
            WeightClass::Wild => "wild",
        };
        f.write_str(s)
    }
}

/// A weight triple `(p1,p2,p3)` with every `pi >= 2`.
///
/// All derived quantities (`lcm`, `delta(omega)`, the classification) are
/// recomputed from the weights on demand; nothing cached can go stale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightTriple {
    p: [i64; 3],
}

impl WeightTriple {
    pub fn new(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        for p in [p1, p2, p3] {
            if !(2..=MAX_WEIGHT).contains(&p) {
                return Err(Error::InvalidWeight(p));
            }
        }
        Ok(WeightTriple { p: [p1, p2, p3] })
    }

    pub fn weights(&self) -> [i64; 3] {
        self.p
    }

    /// Weight `p_{axis+1}` (axes are 0-based).
    pub fn weight(&self, axis: usize) -> i64 {
        self.p[axis]
    }

    /// `lcm(p1,p2,p3)`.
    pub fn lcm(&self) -> i64 {
        self.p.iter().fold(1i64, |a, &b| a.lcm(&b))
    }

    /// `delta(x_{axis+1}) = lcm / p_{axis+1}`.
    pub fn delta_gen(&self, axis: usize) -> i64 {
        self.lcm() / self.p[axis]
    }

    pub fn zero(&self) -> LElement {
        self.normalize([0, 0, 0], 0)
    }

    /// The generator `x_{axis+1}`.
    pub fn generator(&self, axis: usize) -> LElement {
        assert!(axis < 3);
        let mut coords = [0; 3];
        coords[axis] = 1;
        self.normalize(coords, 0)
    }

    /// The canonical element `c = pi * xi`.
    pub fn canonical(&self) -> LElement {
        self.normalize([0, 0, 0], 1)
    }

    /// The dualizing element `omega = c - x1 - x2 - x3`.
    pub fn omega(&self) -> LElement {
        self.normalize([-1, -1, -1], 1)
    }

    /// `xbar_{axis+1} = omega + x_{axis+1} = c - sum of the other two
    /// generators`.
    pub fn xbar(&self, axis: usize) -> LElement {
        &self.omega() + &self.generator(axis)
    }

    /// Unique normal form of `coords . (x1,x2,x3) + c_coeff * c`.
    pub fn normalize(&self, coords: [i64; 3], c_coeff: i64) -> LElement {
        self.normalize_wide(coords.map(i128::from), c_coeff as i128)
    }

    fn normalize_wide(&self, coords: [i128; 3], c_coeff: i128) -> LElement {
        let mut out = [0i64; 3];
        let mut carry = c_coeff;
        for i in 0..3 {
            let p = self.p[i] as i128;
            let l = coords[i].rem_euclid(p);
            carry += (coords[i] - l) / p;
            out[i] = l as i64;
        }
        let c = i64::try_from(carry).expect("c coefficient overflows i64");
        LElement {
            weights: *self,
            coords: out,
            c,
        }
    }

    /// `delta(omega) = lcm * (1 - sum 1/pi)`; negative, zero or positive for
    /// domestic, tubular or wild weight types.
    pub fn delta_omega(&self) -> i64 {
        self.lcm() - (0..3).map(|i| self.delta_gen(i)).sum::<i64>()
    }

    pub fn classify(&self) -> WeightClass {
        match self.delta_omega().cmp(&0) {
            Ordering::Less => WeightClass::Domestic,
            Ordering::Equal => WeightClass::Tubular,
            Ordering::Greater => WeightClass::Wild,
        }
    }

    pub fn is_tubular(&self) -> bool {
        self.classify() == WeightClass::Tubular
    }

    /// The index `[L : Z*omega] = |delta(omega)| * p1*p2*p3 / lcm`, defined
    /// whenever `omega` has infinite order (non-tubular weights).
    pub fn index_mod_omega(&self) -> Result<i64> {
        if self.is_tubular() {
            return Err(Error::Tubular);
        }
        let product: i128 = self.p.iter().map(|&p| p as i128).product();
        let idx = (self.delta_omega().unsigned_abs() as i128) * (product / self.lcm() as i128);
        Ok(i64::try_from(idx).expect("index overflows i64"))
    }

    /// Relation matrix presenting `L / Z*omega` on the generators `x1,x2,x3`:
    /// `p1*x1 = p2*x2`, `p2*x2 = p3*x3` and `omega = 0`
    /// (with `omega = (p1-1)*x1 - x2 - x3` after eliminating `c`).
    pub fn omega_quotient_presentation(&self) -> Vec<Vec<i64>> {
        let [p1, p2, p3] = self.p;
        vec![
            vec![p1, -p2, 0],
            vec![0, p2, -p3],
            vec![p1 - 1, -1, -1],
        ]
    }

    /// Coset representatives of `L / Z*omega`, found by closing `{0}` under
    /// adding generators. The Smith-normal-form order of the presentation
    /// matrix and the index formula both certify the stopping point.
    pub fn coset_reps_mod_omega(&self) -> Result<Vec<LElement>> {
        if self.is_tubular() {
            return Err(Error::Tubular);
        }
        let order = snf::quotient_order(&self.omega_quotient_presentation())?;
        let mut reps: Vec<LElement> = vec![self.zero()];
        let mut queue = vec![self.zero()];
        while let Some(e) = queue.pop() {
            for axis in 0..3 {
                let f = &e + &self.generator(axis);
                let known = reps
                    .iter()
                    .any(|r| (&f - r).in_z_omega().expect("non-tubular").is_some());
                if !known {
                    reps.push(f.clone());
                    queue.push(f);
                }
            }
        }
        assert_eq!(
            reps.len() as i64,
            order,
            "coset enumeration disagrees with Smith normal form order"
        );
        assert_eq!(order, self.index_mod_omega()?, "index formula mismatch");
        Ok(reps)
    }

    /// Parse the element grammar: signed combinations of `x1 x2 x3 c w`
    /// (`w` is `omega`), with optional `*` and insignificant whitespace, or a
    /// raw coefficient quadruple `(l1,l2,l3,l)`. `0` denotes the zero element.
    pub fn parse(&self, input: &str) -> Result<LElement> {
        parse_element(self, input)
    }
}

impl fmt::Display for WeightTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p[0], self.p[1], self.p[2])
    }
}

/// An element of `L(p1,p2,p3)` in normal form: coordinates `li` with
/// `0 <= li <= pi - 1` plus an arbitrary multiple of `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LElement {
    weights: WeightTriple,
    coords: [i64; 3],
    c: i64,
}

impl LElement {
    pub fn weights(&self) -> WeightTriple {
        self.weights
    }

    /// Normal-form coordinates `(l1,l2,l3)`.
    pub fn coords(&self) -> [i64; 3] {
        self.coords
    }

    /// Normal-form coefficient of `c`.
    pub fn c_coeff(&self) -> i64 {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0, 0, 0] && self.c == 0
    }

    /// Degree `delta(x) = sum li * lcm/pi + l * lcm`.
    pub fn delta(&self) -> i64 {
        let w = &self.weights;
        let wide: i128 = (0..3)
            .map(|i| self.coords[i] as i128 * w.delta_gen(i) as i128)
            .sum::<i128>()
            + self.c as i128 * w.lcm() as i128;
        i64::try_from(wide).expect("delta overflows i64")
    }

    /// Whether `x >= 0` in the partial order generated by `x1,x2,x3`;
    /// in normal form this is exactly `l >= 0`.
    pub fn is_nonneg(&self) -> bool {
        self.c >= 0
    }

    pub fn leq(&self, other: &LElement) -> bool {
        (other - self).is_nonneg()
    }

    /// `Some(r)` iff `x = r * omega`. Rejects tubular weights, where `omega`
    /// has finite order and the projection along `delta` breaks down.
    pub fn in_z_omega(&self) -> Result<Option<i64>> {
        let w = self.weights;
        let d = w.delta_omega();
        if d == 0 {
            return Err(Error::Tubular);
        }
        if self.delta() % d != 0 {
            return Ok(None);
        }
        let r = self.delta() / d;
        if &w.omega().scaled(r) == self {
            Ok(Some(r))
        } else {
            Ok(None)
        }
    }

    /// Integer multiple `n * x`.
    pub fn scaled(&self, n: i64) -> LElement {
        let n = n as i128;
        self.weights
            .normalize_wide(self.coords.map(|l| l as i128 * n), self.c as i128 * n)
    }
}

impl std::ops::Add for &LElement {
    type Output = LElement;
    fn add(self, rhs: &LElement) -> LElement {
        assert_eq!(
            self.weights, rhs.weights,
            "weight mismatch: {} vs {}",
            self.weights, rhs.weights
        );
        self.weights.normalize(
            [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
                self.coords[2] + rhs.coords[2],
            ],
            self.c + rhs.c,
        )
    }
}

impl std::ops::Sub for &LElement {
    type Output = LElement;
    fn sub(self, rhs: &LElement) -> LElement {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &LElement {
    type Output = LElement;
    fn neg(self) -> LElement {
        self.weights
            .normalize([-self.coords[0], -self.coords[1], -self.coords[2]], -self.c)
    }
}

impl PartialOrd for LElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weights, self.coords, self.c).cmp(&(other.weights, other.coords, other.c))
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, &l) in self.coords.iter().enumerate() {
            if l != 0 {
                if !out.is_empty() {
                    out.push('+');
                }
                if l != 1 {
                    out.push_str(&l.to_string());
                }
                out.push('x');
                out.push_str(&(i + 1).to_string());
            }
        }
        if self.c != 0 {
            if self.c > 0 && !out.is_empty() {
                out.push('+');
            }
            match self.c {
                1 => {}
                -1 => out.push('-'),
                v => out.push_str(&v.to_string()),
            }
            out.push('c');
        }
        f.write_str(&out)
    }
}

/// Coefficients larger than this are rejected by the parser so that all
/// downstream arithmetic stays far away from `i64` overflow.
const MAX_COEFF: i64 = 1_000_000_000_000;

fn parse_element(w: &WeightTriple, input: &str) -> Result<LElement> {
    let s: String = input.chars().filter(|ch| !ch.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    if let Some(body) = s.strip_prefix('(') {
        let body = body
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated quadruple: {input}")))?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "quadruple needs four components: {input}"
            )));
        }
        let mut vals = [0i64; 4];
        for (v, part) in vals.iter_mut().zip(&parts) {
            *v = parse_coeff(part)?;
        }
        return Ok(w.normalize([vals[0], vals[1], vals[2]], vals[3]));
    }

    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut coords = [0i64; 3];
    let mut c_coeff = 0i64;
    let mut first = true;
    while pos < bytes.len() {
        let sign = match bytes[pos] {
            b'+' => {
                pos += 1;
                1
            }
            b'-' => {
                pos += 1;
                -1
            }
            _ if first => 1,
            other => {
                return Err(Error::Parse(format!(
                    "expected '+' or '-' before '{}'",
                    other as char
                )))
            }
        };
        first = false;

        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff = if pos > digits_start {
            Some(parse_coeff(&s[digits_start..pos])?)
        } else {
            None
        };
        if pos < bytes.len() && bytes[pos] == b'*' {
            if coeff.is_none() {
                return Err(Error::Parse("'*' without coefficient".into()));
            }
            pos += 1;
        }

        let sym = match bytes.get(pos) {
            Some(b'x') => {
                let axis = match bytes.get(pos + 1) {
                    Some(b'1') => 0,
                    Some(b'2') => 1,
                    Some(b'3') => 2,
                    _ => return Err(Error::Parse("expected x1, x2 or x3".into())),
                };
                pos += 2;
                Some(Sym::Gen(axis))
            }
            Some(b'c') => {
                pos += 1;
                Some(Sym::Canonical)
            }
            Some(b'w') => {
                pos += 1;
                Some(Sym::Omega)
            }
            _ => None,
        };
        match (sym, coeff) {
            (Some(sym), coeff) => {
                let k = sign * coeff.unwrap_or(1);
                match sym {
                    Sym::Gen(axis) => coords[axis] = add_coeff(coords[axis], k)?,
                    Sym::Canonical => c_coeff = add_coeff(c_coeff, k)?,
                    Sym::Omega => {
                        coords[0] = add_coeff(coords[0], -k)?;
                        coords[1] = add_coeff(coords[1], -k)?;
                        coords[2] = add_coeff(coords[2], -k)?;
                        c_coeff = add_coeff(c_coeff, k)?;
                    }
                }
            }
            (None, Some(0)) => {}
            (None, Some(n)) => {
                return Err(Error::Parse(format!("bare integer {n} is not an element")))
            }
            (None, None) => {
                return Err(Error::Parse(format!(
                    "expected a term at byte {pos} of '{s}'"
                )))
            }
        }
    }
    Ok(w.normalize(coords, c_coeff))
}

enum Sym {
    Gen(usize),
    Canonical,
    Omega,
}

fn parse_coeff(s: &str) -> Result<i64> {
    let v: i64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer '{s}'")))?;
    if v.abs() > MAX_COEFF {
        return Err(Error::Parse(format!("coefficient {v} out of range")));
    }
    Ok(v)
}

fn add_coeff(a: i64, b: i64) -> Result<i64> {
    let sum = a + b;
    if sum.abs() > 4 * MAX_COEFF {
        return Err(Error::Parse("coefficient out of range".into()));
    }
    Ok(sum)
}
