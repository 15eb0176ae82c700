//! Zinbiel algebras, bimodules, actions and crossed modules, with basis-level axiom checks.

use crate::error::Error;
use crate::exact_linear::{add, basis, BilMap, Field, LinMap, Vector};
use crate::par;
use crate::report::{ConditionReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZinbielAlgebra {
    pub dim: usize,
    pub mult: BilMap,
}

/// Left action ⊳: Z × V → V and right action ⊲: V × Z → V.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimodulePair {
    pub left: BilMap,
    pub right: BilMap,
}

/// A crossed module (Z₁, Z₀, φ) with Z₀ acting on Z₁.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZinbielTwoAlgebra {
    pub z1: ZinbielAlgebra,
    pub z0: ZinbielAlgebra,
    pub phi: LinMap,
    pub act: BimodulePair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMorphism {
    pub phi1: LinMap,
    pub phi0: LinMap,
}

impl ZinbielAlgebra {
    pub fn new(mult: BilMap) -> Result<Self, Error> {
        let (a, b, c) = mult.dims();
        if a != b || b != c {
            return Err(Error::shape(format!("multiplication must be n×n→n, got {a}×{b}→{c}")));
        }
        Ok(ZinbielAlgebra { dim: a, mult })
    }

    pub fn zero(field: Field, dim: usize) -> Self {
        ZinbielAlgebra { dim, mult: BilMap::zero(field, dim, dim, dim) }
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn mul(&self, a: &[crate::exact_linear::Scalar], b: &[crate::exact_linear::Scalar]) -> Vector {
        self.mult.eval_vec(a, b)
    }
}

impl BimodulePair {
    pub fn trivial(field: Field, dim_z: usize, dim_v: usize) -> Self {
        BimodulePair {
            left: BilMap::zero(field, dim_z, dim_v, dim_v),
            right: BilMap::zero(field, dim_v, dim_z, dim_v),
        }
    }

    /// Z acting on itself by its multiplication.
    pub fn regular(z: &ZinbielAlgebra) -> Self {
        BimodulePair { left: z.mult.clone(), right: z.mult.clone() }
    }

    fn check_dims(&self, dim_z: usize, dim_v: usize) -> Result<(), Error> {
        if self.left.dims() != (dim_z, dim_v, dim_v) || self.right.dims() != (dim_v, dim_z, dim_v) {
            return Err(Error::shape(format!(
                "action maps must be {dim_z}×{dim_v}→{dim_v} and {dim_v}×{dim_z}→{dim_v}"
            )));
        }
        Ok(())
    }
}

impl ZinbielTwoAlgebra {
    pub fn new(z1: ZinbielAlgebra, z0: ZinbielAlgebra, phi: LinMap, act: BimodulePair) -> Result<Self, Error> {
        let t = ZinbielTwoAlgebra { z1, z0, phi, act };
        t.check_dims()?;
        Ok(t)
    }

    pub fn check_dims(&self) -> Result<(), Error> {
        if self.phi.cols() != self.z1.dim || self.phi.rows() != self.z0.dim {
            return Err(Error::shape(format!(
                "phi must be {}→{}, got {}→{}",
                self.z1.dim,
                self.z0.dim,
                self.phi.cols(),
                self.phi.rows()
            )));
        }
        self.act.check_dims(self.z0.dim, self.z1.dim)
    }

    pub fn field(&self) -> Field {
        self.z0.field()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.z1.dim, self.z0.dim)
    }

    /// (0, Z, 0).
    pub fn from_algebra_zero(z: &ZinbielAlgebra) -> Self {
        let f = z.field();
        ZinbielTwoAlgebra {
            z1: ZinbielAlgebra::zero(f, 0),
            z0: z.clone(),
            phi: LinMap::zero(f, z.dim, 0),
            act: BimodulePair::trivial(f, z.dim, 0),
        }
    }

    /// (Z, Z, id) with the regular action.
    pub fn from_algebra_identity(z: &ZinbielAlgebra) -> Self {
        ZinbielTwoAlgebra {
            z1: z.clone(),
            z0: z.clone(),
            phi: LinMap::identity(z.field(), z.dim),
            act: BimodulePair::regular(z),
        }
    }

    /// A 2-vector space: zero multiplications and trivial action.
    pub fn from_two_vector_space(d: &LinMap) -> Self {
        let f = d.field();
        let (n1, n0) = (d.cols(), d.rows());
        ZinbielTwoAlgebra {
            z1: ZinbielAlgebra::zero(f, n1),
            z0: ZinbielAlgebra::zero(f, n0),
            phi: d.clone(),
            act: BimodulePair::trivial(f, n0, n1),
        }
    }

    pub fn zero(field: Field) -> Self {
        Self::from_two_vector_space(&LinMap::zero(field, 0, 0))
    }

    pub fn mult(&self, level: usize) -> &BilMap {
        if level == 0 {
            &self.z0.mult
        } else {
            &self.z1.mult
        }
    }
}

impl TwoMorphism {
    pub fn identity(t: &ZinbielTwoAlgebra) -> Self {
        let f = t.field();
        TwoMorphism { phi1: LinMap::identity(f, t.z1.dim), phi0: LinMap::identity(f, t.z0.dim) }
    }

    pub fn is_invertible(&self) -> bool {
        self.phi1.is_invertible() && self.phi0.is_invertible()
    }
}

/// g∘m∘(g⁻¹ × g⁻¹) style transport of a bilinear map.
fn transport(m: &BilMap, out: &LinMap, left_inv: &LinMap, right_inv: &LinMap) -> BilMap {
    m.pullback(out, left_inv, right_inv).expect("square transport maps")
}

/// The image of `t` under the isomorphism (g1, g0).
pub fn transport_two_algebra(t: &ZinbielTwoAlgebra, g1: &LinMap, g0: &LinMap) -> ZinbielTwoAlgebra {
    let (i1, i0) = (g1.inverse().expect("g1 invertible"), g0.inverse().expect("g0 invertible"));
    ZinbielTwoAlgebra {
        z1: ZinbielAlgebra { dim: t.z1.dim, mult: transport(&t.z1.mult, g1, &i1, &i1) },
        z0: ZinbielAlgebra { dim: t.z0.dim, mult: transport(&t.z0.mult, g0, &i0, &i0) },
        phi: g0.compose(&t.phi).unwrap().compose(&i1).unwrap(),
        act: BimodulePair {
            left: transport(&t.act.left, g1, &i0, &i1),
            right: transport(&t.act.right, g1, &i1, &i0),
        },
    }
}

/// Checks `f(witness) = (lhs, rhs)` with lhs = rhs over every basis tuple of the given dimensions.
pub(crate) fn check_grid<F>(id: &str, dims: &[usize], f: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> (Vector, Vector) + Sync + Send,
{
    let total: usize = dims.iter().product();
    if total == 0 {
        return Vec::new();
    }
    let tuple = |mut n: usize| {
        let mut t = vec![0; dims.len()];
        for (slot, &d) in t.iter_mut().zip(dims).rev() {
            *slot = n % d;
            n /= d;
        }
        t
    };
    let chunk = 64;
    par::map_chunks(total as u64, chunk, |lo, hi| {
        let mut out = Vec::new();
        for n in lo..hi {
            let w = tuple(n as usize);
            let (lhs, rhs) = f(&w);
            if lhs != rhs {
                out.push(Violation {
                    id: id.to_string(),
                    instance: None,
                    witness: w.iter().map(|i| i + 1).collect(),
                    lhs,
                    rhs,
                });
            }
        }
        out
    })
    .into_iter()
    .flatten()
    .collect()
}

fn report(field: Field, violations: Vec<Violation>) -> ConditionReport {
    let mut r = ConditionReport::from_violations(violations);
    r.conforming_field = !matches!(field, Field::Prime(2) | Field::Prime(3));
    r
}

/// (x·y)·z = x·(y·z + z·y) on basis triples; id "ZIN".
pub fn check_zinbiel(a: &ZinbielAlgebra) -> ConditionReport {
    let f = a.field();
    let n = a.dim;
    let e = |i| basis(f, n, i);
    let v = check_grid("ZIN", &[n, n, n], |w| {
        let (x, y, z) = (e(w[0]), e(w[1]), e(w[2]));
        let lhs = a.mul(&a.mul(&x, &y), &z);
        let rhs = a.mul(&x, &add(&a.mul(&y, &z), &a.mul(&z, &y)));
        (lhs, rhs)
    });
    report(f, v)
}

fn bimodule_violations(z: &ZinbielAlgebra, dim_v: usize, act: &BimodulePair) -> Vec<Violation> {
    let f = z.field();
    let n = z.dim;
    let ez = |i| basis(f, n, i);
    let ev = |i| basis(f, dim_v, i);
    let l = |a: &Vector, b: &Vector| act.left.eval_vec(a, b);
    let r = |a: &Vector, b: &Vector| act.right.eval_vec(a, b);
    let mut out = check_grid("B1", &[n, n, dim_v], |w| {
        let (x, y, v) = (ez(w[0]), ez(w[1]), ev(w[2]));
        (l(&z.mul(&x, &y), &v), l(&x, &add(&l(&y, &v), &r(&v, &y))))
    });
    out.extend(check_grid("B2", &[dim_v, n, n], |w| {
        let (v, x, y) = (ev(w[0]), ez(w[1]), ez(w[2]));
        (r(&r(&v, &x), &y), r(&v, &add(&z.mul(&x, &y), &z.mul(&y, &x))))
    }));
    out.extend(check_grid("B3", &[n, dim_v, n], |w| {
        let (x, v, y) = (ez(w[0]), ev(w[1]), ez(w[2]));
        (r(&l(&x, &v), &y), l(&x, &add(&r(&v, &y), &l(&y, &v))))
    }));
    out
}

/// Bimodule axioms B1–B3; Zinbiel failures of Z are included as precondition entries.
pub fn check_bimodule(z: &ZinbielAlgebra, dim_v: usize, act: &BimodulePair) -> Result<ConditionReport, Error> {
    act.check_dims(z.dim, dim_v)?;
    let pre = check_zinbiel(z).tagged("precondition");
    Ok(pre.merge(report(z.field(), bimodule_violations(z, dim_v, act))))
}

/// (x,u)·(y,v) = (x·y, x⊳v + u⊲y) on Z ⊕ V.
pub fn semidirect_product(z: &ZinbielAlgebra, dim_v: usize, act: &BimodulePair) -> Result<ZinbielAlgebra, Error> {
    let rep = check_bimodule(z, dim_v, act)?;
    if !rep.ok() {
        return Err(Error::Precondition { what: "bimodule axioms".into(), report: Box::new(rep) });
    }
    let n = z.dim;
    let mut m = BilMap::zero(z.field(), n + dim_v, n + dim_v, n + dim_v);
    z.mult.add_block_into(&mut m, 0, 0, 0);
    act.left.add_block_into(&mut m, 0, n, n);
    act.right.add_block_into(&mut m, n, 0, n);
    Ok(ZinbielAlgebra { dim: n + dim_v, mult: m })
}

fn action_violations(z0: &ZinbielAlgebra, z1: &ZinbielAlgebra, act: &BimodulePair) -> Vec<Violation> {
    let f = z0.field();
    let (n0, n1) = (z0.dim, z1.dim);
    let e0 = |i| basis(f, n0, i);
    let e1 = |i| basis(f, n1, i);
    let l = |a: &Vector, b: &Vector| act.left.eval_vec(a, b);
    let r = |a: &Vector, b: &Vector| act.right.eval_vec(a, b);
    let m1 = |a: &Vector, b: &Vector| z1.mul(a, b);
    let mut out = check_grid("A1", &[n0, n1, n1], |w| {
        let (x0, x1, y1) = (e0(w[0]), e1(w[1]), e1(w[2]));
        (m1(&l(&x0, &x1), &y1), l(&x0, &add(&m1(&x1, &y1), &m1(&y1, &x1))))
    });
    out.extend(check_grid("A2", &[n1, n0, n1], |w| {
        let (x1, x0, y1) = (e1(w[0]), e0(w[1]), e1(w[2]));
        (m1(&r(&x1, &x0), &y1), m1(&x1, &add(&l(&x0, &y1), &r(&y1, &x0))))
    }));
    out.extend(check_grid("A3", &[n1, n1, n0], |w| {
        let (x1, y1, x0) = (e1(w[0]), e1(w[1]), e0(w[2]));
        (r(&m1(&x1, &y1), &x0), m1(&x1, &add(&r(&y1, &x0), &l(&x0, &y1))))
    }));
    out
}

/// Zinbiel identities on both algebras, bimodule axioms and A1–A3.
pub fn check_action(z0: &ZinbielAlgebra, z1: &ZinbielAlgebra, act: &BimodulePair) -> Result<ConditionReport, Error> {
    act.check_dims(z0.dim, z1.dim)?;
    Ok(check_zinbiel(z0)
        .tagged("Z0")
        .merge(check_zinbiel(z1).tagged("Z1"))
        .merge(report(z0.field(), bimodule_violations(z0, z1.dim, act)))
        .merge(report(z0.field(), action_violations(z0, z1, act))))
}

/// Everything in `check_action` plus CM1–CM4 and the derived CM5.
pub fn check_crossed_module(t: &ZinbielTwoAlgebra) -> Result<ConditionReport, Error> {
    t.check_dims()?;
    let base = check_action(&t.z0, &t.z1, &t.act)?;
    let f = t.field();
    let (n1, n0) = t.dims();
    let e0 = |i| basis(f, n0, i);
    let e1 = |i| basis(f, n1, i);
    let phi = |v: &Vector| t.phi.mul_vec(v);
    let l = |a: &Vector, b: &Vector| t.act.left.eval_vec(a, b);
    let r = |a: &Vector, b: &Vector| t.act.right.eval_vec(a, b);
    let mut v = check_grid("CM1", &[n0, n1], |w| {
        let (x0, x1) = (e0(w[0]), e1(w[1]));
        (phi(&l(&x0, &x1)), t.z0.mul(&x0, &phi(&x1)))
    });
    v.extend(check_grid("CM2", &[n1, n0], |w| {
        let (x1, x0) = (e1(w[0]), e0(w[1]));
        (phi(&r(&x1, &x0)), t.z0.mul(&phi(&x1), &x0))
    }));
    v.extend(check_grid("CM3", &[n1, n1], |w| {
        let (x1, y1) = (e1(w[0]), e1(w[1]));
        (l(&phi(&x1), &y1), t.z1.mul(&x1, &y1))
    }));
    v.extend(check_grid("CM4", &[n1, n1], |w| {
        let (x1, y1) = (e1(w[0]), e1(w[1]));
        (t.z1.mul(&x1, &y1), r(&x1, &phi(&y1)))
    }));
    v.extend(check_grid("CM5", &[n1, n1], |w| {
        let (x1, y1) = (e1(w[0]), e1(w[1]));
        (phi(&t.z1.mul(&x1, &y1)), t.z0.mul(&phi(&x1), &phi(&y1)))
    }));
    Ok(base.merge(report(f, v)))
}

/// M1/M2: φ₁, φ₀ multiplicative; M3: φ′∘φ₁ = φ₀∘φ; M4/M5: actions intertwined.
pub fn check_2alg_morphism(
    t: &ZinbielTwoAlgebra,
    t2: &ZinbielTwoAlgebra,
    m: &TwoMorphism,
) -> Result<ConditionReport, Error> {
    t.check_dims()?;
    t2.check_dims()?;
    let (n1, n0) = t.dims();
    let (p1, p0) = t2.dims();
    if m.phi1.cols() != n1 || m.phi1.rows() != p1 || m.phi0.cols() != n0 || m.phi0.rows() != p0 {
        return Err(Error::shape("morphism dimensions do not match the 2-algebras".into()));
    }
    let f = t.field();
    let e0 = |i| basis(f, n0, i);
    let e1 = |i| basis(f, n1, i);
    let f1 = |v: &Vector| m.phi1.mul_vec(v);
    let f0 = |v: &Vector| m.phi0.mul_vec(v);
    let mut v = check_grid("M1", &[n1, n1], |w| {
        let (x, y) = (e1(w[0]), e1(w[1]));
        (f1(&t.z1.mul(&x, &y)), t2.z1.mul(&f1(&x), &f1(&y)))
    });
    v.extend(check_grid("M2", &[n0, n0], |w| {
        let (x, y) = (e0(w[0]), e0(w[1]));
        (f0(&t.z0.mul(&x, &y)), t2.z0.mul(&f0(&x), &f0(&y)))
    }));
    v.extend(check_grid("M3", &[n1], |w| {
        let x = e1(w[0]);
        (t2.phi.mul_vec(&f1(&x)), f0(&t.phi.mul_vec(&x)))
    }));
    v.extend(check_grid("M4", &[n0, n1], |w| {
        let (x0, x1) = (e0(w[0]), e1(w[1]));
        (f1(&t.act.left.eval_vec(&x0, &x1)), t2.act.left.eval_vec(&f0(&x0), &f1(&x1)))
    }));
    v.extend(check_grid("M5", &[n1, n0], |w| {
        let (x1, x0) = (e1(w[0]), e0(w[1]));
        (f1(&t.act.right.eval_vec(&x1, &x0)), t2.act.right.eval_vec(&f1(&x1), &f0(&x0)))
    }));
    Ok(report(f, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1e1(f: Field) -> ZinbielAlgebra {
        let mut m = BilMap::zero(f, 2, 2, 2);
        m.set(1, 0, 0, f.one());
        ZinbielAlgebra::new(m).unwrap()
    }

    fn idempotent(f: Field) -> ZinbielAlgebra {
        let mut m = BilMap::zero(f, 1, 1, 1);
        m.set(0, 0, 0, f.one());
        ZinbielAlgebra::new(m).unwrap()
    }

    #[test]
    fn zinbiel_examples() {
        assert!(check_zinbiel(&e1e1(Field::Rationals)).ok());
        assert!(check_zinbiel(&ZinbielAlgebra::zero(Field::Rationals, 3)).ok());
        let f = Field::Prime(5);
        let r = check_zinbiel(&idempotent(f));
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.witness, vec![1, 1, 1]);
        assert_eq!(v.lhs, vec![f.int(1)]);
        assert_eq!(v.rhs, vec![f.int(2)]);
    }

    fn scalar_action(f: Field, a: i64, b: i64) -> BimodulePair {
        let mut l = BilMap::zero(f, 1, 1, 1);
        l.set(0, 0, 0, f.int(a));
        let mut r = BilMap::zero(f, 1, 1, 1);
        r.set(0, 0, 0, f.int(b));
        BimodulePair { left: l, right: r }
    }

    #[test]
    fn bimodule_examples() {
        let f = Field::Prime(5);
        let z = ZinbielAlgebra::zero(f, 1);
        assert!(check_bimodule(&z, 1, &BimodulePair::trivial(f, 1, 1)).unwrap().ok());
        // a(a+b) = 0 holds for (1,4); b² = 0 still fails B2.
        let r = check_bimodule(&z, 1, &scalar_action(f, 1, 4)).unwrap();
        assert!(!r.ids().contains(&"B1"));
        let r = check_bimodule(&z, 1, &scalar_action(f, 1, 1)).unwrap();
        let b1 = r.violations.iter().find(|v| v.id == "B1").unwrap();
        assert_eq!(b1.witness, vec![1, 1, 1]);
        assert_eq!(b1.lhs, vec![f.zero()]);
        assert_eq!(b1.rhs, vec![f.int(2)]);
        let q = e1e1(Field::Rationals);
        assert!(check_bimodule(&q, 2, &BimodulePair::regular(&q)).unwrap().ok());
    }

    #[test]
    fn semidirect_examples() {
        let q = Field::Rationals;
        let z = e1e1(q);
        let s = semidirect_product(&z, 2, &BimodulePair::regular(&z)).unwrap();
        assert_eq!(s.dim, 4);
        assert!(check_zinbiel(&s).ok());
        let same = semidirect_product(&z, 0, &BimodulePair::trivial(q, 2, 0)).unwrap();
        assert_eq!(same, z);
        let f = Field::Prime(5);
        let bad = semidirect_product(&ZinbielAlgebra::zero(f, 1), 1, &scalar_action(f, 1, 1));
        assert!(matches!(bad, Err(Error::Precondition { .. })));
    }

    #[test]
    fn action_examples() {
        let q = Field::Rationals;
        let z1 = ZinbielAlgebra::zero(q, 1);
        let z0 = e1e1(q);
        assert!(check_action(&z0, &z1, &BimodulePair::trivial(q, 2, 1)).unwrap().ok());
        assert!(check_action(&z0, &z0, &BimodulePair::regular(&z0)).unwrap().ok());
        assert!(check_action(&z0, &e1e1(q), &BimodulePair::trivial(q, 2, 2)).unwrap().ok());
    }

    #[test]
    fn crossed_module_examples() {
        let q = Field::Rationals;
        let z = e1e1(q);
        assert!(check_crossed_module(&ZinbielTwoAlgebra::from_algebra_zero(&z)).unwrap().ok());
        assert!(check_crossed_module(&ZinbielTwoAlgebra::from_algebra_identity(&z)).unwrap().ok());
        let d = LinMap::from_ints(q, 2, 3, &[1, 2, 0, 0, 1, 5]);
        assert!(check_crossed_module(&ZinbielTwoAlgebra::from_two_vector_space(&d)).unwrap().ok());
    }

    #[test]
    fn morphism_examples() {
        let q = Field::Rationals;
        let t = ZinbielTwoAlgebra::from_algebra_identity(&e1e1(q));
        assert!(check_2alg_morphism(&t, &t, &TwoMorphism::identity(&t)).unwrap().ok());
        let zero = ZinbielTwoAlgebra::zero(q);
        let m = TwoMorphism { phi1: LinMap::zero(q, 0, 2), phi0: LinMap::zero(q, 0, 2) };
        assert!(check_2alg_morphism(&t, &zero, &m).unwrap().ok());
        let mut t2 = t.clone();
        t2.z0.mult.set(0, 1, 1, q.one());
        let r = check_2alg_morphism(&t, &t2, &TwoMorphism::identity(&t)).unwrap();
        assert_eq!(r.ids(), vec!["M2"]);
        assert_eq!(r.violations[0].witness, vec![2, 2]);
    }
}
