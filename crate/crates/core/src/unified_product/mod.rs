//! Extending data, the unified product, its condition lists, and datum extraction from a split.

mod datum;
mod split;

pub use datum::{ExtendingDatum, MapKind, Slot, LEVELS};
pub use split::{extract_datum, verify_psi, ComplementSplit};
pub(crate) use split::{Frame, OP_NAMES};

use crate::conditions::{self, CheckOptions, ListId};
use crate::error::Error;
use crate::exact_linear::{BilMap, LinMap};
use crate::report::ConditionReport;
use crate::zinbiel_core::{check_crossed_module, BimodulePair, ZinbielAlgebra, ZinbielTwoAlgebra};

/// Multiplication tensor of product j on Z ⊕ V: the Z-part `zop` plus the six datum contributions.
fn product_tensor(d: &ExtendingDatum, j: usize, zop: &BilMap) -> BilMap {
    let (la, lb, lo) = LEVELS[j];
    let (zd, vd) = (d.zdims(), d.vdims());
    let mut t = BilMap::zero(d.field(), zd[la] + vd[la], zd[lb] + vd[lb], zd[lo] + vd[lo]);
    zop.add_block_into(&mut t, 0, 0, 0);
    for kind in MapKind::ALL {
        let (a, b, c) = kind.shape();
        let off = |is_v: bool, l: usize| if is_v { zd[l] } else { 0 };
        d.map(kind, j).add_block_into(&mut t, off(a, la), off(b, lb), off(c, lo));
    }
    t
}

/// The candidate 2-algebra Z♮V. No validity check is made.
pub fn build_unified_product(d: &ExtendingDatum) -> Result<ZinbielTwoAlgebra, Error> {
    d.check_dims()?;
    let z = &d.z;
    let t0 = product_tensor(d, 0, &z.z0.mult);
    let t1 = product_tensor(d, 1, &z.z1.mult);
    let left = product_tensor(d, 2, &z.act.left);
    let right = product_tensor(d, 3, &z.act.right);
    let f = d.field();
    let phi = LinMap::block(&z.phi, &d.sigma, &LinMap::zero(f, d.v.dim0, z.z1.dim), &d.v.d);
    Ok(ZinbielTwoAlgebra {
        z1: ZinbielAlgebra { dim: t1.dim_a(), mult: t1 },
        z0: ZinbielAlgebra { dim: t0.dim_a(), mult: t0 },
        phi,
        act: BimodulePair { left, right },
    })
}

fn require_valid_z(d: &ExtendingDatum) -> Result<(), Error> {
    d.check_dims()?;
    let rep = check_crossed_module(&d.z)?;
    if !rep.ok() {
        return Err(Error::Precondition { what: "Z is not a Zinbiel 2-algebra".into(), report: Box::new(rep) });
    }
    Ok(())
}

/// Builds Z♮V and verifies every crossed-module axiom on it.
pub fn check_datum_direct(d: &ExtendingDatum) -> Result<ConditionReport, Error> {
    require_valid_z(d)?;
    check_crossed_module(&build_unified_product(d)?)
}

/// Evaluates (Z1)–(Z120).
pub fn check_datum_conditions(d: &ExtendingDatum) -> Result<ConditionReport, Error> {
    check_datum_conditions_with(d, &CheckOptions::default())
}

pub fn check_datum_conditions_with(d: &ExtendingDatum, opts: &CheckOptions) -> Result<ConditionReport, Error> {
    require_valid_z(d)?;
    Ok(conditions::check_list(ListId::Z, d, opts))
}

/// Evaluates (ZZ1)–(ZZ40); requires Z₁ = 0.
pub fn check_trivialz1_conditions(d: &ExtendingDatum) -> Result<ConditionReport, Error> {
    check_trivialz1_conditions_with(d, &CheckOptions::default())
}

pub fn check_trivialz1_conditions_with(d: &ExtendingDatum, opts: &CheckOptions) -> Result<ConditionReport, Error> {
    if d.z.z1.dim != 0 {
        return Err(Error::Precondition {
            what: format!("dim Z1 must be 0, got {}", d.z.z1.dim),
            report: Box::default(),
        });
    }
    require_valid_z(d)?;
    Ok(conditions::check_list(ListId::ZZ, d, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::{Field, TwoVectorSpace};

    fn zero_z(f: Field, n1: usize, n0: usize) -> ZinbielTwoAlgebra {
        ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, n0, n1))
    }

    #[test]
    fn trivial_datum_is_direct_product() {
        let f = Field::Prime(5);
        let z = zero_z(f, 1, 1);
        let d = ExtendingDatum::trivial(z, TwoVectorSpace::zero_map(f, 1, 1));
        let e = build_unified_product(&d).unwrap();
        assert_eq!(e.dims(), (2, 2));
        assert!(check_datum_direct(&d).unwrap().ok());
    }

    #[test]
    fn empty_v_returns_z() {
        let q = Field::Rationals;
        let mut m = BilMap::zero(q, 2, 2, 2);
        m.set(1, 0, 0, q.one());
        let z = ZinbielTwoAlgebra::from_algebra_identity(&ZinbielAlgebra::new(m).unwrap());
        let d = ExtendingDatum::trivial(z.clone(), TwoVectorSpace::zero_map(q, 0, 0));
        assert_eq!(build_unified_product(&d).unwrap(), z);
    }

    #[test]
    fn tri_r2_expands_by_hand() {
        // Z1 = 0, Z0 = V0 = V1 = k; only x0 ⊳2 u1 = 3 u1.
        let f = Field::Prime(5);
        let z = zero_z(f, 0, 1);
        let mut d = ExtendingDatum::trivial(z, TwoVectorSpace::zero_map(f, 1, 1));
        d.tri_r[2].set(0, 0, 0, f.int(3));
        let e = build_unified_product(&d).unwrap();
        // E0 = span(x0, u0), E1 = span(u1): (x0, 0) ⊳ u1 = 3 u1 and nothing else.
        assert_eq!(e.act.left.dims(), (2, 1, 1));
        assert_eq!(e.act.left.nnz(), 1);
        assert_eq!(e.act.left.get(0, 0, 0), f.int(3));
        assert!(e.act.right.is_zero() && e.z0.mult.is_zero() && e.z1.mult.is_zero());
    }

    #[test]
    fn invalid_z_is_a_precondition_error() {
        let f = Field::Prime(5);
        let mut m = BilMap::zero(f, 1, 1, 1);
        m.set(0, 0, 0, f.one());
        let z = ZinbielTwoAlgebra::from_algebra_zero(&ZinbielAlgebra::new(m).unwrap());
        let d = ExtendingDatum::trivial(z, TwoVectorSpace::zero_map(f, 0, 1));
        assert!(matches!(check_datum_direct(&d), Err(Error::Precondition { .. })));
    }
}
