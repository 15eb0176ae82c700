//! Morphisms Z♮V → Z♮′V given by (r, s), the equivalence and cohomology relations on
//! extending data, and exhaustive censuses over GF(p).
//!
//! Orbits are computed from the group G of pairs (r, s) with sᵢ invertible and s₀∘d = d∘s₁
//! (s = id for cohomology). It acts on valid data by transport of Z♮V along
//! (x, u) ↦ (x + r(u), s(u)), and two data are related exactly when they share an orbit.

use std::collections::HashMap;

use crate::codec::{canonical_string, datum_json};
use crate::conditions::{self, CheckOptions, ListId, MorphismEnv};
use crate::error::Error;
use crate::exact_linear::{Field, LinMap};
use crate::par;
use crate::report::ConditionReport;
use crate::unified_product::{build_unified_product, ExtendingDatum, Frame};
use crate::zinbiel_core::{check_2alg_morphism, check_crossed_module, transport_two_algebra, TwoMorphism, ZinbielTwoAlgebra};

/// Default cap on the number of candidates an exhaustive search may visit.
pub const DEFAULT_BUDGET: u128 = 390_625;

/// r: V → Z and s: V → V at both levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSData {
    pub r1: LinMap,
    pub r0: LinMap,
    pub s1: LinMap,
    pub s0: LinMap,
}

impl RSData {
    /// r = 0, s = id.
    pub fn identity(d: &ExtendingDatum) -> Self {
        let f = d.field();
        let (zd, vd) = (d.zdims(), d.vdims());
        RSData {
            r1: LinMap::zero(f, zd[1], vd[1]),
            r0: LinMap::zero(f, zd[0], vd[0]),
            s1: LinMap::identity(f, vd[1]),
            s0: LinMap::identity(f, vd[0]),
        }
    }

    /// [r₀, r₁], indexed by level.
    pub fn r(&self) -> [LinMap; 2] {
        [self.r0.clone(), self.r1.clone()]
    }

    pub fn s(&self) -> [LinMap; 2] {
        [self.s0.clone(), self.s1.clone()]
    }

    pub fn s_invertible(&self) -> bool {
        self.s0.is_invertible() && self.s1.is_invertible()
    }

    fn check_dims(&self, d: &ExtendingDatum) -> Result<(), Error> {
        let (zd, vd) = (d.zdims(), d.vdims());
        let want = [
            ("r1", &self.r1, zd[1], vd[1]),
            ("r0", &self.r0, zd[0], vd[0]),
            ("s1", &self.s1, vd[1], vd[1]),
            ("s0", &self.s0, vd[0], vd[0]),
        ];
        for (name, m, rows, cols) in want {
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::Shape(format!(
                    "{name} must be {rows}×{cols}, got {}×{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(())
    }
}

fn same_base(d1: &ExtendingDatum, d2: &ExtendingDatum) -> Result<(), Error> {
    d1.check_dims()?;
    d2.check_dims()?;
    if d1.z != d2.z || d1.v != d2.v {
        return Err(Error::Shape("both data must share Z and (V1, V0, d)".into()));
    }
    Ok(())
}

/// ψᵢ(x, u) = (x + rᵢ(u), sᵢ(u)) as a map Z♮V → Z♮′V. Nothing about it is checked.
pub fn morphism_from_rs(rs: &RSData, d1: &ExtendingDatum, d2: &ExtendingDatum) -> Result<TwoMorphism, Error> {
    same_base(d1, d2)?;
    rs.check_dims(d1)?;
    let f = d1.field();
    let block = |z: usize, r: &LinMap, s: &LinMap| LinMap::block(&LinMap::identity(f, z), r, &LinMap::zero(f, s.rows(), z), s);
    let zd = d1.zdims();
    Ok(TwoMorphism { phi1: block(zd[1], &rs.r1, &rs.s1), phi0: block(zd[0], &rs.r0, &rs.s0) })
}

/// (H1)–(H20) for the pair (D, D′) and the maps rs.
pub fn check_rs_conditions(rs: &RSData, d1: &ExtendingDatum, d2: &ExtendingDatum) -> Result<ConditionReport, Error> {
    check_rs_conditions_with(rs, d1, d2, &CheckOptions::default())
}

pub fn check_rs_conditions_with(
    rs: &RSData,
    d1: &ExtendingDatum,
    d2: &ExtendingDatum,
    opts: &CheckOptions,
) -> Result<ConditionReport, Error> {
    same_base(d1, d2)?;
    rs.check_dims(d1)?;
    let (r, s) = (rs.r(), rs.s());
    Ok(conditions::evaluate(ListId::H, &MorphismEnv { d1, d2, r: &r, s: &s }, opts))
}

/// Direct check that ψ is a morphism Z♮V → Z♮′V.
pub fn check_rs_direct(rs: &RSData, d1: &ExtendingDatum, d2: &ExtendingDatum) -> Result<ConditionReport, Error> {
    let m = morphism_from_rs(rs, d1, d2)?;
    check_2alg_morphism(&build_unified_product(d1)?, &build_unified_product(d2)?, &m)
}

pub fn is_isomorphism(rs: &RSData, d1: &ExtendingDatum, d2: &ExtendingDatum) -> Result<bool, Error> {
    Ok(morphism_from_rs(rs, d1, d2)?.is_invertible())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Some (r, s) with s invertible.
    Equivalent,
    /// Some (r, id).
    Cohomologous,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Equivalent => "equivalent",
            Relation::Cohomologous => "cohomologous",
        }
    }
}

fn field_order(f: Field) -> Result<u64, Error> {
    f.order().ok_or(Error::NeedsFiniteField(f))
}

fn power(q: u64, n: usize) -> u128 {
    (0..n).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

/// Base-q digits of `n`, most significant first.
fn digits(mut n: u128, q: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (n % q as u128) as u64;
        n /= q as u128;
    }
    out
}

fn fill(f: Field, rows: usize, cols: usize, ds: &mut impl Iterator<Item = u64>) -> LinMap {
    let mut m = LinMap::zero(f, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, f.element(ds.next().unwrap()));
        }
    }
    m
}

/// Every (r, s) in the stabilizer group of (V, d) for the relation, in lexicographic order.
pub fn rs_group(d: &ExtendingDatum, rel: Relation, budget: u128) -> Result<Vec<RSData>, Error> {
    let f = d.field();
    let q = field_order(f)?;
    let (zd, vd) = (d.zdims(), d.vdims());
    let nr = zd[1] * vd[1] + zd[0] * vd[0];
    let ns = match rel {
        Relation::Equivalent => vd[1] * vd[1] + vd[0] * vd[0],
        Relation::Cohomologous => 0,
    };
    let count = power(q, nr + ns);
    if count > budget {
        return Err(Error::InfeasibleSearch { count, budget });
    }
    let id = RSData::identity(d);
    let dm = &d.v.d;
    let found = par::map_chunks(count as u64, 4096, |lo, hi| {
        let mut out = Vec::new();
        for n in lo..hi {
            let mut ds = digits(n as u128, q, nr + ns).into_iter();
            let r1 = fill(f, zd[1], vd[1], &mut ds);
            let r0 = fill(f, zd[0], vd[0], &mut ds);
            let (s1, s0) = match rel {
                Relation::Equivalent => (fill(f, vd[1], vd[1], &mut ds), fill(f, vd[0], vd[0], &mut ds)),
                Relation::Cohomologous => (id.s1.clone(), id.s0.clone()),
            };
            let rs = RSData { r1, r0, s1, s0 };
            if rs.s_invertible() && rs.s0.compose(dm).unwrap() == dm.compose(&rs.s1).unwrap() {
                out.push(rs);
            }
        }
        out
    });
    Ok(found.into_iter().flatten().collect())
}

fn require_valid(d: &ExtendingDatum, what: &str) -> Result<ZinbielTwoAlgebra, Error> {
    let e = build_unified_product(d)?;
    let rep = check_crossed_module(&d.z)?.merge(check_crossed_module(&e)?);
    if !rep.ok() {
        return Err(Error::Precondition { what: format!("{what} is not a valid extending datum"), report: Box::new(rep) });
    }
    Ok(e)
}

/// Searches all (r, s) for an isomorphism Z♮V → Z♮′V of the required form.
pub fn are_equivalent(
    d1: &ExtendingDatum,
    d2: &ExtendingDatum,
    rel: Relation,
    budget: u128,
) -> Result<Option<RSData>, Error> {
    same_base(d1, d2)?;
    let e1 = require_valid(d1, "D")?;
    let e2 = require_valid(d2, "D′")?;
    let group = rs_group(d1, rel, budget)?;
    let hit = par::find_first(group.len(), |i| {
        let m = morphism_from_rs(&group[i], d1, d2).expect("dimensions checked");
        check_2alg_morphism(&e1, &e2, &m).map(|r| r.ok()).unwrap_or(false)
    });
    Ok(hit.map(|i| group[i].clone()))
}

/// The datum D′ for which (r, s) is an isomorphism Z♮D → Z♮D′.
pub fn act(rs: &RSData, d: &ExtendingDatum) -> Result<ExtendingDatum, Error> {
    let m = morphism_from_rs(rs, d, d)?;
    let e = transport_two_algebra(&build_unified_product(d)?, &m.phi1, &m.phi0);
    let f = d.field();
    let ed = [m.phi0.rows(), m.phi1.rows()];
    let frame = Frame::from_basis([LinMap::identity(f, ed[0]), LinMap::identity(f, ed[1])], d.zdims())
        .expect("identity frame");
    Ok(frame.adapt(&e)?.datum())
}

/// Every valid datum over (Z, V₁, V₀, d), in lexicographic order of slot values.
pub fn enumerate_valid_data(
    z: &ZinbielTwoAlgebra,
    v: crate::exact_linear::TwoVectorSpace,
    budget: u128,
) -> Result<Vec<ExtendingDatum>, Error> {
    let f = z.field();
    let q = field_order(f)?;
    let template = ExtendingDatum::trivial(z.clone(), v);
    template.check_dims()?;
    let zrep = check_crossed_module(z)?;
    if !zrep.ok() {
        return Err(Error::Precondition { what: "Z is not a Zinbiel 2-algebra".into(), report: Box::new(zrep) });
    }
    let slots = template.slots();
    let count = power(q, slots.len());
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }
    let found = par::map_chunks(count as u64, 256, |lo, hi| {
        let mut out = Vec::new();
        for n in lo..hi {
            let mut d = template.clone();
            for (s, x) in slots.iter().zip(digits(n as u128, q, slots.len())) {
                if x != 0 {
                    d.set_slot(s, f.element(x));
                }
            }
            let e = build_unified_product(&d).expect("dimensions checked");
            if check_crossed_module(&e).map(|r| r.ok()).unwrap_or(false) {
                out.push(d);
            }
        }
        out
    });
    Ok(found.into_iter().flatten().collect())
}

/// Canonical serialization of a datum.
pub fn datum_key(d: &ExtendingDatum) -> String {
    canonical_string(&datum_json(d))
}

/// A partition of valid data into orbits.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    pub relation: Relation,
    pub items: Vec<ExtendingDatum>,
    pub keys: Vec<String>,
    /// Sorted index sets, ordered by their smallest index.
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Index of the orbit member with the smallest serialization.
    pub fn representative(&self, orbit: usize) -> usize {
        *self.orbits[orbit].iter().min_by(|&&a, &&b| self.keys[a].cmp(&self.keys[b])).unwrap()
    }

    pub fn orbit_of(&self, item: usize) -> usize {
        self.orbits.iter().position(|o| o.binary_search(&item).is_ok()).expect("orbits partition items")
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Partitions `items`, which must be closed under the group action, into orbits.
pub fn compute_quotients(items: Vec<ExtendingDatum>, rel: Relation, budget: u128) -> Result<OrbitPartition, Error> {
    let keys: Vec<String> = par::map_slice(&items, datum_key);
    let index: HashMap<&str, usize> = keys.iter().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
    let group = match items.first() {
        Some(d) => rs_group(d, rel, budget)?,
        None => Vec::new(),
    };
    let edges = par::map_range(items.len(), |i| {
        group
            .iter()
            .map(|g| {
                let key = datum_key(&act(g, &items[i])?);
                index.get(key.as_str()).copied().ok_or_else(|| {
                    Error::Shape(format!("the data are not closed under the action (item {i})"))
                })
            })
            .collect::<Result<Vec<usize>, Error>>()
    });
    let mut parent: Vec<usize> = (0..items.len()).collect();
    for (i, targets) in edges.into_iter().enumerate() {
        for j in targets? {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); items.len()];
    for i in 0..items.len() {
        let r = find(&mut parent, i);
        by_root[r].push(i);
    }
    let orbits: Vec<Vec<usize>> = by_root.into_iter().filter(|o| !o.is_empty()).collect();
    Ok(OrbitPartition { relation: rel, items, keys, orbits })
}

/// The result of a classification run.
#[derive(Clone, Debug)]
pub struct Census {
    pub field: Field,
    pub z: ZinbielTwoAlgebra,
    pub vdims: (usize, usize),
    pub valid_count: usize,
    pub relation: Relation,
    pub representatives: Vec<ExtendingDatum>,
}

impl Census {
    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Enumerates every valid datum and reduces it modulo the relation.
pub fn census(
    z: &ZinbielTwoAlgebra,
    v: crate::exact_linear::TwoVectorSpace,
    rel: Relation,
    budget: u128,
) -> Result<Census, Error> {
    let vdims = (v.dim1, v.dim0);
    let items = enumerate_valid_data(z, v, budget)?;
    let part = compute_quotients(items, rel, budget)?;
    let representatives = (0..part.orbits.len()).map(|o| part.items[part.representative(o)].clone()).collect();
    Ok(Census {
        field: z.field(),
        z: z.clone(),
        vdims,
        valid_count: part.items.len(),
        relation: rel,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linear::TwoVectorSpace;
    use crate::unified_product::MapKind;

    fn zero01(f: Field) -> ZinbielTwoAlgebra {
        ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 1, 0))
    }

    #[test]
    fn identity_rs_is_the_identity_morphism() {
        let f = Field::Prime(5);
        let d = ExtendingDatum::trivial(zero01(f), TwoVectorSpace::zero_map(f, 0, 1));
        let rs = RSData::identity(&d);
        let m = morphism_from_rs(&rs, &d, &d).unwrap();
        assert!(m.phi0.is_identity() && m.phi1.is_identity());
        assert!(check_rs_conditions(&rs, &d, &d).unwrap().ok());
        assert_eq!(are_equivalent(&d, &d, Relation::Cohomologous, DEFAULT_BUDGET).unwrap(), Some(rs));
    }

    #[test]
    fn zero_s_gives_a_projection() {
        let f = Field::Prime(5);
        let d = ExtendingDatum::trivial(zero01(f), TwoVectorSpace::zero_map(f, 0, 1));
        let mut rs = RSData::identity(&d);
        rs.s0 = LinMap::zero(f, 1, 1);
        assert!(check_rs_direct(&rs, &d, &d).unwrap().ok());
        assert!(check_rs_conditions(&rs, &d, &d).unwrap().ok());
        assert!(!is_isomorphism(&rs, &d, &d).unwrap());
    }

    #[test]
    fn action_lands_on_an_equivalent_datum() {
        let f = Field::Prime(5);
        let mut d = ExtendingDatum::trivial(zero01(f), TwoVectorSpace::zero_map(f, 0, 1));
        d.map_mut(MapKind::Omega, 0).set(0, 0, 0, f.one());
        let mut g = RSData::identity(&d);
        g.s0.set(0, 0, f.int(2));
        g.r0.set(0, 0, f.int(3));
        let d2 = act(&g, &d).unwrap();
        assert!(check_rs_direct(&g, &d, &d2).unwrap().ok());
        assert_eq!(d2.map(MapKind::Omega, 0).get(0, 0, 0), f.int(4));
        assert!(are_equivalent(&d, &d2, Relation::Equivalent, DEFAULT_BUDGET).unwrap().is_some());
    }

    #[test]
    fn empty_v_has_one_datum() {
        let f = Field::Prime(5);
        let items = enumerate_valid_data(&zero01(f), TwoVectorSpace::zero_map(f, 0, 0), DEFAULT_BUDGET).unwrap();
        assert_eq!(items.len(), 1);
        let p = compute_quotients(items, Relation::Equivalent, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.orbits, vec![vec![0]]);
    }

    #[test]
    fn invalid_z_and_budget_are_refused() {
        let f = Field::Prime(5);
        let mut m = crate::exact_linear::BilMap::zero(f, 1, 1, 1);
        m.set(0, 0, 0, f.one());
        let z = ZinbielTwoAlgebra::from_algebra_zero(&crate::zinbiel_core::ZinbielAlgebra { dim: 1, mult: m });
        let v = TwoVectorSpace::zero_map(f, 0, 1);
        assert!(matches!(enumerate_valid_data(&z, v.clone(), DEFAULT_BUDGET), Err(Error::Precondition { .. })));
        let err = enumerate_valid_data(&zero01(f), v, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { count: 15625, budget: 100 }));
        let q = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(Field::Rationals, 1, 0));
        let err = enumerate_valid_data(&q, TwoVectorSpace::zero_map(Field::Rationals, 0, 1), 100).unwrap_err();
        assert!(matches!(err, Error::NeedsFiniteField(Field::Rationals)));
    }
}
