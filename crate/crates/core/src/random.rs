//! Seeded random structures for tests, sweeps and benches.

use rand::Rng;

use crate::exact_linear::{BilMap, Field, LinMap, Scalar, TwoVectorSpace, Vector};
use crate::special_products::{build_bicrossed_product, MatchedPairDatum};
use crate::unified_product::{ComplementSplit, ExtendingDatum, MapKind, LEVELS};
use crate::zinbiel_core::{check_crossed_module, check_zinbiel, BimodulePair, ZinbielAlgebra, ZinbielTwoAlgebra};
pub use crate::zinbiel_core::transport_two_algebra;

pub fn scalar<R: Rng + ?Sized>(f: Field, rng: &mut R) -> Scalar {
    match f.order() {
        Some(q) => f.element(rng.gen_range(0..q)),
        None => f.int(rng.gen_range(-3..=3)),
    }
}

fn nonzero<R: Rng + ?Sized>(f: Field, rng: &mut R) -> Scalar {
    loop {
        let s = scalar(f, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn linmap<R: Rng + ?Sized>(f: Field, rows: usize, cols: usize, rng: &mut R) -> LinMap {
    let mut m = LinMap::zero(f, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, scalar(f, rng));
        }
    }
    m
}

pub fn invertible<R: Rng + ?Sized>(f: Field, n: usize, rng: &mut R) -> LinMap {
    loop {
        let m = linmap(f, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Each coefficient is nonzero with probability `density`.
pub fn bilmap<R: Rng + ?Sized>(f: Field, a: usize, b: usize, c: usize, density: f64, rng: &mut R) -> BilMap {
    let mut m = BilMap::zero(f, a, b, c);
    for k in 0..c {
        for i in 0..a {
            for j in 0..b {
                if rng.gen_bool(density) {
                    m.set(k, i, j, nonzero(f, rng));
                }
            }
        }
    }
    m
}

/// A random Zinbiel algebra: a strictly nilpotent structure (eᵢeⱼ ∈ span{eₖ : k > max(i, j)})
/// found by rejection, then conjugated by a random invertible matrix.
pub fn zinbiel_algebra<R: Rng + ?Sized>(f: Field, n: usize, rng: &mut R) -> ZinbielAlgebra {
    let mut m = BilMap::zero(f, n, n, n);
    for _ in 0..500 {
        let mut cand = BilMap::zero(f, n, n, n);
        for i in 0..n {
            for j in 0..n {
                for k in (i.max(j) + 1)..n {
                    if rng.gen_bool(0.5) {
                        cand.set(k, i, j, nonzero(f, rng));
                    }
                }
            }
        }
        let a = ZinbielAlgebra { dim: n, mult: cand.clone() };
        if check_zinbiel(&a).ok() {
            m = cand;
            break;
        }
    }
    let g = invertible(f, n, rng);
    let gi = g.inverse().unwrap();
    ZinbielAlgebra { dim: n, mult: m.pullback(&g, &gi, &gi).expect("square transport maps") }
}

/// A random valid Zinbiel 2-algebra with dim Z₁ = n1, dim Z₀ = n0, drawn from a few
/// families (A, A, id), (A with zero product, A, 0), plain 2-vector spaces, and a trivial
/// module over A, then conjugated.
pub fn two_algebra<R: Rng + ?Sized>(f: Field, n1: usize, n0: usize, rng: &mut R) -> ZinbielTwoAlgebra {
    let mut families = vec![2, 3];
    if n1 == n0 {
        families.extend([0, 1]);
    }
    if n1 + n0 >= 2 {
        families.push(4);
    }
    let family = families[rng.gen_range(0..families.len())];
    two_algebra_in_family(f, n1, n0, family, rng)
}

/// As [`two_algebra`] with the family fixed: 0 (A, A, id), 1 (A with zero product, A, 0),
/// 2 a 2-vector space, 3 a trivial module over A, 4 a direct product of two smaller random
/// 2-algebras. Families 0 and 1 need n1 = n0; family 4 needs n1 + n0 ≥ 2.
pub fn two_algebra_in_family<R: Rng + ?Sized>(
    f: Field,
    n1: usize,
    n0: usize,
    family: usize,
    rng: &mut R,
) -> ZinbielTwoAlgebra {
    assert!(family >= 2 || n1 == n0, "family {family} needs equal dimensions");
    let t = match family {
        0 => ZinbielTwoAlgebra::from_algebra_identity(&zinbiel_algebra(f, n0, rng)),
        1 => {
            let a = zinbiel_algebra(f, n0, rng);
            let reg = BimodulePair::regular(&a);
            ZinbielTwoAlgebra {
                z1: ZinbielAlgebra::zero(f, n0),
                phi: LinMap::zero(f, n0, n0),
                act: reg,
                z0: a,
            }
        }
        2 => ZinbielTwoAlgebra::from_two_vector_space(&linmap(f, n0, n1, rng)),
        4 => {
            assert!(n1 + n0 >= 2, "family 4 needs total dimension at least 2");
            let (a1, a0) = loop {
                let a = (rng.gen_range(0..=n1), rng.gen_range(0..=n0));
                if a != (0, 0) && a != (n1, n0) {
                    break a;
                }
            };
            let a = two_algebra(f, a1, a0, rng);
            let b = two_algebra(f, n1 - a1, n0 - a0, rng);
            build_bicrossed_product(&MatchedPairDatum::trivial(a, b)).expect("matching dimensions")
        }
        _ => ZinbielTwoAlgebra {
            z1: ZinbielAlgebra::zero(f, n1),
            z0: zinbiel_algebra(f, n0, rng),
            phi: LinMap::zero(f, n0, n1),
            act: BimodulePair::trivial(f, n0, n1),
        },
    };
    debug_assert!(check_crossed_module(&t).map(|r| r.ok()).unwrap_or(false));
    transport_two_algebra(&t, &invertible(f, n1, rng), &invertible(f, n0, rng))
}

/// Which map families a random datum may populate.
#[derive(Clone, Copy, Debug, Default)]
pub struct DatumShape {
    /// ⊳ⱼ = ⊲ⱼ = 0 (crossed systems).
    pub no_actions: bool,
    /// ωⱼ = 0 and σ = 0 (matched pairs).
    pub no_cocycle: bool,
}

/// Random maps over given Z and V. The result is usually not a valid datum.
pub fn datum<R: Rng + ?Sized>(
    z: &ZinbielTwoAlgebra,
    v: TwoVectorSpace,
    shape: DatumShape,
    density: f64,
    rng: &mut R,
) -> ExtendingDatum {
    let f = z.field();
    let mut d = ExtendingDatum::trivial(z.clone(), v);
    for kind in MapKind::ALL {
        let skip = match kind {
            MapKind::TriR | MapKind::TriL => shape.no_actions,
            MapKind::Omega => shape.no_cocycle,
            _ => false,
        };
        if skip {
            continue;
        }
        for j in 0..4 {
            let (a, b, c) = d.expected_dims(kind, j);
            *d.map_mut(kind, j) = bilmap(f, a, b, c, density, rng);
        }
    }
    if !shape.no_cocycle {
        d.sigma = linmap(f, d.sigma.rows(), d.sigma.cols(), rng);
    }
    d
}

/// One spanning vector per line of Fq^n, scaled so the first nonzero coordinate is 1.
pub fn lines(f: Field, n: usize) -> Vec<Vector> {
    let q = f.order().expect("lines need a finite field");
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = n - lead - 1;
        for m in 0..q.pow(tail as u32) {
            let mut v = vec![f.zero(); n];
            v[lead] = f.one();
            let mut r = m;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = f.element(r % q);
                r /= q;
            }
            out.push(v);
        }
    }
    out
}

fn in_span(span: &LinMap, v: &[Scalar]) -> bool {
    let mut cols: Vec<Vector> = (0..span.cols()).map(|c| span.column(c)).collect();
    let r = span.rank();
    cols.push(v.to_vec());
    LinMap::from_columns(span.field(), span.rows(), &cols).rank() == r
}

/// Whether the column spans of `incl` = [ι₀, ι₁] form a sub-2-algebra of `e`, or with `ideal`,
/// a sub-2-algebra that absorbs every product having one argument in it.
pub fn spans_sub_two_algebra(e: &ZinbielTwoAlgebra, incl: &[LinMap; 2], ideal: bool) -> bool {
    let f = e.field();
    let ed = [e.z0.dim, e.z1.dim];
    let ops = [&e.z0.mult, &e.z1.mult, &e.act.left, &e.act.right];
    let gens = |l: usize, whole: bool| -> Vec<Vector> {
        if whole {
            (0..ed[l]).map(|i| crate::exact_linear::basis(f, ed[l], i)).collect()
        } else {
            (0..incl[l].cols()).map(|c| incl[l].column(c)).collect()
        }
    };
    for (j, op) in ops.iter().enumerate() {
        let (la, lb, lo) = LEVELS[j];
        let mut pairs = vec![(false, false)];
        if ideal {
            pairs.extend([(false, true), (true, false)]);
        }
        for (wa, wb) in pairs {
            for a in gens(la, wa) {
                for b in gens(lb, wb) {
                    if !in_span(&incl[lo], &op.eval_vec(&a, &b)) {
                        return false;
                    }
                }
            }
        }
    }
    gens(1, false).iter().all(|x| in_span(&incl[0], &e.phi.apply(x).unwrap()))
}

/// Every sub-2-algebra (or ideal) of `e` with dimension `dims[l]` ∈ {0, 1} at level l.
pub fn line_sub_two_algebras(e: &ZinbielTwoAlgebra, dims: [usize; 2], ideal: bool) -> Vec<[LinMap; 2]> {
    let f = e.field();
    let ed = [e.z0.dim, e.z1.dim];
    let choices = |l: usize| -> Vec<LinMap> {
        match dims[l] {
            0 => vec![LinMap::zero(f, ed[l], 0)],
            1 => lines(f, ed[l]).iter().map(|v| LinMap::from_columns(f, ed[l], std::slice::from_ref(v))).collect(),
            _ => panic!("only lines are searched"),
        }
    };
    let mut out = Vec::new();
    for i1 in choices(1) {
        for i0 in choices(0) {
            let incl = [i0.clone(), i1.clone()];
            if spans_sub_two_algebra(e, &incl, ideal) {
                out.push(incl);
            }
        }
    }
    out
}

/// A random complement to the columns of `iota`, as a matrix whose columns span it.
pub fn complement<R: Rng + ?Sized>(iota: &LinMap, rng: &mut R) -> LinMap {
    let f = iota.field();
    let n = iota.rows();
    loop {
        let k = linmap(f, n, n - iota.cols(), rng);
        let cols: Vec<Vector> = (0..iota.cols()).map(|c| iota.column(c)).chain((0..k.cols()).map(|c| k.column(c))).collect();
        if LinMap::from_columns(f, n, &cols).is_invertible() {
            return k;
        }
    }
}

/// A split of `e` along `iota` with a random complement.
pub fn complement_split<R: Rng + ?Sized>(e: &ZinbielTwoAlgebra, iota: [LinMap; 2], rng: &mut R) -> ComplementSplit {
    let f = e.field();
    let proj = [0, 1].map(|l| {
        let k = complement(&iota[l], rng);
        let n = iota[l].rows();
        let cols: Vec<Vector> = (0..iota[l].cols()).map(|c| iota[l].column(c)).chain((0..k.cols()).map(|c| k.column(c))).collect();
        LinMap::from_columns(f, n, &cols).inverse().unwrap().row_slice(0, iota[l].cols())
    });
    ComplementSplit::new(e.clone(), iota, proj).expect("projection onto a complement")
}
