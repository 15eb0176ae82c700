//! Matches every compiled condition against a block of an axiom of the unified product.
//!
//! On a random datum, the residual lhs − rhs of a condition instance, as a function of basis
//! tuples, must equal ± the residual of one axiom of Z♮V restricted to a choice of Z or V in
//! each argument and projected onto Z or V. For the H list the axioms are those of a
//! morphism Z♮V → Z♮V' of the form (x, u) ↦ (x + r(u), s(u)).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dsl::{Env, Kind, Space};
use super::{compile_text, conditions, DatumEnv, Instance, ListId, MorphismEnv};
use crate::exact_linear::{add, basis, sub, Field, LinMap, Vector};
use crate::random::{self, DatumShape};
use crate::unified_product::{build_unified_product, ExtendingDatum};
use crate::zinbiel_core::ZinbielTwoAlgebra;

struct Ops<'a> {
    e: &'a ZinbielTwoAlgebra,
    e2: &'a ZinbielTwoAlgebra,
    psi: [LinMap; 2],
}

impl Ops<'_> {
    fn m(&self, l: usize, a: &[crate::exact_linear::Scalar], b: &[crate::exact_linear::Scalar]) -> Vector {
        self.e.mult(l).eval_vec(a, b)
    }
    fn m2(&self, l: usize, a: &[crate::exact_linear::Scalar], b: &[crate::exact_linear::Scalar]) -> Vector {
        self.e2.mult(l).eval_vec(a, b)
    }
    fn lt(&self, a: &Vector, b: &Vector) -> Vector {
        self.e.act.left.eval_vec(a, b)
    }
    fn rt(&self, a: &Vector, b: &Vector) -> Vector {
        self.e.act.right.eval_vec(a, b)
    }
    fn phi(&self, a: &Vector) -> Vector {
        self.e.phi.mul_vec(a)
    }
    fn psi(&self, l: usize, a: &Vector) -> Vector {
        self.psi[l].mul_vec(a)
    }
}

type Axiom = fn(&Ops, &[Vector]) -> Vector;

struct Schema {
    name: &'static str,
    levels: &'static [usize],
    out: usize,
    f: Axiom,
}

const AXIOMS: &[Schema] = &[
    Schema { name: "ZIN0", levels: &[0, 0, 0], out: 0, f: |o, v| {
        sub(&o.m(0, &o.m(0, &v[0], &v[1]), &v[2]), &o.m(0, &v[0], &add(&o.m(0, &v[1], &v[2]), &o.m(0, &v[2], &v[1]))))
    } },
    Schema { name: "ZIN1", levels: &[1, 1, 1], out: 1, f: |o, v| {
        sub(&o.m(1, &o.m(1, &v[0], &v[1]), &v[2]), &o.m(1, &v[0], &add(&o.m(1, &v[1], &v[2]), &o.m(1, &v[2], &v[1]))))
    } },
    Schema { name: "B1", levels: &[0, 0, 1], out: 1, f: |o, v| {
        sub(&o.lt(&o.m(0, &v[0], &v[1]), &v[2]), &o.lt(&v[0], &add(&o.lt(&v[1], &v[2]), &o.rt(&v[2], &v[1]))))
    } },
    Schema { name: "B2", levels: &[1, 0, 0], out: 1, f: |o, v| {
        sub(&o.rt(&o.rt(&v[0], &v[1]), &v[2]), &o.rt(&v[0], &add(&o.m(0, &v[1], &v[2]), &o.m(0, &v[2], &v[1]))))
    } },
    Schema { name: "B3", levels: &[0, 1, 0], out: 1, f: |o, v| {
        sub(&o.rt(&o.lt(&v[0], &v[1]), &v[2]), &o.lt(&v[0], &add(&o.rt(&v[1], &v[2]), &o.lt(&v[2], &v[1]))))
    } },
    Schema { name: "A1", levels: &[0, 1, 1], out: 1, f: |o, v| {
        sub(&o.m(1, &o.lt(&v[0], &v[1]), &v[2]), &o.lt(&v[0], &add(&o.m(1, &v[1], &v[2]), &o.m(1, &v[2], &v[1]))))
    } },
    Schema { name: "A2", levels: &[1, 0, 1], out: 1, f: |o, v| {
        sub(&o.m(1, &o.rt(&v[0], &v[1]), &v[2]), &o.m(1, &v[0], &add(&o.lt(&v[1], &v[2]), &o.rt(&v[2], &v[1]))))
    } },
    Schema { name: "A3", levels: &[1, 1, 0], out: 1, f: |o, v| {
        sub(&o.rt(&o.m(1, &v[0], &v[1]), &v[2]), &o.m(1, &v[0], &add(&o.rt(&v[1], &v[2]), &o.lt(&v[2], &v[1]))))
    } },
    Schema { name: "CM1", levels: &[0, 1], out: 0, f: |o, v| sub(&o.phi(&o.lt(&v[0], &v[1])), &o.m(0, &v[0], &o.phi(&v[1]))) },
    Schema { name: "CM2", levels: &[1, 0], out: 0, f: |o, v| sub(&o.phi(&o.rt(&v[0], &v[1])), &o.m(0, &o.phi(&v[0]), &v[1])) },
    Schema { name: "CM3", levels: &[1, 1], out: 1, f: |o, v| sub(&o.lt(&o.phi(&v[0]), &v[1]), &o.m(1, &v[0], &v[1])) },
    Schema { name: "CM4", levels: &[1, 1], out: 1, f: |o, v| sub(&o.m(1, &v[0], &v[1]), &o.rt(&v[0], &o.phi(&v[1]))) },
    Schema { name: "CM5", levels: &[1, 1], out: 0, f: |o, v| {
        sub(&o.phi(&o.m(1, &v[0], &v[1])), &o.m(0, &o.phi(&v[0]), &o.phi(&v[1])))
    } },
];

const MORPHISM_AXIOMS: &[Schema] = &[
    Schema { name: "M1", levels: &[1, 1], out: 1, f: |o, v| {
        sub(&o.psi(1, &o.m(1, &v[0], &v[1])), &o.m2(1, &o.psi(1, &v[0]), &o.psi(1, &v[1])))
    } },
    Schema { name: "M2", levels: &[0, 0], out: 0, f: |o, v| {
        sub(&o.psi(0, &o.m(0, &v[0], &v[1])), &o.m2(0, &o.psi(0, &v[0]), &o.psi(0, &v[1])))
    } },
    Schema { name: "M3", levels: &[1], out: 0, f: |o, v| sub(&o.psi(0, &o.phi(&v[0])), &o.e2.phi.mul_vec(&o.psi(1, &v[0]))) },
    Schema { name: "M4", levels: &[0, 1], out: 1, f: |o, v| {
        sub(&o.psi(1, &o.lt(&v[0], &v[1])), &o.e2.act.left.eval_vec(&o.psi(0, &v[0]), &o.psi(1, &v[1])))
    } },
    Schema { name: "M5", levels: &[1, 0], out: 1, f: |o, v| {
        sub(&o.psi(1, &o.rt(&v[0], &v[1])), &o.e2.act.right.eval_vec(&o.psi(1, &v[0]), &o.psi(0, &v[1])))
    } },
];

/// Outcome for one condition instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub id: String,
    pub label: Option<String>,
    /// Whether this row concerns the printed form of a corrected condition.
    pub printed: bool,
    /// Blocks (e.g. `-B2[V,Z,Z→V]`) whose residual equals the condition's.
    pub matches: Vec<String>,
    /// The condition residual vanished identically on the sample.
    pub vacuous: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out.into_iter().flat_map(|t| (0..d).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

struct Sample<'a> {
    ops: Ops<'a>,
    zd: [usize; 2],
    /// Width of the output block: V of the target for morphisms.
    out_vd: [usize; 2],
    axioms: &'static [Schema],
}

fn match_instance<E: Env>(inst: &Instance, env: &E, s: &Sample) -> (Vec<String>, bool) {
    let f = env.field();
    let eq = &inst.eq;
    let dims = eq.dims(env);
    let ts = tuples(&dims);
    let residuals: Vec<Vector> = ts
        .iter()
        .map(|t| {
            let vals: Vec<_> = t.iter().zip(&dims).map(|(&i, &n)| basis(f, n, i)).collect();
            eq.residual(env, &vals)
        })
        .collect();
    let vacuous = residuals.iter().all(|r| r.iter().all(|x| x.is_zero()));
    let mut found = Vec::new();
    let out = eq.space;
    let out_level = out.level as usize;
    for ax in s.axioms {
        if ax.levels.len() != eq.vars.len() || ax.out != out_level {
            continue;
        }
        for perm in permutations(ax.levels.len()) {
            // Slot k receives condition variable perm[k].
            let slot_spaces: Vec<Space> = perm.iter().map(|&c| eq.vars[c].1).collect();
            if slot_spaces.iter().zip(ax.levels).any(|(sp, &l)| sp.level as usize != l) {
                continue;
            }
            let (lo, hi) = match out.kind {
                Kind::Z => (0, s.zd[out_level]),
                _ => (s.zd[out_level], s.zd[out_level] + s.out_vd[out_level]),
            };
            let block: Vec<Vector> = ts
                .iter()
                .map(|t| {
                    let vals: Vec<Vector> = perm
                        .iter()
                        .zip(ax.levels)
                        .map(|(&c, &l)| {
                            let sp = eq.vars[c].1;
                            let n = s.zd[l] + env.dim(Space { kind: Kind::V, level: l as u8 });
                            let off = if sp.kind == Kind::Z { 0 } else { s.zd[l] };
                            basis(f, n, off + t[c])
                        })
                        .collect();
                    (ax.f)(&s.ops, &vals)[lo..hi].to_vec()
                })
                .collect();
            let kinds: Vec<Kind> = slot_spaces.iter().map(|sp| sp.kind).collect();
            let name = block_name(ax, &kinds, out.kind);
            if block == residuals {
                found.push(name);
            } else if block.iter().zip(&residuals).all(|(b, r)| b.iter().zip(r).all(|(x, y)| (x + y).is_zero())) {
                found.push(format!("-{name}"));
            }
        }
    }
    found.sort();
    found.dedup();
    (found, vacuous)
}

fn block_name(ax: &Schema, kinds: &[Kind], out: Kind) -> String {
    let k = |k: &Kind| if *k == Kind::Z { "Z" } else { "V" };
    let ks: Vec<&str> = kinds.iter().map(k).collect();
    format!("{}[{}→{}]", ax.name, ks.join(","), k(&out))
}

/// Names of axiom blocks that do not vanish on the sample.
fn live_blocks<E: Env>(env: &E, s: &Sample) -> Vec<String> {
    let f = env.field();
    let mut out = Vec::new();
    for ax in s.axioms {
        let n = ax.levels.len();
        for mask in 0..(1usize << n) {
            let kinds: Vec<Kind> = (0..n).map(|k| if mask >> k & 1 == 1 { Kind::V } else { Kind::Z }).collect();
            let dims: Vec<usize> = kinds
                .iter()
                .zip(ax.levels)
                .map(|(k, &l)| if *k == Kind::Z { s.zd[l] } else { env.dim(Space { kind: Kind::V, level: l as u8 }) })
                .collect();
            let full: Vec<usize> =
                ax.levels.iter().map(|&l| s.zd[l] + env.dim(Space { kind: Kind::V, level: l as u8 })).collect();
            for outk in [Kind::Z, Kind::V] {
                let (lo, hi) = match outk {
                    Kind::Z => (0, s.zd[ax.out]),
                    _ => (s.zd[ax.out], s.zd[ax.out] + s.out_vd[ax.out]),
                };
                let live = tuples(&dims).iter().any(|t| {
                    let vals: Vec<Vector> = (0..n)
                        .map(|k| basis(f, full[k], t[k] + if kinds[k] == Kind::Z { 0 } else { s.zd[ax.levels[k]] }))
                        .collect();
                    (ax.f)(&s.ops, &vals)[lo..hi].iter().any(|x| !x.is_zero())
                });
                if live {
                    out.push(block_name(ax, &kinds, outk));
                }
            }
        }
    }
    out
}

fn rows_for<E: Env>(list: ListId, env: &E, s: &Sample) -> Audit {
    let mut rows = Vec::new();
    for c in conditions(list) {
        let mut forms: Vec<(bool, &[Instance])> = vec![(false, &c.instances)];
        if let Some(Ok(p)) = &c.printed_instances {
            forms.push((true, p));
        }
        for (printed, insts) in forms {
            for inst in insts {
                let (matches, vacuous) = match_instance(inst, env, s);
                rows.push(AuditRow { id: c.id.to_string(), label: inst.label.clone(), printed, matches, vacuous });
            }
        }
    }
    let covered: Vec<&str> = rows
        .iter()
        .filter(|r| !r.printed)
        .flat_map(|r| r.matches.iter().map(|m| m.trim_start_matches('-')))
        .collect();
    let uncovered = live_blocks(env, s).into_iter().filter(|b| !covered.contains(&b.as_str())).collect();
    Audit { rows, uncovered }
}

/// Per-instance matches and the live axiom blocks no condition accounts for.
#[derive(Clone, Debug)]
pub struct Audit {
    pub rows: Vec<AuditRow>,
    pub uncovered: Vec<String>,
}

fn shape_for(list: ListId) -> DatumShape {
    match list {
        ListId::CZ => DatumShape { no_actions: true, no_cocycle: false },
        ListId::BZ => DatumShape { no_actions: false, no_cocycle: true },
        _ => DatumShape::default(),
    }
}

fn sample_datum<R: Rng>(list: ListId, f: Field, z: &ZinbielTwoAlgebra, rng: &mut R) -> ExtendingDatum {
    let v = crate::exact_linear::TwoVectorSpace::new(random::linmap(f, 2, 2, rng));
    random::datum(z, v, shape_for(list), 1.0, rng)
}

/// Cycles through the families of [`random::two_algebra_in_family`] by seed, avoiding zero products.
fn sample_z<R: Rng>(n1: usize, seed: u64, rng: &mut R) -> ZinbielTwoAlgebra {
    let f = Field::Prime(10007);
    let family = if n1 == 2 { seed as usize % 4 } else { 2 + seed as usize % 2 };
    loop {
        let z = random::two_algebra_in_family(f, n1, 2, family, rng);
        if family == 2 || !z.z0.mult.is_zero() {
            return z;
        }
    }
}

/// Audits `list` on one random sample over GF(10007) with all spaces of dimension 2
/// (Z₁ = 0 for the ZZ list). The seed also picks the family of Z.
pub fn audit(list: ListId, seed: u64) -> Audit {
    let f = Field::Prime(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n1 = if list == ListId::ZZ { 0 } else { 2 };
    let z = sample_z(n1, seed, &mut rng);
    let d1 = sample_datum(list, f, &z, &mut rng);
    let e = build_unified_product(&d1).expect("dims");
    let zd = d1.zdims();
    if list != ListId::H {
        let ops = Ops { e: &e, e2: &e, psi: [LinMap::zero(f, 0, 0), LinMap::zero(f, 0, 0)] };
        let s = Sample { ops, zd, out_vd: d1.vdims(), axioms: AXIOMS };
        return rows_for(list, &DatumEnv { d: &d1 }, &s);
    }
    let d2 = sample_datum(list, f, &z, &mut rng);
    let e2 = build_unified_product(&d2).expect("dims");
    let r: [LinMap; 2] = std::array::from_fn(|l| random::linmap(f, zd[l], 2, &mut rng));
    let sm: [LinMap; 2] = std::array::from_fn(|_| random::linmap(f, 2, 2, &mut rng));
    let psi: [LinMap; 2] = std::array::from_fn(|l| {
        LinMap::block(&LinMap::identity(f, zd[l]), &r[l], &LinMap::zero(f, 2, zd[l]), &sm[l])
    });
    let s = Sample { ops: Ops { e: &e, e2: &e2, psi }, zd, out_vd: d2.vdims(), axioms: MORPHISM_AXIOMS };
    rows_for(list, &MorphismEnv { d1: &d1, d2: &d2, r: &r, s: &sm }, &s)
}

/// Compiles and audits a single ad hoc condition text against the Z-list sample.
pub fn audit_text(text: &str, seed: u64) -> Result<Vec<(Vec<String>, bool)>, String> {
    let f = Field::Prime(10007);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = sample_z(2, seed, &mut rng);
    let d = sample_datum(ListId::Z, f, &z, &mut rng);
    let e = build_unified_product(&d).map_err(|e| e.to_string())?;
    let ops = Ops { e: &e, e2: &e, psi: [LinMap::zero(f, 0, 0), LinMap::zero(f, 0, 0)] };
    let s = Sample { ops, zd: d.zdims(), out_vd: d.vdims(), axioms: AXIOMS };
    let env = DatumEnv { d: &d };
    Ok(compile_text(text, false)?.iter().map(|i| match_instance(i, &env, &s)).collect())
}
