//! Construction and enumeration of the finite test fleet: posetal
//! symmetric monoidal categories, discrete group categories, the
//! sign-graded line category, and exhaustively enumerated lax functors
//! between posetal instances.
//!
//! Everything here is deterministic: enumeration order is lexicographic in
//! interned ids, so downstream golden tests are reproducible.

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, MorId, NatTransform, ObjId};
use crate::monoidal::{compose_lax_functors, LaxSMFunctor, LaxSMNatTransform, SymMonCategory};
use crate::strat::{FinPoset, Stratification};

/// Minimal deterministic PRNG (splitmix64) for randomized tests and the
/// CLI `--seed` flag; avoids external dependencies.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0) by rejection-free multiply-shift.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }
}

/// A finite poset together with a commutative, associative, monotone,
/// unital tensor — the raw data of a posetal symmetric monoidal category.
#[derive(Debug, Clone)]
pub struct PosetalData {
    pub names: Vec<String>,
    /// leq[a][b] means a ≤ b.
    pub leq: Vec<Vec<bool>>,
    /// tensor[a][b] = a⊗b (index).
    pub tensor: Vec<Vec<usize>>,
    pub unit: usize,
}

/// Builds the posetal SMC from the data; morphisms are the relation pairs.
/// Errors when the tensor is not monotone/commutative/unital or the order
/// axioms fail.
pub fn posetal_smc(data: &PosetalData) -> Result<SymMonCategory> {
    let n = data.names.len();
    let leq = &data.leq;
    for a in 0..n {
        if !leq[a][a] {
            return Err(Error::MalformedTable(format!("relation not reflexive at {a}")));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(Error::MalformedTable(format!("relation not antisymmetric at ({a},{b})")));
            }
            for c in 0..n {
                if leq[a][b] && leq[b][c] && !leq[a][c] {
                    return Err(Error::MalformedTable(format!(
                        "relation not transitive at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    let t = |a: usize, b: usize| data.tensor[a][b];
    for a in 0..n {
        if t(data.unit, a) != a || t(a, data.unit) != a {
            return Err(Error::MalformedTable(format!("tensor unit fails at {a}")));
        }
        for b in 0..n {
            if t(a, b) != t(b, a) {
                return Err(Error::MalformedTable(format!("tensor not commutative at ({a},{b})")));
            }
            for c in 0..n {
                if t(t(a, b), c) != t(a, t(b, c)) {
                    return Err(Error::MalformedTable(format!(
                        "tensor not associative at ({a},{b},{c})"
                    )));
                }
                if leq[a][b] && !leq[t(a, c)][t(b, c)] {
                    return Err(Error::NotMonotone(format!("tensor at ({a}≤{b})⊗{c}")));
                }
            }
        }
    }
    // One morphism per relation pair, scanned in (source, target) order.
    let mut morphisms = Vec::new();
    let mut arrow = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            if leq[a][b] {
                arrow[a][b] = Some(MorId(morphisms.len() as u32));
                morphisms.push((
                    format!("{}<={}", data.names[a], data.names[b]),
                    ObjId(a as u32),
                    ObjId(b as u32),
                ));
            }
        }
    }
    let identity: Vec<MorId> = (0..n).map(|a| arrow[a][a].unwrap()).collect();
    let ends: Vec<(usize, usize)> =
        morphisms.iter().map(|&(_, s, t)| (s.idx(), t.idx())).collect();
    let mut composition = Vec::new();
    for (gi, &(gs, gt)) in ends.iter().enumerate() {
        for (fi, &(fs, ft)) in ends.iter().enumerate() {
            if ft == gs {
                composition.push((MorId(gi as u32), MorId(fi as u32), arrow[fs][gt].unwrap()));
            }
        }
    }
    let base = FinCategory::new(data.names.clone(), morphisms, identity, composition)?;
    let mut tensor_obj = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            tensor_obj.push(ObjId(t(a, b) as u32));
        }
    }
    let m = ends.len();
    let mut tensor_mor = Vec::with_capacity(m * m);
    for &(fs, ft) in &ends {
        for &(gs, gt) in &ends {
            tensor_mor.push(arrow[t(fs, gs)][t(ft, gt)].unwrap());
        }
    }
    let mut symmetry = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            symmetry.push(arrow[t(a, b)][t(a, b)].unwrap());
        }
    }
    SymMonCategory::new(base, ObjId(data.unit as u32), tensor_obj, tensor_mor, symmetry)
}

/// The chain 0 ≤ 1 ≤ … ≤ n−1 with tensor = min and unit = top.
pub fn chain_min_smc(n: usize) -> SymMonCategory {
    let data = PosetalData {
        names: (0..n).map(|i| i.to_string()).collect(),
        leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        tensor: (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect(),
        unit: n - 1,
    };
    posetal_smc(&data).expect("chain-with-min is a lawful posetal tensor")
}

/// The product of cyclic groups of the given orders as a discrete SMC
/// (tensor = componentwise addition, trivial symmetry). The empty product
/// is the terminal category.
pub fn discrete_group_smc(orders: &[u32]) -> SymMonCategory {
    let n: usize = orders.iter().map(|&o| o as usize).product();
    let decode = |mut i: usize| -> Vec<u32> {
        let mut digits = Vec::with_capacity(orders.len());
        for &o in orders.iter().rev() {
            digits.push((i % o as usize) as u32);
            i /= o as usize;
        }
        digits.reverse();
        digits
    };
    let encode = |digits: &[u32]| -> usize {
        let mut i = 0usize;
        for (d, &o) in digits.iter().zip(orders) {
            i = i * o as usize + *d as usize;
        }
        i
    };
    let name = |i: usize| -> String {
        let d = decode(i);
        if d.is_empty() {
            "*".to_string()
        } else {
            d.iter().map(u32::to_string).collect::<Vec<_>>().join("")
        }
    };
    let add = |a: usize, b: usize| -> usize {
        let (da, db) = (decode(a), decode(b));
        let sum: Vec<u32> =
            da.iter().zip(&db).zip(orders).map(|((x, y), &o)| (x + y) % o).collect();
        encode(&sum)
    };
    let data = PosetalData {
        names: (0..n).map(name).collect(),
        leq: (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect(),
        tensor: (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect(),
        unit: 0,
    };
    posetal_smc(&data).expect("discrete group is a lawful posetal tensor")
}

/// The sign-graded line category: objects are parities 0, 1; every
/// endomorphism set is {+1, −1} under multiplication; tensor adds parities
/// and multiplies signs; the symmetry on two odd objects is −1. The
/// smallest symmetric monoidal category with a non-identity symmetry.
pub fn superline_smc() -> SymMonCategory {
    // Morphisms: 0 = +1 on even, 1 = −1 on even, 2 = +1 on odd, 3 = −1 on odd.
    let mor = |parity: u32, sign: u32| MorId(parity * 2 + sign);
    let morphisms = vec![
        ("+0".to_string(), ObjId(0), ObjId(0)),
        ("-0".to_string(), ObjId(0), ObjId(0)),
        ("+1".to_string(), ObjId(1), ObjId(1)),
        ("-1".to_string(), ObjId(1), ObjId(1)),
    ];
    let mut composition = Vec::new();
    for p in 0..2u32 {
        for s in 0..2u32 {
            for t in 0..2u32 {
                composition.push((mor(p, s), mor(p, t), mor(p, s ^ t)));
            }
        }
    }
    let base = FinCategory::new(
        vec!["ev".into(), "od".into()],
        morphisms,
        vec![mor(0, 0), mor(1, 0)],
        composition,
    )
    .unwrap();
    let tensor_obj = vec![ObjId(0), ObjId(1), ObjId(1), ObjId(0)];
    let mut tensor_mor = Vec::with_capacity(16);
    for p in 0..2u32 {
        for s in 0..2u32 {
            for q in 0..2u32 {
                for t in 0..2u32 {
                    tensor_mor.push(mor(p ^ q, s ^ t));
                }
            }
        }
    }
    // σ_{od,od} = −1; all other components are identities.
    let symmetry = vec![mor(0, 0), mor(1, 0), mor(1, 0), mor(0, 1)];
    SymMonCategory::new(base, ObjId(0), tensor_obj, tensor_mor, symmetry)
        .expect("sign-graded line tables are well-formed")
}

/// A lax functor between posetal SMCs determined by a monotone object map
/// satisfying 1 ≤ f(1) and f(u)⊗f(u') ≤ f(u⊗u'); all cells are the unique
/// arrows, so coherence is automatic.
pub fn posetal_lax(
    dom: &SymMonCategory,
    cod: &SymMonCategory,
    object_map: Vec<ObjId>,
) -> Result<LaxSMFunctor> {
    let unique = |a: ObjId, b: ObjId| -> Result<MorId> {
        cod.base
            .hom(a, b)
            .first()
            .copied()
            .ok_or_else(|| Error::NotMonotone(format!(
                "no arrow {} → {}",
                cod.base.obj_name(a),
                cod.base.obj_name(b)
            )))
    };
    let mut morphism_map = Vec::with_capacity(dom.base.n_morphisms());
    for f in dom.base.morphisms() {
        morphism_map.push(unique(
            object_map[dom.base.source(f).idx()],
            object_map[dom.base.target(f).idx()],
        )?);
    }
    let unit_cell = unique(cod.unit, object_map[dom.unit.idx()])?;
    let mut mult = Vec::with_capacity(dom.base.n_objects().pow(2));
    for u in dom.base.objects() {
        for up in dom.base.objects() {
            mult.push(unique(
                cod.tensor(object_map[u.idx()], object_map[up.idx()]),
                object_map[dom.tensor(u, up).idx()],
            )?);
        }
    }
    Ok(LaxSMFunctor { functor: Functor { object_map, morphism_map }, unit_cell, mult })
}

/// A strict functor between discrete group SMCs from a homomorphic object
/// map; all cells are identities.
pub fn strict_discrete_functor(
    dom: &SymMonCategory,
    cod: &SymMonCategory,
    object_map: Vec<ObjId>,
) -> LaxSMFunctor {
    let morphism_map =
        dom.base.morphisms().map(|f| cod.base.identity(object_map[dom.base.source(f).idx()])).collect();
    let mut mult = Vec::with_capacity(dom.base.n_objects().pow(2));
    for u in dom.base.objects() {
        for up in dom.base.objects() {
            mult.push(cod.base.identity(cod.tensor(object_map[u.idx()], object_map[up.idx()])));
        }
    }
    LaxSMFunctor {
        functor: Functor { object_map: object_map.clone(), morphism_map },
        unit_cell: cod.base.identity(cod.unit),
        mult,
    }
}

/// The running genuinely-lax example: parity group → (chain {0≤1}, min)
/// with φ(0) = 1, φ(1) = 0. The cell μ_{1,1}: 0 → 1 is not invertible.
pub fn z2_to_chain_lax() -> (SymMonCategory, SymMonCategory, LaxSMFunctor) {
    let dom = discrete_group_smc(&[2]);
    let cod = chain_min_smc(2);
    let phi = posetal_lax(&dom, &cod, vec![ObjId(1), ObjId(0)]).unwrap();
    (dom, cod, phi)
}

/// The lax endofunctor collapsing everything to the unit; lawful on any
/// strict SMC since σ_{1,1} = id.
pub fn const_unit_lax_endofunctor(c: &SymMonCategory) -> LaxSMFunctor {
    let unit_id = c.base.identity(c.unit);
    LaxSMFunctor {
        functor: Functor {
            object_map: vec![c.unit; c.base.n_objects()],
            morphism_map: vec![unit_id; c.base.n_morphisms()],
        },
        unit_cell: unit_id,
        mult: vec![unit_id; c.base.n_objects().pow(2)],
    }
}

/// All partial orders on `n` labeled elements (n ≤ 3 intended), as leq
/// matrices, in lexicographic order of the flattened matrix.
pub fn all_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let off_diag: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let k = off_diag.len();
    let mut out = Vec::new();
    'mask: for mask in 0..(1u32 << k) {
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            leq[a][a] = true;
        }
        for (i, &(a, b)) in off_diag.iter().enumerate() {
            if mask & (1 << i) != 0 {
                leq[a][b] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    continue 'mask;
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        continue 'mask;
                    }
                }
            }
        }
        out.push(leq);
    }
    out
}

/// All posetal SMCs on `n` labeled elements: every poset combined with
/// every commutative/associative/monotone/unital tensor, deterministically
/// ordered.
pub fn all_posetal_smcs(n: usize) -> Vec<SymMonCategory> {
    let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for leq in all_posets(n) {
        let mut choice = vec![0usize; pairs.len()];
        loop {
            let mut tensor = vec![vec![0usize; n]; n];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                tensor[a][b] = choice[i];
                tensor[b][a] = choice[i];
            }
            for unit in 0..n {
                let data = PosetalData {
                    names: names.clone(),
                    leq: leq.clone(),
                    tensor: tensor.clone(),
                    unit,
                };
                if let Ok(smc) = posetal_smc(&data) {
                    out.push(smc);
                    break; // strict units are unique
                }
            }
            // Odometer over the tensor choices.
            let mut i = 0;
            loop {
                if i == choice.len() {
                    break;
                }
                choice[i] += 1;
                if choice[i] < n {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
    }
    out
}

/// All lax symmetric monoidal functors between two posetal SMCs: monotone
/// object maps with 1 ≤ f(1) and f(u)⊗f(u') ≤ f(u⊗u').
pub fn posetal_lax_functors(dom: &SymMonCategory, cod: &SymMonCategory) -> Vec<LaxSMFunctor> {
    let nd = dom.base.n_objects();
    let nc = cod.base.n_objects();
    let mut out = Vec::new();
    let mut map = vec![0u32; nd];
    loop {
        let object_map: Vec<ObjId> = map.iter().map(|&i| ObjId(i)).collect();
        if let Ok(phi) = posetal_lax(dom, cod, object_map) {
            out.push(phi);
        }
        let mut i = 0;
        loop {
            if i == nd {
                return out;
            }
            map[i] += 1;
            if (map[i] as usize) < nc {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// A lax-limit test instance: domain, codomain, and the lax functor.
pub type LaxInstance = (SymMonCategory, SymMonCategory, LaxSMFunctor);

/// Handcrafted non-posetal instances: identities on small group
/// categories and the sign-graded line, group homomorphisms, and lax
/// functors into the min-chain.
pub fn handcrafted_instances() -> Vec<LaxInstance> {
    let z2 = discrete_group_smc(&[2]);
    let z3 = discrete_group_smc(&[3]);
    let z22 = discrete_group_smc(&[2, 2]);
    let sl = superline_smc();
    let term = discrete_group_smc(&[]);
    let chain = chain_min_smc(2);
    let mut out: Vec<LaxInstance> = Vec::new();
    out.push((z2.clone(), z2.clone(), LaxSMFunctor::identity(&z2)));
    out.push((z3.clone(), z3.clone(), LaxSMFunctor::identity(&z3)));
    out.push((z22.clone(), z22.clone(), LaxSMFunctor::identity(&z22)));
    out.push((sl.clone(), sl.clone(), LaxSMFunctor::identity(&sl)));
    // Sign collapse: the line category onto the parity group.
    out.push((
        sl.clone(),
        z2.clone(),
        LaxSMFunctor {
            functor: Functor {
                object_map: vec![ObjId(0), ObjId(1)],
                morphism_map: vec![MorId(0), MorId(0), MorId(1), MorId(1)],
            },
            unit_cell: z2.base.identity(ObjId(0)),
            mult: vec![
                z2.base.identity(ObjId(0)),
                z2.base.identity(ObjId(1)),
                z2.base.identity(ObjId(1)),
                z2.base.identity(ObjId(0)),
            ],
        },
    ));
    // Group homomorphisms as strict functors.
    out.push((
        z2.clone(),
        z22.clone(),
        strict_discrete_functor(&z2, &z22, vec![ObjId(0), ObjId(2)]),
    ));
    out.push((
        z22.clone(),
        z2.clone(),
        strict_discrete_functor(&z22, &z2, vec![ObjId(0), ObjId(1), ObjId(1), ObjId(0)]),
    ));
    out.push((
        z3.clone(),
        term.clone(),
        strict_discrete_functor(&z3, &term, vec![ObjId(0); 3]),
    ));
    // Unit inclusion into the line category.
    out.push((
        term.clone(),
        sl.clone(),
        LaxSMFunctor {
            functor: Functor { object_map: vec![ObjId(0)], morphism_map: vec![MorId(0)] },
            unit_cell: MorId(0),
            mult: vec![MorId(0)],
        },
    ));
    // Genuinely lax functors into the min-chain.
    let (d, c, phi) = z2_to_chain_lax();
    out.push((d, c, phi));
    out.push((
        z22.clone(),
        chain.clone(),
        posetal_lax(&z22, &chain, vec![ObjId(1), ObjId(0), ObjId(0), ObjId(0)]).unwrap(),
    ));
    out.push((
        z3.clone(),
        chain.clone(),
        posetal_lax(&z3, &chain, vec![ObjId(1), ObjId(0), ObjId(0)]).unwrap(),
    ));
    // Collapse of the line category onto the chain unit.
    out.push((sl.clone(), chain.clone(), {
        let unit_id = chain.base.identity(chain.unit);
        LaxSMFunctor {
            functor: Functor {
                object_map: vec![chain.unit; 2],
                morphism_map: vec![unit_id; 4],
            },
            unit_cell: unit_id,
            mult: vec![unit_id; 4],
        }
    }));
    out
}

/// The acceptance corpus: handcrafted non-posetal instances, all lax
/// functors among small posetal SMCs up to a deterministic cap, and
/// monotone maps between longer min-chains.
pub fn acceptance_lax_instances() -> Vec<LaxInstance> {
    let mut out = handcrafted_instances();
    let smcs: Vec<SymMonCategory> = all_posetal_smcs(1)
        .into_iter()
        .chain(all_posetal_smcs(2))
        .chain(all_posetal_smcs(3))
        .collect();
    let target = 260usize;
    'outer: for a in &smcs {
        for b in &smcs {
            for phi in posetal_lax_functors(a, b) {
                out.push((a.clone(), b.clone(), phi));
                if out.len() >= target {
                    break 'outer;
                }
            }
        }
    }
    // Longer chains with every monotone lax map between them.
    for (na, nb) in [(4, 4), (5, 4), (4, 5), (6, 6)] {
        let a = chain_min_smc(na);
        let b = chain_min_smc(nb);
        for phi in posetal_lax_functors(&a, &b) {
            out.push((a.clone(), b.clone(), phi));
        }
    }
    out
}

/// The unique monoidal transformation between two posetal-valued lax
/// functors with a common domain, when every required arrow exists.
pub fn posetal_nat(
    source: &LaxSMFunctor,
    target: &LaxSMFunctor,
    dom: &SymMonCategory,
    cod: &SymMonCategory,
) -> Result<LaxSMNatTransform> {
    let mut components = Vec::with_capacity(dom.base.n_objects());
    for x in dom.base.objects() {
        let (a, b) = (source.on_obj(x), target.on_obj(x));
        let m = cod.base.hom(a, b).first().copied().ok_or_else(|| {
            Error::NotMonotone(format!(
                "no arrow {} → {}",
                cod.base.obj_name(a),
                cod.base.obj_name(b)
            ))
        })?;
        components.push(m);
    }
    Ok(LaxSMNatTransform { transform: NatTransform { components } })
}

/// The constant stratification: the same stratum everywhere, identity
/// monodromy and identity θ cells.
pub fn identity_stratification(poset: FinPoset, stratum: SymMonCategory) -> Stratification {
    let strata: Vec<SymMonCategory> = vec![stratum.clone(); poset.n()];
    let monodromy: Vec<LaxSMFunctor> =
        poset.strict_pairs().iter().map(|_| LaxSMFunctor::identity(&stratum)).collect();
    let theta: Vec<LaxSMNatTransform> = poset
        .chains3()
        .iter()
        .map(|_| LaxSMNatTransform {
            transform: NatTransform {
                components: stratum.base.objects().map(|x| stratum.base.identity(x)).collect(),
            },
        })
        .collect();
    Stratification::new(poset, strata, monodromy, theta)
        .expect("constant stratification data is well-shaped")
}

/// Builds a stratification with posetal strata from chosen monodromies;
/// every θ is the unique arrow when it exists, and the cocycle condition
/// is automatic. Errors when some θ component does not exist.
pub fn posetal_stratification(
    poset: FinPoset,
    strata: Vec<SymMonCategory>,
    monodromy: Vec<LaxSMFunctor>,
) -> Result<Stratification> {
    let pairs = poset.strict_pairs();
    let pair_pos: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut theta = Vec::new();
    for &(p, q, r) in &poset.chains3() {
        let composite = compose_lax_functors(
            &monodromy[pair_pos[&(q, r)]],
            &monodromy[pair_pos[&(p, q)]],
            &strata[p],
            &strata[q],
            &strata[r],
        )?;
        theta.push(posetal_nat(&monodromy[pair_pos[&(p, r)]], &composite, &strata[p], &strata[r])?);
    }
    Stratification::new(poset, strata, monodromy, theta)
}

/// The running stratified example over the chain 0 < 1 < 2: every stratum
/// is the min-chain {0 ≤ 1}, the one-step monodromies collapse to the
/// unit, the long monodromy Φ_{02} is the identity, and θ^{012}_x is the
/// non-identity arrow x ≤ 1.
pub fn theta_example_stratification() -> Stratification {
    let c = chain_min_smc(2);
    let id = LaxSMFunctor::identity(&c);
    let cu = const_unit_lax_endofunctor(&c);
    posetal_stratification(
        FinPoset::chain(3),
        vec![c.clone(), c.clone(), c],
        // Pairs in order (0,1), (0,2), (1,2).
        vec![cu.clone(), id, cu],
    )
    .expect("θ example is coherent")
}

/// A lawful stratification over the 4-element chain with non-identity θ
/// on several 2-chains; used as the starting point for cocycle-breaking
/// mutations in tests.
pub fn broken_cocycle_candidate() -> Stratification {
    let c = chain_min_smc(2);
    let id = LaxSMFunctor::identity(&c);
    let cu = const_unit_lax_endofunctor(&c);
    posetal_stratification(
        FinPoset::chain(4),
        vec![c.clone(), c.clone(), c.clone(), c],
        // Pairs in order (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
        vec![cu.clone(), id.clone(), id.clone(), cu.clone(), id, cu],
    )
    .expect("4-chain example is coherent")
}

/// The V-shaped poset a < c > b.
pub fn v_poset() -> FinPoset {
    FinPoset {
        names: vec!["a".into(), "b".into(), "c".into()],
        leq: vec![
            vec![true, false, true],
            vec![false, true, true],
            vec![false, false, true],
        ],
    }
}

/// The diamond poset p < q1, q2 < s with q1, q2 incomparable.
pub fn diamond_poset() -> FinPoset {
    FinPoset {
        names: vec!["p".into(), "q1".into(), "q2".into(), "s".into()],
        leq: vec![
            vec![true, true, true, true],
            vec![false, true, false, true],
            vec![false, false, true, true],
            vec![false, false, false, true],
        ],
    }
}

/// Whether some θ cell of a stratification has a non-identity component.
pub fn has_nonidentity_theta(s: &Stratification) -> bool {
    s.triples().iter().zip(&s.theta).any(|(&(_, _, r), th)| {
        th.transform.components.iter().any(|&m| !s.strata[r].base.is_identity(m))
    })
}

/// The stratified acceptance corpus: all coherent posetal stratifications
/// built from enumerated monodromies over the chains [2] and [3], the V,
/// and the diamond, with small min-chain strata. Deterministic order;
/// capped per shape to keep the whole fleet quick to exhaust.
pub fn acceptance_stratifications() -> Vec<Stratification> {
    let mut out = Vec::new();
    let mut push_all = |poset: &FinPoset, stratum: &SymMonCategory, cap: usize| {
        let endos = posetal_lax_functors(stratum, stratum);
        let n_pairs = poset.strict_pairs().len();
        let mut choice = vec![0usize; n_pairs];
        let mut taken = 0usize;
        loop {
            let monodromy: Vec<LaxSMFunctor> =
                choice.iter().map(|&i| endos[i].clone()).collect();
            if let Ok(s) = posetal_stratification(
                poset.clone(),
                vec![stratum.clone(); poset.n()],
                monodromy,
            ) {
                out.push(s);
                taken += 1;
                if taken >= cap {
                    return;
                }
            }
            let mut i = 0;
            loop {
                if i == n_pairs {
                    return;
                }
                choice[i] += 1;
                if choice[i] < endos.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    };
    let c2 = chain_min_smc(2);
    let c3 = chain_min_smc(3);
    push_all(&FinPoset::chain(3), &c2, 8);
    push_all(&FinPoset::chain(3), &c3, 40);
    push_all(&FinPoset::chain(4), &c2, 24);
    push_all(&v_poset(), &c2, 4);
    push_all(&v_poset(), &c3, 12);
    push_all(&diamond_poset(), &c2, 16);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        assert_eq!(all_posets(1).len(), 1);
        assert_eq!(all_posets(2).len(), 3);
        assert_eq!(all_posets(3).len(), 19);
    }

    #[test]
    fn posetal_smcs_are_lawful() {
        let smcs = all_posetal_smcs(3);
        assert!(!smcs.is_empty());
        for smc in &smcs {
            assert!(smc.validate().is_ok());
        }
    }

    #[test]
    fn enumerated_lax_functors_validate() {
        let a = chain_min_smc(2);
        let b = chain_min_smc(3);
        let functors = posetal_lax_functors(&a, &b);
        assert!(!functors.is_empty());
        for phi in &functors {
            assert!(phi.validate(&a, &b).is_ok());
        }
    }

    #[test]
    fn handcrafted_instances_validate() {
        let instances = handcrafted_instances();
        assert!(instances.len() >= 10);
        for (dom, cod, phi) in &instances {
            assert!(dom.validate().is_ok());
            assert!(cod.validate().is_ok());
            assert!(phi.validate(dom, cod).is_ok(), "{:?}", phi.validate(dom, cod));
        }
    }

    #[test]
    fn acceptance_corpus_size() {
        assert!(acceptance_lax_instances().len() >= 200);
    }

    #[test]
    fn stratified_corpus_is_lawful_and_varied() {
        let fleet = acceptance_stratifications();
        assert!(fleet.len() >= 50, "only {} stratifications", fleet.len());
        let varied = fleet.iter().filter(|s| has_nonidentity_theta(s)).count();
        assert!(varied >= 10, "only {varied} stratifications with non-identity θ");
        for s in &fleet {
            assert!(s.validate().is_ok());
        }
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(7);
        let mut b = SplitMix64::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
