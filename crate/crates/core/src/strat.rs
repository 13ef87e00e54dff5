//! Stratifications of symmetric monoidal categories over finite posets:
//! strata, monodromy lax functors Φ_{pq}, oplax 2-cells θ^{pqr} with the
//! cocycle condition, the category of sections with its tensor structure,
//! restriction to sub-posets, the linkwise dualizability criterion, and
//! the peel-first reduction over chain posets.

use std::collections::HashMap;

use crate::duality::{self, DualityDatum};
use crate::error::{Error, Limits, Result};
use crate::fincat::{FinCategory, Functor, MorId, ObjId, ValidationReport};
use crate::laxlim::{self, LaxLimitCategory, LaxLimitObject};
use crate::monoidal::{
    compose_lax_functors, LaxSMFunctor, LaxSMNatTransform, SymMonCategory,
};

/// A finite poset given by an explicit relation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    pub names: Vec<String>,
    /// leq[a][b] means a ≤ b.
    pub leq: Vec<Vec<bool>>,
}

impl FinPoset {
    pub fn chain(n: usize) -> FinPoset {
        FinPoset {
            names: (0..n).map(|i| i.to_string()).collect(),
            leq: (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Checks the partial-order axioms.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        if self.leq.len() != n || self.leq.iter().any(|row| row.len() != n) {
            report.push("relation table size", "square table required");
            return report;
        }
        for a in 0..n {
            if !self.le(a, a) {
                report.push("reflexivity", self.names[a].clone());
            }
            for b in 0..n {
                if a != b && self.le(a, b) && self.le(b, a) {
                    report.push("antisymmetry", format!("({}, {})", self.names[a], self.names[b]));
                }
                for c in 0..n {
                    if self.le(a, b) && self.le(b, c) && !self.le(a, c) {
                        report.push(
                            "transitivity",
                            format!("({}, {}, {})", self.names[a], self.names[b], self.names[c]),
                        );
                    }
                }
            }
        }
        report
    }

    /// Strict relations p < q in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n() {
            for q in 0..self.n() {
                if self.lt(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Strict chains p < q < r in lexicographic order.
    pub fn chains3(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.n() {
            for q in 0..self.n() {
                if !self.lt(p, q) {
                    continue;
                }
                for r in 0..self.n() {
                    if self.lt(q, r) {
                        out.push((p, q, r));
                    }
                }
            }
        }
        out
    }

    /// Strict chains p < q < r < s in lexicographic order.
    pub fn chains4(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::new();
        for &(p, q, r) in &self.chains3() {
            for s in 0..self.n() {
                if self.lt(r, s) {
                    out.push((p, q, r, s));
                }
            }
        }
        out
    }

    /// Elements in a linear order, when the poset is a chain.
    pub fn linear_order(&self) -> Result<Vec<usize>> {
        let mut ord: Vec<usize> = (0..self.n()).collect();
        for &a in &ord {
            for b in 0..self.n() {
                if !self.le(a, b) && !self.le(b, a) {
                    return Err(Error::NotAChain(format!(
                        "{} and {} are incomparable",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        ord.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.le(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(ord)
    }
}

/// The subdivision poset: nonempty chains of `p` ordered by inclusion.
pub fn subdivision(p: &FinPoset, limits: &Limits) -> Result<FinPoset> {
    let n = p.n();
    if n > 20 {
        return Err(Error::SizeLimit("subdivision of poset with > 20 elements".into()));
    }
    let mut chains: Vec<u32> = Vec::new();
    'mask: for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        for &a in &members {
            for &b in &members {
                if !p.le(a, b) && !p.le(b, a) {
                    continue 'mask;
                }
            }
        }
        chains.push(mask);
    }
    limits.check_objects(chains.len(), "subdivision")?;
    let name_of = |mask: u32| -> String {
        let mut members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        members.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if p.le(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        members.iter().map(|&i| p.names[i].clone()).collect::<Vec<_>>().join("<")
    };
    let leq = chains
        .iter()
        .map(|&a| chains.iter().map(|&b| a & b == a).collect())
        .collect();
    Ok(FinPoset { names: chains.iter().map(|&m| name_of(m)).collect(), leq })
}

/// A stratification: one symmetric monoidal stratum per poset element,
/// monodromy lax functors Φ_{pq} for strict relations, and oplax cells
/// θ^{pqr}: Φ_{pr} ⇒ Φ_{qr}∘Φ_{pq} for strict 2-chains.
#[derive(Debug, Clone)]
pub struct Stratification {
    pub poset: FinPoset,
    pub strata: Vec<SymMonCategory>,
    /// Parallel to `poset.strict_pairs()`.
    pub monodromy: Vec<LaxSMFunctor>,
    /// Parallel to `poset.chains3()`.
    pub theta: Vec<LaxSMNatTransform>,
    pairs: Vec<(usize, usize)>,
    pair_idx: HashMap<(usize, usize), usize>,
    triples: Vec<(usize, usize, usize)>,
    triple_idx: HashMap<(usize, usize, usize), usize>,
}

impl Stratification {
    pub fn new(
        poset: FinPoset,
        strata: Vec<SymMonCategory>,
        monodromy: Vec<LaxSMFunctor>,
        theta: Vec<LaxSMNatTransform>,
    ) -> Result<Stratification> {
        let pairs = poset.strict_pairs();
        let triples = poset.chains3();
        if strata.len() != poset.n() || monodromy.len() != pairs.len() || theta.len() != triples.len()
        {
            return Err(Error::MalformedTable(
                "stratification data lengths do not match the poset".into(),
            ));
        }
        let pair_idx = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let triple_idx = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        Ok(Stratification { poset, strata, monodromy, theta, pairs, pair_idx, triples, triple_idx })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn mono(&self, p: usize, q: usize) -> &LaxSMFunctor {
        &self.monodromy[self.pair_idx[&(p, q)]]
    }

    pub fn th(&self, p: usize, q: usize, r: usize) -> &LaxSMNatTransform {
        &self.theta[self.triple_idx[&(p, q, r)]]
    }

    /// Exhaustive validation: poset axioms, strata, monodromy coherence,
    /// monoidal naturality of every θ, and the cocycle condition on
    /// 3-chains.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.poset.validate();
        for (i, s) in self.strata.iter().enumerate() {
            let mut r = s.validate();
            for v in &mut r.violations {
                v.witness = format!("stratum {}: {}", self.poset.names[i], v.witness);
            }
            report.merge(r);
        }
        if !report.is_ok() {
            return report;
        }
        for (i, &(p, q)) in self.pairs.iter().enumerate() {
            let mut r = self.monodromy[i].validate(&self.strata[p], &self.strata[q]);
            for v in &mut r.violations {
                v.witness = format!("Φ[{p}<{q}]: {}", v.witness);
            }
            report.merge(r);
        }
        if !report.is_ok() {
            return report;
        }
        for (i, &(p, q, r)) in self.triples.iter().enumerate() {
            let composite = match compose_lax_functors(
                self.mono(q, r),
                self.mono(p, q),
                &self.strata[p],
                &self.strata[q],
                &self.strata[r],
            ) {
                Ok(c) => c,
                Err(e) => {
                    report.push("monodromy composition", format!("{p}<{q}<{r}: {e}"));
                    continue;
                }
            };
            let mut rep = self.theta[i].validate(
                self.mono(p, r),
                &composite,
                &self.strata[p],
                &self.strata[r],
            );
            for v in &mut rep.violations {
                v.witness = format!("θ[{p}<{q}<{r}]: {}", v.witness);
            }
            report.merge(rep);
        }
        if !report.is_ok() {
            return report;
        }
        // Cocycle on 3-chains p<q<r<s:
        // Φ_rs(θ^{pqr}_x) ∘ θ^{prs}_x = θ^{qrs}_{Φ_pq(x)} ∘ θ^{pqs}_x.
        for &(p, q, r, s) in &self.poset.chains4() {
            let cs = &self.strata[s].base;
            for x in self.strata[p].base.objects() {
                let lhs = cs
                    .compose(self.mono(r, s).on_mor(self.th(p, q, r).at(x)), self.th(p, r, s).at(x))
                    .unwrap();
                let rhs = cs
                    .compose(self.th(q, r, s).at(self.mono(p, q).on_obj(x)), self.th(p, q, s).at(x))
                    .unwrap();
                if lhs != rhs {
                    report.push(
                        "theta cocycle",
                        format!("{p}<{q}<{r}<{s} at {}", self.strata[p].base.obj_name(x)),
                    );
                }
            }
        }
        report
    }
}

/// A section of a stratification: an object per element and a gluing
/// morphism γ_{pq}: x_q → Φ_{pq}(x_p) per strict relation, satisfying the
/// chain condition on 2-chains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StratLimObject {
    /// Per poset element.
    pub x: Vec<ObjId>,
    /// Parallel to `poset.strict_pairs()`; γ_{pq} lives in stratum q.
    pub gamma: Vec<MorId>,
}

/// The category of sections, with componentwise tensor and the μ-twisted
/// gluing morphisms, plus per-element restriction functors.
#[derive(Debug, Clone)]
pub struct StratLimitCategory {
    pub cat: SymMonCategory,
    pub objects: Vec<StratLimObject>,
    /// Per morphism of `cat`: one component morphism per poset element.
    pub mor_comps: Vec<Vec<MorId>>,
    pub strat: Stratification,
    /// Restriction functor to each stratum.
    pub restrictions: Vec<Functor>,
    obj_index: HashMap<StratLimObject, ObjId>,
    mor_index: HashMap<(ObjId, ObjId, Vec<MorId>), MorId>,
}

impl StratLimitCategory {
    pub fn obj_id(&self, x: &StratLimObject) -> Option<ObjId> {
        self.obj_index.get(x).copied()
    }

    pub fn obj(&self, i: ObjId) -> &StratLimObject {
        &self.objects[i.idx()]
    }

    pub fn mor_id(&self, src: ObjId, tgt: ObjId, comps: &[MorId]) -> Option<MorId> {
        self.mor_index.get(&(src, tgt, comps.to_vec())).copied()
    }
}

/// Whether a candidate section satisfies the chain condition
/// Φ_qr(γ_pq)∘γ_qr = θ^{pqr}_{x_p}∘γ_pr on every strict 2-chain.
fn section_is_coherent(s: &Stratification, x: &StratLimObject) -> bool {
    for &(p, q, r) in s.triples() {
        let cr = &s.strata[r].base;
        let g_pq = x.gamma[s.pair_idx[&(p, q)]];
        let g_qr = x.gamma[s.pair_idx[&(q, r)]];
        let g_pr = x.gamma[s.pair_idx[&(p, r)]];
        let lhs = cr.compose(s.mono(q, r).on_mor(g_pq), g_qr).unwrap();
        let rhs = cr.compose(s.th(p, q, r).at(x.x[p]), g_pr).unwrap();
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Builds the category of sections of a stratification.
pub fn strat_lax_limit(s: &Stratification, limits: &Limits) -> Result<StratLimitCategory> {
    let n = s.poset.n();
    let pairs = s.pairs().to_vec();
    // Enumerate objects: all object tuples, then all gluing tuples, filtered
    // by the chain condition.
    let mut objects: Vec<StratLimObject> = Vec::new();
    let mut obj_index = HashMap::new();
    let mut obj_names = Vec::new();
    let mut tuple = vec![0u32; n];
    'obj: loop {
        let xs: Vec<ObjId> = tuple.iter().map(|&i| ObjId(i)).collect();
        if tuple.iter().zip(&s.strata).all(|(&i, c)| (i as usize) < c.base.n_objects()) {
            // Candidate γ's per pair.
            let choices: Vec<Vec<MorId>> = pairs
                .iter()
                .map(|&(p, q)| {
                    s.strata[q]
                        .base
                        .hom(xs[q], s.mono(p, q).on_obj(xs[p]))
                        .to_vec()
                })
                .collect();
            if choices.iter().all(|c| !c.is_empty()) {
                let mut pick = vec![0usize; pairs.len()];
                loop {
                    let gamma: Vec<MorId> =
                        pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                    let cand = StratLimObject { x: xs.clone(), gamma };
                    if section_is_coherent(s, &cand) {
                        limits.check_objects(objects.len() + 1, "stratified lax limit")?;
                        obj_index.insert(cand.clone(), ObjId(objects.len() as u32));
                        obj_names.push(format!(
                            "({})",
                            cand.x
                                .iter()
                                .enumerate()
                                .map(|(p, &o)| s.strata[p].base.obj_name(o).to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        ));
                        objects.push(cand);
                    }
                    let mut i = 0;
                    loop {
                        if i == pick.len() {
                            break;
                        }
                        pick[i] += 1;
                        if pick[i] < choices[i].len() {
                            break;
                        }
                        pick[i] = 0;
                        i += 1;
                    }
                    if i == pick.len() {
                        break;
                    }
                }
            }
        }
        // Advance the object tuple.
        let mut i = 0;
        loop {
            if i == n {
                break 'obj;
            }
            tuple[i] += 1;
            if (tuple[i] as usize) < s.strata[i].base.n_objects() {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
    if objects.is_empty() {
        return Err(Error::EmptyLimit);
    }
    // Disambiguate duplicate object names (same tuple, different γ).
    {
        let mut seen: HashMap<String, usize> = HashMap::new();
        for name in obj_names.iter_mut() {
            let k = seen.entry(name.clone()).or_insert(0);
            if *k > 0 {
                *name = format!("{name}#{k}");
            }
            *k += 1;
        }
    }
    // Enumerate morphisms: component tuples commuting with every γ.
    let mut morphisms = Vec::new();
    let mut mor_comps: Vec<Vec<MorId>> = Vec::new();
    let mut mor_index = HashMap::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let choices: Vec<&[MorId]> =
                (0..n).map(|p| s.strata[p].base.hom(x.x[p], y.x[p])).collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut pick = vec![0usize; n];
            loop {
                let comps: Vec<MorId> = pick.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
                let commutes = pairs.iter().enumerate().all(|(pi, &(p, q))| {
                    let cq = &s.strata[q].base;
                    cq.compose(y.gamma[pi], comps[q]).unwrap()
                        == cq.compose(s.mono(p, q).on_mor(comps[p]), x.gamma[pi]).unwrap()
                });
                if commutes {
                    limits.check_morphisms(morphisms.len() + 1, "stratified lax limit")?;
                    let m = MorId(morphisms.len() as u32);
                    mor_index.insert((ObjId(i as u32), ObjId(j as u32), comps.clone()), m);
                    morphisms.push((
                        format!("[{i}->{j}#{}]", mor_comps.len()),
                        ObjId(i as u32),
                        ObjId(j as u32),
                    ));
                    mor_comps.push(comps);
                }
                let mut k = 0;
                loop {
                    if k == n {
                        break;
                    }
                    pick[k] += 1;
                    if pick[k] < choices[k].len() {
                        break;
                    }
                    pick[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }
    let identity: Vec<MorId> = objects
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let comps: Vec<MorId> =
                (0..n).map(|p| s.strata[p].base.identity(x.x[p])).collect();
            mor_index[&(ObjId(i as u32), ObjId(i as u32), comps)]
        })
        .collect();
    let mut composition = Vec::new();
    for (m1, &(_, s1, t1)) in morphisms.iter().enumerate() {
        for (m2, &(_, s2, t2)) in morphisms.iter().enumerate() {
            if t1 != s2 {
                continue;
            }
            let comps: Vec<MorId> = (0..n)
                .map(|p| s.strata[p].base.compose(mor_comps[m2][p], mor_comps[m1][p]).unwrap())
                .collect();
            composition.push((MorId(m2 as u32), MorId(m1 as u32), mor_index[&(s1, t2, comps)]));
        }
    }
    let base = FinCategory::new(obj_names, morphisms, identity, composition)?;
    // Tensor structure: componentwise objects, μ-twisted gluings.
    let tensor_obj_of = |x: &StratLimObject, y: &StratLimObject| -> Result<ObjId> {
        let xs: Vec<ObjId> =
            (0..n).map(|p| s.strata[p].tensor(x.x[p], y.x[p])).collect();
        let gamma: Vec<MorId> = pairs
            .iter()
            .enumerate()
            .map(|(pi, &(p, q))| {
                let cq = &s.strata[q];
                cq.base.compose(
                    s.mono(p, q).mu(&s.strata[p], x.x[p], y.x[p]),
                    cq.tensor_mor(x.gamma[pi], y.gamma[pi]),
                )
            })
            .collect::<Result<_>>()?;
        let t = StratLimObject { x: xs, gamma };
        // Looking the tensored section up re-verifies its coherence: only
        // coherent sections were enumerated.
        obj_index.get(&t).copied().ok_or_else(|| {
            Error::MalformedTable("tensor of sections is not a coherent section".into())
        })
    };
    let n_obj = objects.len();
    let mut tensor_obj = Vec::with_capacity(n_obj * n_obj);
    for x in &objects {
        for y in &objects {
            tensor_obj.push(tensor_obj_of(x, y)?);
        }
    }
    let m_count = base.n_morphisms();
    let mut tensor_mor = Vec::with_capacity(m_count * m_count);
    for m1 in 0..m_count {
        let (s1, t1) = (base.source(MorId(m1 as u32)), base.target(MorId(m1 as u32)));
        for m2 in 0..m_count {
            let (s2, t2) = (base.source(MorId(m2 as u32)), base.target(MorId(m2 as u32)));
            let comps: Vec<MorId> = (0..n)
                .map(|p| s.strata[p].tensor_mor(mor_comps[m1][p], mor_comps[m2][p]))
                .collect();
            let key = (
                tensor_obj[s1.idx() * n_obj + s2.idx()],
                tensor_obj[t1.idx() * n_obj + t2.idx()],
                comps,
            );
            let t = mor_index.get(&key).copied().ok_or_else(|| {
                Error::MalformedTable("tensor of section morphisms is not a morphism".into())
            })?;
            tensor_mor.push(t);
        }
    }
    let mut symmetry = Vec::with_capacity(n_obj * n_obj);
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            let comps: Vec<MorId> =
                (0..n).map(|p| s.strata[p].sym(x.x[p], y.x[p])).collect();
            let key = (tensor_obj[i * n_obj + j], tensor_obj[j * n_obj + i], comps);
            let sym = mor_index.get(&key).copied().ok_or_else(|| {
                Error::MalformedTable("componentwise symmetry is not a section morphism".into())
            })?;
            symmetry.push(sym);
        }
    }
    let unit_section = StratLimObject {
        x: (0..n).map(|p| s.strata[p].unit).collect(),
        gamma: pairs.iter().map(|&(p, q)| s.mono(p, q).unit_cell).collect(),
    };
    let unit = obj_index
        .get(&unit_section)
        .copied()
        .ok_or_else(|| Error::MalformedTable("unit section is not coherent".into()))?;
    let cat = SymMonCategory::new(base, unit, tensor_obj, tensor_mor, symmetry)?;
    let restrictions = (0..n)
        .map(|p| Functor {
            object_map: objects.iter().map(|x| x.x[p]).collect(),
            morphism_map: mor_comps.iter().map(|c| c[p]).collect(),
        })
        .collect();
    Ok(StratLimitCategory {
        cat,
        objects,
        mor_comps,
        strat: s.clone(),
        restrictions,
        obj_index,
        mor_index,
    })
}

/// Pulls a stratification back along a monotone injection `map: Q ↪ P`
/// (element i of `q` goes to `map[i]`).
pub fn restrict(s: &Stratification, q: &FinPoset, map: &[usize]) -> Result<Stratification> {
    if map.len() != q.n() || map.iter().any(|&i| i >= s.poset.n()) {
        return Err(Error::DomainMismatch("restriction map has wrong shape".into()));
    }
    for a in 0..q.n() {
        for b in 0..q.n() {
            if a != b && map[a] == map[b] {
                return Err(Error::NotMonotone("restriction map is not injective".into()));
            }
            if q.le(a, b) && !s.poset.le(map[a], map[b]) {
                return Err(Error::NotMonotone(format!(
                    "restriction map does not preserve {} ≤ {}",
                    q.names[a], q.names[b]
                )));
            }
        }
    }
    let strata = map.iter().map(|&i| s.strata[i].clone()).collect();
    let monodromy = q
        .strict_pairs()
        .iter()
        .map(|&(a, b)| s.mono(map[a], map[b]).clone())
        .collect();
    let theta = q
        .chains3()
        .iter()
        .map(|&(a, b, c)| s.th(map[a], map[b], map[c]).clone())
        .collect();
    Stratification::new(q.clone(), strata, monodromy, theta)
}

/// Restricts a section along the same monotone injection.
pub fn restrict_object(
    s: &Stratification,
    q: &FinPoset,
    map: &[usize],
    x: &StratLimObject,
) -> StratLimObject {
    let pair_pos: HashMap<(usize, usize), usize> =
        s.poset.strict_pairs().iter().enumerate().map(|(i, &p)| (p, i)).collect();
    StratLimObject {
        x: map.iter().map(|&i| x.x[i]).collect(),
        gamma: q
            .strict_pairs()
            .iter()
            .map(|&(a, b)| x.gamma[pair_pos[&(map[a], map[b])]])
            .collect(),
    }
}

/// The lax-limit instance of a single link p < q, together with the
/// lax-limit object corresponding to a section.
pub fn link_instance(
    s: &Stratification,
    p: usize,
    q: usize,
    limits: &Limits,
) -> Result<LaxLimitCategory> {
    laxlim::lax_limit(&s.strata[p], &s.strata[q], s.mono(p, q), limits)
}

/// Result of the linkwise criterion at a section.
#[derive(Debug, Clone)]
pub struct StratVerdict {
    /// Per element: is x_p dualizable in its stratum.
    pub strata_dualizable: Vec<bool>,
    /// Per strict pair, in `strict_pairs` order: the link verdict.
    pub links: Vec<((usize, usize), bool)>,
    pub is_dualizable: bool,
    /// Witness in the stratified lax limit, when dualizable.
    pub witness: Option<DualityDatum>,
}

/// Theorem-B-style criterion: a section is dualizable iff each component
/// is dualizable in its stratum and every length-1 link passes the
/// recollement criterion. On success the global dual is assembled from
/// the per-stratum duals and the linkwise β's, and the triangle
/// identities are verified in the category of sections.
pub fn linkwise_criterion(
    sl: &StratLimitCategory,
    x: &StratLimObject,
    limits: &Limits,
) -> Result<StratVerdict> {
    let s = &sl.strat;
    let n = s.poset.n();
    let duals: Vec<Option<DualityDatum>> = (0..n)
        .map(|p| duality::first_dual(&s.strata[p], x.x[p], limits))
        .collect::<Result<_>>()?;
    let strata_dualizable: Vec<bool> = duals.iter().map(Option::is_some).collect();
    let mut links = Vec::new();
    let mut betas = Vec::new();
    let mut all_links_ok = true;
    for (pi, &(p, q)) in s.pairs().iter().enumerate() {
        let link = link_instance(s, p, q, limits)?;
        let xo = LaxLimitObject { u: x.x[p], z: x.x[q], alpha: x.gamma[pi] };
        let verdict = laxlim::criterion_dualizable(&link, &xo, laxlim::Mode::AtTwoObjects, limits)?;
        links.push(((p, q), verdict.is_dualizable));
        all_links_ok &= verdict.is_dualizable;
        if let Some(w) = verdict.witness {
            betas.push(Some(link.obj(w.x_dual).alpha));
        } else {
            betas.push(None);
        }
    }
    let is_dualizable = strata_dualizable.iter().all(|&b| b) && all_links_ok;
    let mut verdict = StratVerdict { strata_dualizable, links, is_dualizable, witness: None };
    if !is_dualizable {
        return Ok(verdict);
    }
    let duals: Vec<DualityDatum> = duals.into_iter().map(Option::unwrap).collect();
    let xd = StratLimObject {
        x: duals.iter().map(|d| d.x_dual).collect(),
        gamma: betas.into_iter().map(Option::unwrap).collect(),
    };
    let x_id = sl
        .obj_id(x)
        .ok_or_else(|| Error::MalformedTable("section not in this lax limit".into()))?;
    let xd_id = sl.obj_id(&xd).ok_or_else(|| {
        Error::MalformedTable("assembled dual section is not coherent".into())
    })?;
    let ev_comps: Vec<MorId> = duals.iter().map(|d| d.ev).collect();
    let coev_comps: Vec<MorId> = duals.iter().map(|d| d.coev).collect();
    let ev = sl
        .mor_id(sl.cat.tensor(xd_id, x_id), sl.cat.unit, &ev_comps)
        .ok_or_else(|| Error::MalformedTable("componentwise evaluation is not a morphism".into()))?;
    let coev = sl
        .mor_id(sl.cat.unit, sl.cat.tensor(x_id, xd_id), &coev_comps)
        .ok_or_else(|| {
            Error::MalformedTable("componentwise coevaluation is not a morphism".into())
        })?;
    let datum = DualityDatum { x: x_id, x_dual: xd_id, ev, coev };
    if !duality::verify_triangle(&sl.cat, &datum)? {
        return Err(Error::MalformedTable(
            "assembled global dual fails the triangle identities".into(),
        ));
    }
    verdict.witness = Some(datum);
    Ok(verdict)
}

/// Output of the peel-first reduction over a chain poset: the lax functor
/// from the bottom stratum into the sections over the tail, the
/// materialized tail and its lax limit, and the strict monoidal bijection
/// from the sections over the whole chain.
#[derive(Debug)]
pub struct PeelData {
    pub phi: LaxSMFunctor,
    pub tail: StratLimitCategory,
    pub peeled: LaxLimitCategory,
    /// Functor from the full section category's base to `peeled`'s base.
    pub iso: Functor,
}

/// Peels the bottom element off a stratification over a chain: the
/// sections over [n] are identified with the lax limit of the functor
/// x₀ ↦ ((Φ_{0k}(x₀))_k, gluings θ^{0jk}_{x₀}).
pub fn peel_first(sl: &StratLimitCategory, limits: &Limits) -> Result<PeelData> {
    let s = &sl.strat;
    let ord = s.poset.linear_order()?;
    if ord.len() < 2 {
        return Err(Error::NotAChain("peeling needs a chain with at least 2 elements".into()));
    }
    let bottom = ord[0];
    let tail_elems: Vec<usize> = ord[1..].to_vec();
    let tail_poset = FinPoset {
        names: tail_elems.iter().map(|&i| s.poset.names[i].clone()).collect(),
        leq: (0..tail_elems.len())
            .map(|a| (0..tail_elems.len()).map(|b| a <= b).collect())
            .collect(),
    };
    let tail_strat = restrict(s, &tail_poset, &tail_elems)?;
    let tail = strat_lax_limit(&tail_strat, limits)?;
    let bottom_cat = &s.strata[bottom];

    let tail_pairs = tail_poset.strict_pairs();
    // φ on objects: x₀ ↦ the tail section of monodromy images.
    let section_of = |x0: ObjId| -> Result<StratLimObject> {
        let xs: Vec<ObjId> =
            tail_elems.iter().map(|&k| s.mono(bottom, k).on_obj(x0)).collect();
        let gamma: Vec<MorId> = tail_pairs
            .iter()
            .map(|&(a, b)| s.th(bottom, tail_elems[a], tail_elems[b]).at(x0))
            .collect();
        let sec = StratLimObject { x: xs, gamma };
        if tail.obj_id(&sec).is_none() {
            return Err(Error::MalformedTable(
                "monodromy image of an object is not a coherent tail section".into(),
            ));
        }
        Ok(sec)
    };
    let mut object_map = Vec::with_capacity(bottom_cat.base.n_objects());
    for x0 in bottom_cat.base.objects() {
        object_map.push(tail.obj_id(&section_of(x0)?).unwrap());
    }
    let mut morphism_map = Vec::with_capacity(bottom_cat.base.n_morphisms());
    for f in bottom_cat.base.morphisms() {
        let src = object_map[bottom_cat.base.source(f).idx()];
        let tgt = object_map[bottom_cat.base.target(f).idx()];
        let comps: Vec<MorId> =
            tail_elems.iter().map(|&k| s.mono(bottom, k).on_mor(f)).collect();
        let m = tail.mor_id(src, tgt, &comps).ok_or_else(|| {
            Error::MalformedTable("monodromy image of a morphism is not a section morphism".into())
        })?;
        morphism_map.push(m);
    }
    // ι: unit section of the tail → φ(1₀), components ι^{Φ_{0k}}.
    let iota_comps: Vec<MorId> =
        tail_elems.iter().map(|&k| s.mono(bottom, k).unit_cell).collect();
    let unit_cell = tail
        .mor_id(tail.cat.unit, object_map[bottom_cat.unit.idx()], &iota_comps)
        .ok_or_else(|| Error::MalformedTable("unit cells do not form a section morphism".into()))?;
    // μ: componentwise μ^{Φ_{0k}}.
    let mut mult = Vec::with_capacity(bottom_cat.base.n_objects().pow(2));
    for u in bottom_cat.base.objects() {
        for up in bottom_cat.base.objects() {
            let src = tail.cat.tensor(object_map[u.idx()], object_map[up.idx()]);
            let tgt = object_map[bottom_cat.tensor(u, up).idx()];
            let comps: Vec<MorId> = tail_elems
                .iter()
                .map(|&k| s.mono(bottom, k).mu(bottom_cat, u, up))
                .collect();
            let m = tail.mor_id(src, tgt, &comps).ok_or_else(|| {
                Error::MalformedTable("μ cells do not form a section morphism".into())
            })?;
            mult.push(m);
        }
    }
    let phi = LaxSMFunctor { functor: Functor { object_map, morphism_map }, unit_cell, mult };
    let peeled = laxlim::lax_limit(bottom_cat, &tail.cat, &phi, limits)?;

    // The identification: a section x over the chain goes to
    // (x_bottom, tail restriction, α = (γ_{0k})_k).
    let full_pairs = s.poset.strict_pairs();
    let pair_pos: HashMap<(usize, usize), usize> =
        full_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut iso_obj = Vec::with_capacity(sl.objects.len());
    for x in &sl.objects {
        let tail_sec = restrict_object(s, &tail_poset, &tail_elems, x);
        let tail_id = tail.obj_id(&tail_sec).ok_or_else(|| {
            Error::MalformedTable("restricted section is not coherent".into())
        })?;
        let alpha_comps: Vec<MorId> = tail_elems
            .iter()
            .map(|&k| x.gamma[pair_pos[&(bottom, k)]])
            .collect();
        let phi_x0 = phi.on_obj(x.x[bottom]);
        let alpha = tail.mor_id(tail_id, phi_x0, &alpha_comps).ok_or_else(|| {
            Error::MalformedTable("gluing family is not a tail-section morphism".into())
        })?;
        let target = LaxLimitObject { u: x.x[bottom], z: tail_id, alpha };
        let o = peeled.obj_id(&target).ok_or_else(|| {
            Error::MalformedTable("peeled object missing from the lax limit".into())
        })?;
        iso_obj.push(o);
    }
    let mut iso_mor = Vec::with_capacity(sl.mor_comps.len());
    for (m, comps) in sl.mor_comps.iter().enumerate() {
        let mid = MorId(m as u32);
        let src = iso_obj[sl.cat.base.source(mid).idx()];
        let tgt = iso_obj[sl.cat.base.target(mid).idx()];
        let tail_comps: Vec<MorId> = tail_elems.iter().map(|&k| comps[k]).collect();
        let tail_src = peeled.obj(src).z;
        let tail_tgt = peeled.obj(tgt).z;
        let g = tail.mor_id(tail_src, tail_tgt, &tail_comps).ok_or_else(|| {
            Error::MalformedTable("tail components are not a section morphism".into())
        })?;
        let pm = peeled.mor_id(src, tgt, comps[bottom], g).ok_or_else(|| {
            Error::MalformedTable("peeled morphism missing from the lax limit".into())
        })?;
        iso_mor.push(pm);
    }
    let iso = Functor { object_map: iso_obj, morphism_map: iso_mor };
    Ok(PeelData { phi, tail, peeled, iso })
}

/// Checks that `iso` is a bijective strict monoidal functor between the
/// bases of two symmetric monoidal categories.
pub fn is_strict_monoidal_bijection(
    iso: &Functor,
    dom: &SymMonCategory,
    cod: &SymMonCategory,
) -> bool {
    if !iso.validate(&dom.base, &cod.base).is_ok() || !iso.is_bijective(&dom.base, &cod.base) {
        return false;
    }
    if iso.on_obj(dom.unit) != cod.unit {
        return false;
    }
    for a in dom.base.objects() {
        for b in dom.base.objects() {
            if iso.on_obj(dom.tensor(a, b)) != cod.tensor(iso.on_obj(a), iso.on_obj(b)) {
                return false;
            }
            if iso.on_mor(dom.sym(a, b)) != cod.sym(iso.on_obj(a), iso.on_obj(b)) {
                return false;
            }
        }
    }
    for f in dom.base.morphisms() {
        for g in dom.base.morphisms() {
            if iso.on_mor(dom.tensor_mor(f, g)) != cod.tensor_mor(iso.on_mor(f), iso.on_mor(g)) {
                return false;
            }
        }
    }
    true
}
