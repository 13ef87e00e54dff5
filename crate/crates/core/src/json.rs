//! JSON document schemas for the core structures, with conversions in
//! both directions.
//!
//! Schemas: "fincat/v1", "smc/v1", "laxfun/v1", "laxlimit-instance/v1",
//! "stratification/v1". Every document carries its schema tag, unknown
//! keys are rejected, and all references are by name. Structural problems
//! (unknown names, incomplete tables) surface as [`Error::Parse`];
//! category-axiom failures are left to the validators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, MorId, NatTransform, ObjId};
use crate::monoidal::{LaxSMFunctor, LaxSMNatTransform, SymMonCategory};
use crate::strat::{FinPoset, Stratification};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// One morphism entry of a "fincat/v1" document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Schema "fincat/v1": a finite category by explicit tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatDoc {
    pub schema: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    /// object name → identity morphism name.
    pub identities: BTreeMap<String, String>,
    /// Entries [g, f, g∘f] by morphism name, one per composable pair.
    pub composition: Vec<[String; 3]>,
}

/// Schema "smc/v1": "fincat/v1" plus strict symmetric monoidal tables.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmcDoc {
    pub schema: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    pub composition: Vec<[String; 3]>,
    pub unit: String,
    /// Entries [a, b, a⊗b] by object name, one per ordered pair.
    pub tensor_obj: Vec<[String; 3]>,
    /// Entries [f, g, f⊗g] by morphism name, one per ordered pair.
    pub tensor_mor: Vec<[String; 3]>,
    /// Entries [a, b, σ_{a,b}], one per ordered pair of objects.
    pub symmetry: Vec<[String; 3]>,
}

/// Schema "laxfun/v1": a lax symmetric monoidal functor by name maps.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxFunDoc {
    pub schema: String,
    /// domain object name → codomain object name.
    pub object_map: BTreeMap<String, String>,
    /// domain morphism name → codomain morphism name.
    pub morphism_map: BTreeMap<String, String>,
    /// Name of ι: 1 → φ(1) in the codomain.
    pub unit_cell: String,
    /// Entries [u, u′, μ_{u,u′}]: objects of the domain, morphism of the
    /// codomain; one per ordered pair.
    pub mult: Vec<[String; 3]>,
}

/// Schema "laxlimit-instance/v1": a recollement presentation (U, Z, φ).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxLimitInstanceDoc {
    pub schema: String,
    pub domain: SmcDoc,
    pub codomain: SmcDoc,
    pub phi: LaxFunDoc,
}

/// The poset part of a "stratification/v1" document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    /// Strict or non-strict related pairs [p, q] with p ≤ q; the
    /// reflexive-transitive closure is taken on load.
    pub leq: Vec<[String; 2]>,
}

/// Schema "stratification/v1": poset-indexed strata with monodromy and
/// descent cells.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StratificationDoc {
    pub schema: String,
    pub poset: PosetDoc,
    /// element name → stratum.
    pub strata: BTreeMap<String, SmcDoc>,
    /// "p<q" → monodromy functor Φ_{pq}.
    pub monodromy: BTreeMap<String, LaxFunDoc>,
    /// "p<q<r" → components of θ^{pqr}, one morphism name of stratum r
    /// per object of stratum p, in object order.
    pub theta: BTreeMap<String, Vec<String>>,
}

/// Any recognized document, dispatched on the "schema" key.
#[derive(Debug, Clone)]
pub enum Document {
    FinCat(FinCatDoc),
    Smc(SmcDoc),
    LaxLimitInstance(LaxLimitInstanceDoc),
    Stratification(StratificationDoc),
}

/// Parses a document of any recognized schema from JSON text.
pub fn parse_document(text: &str) -> Result<Document> {
    let probe: serde_json::Value =
        serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let tag = probe
        .get("schema")
        .and_then(|v| v.as_str())
        .ok_or_else(|| parse_err("missing top-level \"schema\" key"))?
        .to_string();
    let doc = match tag.as_str() {
        "fincat/v1" => Document::FinCat(
            serde_json::from_str(text).map_err(|e| parse_err(format!("fincat/v1: {e}")))?,
        ),
        "smc/v1" => Document::Smc(
            serde_json::from_str(text).map_err(|e| parse_err(format!("smc/v1: {e}")))?,
        ),
        "laxlimit-instance/v1" => Document::LaxLimitInstance(
            serde_json::from_str(text)
                .map_err(|e| parse_err(format!("laxlimit-instance/v1: {e}")))?,
        ),
        "stratification/v1" => Document::Stratification(
            serde_json::from_str(text)
                .map_err(|e| parse_err(format!("stratification/v1: {e}")))?,
        ),
        other => return Err(parse_err(format!("unknown schema `{other}`"))),
    };
    Ok(doc)
}

fn expect_schema(found: &str, want: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(parse_err(format!("expected schema `{want}`, found `{found}`")))
    }
}

struct Names<'a> {
    cat: &'a FinCategory,
}

impl Names<'_> {
    fn obj(&self, name: &str) -> Result<ObjId> {
        self.cat
            .obj_by_name(name)
            .ok_or_else(|| parse_err(format!("unknown object `{name}`")))
    }

    fn mor(&self, name: &str) -> Result<MorId> {
        self.cat
            .mor_by_name(name)
            .ok_or_else(|| parse_err(format!("unknown morphism `{name}`")))
    }
}

fn fincat_from_parts(
    objects: &[String],
    morphisms: &[MorphismDoc],
    identities: &BTreeMap<String, String>,
    composition: &[[String; 3]],
) -> Result<FinCategory> {
    let obj_index: BTreeMap<&str, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), ObjId(i as u32)))
        .collect();
    if obj_index.len() != objects.len() {
        return Err(parse_err("duplicate object name"));
    }
    let obj = |name: &str| -> Result<ObjId> {
        obj_index
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(format!("unknown object `{name}`")))
    };
    let mor_index: BTreeMap<&str, MorId> = morphisms
        .iter()
        .enumerate()
        .map(|(i, m)| (m.id.as_str(), MorId(i as u32)))
        .collect();
    if mor_index.len() != morphisms.len() {
        return Err(parse_err("duplicate morphism name"));
    }
    let mor = |name: &str| -> Result<MorId> {
        mor_index
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(format!("unknown morphism `{name}`")))
    };
    let mut mors = Vec::with_capacity(morphisms.len());
    for m in morphisms {
        mors.push((m.id.clone(), obj(&m.src)?, obj(&m.tgt)?));
    }
    let mut identity = Vec::with_capacity(objects.len());
    for name in objects {
        let id_name = identities
            .get(name)
            .ok_or_else(|| parse_err(format!("missing identity for object `{name}`")))?;
        identity.push(mor(id_name)?);
    }
    if identities.len() != objects.len() {
        return Err(parse_err("identities map mentions an unknown object"));
    }
    let mut comp = Vec::with_capacity(composition.len());
    for [g, f, r] in composition {
        comp.push((mor(g)?, mor(f)?, mor(r)?));
    }
    FinCategory::new(objects.to_vec(), mors, identity, comp)
        .map_err(|e| parse_err(e.to_string()))
}

/// Converts a "fincat/v1" document into a category. Structural problems
/// only; run `validate()` for the axioms.
pub fn fincat_from_doc(doc: &FinCatDoc) -> Result<FinCategory> {
    expect_schema(&doc.schema, "fincat/v1")?;
    fincat_from_parts(&doc.objects, &doc.morphisms, &doc.identities, &doc.composition)
}

/// Converts an "smc/v1" document into a symmetric monoidal category.
pub fn smc_from_doc(doc: &SmcDoc) -> Result<SymMonCategory> {
    expect_schema(&doc.schema, "smc/v1")?;
    let base =
        fincat_from_parts(&doc.objects, &doc.morphisms, &doc.identities, &doc.composition)?;
    let names = Names { cat: &base };
    let n_obj = base.n_objects();
    let n_mor = base.n_morphisms();
    let unit = names.obj(&doc.unit)?;
    let fill_obj_table = |entries: &[[String; 3]], what: &str| -> Result<Vec<ObjId>> {
        let mut table = vec![None; n_obj * n_obj];
        for [a, b, r] in entries {
            let (a, b, r) = (names.obj(a)?, names.obj(b)?, names.obj(r)?);
            table[a.idx() * n_obj + b.idx()] = Some(r);
        }
        table
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| parse_err(format!("incomplete {what} table")))
    };
    let tensor_obj = fill_obj_table(&doc.tensor_obj, "tensor_obj")?;
    let mut tensor_mor = vec![None; n_mor * n_mor];
    for [f, g, r] in &doc.tensor_mor {
        let (f, g, r) = (names.mor(f)?, names.mor(g)?, names.mor(r)?);
        tensor_mor[f.idx() * n_mor + g.idx()] = Some(r);
    }
    let tensor_mor = tensor_mor
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err("incomplete tensor_mor table"))?;
    let mut symmetry = vec![None; n_obj * n_obj];
    for [a, b, r] in &doc.symmetry {
        let (a, b) = (names.obj(a)?, names.obj(b)?);
        symmetry[a.idx() * n_obj + b.idx()] = Some(names.mor(r)?);
    }
    let symmetry = symmetry
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err("incomplete symmetry table"))?;
    SymMonCategory::new(base, unit, tensor_obj, tensor_mor, symmetry)
        .map_err(|e| parse_err(e.to_string()))
}

/// Converts a "laxfun/v1" document into a lax symmetric monoidal functor
/// between the given categories.
pub fn laxfun_from_doc(
    doc: &LaxFunDoc,
    dom: &SymMonCategory,
    cod: &SymMonCategory,
) -> Result<LaxSMFunctor> {
    expect_schema(&doc.schema, "laxfun/v1")?;
    let dn = Names { cat: &dom.base };
    let cn = Names { cat: &cod.base };
    let n_obj = dom.base.n_objects();
    let mut object_map = vec![None; n_obj];
    for (u, z) in &doc.object_map {
        object_map[dn.obj(u)?.idx()] = Some(cn.obj(z)?);
    }
    let object_map = object_map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err("incomplete object_map"))?;
    let mut morphism_map = vec![None; dom.base.n_morphisms()];
    for (f, g) in &doc.morphism_map {
        morphism_map[dn.mor(f)?.idx()] = Some(cn.mor(g)?);
    }
    let morphism_map = morphism_map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err("incomplete morphism_map"))?;
    let unit_cell = cn.mor(&doc.unit_cell)?;
    let mut mult = vec![None; n_obj * n_obj];
    for [u, up, m] in &doc.mult {
        let (u, up) = (dn.obj(u)?, dn.obj(up)?);
        mult[u.idx() * n_obj + up.idx()] = Some(cn.mor(m)?);
    }
    let mult = mult
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| parse_err("incomplete mult table"))?;
    Ok(LaxSMFunctor { functor: Functor { object_map, morphism_map }, unit_cell, mult })
}

/// Converts a "laxlimit-instance/v1" document into (U, Z, φ).
pub fn laxlimit_instance_from_doc(
    doc: &LaxLimitInstanceDoc,
) -> Result<(SymMonCategory, SymMonCategory, LaxSMFunctor)> {
    expect_schema(&doc.schema, "laxlimit-instance/v1")?;
    let dom = smc_from_doc(&doc.domain)?;
    let cod = smc_from_doc(&doc.codomain)?;
    let phi = laxfun_from_doc(&doc.phi, &dom, &cod)?;
    Ok((dom, cod, phi))
}

/// Converts a "stratification/v1" document. Poset order is the
/// reflexive-transitive closure of the listed pairs.
pub fn stratification_from_doc(doc: &StratificationDoc) -> Result<Stratification> {
    expect_schema(&doc.schema, "stratification/v1")?;
    let n = doc.poset.elements.len();
    let elem_index: BTreeMap<&str, usize> = doc
        .poset
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_str(), i))
        .collect();
    if elem_index.len() != n {
        return Err(parse_err("duplicate poset element"));
    }
    let elem = |name: &str| -> Result<usize> {
        elem_index
            .get(name)
            .copied()
            .ok_or_else(|| parse_err(format!("unknown poset element `{name}`")))
    };
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for [p, q] in &doc.poset.leq {
        leq[elem(p)?][elem(q)?] = true;
    }
    // Transitive closure.
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    let poset = FinPoset { names: doc.poset.elements.clone(), leq };
    let mut strata = Vec::with_capacity(n);
    for name in &doc.poset.elements {
        let sdoc = doc
            .strata
            .get(name)
            .ok_or_else(|| parse_err(format!("missing stratum for `{name}`")))?;
        strata.push(smc_from_doc(sdoc)?);
    }
    if doc.strata.len() != n {
        return Err(parse_err("strata map mentions an unknown element"));
    }
    let mut monodromy = Vec::new();
    for (p, q) in poset.strict_pairs() {
        let key = format!("{}<{}", poset.names[p], poset.names[q]);
        let fdoc = doc
            .monodromy
            .get(&key)
            .ok_or_else(|| parse_err(format!("missing monodromy `{key}`")))?;
        monodromy.push(laxfun_from_doc(fdoc, &strata[p], &strata[q])?);
    }
    if doc.monodromy.len() != poset.strict_pairs().len() {
        return Err(parse_err("monodromy map has an unrecognized key"));
    }
    let mut theta = Vec::new();
    for (p, q, r) in poset.chains3() {
        let key = format!(
            "{}<{}<{}",
            poset.names[p], poset.names[q], poset.names[r]
        );
        let comps = doc
            .theta
            .get(&key)
            .ok_or_else(|| parse_err(format!("missing theta `{key}`")))?;
        if comps.len() != strata[p].base.n_objects() {
            return Err(parse_err(format!("theta `{key}` has wrong component count")));
        }
        let rn = Names { cat: &strata[r].base };
        let components =
            comps.iter().map(|c| rn.mor(c)).collect::<Result<Vec<_>>>()?;
        theta.push(LaxSMNatTransform { transform: NatTransform { components } });
    }
    if doc.theta.len() != poset.chains3().len() {
        return Err(parse_err("theta map has an unrecognized key"));
    }
    Stratification::new(poset, strata, monodromy, theta)
        .map_err(|e| parse_err(e.to_string()))
}

fn fincat_parts(
    c: &FinCategory,
) -> (Vec<String>, Vec<MorphismDoc>, BTreeMap<String, String>, Vec<[String; 3]>) {
    let objects: Vec<String> = c.objects().map(|o| c.obj_name(o).to_string()).collect();
    let morphisms = c
        .morphisms()
        .map(|m| MorphismDoc {
            id: c.mor_name(m).to_string(),
            src: c.obj_name(c.source(m)).to_string(),
            tgt: c.obj_name(c.target(m)).to_string(),
        })
        .collect();
    let identities = c
        .objects()
        .map(|o| (c.obj_name(o).to_string(), c.mor_name(c.identity(o)).to_string()))
        .collect();
    let mut composition = Vec::new();
    for g in c.morphisms() {
        for f in c.morphisms() {
            if c.source(g) == c.target(f) {
                let r = c.compose(g, f).expect("composable by typing");
                composition.push([
                    c.mor_name(g).to_string(),
                    c.mor_name(f).to_string(),
                    c.mor_name(r).to_string(),
                ]);
            }
        }
    }
    (objects, morphisms, identities, composition)
}

/// Serializes a category as "fincat/v1".
pub fn fincat_to_doc(c: &FinCategory) -> FinCatDoc {
    let (objects, morphisms, identities, composition) = fincat_parts(c);
    FinCatDoc { schema: "fincat/v1".into(), objects, morphisms, identities, composition }
}

/// Serializes a symmetric monoidal category as "smc/v1".
pub fn smc_to_doc(c: &SymMonCategory) -> SmcDoc {
    let (objects, morphisms, identities, composition) = fincat_parts(&c.base);
    let on = |o: ObjId| c.base.obj_name(o).to_string();
    let mn = |m: MorId| c.base.mor_name(m).to_string();
    let mut tensor_obj = Vec::new();
    let mut symmetry = Vec::new();
    for a in c.base.objects() {
        for b in c.base.objects() {
            tensor_obj.push([on(a), on(b), on(c.tensor(a, b))]);
            symmetry.push([on(a), on(b), mn(c.sym(a, b))]);
        }
    }
    let mut tensor_mor = Vec::new();
    for f in c.base.morphisms() {
        for g in c.base.morphisms() {
            tensor_mor.push([mn(f), mn(g), mn(c.tensor_mor(f, g))]);
        }
    }
    SmcDoc {
        schema: "smc/v1".into(),
        objects,
        morphisms,
        identities,
        composition,
        unit: on(c.unit),
        tensor_obj,
        tensor_mor,
        symmetry,
    }
}

/// Serializes a lax symmetric monoidal functor as "laxfun/v1".
pub fn laxfun_to_doc(
    phi: &LaxSMFunctor,
    dom: &SymMonCategory,
    cod: &SymMonCategory,
) -> LaxFunDoc {
    let object_map = dom
        .base
        .objects()
        .map(|u| {
            (dom.base.obj_name(u).to_string(), cod.base.obj_name(phi.on_obj(u)).to_string())
        })
        .collect();
    let morphism_map = dom
        .base
        .morphisms()
        .map(|f| {
            (dom.base.mor_name(f).to_string(), cod.base.mor_name(phi.on_mor(f)).to_string())
        })
        .collect();
    let mut mult = Vec::new();
    for u in dom.base.objects() {
        for up in dom.base.objects() {
            mult.push([
                dom.base.obj_name(u).to_string(),
                dom.base.obj_name(up).to_string(),
                cod.base.mor_name(phi.mu(dom, u, up)).to_string(),
            ]);
        }
    }
    LaxFunDoc {
        schema: "laxfun/v1".into(),
        object_map,
        morphism_map,
        unit_cell: cod.base.mor_name(phi.unit_cell).to_string(),
        mult,
    }
}

/// Serializes a recollement presentation as "laxlimit-instance/v1".
pub fn laxlimit_instance_to_doc(
    dom: &SymMonCategory,
    cod: &SymMonCategory,
    phi: &LaxSMFunctor,
) -> LaxLimitInstanceDoc {
    LaxLimitInstanceDoc {
        schema: "laxlimit-instance/v1".into(),
        domain: smc_to_doc(dom),
        codomain: smc_to_doc(cod),
        phi: laxfun_to_doc(phi, dom, cod),
    }
}

/// Serializes a stratification as "stratification/v1".
pub fn stratification_to_doc(s: &Stratification) -> StratificationDoc {
    let poset = &s.poset;
    let mut leq = Vec::new();
    for (p, q) in poset.strict_pairs() {
        leq.push([poset.names[p].clone(), poset.names[q].clone()]);
    }
    let strata = poset
        .names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), smc_to_doc(&s.strata[i])))
        .collect();
    let monodromy = poset
        .strict_pairs()
        .iter()
        .map(|&(p, q)| {
            (
                format!("{}<{}", poset.names[p], poset.names[q]),
                laxfun_to_doc(s.mono(p, q), &s.strata[p], &s.strata[q]),
            )
        })
        .collect();
    let theta = poset
        .chains3()
        .iter()
        .map(|&(p, q, r)| {
            let key = format!("{}<{}<{}", poset.names[p], poset.names[q], poset.names[r]);
            let comps = s
                .th(p, q, r)
                .transform
                .components
                .iter()
                .map(|&m| s.strata[r].base.mor_name(m).to_string())
                .collect();
            (key, comps)
        })
        .collect();
    StratificationDoc {
        schema: "stratification/v1".into(),
        poset: PosetDoc { elements: poset.names.clone(), leq },
        strata,
        monodromy,
        theta,
    }
}

/// Canonical serialization: sorted object keys, no insignificant
/// whitespace. Byte-stable for equal values.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| parse_err(e.to_string()))?;
    serde_json::to_string(&v).map_err(|e| parse_err(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::error::Limits;

    #[test]
    fn smc_round_trips_through_doc() {
        for c in [
            corpus::chain_min_smc(4),
            corpus::discrete_group_smc(&[2]),
            corpus::discrete_group_smc(&[3]),
            corpus::superline_smc(),
        ] {
            let doc = smc_to_doc(&c);
            let text = serde_json::to_string(&doc).unwrap();
            let parsed = match parse_document(&text).unwrap() {
                Document::Smc(d) => d,
                other => panic!("wrong document kind: {other:?}"),
            };
            let back = smc_from_doc(&parsed).unwrap();
            assert!(back.validate().is_ok());
            assert_eq!(back, c);
        }
    }

    #[test]
    fn laxlimit_instance_round_trips() {
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let doc = laxlimit_instance_to_doc(&dom, &cod, &phi);
        let text = serde_json::to_string(&doc).unwrap();
        let Document::LaxLimitInstance(d) = parse_document(&text).unwrap() else {
            panic!("wrong document kind");
        };
        let (dom2, cod2, phi2) = laxlimit_instance_from_doc(&d).unwrap();
        assert_eq!(dom2, dom);
        assert_eq!(cod2, cod);
        assert_eq!(phi2, phi);
    }

    #[test]
    fn stratification_round_trips() {
        let s = corpus::theta_example_stratification();
        let doc = stratification_to_doc(&s);
        let text = serde_json::to_string(&doc).unwrap();
        let Document::Stratification(d) = parse_document(&text).unwrap() else {
            panic!("wrong document kind");
        };
        let s2 = stratification_from_doc(&d).unwrap();
        assert!(s2.validate().is_ok());
        assert_eq!(s2.poset.leq, s.poset.leq);
        assert_eq!(s2.strata, s.strata);
        assert_eq!(s2.monodromy, s.monodromy);
        assert_eq!(s2.theta.len(), s.theta.len());
    }

    #[test]
    fn unknown_keys_and_schemas_are_rejected() {
        assert!(parse_document("{").is_err());
        assert!(parse_document("{\"objects\": []}").is_err());
        assert!(parse_document("{\"schema\": \"nope/v9\"}").is_err());
        let c = corpus::chain_min_smc(2);
        let mut v = serde_json::to_value(smc_to_doc(&c)).unwrap();
        v.as_object_mut().unwrap().insert("extra".into(), 1.into());
        assert!(parse_document(&serde_json::to_string(&v).unwrap()).is_err());
    }

    #[test]
    fn structural_errors_are_parse_errors() {
        let c = corpus::chain_min_smc(2);
        let mut doc = smc_to_doc(&c);
        doc.unit = "missing".into();
        assert!(matches!(smc_from_doc(&doc), Err(Error::Parse(_))));
        let mut doc2 = smc_to_doc(&c);
        doc2.tensor_obj.pop();
        assert!(matches!(smc_from_doc(&doc2), Err(Error::Parse(_))));
    }

    #[test]
    fn canonical_json_is_byte_stable() {
        let (dom, cod, phi) = corpus::z2_to_chain_lax();
        let doc = laxlimit_instance_to_doc(&dom, &cod, &phi);
        let a = to_canonical_json(&doc).unwrap();
        let b = to_canonical_json(&laxlimit_instance_to_doc(&dom, &cod, &phi)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn leq_closure_accepts_cover_relations_only() {
        // A 3-chain given only by its covers still loads.
        let s = corpus::theta_example_stratification();
        let mut doc = stratification_to_doc(&s);
        doc.poset.leq = vec![
            [doc.poset.elements[0].clone(), doc.poset.elements[1].clone()],
            [doc.poset.elements[1].clone(), doc.poset.elements[2].clone()],
        ];
        let s2 = stratification_from_doc(&doc).unwrap();
        assert_eq!(s2.poset.leq, s.poset.leq);
    }

    #[test]
    fn docs_validate_after_load_across_corpus() {
        let limits = Limits::default();
        let _ = limits;
        for (dom, cod, phi) in corpus::handcrafted_instances() {
            let doc = laxlimit_instance_to_doc(&dom, &cod, &phi);
            let (d2, c2, p2) = laxlimit_instance_from_doc(&doc).unwrap();
            assert!(d2.validate().is_ok());
            assert!(c2.validate().is_ok());
            assert!(p2.validate(&d2, &c2).is_ok());
        }
    }
}
