//! A combinatorial model of 1-dimensional oriented bordisms: objects are
//! signed words, a bordism is a perfect matching on the boundary points
//! plus a count of free circles, composition is path tracing with loop
//! counting. Bordisms are factored into layers of elementary tiles
//! (identities, crossings, cups, caps) and evaluated in any symmetric
//! monoidal category against a duality datum.

use std::collections::HashMap;
use std::fmt;

use crate::duality::DualityDatum;
use crate::error::{Error, Result};
use crate::fincat::{MorId, ObjId};
pub use crate::laxlim::Sign;
use crate::corpus::SplitMix64;
use crate::monoidal::SymMonCategory;

/// A finite word over {+, −}.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedWord(pub Vec<Sign>);

impl SignedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses strings like `+-+` (empty string = empty word).
    pub fn parse(s: &str) -> Result<SignedWord> {
        s.chars()
            .map(|ch| match ch {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("invalid sign character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignedWord)
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", if *s == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// A boundary point of a bordism: a position in the source or target word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Src(usize),
    Tgt(usize),
}

/// A 1-d bordism: a perfect matching on the boundary points plus free
/// circles. Strands are oriented: a source–target arc preserves the sign,
/// a source–source or target–target arc connects opposite signs.
/// The matching is stored canonically (each pair ordered, pairs sorted),
/// so derived equality is equality of bordisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bordism {
    pub source: SignedWord,
    pub target: SignedWord,
    pub pairs: Vec<(End, End)>,
    pub circles: u32,
}

impl Bordism {
    pub fn new(
        source: SignedWord,
        target: SignedWord,
        pairs: Vec<(End, End)>,
        circles: u32,
    ) -> Result<Bordism> {
        let mut canon: Vec<(End, End)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        canon.sort();
        let sign_at = |e: End| -> Result<Sign> {
            match e {
                End::Src(i) => source.0.get(i).copied().ok_or_else(|| {
                    Error::MalformedTable(format!("source index {i} out of range"))
                }),
                End::Tgt(j) => target.0.get(j).copied().ok_or_else(|| {
                    Error::MalformedTable(format!("target index {j} out of range"))
                }),
            }
        };
        let mut seen: HashMap<End, usize> = HashMap::new();
        for &(a, b) in &canon {
            for e in [a, b] {
                *seen.entry(e).or_insert(0) += 1;
            }
            let (sa, sb) = (sign_at(a)?, sign_at(b)?);
            let ok = match (a, b) {
                (End::Src(_), End::Tgt(_)) => sa == sb,
                _ => sa != sb,
            };
            if !ok {
                return Err(Error::TypeMismatch(format!(
                    "arc {a:?}–{b:?} violates the orientation rule"
                )));
            }
        }
        let total = source.len() + target.len();
        if seen.len() != total || seen.values().any(|&k| k != 1) {
            return Err(Error::MalformedTable(
                "matching must cover every boundary point exactly once".into(),
            ));
        }
        Ok(Bordism { source, target, pairs: canon, circles })
    }

    /// The identity bordism: parallel strands, no circles.
    pub fn identity(word: SignedWord) -> Bordism {
        let pairs = (0..word.len()).map(|i| (End::Src(i), End::Tgt(i))).collect();
        Bordism { source: word.clone(), target: word, pairs, circles: 0 }
    }

    /// The symmetry bordism w₁⊗w₂ → w₂⊗w₁.
    pub fn symmetry(w1: &SignedWord, w2: &SignedWord) -> Bordism {
        let (n1, n2) = (w1.len(), w2.len());
        let mut pairs = Vec::with_capacity(n1 + n2);
        for i in 0..n1 {
            pairs.push((End::Src(i), End::Tgt(n2 + i)));
        }
        for i in 0..n2 {
            pairs.push((End::Src(n1 + i), End::Tgt(i)));
        }
        let source = SignedWord(w1.0.iter().chain(&w2.0).copied().collect());
        let target = SignedWord(w2.0.iter().chain(&w1.0).copied().collect());
        Bordism::new(source, target, pairs, 0).expect("symmetry matching is well-formed")
    }

    /// The cup ∅ → (s, −s).
    pub fn cup(s: Sign) -> Bordism {
        Bordism {
            source: SignedWord::default(),
            target: SignedWord(vec![s, s.flip()]),
            pairs: vec![(End::Tgt(0), End::Tgt(1))],
            circles: 0,
        }
    }

    /// The cap (s, −s) → ∅.
    pub fn cap(s: Sign) -> Bordism {
        Bordism {
            source: SignedWord(vec![s, s.flip()]),
            target: SignedWord::default(),
            pairs: vec![(End::Src(0), End::Src(1))],
            circles: 0,
        }
    }

    /// The closed circle ∅ → ∅.
    pub fn circle() -> Bordism {
        Bordism {
            source: SignedWord::default(),
            target: SignedWord::default(),
            pairs: Vec::new(),
            circles: 1,
        }
    }

    /// Renders the bordism in the literal syntax accepted by [`parse_bordism`].
    pub fn to_literal(&self) -> String {
        let arcs = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let e = |x: End| match x {
                    End::Src(i) => format!("s{}", i + 1),
                    End::Tgt(j) => format!("t{}", j + 1),
                };
                format!("({}:{})", e(a), e(b))
            })
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "src={}; tgt={}; arcs={}; circles={}",
            self.source, self.target, arcs, self.circles
        )
    }
}

/// Parses the bordism literal syntax
/// `src=+-+; tgt=+; arcs=(s1:t1),(s2:s3); circles=2` (1-indexed points,
/// whitespace-insensitive; `circles` defaults to 0).
pub fn parse_bordism(literal: &str) -> Result<Bordism> {
    let compact: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
    let mut src = None;
    let mut tgt = None;
    let mut arcs_field = None;
    let mut circles = 0u32;
    for field in compact.split(';').filter(|f| !f.is_empty()) {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("field {field:?} is not key=value")))?;
        match key {
            "src" => src = Some(SignedWord::parse(value)?),
            "tgt" => tgt = Some(SignedWord::parse(value)?),
            "arcs" => arcs_field = Some(value.to_string()),
            "circles" => {
                circles = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid circle count {value:?}")))?
            }
            other => return Err(Error::Parse(format!("unknown field {other:?}"))),
        }
    }
    let source = src.ok_or_else(|| Error::Parse("missing src field".into()))?;
    let target = tgt.ok_or_else(|| Error::Parse("missing tgt field".into()))?;
    let arcs = arcs_field.ok_or_else(|| Error::Parse("missing arcs field".into()))?;
    let parse_end = |s: &str| -> Result<End> {
        let (prefix, num) = s.split_at(1.min(s.len()));
        let idx: usize = num
            .parse()
            .map_err(|_| Error::Parse(format!("invalid point index {s:?}")))?;
        if idx == 0 {
            return Err(Error::Parse(format!("point indices are 1-based: {s:?}")));
        }
        match prefix {
            "s" => Ok(End::Src(idx - 1)),
            "t" => Ok(End::Tgt(idx - 1)),
            _ => Err(Error::Parse(format!("point must start with s or t: {s:?}"))),
        }
    };
    let mut pairs = Vec::new();
    if !arcs.is_empty() {
        for arc in arcs.split("),(") {
            let arc = arc.trim_start_matches('(').trim_end_matches(')');
            let (a, b) = arc
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("arc {arc:?} is not a:b")))?;
            pairs.push((parse_end(a)?, parse_end(b)?));
        }
    }
    Bordism::new(source, target, pairs, circles)
        .map_err(|e| Error::Parse(format!("invalid bordism: {e}")))
}

/// Composes a: X → Y with b: Y → Z by tracing strands through Y; closed
/// loops created in the middle become circles.
pub fn compose_bordisms(a: &Bordism, b: &Bordism) -> Result<Bordism> {
    if a.target != b.source {
        return Err(Error::DomainMismatch(format!(
            "cannot compose: middle words {} vs {}",
            a.target, b.source
        )));
    }
    let partner = |bd: &Bordism| -> HashMap<End, End> {
        let mut m = HashMap::new();
        for &(x, y) in &bd.pairs {
            m.insert(x, y);
            m.insert(y, x);
        }
        m
    };
    let ap = partner(a);
    let bp = partner(b);
    let y_len = a.target.len();
    let mut y_visited = vec![false; y_len];
    // Walks from a boundary point to the opposite boundary point, marking
    // the interior points it passes.
    let trace = |start_in_a: bool, start: End, y_visited: &mut Vec<bool>| -> End {
        let mut in_a = start_in_a;
        let mut e = start;
        loop {
            if in_a {
                match ap[&e] {
                    End::Src(i) => return End::Src(i),
                    End::Tgt(j) => {
                        y_visited[j] = true;
                        in_a = false;
                        e = End::Src(j);
                    }
                }
            } else {
                match bp[&e] {
                    End::Tgt(k) => return End::Tgt(k),
                    End::Src(j) => {
                        y_visited[j] = true;
                        in_a = true;
                        e = End::Tgt(j);
                    }
                }
            }
        }
    };
    let mut pairs = Vec::new();
    let mut src_done = vec![false; a.source.len()];
    let mut tgt_done = vec![false; b.target.len()];
    for i in 0..a.source.len() {
        if src_done[i] {
            continue;
        }
        src_done[i] = true;
        let other = trace(true, End::Src(i), &mut y_visited);
        match other {
            End::Src(i2) => src_done[i2] = true,
            End::Tgt(k) => tgt_done[k] = true,
        }
        pairs.push((End::Src(i), other));
    }
    for k in 0..b.target.len() {
        if tgt_done[k] {
            continue;
        }
        tgt_done[k] = true;
        let other = trace(false, End::Tgt(k), &mut y_visited);
        if let End::Tgt(k2) = other {
            tgt_done[k2] = true;
        }
        pairs.push((other, End::Tgt(k)));
    }
    // Remaining interior points lie on closed loops.
    let mut loops = 0u32;
    for j0 in 0..y_len {
        if y_visited[j0] {
            continue;
        }
        loops += 1;
        let mut j = j0;
        loop {
            y_visited[j] = true;
            // Down through a, then up through b.
            let End::Tgt(j2) = ap[&End::Tgt(j)] else {
                unreachable!("loop point reached the boundary");
            };
            y_visited[j2] = true;
            let End::Src(j3) = bp[&End::Src(j2)] else {
                unreachable!("loop point reached the boundary");
            };
            j = j3;
            if j == j0 {
                break;
            }
        }
    }
    Bordism::new(a.source.clone(), b.target.clone(), pairs, a.circles + b.circles + loops)
}

/// The monoidal product: juxtaposition with shifted indices.
pub fn tensor_bordisms(a: &Bordism, b: &Bordism) -> Bordism {
    let (ds, dt) = (a.source.len(), a.target.len());
    let shift = |e: End| match e {
        End::Src(i) => End::Src(i + ds),
        End::Tgt(j) => End::Tgt(j + dt),
    };
    let pairs = a
        .pairs
        .iter()
        .copied()
        .chain(b.pairs.iter().map(|&(x, y)| (shift(x), shift(y))))
        .collect();
    let source = SignedWord(a.source.0.iter().chain(&b.source.0).copied().collect());
    let target = SignedWord(a.target.0.iter().chain(&b.target.0).copied().collect());
    Bordism::new(source, target, pairs, a.circles + b.circles)
        .expect("shifted juxtaposition is well-formed")
}

/// An elementary tile in a layer of a factored bordism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tile {
    Id(Sign),
    /// (s, t) → (t, s).
    Cross(Sign, Sign),
    /// ∅ → (s, −s).
    Cup(Sign),
    /// (s, −s) → ∅.
    Cap(Sign),
}

impl Tile {
    pub fn src(&self) -> Vec<Sign> {
        match *self {
            Tile::Id(s) => vec![s],
            Tile::Cross(s, t) => vec![s, t],
            Tile::Cup(_) => vec![],
            Tile::Cap(s) => vec![s, s.flip()],
        }
    }

    pub fn tgt(&self) -> Vec<Sign> {
        match *self {
            Tile::Id(s) => vec![s],
            Tile::Cross(s, t) => vec![t, s],
            Tile::Cup(s) => vec![s, s.flip()],
            Tile::Cap(_) => vec![],
        }
    }
}

/// A factorization of a bordism into horizontal layers of tiles, plus the
/// free circles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub source: SignedWord,
    pub layers: Vec<Vec<Tile>>,
    pub circles: u32,
}

/// Order in which non-through strands are factored out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    CapsFirst,
    CupsFirst,
}

fn layer_words(tiles: &[Tile]) -> (SignedWord, SignedWord) {
    let src = tiles.iter().flat_map(Tile::src).collect();
    let tgt = tiles.iter().flat_map(Tile::tgt).collect();
    (SignedWord(src), SignedWord(tgt))
}

/// The bordism of a single layer.
pub fn layer_to_bordism(tiles: &[Tile]) -> Bordism {
    let (source, target) = layer_words(tiles);
    let mut pairs = Vec::new();
    let (mut si, mut ti) = (0usize, 0usize);
    for t in tiles {
        match t {
            Tile::Id(_) => {
                pairs.push((End::Src(si), End::Tgt(ti)));
                si += 1;
                ti += 1;
            }
            Tile::Cross(..) => {
                pairs.push((End::Src(si), End::Tgt(ti + 1)));
                pairs.push((End::Src(si + 1), End::Tgt(ti)));
                si += 2;
                ti += 2;
            }
            Tile::Cup(_) => {
                pairs.push((End::Tgt(ti), End::Tgt(ti + 1)));
                ti += 2;
            }
            Tile::Cap(_) => {
                pairs.push((End::Src(si), End::Src(si + 1)));
                si += 2;
            }
        }
    }
    Bordism::new(source, target, pairs, 0).expect("layer matching is well-formed")
}

/// Recomposes a normal form back into a bordism.
pub fn recompose(nf: &NormalForm) -> Result<Bordism> {
    let mut b = Bordism::identity(nf.source.clone());
    for layer in &nf.layers {
        b = compose_bordisms(&b, &layer_to_bordism(layer))?;
    }
    b.circles += nf.circles;
    Ok(b)
}

/// Emits crossing layers realizing the permutation that sends input strand
/// `dest[k]` to output position `k`, by adjacent transpositions.
fn perm_layers(word: &mut Vec<Sign>, dest: &[usize], layers: &mut Vec<Vec<Tile>>) {
    let n = dest.len();
    let mut cur: Vec<usize> = (0..n).collect();
    for k in 0..n {
        let pos = cur.iter().position(|&x| x == dest[k]).expect("dest is a permutation");
        for m in ((k + 1)..=pos).rev() {
            let mut tiles = Vec::with_capacity(n - 1);
            let mut idx = 0;
            while idx < n {
                if idx == m - 1 {
                    tiles.push(Tile::Cross(word[m - 1], word[m]));
                    idx += 2;
                } else {
                    tiles.push(Tile::Id(word[idx]));
                    idx += 1;
                }
            }
            layers.push(tiles);
            word.swap(m - 1, m);
            cur.swap(m - 1, m);
        }
    }
}

/// Factors a bordism into layers of elementary tiles. Both strategies
/// produce a factorization whose recomposition equals the input bordism;
/// they differ in whether caps or cups are peeled off first.
pub fn normal_form(b: &Bordism, strategy: Strategy) -> NormalForm {
    let mut throughs: Vec<(usize, usize)> = Vec::new();
    let mut caps: Vec<(usize, usize)> = Vec::new();
    let mut cups: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in &b.pairs {
        match (x, y) {
            (End::Src(i), End::Tgt(j)) => throughs.push((i, j)),
            (End::Src(i), End::Src(i2)) => caps.push((i, i2)),
            (End::Tgt(j), End::Tgt(j2)) => cups.push((j, j2)),
            (End::Tgt(_), End::Src(_)) => unreachable!("pairs are canonically ordered"),
        }
    }
    throughs.sort();
    caps.sort();
    cups.sort();
    let t = throughs.len();
    let mut layers: Vec<Vec<Tile>> = Vec::new();
    let mut word: Vec<Sign> = b.source.0.clone();

    let cap_tiles = |word: &[Sign], prefix: usize| -> Vec<Tile> {
        let mut tiles: Vec<Tile> = word[..prefix].iter().map(|&s| Tile::Id(s)).collect();
        for c in 0..(word.len() - prefix) / 2 {
            tiles.push(Tile::Cap(word[prefix + 2 * c]));
        }
        tiles
    };
    let cup_tiles = |word: &[Sign], cups: &[(usize, usize)], b: &Bordism| -> Vec<Tile> {
        let mut tiles: Vec<Tile> = word.iter().map(|&s| Tile::Id(s)).collect();
        for &(j, _) in cups {
            tiles.push(Tile::Cup(b.target.0[j]));
        }
        tiles
    };
    // Output position of each strand after the caps and cups are handled:
    // throughs (in source order) first, then the cup points in list order.
    let final_dest = |b: &Bordism| -> Vec<usize> {
        let mut pos_of_target = vec![usize::MAX; b.target.len()];
        for (c, &(_, j)) in throughs.iter().enumerate() {
            pos_of_target[j] = c;
        }
        for (ci, &(j, j2)) in cups.iter().enumerate() {
            pos_of_target[j] = t + 2 * ci;
            pos_of_target[j2] = t + 2 * ci + 1;
        }
        pos_of_target
    };

    match strategy {
        Strategy::CapsFirst => {
            // Sort the source: through strands in front, cap pairs behind.
            let mut dest: Vec<usize> = throughs.iter().map(|&(i, _)| i).collect();
            for &(i, i2) in &caps {
                dest.push(i);
                dest.push(i2);
            }
            perm_layers(&mut word, &dest, &mut layers);
            if !caps.is_empty() {
                layers.push(cap_tiles(&word, t));
                word.truncate(t);
            }
            if !cups.is_empty() {
                layers.push(cup_tiles(&word, &cups, b));
                for &(j, j2) in &cups {
                    word.push(b.target.0[j]);
                    word.push(b.target.0[j2]);
                }
            }
            perm_layers(&mut word, &final_dest(b), &mut layers);
        }
        Strategy::CupsFirst => {
            if !cups.is_empty() {
                layers.push(cup_tiles(&word, &cups, b));
                for &(j, j2) in &cups {
                    word.push(b.target.0[j]);
                    word.push(b.target.0[j2]);
                }
            }
            // Sort: throughs, then the just-created cup points, then caps.
            let n_src = b.source.len();
            let mut dest: Vec<usize> = throughs.iter().map(|&(i, _)| i).collect();
            dest.extend(n_src..n_src + 2 * cups.len());
            for &(i, i2) in &caps {
                dest.push(i);
                dest.push(i2);
            }
            perm_layers(&mut word, &dest, &mut layers);
            if !caps.is_empty() {
                let prefix = t + 2 * cups.len();
                layers.push(cap_tiles(&word, prefix));
                word.truncate(prefix);
            }
            // Word order is now throughs then cup points — same shape as
            // the caps-first branch before the final sort.
            perm_layers(&mut word, &final_dest(b), &mut layers);
        }
    }
    debug_assert_eq!(word, b.target.0, "normal form must end at the target word");
    NormalForm { source: b.source.clone(), layers, circles: b.circles }
}

/// The object a signed word evaluates to: + ↦ x, − ↦ x^∨.
pub fn eval_word(c: &SymMonCategory, d: &DualityDatum, w: &SignedWord) -> ObjId {
    let objs: Vec<ObjId> = w
        .0
        .iter()
        .map(|&s| if s == Sign::Plus { d.x } else { d.x_dual })
        .collect();
    c.tensor_all(&objs)
}

fn obj_of(d: &DualityDatum, s: Sign) -> ObjId {
    if s == Sign::Plus {
        d.x
    } else {
        d.x_dual
    }
}

/// The morphism a tile evaluates to.
pub fn eval_tile(c: &SymMonCategory, d: &DualityDatum, t: Tile) -> Result<MorId> {
    let b = &c.base;
    match t {
        Tile::Id(s) => Ok(b.identity(obj_of(d, s))),
        Tile::Cross(s, u) => Ok(c.sym(obj_of(d, s), obj_of(d, u))),
        // η: 1 → x⊗x^∨, flipped by σ for the other orientation.
        Tile::Cup(Sign::Plus) => Ok(d.coev),
        Tile::Cup(Sign::Minus) => b.compose(c.sym(d.x, d.x_dual), d.coev),
        // ε: x^∨⊗x → 1, flipped by σ for the other orientation.
        Tile::Cap(Sign::Minus) => Ok(d.ev),
        Tile::Cap(Sign::Plus) => b.compose(d.ev, c.sym(d.x, d.x_dual)),
    }
}

/// The circle value δ = ε ∘ σ_{x,x^∨} ∘ η: 1 → 1.
pub fn circle_value(c: &SymMonCategory, d: &DualityDatum) -> Result<MorId> {
    c.base.compose_all(&[d.ev, c.sym(d.x, d.x_dual), d.coev])
}

/// Evaluates a normal form layer by layer.
pub fn eval_normal_form(
    c: &SymMonCategory,
    d: &DualityDatum,
    nf: &NormalForm,
) -> Result<MorId> {
    let mut m = c.base.identity(eval_word(c, d, &nf.source));
    for layer in &nf.layers {
        let tiles: Vec<MorId> =
            layer.iter().map(|&t| eval_tile(c, d, t)).collect::<Result<_>>()?;
        m = c.base.compose(c.tensor_mor_all(&tiles), m)?;
    }
    let delta = circle_value(c, d)?;
    for _ in 0..nf.circles {
        m = c.tensor_mor(delta, m);
    }
    Ok(m)
}

/// Evaluates a bordism in `c` against the duality datum `d`: + ↦ x,
/// − ↦ x^∨, cups/caps ↦ η/ε, crossings ↦ σ, circles ↦ δ.
pub fn eval_bordism(
    c: &SymMonCategory,
    d: &DualityDatum,
    b: &Bordism,
    strategy: Strategy,
) -> Result<MorId> {
    eval_normal_form(c, d, &normal_form(b, strategy))
}

fn shuffle(rng: &mut SplitMix64, v: &mut [usize]) {
    for i in (1..v.len()).rev() {
        let j = rng.below(i + 1);
        v.swap(i, j);
    }
}

/// A random signed word of length ≤ `max_strands`.
pub fn random_word(rng: &mut SplitMix64, max_strands: usize) -> SignedWord {
    let n = rng.below(max_strands + 1);
    SignedWord(
        (0..n)
            .map(|_| if rng.below(2) == 0 { Sign::Plus } else { Sign::Minus })
            .collect(),
    )
}

/// A random bordism with the given source word, at most `max_strands`
/// target points and at most `max_circles` circles.
pub fn random_bordism_from(
    rng: &mut SplitMix64,
    source: &SignedWord,
    max_strands: usize,
    max_circles: u32,
) -> Bordism {
    let mut plus: Vec<usize> = Vec::new();
    let mut minus: Vec<usize> = Vec::new();
    for (i, &s) in source.0.iter().enumerate() {
        if s == Sign::Plus {
            plus.push(i);
        } else {
            minus.push(i);
        }
    }
    shuffle(rng, &mut plus);
    shuffle(rng, &mut minus);
    // Caps pair up some + points with − points; the rest pass through.
    let max_caps = plus.len().min(minus.len());
    // The through strands must fit in the target.
    let min_caps = (source.len().saturating_sub(max_strands) + 1) / 2;
    let k_caps = min_caps + rng.below(max_caps - min_caps + 1);
    let mut pairs: Vec<(End, End)> = (0..k_caps)
        .map(|c| (End::Src(plus[c]), End::Src(minus[c])))
        .collect();
    let mut throughs: Vec<usize> =
        plus[k_caps..].iter().chain(&minus[k_caps..]).copied().collect();
    throughs.sort();
    let t = throughs.len();
    let k_cups = rng.below((max_strands - t) / 2 + 1);
    let n_tgt = t + 2 * k_cups;
    let mut slots: Vec<usize> = (0..n_tgt).collect();
    shuffle(rng, &mut slots);
    let mut target = vec![Sign::Plus; n_tgt];
    for c in 0..k_cups {
        let (j, j2) = (slots[2 * c], slots[2 * c + 1]);
        let s = if rng.below(2) == 0 { Sign::Plus } else { Sign::Minus };
        target[j] = s;
        target[j2] = s.flip();
        pairs.push((End::Tgt(j), End::Tgt(j2)));
    }
    for (idx, &i) in throughs.iter().enumerate() {
        let j = slots[2 * k_cups + idx];
        target[j] = source.0[i];
        pairs.push((End::Src(i), End::Tgt(j)));
    }
    let circles = rng.below(max_circles as usize + 1) as u32;
    Bordism::new(source.clone(), SignedWord(target), pairs, circles)
        .expect("randomly generated matching is well-formed")
}

/// A random bordism between random words.
pub fn random_bordism(rng: &mut SplitMix64, max_strands: usize, max_circles: u32) -> Bordism {
    let source = random_word(rng, max_strands);
    random_bordism_from(rng, &source, max_strands, max_circles)
}
