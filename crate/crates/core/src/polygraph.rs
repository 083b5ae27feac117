//! Polygraphs: systems of generators in which the boundaries of a
//! (k+1)-generator are k-cells of the free category on the generators of
//! dimension at most k.
//!
//! Colimits of polygraphs are computed dimensionwise on generator sets,
//! which the randomized tests cross-check against plain set-level
//! constructions.

use indexmap::{IndexMap, IndexSet};

use crate::freecat::term::Term;
use crate::freecat::{decide_equal, infer_type};
use crate::{Error, Result};

/// A finite polygraph of dimension `dim`. Generator names are unique across
/// all dimensions so that terms can refer to them unambiguously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygraph {
    pub name: String,
    dim: usize,
    gens: Vec<IndexSet<String>>,
    /// `bounds[k]` maps each (k+1)-generator to its source and target terms,
    /// which must denote parallel k-cells over the k-truncation.
    bounds: Vec<IndexMap<String, (Term, Term)>>,
}

impl Polygraph {
    pub fn new(name: &str, dim: usize) -> Polygraph {
        Polygraph {
            name: name.to_string(),
            dim,
            gens: vec![IndexSet::new(); dim + 1],
            bounds: vec![IndexMap::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self, k: usize) -> impl Iterator<Item = &str> {
        self.gens.get(k).into_iter().flatten().map(String::as_str)
    }

    pub fn gen_count(&self, k: usize) -> usize {
        self.gens.get(k).map(IndexSet::len).unwrap_or(0)
    }

    pub fn contains(&self, k: usize, name: &str) -> bool {
        self.gens.get(k).map(|s| s.contains(name)).unwrap_or(false)
    }

    /// The dimension of a generator, if declared.
    pub fn gen_dim(&self, name: &str) -> Option<usize> {
        (0..=self.dim).find(|&k| self.gens[k].contains(name))
    }

    pub fn add_gen0(&mut self, name: &str) -> Result<()> {
        self.check_fresh(name)?;
        self.gens[0].insert(name.to_string());
        Ok(())
    }

    pub fn add_gen(&mut self, k: usize, name: &str, src: Term, tgt: Term) -> Result<()> {
        if k == 0 || k > self.dim {
            return Err(Error::Dimension(format!(
                "generator `{name}` of dimension {k} in a {}-polygraph",
                self.dim
            )));
        }
        self.check_fresh(name)?;
        self.gens[k].insert(name.to_string());
        self.bounds[k - 1].insert(name.to_string(), (src, tgt));
        Ok(())
    }

    fn check_fresh(&self, name: &str) -> Result<()> {
        match self.gen_dim(name) {
            Some(k) => Err(Error::Structure(format!(
                "generator `{name}` already declared in dimension {k}"
            ))),
            None => Ok(()),
        }
    }

    /// The boundary terms of a generator of dimension >= 1.
    pub fn boundary_terms(&self, name: &str) -> Result<(&Term, &Term)> {
        let k = self
            .gen_dim(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        if k == 0 {
            return Err(Error::Dimension(format!("0-generator `{name}` has no boundaries")));
        }
        let (s, t) = &self.bounds[k - 1][name];
        Ok((s, t))
    }

    /// The polygraph with generators of dimension at most `k`.
    pub fn truncate(&self, k: usize) -> Result<Polygraph> {
        if k > self.dim {
            return Err(Error::Dimension(format!(
                "cannot truncate a {}-polygraph to dimension {k}",
                self.dim
            )));
        }
        Ok(Polygraph {
            name: self.name.clone(),
            dim: k,
            gens: self.gens[..=k].to_vec(),
            bounds: self.bounds[..k].to_vec(),
        })
    }

    /// Checks that every boundary term denotes a cell of the right dimension
    /// over the lower-dimensional generators, and that the source and target
    /// of each generator are parallel.
    pub fn validate(&self) -> Result<()> {
        for k in 1..=self.dim {
            let lower = self.truncate(k - 1)?;
            for g in self.gens[k].iter() {
                let (s, t) = &self.bounds[k - 1][g];
                let ts = infer_type(&lower, s)?;
                let tt = infer_type(&lower, t)?;
                if ts.dim != k - 1 || tt.dim != k - 1 {
                    return Err(Error::Dimension(format!(
                        "boundaries of `{g}` have dimensions {} and {}, expected {}",
                        ts.dim,
                        tt.dim,
                        k - 1
                    )));
                }
                if ts.src != tt.src || ts.tgt != tt.tgt {
                    return Err(Error::Structure(format!(
                        "boundaries of `{g}` are not parallel"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for Polygraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "polygraph \"{}\"", self.name)?;
        for k in 0..=self.dim {
            writeln!(f, "dim {k}:")?;
            for g in self.gens[k].iter() {
                if k == 0 {
                    writeln!(f, "  {g}")?;
                } else {
                    let (s, t) = &self.bounds[k - 1][g];
                    writeln!(f, "  {g} : {s} -> {t}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the textual polygraph format:
///
/// ```text
/// polygraph "<name>"
/// dim 0:
///   x
/// dim 1:
///   f : x -> x
/// ```
pub fn parse_polygraph(input: &str) -> Result<Polygraph> {
    use crate::freecat::term::{tokenize, Token};

    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (hline, header) = loop {
        match lines.next() {
            Some((n, l)) if l.trim().is_empty() => {
                let _ = n;
                continue;
            }
            Some((n, l)) => break (n, l.trim()),
            None => {
                return Err(Error::Parse { line: 1, col: 1, msg: "empty input".into() });
            }
        }
    };
    let name = header
        .strip_prefix("polygraph ")
        .map(str::trim)
        .and_then(|q| q.strip_prefix('"'))
        .and_then(|q| q.strip_suffix('"'))
        .ok_or(Error::Parse {
            line: hline,
            col: 1,
            msg: "expected header `polygraph \"<name>\"`".into(),
        })?;

    // The dimension is not declared up front; build with a generous bound
    // and shrink to the highest section seen.
    let mut sections: Vec<Vec<(usize, String)>> = Vec::new();
    let mut current: Option<usize> = None;
    for (n, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("dim ") {
            let rest = rest.trim();
            let digits = rest.strip_suffix(':').ok_or(Error::Parse {
                line: n,
                col: raw.len(),
                msg: "expected `:` after section dimension".into(),
            })?;
            let k: usize = digits.trim().parse().map_err(|_| Error::Parse {
                line: n,
                col: 5,
                msg: format!("invalid dimension `{}`", digits.trim()),
            })?;
            while sections.len() <= k {
                sections.push(Vec::new());
            }
            current = Some(k);
            continue;
        }
        let k = current.ok_or(Error::Parse {
            line: n,
            col: 1,
            msg: "generator outside of a `dim <k>:` section".into(),
        })?;
        sections[k].push((n, raw.to_string()));
    }

    let dim = sections.len().saturating_sub(1);
    let mut pol = Polygraph::new(name, dim);
    for (k, entries) in sections.iter().enumerate() {
        for (n, raw) in entries {
            let tokens = tokenize(raw, *n)?;
            let mut cur = crate::freecat::term::Cursor::new(&tokens, *n);
            let gname = match cur.next() {
                Some(s) => match &s.token {
                    Token::Ident(name) => name.clone(),
                    _ => return Err(cur.error("expected a generator name")),
                },
                None => continue,
            };
            if k == 0 {
                cur.expect_end()?;
                pol.add_gen0(&gname)?;
            } else {
                match cur.next().map(|s| s.token.clone()) {
                    Some(Token::Colon) => {}
                    _ => return Err(cur.error("expected `:` after generator name")),
                }
                let src = cur.term()?;
                match cur.next().map(|s| s.token.clone()) {
                    Some(Token::Arrow) => {}
                    _ => return Err(cur.error("expected `->` between boundaries")),
                }
                let tgt = cur.term()?;
                cur.expect_end()?;
                pol.add_gen(k, &gname, src, tgt)?;
            }
        }
    }
    Ok(pol)
}

/// A morphism of polygraphs: a generator-to-generator map in every
/// dimension.
#[derive(Debug, Clone, Default)]
pub struct PolMorphism {
    pub maps: Vec<IndexMap<String, String>>,
}

impl PolMorphism {
    pub fn apply(&self, k: usize, g: &str) -> Result<&str> {
        self.maps
            .get(k)
            .and_then(|m| m.get(g))
            .map(String::as_str)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }

    /// Renames the generators occurring in a term.
    pub fn map_term(&self, source: &Polygraph, t: &Term) -> Result<Term> {
        Ok(match t {
            Term::Gen(g) => {
                let k = source
                    .gen_dim(g)
                    .ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
                Term::gen(self.apply(k, g)?)
            }
            Term::Id(u) => Term::id(self.map_term(source, u)?),
            Term::Comp(i, l, r) => {
                Term::comp(*i, self.map_term(source, l)?, self.map_term(source, r)?)
            }
        })
    }

    /// Checks that the morphism is total on the generators of `source`,
    /// lands in generators of `target` of the same dimension, and commutes
    /// with boundaries up to cell equality. Boundary cells must live in
    /// dimension <= 2 for the equality to be decidable.
    pub fn validate(&self, source: &Polygraph, target: &Polygraph) -> Result<()> {
        for k in 0..=source.dim() {
            for g in source.gens(k) {
                let h = self.apply(k, g)?;
                if !target.contains(k, h) {
                    return Err(Error::Structure(format!(
                        "`{g}` maps to `{h}`, which is not a {k}-generator of `{}`",
                        target.name
                    )));
                }
                if k >= 1 {
                    let (s, t) = source.boundary_terms(g)?;
                    let (hs, ht) = target.boundary_terms(h)?;
                    let ms = self.map_term(source, s)?;
                    let mt = self.map_term(source, t)?;
                    if !decide_equal(target, &ms, hs)? || !decide_equal(target, &mt, ht)? {
                        return Err(Error::Structure(format!(
                            "boundaries of `{g}` are not preserved by the morphism"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn prefix_term(t: &Term, prefix: &str) -> Term {
    match t {
        Term::Gen(g) => Term::gen(&format!("{prefix}{g}")),
        Term::Id(u) => Term::id(prefix_term(u, prefix)),
        Term::Comp(i, l, r) => Term::comp(*i, prefix_term(l, prefix), prefix_term(r, prefix)),
    }
}

/// The coproduct of two polygraphs, with injections tagging generators by
/// `p.` and `q.`.
pub fn coproduct(p: &Polygraph, q: &Polygraph) -> Result<(Polygraph, PolMorphism, PolMorphism)> {
    let dim = p.dim().max(q.dim());
    let mut out = Polygraph::new(&format!("{}+{}", p.name, q.name), dim);
    let mut inl = PolMorphism { maps: vec![IndexMap::new(); p.dim() + 1] };
    let mut inr = PolMorphism { maps: vec![IndexMap::new(); q.dim() + 1] };
    for k in 0..=dim {
        for g in p.gens(k) {
            let name = format!("p.{g}");
            if k == 0 {
                out.add_gen0(&name)?;
            } else {
                let (s, t) = p.boundary_terms(g)?;
                out.add_gen(k, &name, prefix_term(s, "p."), prefix_term(t, "p."))?;
            }
            inl.maps[k].insert(g.to_string(), name);
        }
        for g in q.gens(k) {
            let name = format!("q.{g}");
            if k == 0 {
                out.add_gen0(&name)?;
            } else {
                let (s, t) = q.boundary_terms(g)?;
                out.add_gen(k, &name, prefix_term(s, "q."), prefix_term(t, "q."))?;
            }
            inr.maps[k].insert(g.to_string(), name);
        }
    }
    Ok((out, inl, inr))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as representative for determinism.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The pushout of `f: r -> p` and `g: r -> q`, computed dimensionwise: the
/// generators in each dimension are the classes of the tagged disjoint union
/// of those of `p` and `q` under `p.f(x) ~ q.g(x)`, named after their least
/// tagged member.
pub fn pushout(
    r: &Polygraph,
    p: &Polygraph,
    q: &Polygraph,
    f: &PolMorphism,
    g: &PolMorphism,
) -> Result<(Polygraph, PolMorphism, PolMorphism)> {
    let dim = p.dim().max(q.dim());
    // Tagged union per dimension, in insertion order: p first, then q.
    let mut tagged: Vec<Vec<(char, String)>> = Vec::new();
    for k in 0..=dim {
        let mut level = Vec::new();
        level.extend(p.gens(k).map(|s| ('p', s.to_string())));
        level.extend(q.gens(k).map(|s| ('q', s.to_string())));
        tagged.push(level);
    }
    let index =
        |level: &[(char, String)], tag: char, name: &str| -> Option<usize> {
            level.iter().position(|(t, n)| *t == tag && n == name)
        };

    // Class names per dimension.
    let mut class_name: Vec<IndexMap<(char, String), String>> = Vec::new();
    let mut inl = PolMorphism { maps: vec![IndexMap::new(); p.dim() + 1] };
    let mut inr = PolMorphism { maps: vec![IndexMap::new(); q.dim() + 1] };
    for k in 0..=dim {
        let level = &tagged[k];
        let mut uf = UnionFind::new(level.len());
        if k <= r.dim() {
            for x in r.gens(k) {
                let fx = f.apply(k, x)?;
                let gx = g.apply(k, x)?;
                let a = index(level, 'p', fx)
                    .ok_or_else(|| Error::UnknownGenerator(fx.to_string()))?;
                let b = index(level, 'q', gx)
                    .ok_or_else(|| Error::UnknownGenerator(gx.to_string()))?;
                uf.union(a, b);
            }
        }
        let mut names = IndexMap::new();
        for (i, (tag, name)) in level.iter().enumerate() {
            let root = uf.find(i);
            let (rt, rn) = &level[root];
            names.insert((*tag, name.clone()), format!("{rt}.{rn}"));
        }
        for (i, (tag, name)) in level.iter().enumerate() {
            let _ = i;
            let cname = names[&(*tag, name.clone())].clone();
            match tag {
                'p' => {
                    inl.maps[k].insert(name.clone(), cname);
                }
                _ => {
                    inr.maps[k].insert(name.clone(), cname);
                }
            }
        }
        class_name.push(names);
    }

    let mut out = Polygraph::new(&format!("{}+_{}{}", p.name, r.name, q.name), dim);
    let mut seen: Vec<IndexSet<String>> = vec![IndexSet::new(); dim + 1];
    for k in 0..=dim {
        for (key, cname) in class_name[k].iter() {
            if !seen[k].insert(cname.clone()) {
                continue;
            }
            if k == 0 {
                out.add_gen0(cname)?;
            } else {
                // Boundary of the class representative, relabeled through
                // the class names of the lower dimension.
                let (tag, name) = key;
                let (side, morph): (&Polygraph, &PolMorphism) =
                    if *tag == 'p' { (p, &inl) } else { (q, &inr) };
                let (s, t) = side.boundary_terms(name)?;
                let ms = morph.map_term(side, s)?;
                let mt = morph.map_term(side, t)?;
                out.add_gen(k, cname, ms, mt)?;
            }
        }
    }
    Ok((out, inl, inr))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_pol() -> Polygraph {
        let mut p = Polygraph::new("loop", 1);
        p.add_gen0("x").unwrap();
        p.add_gen(1, "f", Term::gen("x"), Term::gen("x")).unwrap();
        p
    }

    #[test]
    fn parse_print_round_trip() {
        let text = "polygraph \"loop\"\ndim 0:\n  x\ndim 1:\n  f : x -> x\n";
        let p = parse_polygraph(text).unwrap();
        assert_eq!(p, loop_pol());
        assert_eq!(parse_polygraph(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn parse_reports_positions() {
        match parse_polygraph("polygraph \"p\"\ndim 1:\n  f x -> x\n") {
            Err(Error::Parse { line: 3, .. }) => {}
            other => panic!("expected parse error on line 3, got {other:?}"),
        }
        assert!(parse_polygraph("nonsense").is_err());
    }

    #[test]
    fn duplicate_generator_is_rejected() {
        let mut p = loop_pol();
        assert!(p.add_gen0("f").is_err());
        assert!(p.add_gen(1, "x", Term::gen("x"), Term::gen("x")).is_err());
    }

    #[test]
    fn truncation_drops_upper_generators() {
        let p = loop_pol();
        let t = p.truncate(0).unwrap();
        assert_eq!(t.dim(), 0);
        assert_eq!(t.gen_count(0), 1);
        assert!(p.truncate(2).is_err());
    }

    #[test]
    fn coproduct_tags_generators() {
        let (c, inl, inr) = coproduct(&loop_pol(), &loop_pol()).unwrap();
        assert_eq!(c.gen_count(0), 2);
        assert_eq!(c.gen_count(1), 2);
        assert_eq!(inl.apply(1, "f").unwrap(), "p.f");
        assert_eq!(inr.apply(1, "f").unwrap(), "q.f");
        assert!(c.validate().is_ok());
    }

    #[test]
    fn pushout_glues_along_shared_point() {
        // Glue two loops at their base point: one 0-generator, two
        // 1-generators.
        let mut r = Polygraph::new("pt", 0);
        r.add_gen0("x").unwrap();
        let p = loop_pol();
        let q = loop_pol();
        let f = PolMorphism { maps: vec![[("x".to_string(), "x".to_string())].into()] };
        let g = PolMorphism { maps: vec![[("x".to_string(), "x".to_string())].into()] };
        let (c, inl, inr) = pushout(&r, &p, &q, &f, &g).unwrap();
        assert_eq!(c.gen_count(0), 1);
        assert_eq!(c.gen_count(1), 2);
        assert_eq!(inl.apply(0, "x").unwrap(), inr.apply(0, "x").unwrap());
        assert_ne!(inl.apply(1, "f").unwrap(), inr.apply(1, "f").unwrap());
        assert!(c.validate().is_ok());
    }
}
