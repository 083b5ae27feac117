//! Finite strict n-categories stored as explicit tables, with exhaustive
//! checking of the six axiom families, and the truncation, inclusion and
//! co-inclusion functors between dimensions.
//!
//! Composition is stored as tables rather than closures so that the checker
//! can audit the domain exactly: an entry must be present for every
//! i-composable pair and absent everywhere else.

use std::collections::BTreeMap;

use indexmap::IndexMap;

use crate::globset::{BoundaryCell, Dir, GlobMorphism, GlobularSet};
use crate::{Error, Result};

/// A finite strict n-category: a globular carrier together with identity maps
/// and one composition table per pair `(i, k)` with `i < k <= dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteStrictCat {
    carrier: GlobularSet,
    /// `identity[k]` maps k-cells to their identity (k+1)-cells.
    identity: Vec<IndexMap<String, String>>,
    /// `comp[(i, k)]` is the table of `u o_i v` over k-cells, defined exactly
    /// on i-composable pairs.
    comp: BTreeMap<(usize, usize), IndexMap<(String, String), String>>,
}

/// Axiom labels for violations reported by [`FiniteStrictCat::check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    SI,
    SII,
    SIII,
    SIV,
    SV,
    SVI,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::SI => "(S-i)",
            Axiom::SII => "(S-ii)",
            Axiom::SIII => "(S-iii)",
            Axiom::SIV => "(S-iv)",
            Axiom::SV => "(S-v)",
            Axiom::SVI => "(S-vi)",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witness: String,
}

/// Full report of an exhaustive axiom check. Domain issues (an entry on a
/// non-composable pair, or a missing entry on a composable one) are reported
/// separately from axiom violations.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub domain_errors: Vec<String>,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.domain_errors.is_empty() && self.violations.is_empty()
    }

    pub fn has_violation(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl FiniteStrictCat {
    pub fn new(carrier: GlobularSet) -> Self {
        let dim = carrier.dim();
        FiniteStrictCat { carrier, identity: vec![IndexMap::new(); dim], comp: BTreeMap::new() }
    }

    pub fn carrier(&self) -> &GlobularSet {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn set_identity(&mut self, k: usize, u: &str, id_u: &str) {
        self.identity[k].insert(u.to_string(), id_u.to_string());
    }

    pub fn set_comp(&mut self, i: usize, k: usize, u: &str, v: &str, uv: &str) {
        self.comp
            .entry((i, k))
            .or_default()
            .insert((u.to_string(), v.to_string()), uv.to_string());
    }

    /// The identity (k+1)-cell on a k-cell.
    pub fn identity_of(&self, k: usize, u: &str) -> Result<&str> {
        self.identity
            .get(k)
            .and_then(|m| m.get(u))
            .map(|s| s.as_str())
            .ok_or_else(|| Error::Structure(format!("identity undefined on `{u}` in dimension {k}")))
    }

    /// The iterated identity `1_l(u)` on a k-cell, for `l >= k`.
    pub fn iterated_identity(&self, k: usize, l: usize, u: &str) -> Result<String> {
        if l < k {
            return Err(Error::Dimension(format!("iterated identity from {k} down to {l}")));
        }
        let mut cur = u.to_string();
        for d in k..l {
            cur = self.identity_of(d, &cur)?.to_string();
        }
        Ok(cur)
    }

    /// Table lookup for `u o_i v` over k-cells.
    pub fn compose(&self, i: usize, k: usize, u: &str, v: &str) -> Result<&str> {
        self.comp
            .get(&(i, k))
            .and_then(|t| t.get(&(u.to_string(), v.to_string())))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::Structure(format!("composition o_{i} undefined on `{u}`, `{v}` in dimension {k}"))
            })
    }

    fn composable(&self, i: usize, k: usize, u: &str, v: &str) -> Result<bool> {
        self.carrier.are_composable(i, &[(k, u), (k, v)])
    }

    fn boundary_at(&self, dir: Dir, i: usize, k: usize, u: &str) -> Result<String> {
        match self.carrier.iterated_boundary(dir, i as isize, k, u)? {
            BoundaryCell::Cell(c) => Ok(c),
            BoundaryCell::Star => Err(Error::Dimension("boundary below dimension 0".into())),
        }
    }

    /// Exhaustively verifies the six axiom families over the finite carrier.
    /// The carrier itself is expected to pass `validate_globular`; if it does
    /// not, the structural problems are surfaced as domain errors.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        let glob = self.carrier.validate_globular();
        if !glob.ok() {
            for s in glob.structural {
                report.domain_errors.push(format!("carrier: {s}"));
            }
            for v in glob.violations {
                report.domain_errors.push(format!(
                    "carrier: globularity violation at i={} on `{}`",
                    v.i, v.cell
                ));
            }
            return report;
        }
        let dim = self.dim();

        // Identity maps total and well-boundaried.
        for k in 0..dim {
            for u in self.carrier.cells(k) {
                match self.identity.get(k).and_then(|m| m.get(u)) {
                    None => report
                        .domain_errors
                        .push(format!("identity undefined on `{u}` in dimension {k}")),
                    Some(id_u) if !self.carrier.contains(k + 1, id_u) => report
                        .domain_errors
                        .push(format!("identity of `{u}` is not a declared {}-cell", k + 1)),
                    _ => {}
                }
            }
        }

        // Composition domains: defined exactly on composable pairs.
        for k in 1..=dim {
            for i in 0..k {
                let table = self.comp.get(&(i, k));
                let cells: Vec<_> = self.carrier.cells(k).map(str::to_string).collect();
                for u in &cells {
                    for v in &cells {
                        let composable = self.composable(i, k, u, v).unwrap_or(false);
                        let defined = table
                            .map(|t| t.contains_key(&(u.clone(), v.clone())))
                            .unwrap_or(false);
                        match (composable, defined) {
                            (true, false) => report.domain_errors.push(format!(
                                "o_{i} undefined on {i}-composable pair (`{u}`, `{v}`) in dimension {k}"
                            )),
                            (false, true) => report.domain_errors.push(format!(
                                "o_{i} defined on non-{i}-composable pair (`{u}`, `{v}`) in dimension {k}"
                            )),
                            _ => {}
                        }
                        if defined {
                            let w = table.unwrap().get(&(u.clone(), v.clone())).unwrap();
                            if !self.carrier.contains(k, w) {
                                report.domain_errors.push(format!(
                                    "`{u}` o_{i} `{v}` = `{w}` is not a declared {k}-cell"
                                ));
                            }
                        }
                    }
                }
            }
        }
        if !report.domain_errors.is_empty() {
            return report;
        }

        self.check_s1(&mut report);
        self.check_s2(&mut report);
        self.check_s3(&mut report);
        self.check_s4(&mut report);
        self.check_s5(&mut report);
        self.check_s6(&mut report);
        report
    }

    fn check_s1(&self, report: &mut AxiomReport) {
        for k in 0..self.dim() {
            for u in self.carrier.cells(k) {
                let id_u = self.identity_of(k, u).unwrap();
                let s = self.carrier.boundary(Dir::Src, k + 1, id_u).unwrap();
                let t = self.carrier.boundary(Dir::Tgt, k + 1, id_u).unwrap();
                if s != u || t != u {
                    report.violations.push(AxiomViolation {
                        axiom: Axiom::SI,
                        witness: format!("1({u}) = {id_u} has boundaries ({s}, {t})"),
                    });
                }
            }
        }
    }

    fn check_s2(&self, report: &mut AxiomReport) {
        for (&(i, k), table) in &self.comp {
            for ((u, v), uv) in table {
                for dir in [Dir::Src, Dir::Tgt] {
                    let got = self.carrier.boundary(dir, k, uv).unwrap().to_string();
                    let expected = if i < k - 1 {
                        let bu = self.carrier.boundary(dir, k, u).unwrap();
                        let bv = self.carrier.boundary(dir, k, v).unwrap();
                        match self.compose(i, k - 1, bu, bv) {
                            Ok(w) => w.to_string(),
                            Err(_) => {
                                report.violations.push(AxiomViolation {
                                    axiom: Axiom::SII,
                                    witness: format!(
                                        "boundaries of `{u}` o_{i} `{v}` are not composable"
                                    ),
                                });
                                continue;
                            }
                        }
                    } else {
                        match dir {
                            Dir::Src => self.carrier.boundary(Dir::Src, k, u).unwrap().to_string(),
                            Dir::Tgt => self.carrier.boundary(Dir::Tgt, k, v).unwrap().to_string(),
                        }
                    };
                    if got != expected {
                        report.violations.push(AxiomViolation {
                            axiom: Axiom::SII,
                            witness: format!(
                                "{dir:?} of `{u}` o_{i} `{v}` = `{uv}` is `{got}`, expected `{expected}`"
                            ),
                        });
                    }
                }
            }
        }
    }

    fn check_s3(&self, report: &mut AxiomReport) {
        for k in 1..=self.dim() {
            for i in 0..k {
                for u in self.carrier.cells(k) {
                    let su = self.boundary_at(Dir::Src, i, k, u).unwrap();
                    let tu = self.boundary_at(Dir::Tgt, i, k, u).unwrap();
                    let left_unit = self.iterated_identity(i, k, &su).unwrap();
                    let right_unit = self.iterated_identity(i, k, &tu).unwrap();
                    let left = self.compose(i, k, &left_unit, u);
                    let right = self.compose(i, k, u, &right_unit);
                    if left.map(|w| w != u).unwrap_or(true) {
                        report.violations.push(AxiomViolation {
                            axiom: Axiom::SIII,
                            witness: format!("1({su}) o_{i} `{u}` != `{u}`"),
                        });
                    }
                    if right.map(|w| w != u).unwrap_or(true) {
                        report.violations.push(AxiomViolation {
                            axiom: Axiom::SIII,
                            witness: format!("`{u}` o_{i} 1({tu}) != `{u}`"),
                        });
                    }
                }
            }
        }
    }

    fn check_s4(&self, report: &mut AxiomReport) {
        for (&(i, k), table) in &self.comp {
            for ((u, v), uv) in table {
                for w in self.carrier.cells(k) {
                    if !self.composable(i, k, v, w).unwrap_or(false) {
                        continue;
                    }
                    // a composite with a corrupted boundary may make one of
                    // the bracketings undefined; that is reported as (S-ii)
                    let Ok(vw) = self.compose(i, k, v, w) else { continue };
                    let Ok(lhs) = self.compose(i, k, uv, w) else { continue };
                    let Ok(rhs) = self.compose(i, k, u, vw) else { continue };
                    if lhs != rhs {
                        report.violations.push(AxiomViolation {
                            axiom: Axiom::SIV,
                            witness: format!(
                                "(`{u}` o_{i} `{v}`) o_{i} `{w}` = `{lhs}` but `{u}` o_{i} (`{v}` o_{i} `{w}`) = `{rhs}`"
                            ),
                        });
                    }
                }
            }
        }
    }

    fn check_s5(&self, report: &mut AxiomReport) {
        for (&(i, k), table) in &self.comp {
            if k >= self.dim() {
                continue;
            }
            for ((u, v), uv) in table {
                let id_uv = self.identity_of(k, uv).unwrap();
                let id_u = self.identity_of(k, u).unwrap();
                let id_v = self.identity_of(k, v).unwrap();
                match self.compose(i, k + 1, id_u, id_v) {
                    Ok(rhs) if rhs == id_uv => {}
                    other => {
                        report.violations.push(AxiomViolation {
                            axiom: Axiom::SV,
                            witness: format!(
                                "1(`{u}` o_{i} `{v}`) = `{id_uv}` but 1({u}) o_{i} 1({v}) = {other:?}"
                            ),
                        });
                    }
                }
            }
        }
    }

    fn check_s6(&self, report: &mut AxiomReport) {
        for k in 2..=self.dim() {
            let cells: Vec<_> = self.carrier.cells(k).map(str::to_string).collect();
            for j in 1..k {
                // All j-composable pairs in dimension k.
                let mut jpairs = Vec::new();
                for u in &cells {
                    for v in &cells {
                        if self.composable(j, k, u, v).unwrap_or(false) {
                            jpairs.push((u.clone(), v.clone()));
                        }
                    }
                }
                for i in 0..j {
                    for (u, up) in &jpairs {
                        for (v, vp) in &jpairs {
                            if !self.composable(i, k, u, v).unwrap_or(false) {
                                continue;
                            }
                            let uv = self.compose(i, k, u, v).unwrap().to_string();
                            let upvp = self.compose(i, k, up, vp).unwrap().to_string();
                            let uup = self.compose(j, k, u, up).unwrap().to_string();
                            let vvp = self.compose(j, k, v, vp).unwrap().to_string();
                            let lhs = self.compose(j, k, &uv, &upvp).unwrap();
                            let rhs = self.compose(i, k, &uup, &vvp).unwrap();
                            if lhs != rhs {
                                report.violations.push(AxiomViolation {
                                    axiom: Axiom::SVI,
                                    witness: format!(
                                        "exchange fails at i={i}, j={j} on (`{u}`, `{v}`, `{up}`, `{vp}`)"
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    /// The underlying strict k-category: carrier, identities and tables
    /// restricted to dimensions <= k.
    pub fn truncate(&self, k: usize) -> Result<FiniteStrictCat> {
        if k > self.dim() {
            return Err(Error::Dimension(format!(
                "cannot truncate a strict {}-category to dimension {k}",
                self.dim()
            )));
        }
        let mut out = FiniteStrictCat::new(self.carrier.truncate(k)?);
        out.identity = self.identity[..k].to_vec();
        out.comp = self
            .comp
            .iter()
            .filter(|((_, m), _)| *m <= k)
            .map(|(key, t)| (*key, t.clone()))
            .collect();
        Ok(out)
    }

    /// The l-inclusion of a strict k-category: higher cells are the k-cells
    /// themselves, boundaries and identities above k are the identity, and
    /// composition at `i >= k` returns the common value of the (necessarily
    /// equal) operands.
    pub fn include(&self, l: usize) -> Result<FiniteStrictCat> {
        let k = self.dim();
        if l < k {
            return Err(Error::Dimension(format!(
                "cannot include a strict {k}-category into dimension {l}"
            )));
        }
        let mut carrier = self.carrier.include(l)?;
        let top: Vec<_> = self.carrier.cells(k).map(str::to_string).collect();
        for m in (k + 1)..=l {
            for u in &top {
                carrier.add_cell(m, u, u, u)?;
            }
        }
        let mut out = FiniteStrictCat::new(carrier);
        out.identity = self.identity.clone();
        out.identity.resize(l, IndexMap::new());
        for m in k..l {
            for u in &top {
                out.identity[m].insert(u.clone(), u.clone());
            }
        }
        out.comp = self.comp.clone();
        for m in (k + 1)..=l {
            for i in 0..m.min(k) {
                let table = self.comp.get(&(i, k)).cloned().unwrap_or_default();
                out.comp.insert((i, m), table);
            }
            for i in k..m {
                let mut table = IndexMap::new();
                for u in &top {
                    table.insert((u.clone(), u.clone()), u.clone());
                }
                out.comp.insert((i, m), table);
            }
        }
        Ok(out)
    }

    /// The right adjoint to truncation: above the original dimension, cells
    /// are pairs of parallel k-cells composed componentwise below k and by
    /// projection (`(u, v) o_i (u', v') = (u, v')`) at `i >= k`.
    pub fn coinclude(&self, l: usize) -> Result<FiniteStrictCat> {
        let k = self.dim();
        if l < k {
            return Err(Error::Dimension(format!(
                "cannot co-include a strict {k}-category into dimension {l}"
            )));
        }
        let carrier = self.carrier.coinclude(l)?;
        let top: Vec<_> = self.carrier.cells(k).map(str::to_string).collect();
        let mut pairs: Vec<(String, String)> = Vec::new();
        for u in &top {
            for v in &top {
                if self.carrier.are_parallel(k, u, v)? {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        let mut out = FiniteStrictCat::new(carrier);
        out.identity = self.identity.clone();
        out.identity.resize(l, IndexMap::new());
        if l > k {
            for u in &top {
                out.identity[k].insert(u.clone(), GlobularSet::pair_name(u, u));
            }
            for m in (k + 1)..l {
                for (u, v) in &pairs {
                    let name = GlobularSet::pair_name(u, v);
                    out.identity[m].insert(name.clone(), name);
                }
            }
        }
        out.comp = self.comp.clone();
        for m in (k + 1)..=l {
            for i in 0..k.min(m) {
                let mut table = IndexMap::new();
                for (u, v) in &pairs {
                    for (up, vp) in &pairs {
                        // i-composable in the co-inclusion iff componentwise.
                        if self.composable(i, k, u, up)? && self.composable(i, k, v, vp)? {
                            let cu = self.compose(i, k, u, up)?.to_string();
                            let cv = self.compose(i, k, v, vp)?.to_string();
                            table.insert(
                                (GlobularSet::pair_name(u, v), GlobularSet::pair_name(up, vp)),
                                GlobularSet::pair_name(&cu, &cv),
                            );
                        }
                    }
                }
                out.comp.insert((i, m), table);
            }
            for i in k..m {
                let mut table = IndexMap::new();
                for (u, v) in &pairs {
                    for (up, vp) in &pairs {
                        let composable = if i == k { v == up } else { (u, v) == (up, vp) };
                        if composable {
                            table.insert(
                                (GlobularSet::pair_name(u, v), GlobularSet::pair_name(up, vp)),
                                GlobularSet::pair_name(u, vp),
                            );
                        }
                    }
                }
                out.comp.insert((i, m), table);
            }
        }
        Ok(out)
    }
}

/// An n-functor candidate: a globular morphism whose preservation of
/// identities and composites is verified by [`check_functor`].
pub type NFunctor = GlobMorphism;

/// Report of a functoriality check.
#[derive(Debug, Clone, Default)]
pub struct FunctorReport {
    pub structural: Vec<String>,
    pub violations: Vec<String>,
}

impl FunctorReport {
    pub fn ok(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }
}

/// Checks that `f` is an n-functor from `c` to `d`: its carriers are theirs,
/// it is a valid globular morphism, and it preserves identities and every
/// defined composite.
pub fn check_functor(f: &NFunctor, c: &FiniteStrictCat, d: &FiniteStrictCat) -> FunctorReport {
    let mut report = FunctorReport::default();
    if f.source != *c.carrier() || f.target != *d.carrier() {
        report.structural.push("functor carriers do not match the given categories".into());
        return report;
    }
    if let Err(e) = f.validate() {
        report.structural.push(e.to_string());
        return report;
    }
    for k in 0..c.dim() {
        for u in c.carrier().cells(k) {
            let lhs = f.apply(k + 1, c.identity_of(k, u).unwrap()).unwrap();
            let rhs = d.identity_of(k, f.apply(k, u).unwrap()).unwrap();
            if lhs != rhs {
                report.violations.push(format!("identity of `{u}` is not preserved"));
            }
        }
    }
    for (&(i, k), table) in &c.comp {
        for ((u, v), uv) in table {
            let lhs = f.apply(k, uv).unwrap();
            match d.compose(i, k, f.apply(k, u).unwrap(), f.apply(k, v).unwrap()) {
                Ok(rhs) if rhs == lhs => {}
                _ => report
                    .violations
                    .push(format!("composite `{u}` o_{i} `{v}` is not preserved")),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn terminal_categories_pass() {
        for n in 0..=3 {
            let c = corpus::terminal(n);
            assert!(c.check_axioms().ok(), "terminal {n}-category fails");
        }
    }

    #[test]
    fn z2_monoid_passes() {
        let c = corpus::z2_monoid();
        assert!(c.check_axioms().ok());
    }

    #[test]
    fn corrupted_associativity_is_reported() {
        // In Z/3, corrupting 1 + 1 to 1 breaks (1+1)+2 = 1+(1+2).
        let mut c = corpus::z3_monoid();
        c.set_comp(0, 1, "one", "one", "one");
        let report = c.check_axioms();
        assert!(report.has_violation(Axiom::SIV));
    }

    #[test]
    fn comp_on_non_composable_pair_is_domain_error() {
        let mut c = corpus::walking_arrow();
        c.set_comp(0, 1, "a", "a", "a");
        let report = c.check_axioms();
        assert!(!report.domain_errors.is_empty());
    }

    #[test]
    fn truncation_and_inclusion_round_trip() {
        let c = corpus::z2_monoid();
        assert_eq!(c.truncate(1).unwrap(), c);
        let inc = c.include(3).unwrap();
        assert!(inc.check_axioms().ok());
        assert_eq!(inc.truncate(1).unwrap(), c);
        assert_eq!(c.include(1).unwrap(), c);
        let t0 = c.truncate(0).unwrap();
        assert_eq!(t0.dim(), 0);
        assert_eq!(t0.carrier().cell_count(0), 1);
    }

    #[test]
    fn inclusion_composes_at_high_index_by_projection() {
        let c = corpus::z2_monoid();
        let inc = c.include(2).unwrap();
        assert_eq!(inc.compose(1, 2, "one", "one").unwrap(), "one");
        assert!(inc.compose(1, 2, "one", "zero").is_err());
    }

    #[test]
    fn coinclusion_matches_parallel_pairs_and_axioms() {
        let c = corpus::z2_monoid();
        let co = c.coinclude(2).unwrap();
        // zero and one are parallel endo-cells: 4 pairs.
        assert_eq!(co.carrier().cell_count(2), 4);
        assert!(co.check_axioms().ok());
        assert_eq!(co.truncate(1).unwrap(), c);
        // Case split at i >= k: (u,v) o_1 (v,v') = (u,v').
        assert_eq!(co.compose(1, 2, "(zero,one)", "(one,zero)").unwrap(), "(zero,zero)");
        // Componentwise below k.
        assert_eq!(co.compose(0, 2, "(zero,one)", "(one,one)").unwrap(), "(one,zero)");
        assert_eq!(co.identity_of(1, "zero").unwrap(), "(zero,zero)");
    }

    #[test]
    fn coinclusion_to_dim3_passes_axioms() {
        let c = corpus::walking_arrow();
        let co = c.coinclude(3).unwrap();
        assert!(co.check_axioms().ok());
        // Parallel pairs of 1-cells: identities are parallel to themselves,
        // and `a` only to itself.
        assert_eq!(co.carrier().cell_count(2), 3);
        assert_eq!(co.carrier().cell_count(3), 3);
    }

    #[test]
    fn identity_functor_checks() {
        let c = corpus::z2_monoid();
        let f = GlobMorphism::identity(c.carrier());
        assert!(check_functor(&f, &c, &c).ok());
    }

    #[test]
    fn counit_style_functor_checks() {
        // include(truncate(C, 0), 1) -> C maps each object to its identity.
        let c = corpus::z2_monoid();
        let base = c.truncate(0).unwrap().include(1).unwrap();
        let mut f = GlobMorphism::identity(base.carrier());
        f.target = c.carrier().clone();
        f.maps[1].clear();
        f.maps[1].insert("x".into(), c.identity_of(0, "x").unwrap().to_string());
        assert!(check_functor(&f, &base, &c).ok());
    }

    #[test]
    fn broken_functor_is_reported() {
        // Fixing one and zero but collapsing two onto one is not a
        // homomorphism of Z/3: f(1) + f(1) = 2 but f(1 + 1) = 1.
        let c = corpus::z3_monoid();
        let mut f = GlobMorphism::identity(c.carrier());
        f.maps[1].insert("two".into(), "one".into());
        let report = check_functor(&f, &c, &c);
        assert!(!report.ok());
    }
}
