//! Finite globular sets and the three boundary-changing functors between
//! dimensions: truncation, inclusion (left adjoint) and co-inclusion (right
//! adjoint, built from parallel pairs).

use indexmap::{IndexMap, IndexSet};

use crate::{Error, Result};

/// Direction of a boundary: source or target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Src,
    Tgt,
}

/// A boundary value: either an actual cell or the conventional singleton
/// `(-1)`-boundary. The sentinel is never stored in carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundaryCell {
    Star,
    Cell(String),
}

impl std::fmt::Display for BoundaryCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryCell::Star => write!(f, "*"),
            BoundaryCell::Cell(c) => write!(f, "{c}"),
        }
    }
}

/// A finite n-globular set: one finite ordered set of cell identifiers per
/// dimension, with total source and target maps one dimension down.
///
/// Identifiers are unique within a dimension; reuse across dimensions is
/// permitted. Iteration order is insertion order, so every enumeration over a
/// globular set is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobularSet {
    dim: usize,
    cells: Vec<IndexSet<String>>,
    src: Vec<IndexMap<String, String>>,
    tgt: Vec<IndexMap<String, String>>,
}

/// A single failed globularity equation, naming the dimension index and cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobViolation {
    /// The `i` of the failed equation over cells of dimension `i + 2`.
    pub i: usize,
    pub cell: String,
    pub dir: Dir,
}

/// Result of [`GlobularSet::validate_globular`].
#[derive(Debug, Clone, Default)]
pub struct GlobReport {
    pub structural: Vec<String>,
    pub violations: Vec<GlobViolation>,
}

impl GlobReport {
    pub fn ok(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }
}

impl GlobularSet {
    pub fn new(dim: usize) -> Self {
        GlobularSet {
            dim,
            cells: vec![IndexSet::new(); dim + 1],
            src: vec![IndexMap::new(); dim],
            tgt: vec![IndexMap::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self, k: usize) -> impl Iterator<Item = &str> {
        self.cells[k].iter().map(|s| s.as_str())
    }

    pub fn cell_count(&self, k: usize) -> usize {
        self.cells[k].len()
    }

    pub fn contains(&self, k: usize, name: &str) -> bool {
        k <= self.dim && self.cells[k].contains(name)
    }

    /// Adds a 0-cell.
    pub fn add_cell0(&mut self, name: &str) -> Result<()> {
        self.insert(0, name)
    }

    /// Adds a k-cell (k >= 1) with the given source and target in dimension
    /// `k - 1`. Boundaries need not be declared yet; totality is audited by
    /// [`GlobularSet::validate_globular`].
    pub fn add_cell(&mut self, k: usize, name: &str, src: &str, tgt: &str) -> Result<()> {
        if k == 0 || k > self.dim {
            return Err(Error::Dimension(format!(
                "cannot add `{name}` at dimension {k} in a {}-globular set",
                self.dim
            )));
        }
        self.insert(k, name)?;
        self.src[k - 1].insert(name.to_string(), src.to_string());
        self.tgt[k - 1].insert(name.to_string(), tgt.to_string());
        Ok(())
    }

    fn insert(&mut self, k: usize, name: &str) -> Result<()> {
        if k > self.dim {
            return Err(Error::Dimension(format!(
                "dimension {k} exceeds {}",
                self.dim
            )));
        }
        if !self.cells[k].insert(name.to_string()) {
            return Err(Error::Structure(format!(
                "duplicate cell `{name}` in dimension {k}"
            )));
        }
        Ok(())
    }

    /// One-step boundary of a (k)-cell, landing in dimension `k - 1`.
    pub fn boundary(&self, dir: Dir, k: usize, u: &str) -> Result<&str> {
        if k == 0 || k > self.dim {
            return Err(Error::Dimension(format!("no boundary maps at dimension {k}")));
        }
        if !self.cells[k].contains(u) {
            return Err(Error::UnknownCell { dim: k, name: u.to_string() });
        }
        let table = match dir {
            Dir::Src => &self.src[k - 1],
            Dir::Tgt => &self.tgt[k - 1],
        };
        table.get(u).map(|s| s.as_str()).ok_or_else(|| {
            Error::Structure(format!("boundary map undefined on `{u}` in dimension {k}"))
        })
    }

    /// Iterated boundary of a k-cell down to dimension `i`. With `i == k` this
    /// is the cell itself; with `i == -1` it is the conventional singleton
    /// boundary.
    pub fn iterated_boundary(&self, dir: Dir, i: isize, k: usize, u: &str) -> Result<BoundaryCell> {
        if !self.contains(k, u) {
            return Err(Error::UnknownCell { dim: k, name: u.to_string() });
        }
        if i > k as isize {
            return Err(Error::Dimension(format!(
                "iterated boundary at {i} of a {k}-cell"
            )));
        }
        if i < -1 {
            return Err(Error::Dimension(format!("boundary dimension {i}")));
        }
        if i == -1 {
            return Ok(BoundaryCell::Star);
        }
        let mut cur = u.to_string();
        let mut d = k;
        while d as isize > i {
            cur = self.boundary(dir, d, &cur)?.to_string();
            d -= 1;
        }
        Ok(BoundaryCell::Cell(cur))
    }

    /// Whether a sequence of k-cells is i-composable: the iterated target of
    /// each cell at dimension `i` equals the iterated source of the next.
    pub fn are_composable(&self, i: usize, cells: &[(usize, &str)]) -> Result<bool> {
        for &(k, u) in cells {
            if k <= i {
                return Err(Error::Dimension(format!(
                    "cell `{u}` of dimension {k} cannot be {i}-composed"
                )));
            }
        }
        for pair in cells.windows(2) {
            let (ka, a) = pair[0];
            let (kb, b) = pair[1];
            let ta = self.iterated_boundary(Dir::Tgt, i as isize, ka, a)?;
            let sb = self.iterated_boundary(Dir::Src, i as isize, kb, b)?;
            if ta != sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether two k-cells are parallel: `k == 0`, or their sources and
    /// targets agree.
    pub fn are_parallel(&self, k: usize, u: &str, v: &str) -> Result<bool> {
        if !self.contains(k, u) {
            return Err(Error::UnknownCell { dim: k, name: u.to_string() });
        }
        if !self.contains(k, v) {
            return Err(Error::UnknownCell { dim: k, name: v.to_string() });
        }
        if k == 0 {
            return Ok(true);
        }
        Ok(self.boundary(Dir::Src, k, u)? == self.boundary(Dir::Src, k, v)?
            && self.boundary(Dir::Tgt, k, u)? == self.boundary(Dir::Tgt, k, v)?)
    }

    /// Checks totality of the boundary maps and the two globularity equations
    /// at every dimension.
    pub fn validate_globular(&self) -> GlobReport {
        let mut report = GlobReport::default();
        for k in 1..=self.dim {
            for u in &self.cells[k] {
                for (dir, table) in [(Dir::Src, &self.src[k - 1]), (Dir::Tgt, &self.tgt[k - 1])] {
                    match table.get(u) {
                        None => report.structural.push(format!(
                            "boundary map undefined on `{u}` in dimension {k}"
                        )),
                        Some(b) if !self.cells[k - 1].contains(b) => report.structural.push(
                            format!(
                                "{dir:?} of `{u}` is `{b}`, which is not a declared {}-cell",
                                k - 1
                            ),
                        ),
                        _ => {}
                    }
                }
            }
        }
        if !report.structural.is_empty() {
            return report;
        }
        for i in 0..self.dim.saturating_sub(1) {
            for u in &self.cells[i + 2] {
                for dir in [Dir::Src, Dir::Tgt] {
                    let of_src = self
                        .boundary(dir, i + 1, self.boundary(Dir::Src, i + 2, u).unwrap())
                        .unwrap();
                    let of_tgt = self
                        .boundary(dir, i + 1, self.boundary(Dir::Tgt, i + 2, u).unwrap())
                        .unwrap();
                    if of_src != of_tgt {
                        report.violations.push(GlobViolation { i, cell: u.clone(), dir });
                    }
                }
            }
        }
        report
    }

    /// The m-truncation: identical carriers and maps up to dimension `m`.
    pub fn truncate(&self, m: usize) -> Result<GlobularSet> {
        if m > self.dim {
            return Err(Error::Dimension(format!(
                "cannot truncate a {}-globular set to dimension {m}",
                self.dim
            )));
        }
        Ok(GlobularSet {
            dim: m,
            cells: self.cells[..=m].to_vec(),
            src: self.src[..m.min(self.src.len())].to_vec(),
            tgt: self.tgt[..m.min(self.tgt.len())].to_vec(),
        })
    }

    /// The n-inclusion: the same set up to its own dimension, empty above.
    pub fn include(&self, n: usize) -> Result<GlobularSet> {
        if n < self.dim {
            return Err(Error::Dimension(format!(
                "cannot include a {}-globular set into dimension {n}",
                self.dim
            )));
        }
        let mut out = self.clone();
        out.dim = n;
        out.cells.resize(n + 1, IndexSet::new());
        out.src.resize(n, IndexMap::new());
        out.tgt.resize(n, IndexMap::new());
        Ok(out)
    }

    /// The counit morphism `include(truncate(X, m), dim) -> X` of the
    /// inclusion/truncation adjunction: identity up to dimension `m`, vacuous
    /// above.
    pub fn counit(&self, m: usize) -> Result<GlobMorphism> {
        let source = self.truncate(m)?.include(self.dim)?;
        let mut maps = vec![IndexMap::new(); self.dim + 1];
        for (k, map) in maps.iter_mut().enumerate().take(m + 1) {
            for u in &source.cells[k] {
                map.insert(u.clone(), u.clone());
            }
        }
        Ok(GlobMorphism { source, target: self.clone(), maps })
    }

    /// The name used for the pair `(u, v)` in a co-inclusion carrier.
    pub fn pair_name(u: &str, v: &str) -> String {
        format!("({u},{v})")
    }

    /// The n-co-inclusion (right adjoint to truncation): above the original
    /// dimension `m`, cells are ordered pairs of parallel m-cells, with the
    /// m-boundaries of `(u, v)` being `u` and `v` and all intermediate
    /// boundaries the pair itself.
    pub fn coinclude(&self, n: usize) -> Result<GlobularSet> {
        if n < self.dim {
            return Err(Error::Dimension(format!(
                "cannot co-include a {}-globular set into dimension {n}",
                self.dim
            )));
        }
        let m = self.dim;
        let mut out = self.include(n)?;
        let mut pairs: Vec<(String, String)> = Vec::new();
        for u in &self.cells[m] {
            for v in &self.cells[m] {
                if self.are_parallel(m, u, v)? {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        for i in (m + 1)..=n {
            for (u, v) in &pairs {
                let name = Self::pair_name(u, v);
                let (src, tgt) = if i == m + 1 {
                    (u.clone(), v.clone())
                } else {
                    (name.clone(), name.clone())
                };
                out.add_cell(i, &name, &src, &tgt)?;
            }
        }
        Ok(out)
    }
}

/// A morphism of globular sets: one total map per dimension, commuting with
/// sources and targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobMorphism {
    pub source: GlobularSet,
    pub target: GlobularSet,
    /// `maps[k]` sends (a subset of) `source.cells(k)` to `target.cells(k)`.
    /// Totality is part of validation except for vacuous dimensions.
    pub maps: Vec<IndexMap<String, String>>,
}

impl GlobMorphism {
    pub fn identity(x: &GlobularSet) -> GlobMorphism {
        let mut maps = vec![IndexMap::new(); x.dim + 1];
        for k in 0..=x.dim {
            for u in &x.cells[k] {
                maps[k].insert(u.clone(), u.clone());
            }
        }
        GlobMorphism { source: x.clone(), target: x.clone(), maps }
    }

    pub fn apply(&self, k: usize, u: &str) -> Result<&str> {
        self.maps
            .get(k)
            .and_then(|m| m.get(u))
            .map(|s| s.as_str())
            .ok_or_else(|| Error::Structure(format!("morphism undefined on `{u}` in dimension {k}")))
    }

    /// Checks totality and commutation with source and target maps.
    pub fn validate(&self) -> Result<()> {
        if self.source.dim != self.target.dim {
            return Err(Error::Dimension(
                "globular morphism between sets of different dimensions".into(),
            ));
        }
        for k in 0..=self.source.dim {
            for u in &self.source.cells[k] {
                let fu = self.apply(k, u)?;
                if !self.target.contains(k, fu) {
                    return Err(Error::UnknownCell { dim: k, name: fu.to_string() });
                }
                if k > 0 {
                    for dir in [Dir::Src, Dir::Tgt] {
                        let lhs = self.apply(k - 1, self.source.boundary(dir, k, u)?)?;
                        let rhs = self.target.boundary(dir, k, fu)?;
                        if lhs != rhs {
                            return Err(Error::Structure(format!(
                                "morphism does not commute with {dir:?} on `{u}`"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
