//! Essentially algebraic theories: multi-sorted signatures in which some
//! operations are partial, with equational definedness conditions, plus
//! finite-model checking, theory morphisms and reducts.
//!
//! Terms use positional variables `x1, x2, ...` typed by a context of sorts.
//! Evaluation is strict: a term is undefined as soon as one of its subterms
//! is, and equations are only required to hold where both sides are defined.
//! A partial operation must be defined on exactly the tuples satisfying its
//! definedness equations.

use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::{Error, Result};

/// A term over a context of sorts. `Var(i)` is the i-th context entry,
/// 0-based internally and displayed as `x{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermE {
    Var(usize),
    App(String, Vec<TermE>),
}

impl TermE {
    pub fn var(i: usize) -> TermE {
        TermE::Var(i)
    }

    pub fn app(op: &str, args: Vec<TermE>) -> TermE {
        TermE::App(op.to_string(), args)
    }
}

impl fmt::Display for TermE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermE::Var(i) => write!(f, "x{}", i + 1),
            TermE::App(op, args) => {
                write!(f, "{op}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An equation in an explicit context of sorts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub ctx: Vec<String>,
    pub lhs: TermE,
    pub rhs: TermE,
}

/// An operation: argument sorts, result sort, and whether it is total.
/// Partial operations carry their definedness equations in
/// [`Theory::defs`], in the context of their own arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpDecl {
    pub args: Vec<String>,
    pub result: String,
    pub total: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    pub name: String,
    pub sorts: IndexSet<String>,
    pub ops: IndexMap<String, OpDecl>,
    pub equations: Vec<Equation>,
    pub defs: IndexMap<String, Vec<Equation>>,
}

impl Theory {
    pub fn new(name: &str) -> Theory {
        Theory {
            name: name.to_string(),
            sorts: IndexSet::new(),
            ops: IndexMap::new(),
            equations: Vec::new(),
            defs: IndexMap::new(),
        }
    }

    /// The sort of a term in a context, checking well-sortedness.
    pub fn sort_of(&self, ctx: &[String], t: &TermE) -> Result<String> {
        match t {
            TermE::Var(i) => ctx
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::Structure(format!("variable x{} outside context", i + 1))),
            TermE::App(op, args) => {
                let decl = self
                    .ops
                    .get(op)
                    .ok_or_else(|| Error::Structure(format!("unknown operation `{op}`")))?;
                if decl.args.len() != args.len() {
                    return Err(Error::Structure(format!(
                        "`{op}` expects {} arguments, got {}",
                        decl.args.len(),
                        args.len()
                    )));
                }
                for (expected, a) in decl.args.iter().zip(args) {
                    let got = self.sort_of(ctx, a)?;
                    if got != *expected {
                        return Err(Error::Structure(format!(
                            "argument of `{op}` has sort `{got}`, expected `{expected}`"
                        )));
                    }
                }
                Ok(decl.result.clone())
            }
        }
    }

    /// Structural well-formedness: sorts of operations and equations exist,
    /// equations are well-sorted with equal sorts on both sides, and
    /// definedness conditions are attached to exactly the partial
    /// operations, in the context of their arguments.
    pub fn check(&self) -> Result<()> {
        for (op, decl) in &self.ops {
            for s in decl.args.iter().chain([&decl.result]) {
                if !self.sorts.contains(s) {
                    return Err(Error::Structure(format!(
                        "operation `{op}` uses undeclared sort `{s}`"
                    )));
                }
            }
        }
        for eq in &self.equations {
            for s in &eq.ctx {
                if !self.sorts.contains(s) {
                    return Err(Error::Structure(format!("equation uses undeclared sort `{s}`")));
                }
            }
            let ls = self.sort_of(&eq.ctx, &eq.lhs)?;
            let rs = self.sort_of(&eq.ctx, &eq.rhs)?;
            if ls != rs {
                return Err(Error::Structure(format!(
                    "equation `{} = {}` relates sorts `{ls}` and `{rs}`",
                    eq.lhs, eq.rhs
                )));
            }
        }
        for (op, decl) in &self.ops {
            match (decl.total, self.defs.get(op)) {
                (true, Some(d)) if !d.is_empty() => {
                    return Err(Error::Structure(format!(
                        "total operation `{op}` has definedness conditions"
                    )));
                }
                (false, None) => {
                    return Err(Error::Structure(format!(
                        "partial operation `{op}` has no definedness conditions"
                    )));
                }
                (false, Some(conds)) => {
                    for eq in conds {
                        if eq.ctx != decl.args {
                            return Err(Error::Structure(format!(
                                "definedness condition of `{op}` is not in its argument context"
                            )));
                        }
                        let ls = self.sort_of(&eq.ctx, &eq.lhs)?;
                        let rs = self.sort_of(&eq.ctx, &eq.rhs)?;
                        if ls != rs {
                            return Err(Error::Structure(format!(
                                "definedness condition of `{op}` relates sorts `{ls}` and `{rs}`"
                            )));
                        }
                    }
                }
                _ => {}
            }
        }
        for (op, _) in &self.defs {
            if !self.ops.contains_key(op) {
                return Err(Error::Structure(format!(
                    "definedness conditions for unknown operation `{op}`"
                )));
            }
        }
        Ok(())
    }
}

/// A finite model: a finite carrier per sort and one table per operation.
/// Tables of partial operations simply omit the undefined tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    pub name: String,
    pub carriers: IndexMap<String, IndexSet<String>>,
    pub tables: IndexMap<String, IndexMap<Vec<String>, String>>,
}

impl FiniteModel {
    pub fn new(name: &str) -> FiniteModel {
        FiniteModel { name: name.to_string(), carriers: IndexMap::new(), tables: IndexMap::new() }
    }
}

/// Strict partial evaluation of a term under an environment. `Ok(None)`
/// means the term is undefined; ill-sorted environments are structural
/// errors, not undefinedness.
pub fn eval_term(
    theory: &Theory,
    model: &FiniteModel,
    ctx: &[String],
    env: &[String],
    t: &TermE,
) -> Result<Option<String>> {
    if env.len() != ctx.len() {
        return Err(Error::Structure("environment does not match the context".into()));
    }
    for (s, v) in ctx.iter().zip(env) {
        let carrier = model
            .carriers
            .get(s)
            .ok_or_else(|| Error::Structure(format!("model has no carrier for sort `{s}`")))?;
        if !carrier.contains(v) {
            return Err(Error::Structure(format!("`{v}` is not an element of sort `{s}`")));
        }
    }
    eval_term_unchecked(theory, model, env, t)
}

fn eval_term_unchecked(
    theory: &Theory,
    model: &FiniteModel,
    env: &[String],
    t: &TermE,
) -> Result<Option<String>> {
    match t {
        TermE::Var(i) => Ok(Some(
            env.get(*i)
                .ok_or_else(|| Error::Structure(format!("variable x{} outside context", i + 1)))?
                .clone(),
        )),
        TermE::App(op, args) => {
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                match eval_term_unchecked(theory, model, env, a)? {
                    Some(v) => vals.push(v),
                    None => return Ok(None),
                }
            }
            let _ = theory;
            // A missing table means the operation is defined nowhere.
            Ok(model.tables.get(op).and_then(|t| t.get(&vals)).cloned())
        }
    }
}

/// Result of checking a finite model against a theory.
#[derive(Debug, Clone, Default)]
pub struct ModelReport {
    pub structural: Vec<String>,
    /// Violated equations of the theory, by displayed form and environment.
    pub violations: Vec<String>,
}

impl ModelReport {
    pub fn ok(&self) -> bool {
        self.structural.is_empty() && self.violations.is_empty()
    }
}

fn environments(
    model: &FiniteModel,
    ctx: &[String],
) -> Result<Vec<Vec<String>>> {
    let mut envs = vec![Vec::new()];
    for s in ctx {
        let carrier = model
            .carriers
            .get(s)
            .ok_or_else(|| Error::Structure(format!("model has no carrier for sort `{s}`")))?;
        let mut next = Vec::new();
        for env in &envs {
            for v in carrier {
                let mut e = env.clone();
                e.push(v.clone());
                next.push(e);
            }
        }
        envs = next;
    }
    Ok(envs)
}

/// Exhaustively checks a finite model: table sorts, totality, the
/// definedness locus of every partial operation, and all equations.
pub fn check_model(theory: &Theory, model: &FiniteModel) -> Result<ModelReport> {
    theory.check()?;
    let mut report = ModelReport::default();
    for s in &theory.sorts {
        if !model.carriers.contains_key(s) {
            report.structural.push(format!("missing carrier for sort `{s}`"));
        }
    }
    if !report.structural.is_empty() {
        return Ok(report);
    }

    // A partial operation defined nowhere may omit its table entirely.
    let empty = IndexMap::new();
    for (op, decl) in &theory.ops {
        let table = match model.tables.get(op) {
            Some(t) => t,
            None if !decl.total => &empty,
            None => {
                report.structural.push(format!("missing table for `{op}`"));
                continue;
            }
        };
        // Entries must be well-sorted.
        for (args, v) in table {
            if args.len() != decl.args.len() {
                report.structural.push(format!("`{op}` table has a row of wrong arity"));
                continue;
            }
            let ok_args = args
                .iter()
                .zip(&decl.args)
                .all(|(a, s)| model.carriers[s].contains(a));
            if !ok_args || !model.carriers[&decl.result].contains(v) {
                report
                    .structural
                    .push(format!("`{op}` table row ({}) -> {v} is ill-sorted", args.join(",")));
            }
        }
        // Definedness: everywhere for total operations, exactly on the
        // locus of the definedness conditions for partial ones.
        for env in environments(model, &decl.args)? {
            let defined = table.contains_key(&env);
            let expected = if decl.total {
                true
            } else {
                let mut holds = true;
                for eq in &theory.defs[op] {
                    let l = eval_term(theory, model, &eq.ctx, &env, &eq.lhs)?;
                    let r = eval_term(theory, model, &eq.ctx, &env, &eq.rhs)?;
                    match (l, r) {
                        (Some(a), Some(b)) if a == b => {}
                        _ => {
                            holds = false;
                            break;
                        }
                    }
                }
                holds
            };
            if defined != expected {
                report.violations.push(format!(
                    "`{op}` is {} on ({}) but should {}be",
                    if defined { "defined" } else { "undefined" },
                    env.join(","),
                    if expected { "" } else { "not " },
                ));
            }
        }
    }
    if !report.structural.is_empty() {
        return Ok(report);
    }

    for eq in &theory.equations {
        for env in environments(model, &eq.ctx)? {
            let l = eval_term(theory, model, &eq.ctx, &env, &eq.lhs)?;
            let r = eval_term(theory, model, &eq.ctx, &env, &eq.rhs)?;
            if let (Some(a), Some(b)) = (l, r) {
                if a != b {
                    report.violations.push(format!(
                        "equation `{} = {}` fails on ({}): `{a}` != `{b}`",
                        eq.lhs,
                        eq.rhs,
                        env.join(",")
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// A morphism of theories: a map of sorts and a map of operations.
#[derive(Debug, Clone)]
pub struct TheoryMorphism {
    pub sort_map: IndexMap<String, String>,
    pub op_map: IndexMap<String, String>,
}

impl TheoryMorphism {
    fn map_sort(&self, s: &str) -> Result<&str> {
        self.sort_map
            .get(s)
            .map(String::as_str)
            .ok_or_else(|| Error::Structure(format!("sort `{s}` is not mapped")))
    }

    fn map_op(&self, op: &str) -> Result<&str> {
        self.op_map
            .get(op)
            .map(String::as_str)
            .ok_or_else(|| Error::Structure(format!("operation `{op}` is not mapped")))
    }

    pub fn map_term(&self, t: &TermE) -> Result<TermE> {
        Ok(match t {
            TermE::Var(i) => TermE::Var(*i),
            TermE::App(op, args) => TermE::App(
                self.map_op(op)?.to_string(),
                args.iter().map(|a| self.map_term(a)).collect::<Result<_>>()?,
            ),
        })
    }

    fn map_equation(&self, eq: &Equation) -> Result<Equation> {
        Ok(Equation {
            ctx: eq.ctx.iter().map(|s| self.map_sort(s).map(str::to_string)).collect::<Result<_>>()?,
            lhs: self.map_term(&eq.lhs)?,
            rhs: self.map_term(&eq.rhs)?,
        })
    }

    /// Checks the four morphism conditions against source and target:
    /// arities are transported, totality is preserved and reflected, the
    /// translated axioms are among the target's axioms, and the translated
    /// definedness conditions are exactly those of the image operation.
    pub fn validate(&self, source: &Theory, target: &Theory) -> Result<()> {
        for (op, decl) in &source.ops {
            let h = self.map_op(op)?;
            let hdecl = target
                .ops
                .get(h)
                .ok_or_else(|| Error::Structure(format!("image operation `{h}` not in target")))?;
            let margs: Vec<String> = decl
                .args
                .iter()
                .map(|s| self.map_sort(s).map(str::to_string))
                .collect::<Result<_>>()?;
            if hdecl.args != margs || hdecl.result != self.map_sort(&decl.result)? {
                return Err(Error::Structure(format!("arity of `{op}` is not transported")));
            }
            if hdecl.total != decl.total {
                return Err(Error::Structure(format!(
                    "totality of `{op}` is not preserved and reflected"
                )));
            }
            if !decl.total {
                let mdefs: Vec<Equation> = source.defs[op]
                    .iter()
                    .map(|eq| self.map_equation(eq))
                    .collect::<Result<_>>()?;
                let hdefs = &target.defs[h];
                if mdefs.len() != hdefs.len() || mdefs.iter().any(|e| !hdefs.contains(e)) {
                    return Err(Error::Structure(format!(
                        "definedness conditions of `{op}` do not match those of `{h}`"
                    )));
                }
            }
        }
        for eq in &source.equations {
            let meq = self.map_equation(eq)?;
            if !target.equations.contains(&meq) {
                return Err(Error::Structure(format!(
                    "translated axiom `{} = {}` is not an axiom of `{}`",
                    meq.lhs, meq.rhs, target.name
                )));
            }
        }
        Ok(())
    }
}

/// The reduct of a model of the target theory along a morphism: each sort
/// and operation is interpreted by its image.
pub fn reduct(
    morphism: &TheoryMorphism,
    source: &Theory,
    model: &FiniteModel,
) -> Result<FiniteModel> {
    let mut out = FiniteModel::new(&format!("{}|{}", model.name, source.name));
    for s in &source.sorts {
        let h = morphism.map_sort(s)?;
        let carrier = model
            .carriers
            .get(h)
            .ok_or_else(|| Error::Structure(format!("model has no carrier for sort `{h}`")))?;
        out.carriers.insert(s.clone(), carrier.clone());
    }
    for op in source.ops.keys() {
        let h = morphism.map_op(op)?;
        let table = model
            .tables
            .get(h)
            .ok_or_else(|| Error::Structure(format!("model has no table for `{h}`")))?;
        out.tables.insert(op.clone(), table.clone());
    }
    Ok(out)
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col: 1, msg: msg.into() }
}

fn quoted_name<'a>(line: usize, rest: &'a str, what: &str) -> Result<&'a str> {
    rest.trim()
        .strip_prefix('"')
        .and_then(|q| q.strip_suffix('"'))
        .ok_or_else(|| parse_err(line, format!("expected `{what} \"<name>\"`")))
}

/// Parses a term of the equational language: positional variables `x1, x2,
/// ...` and applications `op(t, ...)`; constants may omit the parentheses.
pub fn parse_term_e(input: &str, line: usize) -> Result<TermE> {
    let (t, rest) = parse_term_e_prefix(input.trim(), line)?;
    if !rest.trim().is_empty() {
        return Err(parse_err(line, format!("unexpected trailing `{}`", rest.trim())));
    }
    Ok(t)
}

fn parse_term_e_prefix<'a>(input: &'a str, line: usize) -> Result<(TermE, &'a str)> {
    let input = input.trim_start();
    let end = input
        .find(|c: char| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '='))
        .unwrap_or(input.len());
    let head = &input[..end];
    if head.is_empty() {
        return Err(parse_err(line, "expected a term"));
    }
    let mut rest = &input[end..];
    if let Some(digits) = head.strip_prefix('x') {
        if let Ok(n) = digits.parse::<usize>() {
            if n == 0 {
                return Err(parse_err(line, "variables are numbered from x1"));
            }
            return Ok((TermE::Var(n - 1), rest));
        }
    }
    let mut args = Vec::new();
    if let Some(r) = rest.trim_start().strip_prefix('(') {
        rest = r;
        loop {
            let trimmed = rest.trim_start();
            if let Some(r) = trimmed.strip_prefix(')') {
                rest = r;
                break;
            }
            let (arg, r) = parse_term_e_prefix(trimmed, line)?;
            args.push(arg);
            let trimmed = r.trim_start();
            if let Some(r) = trimmed.strip_prefix(',') {
                rest = r;
            } else {
                rest = trimmed;
                match rest.strip_prefix(')') {
                    Some(r) => {
                        rest = r;
                        break;
                    }
                    None => return Err(parse_err(line, "expected `,` or `)` in argument list")),
                }
            }
        }
    }
    Ok((TermE::App(head.to_string(), args), rest))
}

fn parse_equation(body: &str, line: usize, ctx: Vec<String>) -> Result<Equation> {
    let (l, r) = body
        .split_once('=')
        .ok_or_else(|| parse_err(line, "expected `<term> = <term>`"))?;
    Ok(Equation { ctx, lhs: parse_term_e(l, line)?, rhs: parse_term_e(r, line)? })
}

/// Parses the textual theory format:
///
/// ```text
/// theory "mon"
/// sorts m
/// total e : -> m
/// total mul : m m -> m
/// partial comp : c1 c1 -> c1
/// def comp : tgt0(x1) = src0(x2)
/// eq m | mul(e(), x1) = x1
/// ```
pub fn parse_theory(input: &str) -> Result<Theory> {
    let mut theory: Option<Theory> = None;
    for (n, raw) in input.lines().enumerate() {
        let n = n + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("theory ") {
            theory = Some(Theory::new(quoted_name(n, rest, "theory")?));
            continue;
        }
        let t = theory
            .as_mut()
            .ok_or_else(|| parse_err(n, "expected a `theory \"<name>\"` header first"))?;
        if let Some(rest) = line.strip_prefix("sorts") {
            for s in rest.split_whitespace() {
                t.sorts.insert(s.to_string());
            }
        } else if let Some(rest) =
            line.strip_prefix("total ").map(|r| (r, true)).or_else(|| {
                line.strip_prefix("partial ").map(|r| (r, false))
            }) {
            let (rest, total) = rest;
            let (name, sig) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(n, "expected `<op> : <sorts> -> <sort>`"))?;
            let (args, result) = sig
                .split_once("->")
                .ok_or_else(|| parse_err(n, "expected `->` in operation arity"))?;
            let decl = OpDecl {
                args: args.split_whitespace().map(str::to_string).collect(),
                result: result.trim().to_string(),
                total,
            };
            if !total {
                t.defs.entry(name.trim().to_string()).or_default();
            }
            t.ops.insert(name.trim().to_string(), decl);
        } else if let Some(rest) = line.strip_prefix("def ") {
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(n, "expected `def <op> : <term> = <term>`"))?;
            let name = name.trim().to_string();
            let ctx = t
                .ops
                .get(&name)
                .map(|d| d.args.clone())
                .ok_or_else(|| parse_err(n, format!("`def` before declaring `{name}`")))?;
            let eq = parse_equation(body, n, ctx)?;
            t.defs.entry(name).or_default().push(eq);
        } else if let Some(rest) = line.strip_prefix("eq ") {
            let (ctx, body) = rest
                .split_once('|')
                .ok_or_else(|| parse_err(n, "expected `eq <sorts> | <term> = <term>`"))?;
            let ctx: Vec<String> = ctx.split_whitespace().map(str::to_string).collect();
            t.equations.push(parse_equation(body, n, ctx)?);
        } else {
            return Err(parse_err(n, format!("unrecognized directive `{line}`")));
        }
    }
    theory.ok_or_else(|| parse_err(1, "empty theory file"))
}

/// Parses the textual model format:
///
/// ```text
/// model "z2"
/// carrier m : 0 1
/// table e : -> 0
/// table mul : 0 1 -> 1
/// ```
pub fn parse_model(input: &str) -> Result<FiniteModel> {
    let mut model: Option<FiniteModel> = None;
    for (n, raw) in input.lines().enumerate() {
        let n = n + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("model ") {
            model = Some(FiniteModel::new(quoted_name(n, rest, "model")?));
            continue;
        }
        let m = model
            .as_mut()
            .ok_or_else(|| parse_err(n, "expected a `model \"<name>\"` header first"))?;
        if let Some(rest) = line.strip_prefix("carrier ") {
            let (sort, elems) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(n, "expected `carrier <sort> : <elements>`"))?;
            m.carriers
                .entry(sort.trim().to_string())
                .or_default()
                .extend(elems.split_whitespace().map(str::to_string));
        } else if let Some(rest) = line.strip_prefix("table ") {
            let (op, row) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(n, "expected `table <op> : <args> -> <value>`"))?;
            let (args, value) = row
                .split_once("->")
                .ok_or_else(|| parse_err(n, "expected `->` in table row"))?;
            let value = value.trim();
            if value.is_empty() {
                return Err(parse_err(n, "table row has no value"));
            }
            m.tables.entry(op.trim().to_string()).or_default().insert(
                args.split_whitespace().map(str::to_string).collect(),
                value.to_string(),
            );
        } else {
            return Err(parse_err(n, format!("unrecognized directive `{line}`")));
        }
    }
    model.ok_or_else(|| parse_err(1, "empty model file"))
}

fn eq(ctx: &[&str], lhs: TermE, rhs: TermE) -> Equation {
    Equation { ctx: ctx.iter().map(|s| s.to_string()).collect(), lhs, rhs }
}

fn v(i: usize) -> TermE {
    TermE::Var(i)
}

/// The theory of monoids: one sort, a unit and a total multiplication.
pub fn t_mon() -> Theory {
    let mut t = Theory::new("mon");
    t.sorts.insert("m".into());
    t.ops.insert("e".into(), OpDecl { args: vec![], result: "m".into(), total: true });
    t.ops
        .insert("mul".into(), OpDecl { args: vec!["m".into(), "m".into()], result: "m".into(), total: true });
    let mul = |a, b| TermE::app("mul", vec![a, b]);
    let e = || TermE::app("e", vec![]);
    t.equations.push(eq(
        &["m", "m", "m"],
        mul(mul(v(0), v(1)), v(2)),
        mul(v(0), mul(v(1), v(2))),
    ));
    t.equations.push(eq(&["m"], mul(e(), v(0)), v(0)));
    t.equations.push(eq(&["m"], mul(v(0), e()), v(0)));
    t
}

/// The theory of graphs: two sorts and total source and target maps.
pub fn t_gph() -> Theory {
    let mut t = Theory::new("gph");
    t.sorts.insert("c0".into());
    t.sorts.insert("c1".into());
    t.ops
        .insert("gsrc0".into(), OpDecl { args: vec!["c1".into()], result: "c0".into(), total: true });
    t.ops
        .insert("gtgt0".into(), OpDecl { args: vec!["c1".into()], result: "c0".into(), total: true });
    t
}

/// The theory of categories: graphs with identities and a partial
/// composition defined exactly on composable pairs.
pub fn t_cat() -> Theory {
    let mut t = Theory::new("cat");
    t.sorts.insert("c0".into());
    t.sorts.insert("c1".into());
    t.ops
        .insert("src0".into(), OpDecl { args: vec!["c1".into()], result: "c0".into(), total: true });
    t.ops
        .insert("tgt0".into(), OpDecl { args: vec!["c1".into()], result: "c0".into(), total: true });
    t.ops
        .insert("unit1".into(), OpDecl { args: vec!["c0".into()], result: "c1".into(), total: true });
    t.ops.insert(
        "comp".into(),
        OpDecl { args: vec!["c1".into(), "c1".into()], result: "c1".into(), total: false },
    );
    let src = |a| TermE::app("src0", vec![a]);
    let tgt = |a| TermE::app("tgt0", vec![a]);
    let unit = |a| TermE::app("unit1", vec![a]);
    let comp = |a, b| TermE::app("comp", vec![a, b]);
    t.defs
        .insert("comp".into(), vec![eq(&["c1", "c1"], tgt(v(0)), src(v(1)))]);
    // Boundaries of identities.
    t.equations.push(eq(&["c0"], src(unit(v(0))), v(0)));
    t.equations.push(eq(&["c0"], tgt(unit(v(0))), v(0)));
    // Boundaries of composites.
    t.equations.push(eq(&["c1", "c1"], src(comp(v(0), v(1))), src(v(0))));
    t.equations.push(eq(&["c1", "c1"], tgt(comp(v(0), v(1))), tgt(v(1))));
    // Unitality.
    t.equations.push(eq(&["c1"], comp(unit(src(v(0))), v(0)), v(0)));
    t.equations.push(eq(&["c1"], comp(v(0), unit(tgt(v(0)))), v(0)));
    // Associativity.
    t.equations.push(eq(
        &["c1", "c1", "c1"],
        comp(comp(v(0), v(1)), v(2)),
        comp(v(0), comp(v(1), v(2))),
    ));
    t
}

/// The theory of groups: monoids with a total inverse.
pub fn t_grp() -> Theory {
    let mut t = t_mon();
    t.name = "grp".into();
    t.ops.insert("inv".into(), OpDecl { args: vec!["m".into()], result: "m".into(), total: true });
    let mul = |a, b| TermE::app("mul", vec![a, b]);
    let e = || TermE::app("e", vec![]);
    let inv = |a| TermE::app("inv", vec![a]);
    t.equations.push(eq(&["m"], mul(inv(v(0)), v(0)), e()));
    t.equations.push(eq(&["m"], mul(v(0), inv(v(0))), e()));
    t
}

/// The inclusion of graphs into categories, mapping the source and target
/// maps to those of the category.
pub fn gph_to_cat() -> TheoryMorphism {
    TheoryMorphism {
        sort_map: [("c0".to_string(), "c0".to_string()), ("c1".to_string(), "c1".to_string())]
            .into(),
        op_map: [
            ("gsrc0".to_string(), "src0".to_string()),
            ("gtgt0".to_string(), "tgt0".to_string()),
        ]
        .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (Z/2, xor, 0) as a monoid model.
    pub(crate) fn z2_model() -> FiniteModel {
        let mut m = FiniteModel::new("z2");
        m.carriers.insert("m".into(), ["0".to_string(), "1".to_string()].into());
        m.tables.insert("e".into(), [(vec![], "0".to_string())].into());
        m.tables.insert(
            "mul".into(),
            [
                (vec!["0".to_string(), "0".to_string()], "0".to_string()),
                (vec!["0".to_string(), "1".to_string()], "1".to_string()),
                (vec!["1".to_string(), "0".to_string()], "1".to_string()),
                (vec!["1".to_string(), "1".to_string()], "0".to_string()),
            ]
            .into(),
        );
        m
    }

    /// Two objects and one arrow between them, as a category model.
    pub(crate) fn two_object_cat_model() -> FiniteModel {
        let mut m = FiniteModel::new("two");
        m.carriers.insert("c0".into(), ["a".to_string(), "b".to_string()].into());
        m.carriers
            .insert("c1".into(), ["ia".to_string(), "ib".to_string(), "h".to_string()].into());
        let one = |pairs: &[(&str, &str)]| -> IndexMap<Vec<String>, String> {
            pairs.iter().map(|(k, v)| (vec![k.to_string()], v.to_string())).collect()
        };
        m.tables.insert("src0".into(), one(&[("ia", "a"), ("ib", "b"), ("h", "a")]));
        m.tables.insert("tgt0".into(), one(&[("ia", "a"), ("ib", "b"), ("h", "b")]));
        m.tables.insert("unit1".into(), one(&[("a", "ia"), ("b", "ib")]));
        m.tables.insert(
            "comp".into(),
            [
                (vec!["ia".to_string(), "ia".to_string()], "ia".to_string()),
                (vec!["ib".to_string(), "ib".to_string()], "ib".to_string()),
                (vec!["ia".to_string(), "h".to_string()], "h".to_string()),
                (vec!["h".to_string(), "ib".to_string()], "h".to_string()),
            ]
            .into(),
        );
        m
    }

    #[test]
    fn bundled_theories_are_well_formed() {
        for t in [t_mon(), t_gph(), t_cat(), t_grp()] {
            t.check().unwrap();
        }
    }

    #[test]
    fn z2_is_a_monoid() {
        let report = check_model(&t_mon(), &z2_model()).unwrap();
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn corrupted_unit_fails_exactly_the_unit_equations() {
        let mut m = z2_model();
        m.tables["e"].insert(vec![], "1".to_string());
        let report = check_model(&t_mon(), &m).unwrap();
        assert!(!report.ok());
        // Associativity still holds; every violation mentions the unit.
        assert!(report.violations.iter().all(|v| v.contains("e()")), "{report:?}");
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn two_object_category_checks() {
        let report = check_model(&t_cat(), &two_object_cat_model()).unwrap();
        assert!(report.ok(), "{report:?}");
    }

    #[test]
    fn composition_defined_off_locus_is_reported() {
        let mut m = two_object_cat_model();
        m.tables["comp"].insert(vec!["h".to_string(), "ia".to_string()], "h".to_string());
        let report = check_model(&t_cat(), &m).unwrap();
        assert!(report.violations.iter().any(|v| v.contains("comp")), "{report:?}");
    }

    #[test]
    fn missing_composite_on_locus_is_reported() {
        let mut m = two_object_cat_model();
        m.tables["comp"].shift_remove(&vec!["ia".to_string(), "h".to_string()]);
        let report = check_model(&t_cat(), &m).unwrap();
        assert!(report.violations.iter().any(|v| v.contains("undefined")), "{report:?}");
    }

    #[test]
    fn graph_reduct_of_a_category_is_its_underlying_graph() {
        let f = gph_to_cat();
        f.validate(&t_gph(), &t_cat()).unwrap();
        let m = two_object_cat_model();
        let r = reduct(&f, &t_gph(), &m).unwrap();
        let report = check_model(&t_gph(), &r).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(r.tables["gsrc0"], m.tables["src0"]);
        assert_eq!(r.tables["gtgt0"], m.tables["tgt0"]);
    }

    #[test]
    fn broken_morphism_is_rejected() {
        let mut f = gph_to_cat();
        f.op_map.insert("gsrc0".into(), "unit1".into());
        assert!(f.validate(&t_gph(), &t_cat()).is_err());
    }

    #[test]
    fn theory_file_round_trips_to_bundled_monoid() {
        let text = "\
theory \"mon\"
sorts m
total e : -> m
total mul : m m -> m
eq m m m | mul(mul(x1,x2),x3) = mul(x1,mul(x2,x3))
eq m | mul(e(), x1) = x1
eq m | mul(x1, e()) = x1
";
        let t = parse_theory(text).unwrap();
        assert_eq!(t, t_mon());
    }

    #[test]
    fn model_file_round_trips_to_z2() {
        let text = "\
model \"z2\"
carrier m : 0 1
table e : -> 0
table mul : 0 0 -> 0
table mul : 0 1 -> 1
table mul : 1 0 -> 1
table mul : 1 1 -> 0
";
        let m = parse_model(text).unwrap();
        assert_eq!(m, z2_model());
        assert!(check_model(&t_mon(), &m).unwrap().ok());
    }

    #[test]
    fn category_theory_file_parses_with_partial_composition() {
        let text = "\
theory \"cat\"
sorts c0 c1
total src0 : c1 -> c0
total tgt0 : c1 -> c0
total unit1 : c0 -> c1
partial comp : c1 c1 -> c1
def comp : tgt0(x1) = src0(x2)
eq c0 | src0(unit1(x1)) = x1
eq c0 | tgt0(unit1(x1)) = x1
eq c1 c1 | src0(comp(x1,x2)) = src0(x1)
eq c1 c1 | tgt0(comp(x1,x2)) = tgt0(x2)
eq c1 | comp(unit1(src0(x1)), x1) = x1
eq c1 | comp(x1, unit1(tgt0(x1))) = x1
eq c1 c1 c1 | comp(comp(x1,x2),x3) = comp(x1,comp(x2,x3))
";
        let t = parse_theory(text).unwrap();
        assert_eq!(t, t_cat());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_theory("theory \"t\"\nnonsense here\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error on line 2, got {other:?}"),
        }
        match parse_model("model \"m\"\ntable f : a b\n") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error on line 2, got {other:?}"),
        }
    }

    #[test]
    fn strict_evaluation_propagates_undefinedness() {
        let t = t_cat();
        let m = two_object_cat_model();
        // comp(h, h) is undefined, so src0(comp(x1, x2)) on (h, h) is too.
        let term = TermE::app("src0", vec![TermE::app("comp", vec![v(0), v(1)])]);
        let ctx = vec!["c1".to_string(), "c1".to_string()];
        let env = vec!["h".to_string(), "h".to_string()];
        assert_eq!(eval_term(&t, &m, &ctx, &env, &term).unwrap(), None);
        // An ill-sorted environment is an error, not undefinedness.
        let bad = vec!["a".to_string(), "h".to_string()];
        assert!(eval_term(&t, &m, &ctx, &bad, &term).is_err());
    }
}
