//! The genus tree of local good semigroups of `ℕ²`, level by level.

use std::collections::HashSet;
use std::fs;
use std::hash::Hasher;
use std::io::Write;
use std::path::{Path, PathBuf};

use fnv::FnvHasher;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{gaps, genus, genus_by_maximals, length, level_partition, type_of};
use crate::semigroup::GoodSemigroup;
use crate::tracks::{
    beyond_children, favored_children, favored_count, remove_track, special_parents, tracks,
};

/// One level of the tree: all semigroups of a given genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frontier {
    pub genus: u64,
    pub members: Vec<GoodSemigroup>,
}

impl Frontier {
    /// `{ℕ²(1,1)}`, the only semigroup of genus 1.
    pub fn root() -> Self {
        Frontier {
            genus: 1,
            members: vec![GoodSemigroup::unit_box(2)],
        }
    }
}

/// Next level: the sons of every member along its favored tracks.
/// Must run inside the intended thread pool; output order follows input order.
pub fn expand(frontier: &Frontier) -> Result<Frontier> {
    let children: Vec<Vec<GoodSemigroup>> = frontier
        .members
        .par_iter()
        .map(favored_children)
        .collect::<Result<_>>()?;
    let members: Vec<GoodSemigroup> = children.into_iter().flatten().collect();
    debug_assert_eq!(
        members.iter().collect::<HashSet<_>>().len(),
        members.len(),
        "duplicate semigroups at genus {}",
        frontier.genus + 1
    );
    Ok(Frontier {
        genus: frontier.genus + 1,
        members,
    })
}

/// Size of the next level without building it.
pub fn expand_count(frontier: &Frontier) -> Result<u64> {
    frontier
        .members
        .par_iter()
        .map(|s| favored_count(s).map(|n| n as u64))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[derive(Clone, Debug, Default)]
pub struct EnumOptions {
    /// Worker threads; 0 uses one per core.
    pub threads: usize,
    /// Count the last level without materializing it.
    pub count_only: bool,
    /// Directory for level checkpoints.
    pub checkpoint: Option<PathBuf>,
    /// Continue from the deepest complete level in `checkpoint`.
    pub resume: bool,
}

pub(crate) fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// `n_g` for `g = 1..=max_g`. Ratios are derived on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub counts: Vec<u64>,
}

#[derive(Serialize)]
struct CountRow {
    genus: usize,
    count: u64,
    ratio: Option<f64>,
    ratio_delta: Option<f64>,
}

fn round6(v: f64) -> f64 {
    format!("{v:.6}").parse().unwrap()
}

impl CountTable {
    pub fn count(&self, genus: usize) -> Option<u64> {
        genus.checked_sub(1).and_then(|i| self.counts.get(i)).copied()
    }

    /// `n_g / n_{g−1}`.
    pub fn ratio(&self, genus: usize) -> Option<f64> {
        let n = self.count(genus)?;
        let prev = self.count(genus.checked_sub(1)?)?;
        Some(n as f64 / prev as f64)
    }

    pub fn ratio_delta(&self, genus: usize) -> Option<f64> {
        Some(self.ratio(genus)? - self.ratio(genus - 1)?)
    }

    fn rows(&self) -> Vec<CountRow> {
        (1..=self.counts.len())
            .map(|g| CountRow {
                genus: g,
                count: self.counts[g - 1],
                ratio: self.ratio(g).map(round6),
                ratio_delta: self.ratio_delta(g).map(round6),
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("genus,count,ratio,ratio_delta\n");
        for g in 1..=self.counts.len() {
            let r = self.ratio(g).map(|v| format!("{v:.6}")).unwrap_or_default();
            let d = self
                .ratio_delta(g)
                .map(|v| format!("{v:.6}"))
                .unwrap_or_default();
            out.push_str(&format!("{g},{},{r},{d}\n", self.counts[g - 1]));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{:>5} {:>14} {:>10} {:>11}\n", "g", "n_g", "ratio", "delta");
        for g in 1..=self.counts.len() {
            let r = self.ratio(g).map(|v| format!("{v:.6}")).unwrap_or_default();
            let d = self
                .ratio_delta(g)
                .map(|v| format!("{v:+.6}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{g:>5} {:>14} {r:>10} {d:>11}\n",
                self.counts[g - 1]
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows()).unwrap()
    }
}

/// Counts every level up to `max_g`, optionally checkpointing each
/// materialized level and resuming from the deepest one on disk.
pub fn count_by_genus(max_g: u64, opts: &EnumOptions) -> Result<CountTable> {
    if max_g == 0 {
        return Err(Error::Unsupported("max genus must be at least 1".into()));
    }
    pool(opts.threads)?.install(|| {
        let resumed = match (&opts.checkpoint, opts.resume) {
            (Some(dir), true) => resume_point(dir, max_g)?,
            _ => None,
        };
        let (mut frontier, mut counts) = match resumed {
            Some(state) => state,
            None => {
                let root = Frontier::root();
                if let Some(dir) = &opts.checkpoint {
                    checkpoint_write(&root, dir, 1)?;
                }
                (root, vec![1])
            }
        };
        let shards = rayon::current_num_threads();
        while frontier.genus < max_g {
            if opts.count_only && frontier.genus + 1 == max_g {
                counts.push(expand_count(&frontier)?);
                break;
            }
            frontier = expand(&frontier)?;
            counts.push(frontier.members.len() as u64);
            if let Some(dir) = &opts.checkpoint {
                checkpoint_write(&frontier, dir, shards)?;
            }
        }
        Ok(CountTable { counts })
    })
}

/// All levels `1..=max_g`, materialized.
pub fn frontiers(max_g: u64, threads: usize) -> Result<Vec<Frontier>> {
    pool(threads)?.install(|| {
        let mut levels = vec![Frontier::root()];
        while (levels.len() as u64) < max_g {
            let next = expand(levels.last().unwrap())?;
            levels.push(next);
        }
        Ok(levels)
    })
}

/// Outcome of one audited property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditCheck {
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub semigroups: u64,
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&AuditCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("audited {} semigroups\n", self.semigroups);
        for c in &self.checks {
            let status = if c.failures == 0 { "ok" } else { "FAIL" };
            out.push_str(&format!(
                "{:<14} {status:<4} checked={} failures={}\n",
                c.name, c.checked, c.failures
            ));
            if let Some(w) = &c.first_counterexample {
                out.push_str(&format!("  first counterexample: {w}\n"));
            }
        }
        out
    }
}

/// Per-level limits of the audit; levels above a limit skip that check.
#[derive(Clone, Copy, Debug)]
pub struct AuditLimits {
    pub level_partition: u64,
    pub generation: u64,
}

impl Default for AuditLimits {
    fn default() -> Self {
        AuditLimits {
            level_partition: 7,
            generation: 6,
        }
    }
}

pub const AUDIT_CHECKS: [&str; 7] = [
    "genus-step",
    "parent-count",
    "length",
    "maximals",
    "type-bounds",
    "levels",
    "generation",
];

type Outcome = (usize, Option<String>);

fn scalar_checks(s: &GoodSemigroup, limits: &AuditLimits) -> Result<Vec<Outcome>> {
    let g = genus(s);
    let l = length(s);
    let c_s = s.conductor_sum();
    let mut out = Vec::new();
    let fail = |cond: bool, msg: String| if cond { None } else { Some(msg) };

    if *s != GoodSemigroup::unit_box(2) {
        let (c1, c2) = s.c2();
        let f = [c1 - 1, c2 - 1];
        let expected = if s.contains_unchecked(&f) {
            1
        } else {
            f.iter().filter(|&&v| v != 0).count()
        };
        let got = special_parents(s).map(|p| p.len());
        out.push((
            1,
            match got {
                Ok(n) => fail(n == expected, format!("{s}: {n} parents, expected {expected}")),
                Err(e) => Some(format!("{s}: {e}")),
            },
        ));
    }
    out.push((2, fail(g + l == c_s, format!("{s}: g={g} l={l} c_S={c_s}"))));
    let gm = genus_by_maximals(s)?;
    out.push((3, fail(gm == g, format!("{s}: projections {g}, maximals {gm}"))));
    let t = type_of(s)? as u64;
    out.push((
        4,
        fail(
            t + l - 1 <= g && g <= t * l,
            format!("{s}: t={t} l={l} g={g}"),
        ),
    ));
    if g <= limits.level_partition {
        let nl = level_partition(&gaps(s, 1)?)?.nl() as u64;
        out.push((5, fail(nl == g, format!("{s}: NL={nl} g={g}"))));
    }
    Ok(out)
}

fn genus_step(s: &GoodSemigroup) -> Result<(Vec<Outcome>, Vec<GoodSemigroup>)> {
    let g = genus(s);
    let mut out = Vec::new();
    for t in tracks(s)? {
        let child = remove_track(s, &t)?;
        let gc = genus(&child);
        out.push((
            0,
            (gc != g + 1).then(|| format!("{s} minus {t}: genus {gc}, expected {}", g + 1)),
        ));
    }
    Ok((out, favored_children(s)?))
}

fn same_level(favored: &[GoodSemigroup], parents: &[GoodSemigroup]) -> Result<Option<String>> {
    let mut beyond = HashSet::new();
    for p in parents {
        beyond.extend(beyond_children(p)?);
    }
    let fav: HashSet<&GoodSemigroup> = favored.iter().collect();
    if fav.len() != favored.len() {
        return Ok(Some("favored generation produced a duplicate".into()));
    }
    if let Some(s) = beyond.iter().find(|s| !fav.contains(s)) {
        return Ok(Some(format!("{s} missing from favored generation")));
    }
    if let Some(s) = favored.iter().find(|s| !beyond.contains(*s)) {
        return Ok(Some(format!("{s} missing from beyond generation")));
    }
    Ok(None)
}

/// Runs every cross-module check over the given levels and the children of
/// their members. Failures are report content, not errors.
pub fn audit(levels: &[Frontier], limits: &AuditLimits) -> Result<AuditReport> {
    let mut checks: Vec<AuditCheck> = AUDIT_CHECKS
        .iter()
        .map(|&name| AuditCheck {
            name,
            checked: 0,
            failures: 0,
            first_counterexample: None,
        })
        .collect();
    if levels.iter().all(|l| l.members.is_empty()) {
        return Ok(AuditReport::default());
    }
    let record = |checks: &mut Vec<AuditCheck>, outcomes: Vec<Outcome>| {
        for (i, o) in outcomes {
            checks[i].checked += 1;
            if let Some(w) = o {
                checks[i].failures += 1;
                checks[i].first_counterexample.get_or_insert(w);
            }
        }
    };
    let mut semigroups = 0;
    let mut seen: HashSet<&GoodSemigroup> = HashSet::new();
    let mut visit = Vec::new();
    for level in levels {
        let stepped: Vec<(Vec<Outcome>, Vec<GoodSemigroup>)> =
            level.members.par_iter().map(genus_step).collect::<Result<_>>()?;
        let mut children = Vec::new();
        for (o, c) in stepped {
            record(&mut checks, o);
            children.extend(c);
        }
        if level.genus < limits.generation {
            let o = same_level(&children, &level.members)?;
            record(&mut checks, vec![(6, o)]);
        }
        visit.push(level.members.clone());
        visit.push(children);
    }
    for group in &visit {
        let fresh: Vec<&GoodSemigroup> = group.iter().filter(|s| seen.insert(*s)).collect();
        semigroups += fresh.len() as u64;
        let outcomes: Vec<Vec<Outcome>> = fresh
            .par_iter()
            .map(|s| scalar_checks(s, limits))
            .collect::<Result<_>>()?;
        for o in outcomes {
            record(&mut checks, o);
        }
    }
    Ok(AuditReport { semigroups, checks })
}

/// Audits the tree up to `max_g` together with the next level.
pub fn audit_mode(max_g: u64, threads: usize, limits: &AuditLimits) -> Result<AuditReport> {
    let levels = frontiers(max_g, threads)?;
    pool(threads)?.install(|| audit(&levels, limits))
}

fn level_dir(dir: &Path, genus: u64) -> PathBuf {
    dir.join(format!("genus-{genus}"))
}

fn checksum(body: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(body.as_bytes());
    h.finish()
}

fn ckpt_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Checkpoint(format!("{}: {e}", path.display()))
}

/// Writes a level as `shards` contiguous shard files plus a manifest,
/// which is written last and marks the level complete.
pub fn checkpoint_write(frontier: &Frontier, dir: &Path, shards: usize) -> Result<()> {
    let ldir = level_dir(dir, frontier.genus);
    fs::create_dir_all(&ldir).map_err(|e| ckpt_err(&ldir, e))?;
    let shards = shards.max(1);
    let n = frontier.members.len();
    let per = n.div_ceil(shards).max(1);
    for k in 0..shards {
        let chunk = &frontier.members[(k * per).min(n)..((k + 1) * per).min(n)];
        let mut body = String::new();
        for s in chunk {
            body.push_str(&s.to_line());
            body.push('\n');
        }
        let path = ldir.join(format!("shard-{k}.txt"));
        let mut f = fs::File::create(&path).map_err(|e| ckpt_err(&path, e))?;
        write!(
            f,
            "genus={} count={} checksum={:016x}\n{body}",
            frontier.genus,
            chunk.len(),
            checksum(&body)
        )
        .map_err(|e| ckpt_err(&path, e))?;
    }
    let path = ldir.join("MANIFEST");
    fs::write(
        &path,
        format!("genus={} shards={shards} count={n}\n", frontier.genus),
    )
    .map_err(|e| ckpt_err(&path, e))?;
    Ok(())
}

fn header_fields<'a>(line: &'a str, keys: &[&str], path: &Path) -> Result<Vec<&'a str>> {
    let mut out = Vec::new();
    let mut parts = line.split_whitespace();
    for key in keys {
        let field = parts
            .next()
            .and_then(|p| p.strip_prefix(key))
            .and_then(|p| p.strip_prefix('='))
            .ok_or_else(|| ckpt_err(path, format!("malformed header, expected {key}=")))?;
        out.push(field);
    }
    Ok(out)
}

fn parse_num(v: &str, path: &Path) -> Result<u64> {
    v.parse()
        .map_err(|_| ckpt_err(path, format!("malformed number {v:?}")))
}

struct Manifest {
    shards: u64,
    count: u64,
}

fn read_manifest(dir: &Path, genus: u64) -> Result<Manifest> {
    let path = level_dir(dir, genus).join("MANIFEST");
    let text = fs::read_to_string(&path).map_err(|e| ckpt_err(&path, e))?;
    let f = header_fields(text.trim(), &["genus", "shards", "count"], &path)?;
    if parse_num(f[0], &path)? != genus {
        return Err(ckpt_err(&path, "genus mismatch in manifest"));
    }
    Ok(Manifest {
        shards: parse_num(f[1], &path)?,
        count: parse_num(f[2], &path)?,
    })
}

/// Reads a complete level back, verifying headers and checksums.
pub fn checkpoint_read(dir: &Path, genus: u64) -> Result<Frontier> {
    let m = read_manifest(dir, genus)?;
    let mut members = Vec::with_capacity(m.count as usize);
    for k in 0..m.shards {
        let path = level_dir(dir, genus).join(format!("shard-{k}.txt"));
        let text = fs::read_to_string(&path).map_err(|e| ckpt_err(&path, e))?;
        let (header, body) = text
            .split_once('\n')
            .ok_or_else(|| ckpt_err(&path, "missing header"))?;
        let f = header_fields(header, &["genus", "count", "checksum"], &path)?;
        if parse_num(f[0], &path)? != genus {
            return Err(ckpt_err(&path, "genus mismatch in header"));
        }
        let count = parse_num(f[1], &path)?;
        let sum = u64::from_str_radix(f[2], 16)
            .map_err(|_| ckpt_err(&path, "malformed checksum"))?;
        if checksum(body) != sum {
            return Err(ckpt_err(&path, "checksum mismatch"));
        }
        let before = members.len();
        for line in body.lines() {
            members.push(GoodSemigroup::from_line(line).map_err(|e| ckpt_err(&path, e))?);
        }
        if (members.len() - before) as u64 != count {
            return Err(ckpt_err(&path, "member count does not match header"));
        }
    }
    if members.len() as u64 != m.count {
        return Err(ckpt_err(
            &level_dir(dir, genus),
            "member count does not match manifest",
        ));
    }
    Ok(Frontier { genus, members })
}

/// The deepest complete level at or below `max_g`, with the counts of
/// every level up to it.
fn resume_point(dir: &Path, max_g: u64) -> Result<Option<(Frontier, Vec<u64>)>> {
    let deepest = (1..=max_g)
        .rev()
        .find(|&g| level_dir(dir, g).join("MANIFEST").exists());
    let Some(g) = deepest else {
        return Ok(None);
    };
    let mut counts = Vec::new();
    for k in 1..=g {
        counts.push(read_manifest(dir, k)?.count);
    }
    Ok(Some((checkpoint_read(dir, g)?, counts)))
}
