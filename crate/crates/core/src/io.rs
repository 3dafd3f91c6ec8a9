//! File formats, DOT output and the on-disk cache.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraJson, BoundQuiverAlgebra};
use crate::ct::{build_ct_catalog, idempotent_ideal_failures, is_almost_directed_with, iterate_auslander, CatalogJson, ChainJson, CtCatalog};
use crate::error::{Error, Result};
use crate::homology::hom_tau_ext_check;
use crate::module::{is_indecomposable, Algebra, ModuleJson, Representation};
use crate::tilting::{
    audit_tilting, conjecture_probe, ext_injectives, ext_projectives, fac_cap_c, sub_cap_c, torsion_free_report, torsion_report,
    ConjectureProbe, TiltingAudit, TiltingContext, TiltingVerdict,
};
use crate::wide::{audit_sequences, masod_audit, union_of, Lattice, MasodReport};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Where the algebra comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// The `d`-Auslander algebra of linearly oriented `A_n`, or `A_n` modulo paths of length `rad` when given.
    LinearAn { n: usize, rad: Option<usize> },
    File(PathBuf),
}

impl AlgebraSource {
    pub fn load(&self, d: usize) -> Result<BoundQuiverAlgebra> {
        match self {
            AlgebraSource::LinearAn { n, rad: None } => iterate_auslander(*n, d),
            AlgebraSource::LinearAn { n, rad: Some(r) } => BoundQuiverAlgebra::linear_an(*n, Some(*r)),
            AlgebraSource::File(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                let j: AlgebraJson = serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                BoundQuiverAlgebra::from_json(&j)
            }
        }
    }
}

/// A catalog with its modules, tables and enumerated sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub engine_version: String,
    pub seed: u64,
    pub algebra: AlgebraJson,
    pub d: usize,
    pub objects: Vec<ModuleJson>,
    pub tables: CatalogJson,
    pub sequences: Vec<ChainJson>,
}

impl CatalogFile {
    pub fn new(cat: &CtCatalog, seed: u64) -> Result<CatalogFile> {
        let sequences = cat.d_exact_sequences()?.iter().map(|s| s.to_json()).collect();
        Ok(CatalogFile {
            engine_version: ENGINE_VERSION.to_string(),
            seed,
            algebra: cat.algebra.to_json(),
            d: cat.d,
            objects: cat.objects.iter().map(Representation::to_json).collect(),
            tables: cat.to_json(),
            sequences,
        })
    }

    /// Rebuilds the catalog and rejects any disagreement with the stored tables and sequences.
    pub fn load(&self) -> Result<CtCatalog> {
        let bad = |what: &str| Error::InvalidInput(format!("catalog file: {what}"));
        if self.engine_version != ENGINE_VERSION {
            return Err(bad("written by another engine version"));
        }
        let algebra: Algebra = Arc::new(BoundQuiverAlgebra::from_json(&self.algebra)?);
        if algebra.digest() != self.tables.algebra {
            return Err(bad("algebra digest mismatch"));
        }
        let objects =
            self.objects.iter().map(|j| Representation::from_json(&algebra, j)).collect::<Result<Vec<_>>>()?;
        for m in &objects {
            if !is_indecomposable(m)? {
                return Err(bad("an object is not indecomposable"));
            }
        }
        let cat = CtCatalog::from_objects(&algebra, self.d, objects);
        if cat.to_json() != self.tables {
            return Err(bad("tables do not match the objects"));
        }
        if !cat.is_rigid() || cat.projective_indices().len() != algebra.n_vertices() {
            return Err(bad("objects are not a rigid generator"));
        }
        let seqs: Vec<ChainJson> = cat.d_exact_sequences()?.iter().map(|s| s.to_json()).collect();
        if seqs != self.sequences {
            return Err(bad("sequences do not match the objects"));
        }
        Ok(cat)
    }
}

/// Label of a catalog object: its dimension vector.
pub fn object_label(cat: &CtCatalog, x: usize) -> String {
    cat.objects[x].dim_vector().iter().map(usize::to_string).collect::<Vec<_>>().join("")
}

fn set_label(cat: &CtCatalog, xs: &[usize]) -> String {
    if xs.is_empty() {
        return "0".into();
    }
    xs.iter().map(|&x| object_label(cat, x)).collect::<Vec<_>>().join(" + ")
}

/// Hasse diagram of the torsion classes, one node per support-tilting module.
pub fn lattice_dot(cat: &CtCatalog, tilting: &[Vec<usize>], lattice: &Lattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (k, t) in tilting.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", set_label(cat, t));
    }
    for &(a, b) in &lattice.edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

/// Edges of a DOT digraph written by [`lattice_dot`], as node indices.
pub fn parse_dot_edges(dot: &str) -> Result<Vec<(usize, usize)>> {
    let node = |s: &str| -> Result<usize> {
        s.trim()
            .trim_end_matches(';')
            .strip_prefix('n')
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| Error::InvalidInput(format!("bad DOT node {s:?}")))
    };
    let body = dot.trim();
    if !body.starts_with("digraph") || !body.ends_with('}') {
        return Err(Error::InvalidInput("not a DOT digraph".into()));
    }
    let mut edges = Vec::new();
    for line in body.lines().filter(|l| l.contains("->")) {
        let (a, b) = line.split_once("->").expect("arrow");
        edges.push((node(a)?, node(b)?));
    }
    Ok(edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingFile {
    pub engine_version: String,
    pub seed: u64,
    pub algebra: String,
    pub d: usize,
    pub objects: Vec<Vec<usize>>,
    pub verdicts: Vec<TiltingVerdict>,
    pub torsion_classes: Vec<Vec<usize>>,
    pub lattice_edges: Vec<(usize, usize)>,
}

impl TiltingFile {
    pub fn new(cat: &CtCatalog, verdicts: Vec<TiltingVerdict>, seed: u64) -> TiltingFile {
        let trace = crate::tilting::TraceTable::new(cat);
        let torsion_classes: Vec<Vec<usize>> = verdicts.iter().map(|v| fac_cap_c(&trace, &v.summands)).collect();
        let lattice = crate::wide::inclusion_lattice(torsion_classes.clone());
        TiltingFile {
            engine_version: ENGINE_VERSION.to_string(),
            seed,
            algebra: cat.algebra.digest(),
            d: cat.d,
            objects: cat.objects.iter().map(|o| o.dim_vector().to_vec()).collect(),
            verdicts,
            torsion_classes,
            lattice_edges: lattice.edges,
        }
    }

    pub fn tilting(&self) -> Vec<Vec<usize>> {
        self.verdicts.iter().map(|v| v.summands.clone()).collect()
    }
}

/// Each family mapped back to the support-tilting list: `k ↦` the position of the module it recovers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bijections {
    pub torsion: Vec<Option<usize>>,
    pub resonant: Vec<Option<usize>>,
    pub torsion_free: Vec<Option<usize>>,
    pub coresonant: Vec<Option<usize>>,
}

impl Bijections {
    pub fn are_permutations(&self) -> bool {
        [&self.torsion, &self.resonant, &self.torsion_free, &self.coresonant].iter().all(|m| {
            let mut seen: Vec<usize> = m.iter().flatten().copied().collect();
            seen.sort_unstable();
            seen.len() == m.len() && seen.iter().enumerate().all(|(k, &j)| k == j)
        })
    }
}

/// Everything the audit command checks on one catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub engine_version: String,
    pub seed: u64,
    pub algebra: String,
    pub d: usize,
    pub objects: Vec<Vec<usize>>,
    pub masod: MasodReport,
    pub bijections: Bijections,
    pub tilting: TiltingAudit,
    /// Failures of the torsion and torsion-free class checks, per module.
    pub torsion_failures: Vec<String>,
    pub almost_directed: bool,
    /// Checks on sequences of indecomposables, run only on almost-directed pairs.
    pub sequence_failures: Option<Vec<String>>,
    pub idempotent_ideal_failures: Vec<Vec<usize>>,
    /// Ordered pairs `(M, N)` with `dim Hom(M, τ_d N) ≠ dim Ext^d(N, M)`.
    pub duality_failures: Vec<(usize, usize)>,
    /// `None` when the catalog is larger than the probe cap.
    pub probe: Option<ConjectureProbe>,
}

impl AuditReport {
    pub fn holds(&self) -> bool {
        self.masod.holds()
            && self.bijections.are_permutations()
            && self.tilting.holds()
            && self.torsion_failures.is_empty()
            && self.sequence_failures.as_ref().is_none_or(Vec::is_empty)
            && self.idempotent_ideal_failures.is_empty()
            && self.duality_failures.is_empty()
    }

    /// The first failed statement.
    pub fn witness(&self) -> Option<String> {
        if let Some(f) = self.masod.failures.first() {
            return Some(f.clone());
        }
        if !self.bijections.are_permutations() {
            return Some(format!("inverse maps are not permutations: {:?}", self.bijections));
        }
        if let Some(f) = self.tilting.failures.first() {
            return Some(f.clone());
        }
        if let Some(f) = self.torsion_failures.first() {
            return Some(f.clone());
        }
        if let Some(f) = self.sequence_failures.as_ref().and_then(|s| s.first()) {
            return Some(f.clone());
        }
        if let Some(k) = self.idempotent_ideal_failures.first() {
            return Some(format!("idempotent killing {k:?} violates the ideal corollary"));
        }
        if let Some((m, n)) = self.duality_failures.first() {
            return Some(format!("Hom(M, τ_d N) and Ext^d(N, M) differ for objects {m}, {n}"));
        }
        None
    }
}

fn position(list: &[Vec<usize>], t: &[usize]) -> Option<usize> {
    list.iter().position(|x| x == t)
}

/// Runs every audit on a catalog and its support-tilting list.
pub fn full_audit(ctx: &TiltingContext, list: &[TiltingVerdict], probe_cap: Option<usize>, seed: u64) -> Result<AuditReport> {
    let cat = ctx.cat;
    let seqs = cat.d_exact_sequences()?;
    let masod = masod_audit(ctx, &seqs, list)?;
    let tilting = &masod.tilting;
    let bijections = Bijections {
        torsion: masod.torsion_classes.iter().map(|c| position(tilting, &ext_projectives(cat, c))).collect(),
        resonant: masod
            .resonant_collections
            .iter()
            .map(|w| position(tilting, &ext_projectives(cat, &fac_cap_c(&ctx.trace, &union_of(w)))))
            .collect(),
        torsion_free: masod.torsion_free_classes.iter().map(|c| position(tilting, &ext_injectives(cat, c))).collect(),
        coresonant: masod
            .coresonant_collections
            .iter()
            .map(|w| position(tilting, &ext_injectives(cat, &sub_cap_c(&ctx.trace, &union_of(w)))))
            .collect(),
    };
    let tilting_audit = audit_tilting(ctx, &seqs, list)?;
    let mut torsion_failures = Vec::new();
    for t in tilting {
        let r = torsion_report(ctx, &seqs, t);
        if !(r.axioms.holds() && r.round_trip && r.characterization && r.sequences.iter().all(|s| s.exact)) {
            torsion_failures.push(format!("{t:?}: torsion class checks fail {:?}", r.axioms.witnesses));
        }
        let f = torsion_free_report(ctx, &seqs, t);
        if !(f.axioms.holds() && f.round_trip && f.characterization && f.sequences.iter().all(|s| s.exact)) {
            torsion_failures.push(format!("{t:?}: torsion-free class checks fail {:?}", f.axioms.witnesses));
        }
    }
    let almost_directed = is_almost_directed_with(cat, &ctx.table)?.holds;
    let sequence_failures = if almost_directed { Some(audit_sequences(ctx, &seqs, list)?) } else { None };
    let idempotent_ideal_failures = idempotent_ideal_failures(&ctx.table, cat.d);
    let mut duality_failures = Vec::new();
    for m in 0..cat.len() {
        for n in 0..cat.len() {
            if !hom_tau_ext_check(cat.d, &cat.objects[m], &cat.objects[n])? {
                duality_failures.push((m, n));
            }
        }
    }
    let probe = match conjecture_probe(ctx, &seqs, probe_cap) {
        Ok(p) => Some(p),
        Err(Error::CapExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(AuditReport {
        engine_version: ENGINE_VERSION.to_string(),
        seed,
        algebra: cat.algebra.digest(),
        d: cat.d,
        objects: cat.objects.iter().map(|o| o.dim_vector().to_vec()).collect(),
        masod,
        bijections,
        tilting: tilting_audit,
        torsion_failures,
        almost_directed,
        sequence_failures,
        idempotent_ideal_failures,
        duality_failures,
        probe,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArtifactKind {
    Catalog,
    Tilting,
    Report,
}

impl ArtifactKind {
    fn name(self) -> &'static str {
        match self {
            ArtifactKind::Catalog => "catalog",
            ArtifactKind::Tilting => "tilting",
            ArtifactKind::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub algebra: String,
    pub d: usize,
    pub kind: ArtifactKind,
    pub engine_version: String,
    pub payload: serde_json::Value,
}

/// Computed artifacts keyed by algebra digest, `d` and kind.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, digest: &str, d: usize, kind: ArtifactKind) -> PathBuf {
        self.dir.join(format!("{digest}-d{d}-{}.json", kind.name()))
    }

    /// The cached payload, if present and written by this engine version.
    ///
    /// A present entry that does not parse is an error.
    pub fn get<T: DeserializeOwned>(&self, digest: &str, d: usize, kind: ArtifactKind) -> Result<Option<T>> {
        let path = self.path(digest, d, kind);
        let Ok(text) = fs::read_to_string(&path) else { return Ok(None) };
        let bad = |e: serde_json::Error| Error::InvalidInput(format!("{}: {e}", path.display()));
        let entry: CacheEntry = serde_json::from_str(&text).map_err(bad)?;
        if entry.engine_version != ENGINE_VERSION {
            return Ok(None);
        }
        if entry.algebra != digest || entry.d != d || entry.kind != kind {
            return Err(Error::InvalidInput(format!("{}: entry does not match its key", path.display())));
        }
        serde_json::from_value(entry.payload).map(Some).map_err(bad)
    }

    pub fn put<T: Serialize>(&self, digest: &str, d: usize, kind: ArtifactKind, payload: &T) -> Result<()> {
        let entry = CacheEntry {
            algebra: digest.to_string(),
            d,
            kind,
            engine_version: ENGINE_VERSION.to_string(),
            payload: serde_json::to_value(payload).expect("serializable payload"),
        };
        write_json(&self.path(digest, d, kind), &entry)
    }
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    write_text(path, &text)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

/// The catalog for `algebra` at `d`, from the cache when a valid entry exists.
pub fn cached_catalog(cache: Option<&Cache>, algebra: &Algebra, d: usize, orbit_cap: Option<usize>, seed: u64) -> Result<CtCatalog> {
    let digest = algebra.digest();
    if let Some(cache) = cache {
        if let Some(file) = cache.get::<CatalogFile>(&digest, d, ArtifactKind::Catalog)? {
            return file.load();
        }
    }
    let cat = build_ct_catalog(algebra, d, orbit_cap)?;
    if let Some(cache) = cache {
        cache.put(&digest, d, ArtifactKind::Catalog, &CatalogFile::new(&cat, seed)?)?;
    }
    Ok(cat)
}

/// The support-tilting list of a catalog, from the cache when a valid entry exists.
pub fn cached_tilting(cache: Option<&Cache>, ctx: &TiltingContext, subset_cap: Option<usize>, seed: u64) -> Result<TiltingFile> {
    let cat = ctx.cat;
    let digest = cat.algebra.digest();
    if let Some(cache) = cache {
        if let Some(file) = cache.get::<TiltingFile>(&digest, cat.d, ArtifactKind::Tilting)? {
            return Ok(file);
        }
    }
    let file = TiltingFile::new(cat, ctx.enumerate_proper_support_d_tilting(subset_cap)?, seed);
    if let Some(cache) = cache {
        cache.put(&digest, cat.d, ArtifactKind::Tilting, &file)?;
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CtCatalog {
        let a: Algebra = Arc::new(BoundQuiverAlgebra::linear_an(3, None).unwrap());
        build_ct_catalog(&a, 1, None).unwrap()
    }

    #[test]
    fn catalog_file_round_trips() {
        let cat = a3();
        let file = CatalogFile::new(&cat, DEFAULT_SEED).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: CatalogFile = serde_json::from_str(&text).unwrap();
        let again = back.load().unwrap();
        assert_eq!(again.to_json(), cat.to_json());
    }

    #[test]
    fn tampered_tables_are_rejected() {
        let cat = a3();
        let mut file = CatalogFile::new(&cat, DEFAULT_SEED).unwrap();
        file.tables.hom[0][0] = 7;
        assert!(matches!(file.load(), Err(Error::InvalidInput(_))));
        let mut file = CatalogFile::new(&cat, DEFAULT_SEED).unwrap();
        file.objects.pop();
        assert!(file.load().is_err());
    }

    #[test]
    fn dot_edges_parse_back() {
        let cat = a3();
        let ctx = TiltingContext::new(&cat).unwrap();
        let file = TiltingFile::new(&cat, ctx.enumerate_proper_support_d_tilting(None).unwrap(), DEFAULT_SEED);
        let lattice = Lattice { nodes: file.torsion_classes.clone(), edges: file.lattice_edges.clone() };
        let dot = lattice_dot(&cat, &file.tilting(), &lattice);
        assert_eq!(parse_dot_edges(&dot).unwrap(), file.lattice_edges);
        // support-tilting modules over A_3 are counted by the Catalan number 14
        assert_eq!(file.verdicts.len(), 14);
    }

    #[test]
    fn stale_cache_entries_are_ignored() {
        let dir = std::env::temp_dir().join(format!("hitt-cache-{}", std::process::id()));
        let cache = Cache::new(&dir);
        cache.put("abc", 1, ArtifactKind::Report, &vec![1, 2, 3]).unwrap();
        assert_eq!(cache.get::<Vec<i32>>("abc", 1, ArtifactKind::Report).unwrap(), Some(vec![1, 2, 3]));
        let path = cache.path("abc", 1, ArtifactKind::Report);
        let text = fs::read_to_string(&path).unwrap().replace(ENGINE_VERSION, "0.0.0-old");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.get::<Vec<i32>>("abc", 1, ArtifactKind::Report).unwrap(), None);
        fs::remove_dir_all(&dir).unwrap();
    }

    fn subsets_of(n: usize) -> impl proptest::strategy::Strategy<Value = Vec<Vec<usize>>> {
        use proptest::prelude::*;
        proptest::collection::btree_set(proptest::collection::btree_set(0..n, 0..=n), 0..10)
            .prop_map(|family| family.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(32))]
        #[test]
        fn dot_round_trip(nodes in subsets_of(6)) {
            let cat = a3();
            let lattice = crate::wide::inclusion_lattice(nodes.clone());
            let dot = lattice_dot(&cat, &nodes, &lattice);
            proptest::prop_assert_eq!(parse_dot_edges(&dot).unwrap(), lattice.edges);
        }
    }
}
