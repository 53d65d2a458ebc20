//! End-to-end verification runs and their reports.
//!
//! Every section records named checks. A failing check never aborts the run:
//! the remaining sections still execute and the report says what failed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::catalog::graph;
use crate::enumerate::{admissible_profiles, generate, ProfilePair};
use crate::error::PipelineError;
use crate::graph::{
    bipartition, canonical_form, distances_from, BipartiteGraph, CanonicalForm, MultiGraph,
};
use crate::graph6;
use crate::lemmas::{verify_all_lemmas, LemmaReport};
use crate::moves::{family_closure, nabla_closure, one_step_minors, vertex_splits, FamilyClosure};
use crate::planarity::{has_minor, is_planar, MinorQuery, DEFAULT_BUDGET};
use crate::reduction::{obstruction_scan, reduce, rule, Rule};
use crate::store::{store_closure, write_records, Record};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selection {
    All,
    Main3,
    Deg6,
    Families,
    Lemmas,
    Minimality,
}

impl Selection {
    fn includes(self, other: Selection) -> bool {
        self == Selection::All || self == other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
    /// Expansion cap for every minor search.
    pub budget: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            threads: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        status: Status::from_bool(ok),
        detail: detail.into(),
    }
}

/// Evidence that one candidate is not intrinsically knotted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub profile: String,
    /// Lexicographically smallest eliminating pair.
    pub pair: [usize; 2],
    pub reduced_edges: usize,
    pub rule: Rule,
    pub trace_digest: String,
}

impl Certificate {
    /// Re-runs the reduction and confirms every recorded field.
    pub fn replay(&self) -> Result<(), String> {
        let g = graph6::decode(&self.graph6).map_err(|e| e.to_string())?;
        let [a, b] = self.pair;
        let r = reduce(&g, a, b).map_err(|e| e.to_string())?;
        if r.edge_count != self.reduced_edges {
            return Err(format!("reduced to {} edges, certificate says {}", r.edge_count, self.reduced_edges));
        }
        if r.trace_digest() != self.trace_digest {
            return Err("trace digest differs".into());
        }
        if rule(&r) != Some(self.rule) {
            return Err(format!("rule {:?} does not reproduce", self.rule));
        }
        if !is_planar(&r.reduced) {
            return Err("reduced graph is not planar".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub graph6: String,
    pub canonical: String,
    pub profile: String,
    /// Catalog name of the isomorphic named graph, if any.
    pub identified_as: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileTally {
    pub profile: String,
    pub candidates: usize,
    pub eliminated: usize,
    pub survivors: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounts {
    pub edge_count: usize,
    pub embedding: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSection {
    pub candidates: usize,
    pub eliminated: usize,
    pub rules: RuleCounts,
    pub profiles: Vec<ProfileTally>,
    pub survivors: Vec<Survivor>,
    /// SHA-256 over the certificates' JSON lines, in order.
    pub certificate_digest: String,
    pub certificates: Vec<Certificate>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySize {
    pub seed: String,
    pub members: usize,
    pub expected: usize,
    pub simplified_moves: usize,
    /// Bipartite members, by catalog name where one matches, else graph6.
    pub bipartite: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesSection {
    pub families: Vec<FamilySize>,
    pub nabla_descendants_of_k7: usize,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalitySection {
    pub ks_graphs: usize,
    pub splits_examined: usize,
    /// Bipartite splits of KS graphs, as graph6.
    pub bipartite_splits: Vec<String>,
    pub one_step_minors: usize,
    pub distance_three_chords: usize,
    pub chord_classes: usize,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmasSection {
    pub reports: Vec<LemmaReport>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool_version: String,
    pub selection: Selection,
    pub config: Config,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub main3: Option<ScanSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deg6: Option<ScanSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub families: Option<FamiliesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmasSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimality: Option<MinimalitySection>,
    /// Wall-clock milliseconds per section.
    pub timings: BTreeMap<String, u64>,
}

impl VerificationReport {
    /// Every check, prefixed with its section name.
    pub fn checks(&self) -> Vec<(String, &Check)> {
        let sections: [(&str, Option<&[Check]>); 5] = [
            ("main3", self.main3.as_ref().map(|s| s.checks.as_slice())),
            ("deg6", self.deg6.as_ref().map(|s| s.checks.as_slice())),
            ("families", self.families.as_ref().map(|s| s.checks.as_slice())),
            ("lemmas", self.lemmas.as_ref().map(|s| s.checks.as_slice())),
            ("minimality", self.minimality.as_ref().map(|s| s.checks.as_slice())),
        ];
        sections
            .into_iter()
            .flat_map(|(name, checks)| {
                checks
                    .unwrap_or_default()
                    .iter()
                    .map(move |c| (format!("{name}.{}", c.name), c))
            })
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for (name, c) in self.checks() {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(s, "{tag} {name}: {}", c.detail);
        }
        let _ = writeln!(s, "{}", if self.passed { "all checks passed" } else { "some checks FAILED" });
        s
    }
}

/// Runs the selected sections, inside a dedicated pool when a thread count
/// is configured.
pub fn run(selection: Selection, config: &Config) -> Result<VerificationReport, PipelineError> {
    match config.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| PipelineError::ThreadPool(e.to_string()))?;
            Ok(pool.install(|| run_sections(selection, config)))
        }
        None => Ok(run_sections(selection, config)),
    }
}

fn run_sections(selection: Selection, config: &Config) -> VerificationReport {
    let mut timings = BTreeMap::new();
    let mut timed = |name: &str, f: &mut dyn FnMut()| {
        let t = Instant::now();
        f();
        timings.insert(name.to_string(), t.elapsed().as_millis() as u64);
    };
    let (mut main3, mut deg6, mut families, mut lemmas, mut minimality) = (None, None, None, None, None);
    if selection.includes(Selection::Main3) {
        timed("main3", &mut || main3 = Some(verify_main3(config)));
    }
    if selection.includes(Selection::Deg6) {
        timed("deg6", &mut || deg6 = Some(verify_deg6()));
    }
    if selection.includes(Selection::Families) {
        timed("families", &mut || families = Some(verify_families()));
    }
    if selection.includes(Selection::Lemmas) {
        timed("lemmas", &mut || lemmas = Some(verify_lemmas()));
    }
    if selection.includes(Selection::Minimality) {
        timed("minimality", &mut || minimality = Some(verify_minimality_and_splits(config)));
    }
    let mut report = VerificationReport {
        schema: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        selection,
        config: config.clone(),
        passed: false,
        main3,
        deg6,
        families,
        lemmas,
        minimality,
        timings,
    };
    report.passed = report.checks().iter().all(|(_, c)| c.status == Status::Pass);
    report
}

enum Outcome {
    Eliminated(Certificate),
    Survived(Survivor),
}

fn catalog_match(form: &CanonicalForm) -> Option<String> {
    crate::catalog::NAMES
        .iter()
        .find(|n| &canonical_form(&graph(n)) == form)
        .map(|n| n.to_string())
}

fn examine(pair: &ProfilePair, g: &BipartiteGraph) -> Outcome {
    let g = g.graph();
    let g6 = graph6::encode(g).expect("candidates are simple");
    match obstruction_scan(g) {
        Some(e) => Outcome::Eliminated(Certificate {
            graph6: g6,
            profile: pair.to_string(),
            pair: [e.pair.0, e.pair.1],
            reduced_edges: e.result.edge_count,
            rule: rule(&e.result).expect("eliminating pair has a rule"),
            trace_digest: e.result.trace_digest(),
        }),
        None => {
            let form = canonical_form(g);
            Outcome::Survived(Survivor {
                graph6: g6,
                canonical: form.to_hex(),
                profile: pair.to_string(),
                identified_as: catalog_match(&form),
            })
        }
    }
}

/// Enumerates and scans the given profiles. Output order follows `pairs`,
/// then generation order within each profile.
pub fn scan_profiles(pairs: &[ProfilePair]) -> (Vec<ProfileTally>, Vec<Certificate>, Vec<Survivor>) {
    let per_profile: Vec<(ProfileTally, Vec<Outcome>)> = pairs
        .par_iter()
        .map(|p| {
            let outcomes: Vec<Outcome> = generate(p).par_iter().map(|g| examine(p, g)).collect();
            let survivors = outcomes.iter().filter(|o| matches!(o, Outcome::Survived(_))).count();
            let tally = ProfileTally {
                profile: p.to_string(),
                candidates: outcomes.len(),
                eliminated: outcomes.len() - survivors,
                survivors,
            };
            (tally, outcomes)
        })
        .collect();
    let mut tallies = Vec::new();
    let mut certs = Vec::new();
    let mut survivors = Vec::new();
    for (t, outcomes) in per_profile {
        tallies.push(t);
        for o in outcomes {
            match o {
                Outcome::Eliminated(c) => certs.push(c),
                Outcome::Survived(s) => survivors.push(s),
            }
        }
    }
    (tallies, certs, survivors)
}

fn scan_section(pairs: &[ProfilePair]) -> ScanSection {
    let (profiles, certificates, survivors) = scan_profiles(pairs);
    let mut rules = RuleCounts::default();
    let mut hasher = Sha256::new();
    for c in &certificates {
        match c.rule {
            Rule::EdgeCount => rules.edge_count += 1,
            Rule::Embedding => rules.embedding += 1,
        }
        hasher.update(serde_json::to_vec(c).expect("certificate serializes"));
        hasher.update(b"\n");
    }
    let candidates = profiles.iter().map(|t| t.candidates).sum();
    let failures: Vec<String> = certificates
        .par_iter()
        .filter_map(|c| c.replay().err().map(|e| format!("{}: {e}", c.graph6)))
        .collect();
    let checks = vec![
        check(
            "partition",
            certificates.len() + survivors.len() == candidates,
            format!("{} eliminated + {} survivors of {candidates}", certificates.len(), survivors.len()),
        ),
        check(
            "certificates_replay",
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} certificates reproduce", certificates.len())
            } else {
                failures.join("; ")
            },
        ),
    ];
    ScanSection {
        candidates,
        eliminated: certificates.len(),
        rules,
        profiles,
        survivors,
        certificate_digest: hex::encode(hasher.finalize()),
        certificates,
        checks,
    }
}

fn tally<'a>(s: &'a ScanSection, pair: &ProfilePair) -> Option<&'a ProfileTally> {
    let name = pair.to_string();
    s.profiles.iter().find(|t| t.profile == name)
}

/// Every connected candidate with degrees 3 to 5 is scanned; the survivors
/// must be exactly the two cousins.
pub fn verify_main3(config: &Config) -> ScanSection {
    let mut s = scan_section(&admissible_profiles(5));
    let names: BTreeSet<Option<String>> = s.survivors.iter().map(|v| v.identified_as.clone()).collect();
    let expected: BTreeSet<Option<String>> = [Some("cousin89".to_string()), Some("cousin110".to_string())].into();
    let listing = s.survivors.iter().map(|v| v.graph6.as_str()).collect::<Vec<_>>().join(" ");
    s.checks.push(check("survivor_count", s.survivors.len() == 2, format!("{} survivors: {listing}", s.survivors.len())));
    s.checks.push(check(
        "survivors_are_cousins",
        s.survivors.len() == 2 && names == expected,
        format!("identified as {names:?}"),
    ));
    let heawood = graph("heawood");
    let minor = s
        .survivors
        .iter()
        .find(|v| v.identified_as.as_deref() == Some("cousin89"))
        .map(|v| {
            let g = graph6::decode(&v.graph6).expect("own output");
            has_minor(&MinorQuery::new(g, heawood.clone()).with_budget(config.budget))
        });
    s.checks.push(check(
        "cousin89_has_heawood_minor",
        matches!(minor, Some(Ok(true))),
        format!("{minor:?}"),
    ));
    let c311 = ProfilePair::new("3,1,1".parse().unwrap(), "3,1,1".parse().unwrap());
    let forced = tally(&s, &c311).cloned();
    let ok = forced.as_ref().is_some_and(|t| t.candidates == 1 && t.survivors == 1)
        && s.survivors.iter().any(|v| v.profile == c311.to_string() && v.identified_as.as_deref() == Some("cousin110"));
    s.checks.push(check("forced_311_is_cousin110", ok, format!("{forced:?}")));
    let c230 = ProfilePair::new("2,3,0".parse().unwrap(), "2,3,0".parse().unwrap());
    let forced = tally(&s, &c230).cloned();
    let ok = forced.as_ref().is_some_and(|t| t.candidates == 1 && t.eliminated == 1);
    s.checks.push(check("forced_230_eliminated", ok, format!("{forced:?}")));
    s
}

/// Candidates with a vertex of degree 6 or 7 are all eliminated.
pub fn verify_deg6() -> ScanSection {
    let pairs: Vec<ProfilePair> = admissible_profiles(7).into_iter().filter(|p| p.has_high_degree()).collect();
    let mut s = scan_section(&pairs);
    s.checks.push(check(
        "no_survivors",
        s.survivors.is_empty(),
        format!("{} candidates, {} survivors", s.candidates, s.survivors.len()),
    ));
    let mut bad = Vec::new();
    for c in &s.certificates {
        let g = BipartiteGraph::from_graph(graph6::decode(&c.graph6).expect("own output")).expect("bipartite");
        for side in [g.part_a(), g.part_b()] {
            if side.iter().any(|&v| g.graph().degree(v) == 7) {
                let other = g.order() - side.len();
                if other != 7 {
                    bad.push(c.graph6.clone());
                }
            }
        }
    }
    s.checks.push(check(
        "degree7_opposite_part_has_seven",
        bad.is_empty(),
        if bad.is_empty() { "holds".to_string() } else { bad.join(" ") },
    ));
    let max = s.certificates.iter().map(|c| c.reduced_edges).max().unwrap_or(0);
    s.checks.push(check(
        "edge_count_rule_suffices",
        s.rules.embedding == 0,
        format!("largest eliminating reduction has {max} edges"),
    ));
    s
}

fn bipartite_members(c: &FamilyClosure) -> Vec<String> {
    c.members
        .iter()
        .filter(|m| bipartition(&m.graph).is_some())
        .map(|m| catalog_match(&m.form).unwrap_or_else(|| graph6::encode(&m.graph).expect("simple")))
        .collect()
}

/// Closure sizes and bipartite members of the three families.
pub fn verify_families() -> FamiliesSection {
    verify_families_with(|_, _| Ok(())).expect("no sink errors")
}

/// [`verify_families`], handing each closure to `sink` as it is built.
pub fn verify_families_with(
    mut sink: impl FnMut(&str, &FamilyClosure) -> Result<(), PipelineError>,
) -> Result<FamiliesSection, PipelineError> {
    let mut families = Vec::new();
    let mut checks = Vec::new();
    let mut k7_forms = BTreeSet::new();
    for (seed, expected, bip) in [
        ("k7", 20, vec!["heawood"]),
        ("k3311", 58, vec![]),
        ("cousin110", 110, vec!["cousin110", "cousin89"]),
    ] {
        let c = family_closure(&graph(seed));
        sink(seed, &c)?;
        let mut bipartite = bipartite_members(&c);
        bipartite.sort();
        let mut want: Vec<String> = bip.iter().map(|s| s.to_string()).collect();
        want.sort();
        checks.push(check(
            &format!("{seed}_family_size"),
            c.len() == expected,
            format!("{} members (expected {expected}), {} simplified Y-delta moves skipped", c.len(), c.simplified_moves),
        ));
        checks.push(check(&format!("{seed}_bipartite_members"), bipartite == want, format!("{bipartite:?}")));
        if seed == "k7" {
            k7_forms = c.forms();
        }
        families.push(FamilySize {
            seed: seed.to_string(),
            members: c.len(),
            expected,
            simplified_moves: c.simplified_moves,
            bipartite,
        });
    }
    let ks = nabla_closure(&graph("k7"));
    sink("k7_nabla", &ks)?;
    checks.push(check("k7_nabla_descendants", ks.len() == 14, format!("{} graphs", ks.len())));
    checks.push(check(
        "nabla_descendants_within_family",
        ks.forms().is_subset(&k7_forms),
        "every descendant is a cousin of K7",
    ));
    Ok(FamiliesSection {
        families,
        nabla_descendants_of_k7: ks.len(),
        checks,
    })
}

pub fn verify_lemmas() -> LemmasSection {
    let reports = verify_all_lemmas();
    let checks = reports
        .iter()
        .map(|r| {
            let detail = if r.passed() {
                format!("{} graphs, {} witnesses", r.universe, r.witnesses.len())
            } else {
                format!("{} graphs, exceptions: {}", r.universe, r.exceptions.join(" "))
            };
            check(&r.id, r.passed(), detail)
        })
        .collect();
    LemmasSection { reports, checks }
}

/// Vertex splits of the 21-edge minor-minimal graphs, minors of Cousin 110,
/// and the chords of the Heawood graph.
pub fn verify_minimality_and_splits(config: &Config) -> MinimalitySection {
    let ks = nabla_closure(&graph("k7"));
    let mut splits_examined = 0;
    let mut bipartite_splits = Vec::new();
    let mut bipartite_degree_two = Vec::new();
    for m in &ks.members {
        for v in 0..m.graph.order() {
            for s in vertex_splits(&m.graph, v) {
                splits_examined += 1;
                if bipartition(&s).is_none() {
                    continue;
                }
                let g6 = graph6::encode(&s).expect("simple");
                let copy = s.order() - 1;
                if s.degree(v).min(s.degree(copy)) == 2 {
                    bipartite_degree_two.push(g6.clone());
                }
                bipartite_splits.push(g6);
            }
        }
    }
    let named = |list: &[String]| -> Vec<String> {
        list.iter()
            .map(|g6| {
                let g = graph6::decode(g6).expect("own output");
                match catalog_match(&canonical_form(&g)) {
                    Some(n) => format!("{g6} ({n})"),
                    None => g6.clone(),
                }
            })
            .collect()
    };
    let mut checks = vec![
        check(
            "no_bipartite_split",
            bipartite_splits.is_empty(),
            format!(
                "{splits_examined} splits of {} graphs, bipartite: {:?}",
                ks.len(),
                named(&bipartite_splits)
            ),
        ),
        check(
            "no_bipartite_split_with_degree_two_vertex",
            bipartite_degree_two.is_empty(),
            format!("bipartite: {:?}", named(&bipartite_degree_two)),
        ),
    ];

    let c110 = graph("cousin110");
    let heawood = graph("heawood");
    let minor = has_minor(&MinorQuery::new(c110.clone(), heawood.clone()).with_budget(config.budget));
    checks.push(check("cousin110_no_heawood_minor", minor == Ok(false), format!("{minor:?}")));
    let ks_forms = ks.forms();
    let minors = one_step_minors(&c110);
    let hits: Vec<&MultiGraph> = minors.iter().filter(|h| ks_forms.contains(&canonical_form(h))).collect();
    let describe = |hs: &[&MultiGraph]| -> Vec<String> {
        hs.iter()
            .map(|h| format!("{} ({} vertices, bipartite: {})", graph6::encode(h).unwrap_or_default(), h.order(), bipartition(h).is_some()))
            .collect()
    };
    checks.push(check(
        "cousin110_one_step_minors_not_ks",
        hits.is_empty(),
        format!("{} one-step minors, KS: {:?}", minors.len(), describe(&hits)),
    ));
    let bipartite_hits: Vec<&MultiGraph> = hits.iter().copied().filter(|h| bipartition(h).is_some()).collect();
    checks.push(check(
        "cousin110_bipartite_one_step_minors_not_ks",
        bipartite_hits.is_empty(),
        format!("{:?}", describe(&bipartite_hits)),
    ));

    let c89 = canonical_form(&graph("cousin89"));
    let mut chords = 0;
    let mut classes = BTreeSet::new();
    for u in 0..heawood.order() {
        let dist = distances_from(&heawood, u);
        for v in u + 1..heawood.order() {
            if dist[v] == Some(3) {
                chords += 1;
                classes.insert(canonical_form(&heawood.with_edge(u, v).expect("non-adjacent")));
            }
        }
    }
    checks.push(check(
        "heawood_chords_are_cousin89",
        chords > 0 && classes.len() == 1 && classes.contains(&c89),
        format!("{chords} chords, {} classes", classes.len()),
    ));
    MinimalitySection {
        ks_graphs: ks.len(),
        splits_examined,
        bipartite_splits,
        one_step_minors: minors.len(),
        distance_three_chords: chords,
        chord_classes: classes.len(),
        checks,
    }
}

/// Writes `report.json`, certificate and survivor files, and the family
/// closures into `dir`.
pub fn write_outputs(report: &VerificationReport, dir: &Path) -> Result<(), PipelineError> {
    std::fs::create_dir_all(dir)?;
    for (name, section) in [("main3", &report.main3), ("deg6", &report.deg6)] {
        let Some(s) = section else { continue };
        let certs: Vec<Record> = s
            .certificates
            .iter()
            .map(|c| {
                let g = graph6::decode(&c.graph6).expect("own output");
                Ok(Record::new(&g, serde_json::to_value(c)?))
            })
            .collect::<Result<_, serde_json::Error>>()?;
        write_records(&dir.join(format!("certificates_{name}.jsonl")), &certs)?;
        let survivors: Vec<Record> = s
            .survivors
            .iter()
            .map(|v| {
                let g = graph6::decode(&v.graph6).expect("own output");
                Ok(Record::new(&g, serde_json::to_value(v)?))
            })
            .collect::<Result<_, serde_json::Error>>()?;
        write_records(&dir.join(format!("survivors_{name}.jsonl")), &survivors)?;
    }
    if report.families.is_some() {
        verify_families_with(|seed, c| Ok(store_closure(&dir.join(format!("closure_{seed}.jsonl")), c)?))?;
    }
    let tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer_pretty(std::io::BufWriter::new(tmp.as_file()), report)?;
    tmp.persist(dir.join("report.json")).map_err(|e| e.error)?;
    Ok(())
}

/// The closure of a seed given by catalog name or graph6.
pub fn closure_of(seed: &str) -> Result<FamilyClosure, String> {
    let g: MultiGraph = match crate::catalog::named(seed) {
        Ok(e) => e.graph,
        Err(_) => graph6::decode(seed).map_err(|e| format!("{seed:?} is neither a catalog name nor graph6: {e}"))?,
    };
    Ok(family_closure(&g))
}
