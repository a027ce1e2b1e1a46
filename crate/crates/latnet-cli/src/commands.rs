//! Implementations of the subcommands: input loading, computation via the
//! `latnet` library, and manifest-referencing CSV/JSON output.

use crate::manifest::RunManifest;
use crate::{CliError, MeasureArg, SingleMeasure};
use latnet::arcpaths::{self, ArcPathError};
use latnet::evolve::{self, EvolutionConfig, EvolutionRun, EvolveError};
use latnet::net::{self, DirectedNetwork, NetError, RngSeed};
use latnet::netstats::{self, StatsError};
use latnet::presheaf::{self, DualStructure, FreeCategory, PresheafError, Representation};
use serde::Deserialize;
use serde_json::json;
use std::fs;
use std::path::{Path, PathBuf};

impl From<NetError> for CliError {
    fn from(e: NetError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ArcPathError> for CliError {
    fn from(e: ArcPathError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<EvolveError> for CliError {
    fn from(e: EvolveError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PresheafError> for CliError {
    fn from(e: PresheafError) -> Self {
        match e {
            PresheafError::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            PresheafError::InvalidStructure(_) => CliError::Input(e.to_string()),
        }
    }
}

/// Read and parse an edge list, applying `--exclude` if given. Returns the
/// raw bytes too, for manifest digests.
fn load_network(path: &Path, exclude: &[String]) -> Result<(Vec<u8>, DirectedNetwork), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Input(format!("{} is not valid UTF-8", path.display())))?;
    let mut g = net::parse_edge_list(&text, false)?;
    if !exclude.is_empty() {
        g = g.exclude_nodes(exclude);
    }
    Ok((bytes, g))
}

/// Manifest path next to a single output file: `<file>.manifest.json`.
fn sibling_manifest(out: &Path) -> PathBuf {
    let name = out
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    out.with_file_name(format!("{name}.manifest.json"))
}

fn manifest_ref(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// centrality
// ---------------------------------------------------------------------------

pub fn centrality(
    input: &Path,
    measure: MeasureArg,
    out: &Path,
    scatter: Option<&Path>,
    exclude: &[String],
) -> Result<(), CliError> {
    if scatter.is_some() && measure != MeasureArg::Both {
        return Err(CliError::Input(
            "--scatter needs --measure both".into(),
        ));
    }
    let (bytes, g) = load_network(input, exclude)?;
    if g.arc_count() < 2 {
        return Err(CliError::Input(
            "centrality needs at least 2 arcs".into(),
        ));
    }
    let lbc = matches!(measure, MeasureArg::Lbc | MeasureArg::Both)
        .then(|| arcpaths::betweenness(&arcpaths::lateral_metric(&g)));
    let dbc = matches!(measure, MeasureArg::Dbc | MeasureArg::Both)
        .then(|| arcpaths::betweenness(&arcpaths::directed_metric(&g)));
    for (name, report) in [("lateral", &lbc), ("directed", &dbc)] {
        if let Some(r) = report {
            if r.zero_normalizer {
                eprintln!("warning: {name} normalizer is zero; all values are 0");
            }
        }
    }
    let manifest_path = sibling_manifest(out);
    let manifest = RunManifest::new("centrality")
        .flag(
            "measure",
            match measure {
                MeasureArg::Lbc => "lbc",
                MeasureArg::Dbc => "dbc",
                MeasureArg::Both => "both",
            },
        )
        .flag("out", out.display())
        .flag(
            "scatter",
            scatter.map(|p| p.display().to_string()).unwrap_or_default(),
        )
        .flag("exclude", exclude.join(","))
        .input(input, &bytes);

    let mut csv = format!("# manifest: {}\n", manifest_ref(&manifest_path));
    let header = match measure {
        MeasureArg::Lbc => "arc_id,source,target,lbc",
        MeasureArg::Dbc => "arc_id,source,target,dbc",
        MeasureArg::Both => "arc_id,source,target,lbc,dbc",
    };
    csv.push_str(header);
    csv.push('\n');
    for (id, &(s, t)) in g.arcs().iter().enumerate() {
        csv.push_str(&format!("{id},{},{}", g.node_name(s), g.node_name(t)));
        if let Some(r) = &lbc {
            csv.push_str(&format!(",{}", r.values[id]));
        }
        if let Some(r) = &dbc {
            csv.push_str(&format!(",{}", r.values[id]));
        }
        csv.push('\n');
    }
    write_text(out, &csv)?;
    if let Some(sc) = scatter {
        let (l, d) = (lbc.as_ref().unwrap(), dbc.as_ref().unwrap());
        let mut csv = format!("# manifest: {}\n", manifest_ref(&manifest_path));
        csv.push_str("dbc,lbc\n");
        for id in 0..g.arc_count() {
            csv.push_str(&format!("{},{}\n", d.values[id], l.values[id]));
        }
        write_text(sc, &csv)?;
    }
    manifest.write(&manifest_path)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

pub fn compare(
    input: &Path,
    measure: SingleMeasure,
    replicas: usize,
    seed: u64,
    out_dir: &Path,
    self_reference: bool,
) -> Result<(), CliError> {
    let (bytes, g) = load_network(input, &[])?;
    if g.arc_count() < 2 {
        return Err(CliError::Input("compare needs at least 2 arcs".into()));
    }
    let metric = match measure {
        SingleMeasure::Lbc => arcpaths::lateral_metric(&g),
        SingleMeasure::Dbc => arcpaths::directed_metric(&g),
    };
    let report = arcpaths::betweenness(&metric);
    if report.zero_normalizer {
        eprintln!("warning: normalizer is zero; all centralities are 0");
    }
    let empirical = netstats::EmpiricalDistribution::from_samples(report.values.clone())?;
    let (reference, degenerate, exhausted) = if self_reference {
        (empirical.clone(), 0, 0)
    } else {
        let ens = netstats::ensemble_reference(
            &g,
            match measure {
                SingleMeasure::Lbc => netstats::Measure::Lbc,
                SingleMeasure::Dbc => netstats::Measure::Dbc,
            },
            replicas,
            RngSeed(seed),
        )?;
        (
            ens.distribution,
            ens.degenerate_replicas,
            ens.exhausted_replicas,
        )
    };
    let ks = netstats::ks_test(&empirical, &reference)?;

    fs::create_dir_all(out_dir)?;
    let manifest_path = out_dir.join("manifest.json");
    let manifest = RunManifest::new("compare")
        .flag(
            "measure",
            match measure {
                SingleMeasure::Lbc => "lbc",
                SingleMeasure::Dbc => "dbc",
            },
        )
        .flag("replicas", replicas)
        .flag("self_reference", self_reference)
        .seed(seed)
        .input(input, &bytes);
    let comment = format!("# manifest: {}\n", manifest_ref(&manifest_path));
    write_text(
        &out_dir.join("empirical_cdf.csv"),
        &format!("{comment}{}", empirical.to_csv()),
    )?;
    write_text(
        &out_dir.join("reference_cdf.csv"),
        &format!("{comment}{}", reference.to_csv()),
    )?;
    let ks_json = json!({
        "manifest": manifest_ref(&manifest_path),
        "measure": match measure { SingleMeasure::Lbc => "lbc", SingleMeasure::Dbc => "dbc" },
        "replicas": replicas,
        "self_reference": self_reference,
        "ks": ks,
        "degenerate_replicas": degenerate,
        "exhausted_replicas": exhausted,
    });
    write_text(
        &out_dir.join("ks.json"),
        &format!("{}\n", serde_json::to_string_pretty(&ks_json).unwrap()),
    )?;
    manifest.write(&manifest_path)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// evolve
// ---------------------------------------------------------------------------

fn parse_lambda_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = |m: &str| CliError::Input(format!("invalid --lambda-grid '{spec}': {m}"));
    let values: Vec<f64> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("range form is start:step:end"));
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(&e.to_string()))?;
        let (start, step, end) = (nums[0], nums[1], nums[2]);
        if step <= 0.0 || end < start {
            return Err(bad("need step > 0 and end >= start"));
        }
        let count = ((end - start) / step).round() as usize + 1;
        (0..count)
            .map(|i| (start + i as f64 * step).min(end))
            .collect()
    } else {
        spec.split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| bad(&e.to_string()))?
    };
    if values.is_empty() {
        return Err(bad("empty grid"));
    }
    if values.iter().any(|l| !(0.0..=1.0).contains(l)) {
        return Err(bad("lambda values must lie in [0, 1]"));
    }
    Ok(values)
}

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn evolve(
    n: usize,
    p: f64,
    lambda_grid: &str,
    replicas: usize,
    seed: u64,
    out: &Path,
    max_steps: Option<u64>,
) -> Result<(), CliError> {
    let grid = parse_lambda_grid(lambda_grid)?;
    if replicas < 1 {
        return Err(CliError::Input("--replicas must be >= 1".into()));
    }
    let runs_dir = out.join("runs");
    fs::create_dir_all(&runs_dir)?;

    let manifest_path = out.join("manifest.json");
    let manifest = RunManifest::new("evolve")
        .flag("n", n)
        .flag("p", p)
        .flag("lambda_grid", lambda_grid)
        .flag("replicas", replicas)
        .flag(
            "max_steps",
            max_steps.unwrap_or(evolve::DEFAULT_MAX_STEPS),
        )
        .seed(seed);
    // A matching manifest from an earlier (partial) run lets us reuse its
    // per-run files; a different manifest invalidates them.
    let resume = fs::read(&manifest_path)
        .ok()
        .and_then(|b| serde_json::from_slice::<RunManifest>(&b).ok())
        .map(|old| old.same_run(&manifest))
        .unwrap_or(false);

    let config_for = |li: usize, r: usize| -> Result<EvolutionConfig, CliError> {
        let mut cfg = EvolutionConfig::new(n, p, grid[li], RngSeed(seed).child(li as u64, r as u64))?;
        if let Some(ms) = max_steps {
            cfg = cfg.with_max_steps(ms);
        }
        Ok(cfg)
    };
    let run_path =
        |li: usize, r: usize| runs_dir.join(format!("lambda{li:02}_rep{r:03}.json"));
    let matches_config = |run: &EvolutionRun, cfg: &EvolutionConfig| {
        run.config.n == cfg.n
            && run.config.p == cfg.p
            && run.config.lambda == cfg.lambda
            && run.config.seed.0 == cfg.seed.0
            && run.config.max_steps == cfg.max_steps
    };

    let total = grid.len() * replicas;
    let mut runs: Vec<Option<EvolutionRun>> = vec![None; total];
    let mut missing: Vec<(usize, EvolutionConfig)> = Vec::new();
    for li in 0..grid.len() {
        for r in 0..replicas {
            let idx = li * replicas + r;
            let cfg = config_for(li, r)?;
            let reused = resume
                && fs::read(run_path(li, r))
                    .ok()
                    .and_then(|b| serde_json::from_slice::<EvolutionRun>(&b).ok())
                    .filter(|run| matches_config(run, &cfg))
                    .map(|run| runs[idx] = Some(run))
                    .is_some();
            if !reused {
                missing.push((idx, cfg));
            }
        }
    }
    let configs: Vec<EvolutionConfig> = missing.iter().map(|&(_, c)| c).collect();
    let computed = evolve::evolve_batch(&configs);
    for ((idx, _), result) in missing.iter().zip(computed) {
        let run = result?;
        let (li, r) = (idx / replicas, idx % replicas);
        write_text(
            &run_path(li, r),
            &format!("{}\n", serde_json::to_string_pretty(&run).unwrap()),
        )?;
        runs[*idx] = Some(run);
    }

    let comment = format!("# manifest: {}\n", manifest_ref(&manifest_path));
    let mut grid_csv = format!("{comment}lambda,replica,q_final,stop_reason,corr_lbc_dbc\n");
    let mut agg_csv =
        format!("{comment}lambda,replicas,mean_q,sd_q,corr_defined,mean_corr,sd_corr\n");
    for (li, &lambda) in grid.iter().enumerate() {
        let mut qs = Vec::with_capacity(replicas);
        let mut corrs = Vec::new();
        for r in 0..replicas {
            let run = runs[li * replicas + r].as_ref().expect("all runs present");
            let corr = evolve::lbc_dbc_correlation(&run.final_network)?;
            let reason = match run.stop_reason {
                evolve::StopReason::Stagnation => "stagnation",
                evolve::StopReason::StepCap => "step_cap",
            };
            let corr_str = corr.map(|c| c.to_string()).unwrap_or_default();
            grid_csv.push_str(&format!(
                "{lambda},{r},{},{reason},{corr_str}\n",
                run.final_q()
            ));
            qs.push(run.final_q());
            if let Some(c) = corr {
                corrs.push(c);
            }
        }
        let (mq, sq) = mean_sd(&qs);
        if corrs.is_empty() {
            agg_csv.push_str(&format!("{lambda},{replicas},{mq},{sq},0,,\n"));
        } else {
            let (mc, sc) = mean_sd(&corrs);
            agg_csv.push_str(&format!(
                "{lambda},{replicas},{mq},{sq},{},{mc},{sc}\n",
                corrs.len()
            ));
        }
    }
    write_text(&out.join("grid.csv"), &grid_csv)?;
    write_text(&out.join("aggregate.csv"), &agg_csv)?;
    manifest.write(&manifest_path)?;
    Ok(())
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

fn stat_value(result: Result<f64, StatsError>) -> (serde_json::Value, bool) {
    match result {
        Ok(v) => (json!({ "value": v }), true),
        Err(e) => (json!({ "value": null, "reason": e.to_string() }), false),
    }
}

pub fn stats(
    input: &Path,
    undirected: bool,
    out: Option<&Path>,
    exclude: &[String],
) -> Result<(), CliError> {
    let (bytes, g) = load_network(input, exclude)?;
    if g.node_count() == 0 {
        return Err(CliError::Input("network has no nodes".into()));
    }
    let und = net::undirected_projection(&g);
    let mut defined = 0usize;

    let (clustering, ok) = stat_value(netstats::global_clustering(&und));
    defined += ok as usize;
    let (geodesic, ok) = stat_value(netstats::mean_geodesic(&und));
    defined += ok as usize;
    let (small_world, ok) = stat_value(netstats::small_world_ness(&und));
    defined += ok as usize;
    let (corr, ok) = match netstats::degree_correlation(&und) {
        Ok(Some(v)) => (json!({ "value": v }), true),
        Ok(None) => (
            json!({ "value": null, "reason": "denominator vanishes (all degrees equal)" }),
            false,
        ),
        Err(e) => (json!({ "value": null, "reason": e.to_string() }), false),
    };
    defined += ok as usize;

    let degrees = und.degrees();
    let mut histogram = std::collections::BTreeMap::<usize, usize>::new();
    for &k in &degrees {
        *histogram.entry(k).or_default() += 1;
    }
    let degree_samples: Vec<u64> = degrees
        .iter()
        .filter(|&&k| k > 0)
        .map(|&k| k as u64)
        .collect();
    let (power_law, ok) = match netstats::fit_power_law(&degree_samples) {
        Ok(fit) => (json!({ "value": fit }), true),
        Err(e) => (json!({ "value": null, "reason": e.to_string() }), false),
    };
    defined += ok as usize;
    let ck = netstats::local_clustering_curve(&und);
    let (ck_fit, ok) = match netstats::fit_ck_exponent(&ck) {
        Ok(fit) => (json!({ "value": fit }), true),
        Err(e) => (json!({ "value": null, "reason": e.to_string() }), false),
    };
    defined += ok as usize;

    let mean_degree = 2.0 * und.edge_count() as f64 / und.node_count() as f64;
    let mut output = json!({
        "nodes": und.node_count(),
        "edges": und.edge_count(),
        "mean_degree": mean_degree,
        "clustering": clustering,
        "mean_geodesic": geodesic,
        "small_world": small_world,
        "degree_correlation": corr,
        "degree_histogram": histogram,
        "power_law": power_law,
        "ck_curve": ck.iter().map(|(&k, &v)| json!([k, v])).collect::<Vec<_>>(),
        "ck_fit": ck_fit,
    });
    if !undirected {
        let mut out_hist = std::collections::BTreeMap::<usize, usize>::new();
        let mut in_hist = std::collections::BTreeMap::<usize, usize>::new();
        for k in g.out_degrees() {
            *out_hist.entry(k).or_default() += 1;
        }
        for k in g.in_degrees() {
            *in_hist.entry(k).or_default() += 1;
        }
        output["arcs"] = json!(g.arc_count());
        output["out_degree_histogram"] = json!(out_hist);
        output["in_degree_histogram"] = json!(in_hist);
    }
    if let Some(path) = out {
        let manifest_path = sibling_manifest(path);
        output["manifest"] = json!(manifest_ref(&manifest_path));
        let manifest = RunManifest::new("stats")
            .flag("undirected", undirected)
            .flag("exclude", exclude.join(","))
            .flag("out", path.display())
            .input(input, &bytes);
        write_text(
            path,
            &format!("{}\n", serde_json::to_string_pretty(&output).unwrap()),
        )?;
        manifest.write(&manifest_path)?;
    } else {
        println!("{}", serde_json::to_string_pretty(&output).unwrap());
    }
    if defined == 0 {
        return Err(CliError::UndefinedOnly);
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// presheaf
// ---------------------------------------------------------------------------

fn builtin_rep(name: &str) -> Result<Representation, CliError> {
    presheaf::builtin_representations()
        .remove(name)
        .ok_or_else(|| {
            let names: Vec<String> = presheaf::builtin_representations()
                .keys()
                .cloned()
                .collect();
            CliError::Input(format!(
                "unknown representation '{name}' (available: {})",
                names.join(", ")
            ))
        })
}

pub fn presheaf_fibers(input: &Path, rep: &str, object: usize) -> Result<(), CliError> {
    if object > 1 {
        return Err(CliError::Input("--object must be 0 or 1".into()));
    }
    let (_, g) = load_network(input, &[])?;
    let m = builtin_rep(rep)?;
    let cat = presheaf::up_up();
    let blocks = presheaf::fibers(&cat, &presheaf::from_network(&g), &m, object);
    let label = |x: usize| -> String {
        if object == 0 {
            g.node_name(x).to_string()
        } else {
            let (s, t) = g.arcs()[x];
            format!("{}->{}", g.node_name(s), g.node_name(t))
        }
    };
    let output = json!({
        "rep": rep,
        "object": object,
        "fibers": blocks,
        "fiber_labels": blocks
            .iter()
            .map(|b| b.iter().map(|&x| label(x)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&output).unwrap());
    Ok(())
}

pub fn presheaf_stability(input: &Path, rep: &str) -> Result<(), CliError> {
    let (_, g) = load_network(input, &[])?;
    let m = builtin_rep(rep)?;
    let cat = presheaf::up_up();
    let stable = presheaf::check_stability(&cat, &presheaf::from_network(&g), &m)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({ "rep": rep, "stable": stable })).unwrap()
    );
    Ok(())
}

pub fn presheaf_gluing(rep: &str) -> Result<(), CliError> {
    let m = builtin_rep(rep)?;
    let gluing = presheaf::check_gluing(&m);
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({ "rep": rep, "gluing": gluing })).unwrap()
    );
    Ok(())
}

/// Input schema for `presheaf standard-rep`: the base multigraph and σ,
/// with σ on generators given as generator paths (dom-to-cod order).
#[derive(Deserialize)]
struct StandardRepInput {
    n_objects: usize,
    generators: Vec<(usize, usize)>,
    sigma: SigmaInput,
}

#[derive(Deserialize)]
struct SigmaInput {
    obj: Vec<usize>,
    gen_paths: Vec<Vec<usize>>,
}

pub fn presheaf_standard_rep(input: &Path) -> Result<(), CliError> {
    let bytes = fs::read(input)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", input.display())))?;
    let spec: StandardRepInput = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Input(format!("invalid standard-rep JSON: {e}")))?;
    let cat = FreeCategory::new(spec.n_objects, spec.generators.clone())?;
    if spec.sigma.gen_paths.len() != cat.n_generators() {
        return Err(CliError::Input(
            "sigma.gen_paths must list one path per generator".into(),
        ));
    }
    let gen = spec
        .sigma
        .gen_paths
        .iter()
        .enumerate()
        .map(|(f, path)| {
            let (_, b) = cat.generator(f);
            let start = *spec.sigma.obj.get(b).ok_or_else(|| {
                CliError::Input("sigma.obj must cover every object".into())
            })?;
            let mut m = cat.identity(start);
            for &g in path {
                if g >= cat.n_generators() || cat.generator(g).0 != cat.morphism(m).cod {
                    return Err(CliError::Input(format!(
                        "sigma.gen_paths[{f}] is not a composable generator path"
                    )));
                }
                m = cat.compose(cat.generator_morphism(g), m);
            }
            Ok(m)
        })
        .collect::<Result<Vec<usize>, CliError>>()?;
    let sigma = DualStructure {
        obj: spec.sigma.obj,
        gen,
    };
    let rep = presheaf::standard_representation(&cat, &sigma)?;
    let output = json!({
        "n_objects": spec.n_objects,
        "generators": spec.generators,
        "representation": rep,
    });
    println!("{}", serde_json::to_string_pretty(&output).unwrap());
    Ok(())
}
