use std::fs;
use std::io::Write;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use skewspec::graphs::{regularity, Bipartite, Graph, OrientedGraph};
use skewspec::linalg::skew_spectrum;
use skewspec::maxenergy::{build_family, certify_max_energy, seed, FamilyName, FamilySpec, Seed};
use skewspec::products::{orient_kronecker, orient_product, orient_strong, ProductKind};
use skewspec::random::{random_graph, random_orientation, random_oriented_bipartite};
use skewspec::search::{energy_histogram, max_energy_records};
use skewspec::spectra::{compare, predict_kronecker, predict_strong, SpectrumPrediction};
use skewspec::{io, Error};

use crate::{Config, Failure, OutputFormat, Theorem};

type CmdResult = Result<(), Failure>;

fn fmt9(v: f64) -> String {
    format!("{v:.9}")
}

fn read_file(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn with_path(path: &str, e: Error) -> Failure {
    match e {
        Error::Parse { .. } => Failure::Input(format!("{path}: {e}")),
        other => other.into(),
    }
}

/// A file path if one exists, otherwise a seed name.
fn load_oriented(cfg: &Config, arg: &str) -> Result<OrientedGraph, Failure> {
    if Path::new(arg).exists() {
        let text = read_file(arg)?;
        let g = if cfg.undirected {
            io::parse_graph(&text).map(|g| OrientedGraph::default_orientation(&g))
        } else {
            io::parse_oriented(&text)
        };
        return g.map_err(|e| with_path(arg, e));
    }
    match arg.parse::<Seed>() {
        Ok(s) => Ok(seed(s)?),
        Err(_) => Err(Failure::Input(format!("{arg}: no such file or seed name"))),
    }
}

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if Path::new(arg).exists() {
        let text = read_file(arg)?;
        return io::parse_graph(&text).map_err(|e| with_path(arg, e));
    }
    match arg.parse::<Seed>() {
        Ok(s) => Ok(seed(s)?.underlying().clone()),
        Err(_) => Err(Failure::Input(format!("{arg}: no such file or seed name"))),
    }
}

fn check_order(cfg: &Config, order: usize) -> CmdResult {
    if order > cfg.size_limit {
        return Err(Failure::SizeLimit(format!(
            "order {order} exceeds the size limit {}",
            cfg.size_limit
        )));
    }
    Ok(())
}

fn graph_text(cfg: &Config, g: &OrientedGraph) -> String {
    match cfg.output {
        OutputFormat::Json => io::to_json(g) + "\n",
        OutputFormat::Csv => g.skew_adjacency().to_csv(),
        OutputFormat::Text => io::to_text(g),
    }
}

pub fn spectrum(cfg: &Config, input: &str) -> CmdResult {
    let g = load_oriented(cfg, input)?;
    check_order(cfg, g.order())?;
    let s = g.skew_adjacency();
    let spectrum = skew_spectrum(&s)?;
    let energy = spectrum.energy();
    let k = regularity(g.underlying());
    let cert = k.map(|k| certify_max_energy(&s, k)).transpose()?;

    match cfg.output {
        OutputFormat::Json => {
            let doc = json!({
                "order": g.order(),
                "values": spectrum.values(),
                "multiplicity_paired": true,
                "energy": energy,
                "regular": k,
                "certified": cert.as_ref().map(|c| c.holds),
                "certificate": cert.as_ref().map(|c| c.to_json()),
            });
            println!("{doc}");
        }
        OutputFormat::Csv => {
            let vals: Vec<String> = spectrum.values().iter().map(|&v| fmt9(v)).collect();
            println!("{}", vals.join(","));
        }
        OutputFormat::Text => {
            let vals: Vec<String> = spectrum.values().iter().map(|&v| fmt9(v)).collect();
            println!("order {}", g.order());
            println!("spectrum {}", vals.join(" "));
            println!("energy {}", fmt9(energy));
            match (&k, &cert) {
                (Some(k), Some(c)) => {
                    println!("regular {k}");
                    println!("certified {}", c.holds);
                    println!("witness {}", c.witness);
                }
                _ => {
                    println!("regular none");
                    println!("certified false");
                }
            }
        }
    }
    Ok(())
}

pub fn product(
    cfg: &Config,
    h: &str,
    g: &str,
    kind: &str,
    kn: Option<&str>,
    out: &Path,
) -> CmdResult {
    let kind: ProductKind = kind.parse()?;
    let h = Bipartite::new(load_oriented(cfg, h)?)?;
    let g = load_oriented(cfg, g)?;
    let kn = kn.map(|k| load_oriented(cfg, k)).transpose()?;
    if kind == ProductKind::Lexicographic && kn.is_none() {
        return Err(Failure::Input("--kind lex needs --kn".into()));
    }
    check_order(cfg, h.order() * g.order())?;

    let p = orient_product(kind, &h, &g, kn.as_ref())?;
    let s = p.skew_adjacency();
    let energy = skew_spectrum(&s)?.energy();
    let k = regularity(p.underlying());
    let cert = k.map(|k| certify_max_energy(&s, k)).transpose()?;

    let summary = match cfg.output {
        OutputFormat::Json => json!({
            "kind": kind.name(),
            "order": p.order(),
            "regular": k,
            "energy": energy,
            "certified": cert.as_ref().map(|c| c.holds),
        })
        .to_string(),
        _ => format!(
            "order {}\nregular {}\nenergy {}\ncertified {}",
            p.order(),
            k.map_or("none".to_string(), |k| k.to_string()),
            fmt9(energy),
            cert.as_ref().is_some_and(|c| c.holds)
        ),
    };

    let body = graph_text(cfg, &p);
    if out.as_os_str() == "-" {
        print!("{body}");
        std::io::stdout().flush().ok();
        eprintln!("{summary}");
    } else {
        fs::write(out, body).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
        println!("{summary}");
    }
    Ok(())
}

pub enum VerifySource {
    Files {
        h: String,
        g: String,
    },
    Random {
        seed: u64,
        m: usize,
        n: usize,
        trials: usize,
    },
}

/// Moves the prediction off the truth by 0.5 in one value.
fn corrupt_prediction(p: &SpectrumPrediction) -> SpectrumPrediction {
    let mut entries = p.entries().to_vec();
    let mut zeros = p.zero_multiplicity();
    if let Some(first) = entries.first_mut() {
        first.0 += 0.5;
    } else if zeros >= 2 {
        zeros -= 2;
        entries.push((0.5, 1));
    }
    SpectrumPrediction::new(entries, zeros)
}

fn verify_pair(
    cfg: &Config,
    h: &Bipartite,
    g: &OrientedGraph,
    theorem: Theorem,
    corrupt: bool,
) -> Result<serde_json::Value, Failure> {
    check_order(cfg, h.order() * g.order())?;
    let mu = skew_spectrum(&h.graph().skew_adjacency())?.positive_values();
    let lambda = skew_spectrum(&g.skew_adjacency())?.positive_values();
    let (prediction, product) = match theorem {
        Theorem::Kron => (
            predict_kronecker(&mu, h.order(), &lambda, g.order())?,
            orient_kronecker(h, g),
        ),
        Theorem::Strong => (
            predict_strong(&mu, h.order(), &lambda, g.order())?,
            orient_strong(h, g),
        ),
    };
    let prediction = if corrupt {
        corrupt_prediction(&prediction)
    } else {
        prediction
    };
    let computed = skew_spectrum(&product.skew_adjacency())?;
    let report = compare(&prediction, &computed, cfg.tolerance)?;
    Ok(serde_json::to_value(report).expect("report serializes"))
}

pub fn verify(cfg: &Config, source: VerifySource, theorem: Theorem, corrupt: bool) -> CmdResult {
    let reports = match source {
        VerifySource::Files { h, g } => {
            let h = Bipartite::new(load_oriented(cfg, &h)?)?;
            let g = load_oriented(cfg, &g)?;
            vec![verify_pair(cfg, &h, &g, theorem, corrupt)?]
        }
        VerifySource::Random { seed, m, n, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..trials)
                .map(|_| {
                    let h = random_oriented_bipartite(&mut rng, m, 0.5);
                    let base = random_graph(&mut rng, n, 0.5);
                    let g = random_orientation(&mut rng, &base);
                    verify_pair(cfg, &h, &g, theorem, corrupt)
                })
                .collect::<Result<_, _>>()?
        }
    };
    let mut all_pass = true;
    for r in &reports {
        all_pass &= r["pass"].as_bool().unwrap_or(false);
        println!("{r}");
    }
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Verification(
            "predicted and computed spectra differ".into(),
        ))
    }
}

pub fn family(cfg: &Config, name: &str, r: u32, out: Option<&Path>) -> CmdResult {
    let name: FamilyName = name.parse()?;
    let built = build_family(FamilySpec { name, r }, cfg.size_limit)?;
    let actual_degree = regularity(built.graph.underlying());
    let ok = built.graph.order() == built.expected_order
        && actual_degree == Some(built.expected_degree)
        && (built.certificate.energy - built.expected_energy).abs()
            <= 1e-9 * built.expected_energy.max(1.0)
        && built.certificate.holds;

    match cfg.output {
        OutputFormat::Json => println!(
            "{}",
            json!({
                "name": name.name(),
                "r": r,
                "expected_order": built.expected_order,
                "order": built.graph.order(),
                "expected_degree": built.expected_degree,
                "degree": actual_degree,
                "expected_energy": built.expected_energy,
                "energy": built.certificate.energy,
                "certified": built.certificate.holds,
                "pass": ok,
            })
        ),
        _ => {
            println!("family {name} r={r}");
            println!(
                "order {} (expected {})",
                built.graph.order(),
                built.expected_order
            );
            println!(
                "degree {} (expected {})",
                actual_degree.map_or("none".into(), |d| d.to_string()),
                built.expected_degree
            );
            println!(
                "energy {} (expected {})",
                fmt9(built.certificate.energy),
                fmt9(built.expected_energy)
            );
            println!("certified {}", built.certificate.holds);
        }
    }
    if let Some(path) = out {
        fs::write(path, graph_text(cfg, &built.graph))
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification(
            "family does not match its closed form".into(),
        ))
    }
}

pub fn search(cfg: &Config, input: &str, histogram: bool) -> CmdResult {
    let g = load_graph(input)?;
    check_order(cfg, g.order())?;
    if histogram {
        for (energy, count) in energy_histogram(&g)? {
            match cfg.output {
                OutputFormat::Csv => println!("{},{count}", fmt9(energy)),
                _ => println!("{}", json!({ "energy": energy, "count": count })),
            }
        }
        return Ok(());
    }
    for rec in max_energy_records(&g)? {
        match cfg.output {
            OutputFormat::Csv => println!("{},{},{}", rec.code, fmt9(rec.energy), rec.certified),
            _ => println!(
                "{}",
                serde_json::to_string(&rec).expect("record serializes")
            ),
        }
    }
    Ok(())
}

pub fn export(cfg: &Config, input: &str) -> CmdResult {
    let g = load_oriented(cfg, input)?;
    check_order(cfg, g.order())?;
    print!("{}", graph_text(cfg, &g));
    Ok(())
}
