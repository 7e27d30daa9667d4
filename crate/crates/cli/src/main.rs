use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use boxtensor_core::actions::{classify, ActionSystem, Elem, Side};
use boxtensor_core::catalog::identify;
use boxtensor_core::derived::{
    check_cyclic_derivative_abelian, compatible_side, crossed_module_phi, homology, verify_deviation_bounds,
    verify_expansion_identities, verify_quotient_map, verify_tensor_identities,
};
use boxtensor_core::fp::EnumLimits;
use boxtensor_core::group::fingerprint;
use boxtensor_core::sweep::{sweep, Family, RowOptions};
use boxtensor_core::tensor::{
    commutator_subgroup, compute_tensor, eta_group, eta_presentation, verify_free_product_construction,
    Route, TensorKind, TensorSpec,
};
use boxtensor_core::{Error, FiniteGroup};

mod text;

#[derive(Parser)]
#[command(name = "boxtensor", version, about = "Tensor products of finite groups with mutual actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Coset limit for every enumeration.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_cosets: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the compatibility regime of an action system.
    CheckCompat { file: PathBuf },
    /// Compute a tensor product.
    Tensor {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
        route: RouteArg,
        file: PathBuf,
    },
    /// Enumerate the free-product quotient and its commutator subgroup.
    Eta { file: PathBuf },
    /// Run one verification against a computed box tensor.
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        file: PathBuf,
    },
    /// Zeroth and first homology of the second group with coefficients in the first.
    Homology { file: PathBuf },
    /// Name a group from the built-in catalog.
    Identify { file: PathBuf },
    /// Tabulate every action system of a family on a pair of groups.
    Sweep {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long, value_enum, default_value_t = FamilyArg::All)]
        family: FamilyArg,
        /// One row per relabeling orbit under the automorphism groups.
        #[arg(long)]
        up_to_iso: bool,
        /// Attempt the box tensor on systems that are not fully compatible.
        #[arg(long)]
        box_always: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Box,
    #[value(alias = "brown-loday")]
    Bl,
    Inassaridze,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Direct,
    ViaEta,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    #[value(name = "prop23", alias = "deviation-bounds")]
    DeviationBounds,
    #[value(name = "prop24", alias = "identities")]
    Identities,
    Expansions,
    #[value(name = "thm42", alias = "free-product")]
    FreeProduct,
    #[value(name = "thm211", alias = "cyclic-derivative")]
    CyclicDerivative,
    CrossedModule,
    QuotientMap,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Equal,
    Conjugation,
    FullyCompatible,
    All,
}

/// Outcome of a command: the report, and whether every check in it passed.
struct Report {
    value: Value,
    text: String,
    passed: bool,
}

impl Report {
    fn ok(value: Value, text: String) -> Self {
        Report { value, text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = EnumLimits::with_max_cosets(cli.max_cosets);
    let command = command_name(&cli.command);
    let result = run(&cli.command, limits);
    let structured = cli.output == Output::Structured;
    match result {
        Ok(r) => {
            let status = if r.passed { "ok" } else { "check_failed" };
            if structured {
                println!("{}", document(command, status, Some(r.value), None));
            } else {
                print!("{}", r.text);
            }
            ExitCode::from(if r.passed { 0 } else { 4 })
        }
        Err(e) => {
            let (status, code) = match e {
                Error::Inconclusive { .. } => ("inconclusive", 3),
                Error::CheckFailed(_) => ("check_failed", 4),
                _ => ("invalid", 2),
            };
            if structured {
                println!("{}", document(command, status, None, Some(e.to_string())));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

fn document(command: &str, status: &str, result: Option<Value>, error: Option<String>) -> String {
    let mut doc = json!({ "command": command, "status": status });
    if let Some(r) = result {
        doc["result"] = r;
    }
    if let Some(e) = error {
        doc["error"] = json!(e);
    }
    serde_json::to_string_pretty(&doc).expect("serializable")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckCompat { .. } => "check-compat",
        Command::Tensor { .. } => "tensor",
        Command::Eta { .. } => "eta",
        Command::Verify { .. } => "verify",
        Command::Homology { .. } => "homology",
        Command::Identify { .. } => "identify",
        Command::Sweep { .. } => "sweep",
    }
}

fn run(command: &Command, limits: EnumLimits) -> Result<Report, Error> {
    match command {
        Command::CheckCompat { file } => check_compat(&ActionSystem::load(file)?),
        Command::Tensor { kind, route, file } => {
            let kind = match kind {
                KindArg::Box => TensorKind::Box,
                KindArg::Bl => TensorKind::BrownLoday,
                KindArg::Inassaridze => TensorKind::Inassaridze,
            };
            let route = match route {
                RouteArg::Direct => Route::Direct,
                RouteArg::ViaEta => Route::ViaEta,
            };
            let sys = ActionSystem::load(file)?;
            let t = compute_tensor(&sys, TensorSpec { kind, route }, limits)?;
            let name = identify(&t.group)?;
            let text = format!(
                "{} tensor ({})\norder {}, {}\nfingerprint: {}\n",
                kind.as_str(),
                match route {
                    Route::Direct => "direct",
                    Route::ViaEta => "via eta",
                },
                t.order(),
                text::identified(&name),
                serde_json::to_string(&fingerprint(&t.group)).expect("serializable"),
            );
            Ok(Report::ok(json!({ "name": name, "tensor": t.to_file() }), text))
        }
        Command::Eta { file } => {
            let sys = ActionSystem::load(file)?;
            let p = eta_presentation(&sys);
            let eta = eta_group(&sys, limits)?;
            let tau = commutator_subgroup(&sys, &eta);
            let (tau_group, _) = tau.sub.to_group(&eta.group)?;
            let (eta_name, tau_name) = (identify(&eta.group)?, identify(&tau_group)?);
            let value = json!({
                "generators": p.ngens(),
                "relators": p.relators().len(),
                "eta_order": eta.group.order(),
                "eta_name": eta_name,
                "eta_fingerprint": fingerprint(&eta.group),
                "commutator_order": tau.sub.order(),
                "commutator_name": tau_name,
                "commutator_fingerprint": fingerprint(&tau_group),
                "stats": { "high_water": eta.stats.high_water, "defined": eta.stats.defined },
            });
            let text = format!(
                "free-product quotient: {} generators, {} relators\norder {}, {}\ncommutator subgroup: order {}, {}\n",
                p.ngens(),
                p.relators().len(),
                eta.group.order(),
                text::identified(&eta_name),
                tau.sub.order(),
                text::identified(&tau_name),
            );
            Ok(Report::ok(value, text))
        }
        Command::Verify { check, file } => verify(*check, &ActionSystem::load(file)?, limits),
        Command::Homology { file } => {
            let sys = ActionSystem::load(file)?;
            let h = homology(&sys, limits)?;
            let (n1, n0) = (identify(&h.h1)?, identify(&h.h0)?);
            let value = json!({
                "report": h.report,
                "h1_name": n1,
                "h0_name": n0,
                "h1_fingerprint": fingerprint(&h.h1),
                "h0_fingerprint": fingerprint(&h.h0),
                "image_normal": h.report.image_order == h.report.image_closure_order,
            });
            let mut text = format!(
                "A' order {}, tensor order {}, A/A' order {}\nH1 = ker f: order {}, {}\nH0 = coker f: order {}, {}\n",
                h.report.a_prime_order,
                h.report.tensor_order,
                h.report.reduced_order,
                h.report.h1_order,
                text::identified(&n1),
                h.report.h0_order,
                text::identified(&n0),
            );
            if h.report.image_order != h.report.image_closure_order {
                text.push_str(&format!(
                    "note: the image of f (order {}) is not normal; its normal closure has order {}\n",
                    h.report.image_order, h.report.image_closure_order
                ));
            }
            Ok(Report::ok(value, text))
        }
        Command::Identify { file } => {
            let g = FiniteGroup::load(file)?;
            let name = identify(&g)?;
            let fp = fingerprint(&g);
            let text = format!(
                "order {}, {}\nfingerprint: {}\n",
                g.order(),
                text::identified(&name),
                serde_json::to_string(&fp).expect("serializable")
            );
            Ok(Report::ok(json!({ "order": g.order(), "name": name, "fingerprint": fp }), text))
        }
        Command::Sweep { g, h, family, up_to_iso, box_always } => {
            let (g, h) = (FiniteGroup::load(g)?, FiniteGroup::load(h)?);
            let family = match family {
                FamilyArg::Equal => Family::Equal,
                FamilyArg::Conjugation => Family::Conjugation,
                FamilyArg::FullyCompatible => Family::FullyCompatible,
                FamilyArg::All => Family::All,
            };
            let rows = sweep(&g, &h, family, *up_to_iso, RowOptions { limits, box_always: *box_always })?;
            let passed = rows.iter().all(|r| r.cyclic_derivative_holds != Some(false));
            let text = text::sweep_table(family, &rows);
            Ok(Report { value: json!({ "family": family.as_str(), "rows": rows }), text, passed })
        }
    }
}

fn check_compat(sys: &ActionSystem) -> Result<Report, Error> {
    let r = classify(sys);
    let mut text = String::new();
    let yes = |b: bool| if b { "yes" } else { "NO" };
    let full = r.witnesses.keys().all(|id| !boxtensor_core::actions::ConditionId::FULL.contains(id));
    text.push_str(&format!("fully compatible: {}\n", yes(full)));
    text.push_str(&format!("regime: {}\n", r.regime.as_str()));
    for (id, ok) in &r.per_condition {
        text.push_str(&format!("  {:<5} {}\n", id.as_str(), if *ok { "holds" } else { "fails" }));
    }
    for (id, w) in &r.witnesses {
        let label = |e: Elem| sys.group(e.side).label(e.index).to_string();
        let [a, b, c] = w.tuple.map(label);
        text.push_str(&format!(
            "witness {}: ({a},{b},{c}) gives {} vs {}\n",
            id.as_str(),
            label(w.lhs),
            label(w.rhs)
        ));
    }
    if let Some(d) = &r.diagnostic {
        text.push_str(&format!("note: {d}\n"));
    }
    Ok(Report::ok(serde_json::to_value(&r)?, text))
}

fn verify(check: CheckArg, sys: &ActionSystem, limits: EnumLimits) -> Result<Report, Error> {
    let tensor = || compute_tensor(sys, TensorSpec::direct(TensorKind::Box), limits);
    let (name, value, passed, lines): (&str, Value, bool, Vec<String>) = match check {
        CheckArg::DeviationBounds => {
            let r = verify_deviation_bounds(sys)?;
            let lines = r
                .sides
                .iter()
                .map(|s| {
                    format!(
                        "side {}: deviational order {}, G-center order {}, contained {}, {} pairs without witness",
                        side_name(s.side),
                        s.deviational_order,
                        s.center_order,
                        s.contained_in_center,
                        s.failures.len()
                    )
                })
                .collect();
            ("deviation bounds", serde_json::to_value(&r)?, r.passed(), lines)
        }
        CheckArg::Identities | CheckArg::Expansions => {
            let t = tensor()?;
            let r = match check {
                CheckArg::Identities => verify_tensor_identities(sys, &t)?,
                _ => verify_expansion_identities(sys, &t)?,
            };
            let lines = r.families.iter().map(text::family_line).collect();
            let name = if matches!(check, CheckArg::Identities) { "tensor identities" } else { "expansion identities" };
            (name, serde_json::to_value(&r)?, r.passed(), lines)
        }
        CheckArg::FreeProduct => {
            let r = verify_free_product_construction(sys, limits)?;
            let mut lines = vec![
                format!("|eta| = {}, |G ⊠ H| |G| |H| = {}", r.eta_order, r.box_order * r.g_order * r.h_order),
                format!("order identity: {}", r.order_identity),
                format!("commutator subgroup ≅ box tensor: {}", r.commutator_isomorphic),
                format!("semidirect reconstruction ≅ eta: {}", r.reconstruction_isomorphic),
            ];
            lines.extend(r.mismatches.iter().cloned());
            ("free-product construction", serde_json::to_value(&r)?, r.passed(), lines)
        }
        CheckArg::CyclicDerivative => {
            let t = tensor()?;
            let r = check_cyclic_derivative_abelian(sys, &t)?;
            let lines = vec![
                format!(
                    "derivative order {}, deviational order {}, reduced derivative order {} ({})",
                    r.derivative_order,
                    r.deviational_order,
                    r.reduced_order,
                    if r.reduced_cyclic { "cyclic" } else { "not cyclic" }
                ),
                format!("box tensor abelian: {}", r.tensor_abelian),
            ];
            ("cyclic derivative", serde_json::to_value(&r)?, r.holds(), lines)
        }
        CheckArg::CrossedModule => {
            let t = tensor()?;
            let c = crossed_module_phi(sys, &t)?;
            let r = c.report;
            let lines = vec![
                format!(
                    "phi: tensor of order {} -> quotient of order {}, image {}, kernel {}",
                    r.tensor_order, r.quotient_order, r.image_order, r.kernel_order
                ),
                format!("action well defined: {}", r.action_well_defined),
                format!("equivariance: {} ({} pairs)", r.equivariance.passed(), r.equivariance.checked),
                format!("Peiffer identity: {} ({} pairs)", r.peiffer.passed(), r.peiffer.checked),
                format!("kernel central: {}", r.kernel_central),
            ];
            ("crossed module", serde_json::to_value(&r)?, r.passed(), lines)
        }
        CheckArg::QuotientMap => {
            let side = compatible_side(sys).ok_or_else(|| {
                Error::Precondition("neither group acts compatibly on the other".into())
            })?;
            let r = verify_quotient_map(sys, side, limits)?;
            let lines = vec![
                format!("reduced side {}: X order {}, X' order {}", side_name(side), r.x_order, r.x_prime_order),
                format!("Inassaridze products: order {} -> order {}", r.source_order, r.target_order),
                format!("well defined: {}, surjective: {}", r.well_defined, r.surjective),
            ];
            ("quotient map", serde_json::to_value(&r)?, r.passed(), lines)
        }
    };
    let mut text = format!("{name}: {}\n", if passed { "PASS" } else { "FAIL" });
    for l in lines {
        text.push_str(&format!("  {l}\n"));
    }
    Ok(Report { value: json!({ "check": name, "passed": passed, "report": value }), text, passed })
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::G => "G",
        Side::H => "H",
    }
}
