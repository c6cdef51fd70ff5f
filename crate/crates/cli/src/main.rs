//! One-binary verification surface: every finite check in the toolkit
//! behind a subcommand, with deterministic text, JSON, or CSV reports
//! and bit-exact exit codes (0 all pass, 1 verification failure, 2
//! invalid input).

mod report;

use clap::{Args, Parser, Subcommand};
use report::{all_passed, render, Format, ReportBuilder, Status, VerificationReport};
use spin4_core::branching::{branching_admissible, branching_multiplicity, BranchQuery};
use spin4_core::hodge::{hodge_types, stable_ranks};
use spin4_core::irrep::build_irrep;
use spin4_core::isotypic::lambda_scan;
use spin4_core::packet::lpacket;
use spin4_core::pairing::{assemble, constants, projection_coeffs_report, survival};
use spin4_core::weight::Weight;
use spin4_local::arch::tate_arch_verify;
use spin4_local::lfactor::{bessel_value, verify_unramified_numeric, verify_unramified_symbolic};
use spin4_local::mellin::mellin_verify;
use spin4_local::trace::trace_pi_exponent;

#[derive(Parser)]
#[command(name = "spin4", about = "Finite verification runs for rank-two symplectic L-factor computations", version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Internal working precision in decimal digits
    #[arg(long, global = true, default_value_t = 40)]
    precision_digits: u32,
    #[command(subcommand)]
    command: Cmd,
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "text" => Ok(Format::Text),
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        _ => Err("expected text, json, or csv".into()),
    }
}

#[derive(Args)]
struct WeightPair {
    #[arg(long)]
    k: i64,
    #[arg(long)]
    kp: i64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Branching admissibility and the character-oracle multiplicity
    Branch {
        #[command(flatten)]
        w: WeightPair,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Packet parameter and the four minimal types
    Packet {
        #[command(flatten)]
        w: WeightPair,
    },
    /// Hodge bidegrees and stable ranks
    Hodge {
        #[command(flatten)]
        w: WeightPair,
        #[arg(long)]
        c: i64,
    },
    /// Module construction checks
    Rep {
        #[command(subcommand)]
        sub: RepCmd,
    },
    /// Non-vanishing scan of projected lowering transports
    LambdaScan {
        #[command(flatten)]
        w: WeightPair,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, default_value_t = 4)]
        imax: i64,
    },
    /// Pairing constants and term assembly
    Pairing {
        #[command(subcommand)]
        sub: PairingCmd,
    },
    /// Non-archimedean local checks
    Local {
        #[command(subcommand)]
        sub: LocalCmd,
    },
    /// Archimedean numeric checks
    Arch {
        #[command(subcommand)]
        sub: ArchCmd,
    },
    /// The full finite skeleton for one weight pair
    Trace {
        #[command(flatten)]
        w: WeightPair,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Build the module and verify dimension and weight symmetry
    Build {
        #[command(flatten)]
        w: WeightPair,
        #[arg(long)]
        c: Option<i64>,
    },
}

#[derive(Subcommand)]
enum PairingCmd {
    /// The factorial constant families
    Constants {
        #[command(flatten)]
        w: WeightPair,
    },
    /// Projection coefficients from the nine-dimensional solve
    Coeffs,
    /// The assembled four-term expression
    Assemble {
        #[command(flatten)]
        w: WeightPair,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Archimedean survival analysis
    Survival {
        #[command(flatten)]
        w: WeightPair,
    },
}

#[derive(Subcommand)]
enum LocalCmd {
    /// Symbolic (or numeric-sampled) unramified identity verification
    UnramifiedVerify {
        #[arg(long, default_value_t = 25)]
        order: usize,
        #[arg(long)]
        numeric: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// One alternating-sum spherical value
    Bessel {
        #[arg(long)]
        m: usize,
    },
    /// The unramified one-dimensional factor and its series witness
    Tate {
        #[arg(long, default_value_t = 11)]
        exponent: i64,
    },
}

#[derive(Subcommand)]
enum ArchCmd {
    /// Transform identity: radial quadrature against the gamma product
    MellinVerify {
        #[command(flatten)]
        w: WeightPair,
    },
    /// Product of the two polynomial-Gaussian zeta integrals
    TateVerify {
        #[arg(long, default_value_t = 6)]
        p: i64,
        #[arg(long, default_value_t = 3)]
        q: i64,
        #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 3)]
        s: i64,
    },
}

fn main() {
    let cli = Cli::parse();
    let prec_bits = cli.precision_digits * 10 / 3 + 32;
    match run(cli.command, prec_bits) {
        Ok(reports) => {
            print!("{}", render(&reports, cli.format));
            if all_passed(&reports) {
                std::process::exit(0);
            }
            std::process::exit(1);
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            std::process::exit(2);
        }
    }
}

fn run(cmd: Cmd, prec: u32) -> Result<Vec<VerificationReport>, String> {
    match cmd {
        Cmd::Branch { w, p, q } => cmd_branch(w.k, w.kp, p, q),
        Cmd::Packet { w } => cmd_packet(w.k, w.kp),
        Cmd::Hodge { w, c } => cmd_hodge(w.k, w.kp, c),
        Cmd::Rep { sub: RepCmd::Build { w, c } } => cmd_rep_build(w.k, w.kp, c),
        Cmd::LambdaScan { w, p, q, imax } => cmd_lambda_scan(w.k, w.kp, p, q, imax),
        Cmd::Pairing { sub } => match sub {
            PairingCmd::Constants { w } => cmd_constants(w.k, w.kp),
            PairingCmd::Coeffs => cmd_coeffs(),
            PairingCmd::Assemble { w, p, q } => cmd_assemble(w.k, w.kp, p, q),
            PairingCmd::Survival { w } => cmd_survival(w.k, w.kp),
        },
        Cmd::Local { sub } => match sub {
            LocalCmd::UnramifiedVerify { order, numeric, seed } => {
                cmd_unramified(order, numeric, seed)
            }
            LocalCmd::Bessel { m } => cmd_bessel(m),
            LocalCmd::Tate { exponent } => cmd_tate(exponent),
        },
        Cmd::Arch { sub } => match sub {
            ArchCmd::MellinVerify { w } => cmd_mellin(w.k, w.kp, prec),
            ArchCmd::TateVerify { p, q, r, s } => cmd_tate_arch(p, q, r, s, prec),
        },
        Cmd::Trace { w } => cmd_trace(w.k, w.kp),
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cmd_branch(k: i64, kp: i64, p: i64, q: i64) -> Result<Vec<VerificationReport>, String> {
    let bq = BranchQuery::new(p, q, k, kp).map_err(input_err)?;
    let adm = branching_admissible(&bq).map_err(input_err)?;
    let mult = branching_multiplicity(&bq).map_err(input_err)?;
    let agree = adm == (mult >= 1);
    let rep = ReportBuilder::new("branch.multiplicity")
        .witness("admissible", adm)
        .witness("multiplicity", mult)
        .witness("inequalities agree with the character oracle", agree)
        .finish(if agree { Status::Pass } else { Status::Fail });
    Ok(vec![rep])
}

fn cmd_packet(k: i64, kp: i64) -> Result<Vec<VerificationReport>, String> {
    let lam = Weight::new(k, kp, k + kp).map_err(input_err)?;
    let p = lpacket(lam).map_err(input_err)?;
    let mut b = ReportBuilder::new("packet")
        .witness("parameter", format!("({}, {})", p.hc_parameter.0, p.hc_parameter.1));
    for (m, t) in &p.members {
        b = b.witness(&format!("{:?}", m), format!("({}, {})", t.0, t.1));
    }
    let distinct = p.types_distinct();
    b = b.witness("types pairwise distinct", distinct);
    let ok = !(k > kp && kp > 0) || distinct;
    Ok(vec![b.finish(if ok { Status::Pass } else { Status::Fail })])
}

fn cmd_hodge(k: i64, kp: i64, c: i64) -> Result<Vec<VerificationReport>, String> {
    let lam = Weight::new(k, kp, c).map_err(input_err)?;
    let h = hodge_types(lam);
    let mut b = ReportBuilder::new("hodge").witness("t", h.t);
    for (i, pr) in h.pairs.iter().enumerate() {
        b = b.witness(&format!("pair {}", i + 1), format!("({}, {})", pr.0, pr.1));
    }
    let sums = h.pair_sums_ok(lam);
    let swap = h.swap_closed();
    b = b
        .witness("all pairs sum to 3 - c", sums)
        .witness("swap-closed", swap);
    let mut reports = vec![b.finish(if sums && swap { Status::Pass } else { Status::Fail })];
    // stable ranks when the weight has cohomological shape c = p+q+6
    let p_plus_q = c - 6;
    if p_plus_q >= 0 {
        if let Ok((a, bb, cc)) = stable_ranks(p_plus_q, 0, k, kp) {
            reports.push(
                ReportBuilder::new("hodge.ranks")
                    .witness("minus part", a)
                    .witness("filtered part", bb)
                    .witness("extension part", cc)
                    .finish(if a == bb + cc { Status::Pass } else { Status::Fail }),
            );
        }
    }
    Ok(reports)
}

fn cmd_rep_build(k: i64, kp: i64, c: Option<i64>) -> Result<Vec<VerificationReport>, String> {
    let c = c.unwrap_or(k + kp);
    let lam = Weight::new(k, kp, c).map_err(input_err)?;
    let m = build_irrep(lam).map_err(input_err)?;
    let dim = m.dim();
    let expect = spin4_core::character::weyl_dimension(k, kp);
    let mult = m.weight_multiplicities();
    let symmetric = mult.iter().all(|(w, c0)| {
        spin4_core::weyl::all_elements().iter().all(|el| {
            let img = spin4_core::weyl::weyl_act_pair(el, w.0, w.1);
            mult.get(&img) == Some(c0)
        })
    });
    let ok = dim as i64 == expect && symmetric;
    Ok(vec![ReportBuilder::new("rep.build")
        .witness("dimension", dim)
        .witness("weyl dimension formula", expect)
        .witness("weights weyl-symmetric", symmetric)
        .finish(if ok { Status::Pass } else { Status::Fail })])
}

fn cmd_lambda_scan(
    k: i64,
    kp: i64,
    p: Option<i64>,
    q: Option<i64>,
    imax: i64,
) -> Result<Vec<VerificationReport>, String> {
    if !(k > kp && kp > 0) {
        return Err("need k > k' > 0".into());
    }
    let p = p.unwrap_or(k - 1);
    let q = q.unwrap_or(kp - 1);
    let lam = Weight::new(k, kp, -p - q).map_err(input_err)?;
    let m = build_irrep(lam).map_err(input_err)?;
    let entries = lambda_scan(&m, p, q, imax).map_err(input_err)?;
    let mut b = ReportBuilder::new("lambda-scan");
    let mut first_ok = false;
    for e in &entries {
        let pair = e
            .matched_pair
            .map(|(r, s)| format!("(r, s) = ({}, {})", r, s))
            .unwrap_or_else(|| "no weight match".to_string());
        b = b.witness(
            &format!("i = {}", e.i),
            format!("{}; component {}", pair, if e.nonzero { "non-zero" } else { "zero" }),
        );
        if e.i == 1 {
            first_ok = e.nonzero;
        }
    }
    let status = if p == k - 1 && q == kp - 1 {
        if first_ok {
            Status::Pass
        } else {
            Status::Fail
        }
    } else {
        Status::Pass
    };
    Ok(vec![b.finish(status)])
}

fn cmd_constants(k: i64, kp: i64) -> Result<Vec<VerificationReport>, String> {
    let table = constants(k, kp).map_err(input_err)?;
    let mut b = ReportBuilder::new("pairing.constants");
    for (i, v) in table.b.iter().take(8) {
        b = b.witness(&format!("B[{}]", i), v.clone());
    }
    for (i, v) in table.c.iter().take(8) {
        b = b.witness(&format!("C[{}]", i), v.clone());
    }
    for ((i, j), v) in table.a.iter().take(12) {
        b = b.witness(&format!("A[{}][{}]", i, j), v.clone());
    }
    Ok(vec![b.finish(Status::Pass)])
}

fn cmd_coeffs() -> Result<Vec<VerificationReport>, String> {
    let rep = projection_coeffs_report().map_err(input_err)?;
    let stated_ok = rep.alpha_matches_stated && rep.beta_matches_stated;
    Ok(vec![ReportBuilder::new("pairing.coeffs")
        .witness("alpha (computed)", &rep.coefficients.alpha)
        .witness("beta3 (computed)", &rep.coefficients.beta3)
        .witness("gamma (computed)", &rep.coefficients.gamma)
        .witness("alpha matches stated 1/4", rep.alpha_matches_stated)
        .witness("beta3 matches stated 3/80", rep.beta_matches_stated)
        .witness("basis-order independent", rep.basis_independent)
        .finish(if stated_ok { Status::Pass } else { Status::Fail })])
}

fn cmd_assemble(k: i64, kp: i64, p: i64, q: i64) -> Result<Vec<VerificationReport>, String> {
    let e = assemble(p, q, k, kp).map_err(input_err)?;
    let mut b = ReportBuilder::new("pairing.assemble");
    for term in &e.terms {
        for piece in &term.pieces {
            let t = &piece.token;
            b = b.witness(
                &format!(
                    "term {}{}",
                    term.constant_label,
                    piece.j.map(|j| format!(" j={}", j)).unwrap_or_default()
                ),
                format!(
                    "{} * {}[{}, {}, {}]",
                    piece.coefficient,
                    if t.conjugated { "XiBar" } else { "Xi" },
                    t.n,
                    t.r,
                    t.s
                ),
            );
        }
    }
    Ok(vec![b.finish(Status::Pass)])
}

fn cmd_survival(k: i64, kp: i64) -> Result<Vec<VerificationReport>, String> {
    let s = survival(k, kp).map_err(input_err)?;
    let mut b = ReportBuilder::new("pairing.survival")
        .witness("surviving term", s.surviving_term)
        .witness("survivor pairing (transport-normalized)", &s.survivor_pairing_natural)
        .witness("survivor pairing (stated normalization)", &s.survivor_pairing_stated);
    for v in &s.verdicts {
        let jtxt = v.j.map(|j| format!(" j={}", j)).unwrap_or_default();
        match v.witness {
            Some(w) => {
                b = b.witness(&format!("term {}{} vanishes", v.term, jtxt), format!("witness {}", w))
            }
            None => b = b.witness(&format!("term {}{} survives", v.term, jtxt), "both weight sums zero"),
        }
    }
    let ok = s.surviving_term == 2;
    Ok(vec![b.finish(if ok { Status::Pass } else { Status::Fail })])
}

fn cmd_unramified(
    order: usize,
    numeric: bool,
    seed: Option<u64>,
) -> Result<Vec<VerificationReport>, String> {
    let out = if numeric {
        verify_unramified_numeric(order, 20, seed.unwrap_or(20260810)).map_err(input_err)?
    } else {
        verify_unramified_symbolic(order).map_err(input_err)?
    };
    let mut b = ReportBuilder::new("local.unramified")
        .seed(if numeric { Some(seed.unwrap_or(20260810)) } else { None })
        .witness("order", order)
        .witness("checks", out.checks)
        .witness("failures", out.failures.len());
    for f in &out.failures {
        b = b.witness("failure", f);
    }
    Ok(vec![b.finish(if out.passed() { Status::Pass } else { Status::Fail })])
}

fn cmd_bessel(m: usize) -> Result<Vec<VerificationReport>, String> {
    let bv = bessel_value(m).map_err(input_err)?;
    Ok(vec![ReportBuilder::new("local.bessel")
        .witness("m", m)
        .witness("prime exponent (doubled)", bv.double_p_exponent)
        .witness("numerator", &bv.value.num)
        .witness("denominator", &bv.value.den)
        .finish(Status::Pass)])
}

fn cmd_tate(exponent: i64) -> Result<Vec<VerificationReport>, String> {
    let t = spin4_local::tate::tate_unramified(exponent).map_err(input_err)?;
    let holds = t.witness_holds().map_err(input_err)?;
    let at0 = t.at_zero().map_err(input_err)?;
    Ok(vec![ReportBuilder::new("local.tate")
        .witness("target exponent", t.target_exponent)
        .witness("factor", &t.factor)
        .witness("series witness to depth 30", holds)
        .witness("value at zero character", at0)
        .finish(if holds { Status::Pass } else { Status::Fail })])
}

fn cmd_mellin(k: i64, kp: i64, prec: u32) -> Result<Vec<VerificationReport>, String> {
    let rep = mellin_verify(k, kp, prec.max(160), 1e-8).map_err(input_err)?;
    Ok(vec![ReportBuilder::new("arch.mellin")
        .witness("quadrature", rep.quadrature.value.to_f64())
        .witness("closed form", rep.closed_form.to_f64())
        .witness("relative difference", rep.relative_difference.to_f64())
        .witness("tolerance", rep.tolerance)
        .finish(if rep.passed() { Status::Pass } else { Status::Fail })])
}

fn cmd_tate_arch(
    p: i64,
    q: i64,
    r: i64,
    s: i64,
    prec: u32,
) -> Result<Vec<VerificationReport>, String> {
    let rep = tate_arch_verify(p, q, r, s, prec.max(160), 1e-8).map_err(input_err)?;
    Ok(vec![ReportBuilder::new("arch.tate")
        .witness("product", rep.product.value.to_f64())
        .witness("closed form", rep.closed_form.to_f64())
        .witness("relative difference", rep.relative_difference.to_f64())
        .witness("tolerance", rep.tolerance)
        .finish(if rep.passed() { Status::Pass } else { Status::Fail })])
}

fn cmd_trace(k: i64, kp: i64) -> Result<Vec<VerificationReport>, String> {
    let t = trace_pi_exponent(k, kp).map_err(input_err)?;
    let mut b = ReportBuilder::new("trace")
        .witness("surviving term", t.survival.surviving_term);
    for v in &t.survival.verdicts {
        if let Some(w) = v.witness {
            let jtxt = v.j.map(|j| format!(" j={}", j)).unwrap_or_default();
            b = b.witness(&format!("term {}{} witness", v.term, jtxt), w);
        }
    }
    for g in &t.gamma_arguments {
        b = b.witness(
            &format!(
                "{} shifted ({})",
                g.label,
                if g.numerator { "numerator" } else { "denominator" }
            ),
            format!("{} ~ pi^{}", g.shifted_argument, g.pi_exponent),
        );
    }
    b = b
        .witness("net pi exponent", &t.net_pi_exponent)
        .witness("required exponent", &t.required_exponent)
        .witness("gamma pattern matches the stated one", t.pattern_matches_stated);
    let ok = t.net_matches_required() && t.pattern_matches_stated && t.survival.surviving_term == 2;
    Ok(vec![b.finish(if ok { Status::Pass } else { Status::Fail })])
}
