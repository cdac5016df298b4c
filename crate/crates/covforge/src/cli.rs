//! Command-line surface: every computation behind a subcommand with
//! deterministic text/JSON output, plus bundled identity suites that
//! reproduce the classical tables in one invocation.

use clap::{Args, Parser, Subcommand, ValueEnum};

use serde::Serialize;

use crate::binary::xvars;
use crate::covariant::{zeta, Covariant};
use crate::error::{Error, Result};
use crate::formats::{
    binary_form_to_json, covariant_to_json, power_test_json, read_binary_form, read_nary_form,
    scan_report_csv, scan_report_json,
};
use crate::goettingen::{goettingen_basic, goettingen_general};
use crate::hilbert::{hilbert_covariant, hilbert_source, kappa_scalar, polar_identity_check};
use crate::ideals::{
    g_piece, ideal_containment, ix_piece, j_piece, saturation_scan,
    ScanConfig,
};
use crate::identity::{eval_cov_expr, parse_cov_expr};
use crate::power::perfect_power_decompose;
use crate::rat::format_rat;
use crate::transfer::{bitangent_system, parse_bracket, transfer_vanishing_test, umbral_evaluate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "covforge",
    about = "Exact invariant theory of binary forms: covariants, perfect powers, graded ideals, Clebsch transfer",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (csv applies to the ideal tables)
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct RdArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The Hilbert covariant for (r, d), optionally evaluated at a form
    Hilbert {
        #[command(flatten)]
        rd: RdArgs,
        /// JSON file holding a binary form to evaluate at
        #[arg(long)]
        eval: Option<String>,
    },
    /// The Göttingen covariant: determinant construction, or the general
    /// recipe for a covariant Ψ of the generic order-(d-2) form
    Goettingen {
        #[command(flatten)]
        rd: RdArgs,
        /// Ψ in prefix notation over F (meaning the order-(d-2) form),
        /// e.g. "T(F,F,2)" or "MUL(F,MUL(F,F))"
        #[arg(long)]
        psi: Option<String>,
    },
    /// Verify that the two constructions agree: source and covariant
    /// equality with the connecting scalar
    CheckTheoremHgeq {
        #[command(flatten)]
        rd: RdArgs,
    },
    /// The connecting scalar κ(r, d)
    Kappa {
        #[command(flatten)]
        rd: RdArgs,
    },
    /// Perfect-power test of a rational form
    PowerTest {
        #[arg(long)]
        mu: usize,
        #[arg(long)]
        form: String,
    },
    /// The covariant-space dimension ζ(d, m, q)
    Zeta {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        q: usize,
    },
    /// Dimension of a graded ideal piece
    IdealDims {
        #[command(flatten)]
        rd: RdArgs,
        #[arg(long)]
        degree: usize,
        /// which ideal: j, g, or ix (ix uses e = gcd(r, d))
        #[arg(long, default_value = "j")]
        which: String,
    },
    /// Per-degree comparison of J and I_X, with the candidate saturation
    /// index
    SiScan {
        #[command(flatten)]
        rd: RdArgs,
        #[arg(long)]
        max_degree: usize,
    },
    /// Containment J_{r1,d} ⊇ J_{r2,d}
    Containment {
        #[arg(long)]
        r1: usize,
        #[arg(long)]
        r2: usize,
        #[arg(long)]
        d: usize,
    },
    /// The transferred vanishing test on an n-ary form
    TransferTest {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        form: String,
    },
    /// Umbral evaluation of a bracket-monomial expression at a form
    Umbral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        form: String,
    },
    /// The three bitangent sextics of a ternary quartic
    BitangentSystem {
        #[arg(long)]
        form: String,
    },
    /// Bundled identity suites: gordan, lowr, twisted-cubic, polar,
    /// lemma-e, or all
    VerifyIdentities {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

pub struct CliOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and runs an invocation; never panics on user input.
pub fn dispatch<I, S>(args: I) -> CliOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success-typed errors
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                CliOutcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                CliOutcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(stdout) => CliOutcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let stderr = match format {
                Format::Json => format!("{{\"error\":\"{}\"}}\n", e.to_string().replace('"', "'")),
                _ => format!("error: {e}\n"),
            };
            CliOutcome {
                code: 1,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn scan_config() -> ScanConfig {
    // ScanConfig::default() already honors COVFORGE_MAX_DIM
    ScanConfig::default()
}

#[derive(Serialize)]
struct CheckReport {
    r: usize,
    d: usize,
    kappa: String,
    source_equal: bool,
    covariant_equal: bool,
}

#[derive(Serialize)]
struct SuiteLine {
    name: String,
    pass: bool,
    detail: String,
}

fn run(cli: Cli) -> Result<String> {
    let format = cli.format;
    match cli.command {
        Command::Hilbert { rd, eval } => {
            let cov = hilbert_covariant(rd.r, rd.d)?;
            match eval {
                None => render_covariant(&cov, format),
                Some(path) => {
                    let f = read_binary_form(&path)?;
                    let value = cov.evaluate(&f)?;
                    render_form(&value, format)
                }
            }
        }
        Command::Goettingen { rd, psi } => {
            let cov = match psi {
                None => goettingen_basic(rd.r, rd.d)?,
                Some(expr) => {
                    let parsed = parse_cov_expr(&expr)?;
                    let psi_cov = eval_cov_expr(&parsed, rd.d - 2, "b", &xvars())?;
                    goettingen_general(&psi_cov, rd.r, rd.d)?
                }
            };
            render_covariant(&cov, format)
        }
        Command::CheckTheoremHgeq { rd } => {
            let kappa = kappa_scalar(rd.r, rd.d)?;
            let h0 = hilbert_source(rd.r, rd.d)?;
            let gott = goettingen_basic(rd.r, rd.d)?;
            let source_equal = *gott.source() == h0.scalar_mul(&kappa);
            let hilb = hilbert_covariant(rd.r, rd.d)?;
            let covariant_equal = gott == hilb.scalar_mul(&kappa);
            let report = CheckReport {
                r: rd.r,
                d: rd.d,
                kappa: format_rat(&kappa),
                source_equal,
                covariant_equal,
            };
            match format {
                Format::Json => Ok(serde_json::to_string_pretty(&report)? + "\n"),
                _ => Ok(format!(
                    "source(Gott_{{{r},{d}}}) = kappa * h0: {se}\nGott_{{{r},{d}}} = kappa * Hilb_{{{r},{d}}}: {ce}\nkappa({r},{d}) = {k}\n",
                    r = rd.r,
                    d = rd.d,
                    se = source_equal,
                    ce = covariant_equal,
                    k = report.kappa
                )),
            }
        }
        Command::Kappa { rd } => {
            let kappa = kappa_scalar(rd.r, rd.d)?;
            match format {
                Format::Json => Ok(format!("{{\"kappa\":\"{}\"}}\n", format_rat(&kappa))),
                _ => Ok(format!("{}\n", format_rat(&kappa))),
            }
        }
        Command::PowerTest { mu, form } => {
            let f = read_binary_form(&form)?;
            let dec = perfect_power_decompose(&f, mu)?;
            let j = power_test_json(mu, &dec);
            match format {
                Format::Json => Ok(serde_json::to_string_pretty(&j)? + "\n"),
                _ => match dec {
                    None => Ok(format!("not a {mu}-th power\n")),
                    Some(dec) => {
                        let base = binary_form_to_json(&dec.base);
                        Ok(format!(
                            "{mu}-th power: scalar {} times ({})^{mu}\n",
                            format_rat(&dec.scalar),
                            base.cayley_coefficients.join(", ")
                        ))
                    }
                },
            }
        }
        Command::Zeta { d, m, q } => {
            let value = zeta(d, m, q);
            match format {
                Format::Json => Ok(format!("{{\"zeta\":{value}}}\n")),
                _ => Ok(format!("{value}\n")),
            }
        }
        Command::IdealDims { rd, degree, which } => {
            let piece = match which.as_str() {
                "j" => j_piece(rd.r, rd.d, degree)?,
                "g" => g_piece(rd.r, rd.d, degree)?,
                "ix" => {
                    let e = gcd(rd.r, rd.d);
                    ix_piece(e, rd.d, degree)?
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown ideal `{other}` (expected j, g, or ix)"
                    )))
                }
            };
            match format {
                Format::Json => Ok(format!(
                    "{{\"which\":\"{which}\",\"m\":{degree},\"dim\":{}}}\n",
                    piece.rank
                )),
                Format::Csv => Ok(format!("which,m,dim\n{which},{degree},{}\n", piece.rank)),
                Format::Text => Ok(format!("{}\n", piece.rank)),
            }
        }
        Command::SiScan { rd, max_degree } => {
            let report = saturation_scan(rd.r, rd.d, max_degree, scan_config())?;
            match format {
                Format::Json => Ok(serde_json::to_string_pretty(&scan_report_json(&report))? + "\n"),
                Format::Csv => Ok(scan_report_csv(&report)),
                Format::Text => {
                    let mut out = String::new();
                    for row in &report.rows {
                        out.push_str(&format!(
                            "m={} dim_J={} dim_IX={} equal={}\n",
                            row.m, row.dim_j, row.dim_ix, row.equal
                        ));
                    }
                    match report.candidate_si {
                        Some(si) => out.push_str(&format!(
                            "candidate SI({},{}) = {si} (verified up to m = {})\n",
                            rd.r, rd.d, max_degree
                        )),
                        None => out.push_str("no equality reached in the scanned range\n"),
                    }
                    Ok(out)
                }
            }
        }
        Command::Containment { r1, r2, d } => {
            let holds = ideal_containment(r1, r2, d)?;
            match format {
                Format::Json => Ok(format!(
                    "{{\"r1\":{r1},\"r2\":{r2},\"d\":{d},\"contains\":{holds}}}\n"
                )),
                _ => Ok(format!("J_{{{r1},{d}}} contains J_{{{r2},{d}}}: {holds}\n")),
            }
        }
        Command::TransferTest { n, r, form } => {
            let gamma = read_nary_form(&form)?;
            if gamma.n() != n {
                return Err(Error::InvalidArgument(format!(
                    "form has n = {}, flag says {n}",
                    gamma.n()
                )));
            }
            let vanishes = transfer_vanishing_test(&gamma, r)?;
            match format {
                Format::Json => Ok(format!("{{\"r\":{r},\"vanishes\":{vanishes}}}\n")),
                _ => Ok(format!("vanishes identically: {vanishes}\n")),
            }
        }
        Command::Umbral { n, d, expr, form } => {
            let gamma = read_nary_form(&form)?;
            if gamma.n() != n || gamma.order() != d {
                return Err(Error::InvalidArgument(format!(
                    "form is ({}, {}), flags say ({n}, {d})",
                    gamma.n(),
                    gamma.order()
                )));
            }
            let parsed = parse_bracket(&expr)?;
            let value = umbral_evaluate(&parsed, &gamma)?;
            match format {
                Format::Json => Ok(format!(
                    "{{\"is_zero\":{},\"result\":\"{}\"}}\n",
                    value.is_zero(),
                    value
                )),
                _ => Ok(format!("{value}\n")),
            }
        }
        Command::BitangentSystem { form } => {
            let gamma = read_nary_form(&form)?;
            let sys = bitangent_system(&gamma)?;
            match format {
                Format::Json => {
                    let parts: Vec<_> = sys.iter().map(binary_form_to_json).collect();
                    Ok(serde_json::to_string_pretty(&parts)? + "\n")
                }
                _ => {
                    let mut out = String::new();
                    for (i, e) in sys.iter().enumerate() {
                        let j = binary_form_to_json(e);
                        out.push_str(&format!("E{}: [{}]\n", i + 1, j.cayley_coefficients.join(", ")));
                    }
                    Ok(out)
                }
            }
        }
        Command::VerifyIdentities { suite } => {
            let lines = run_suites(&suite)?;
            let all_pass = lines.iter().all(|l| l.pass);
            let rendered = match format {
                Format::Json => serde_json::to_string_pretty(&lines)? + "\n",
                _ => {
                    let mut out = String::new();
                    for l in &lines {
                        out.push_str(&format!(
                            "{} {} {}\n",
                            if l.pass { "PASS" } else { "FAIL" },
                            l.name,
                            l.detail
                        ));
                    }
                    out
                }
            };
            if all_pass {
                Ok(rendered)
            } else {
                Err(Error::InvalidArgument(format!(
                    "identity suite failed:\n{rendered}"
                )))
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn render_covariant(cov: &Covariant, format: Format) -> Result<String> {
    let j = covariant_to_json(cov);
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&j)? + "\n"),
        _ => {
            let mut out = format!(
                "covariant of degree {} and order {} for binary {}-ics\n",
                j.degree, j.order, j.d
            );
            for (k, c) in j.coefficients.iter().enumerate() {
                out.push_str(&format!("phi_{k}: {c}\n"));
            }
            Ok(out)
        }
    }
}

fn render_form(f: &crate::binary::BinaryForm, format: Format) -> Result<String> {
    let j = binary_form_to_json(f);
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&j)? + "\n"),
        _ => Ok(format!(
            "order {} form: [{}]\n",
            j.order,
            j.cayley_coefficients.join(", ")
        )),
    }
}

// ---- identity suites ----

fn run_suites(which: &str) -> Result<Vec<SuiteLine>> {
    let mut lines = Vec::new();
    let which = if which == "lemma-e" { "lemmaE" } else { which };
    let all = which == "all";
    match which {
        "all" | "gordan" | "lowr" | "twisted-cubic" | "polar" | "lemmaE" => {}
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite `{other}` (gordan, lowr, twisted-cubic, polar, lemmaE, all)"
            )))
        }
    }
    if all || which == "gordan" {
        suite_gordan(&mut lines)?;
    }
    if all || which == "lowr" {
        suite_lowr(&mut lines)?;
    }
    if all || which == "twisted-cubic" {
        suite_twisted_cubic(&mut lines)?;
    }
    if all || which == "polar" {
        suite_polar(&mut lines)?;
    }
    if all || which == "lemmaE" {
        suite_lemma_e(&mut lines)?;
    }
    Ok(lines)
}

fn suite_gordan(lines: &mut Vec<SuiteLine>) -> Result<()> {
    use crate::identity::identity_check_str;
    for d in [5usize, 6] {
        let c = crate::rat::rat(2 * (2 * d as i64 - 5), d as i64 - 4);
        let rhs = format!("SCALE({}, T(F,T(F,F,2),3))", format_rat(&c));
        let pass = identity_check_str("T(F,T(F,F,4),1)", &rhs, d)?;
        lines.push(SuiteLine {
            name: format!("gordan-linear-d{d}"),
            pass,
            detail: format!("(F,(F,F)_4)_1 = {} (F,(F,F)_2)_3", format_rat(&c)),
        });
    }
    for d in [4usize, 5, 6] {
        let di = d as i64;
        let c1 = crate::rat::rat(di * (2 * di - 5), (di - 3) * (2 * di - 1));
        let c2 = crate::rat::rat(2 * (2 * di - 5), di - 3);
        let rhs = format!(
            "ADD(SCALE({}, POW(T(F,F,2),2)), SCALE({}, T(MUL(F,F),T(F,F,2),2)))",
            format_rat(&c1),
            format_rat(&c2)
        );
        let pass = identity_check_str("MUL(MUL(F,F),T(F,F,4))", &rhs, d)?;
        lines.push(SuiteLine {
            name: format!("gordan-quadratic-d{d}"),
            pass,
            detail: format!(
                "F^2 (F,F)_4 = {} (F,F)_2^2 + {} (F^2,(F,F)_2)_2",
                format_rat(&c1),
                format_rat(&c2)
            ),
        });
    }
    Ok(())
}

fn suite_lowr(lines: &mut Vec<SuiteLine>) -> Result<()> {
    for d in [4usize, 5, 6] {
        let f = Covariant::generic(d, "a", xvars());
        let h = f.transvect(&f, 2)?;
        // r = 2: Gott ∝ (F,(F,F)_2)_1
        let gott2 = goettingen_basic(2, d)?;
        let rhs2 = f.transvect(&h, 1)?;
        let c2 = gott2.proportionality(&rhs2);
        lines.push(SuiteLine {
            name: format!("lowr-r2-d{d}"),
            pass: c2.is_some(),
            detail: match &c2 {
                Some(c) => format!("Gott_2 = {} (F,(F,F)_2)_1", format_rat(c)),
                None => "not proportional".into(),
            },
        });
        // r = 3: Gott ∝ 3(2d-3)(F,F)_2^2 - 2(d-2) F^2 (F,F)_4
        let gott3 = goettingen_basic(3, d)?;
        let t4 = f.transvect(&f, 4)?;
        let term1 = h.mul(&h)?.scalar_mul(&crate::rat::rat_int(3 * (2 * d as i64 - 3)));
        let term2 = f
            .mul(&f)?
            .mul(&t4)?
            .scalar_mul(&crate::rat::rat_int(2 * (d as i64 - 2)));
        let rhs3 = term1.sub(&term2)?;
        let c3 = gott3.proportionality(&rhs3);
        lines.push(SuiteLine {
            name: format!("lowr-r3-d{d}"),
            pass: c3.is_some(),
            detail: match &c3 {
                Some(c) => format!(
                    "Gott_3 = {} [3(2d-3)(F,F)_2^2 - 2(d-2)F^2(F,F)_4]",
                    format_rat(c)
                ),
                None => "not proportional".into(),
            },
        });
    }
    Ok(())
}

fn suite_twisted_cubic(lines: &mut Vec<SuiteLine>) -> Result<()> {
    for r in [2usize, 4, 5] {
        let gott = goettingen_basic(r, 3)?;
        let f = Covariant::generic(3, "a", xvars());
        let t = gott.transvect(&f, 2)?;
        lines.push(SuiteLine {
            name: format!("twisted-cubic-r{r}"),
            pass: t.is_zero(),
            detail: "(Gott_{r,3}, F)_2 = 0".into(),
        });
    }
    // Gott_{1,3}^2 ∝ (F, Gott_{2,3})_1, scalar recorded
    let g13 = goettingen_basic(1, 3)?;
    let g23 = goettingen_basic(2, 3)?;
    let f = Covariant::generic(3, "a", xvars());
    let lhs = g13.mul(&g13)?;
    let rhs = f.transvect(&g23, 1)?;
    let c = lhs.proportionality(&rhs);
    lines.push(SuiteLine {
        name: "twisted-cubic-square".into(),
        pass: c.is_some(),
        detail: match &c {
            Some(c) => format!("Gott_{{1,3}}^2 = {} (F, Gott_{{2,3}})_1", format_rat(c)),
            None => "not proportional".into(),
        },
    });
    Ok(())
}

fn suite_polar(lines: &mut Vec<SuiteLine>) -> Result<()> {
    for (r, d) in [(1usize, 4usize), (2, 4), (2, 6)] {
        let chk = polar_identity_check(r, d)?;
        lines.push(SuiteLine {
            name: format!("polar-r{r}-d{d}"),
            pass: chk.holds,
            detail: match &chk.scalar {
                Some(c) => format!("scalar {}", format_rat(c)),
                None => "sides not proportional".into(),
            },
        });
    }
    Ok(())
}

fn suite_lemma_e(lines: &mut Vec<SuiteLine>) -> Result<()> {
    use crate::cayley::{e_minus, e_plus_pow, e_zero};
    use rand::Rng;
    let mut rng = crate::sampling::rng(2024);
    let mut pass = true;
    for d in 2..=6usize {
        let ctx = crate::vars::Context::new(vec![crate::vars::VarFamily::flat("a", 0, d + 1)])?;
        for n in 0..=4usize {
            // random polynomial in the coefficients
            let mut p = crate::poly::MultiPoly::zero(&ctx);
            for _ in 0..5 {
                let mut exps = vec![0u16; d + 1];
                for _ in 0..3 {
                    exps[rng.gen_range(0..=d)] += 1;
                }
                p = p.add(&crate::poly::MultiPoly::monomial(
                    &ctx,
                    crate::poly::Mono(exps),
                    crate::rat::rat_int(rng.gen_range(-5..=5)),
                ));
            }
            let lhs = e_minus(&e_plus_pow(&p, "a", n + 1)?, "a")?;
            let t1 = e_plus_pow(&e_minus(&p, "a")?, "a", n + 1)?;
            let t2 = e_plus_pow(&e_zero(&p, "a")?, "a", n)?
                .scalar_mul(&crate::rat::rat_int((n + 1) as i64));
            let t3 = e_plus_pow(&p, "a", n)?.scalar_mul(&crate::rat::rat_int((n * (n + 1)) as i64));
            if lhs != t1.sub(&t2).sub(&t3) {
                pass = false;
            }
        }
    }
    lines.push(SuiteLine {
        name: "lemma-e".into(),
        pass,
        detail: "E- E+^{n+1} = E+^{n+1} E- - (n+1) E+^n E0 - n(n+1) E+^n, n ≤ 4, d ≤ 6".into(),
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(line: &str) -> Vec<String> {
        std::iter::once("covforge")
            .chain(line.split_whitespace())
            .map(String::from)
            .collect()
    }

    #[test]
    fn test_zeta_command() {
        let out = dispatch(argv("zeta --d 6 --m 3 --q 6"));
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "2\n");
    }

    #[test]
    fn test_kappa_command() {
        let out = dispatch(argv("kappa --r 1 --d 3"));
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "2\n");
    }

    #[test]
    fn test_flag_validation_exit_2() {
        let out = dispatch(argv("zeta --d 6 --m 3"));
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty());
    }

    #[test]
    fn test_computation_error_exit_1_with_json() {
        let out = dispatch(argv("power-test --mu 3 --form /nonexistent.json --format json"));
        assert_eq!(out.code, 1);
        assert!(out.stderr.starts_with("{\"error\":"));
    }

    #[test]
    fn test_determinism() {
        let a = dispatch(argv("check-theorem-hgeq --r 2 --d 4 --format json"));
        let b = dispatch(argv("check-theorem-hgeq --r 2 --d 4 --format json"));
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout);
        assert!(a.stdout.contains("\"source_equal\": true"));
    }
}
