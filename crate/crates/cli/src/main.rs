//! Command-line surface for the five-point DFT toolkit.
//!
//! Four subcommands: `emit` (named matrices and split pairs), `eigensystem`
//! (four computation methods, identical payloads), `verify` (the claims
//! registry, exit code 0/1), and `constants`.
//!
//! Output is UTF-8 JSON (canonical key order: object, n, precision, payload)
//! or CSV on stdout; diagnostics go to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage error. Complex numbers serialize as
//! [re, im] pairs in JSON; CSV keeps the real part alone unless the
//! imaginary part exceeds 1e-14, in which case it prints `re+imi`.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dft5::claims::{run_claims, ClaimsReport};
use dft5::oracle::alignment_phase;
use dft5::scalar::{Precision, Real};
use dft5::split::{split, SplitVariant};
use dft5::{
    build_named_matrix, dft_matrix, hermitian_eigensolver, phi_x_product, CMatrix, CVector,
    LadderSolver, MatrixKind,
};

#[derive(Parser)]
#[command(name = "dft5", version, about = "Five-point DFT operator family and eigensystem toolkit")]
struct Cli {
    /// Arithmetic precision: `64` (binary64) or `extended:<digits>` with at least 30 digits
    #[arg(long, global = true, default_value = "64")]
    precision: String,

    /// Floor applied to every verification threshold (loosens only)
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Seed for the randomized verification trials
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named matrix, the Phi X product, or one of its split pairs
    Emit {
        /// One of: dft, circulant, backward-identity, reflection, position,
        /// derivative, momentum, lowering, raising, number, partner-number,
        /// phi-x, split-symmetric, split-antisymmetric
        #[arg(long)]
        object: String,
        /// Dimension (phi-x and the splits exist only at n = 5)
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the eigensystem of the number operator
    Eigensystem {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate the full claims registry; exit 0 only if verification passes
    Verify {
        /// Number of seeded random vectors per annihilation check
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Print the constant table (q, s_n, c_n, xi, lambda, eta, phi, d_n)
    Constants {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Ladder,
    Power,
    Newton,
    Oracle,
}

impl Method {
    fn name(&self) -> &'static str {
        match self {
            Method::Ladder => "ladder",
            Method::Power => "power",
            Method::Newton => "newton",
            Method::Oracle => "oracle",
        }
    }
}

/// Canonical output envelope; field order is the serialized key order.
#[derive(Serialize)]
struct OutputDocument<P: Serialize> {
    object: String,
    n: usize,
    precision: String,
    payload: P,
}

#[derive(Serialize)]
struct MatrixPayload {
    matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Serialize)]
struct SparseEntryPayload {
    row: usize,
    col: usize,
    value: [f64; 2],
}

#[derive(Serialize)]
struct SplitPayload {
    annihilator: Vec<Vec<[f64; 2]>>,
    sparse_nonzero_count: usize,
    sparse_entries: Vec<SparseEntryPayload>,
}

#[derive(Serialize)]
struct EigensystemPayload {
    method: &'static str,
    lambda: Vec<f64>,
    vectors: Vec<Vec<[f64; 2]>>,
    parity: Vec<String>,
    dft_exponent: Vec<usize>,
}

#[derive(Serialize)]
struct ConstantsPayload {
    q: [f64; 2],
    s: Vec<f64>,
    c: Vec<f64>,
    xi0: f64,
    xi1: f64,
    lambda: Vec<f64>,
    eta: f64,
    phi_radians: f64,
    d: Vec<f64>,
}

#[derive(Serialize)]
struct ClaimPayload {
    id: String,
    statement: String,
    kind: String,
    status: String,
    residual: f64,
    threshold: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct ReportPayload {
    registry_version: u32,
    trials: usize,
    seed: u64,
    tolerance_floor: f64,
    pass: usize,
    fail: usize,
    pass_with_correction: usize,
    verification_passed: bool,
    claims: Vec<ClaimPayload>,
}

fn matrix_cells(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.dim())
        .map(|r| {
            (0..m.dim())
                .map(|c| {
                    let (re, im) = m.at(r, c).to_pair();
                    [re, im]
                })
                .collect()
        })
        .collect()
}

fn vector_cells(v: &CVector) -> Vec<[f64; 2]> {
    (0..v.dim())
        .map(|j| {
            let (re, im) = v.at(j).to_pair();
            [re, im]
        })
        .collect()
}

fn csv_cell(re: f64, im: f64) -> String {
    if im.abs() <= 1e-14 {
        format!("{re}")
    } else if im < 0.0 {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn print_json<P: Serialize>(doc: &OutputDocument<P>) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("finite values serialize")
    );
}

fn matrix_csv(m: &CMatrix) -> String {
    (0..m.dim())
        .map(|r| {
            (0..m.dim())
                .map(|c| {
                    let (re, im) = m.at(r, c).to_pair();
                    csv_cell(re, im)
                })
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

enum CliError {
    Usage(String),
}

fn parse_precision(s: &str) -> Result<Precision, CliError> {
    if s == "64" || s == "binary64" {
        return Ok(Precision::binary64());
    }
    if let Some(digits) = s.strip_prefix("extended:") {
        let digits: u32 = digits
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid digit count in `{s}`")))?;
        return Precision::extended(digits)
            .map_err(|e| CliError::Usage(format!("invalid precision `{s}`: {e}")));
    }
    Err(CliError::Usage(format!(
        "invalid precision `{s}`; expected `64` or `extended:<digits>`"
    )))
}

fn cmd_emit(object: &str, n: usize, format: Format, prec: &Precision) -> Result<(), CliError> {
    let usage = |e: dft5::Error| CliError::Usage(e.to_string());
    let label = prec.label();

    let special = matches!(object, "phi-x" | "split-symmetric" | "split-antisymmetric");
    if special && n != 5 {
        return Err(CliError::Usage(format!(
            "object `{object}` exists only at n = 5 (got n = {n})"
        )));
    }

    match object {
        "split-symmetric" | "split-antisymmetric" => {
            let variant = if object == "split-symmetric" {
                SplitVariant::Symmetric
            } else {
                SplitVariant::Antisymmetric
            };
            let pair = split(variant, prec);
            let payload = SplitPayload {
                annihilator: matrix_cells(&pair.annihilator),
                sparse_nonzero_count: pair.sparse.nnz(),
                sparse_entries: pair
                    .sparse
                    .entries()
                    .iter()
                    .map(|(r, c, v)| {
                        let (re, im) = v.to_pair();
                        SparseEntryPayload {
                            row: *r,
                            col: *c,
                            value: [re, im],
                        }
                    })
                    .collect(),
            };
            match format {
                Format::Json => print_json(&OutputDocument {
                    object: object.to_string(),
                    n,
                    precision: label,
                    payload,
                }),
                Format::Csv => {
                    println!("{}", matrix_csv(&pair.annihilator));
                    println!();
                    for (r, c, v) in pair.sparse.entries() {
                        let (re, im) = v.to_pair();
                        println!("{r},{c},{}", csv_cell(re, im));
                    }
                }
            }
            Ok(())
        }
        _ => {
            let matrix = match object {
                "dft" => dft_matrix(n, prec).map_err(usage)?,
                "phi-x" => phi_x_product(prec),
                name => {
                    let kind: MatrixKind = name.parse().map_err(CliError::Usage)?;
                    build_named_matrix(kind, n, prec).map_err(usage)?
                }
            };
            match format {
                Format::Json => print_json(&OutputDocument {
                    object: object.to_string(),
                    n,
                    precision: label,
                    payload: MatrixPayload {
                        matrix: matrix_cells(&matrix),
                    },
                }),
                Format::Csv => println!("{}", matrix_csv(&matrix)),
            }
            Ok(())
        }
    }
}

fn eigensystem_payload(method: Method, prec: &Precision) -> EigensystemPayload {
    let solver = LadderSolver::new(prec);
    let system = solver.eigensystem();
    let mut lambda: Vec<f64> = (0..5).map(|n| system.spectrum.lambda(n).to_f64()).collect();

    let vectors: Vec<CVector> = match method {
        Method::Ladder => (0..5).map(|n| system.vector(n).clone()).collect(),
        Method::Power => {
            let mut v = vec![system.vector(0).clone()];
            v.extend((1..5).map(|n| solver.power_formula(n).expect("index in range")));
            v
        }
        Method::Newton => {
            let newton = solver.newton_ladder();
            let f0 = system.vector(0);
            (0..5)
                .map(|n| {
                    newton.polynomials[n]
                        .apply(f0)
                        .expect("dimension five")
                        .scale_real(&(&Real::from(1.0) / &newton.d[n]))
                })
                .collect()
        }
        Method::Oracle => {
            let oracle = hermitian_eigensolver(solver.number_matrix(), prec)
                .expect("number operator is Hermitian");
            // reorder by DFT exponent and align each phase to the ladder
            (0..5)
                .map(|n| {
                    let target = system.spectrum.lambda(n);
                    let j = (0..5)
                        .min_by(|&a, &b| {
                            let da = (&oracle.eigenvalues[a] - target).abs();
                            let db = (&oracle.eigenvalues[b] - target).abs();
                            da.partial_cmp(&db).expect("finite")
                        })
                        .expect("five candidates");
                    lambda[n] = oracle.eigenvalues[j].to_f64();
                    let phase = alignment_phase(system.vector(n), &oracle.eigenvectors[j])
                        .expect("nonzero overlap");
                    oracle.eigenvectors[j].scale(&phase)
                })
                .collect()
        }
    };

    EigensystemPayload {
        method: method.name(),
        lambda,
        vectors: vectors.iter().map(vector_cells).collect(),
        parity: system.pairs.iter().map(|p| p.parity.to_string()).collect(),
        dft_exponent: system.pairs.iter().map(|p| p.dft_exponent).collect(),
    }
}

fn cmd_eigensystem(method: Method, format: Format, prec: &Precision) {
    let payload = eigensystem_payload(method, prec);
    match format {
        Format::Json => print_json(&OutputDocument {
            object: "eigensystem".to_string(),
            n: 5,
            precision: prec.label(),
            payload,
        }),
        Format::Csv => {
            println!("n,lambda,parity,dft_exponent,v0,v1,v2,v3,v4");
            for n in 0..5 {
                let cells: Vec<String> = payload.vectors[n]
                    .iter()
                    .map(|[re, im]| csv_cell(*re, *im))
                    .collect();
                println!(
                    "{n},{},{},{},{}",
                    payload.lambda[n],
                    payload.parity[n],
                    payload.dft_exponent[n],
                    cells.join(",")
                );
            }
        }
    }
}

fn report_payload(report: &ClaimsReport) -> ReportPayload {
    ReportPayload {
        registry_version: report.registry_version,
        trials: report.trials,
        seed: report.seed,
        tolerance_floor: report.tolerance_floor,
        pass: report.count(dft5::ClaimStatus::Pass),
        fail: report.count(dft5::ClaimStatus::Fail),
        pass_with_correction: report.count(dft5::ClaimStatus::PassWithCorrection),
        verification_passed: report.verification_passed(),
        claims: report
            .entries
            .iter()
            .map(|e| ClaimPayload {
                id: e.id.to_string(),
                statement: e.statement.to_string(),
                kind: e.kind.label().to_string(),
                status: e.status.label().to_string(),
                residual: e.residual,
                threshold: e.threshold,
                note: e.note.clone(),
            })
            .collect(),
    }
}

fn cmd_verify(
    trials: usize,
    seed: u64,
    tolerance: Option<f64>,
    prec: &Precision,
) -> Result<i32, CliError> {
    let floor = tolerance.unwrap_or(0.0);
    if floor < 0.0 {
        return Err(CliError::Usage("tolerance must be nonnegative".to_string()));
    }
    let report = run_claims(prec, trials, seed, floor)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    print_json(&OutputDocument {
        object: "claims-report".to_string(),
        n: 5,
        precision: prec.label(),
        payload: report_payload(&report),
    });
    Ok(if report.verification_passed() { 0 } else { 1 })
}

fn cmd_constants(format: Format, prec: &Precision) {
    let solver = LadderSolver::new(prec);
    let fr = solver.constants();
    let mix = solver.mixing();
    let newton = solver.newton_ladder();
    let spectrum = solver.closed_form_spectrum();
    let payload = ConstantsPayload {
        q: {
            let (re, im) = fr.q.to_pair();
            [re, im]
        },
        s: fr.s.iter().map(|x| x.to_f64()).collect(),
        c: fr.c.iter().map(|x| x.to_f64()).collect(),
        xi0: fr.xi0.to_f64(),
        xi1: fr.xi1.to_f64(),
        lambda: spectrum.values().iter().map(|x| x.to_f64()).collect(),
        eta: mix.eta.to_f64(),
        phi_radians: mix.phi.to_f64(),
        d: newton.d.iter().map(|x| x.to_f64()).collect(),
    };
    match format {
        Format::Json => print_json(&OutputDocument {
            object: "constants".to_string(),
            n: 5,
            precision: prec.label(),
            payload,
        }),
        Format::Csv => {
            // human-facing table: the angle is printed in degrees here
            println!("name,value");
            println!("q,{}", csv_cell(payload.q[0], payload.q[1]));
            for (k, v) in payload.s.iter().enumerate() {
                println!("s{k},{v}");
            }
            for (k, v) in payload.c.iter().enumerate() {
                println!("c{k},{v}");
            }
            println!("xi0,{}", payload.xi0);
            println!("xi1,{}", payload.xi1);
            for (k, v) in payload.lambda.iter().enumerate() {
                println!("lambda{k},{v}");
            }
            println!("eta,{}", payload.eta);
            println!("phi_degrees,{}", payload.phi_radians.to_degrees());
            for (k, v) in payload.d.iter().enumerate() {
                println!("d{k},{v}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let prec = parse_precision(&cli.precision)?;
    match cli.command {
        Command::Emit { object, n, format } => {
            cmd_emit(&object, n, format, &prec)?;
            Ok(0)
        }
        Command::Eigensystem { method, format } => {
            cmd_eigensystem(method, format, &prec);
            Ok(0)
        }
        Command::Verify { trials } => cmd_verify(trials, cli.seed, cli.tolerance, &prec),
        Command::Constants { format } => {
            cmd_constants(format, &prec);
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
