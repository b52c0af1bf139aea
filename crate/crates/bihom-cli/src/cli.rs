//! Argument parsing and command dispatch.
//!
//! Exit status: 0 when every requested check passes, 1 when a check fails
//! or a construction's preconditions do not hold, 2 for usage and input
//! errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use bihom::algebra::{check_bihom_algebra, check_module, tensor_product, untwist, yau_twist, BiHomAlgebra};
use bihom::bialgebra::{
    check_antipode_general, check_antipode_properties, check_bihom_bialgebra, check_module_bihom_algebra,
    find_primitives, is_monoidal, primitive_bracket, primitive_witness, solve_antipode_monoidal, yau_twist_bialgebra,
    BiHomBialgebra, BialgebraMaps,
};
use bihom::coalgebra::{
    check_bihom_coalgebra, check_comodule, dual_algebra, dual_coalgebra, tensor_product_coalgebras, yau_twist_coalgebra,
};
use bihom::exactnum::{parse_scalar, Rational};
use bihom::lie::{check_bihom_lie, commutator_lie, yau_twist_lie};
use bihom::smash::{smash_product, SmashData};
use bihom::twisting::{
    apply_pseudotwistor, check_pseudotwistor, check_twisting_map, twisted_tensor_product, TwistingMap,
};
use bihom::{CheckReport, Field, Matrix};
use bihom_quantum::verify::{check_confluence, right_factors, verify_action_grid, verify_smash_grid};
use bihom_quantum::{TwistParams, DEFAULT_BOUND};

use crate::format::{parse_structure, serialize_structure, FormatError, Structure};

#[derive(Parser, Debug)]
#[command(
    name = "bihom",
    version,
    about = "Build and check finite-dimensional BiHom structures"
)]
struct Cli {
    /// Require every input file to use this field ("Q", "Fp:<p>", "Q(q)").
    #[arg(long, global = true)]
    field: Option<String>,
    /// Also print the structures that are written.
    #[arg(long, global = true)]
    verbose: bool,
    /// Maximum number of witnesses printed per report.
    #[arg(long, global = true, default_value_t = 3)]
    witness_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Where to write the constructed structure.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of the structure in FILE.
    Check {
        file: PathBuf,
        /// Algebra, coalgebra or bialgebra that a module, comodule, action or pseudotwistor lives over.
        #[arg(long)]
        over: Option<PathBuf>,
    },
    /// Yau twist by extra structure maps (map files; omitted maps are the identity).
    Twist {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<PathBuf>,
        #[arg(long)]
        beta: Option<PathBuf>,
        #[arg(long)]
        psi: Option<PathBuf>,
        #[arg(long)]
        omega: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Recover the associative algebra behind an algebra with invertible maps.
    Untwist {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Tensor product of two algebras or two coalgebras.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Dual coalgebra of an algebra, or dual algebra of a coalgebra.
    Dual {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Commutator BiHom-Lie algebra.
    Lie {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Basis of the primitive elements of a bialgebra.
    Primitives { file: PathBuf },
    /// Solve for or verify an antipode.
    Antipode {
        #[command(subcommand)]
        action: AntipodeCommand,
    },
    /// Verify or apply a pseudotwistor.
    Pseudotwistor {
        #[command(subcommand)]
        action: PseudotwistorCommand,
    },
    /// Twisted tensor product A ⊗_R B.
    Ttp {
        left: PathBuf,
        right: PathBuf,
        twisting_map: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Smash product A # H of a module algebra (action file) over a bialgebra.
    Smash {
        bialgebra: PathBuf,
        action: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Built-in demonstrations.
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand, Debug)]
enum AntipodeCommand {
    /// Solve the antipode equations of a monoidal bialgebra.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Check a given antipode (map file).
    Verify { file: PathBuf, antipode: PathBuf },
}

#[derive(Subcommand, Debug)]
enum PseudotwistorCommand {
    Verify {
        algebra: PathBuf,
        pseudotwistor: PathBuf,
    },
    Apply {
        algebra: PathBuf,
        pseudotwistor: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Subcommand, Debug)]
enum DemoCommand {
    /// Smash product of the twisted quantum plane with twisted U_q(sl2).
    Uqsl2 {
        /// Exponents m, n, r, s range over 0..=GRID.
        #[arg(long, default_value_t = 2)]
        grid: u32,
        #[arg(long, default_value = "2")]
        lambda1: String,
        #[arg(long, default_value = "3")]
        lambda2: String,
        #[arg(long, default_value = "5")]
        lambda3: String,
        #[arg(long, default_value = "7")]
        lambda4: String,
        #[arg(long, default_value = "1/2")]
        xi: String,
        /// Longest word in the rewriting confluence check.
        #[arg(long, default_value_t = 4)]
        words: usize,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Construction(#[from] bihom::Error),
    #[error("{0}")]
    Quantum(#[from] bihom_quantum::QuantumError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Format { .. } => 2,
            CliError::Construction(_) | CliError::Quantum(_) => 1,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Session {
    field: Option<Field>,
    verbose: bool,
    witness_limit: usize,
    out: String,
    passed: bool,
}

type Res<T> = std::result::Result<T, CliError>;

impl Session {
    fn load(&self, path: &Path) -> Res<Structure> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{shown}: {e}")))?;
        let s = parse_structure(&text).map_err(|source| CliError::Format {
            path: shown.clone(),
            source,
        })?;
        if let Some(f) = self.field {
            if s.field() != f {
                return Err(CliError::Usage(format!("{shown}: field {} but --field {f}", s.field())));
            }
        }
        Ok(s)
    }

    fn report(&mut self, title: &str, r: &CheckReport) {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(self.out, "== {title}: {verdict} ({} checks)", r.entries.len());
        self.out.push_str(&r.render(self.witness_limit));
        self.passed &= r.passed();
    }

    fn note(&mut self, line: impl AsRef<str>) {
        self.out.push_str(line.as_ref());
        self.out.push('\n');
    }

    /// Re-checks a constructed structure, then writes it when asked to.
    fn emit(&mut self, s: Structure, report: CheckReport, out: &Output) -> Res<()> {
        self.report(&format!("constructed {}", s.kind()), &report);
        if !report.passed() {
            self.note("output violates its axioms; nothing written");
            return Ok(());
        }
        let text = serialize_structure(&s);
        if self.verbose {
            self.out.push_str(&text);
        }
        if let Some(path) = &out.out {
            std::fs::write(path, &text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            self.note(format!("wrote {}", path.display()));
        }
        Ok(())
    }
}

fn expect_algebra(s: Structure, what: &str) -> Res<BiHomAlgebra> {
    match s {
        Structure::Algebra(a) => Ok(a),
        other => Err(CliError::Usage(format!(
            "{what}: expected an algebra, found {}",
            other.kind()
        ))),
    }
}

fn expect_bialgebra(s: Structure, what: &str) -> Res<BiHomBialgebra> {
    match s {
        Structure::Bialgebra(h) => Ok(h),
        other => Err(CliError::Usage(format!(
            "{what}: expected a bialgebra, found {}",
            other.kind()
        ))),
    }
}

fn expect_map(s: Structure, what: &str) -> Res<Matrix> {
    match s {
        Structure::Map(m) => Ok(m),
        other => Err(CliError::Usage(format!(
            "{what}: expected a map, found {}",
            other.kind()
        ))),
    }
}

fn check_structure(s: &Structure) -> Res<Option<CheckReport>> {
    Ok(match s {
        Structure::Algebra(a) => Some(check_bihom_algebra(a)?),
        Structure::Coalgebra(c) => Some(check_bihom_coalgebra(c)?),
        Structure::Bialgebra(h) => Some(check_bihom_bialgebra(h)?),
        Structure::Lie(l) => Some(check_bihom_lie(l)?),
        _ => None,
    })
}

fn parse_rational(name: &str, text: &str) -> Res<Rational> {
    let s = parse_scalar(Field::Rational, text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))?;
    Ok(s.as_rational().expect("parsed over Q").clone())
}

fn run_command(sess: &mut Session, cmd: Command) -> Res<()> {
    match cmd {
        Command::Check { file, over } => {
            let s = sess.load(&file)?;
            let title = format!("{} {}", s.kind(), file.display());
            if let Some(r) = check_structure(&s)? {
                sess.report(&title, &r);
                return Ok(());
            }
            let base_path = over.ok_or_else(|| CliError::Usage(format!("{} files need --over", s.kind())))?;
            let base = sess.load(&base_path)?;
            let r = match (s, base) {
                (Structure::Module(m), Structure::Algebra(a)) => check_module(&a, &m)?,
                (Structure::Comodule(m), Structure::Coalgebra(c)) => check_comodule(&c, &m)?,
                (Structure::Action { algebra, action }, Structure::Bialgebra(h)) => {
                    check_module_bihom_algebra(&h, &algebra, &action)?
                }
                (Structure::Pseudotwistor(p), Structure::Algebra(a)) => check_pseudotwistor(&a, &p)?,
                (s, b) => {
                    return Err(CliError::Usage(format!("cannot check {} over {}", s.kind(), b.kind())));
                }
            };
            sess.report(&title, &r);
        }
        Command::Twist {
            file,
            alpha,
            beta,
            psi,
            omega,
            out,
        } => {
            let s = sess.load(&file)?;
            let load_map = |p: Option<PathBuf>, d: usize, f: Field| -> Res<Matrix> {
                match p {
                    None => Ok(Matrix::identity(f, d)),
                    Some(p) => expect_map(sess.load(&p)?, &p.display().to_string()),
                }
            };
            let twisted = match s {
                Structure::Algebra(a) => {
                    let (d, f) = (a.dim(), a.field());
                    Structure::Algebra(yau_twist(&a, &load_map(alpha, d, f)?, &load_map(beta, d, f)?)?)
                }
                Structure::Lie(l) => {
                    let (d, f) = (l.dim(), l.field());
                    Structure::Lie(yau_twist_lie(&l, &load_map(alpha, d, f)?, &load_map(beta, d, f)?)?)
                }
                Structure::Coalgebra(c) => {
                    let (d, f) = (c.dim(), c.field());
                    Structure::Coalgebra(yau_twist_coalgebra(&c, &load_map(psi, d, f)?, &load_map(omega, d, f)?)?)
                }
                Structure::Bialgebra(h) => {
                    let (d, f) = (h.labels.len(), h.mu.field());
                    let maps = BialgebraMaps {
                        alpha: load_map(alpha, d, f)?,
                        beta: load_map(beta, d, f)?,
                        psi: load_map(psi, d, f)?,
                        omega: load_map(omega, d, f)?,
                    };
                    Structure::Bialgebra(yau_twist_bialgebra(&h, &maps)?)
                }
                other => return Err(CliError::Usage(format!("cannot twist {}", other.kind()))),
            };
            let r = check_structure(&twisted)?.expect("twists are checkable");
            sess.emit(twisted, r, &out)?;
        }
        Command::Untwist { file, out } => {
            let a = expect_algebra(sess.load(&file)?, &file.display().to_string())?;
            let u = untwist(&a)?;
            let r = check_bihom_algebra(&u)?;
            sess.emit(Structure::Algebra(u), r, &out)?;
        }
        Command::Tensor { left, right, out } => {
            let t = match (sess.load(&left)?, sess.load(&right)?) {
                (Structure::Algebra(a), Structure::Algebra(b)) => Structure::Algebra(tensor_product(&a, &b)?),
                (Structure::Coalgebra(a), Structure::Coalgebra(b)) => {
                    Structure::Coalgebra(tensor_product_coalgebras(&a, &b)?)
                }
                (a, b) => return Err(CliError::Usage(format!("cannot tensor {} with {}", a.kind(), b.kind()))),
            };
            let r = check_structure(&t)?.expect("checkable");
            sess.emit(t, r, &out)?;
        }
        Command::Dual { file, out } => {
            let d = match sess.load(&file)? {
                Structure::Algebra(a) => Structure::Coalgebra(dual_coalgebra(&a)?),
                Structure::Coalgebra(c) => Structure::Algebra(dual_algebra(&c)?),
                other => return Err(CliError::Usage(format!("cannot dualize {}", other.kind()))),
            };
            let r = check_structure(&d)?.expect("checkable");
            sess.emit(d, r, &out)?;
        }
        Command::Lie { file, out } => {
            let a = expect_algebra(sess.load(&file)?, &file.display().to_string())?;
            let l = commutator_lie(&a)?;
            let r = check_bihom_lie(&l)?;
            sess.emit(Structure::Lie(l), r, &out)?;
        }
        Command::Primitives { file } => {
            let h = expect_bialgebra(sess.load(&file)?, &file.display().to_string())?;
            let basis = find_primitives(&h)?;
            sess.note(format!("primitive space has dimension {}", basis.len()));
            let mut r = CheckReport::new();
            for (i, x) in basis.iter().enumerate() {
                let shown: Vec<String> = x.iter().map(ToString::to_string).collect();
                sess.note(format!("  p{i} = [{}]", shown.join(", ")));
                r.record(format!("p{i} is primitive"), primitive_witness(&h, x)?);
                let (wx, px) = (h.omega.apply(x), h.psi.apply(x));
                let w = (wx != px).then(|| bihom::Witness::new(vec![i], wx, px));
                r.record(format!("omega(p{i})=psi(p{i})"), w);
            }
            for (i, x) in basis.iter().enumerate() {
                for (j, y) in basis.iter().enumerate() {
                    let b = primitive_bracket(&h, x, y)?;
                    r.record(format!("[p{i},p{j}] is primitive"), primitive_witness(&h, &b)?);
                }
            }
            sess.report("primitives", &r);
        }
        Command::Antipode { action } => match action {
            AntipodeCommand::Solve { file, out } => {
                let h = expect_bialgebra(sess.load(&file)?, &file.display().to_string())?;
                match solve_antipode_monoidal(&h)? {
                    None => {
                        sess.note("no antipode exists");
                        sess.passed = false;
                    }
                    Some(s) => {
                        let r = check_antipode_properties(&h, &s)?;
                        sess.emit(Structure::Map(s), r, &out)?;
                    }
                }
            }
            AntipodeCommand::Verify { file, antipode } => {
                let h = expect_bialgebra(sess.load(&file)?, &file.display().to_string())?;
                let s = expect_map(sess.load(&antipode)?, &antipode.display().to_string())?;
                let r = if is_monoidal(&h)? {
                    check_antipode_properties(&h, &s)?
                } else {
                    check_antipode_general(&h, &s)?
                };
                sess.report("antipode", &r);
            }
        },
        Command::Pseudotwistor { action } => match action {
            PseudotwistorCommand::Verify { algebra, pseudotwistor } => {
                let a = expect_algebra(sess.load(&algebra)?, &algebra.display().to_string())?;
                let Structure::Pseudotwistor(p) = sess.load(&pseudotwistor)? else {
                    return Err(CliError::Usage("expected a pseudotwistor file".into()));
                };
                sess.report("pseudotwistor", &check_pseudotwistor(&a, &p)?);
            }
            PseudotwistorCommand::Apply {
                algebra,
                pseudotwistor,
                out,
            } => {
                let a = expect_algebra(sess.load(&algebra)?, &algebra.display().to_string())?;
                let Structure::Pseudotwistor(p) = sess.load(&pseudotwistor)? else {
                    return Err(CliError::Usage("expected a pseudotwistor file".into()));
                };
                let r = check_pseudotwistor(&a, &p)?;
                sess.report("pseudotwistor", &r);
                if r.passed() {
                    let t = apply_pseudotwistor(&a, &p)?;
                    let r = check_bihom_algebra(&t)?;
                    sess.emit(Structure::Algebra(t), r, &out)?;
                }
            }
        },
        Command::Ttp {
            left,
            right,
            twisting_map,
            out,
        } => {
            let a = expect_algebra(sess.load(&left)?, &left.display().to_string())?;
            let b = expect_algebra(sess.load(&right)?, &right.display().to_string())?;
            let r = TwistingMap {
                r: expect_map(sess.load(&twisting_map)?, &twisting_map.display().to_string())?,
            };
            let rep = check_twisting_map(&a, &b, &r)?;
            sess.report("twisting map", &rep);
            if rep.passed() {
                let t = twisted_tensor_product(&a, &b, &r)?;
                let rep = check_bihom_algebra(&t)?;
                sess.emit(Structure::Algebra(t), rep, &out)?;
            }
        }
        Command::Smash { bialgebra, action, out } => {
            let h = expect_bialgebra(sess.load(&bialgebra)?, &bialgebra.display().to_string())?;
            let Structure::Action { algebra, action } = sess.load(&action)? else {
                return Err(CliError::Usage("second argument must be an action file".into()));
            };
            let rep = check_module_bihom_algebra(&h, &algebra, &action)?;
            sess.report("module algebra", &rep);
            if rep.passed() {
                let s = smash_product(&SmashData::new(h, algebra, action))?;
                let rep = check_bihom_algebra(&s)?;
                sess.emit(Structure::Algebra(s), rep, &out)?;
            }
        }
        Command::Demo {
            which:
                DemoCommand::Uqsl2 {
                    grid,
                    lambda1,
                    lambda2,
                    lambda3,
                    lambda4,
                    xi,
                    words,
                },
        } => {
            let lambda = [
                parse_rational("lambda1", &lambda1)?,
                parse_rational("lambda2", &lambda2)?,
                parse_rational("lambda3", &lambda3)?,
                parse_rational("lambda4", &lambda4)?,
            ];
            let tp = TwistParams::rational(lambda, parse_rational("xi", &xi)?)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let bound = DEFAULT_BOUND.max(4 * grid as usize + 2);
            sess.report("PBW rewriting confluence", &check_confluence(words));
            sess.report("quantum plane action formulas", &verify_action_grid(grid, &tp, bound));
            let smash = verify_smash_grid(grid, &right_factors(), &tp, bound)?;
            sess.report("smash product formulas", &smash);
        }
    }
    Ok(())
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome { code, stdout, stderr };
        }
    };
    let field = match cli.field.as_deref().map(crate::format::parse_field).transpose() {
        Ok(f) => f,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: --field: {e}\n"),
            }
        }
    };
    let mut sess = Session {
        field,
        verbose: cli.verbose,
        witness_limit: cli.witness_limit,
        out: String::new(),
        passed: true,
    };
    match run_command(&mut sess, cli.command) {
        Ok(()) => Outcome {
            code: if sess.passed { 0 } else { 1 },
            stdout: sess.out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.code(),
            stdout: sess.out,
            stderr: format!("error: {e}\n"),
        },
    }
}
