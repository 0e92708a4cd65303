//! Command-line front end: argument parsing, subcommands and report output.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use crate::beck::{beck_unit, beck_universal_all, BeckModule};
use crate::crude::{chi, compose_recover, CrudeWreath};
use crate::error::Error;
use crate::extensions::{is_split, sections, Extension, Section, SplitExtension};
use crate::free_product::{l_of_extension, triangle_check, DEFAULT_MAX_WORD_LEN, DEFAULT_WORD_BUDGET};
use crate::group::{enumerate_homs_with_budget, GroupRef};
use crate::io::{
    group_to_json, parse_group, read_doc, BeckDoc, ExtensionDoc, GroupDoc, InputError, LieExtensionDoc, SectionDoc,
};
use crate::kk_embed::{
    eta_split_into, kk_embed, translation_equivariance_failures, universal_factorization, verify_embedding, MorphismRef,
};
use crate::lie::{lie_kk_embed, probe_conventions, verify_lie_embedding};
use crate::linalg::unit_vector;
use crate::report::{CheckEntry, Report, Status};
use crate::suite::{guarded, run_suite};
use crate::wreath::{r_on_morphism, wreath_product_with_budget, DEFAULT_TABLE_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kkwreath",
    version,
    about = "Embeddings of group and Lie algebra extensions into wreath products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Human-readable report instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Maximal word length for free-product enumeration.
    #[arg(long, global = true)]
    pub maxlen: Option<usize>,
    /// Truncation degree for Lie computations.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Size budget for tables and enumerations.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a group and round-trip its table.
    Group {
        #[arg(long)]
        input: PathBuf,
    },
    /// Build the wreath product of two groups.
    Wreath {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Embed an extension into the wreath product of its kernel by its quotient.
    Embed {
        #[arg(long)]
        extension: PathBuf,
        /// Index into the enumerated sections; defaults to `s` in the file, else 0.
        #[arg(long)]
        section: Option<usize>,
    },
    /// Check the universal property of the split embedding.
    VerifyUniversality {
        #[arg(long)]
        extension: PathBuf,
        /// The group `C` of `C wr B`; defaults to the kernel.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Check the unit and universal property of the coinduced module.
    BeckUniversal {
        #[arg(long)]
        module: PathBuf,
        /// The abelian group `A` of `Fun(B, A)`; defaults to the module.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Enumerate the kernel of the fold map and compare with its presentation.
    FreeKernel {
        #[arg(long)]
        extension: PathBuf,
    },
    /// Build the crude embedding and recover the classical one.
    Crude {
        #[arg(long)]
        extension: PathBuf,
        #[arg(long)]
        section: Option<usize>,
    },
    /// Embed a Lie algebra extension, truncated at `--degree`.
    LieEmbed {
        #[arg(long)]
        extension: PathBuf,
        /// A section matrix; defaults to `s` in the extension file.
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Run every built-in check.
    Suite,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Input { path: String, source: InputError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot write report: {0}")]
    Output(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(e) if !matches!(e, Error::BudgetExceeded { .. }) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load<T: serde::de::DeserializeOwned, U>(
    path: &Path,
    build: impl FnOnce(T) -> Result<U, InputError>,
) -> CliResult<U> {
    let wrap = |source| CliError::Input {
        path: path.display().to_string(),
        source,
    };
    build(read_doc(path).map_err(wrap)?).map_err(wrap)
}

fn load_group(path: &Path) -> CliResult<GroupRef> {
    load(path, |d: GroupDoc| d.build())
}

fn load_extension(path: &Path) -> CliResult<(Extension, Option<Section>)> {
    load(path, |d: ExtensionDoc| d.build())
}

fn choose_section(e: &Extension, given: Option<Section>, index: Option<usize>) -> CliResult<Section> {
    match (index, given) {
        (Some(i), _) => {
            let all = sections(e);
            let n = all.len();
            all.into_iter()
                .nth(i)
                .ok_or_else(|| CliError::Usage(format!("section index {i} out of range (extension has {n} sections)")))
        }
        (None, Some(s)) => Ok(s),
        (None, None) => Ok(sections(e).swap_remove(0)),
    }
}

fn split_of(e: &Extension, given: Option<&Section>) -> Option<SplitExtension> {
    let s = given.and_then(|s| s.as_hom(e)).or_else(|| is_split(e))?;
    SplitExtension::new(e.clone(), s).ok()
}

impl Cli {
    fn budget(&self) -> u128 {
        self.budget.unwrap_or(DEFAULT_TABLE_BUDGET)
    }

    fn hom_budget(&self) -> u128 {
        self.budget.unwrap_or(crate::group::DEFAULT_HOM_BUDGET)
    }

    pub fn execute(&self) -> CliResult<Report> {
        let mut report = Report::new(self.command_name());
        match &self.command {
            Command::Group { input } => self.group(&mut report, input)?,
            Command::Wreath { a, b } => self.wreath(&mut report, a, b)?,
            Command::Embed { extension, section } => self.embed(&mut report, extension, *section)?,
            Command::VerifyUniversality { extension, target } => {
                self.universality(&mut report, extension, target.as_deref())?
            }
            Command::BeckUniversal { module, target } => self.beck(&mut report, module, target.as_deref())?,
            Command::FreeKernel { extension } => self.free_kernel(&mut report, extension)?,
            Command::Crude { extension, section } => self.crude(&mut report, extension, *section)?,
            Command::LieEmbed { extension, section } => self.lie_embed(&mut report, extension, section.as_deref())?,
            Command::Suite => report = run_suite(),
        }
        Ok(report)
    }

    fn command_name(&self) -> String {
        let name = match &self.command {
            Command::Group { .. } => "group",
            Command::Wreath { .. } => "wreath",
            Command::Embed { .. } => "embed",
            Command::VerifyUniversality { .. } => "verify-universality",
            Command::BeckUniversal { .. } => "beck-universal",
            Command::FreeKernel { .. } => "free-kernel",
            Command::Crude { .. } => "crude",
            Command::LieEmbed { .. } => "lie-embed",
            Command::Suite => "suite",
        };
        name.to_string()
    }

    fn group(&self, report: &mut Report, input: &Path) -> CliResult<()> {
        let g = load_group(input)?;
        report.push(CheckEntry::check(
            "group.axioms",
            "the table is closed, associative, has identity 0 and inverses",
            true,
            json!({"order": g.order()}),
        ));
        let text = group_to_json(&g);
        let exact = parse_group(&text).map(|back| group_to_json(&back) == text && back.same_table(&g));
        report.push(CheckEntry::check(
            "group.round_trip",
            "the table serializes and parses back unchanged",
            exact.unwrap_or(false),
            serde_json::from_str(&text).unwrap_or_default(),
        ));
        report.push(CheckEntry::new(
            "group.abelian",
            "whether the group is abelian",
            Status::Informational,
            json!({"abelian": g.is_abelian(), "element_orders": g.order_profile()}),
        ));
        Ok(())
    }

    fn wreath(&self, report: &mut Report, a: &Path, b: &Path) -> CliResult<()> {
        let (a, b) = (load_group(a)?, load_group(b)?);
        let w = wreath_product_with_budget(&a, &b, self.budget())?;
        let expected = a.order().pow(b.order() as u32) * b.order();
        report.push(CheckEntry::check(
            "wreath.order",
            "|A wr B| = |A|^|B| |B|",
            w.order() == expected,
            json!({"order": w.order(), "expected": expected}),
        ));
        report.push(CheckEntry::check(
            "wreath.split_extension",
            "Fun(B, A) -> A wr B -> B is a split extension with the constant-function section",
            w.kappa().is_injective() && b.elements().all(|x| w.pi().apply(w.sigma().apply(x)) == x),
            json!({"kappa": w.kappa().map(), "pi": w.pi().map(), "sigma": w.sigma().map()}),
        ));
        Ok(())
    }

    fn embed(&self, report: &mut Report, path: &Path, index: Option<usize>) -> CliResult<()> {
        let (e, given) = load_extension(path)?;
        let s = choose_section(&e, given, index)?;
        let kk = kk_embed(&e, &s)?;
        let check = verify_embedding(MorphismRef::Plain(&kk.morphism));
        report.push(CheckEntry::check(
            "embed.injective",
            "the embedding is injective on A and on G",
            check.injective_a && check.injective_g,
            json!({"injective": check.injective_a && check.injective_g, "witnesses": check.witnesses}),
        ));
        report.push(CheckEntry::check(
            "embed.diagram",
            "the embedding commutes with the kernel and quotient maps",
            check.diagram_ok,
            json!({"witnesses": check.witnesses}),
        ));
        let images: Vec<_> = e
            .g()
            .elements()
            .map(|g| {
                let x = kk.element(g);
                json!({"g": g, "h": x.h, "b": x.b})
            })
            .collect();
        report.push(CheckEntry::new(
            "embed.images",
            "images of the elements of G in A wr B",
            Status::Informational,
            json!({"section": s.map(), "wreath_order": kk.wreath.order(), "image_order": kk.image_order(), "images": images}),
        ));
        if let Some(hom) = s.as_hom(&e) {
            let split = SplitExtension::new(e.clone(), hom)?;
            let eta = eta_split_into(&split, &kk.wreath)?;
            let failures = translation_equivariance_failures(&eta, &kk.wreath);
            report.push(CheckEntry::check(
                "embed.equivariance",
                "for a homomorphic section, translating phi_A(a) by b equals phi_A(a^b)",
                failures.is_empty(),
                json!({"failures": failures}),
            ));
        }
        Ok(())
    }

    fn universality(&self, report: &mut Report, path: &Path, target: Option<&Path>) -> CliResult<()> {
        let (e, given) = load_extension(path)?;
        let split =
            split_of(&e, given.as_ref()).ok_or_else(|| CliError::Usage("the extension does not split".into()))?;
        let c = match target {
            Some(p) => load_group(p)?,
            None => e.a().clone(),
        };
        let wa = wreath_product_with_budget(e.a(), e.b(), self.budget())?;
        let wc = wreath_product_with_budget(&c, e.b(), self.budget())?;
        let eta = eta_split_into(&split, &wa)?;
        let mut rows = Vec::new();
        let mut ok = true;
        for gamma in enumerate_homs_with_budget(e.a(), &c, self.hom_budget())? {
            let alpha = r_on_morphism(&wa, &wc, &gamma)?.after(&eta)?;
            match universal_factorization(&split, &alpha, &wc) {
                Ok(f) => {
                    let good = f.alpha_bar.map() == gamma.map() && f.satisfiers == 1;
                    ok &= good;
                    rows.push(
                        json!({"gamma": gamma.map(), "recovered": f.alpha_bar.map(), "satisfiers": f.satisfiers}),
                    );
                }
                Err(err) => {
                    ok = false;
                    rows.push(json!({"gamma": gamma.map(), "error": err.to_string()}));
                }
            }
        }
        report.push(CheckEntry::check(
            "universality.factorization",
            "every R(gamma) . eta factors through a unique homomorphism, and it is gamma",
            ok,
            json!({"round_trips": rows}),
        ));
        Ok(())
    }

    fn beck(&self, report: &mut Report, path: &Path, target: Option<&Path>) -> CliResult<()> {
        let module: BeckModule = load(path, |d: BeckDoc| d.build())?;
        let a = match target {
            Some(p) => load_group(p)?,
            None => module.carrier().clone(),
        };
        report.push(guarded(
            "beck.unit",
            "the unit into the coinduced module is an injective equivariant homomorphism",
            || {
                let u = beck_unit(&module)?;
                Ok((u.map().is_injective(), json!({"unit": u.map().map()})))
            },
        ));
        report.push(guarded(
            "beck.universal",
            "every gamma: M -> A lifts to exactly one equivariant map into Fun(B, A)",
            || {
                let all = beck_universal_all(&module, &a)?;
                let rows: Vec<_> = all
                    .iter()
                    .map(|(g, l)| json!({"gamma": g.map(), "lift": l.lift.map().map(), "satisfiers": l.satisfiers}))
                    .collect();
                Ok((all.iter().all(|(_, l)| l.satisfiers == 1), json!(rows)))
            },
        ));
        Ok(())
    }

    fn free_kernel(&self, report: &mut Report, path: &Path) -> CliResult<()> {
        let (e, given) = load_extension(path)?;
        let maxlen = self.maxlen.unwrap_or(DEFAULT_MAX_WORD_LEN);
        let l = l_of_extension(&e);
        let words = l.kernel_words(maxlen)?;
        let mut listed = Vec::new();
        let mut mismatches = Vec::new();
        for w in &words {
            let p = l.word_to_pres(w)?;
            if l.pres_to_word(&p) != *w {
                mismatches.push(w.to_string());
            }
            listed.push(json!({"word": w, "pres": p}));
        }
        report.push(CheckEntry::check(
            "free_kernel.word_round_trip",
            format!("phi . psi is the identity on reduced kernel words of length <= {maxlen}"),
            mismatches.is_empty(),
            json!({"count": words.len(), "mismatches": mismatches, "words": listed}),
        ));
        let max_gens = maxlen / 2;
        let pres = l.pres_words(max_gens, self.budget.unwrap_or(DEFAULT_WORD_BUDGET))?;
        let mut bad = Vec::new();
        for p in &pres {
            if l.word_to_pres(&l.pres_to_word(p))? != l.normal_form(p) {
                bad.push(p.to_string());
            }
        }
        report.push(CheckEntry::check(
            "free_kernel.pres_round_trip",
            format!("psi . phi is the normal form on words with <= {max_gens} generators"),
            bad.is_empty(),
            json!({"count": pres.len(), "mismatches": bad}),
        ));
        if let Some(split) = split_of(&e, given.as_ref()) {
            report.push(guarded(
                "free_kernel.triangle",
                "the counit transposes back to the identity",
                || Ok((triangle_check(&split)?, serde_json::Value::Null)),
            ));
        }
        Ok(())
    }

    fn crude(&self, report: &mut Report, path: &Path, index: Option<usize>) -> CliResult<()> {
        let (e, given) = load_extension(path)?;
        let s = choose_section(&e, given, index)?;
        let cw = CrudeWreath::new(&e);
        report.push(guarded(
            "crude.upsilon",
            "upsilon is an injective homomorphism on every pair of G x G",
            || {
                let pairs = cw.verify_upsilon()?;
                let table: Vec<_> = e.g().elements().map(|g| cw.upsilon(g)).collect();
                Ok((pairs == e.g().order().pow(2), json!({"pairs": pairs, "upsilon": table})))
            },
        ));
        report.push(guarded(
            "crude.chi",
            "chi respects every relation (g, b)(g', b f(g)) = (g g', b)",
            || {
                let c = chi(&e, &s)?;
                let n = e.g().order();
                let table: Vec<Vec<usize>> = e
                    .g()
                    .elements()
                    .map(|g| e.b().elements().map(|b| c.generator(g, b)).collect())
                    .collect();
                Ok((
                    c.relations_checked() == n * n * e.b().order(),
                    json!({"relations": c.relations_checked(), "chi": table}),
                ))
            },
        ));
        report.push(guarded(
            "crude.recovery",
            "W(chi) . upsilon equals the classical embedding for this section",
            || {
                let r = compose_recover(&e, &s)?;
                Ok((
                    r.composite.same_maps(&r.classical),
                    json!({"section": s.map(), "phi_g": r.composite.phi_g().map()}),
                ))
            },
        ));
        Ok(())
    }

    fn lie_embed(&self, report: &mut Report, path: &Path, section: Option<&Path>) -> CliResult<()> {
        let (e, given) = load(path, |d: LieExtensionDoc| d.build())?;
        let s = match section {
            Some(p) => load(p, |d: SectionDoc| d.build(&e))?,
            None => given.ok_or_else(|| CliError::Usage("no section given; pass --section or add `s`".into()))?,
        };
        let d = self.degree.unwrap_or(3);
        report.extend(verify_lie_embedding(&e, &s, d)?);
        let n = e.g().dim();
        let images = (0..n)
            .map(|i| Ok(lie_kk_embed(&e, &s, &unit_vector(n, i), d)?.to_json()))
            .collect::<CliResult<Vec<_>>>()?;
        report.push(CheckEntry::new(
            "lie.images",
            format!("images of the basis of G, truncated at degree {d}"),
            Status::Informational,
            json!(images),
        ));
        let probes: Vec<_> = probe_conventions(&e, &s, d)?
            .into_iter()
            .map(|(c, ok)| json!({"convention": c, "homomorphism": ok}))
            .collect();
        report.push(CheckEntry::new(
            "lie.conventions",
            "which bracket conventions make the embedding a homomorphism",
            Status::Informational,
            json!(probes),
        ));
        Ok(())
    }
}

fn emit(cli: &Cli, report: &Report) -> CliResult<()> {
    let body = if cli.text {
        report.to_text()
    } else {
        serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body).map_err(CliError::Output),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match cli.execute() {
        Ok(report) => match emit(&cli, &report) {
            Ok(()) => report.exit_code(),
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
