use std::path::Path;

use serde_json::{json, Value};

use starbrace::deform::{
    bar_positive_checks, deform, distributor_checks, distributor_verdict, relation_triple, right_distributors,
    search_bar_relations, sigma_tau_identities, solution_iff_distributor, three_term_verdict, Variant,
};
use starbrace::enumerate::enumerate_skew_braces;
use starbrace::error::{Error, Result};
use starbrace::format::{
    load_semilattice_spec, parse_pairmap, parse_skew_brace, parse_structure, parse_structure_file, write_pairmap,
    write_spec_file, write_structure, StructureFile,
};
use starbrace::iso::check_isomorphism;
use starbrace::semigroup::classify;
use starbrace::semilattice::{build_strong_semilattice, decompose};
use starbrace::skew::{deformation_checks, right_distributors_group, SkewBrace};
use starbrace::square::{build_square_brace, SquareBraceSpec};
use starbrace::star::{check_dual, check_weak_star_brace, is_square, square_verdict, weak_star_identities, DualWeakStarBrace};
use starbrace::structure::{StarBraceStructure, StarSemigroup};
use starbrace::witness::{NamedCheck, Verdict, Witness};
use starbrace::ybe::{braid_relation, is_ybe_solution};
use starbrace::Elem;

use crate::report::{digest, RunReport, Status};
use crate::{Cli, Command, Level, Outcome, Theorem, VariantArg, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS};

pub(crate) fn execute(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    let mut report = RunReport::new(name.clone(), cli.timing);
    let result = match &cli.command {
        Command::Check { path, level } => check(&mut report, path, *level),
        Command::Build {
            square,
            semilattice,
            out,
        } => build(&mut report, square.as_deref(), semilattice.as_deref(), out),
        Command::Decompose { path, out } => decompose_cmd(&mut report, path, out),
        Command::Deform { path, z, variant, out } => deform_cmd(&mut report, path, *z, *variant, out),
        Command::Verify { path, theorem } => verify(&mut report, path, *theorem),
        Command::Enumerate { order, out, .. } => enumerate(&mut report, *order, out),
    };
    match result {
        Ok(()) => Outcome {
            code: if report.passed() { EXIT_PASS } else { EXIT_CHECK_FAILED },
            stdout: report.to_json_lines(),
            stderr: report.human_summary(),
        },
        Err(e) => Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: format!("{}\n", json!({ "record": "error", "command": name, "message": e.to_string() })),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Check { .. } => "check".into(),
        Command::Build { .. } => "build".into(),
        Command::Decompose { .. } => "decompose".into(),
        Command::Deform { .. } => "deform".into(),
        Command::Verify { theorem, .. } => format!("verify {}", theorem_name(*theorem)),
        Command::Enumerate { .. } => "enumerate".into(),
    }
}

fn theorem_name(t: Theorem) -> &'static str {
    match t {
        Theorem::SolutionIffDistributor => "solution-iff-distributor",
        Theorem::Relations => "relations",
        Theorem::SigmaTau => "sigma-tau",
        Theorem::GroupDeformations => "group-deformations",
        Theorem::BarVariants => "bar-variants",
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load(report: &mut RunReport, path: &Path) -> Result<StructureFile> {
    let file = parse_structure_file(&read(path)?)?;
    report.structure_digest = Some(digest(&file.to_text()));
    Ok(file)
}

fn semigroup_only(path: &Path) -> Error {
    Error::InvalidSpec(format!("{} is a semigroup-only file; this command needs a star-brace", path.display()))
}

/// The input as a dual weak left ⋆-brace; skew-brace files are accepted.
fn load_dual(report: &mut RunReport, path: &Path) -> Result<DualWeakStarBrace> {
    match load(report, path)? {
        StructureFile::Structure(s) => DualWeakStarBrace::new(s),
        StructureFile::SkewBrace(g) => DualWeakStarBrace::new(g.as_star_brace()),
        StructureFile::Semigroup(_) => Err(semigroup_only(path)),
    }
}

fn load_skew_brace(report: &mut RunReport, path: &Path) -> Result<SkewBrace> {
    match load(report, path)? {
        StructureFile::SkewBrace(g) => Ok(g),
        StructureFile::Structure(s) => SkewBrace::from_star_brace(&s)
            .map_err(|w| Error::InvalidSpec(format!("not a skew brace: {w}"))),
        StructureFile::Semigroup(_) => Err(semigroup_only(path)),
    }
}

fn at_z(z: Elem) -> Option<String> {
    Some(format!("z={z}"))
}

fn iff(check: &str, inputs: &[Elem], left: (&str, bool), right: (&str, bool)) -> Verdict {
    if left.1 == right.1 {
        Ok(())
    } else {
        Err(Witness::predicate(
            check,
            inputs,
            format!("{} = {}, {} = {}", left.0, left.1, right.0, right.1),
        ))
    }
}

/// A library error inside a verifier, reported as a failing check.
fn as_checks(name: &str, z: Elem, result: Result<Vec<NamedCheck>>) -> Vec<NamedCheck> {
    result.unwrap_or_else(|e| vec![NamedCheck::new(name, Err(Witness::predicate(name, &[z], e.to_string())))])
}

fn classify_fact(report: &mut RunReport, reduct: &str, s: &StarSemigroup) {
    let c = classify(s);
    let classes: serde_json::Map<String, Value> = c.flags().iter().map(|&(k, v)| (k.to_string(), Value::from(v))).collect();
    report.fact(json!({ "reduct": reduct, "classes": classes }));
}

fn identity_names() -> Vec<String> {
    weak_star_identities(&StarBraceStructure::trivial())
        .into_iter()
        .map(|c| c.name)
        .collect()
}

/// The weak axioms, every weak ⋆-brace identity, and duality. A level is
/// skipped once an earlier one fails, and everything is skipped unless
/// `enabled`. Returns whether every level ran and passed.
fn brace_stack(report: &mut RunReport, s: &StarBraceStructure, enabled: bool, through_dual: bool) -> bool {
    let before = report.count(Status::Fail);
    let skip_reason = if enabled { "not a weak star-brace" } else { "an earlier level failed" };
    let weak = enabled && {
        report.check("weak_star_brace", None, || check_weak_star_brace(s));
        report.count(Status::Fail) == before
    };
    if !enabled {
        report.skip("weak_star_brace", None, skip_reason);
    }
    if weak {
        report.batch(None, || weak_star_identities(s));
    } else {
        for name in identity_names() {
            report.skip(&name, None, skip_reason);
        }
    }
    if through_dual {
        if weak {
            report.check("dual", None, || check_dual(s));
        } else {
            report.skip("dual", None, skip_reason);
        }
    }
    weak && report.count(Status::Fail) == before
}

fn check(report: &mut RunReport, path: &Path, level: Level) -> Result<()> {
    let s = match load(report, path)? {
        StructureFile::Semigroup(sg) => {
            if level > Level::Semigroup {
                return Err(semigroup_only(path));
            }
            report.check("mul_regular_star", None, || sg.check_regular_star());
            classify_fact(report, "mul", &sg);
            return Ok(());
        }
        StructureFile::Structure(s) => s,
        StructureFile::SkewBrace(g) => g.as_star_brace(),
    };
    report.check("mul_regular_star", None, || s.multiplicative().check_regular_star());
    report.check("add_regular_star", None, || s.additive().check_regular_star());
    classify_fact(report, "mul", &s.multiplicative());
    classify_fact(report, "add", &s.additive());
    if level == Level::Semigroup {
        return Ok(());
    }
    let enabled = report.passed();
    let ok = brace_stack(report, &s, enabled, level >= Level::Dual);
    if level == Level::Square {
        if ok {
            report.check("square", None, || square_verdict(&s));
        } else {
            report.skip("square", None, "an earlier level failed");
        }
    }
    Ok(())
}

fn build(report: &mut RunReport, square: Option<&[String]>, semilattice: Option<&Path>, out: &Path) -> Result<()> {
    let s = match (square, semilattice) {
        (Some([size, path]), _) => {
            let index_set_size = size
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("`{size}` is not an index-set size")))?;
            let group = parse_skew_brace(&read(Path::new(path))?)?;
            build_square_brace(&SquareBraceSpec { index_set_size, group })?
        }
        (_, Some(path)) => build_strong_semilattice(&load_semilattice_spec(path)?)?,
        _ => return Err(Error::InvalidSpec("one of --square or --semilattice is required".into())),
    };
    let text = write_structure(&s);
    report.structure_digest = Some(digest(&text));
    write(out, &text)?;
    brace_stack(report, &s, true, true);
    report.check("file_round_trip", None, || round_trip(out, &text, |t| parse_structure(t).map(|p| write_structure(&p))));
    report.fact(json!({ "output": file_name(out), "n": s.n(), "square": is_square(&s) }));
    Ok(())
}

/// Reads `path` back and compares its canonical text with `expected`.
fn round_trip(path: &Path, expected: &str, canonical: impl Fn(&str) -> Result<String>) -> Verdict {
    let back = read(path)
        .and_then(|t| canonical(&t))
        .map_err(|e| Witness::predicate("file_round_trip", &[], e.to_string()))?;
    if back == expected {
        Ok(())
    } else {
        Err(Witness::predicate("file_round_trip", &[], "file reads back differently"))
    }
}

fn decompose_cmd(report: &mut RunReport, path: &Path, out: &Path) -> Result<()> {
    let s = load_dual(report, path)?;
    let d = decompose(&s)?;
    report.batch(None, || d.checks.clone());

    let dir = out.parent().unwrap_or(Path::new(""));
    let stem = out
        .file_stem()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "spec".into());
    let mut names = Vec::new();
    for (alpha, c) in d.spec.components.iter().enumerate() {
        let name = format!("{stem}.node{alpha}.sb");
        write(&dir.join(&name), &write_structure(c.build()?.structure()))?;
        names.push(name);
    }
    write(out, &write_spec_file(&d.spec, &names))?;

    report.check("spec_round_trip", None, || {
        let fail = |e: Error| Witness::predicate("spec_round_trip", &[], e.to_string());
        let rebuilt = load_semilattice_spec(out)
            .and_then(|spec| build_strong_semilattice(&spec))
            .map_err(fail)?;
        check_isomorphism(&d.iso_certificate, &rebuilt, &s).map_err(fail)?
    });
    report.fact(json!({
        "output": file_name(out),
        "component_files": names,
        "nodes": d.spec.y_size(),
        "meet": d.spec.meet.as_slice(),
        "members": d.members,
    }));
    Ok(())
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::R => Variant::R,
        VariantArg::Rcheck => Variant::RCheck,
        VariantArg::Barhat => Variant::BarHat,
        VariantArg::Barcheck => Variant::BarCheck,
    }
}

fn deform_cmd(report: &mut RunReport, path: &Path, z: Elem, v: VariantArg, out: &Path) -> Result<()> {
    let s = load_dual(report, path)?;
    if z >= s.n() {
        return Err(Error::IndexOutOfRange {
            value: z,
            position: 0,
            n: s.n(),
        });
    }
    let v = variant(v);
    let r = deform(&s, z, v);
    let text = write_pairmap(&r);
    write(out, &text)?;

    let solution = is_ybe_solution(&r);
    let distributor = distributor_verdict(&s, z).is_ok();
    report.check("braid_oracle_agrees", at_z(z), || {
        iff(
            "braid_oracle_agrees",
            &[z],
            ("action conditions", solution.is_solution),
            ("braid relation", braid_relation(&r).is_ok()),
        )
    });
    report.check("distributor_criteria_agree", at_z(z), || {
        iff(
            "distributor_criteria_agree",
            &[z],
            ("definition", distributor),
            ("three-term criterion", three_term_verdict(&s, z).is_ok()),
        )
    });
    if v == Variant::R {
        report.check("solution_iff_distributor", at_z(z), || {
            iff(
                "solution_iff_distributor",
                &[z],
                ("solution", solution.is_solution),
                ("distributor", distributor),
            )
        });
    } else if distributor {
        report.check("solution_at_distributor", at_z(z), || solution.verdict());
    } else {
        report.skip("solution_at_distributor", at_z(z), "z is not a right distributor");
    }
    report.check("file_round_trip", None, || round_trip(out, &text, |t| parse_pairmap(t).map(|p| write_pairmap(&p))));
    report.fact(json!({
        "output": file_name(out),
        "variant": v.name(),
        "z": z,
        "solution": solution.is_solution,
        "distributor": distributor,
        "left_nondegenerate": solution.left_nondegenerate,
        "right_nondegenerate": solution.right_nondegenerate,
        "bijective": solution.bijective,
        "involutive": solution.involutive,
        "failed_condition": solution.failed_condition.as_ref().map(|(_, w)| w),
    }));
    Ok(())
}

fn verify(report: &mut RunReport, path: &Path, theorem: Theorem) -> Result<()> {
    if theorem == Theorem::GroupDeformations {
        let g = load_skew_brace(report, path)?;
        report.batch_at(|| {
            (0..g.n())
                .flat_map(|t| deformation_checks(&g, t).into_iter().map(move |c| (Some(format!("t={t}")), c)))
                .collect()
        });
        let d: Vec<Elem> = right_distributors_group(&g).into_iter().collect();
        report.fact(json!({ "n": g.n(), "distributors": d }));
        return Ok(());
    }

    let s = load_dual(report, path)?;
    let dist = right_distributors(&s);
    let zs: Vec<Elem> = dist.iter().collect();
    report.fact(json!({ "n": s.n(), "distributors": zs }));
    match theorem {
        Theorem::SolutionIffDistributor => {
            report.batch_at(|| {
                solution_iff_distributor(&s)
                    .into_iter()
                    .flat_map(|p| {
                        let at = at_z(p.z);
                        p.checks.into_iter().map(move |c| (at.clone(), c))
                    })
                    .collect()
            });
            report.batch(None, || as_checks("distributor_checks", 0, distributor_checks(&s, &dist)));
        }
        Theorem::Relations => {
            for &z in &zs {
                report.batch(at_z(z), || as_checks("relation_triple", z, relation_triple(&s, z)));
            }
        }
        Theorem::SigmaTau => {
            for &z in &zs {
                let mut facts = None;
                report.batch(at_z(z), || match sigma_tau_identities(&s, z) {
                    Ok(r) => {
                        facts = Some(json!({
                            "z": z,
                            "companion_holds": r.companion.is_ok(),
                            "companion_witness": r.companion.err(),
                            "sigma_non_commuting": r.non_commuting,
                        }));
                        r.checks
                    }
                    Err(e) => as_checks("sigma_tau_identities", z, Err(e)),
                });
                if let Some(f) = facts {
                    report.fact(f);
                }
            }
        }
        Theorem::BarVariants => {
            for &z in &zs {
                report.batch(at_z(z), || as_checks("bar_positive_checks", z, bar_positive_checks(&s, z)));
            }
            let name = file_name(path);
            for f in search_bar_relations([(name.as_str(), s.structure())]) {
                let claimed = match f.relation.claimed() {
                    Some(true) => Value::from("equal"),
                    Some(false) => Value::from("unequal in general"),
                    None => Value::Null,
                };
                let first = f.first_failure.map(|(_, z, w)| json!({ "z": z, "witness": w }));
                report.fact(json!({
                    "relation": f.relation.name(),
                    "claimed": claimed,
                    "held": f.held,
                    "tested": f.tested,
                    "first_failure": first,
                }));
            }
        }
        Theorem::GroupDeformations => unreachable!("handled above"),
    }
    Ok(())
}

fn enumerate(report: &mut RunReport, order: usize, out: &Path) -> Result<()> {
    let braces = enumerate_skew_braces(order)?;
    std::fs::create_dir_all(out).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    let mut files = Vec::new();
    for (i, g) in braces.iter().enumerate() {
        let name = format!("skewbrace-{order}-{i}.brace");
        write(&out.join(&name), &write_skew_brace_text(g))?;
        files.push(name);
    }
    report.check("files_round_trip", None, || {
        for (name, g) in files.iter().zip(&braces) {
            round_trip(&out.join(name), &write_skew_brace_text(g), |t| {
                parse_skew_brace(t).map(|p| write_skew_brace_text(&p))
            })
            .map_err(|w| w.renamed(format!("files_round_trip:{name}")))?;
        }
        Ok(())
    });
    for name in &files {
        report.fact(json!({ "file": name }));
    }
    report.fact(json!({ "census": "skewbrace", "order": order, "classes": braces.len() }));
    Ok(())
}

fn write_skew_brace_text(g: &SkewBrace) -> String {
    starbrace::format::write_skew_brace(g)
}
