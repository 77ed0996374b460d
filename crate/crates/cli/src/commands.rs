use std::fmt::{self, Write as _};
use std::path::Path;

use hopfsym::catalog::{catalog_entries, run_regression};
use hopfsym::checkers::{
    check_frobenius_in_mh, check_plain, check_symmetric, hopf_symmetric_crosscheck, CheckReport,
    PlainKind,
};
use hopfsym::constructions::{coinvariants, smash_product, trivial_extension};
use hopfsym::exactlin::vector;
use hopfsym::interchange::{InterchangeDocument, ObjectSpec};
use hopfsym::structure::{
    check_theorem42_precondition, distinguished_pair, integrals, is_cosemisimple, is_semisimple,
    is_sovereign_character, is_unimodular, verify_integral_identities, Location, Side,
};
use hopfsym::{Field, HopfSC, Report, Scalar};
use serde_json::{json, Value};

use crate::{GlobalOpts, ObjectArgs, ReportFormat};

pub struct Output {
    pub text: String,
    /// False maps to exit status 1.
    pub ok: bool,
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Core(hopfsym::Error),
    /// The named object fails its axioms.
    Invalid(String, Report),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(s) => write!(f, "{s}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Invalid(name, report) => write!(f, "{name} fails validation:\n{report}"),
        }
    }
}

impl From<hopfsym::Error> for CliError {
    fn from(e: hopfsym::Error) -> CliError {
        CliError::Core(e)
    }
}

type CliResult = Result<Output, CliError>;

/// 2 for input that cannot be read as data, 1 for data that fails a check.
pub fn exit_code(e: &CliError) -> u8 {
    use hopfsym::Error as E;
    match e {
        CliError::Io(_) => 2,
        CliError::Core(
            E::Parse(_) | E::DimensionMismatch(_) | E::FieldMismatch(..) | E::NotPrime(_),
        ) => 2,
        CliError::Core(E::CapExceeded { .. }) => 2,
        CliError::Core(_) | CliError::Invalid(..) => 1,
    }
}

fn load(file: &Path, g: &GlobalOpts) -> Result<(InterchangeDocument, Field), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    let doc = InterchangeDocument::parse(&text)?;
    let field = match g.field {
        Some(f) => f,
        None => doc.declared_field()?,
    };
    Ok((doc, field))
}

fn require_valid(name: &str, report: Report) -> Result<(), CliError> {
    if report.is_ok() {
        Ok(())
    } else {
        Err(CliError::Invalid(name.to_string(), report))
    }
}

fn coords(v: &[Scalar]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn render(g: &GlobalOpts, json: Value, text: String, ok: bool) -> CliResult {
    let text = match g.report {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text,
    };
    Ok(Output { text, ok })
}

fn emit(doc: &InterchangeDocument) -> CliResult {
    Ok(Output {
        text: doc.to_json(),
        ok: true,
    })
}

/// Name of the Hopf algebra an object coacts over, for emitted documents.
fn hopf_name(doc: &InterchangeDocument, object: &str) -> String {
    match doc.objects.get(object) {
        Some(ObjectSpec::ComoduleAlgebra(c)) => {
            c.hopf.clone().unwrap_or_else(|| format!("{object}_hopf"))
        }
        _ => object.to_string(),
    }
}

pub fn validate(file: &Path, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(file, g)?;
    let mut all_ok = true;
    let mut text = String::new();
    let mut objects = serde_json::Map::new();
    let mut record = |name: &str, report: Report, text: &mut String| {
        all_ok &= report.is_ok();
        if report.is_ok() {
            let _ = writeln!(text, "{name}: ok");
        } else {
            let _ = writeln!(text, "{name}: fails");
            for line in report.to_string().lines() {
                let _ = writeln!(text, "  {line}");
            }
        }
        objects.insert(
            name.to_string(),
            serde_json::to_value(&report).expect("reports serialize"),
        );
    };
    for (name, obj) in &doc.objects {
        let report = match obj {
            ObjectSpec::Algebra(a) => a.build(field)?.validate(),
            ObjectSpec::Hopf(h) => h.build(field)?.validate(),
            ObjectSpec::ComoduleAlgebra(_) => doc.comodule(name, field)?.validate(),
        };
        record(name, report, &mut text);
    }
    for (name, c) in &doc.characters {
        let h = doc.hopf(&c.object, field)?;
        let u = doc.character(name, field, h.dim())?;
        let mut report = Report::new();
        if !h.verify_character(&u) {
            report.push(
                "character",
                format!(
                    "{} is not an algebra map on {}",
                    vector::display(&u),
                    c.object
                ),
            );
        }
        record(&format!("characters.{name}"), report, &mut text);
    }
    for (name, f) in &doc.functionals {
        let dim = doc.algebra(&f.object, field)?.dim();
        let mut report = Report::new();
        if f.coords.len() != dim {
            report.push(
                "functional",
                format!(
                    "{} coordinates on an algebra of dimension {dim}",
                    f.coords.len()
                ),
            );
        }
        doc.functional(name, field)?;
        record(&format!("functionals.{name}"), report, &mut text);
    }
    let json = json!({"field": field.to_string(), "ok": all_ok, "objects": objects});
    render(g, json, text, all_ok)
}

fn valid_hopf(doc: &InterchangeDocument, name: &str, field: Field) -> Result<HopfSC, CliError> {
    let h = doc.hopf(name, field)?;
    require_valid(name, h.validate())?;
    Ok(h)
}

pub fn dual(t: &ObjectArgs, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let h = valid_hopf(&doc, &t.object, field)?;
    let mut out = InterchangeDocument::new(field);
    out.insert_hopf(&format!("{}_dual", t.object), &h.dual());
    emit(&out)
}

fn on_basis(v: &[Scalar], labels: &[String]) -> String {
    labels
        .iter()
        .zip(v)
        .map(|(l, x)| format!("{l} ↦ {x}"))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn structure(t: &ObjectArgs, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let h = valid_hopf(&doc, &t.object, field)?;
    let labels = h.labels();
    let dual_labels = h.dual().labels().to_vec();
    let left = integrals(&h, Side::Left, Location::InH)?;
    let right = integrals(&h, Side::Right, Location::InH)?;
    let left_on = integrals(&h, Side::Left, Location::OnH)?;
    let right_on = integrals(&h, Side::Right, Location::OnH)?;
    let pair = distinguished_pair(&h)?;
    let alpha = pair.alpha.coords();
    let unimodular = is_unimodular(&h)?;
    let semisimple = is_semisimple(&h)?;
    let cosemisimple = is_cosemisimple(&h)?;
    let involutory = h.is_involutory();
    let cross = hopf_symmetric_crosscheck(&h, &g.decide_options())?;
    let precondition = check_theorem42_precondition(&h)?;
    let identities = verify_integral_identities(&h)?;
    let identities_hold = identities.iter().all(|o| o.holds);

    let json = json!({
        "object": t.object,
        "field": field.to_string(),
        "dimension": h.dim(),
        "left_integral_in_h": coords(left.generator()),
        "right_integral_in_h": coords(right.generator()),
        "left_integral_on_h": coords(left_on.generator()),
        "right_integral_on_h": coords(right_on.generator()),
        "alpha": coords(alpha),
        "g": coords(&pair.g),
        "unimodular": unimodular,
        "semisimple": semisimple,
        "cosemisimple": cosemisimple,
        "involutory": involutory,
        "s2_inner": cross.s2_inner,
        "s2_inner_witness": cross.s2_inner_witness.as_deref().map(coords),
        "symmetric": cross.symmetric,
        "transfer_precondition": precondition,
        "integral_identities": identities,
    });
    let mut text = String::new();
    let _ = writeln!(text, "{} over {field}, dimension {}", t.object, h.dim());
    let _ = writeln!(
        text,
        "left integral in H: {}",
        vector::display_in_basis(left.generator(), labels)
    );
    let _ = writeln!(
        text,
        "right integral in H: {}",
        vector::display_in_basis(right.generator(), labels)
    );
    let _ = writeln!(
        text,
        "left integral on H: {}",
        vector::display_in_basis(left_on.generator(), &dual_labels)
    );
    let _ = writeln!(
        text,
        "right integral on H: {}",
        vector::display_in_basis(right_on.generator(), &dual_labels)
    );
    let _ = writeln!(text, "alpha: {}", on_basis(alpha, labels));
    let _ = writeln!(text, "g: {}", vector::display_in_basis(&pair.g, labels));
    let _ = writeln!(text, "unimodular: {unimodular}");
    let _ = writeln!(text, "semisimple: {semisimple}");
    let _ = writeln!(text, "cosemisimple: {cosemisimple}");
    let _ = writeln!(text, "involutory: {involutory}");
    let _ = writeln!(text, "S^2 inner: {}", cross.s2_inner);
    let _ = writeln!(
        text,
        "symmetric (unimodular and S^2 inner): {}",
        cross.symmetric
    );
    let _ = writeln!(
        text,
        "S^2 = conjugation by g = sovereign by alpha: {precondition}"
    );
    for o in &identities {
        let _ = writeln!(
            text,
            "identity {}: {}",
            o.name,
            if o.holds { "holds" } else { "fails" }
        );
        for f in &o.failures {
            let _ = writeln!(text, "  {f}");
        }
    }
    render(g, json, text, identities_hold)
}

pub fn sovereign(t: &ObjectArgs, character: &str, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let h = valid_hopf(&doc, &t.object, field)?;
    let u = doc.character(character, field, h.dim())?;
    let is_character = h.verify_character(&u);
    let sovereign = is_character && is_sovereign_character(&h, &u);
    let json = json!({
        "object": t.object,
        "character": coords(&u),
        "is_character": is_character,
        "sovereign": sovereign,
    });
    let text = format!(
        "character {}: {}\nsovereign: {sovereign}\n",
        vector::display(&u),
        if is_character {
            "algebra map"
        } else {
            "not an algebra map"
        }
    );
    render(g, json, text, sovereign)
}

fn valid_comodule(
    doc: &InterchangeDocument,
    name: &str,
    field: Field,
) -> Result<hopfsym::corep::ComoduleAlgebraSC, CliError> {
    let a = doc.comodule(name, field)?;
    require_valid(name, a.validate())?;
    Ok(a)
}

pub fn smash(t: &ObjectArgs, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let a = valid_comodule(&doc, &t.object, field)?;
    let s = smash_product(&a)?;
    let mut out = InterchangeDocument::new(field);
    out.insert_comodule(
        &format!("{}_smash", t.object),
        &format!("{}_dual", hopf_name(&doc, &t.object)),
        &s,
    );
    emit(&out)
}

pub fn trivext(t: &ObjectArgs, character: &str, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let a = valid_comodule(&doc, &t.object, field)?;
    let u = doc.character(character, field, a.hopf().dim())?;
    let ext = trivial_extension(&a, &u)?;
    let name = format!("{}_ext", t.object);
    let hopf = hopf_name(&doc, &t.object);
    let mut out = InterchangeDocument::new(field);
    out.insert_comodule(&name, &hopf, &ext.algebra);
    out.insert_character(character, &hopf, &u);
    out.insert_functional(&format!("{name}_witness"), &name, &ext.witness);
    emit(&out)
}

pub fn coinv(t: &ObjectArgs, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let a = valid_comodule(&doc, &t.object, field)?;
    let (co, _) = coinvariants(&a)?;
    let mut out = InterchangeDocument::new(field);
    out.insert_algebra(&format!("{}_coinv", t.object), &co);
    emit(&out)
}

fn check_output(
    g: &GlobalOpts,
    object: &str,
    check: &str,
    field: Field,
    labels: &[String],
    r: &CheckReport,
) -> CliResult {
    let json = json!({
        "object": object,
        "check": check,
        "field": field.to_string(),
        "seed": g.seed,
        "budget": g.budget,
        "report": r,
    });
    let mut text = String::new();
    let _ = writeln!(text, "{check} for {object} over {field}: {}", r.verdict);
    if let Some(w) = &r.witness {
        let _ = writeln!(text, "witness: {}", vector::display(w));
        let _ = writeln!(
            text,
            "         {}",
            vector::display_in_basis(
                w,
                &labels.iter().map(|l| format!("{l}*")).collect::<Vec<_>>()
            )
        );
    }
    let _ = writeln!(text, "pencil members tried: {}", r.trials);
    let _ = writeln!(text, "{}", r.confidence_note);
    for d in &r.diagnostics {
        let _ = writeln!(text, "  {d}");
    }
    render(g, json, text, r.is_consistent())
}

pub fn frobenius(t: &ObjectArgs, plain: bool, g: &GlobalOpts) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let opts = g.decide_options();
    if plain {
        let alg = doc.algebra(&t.object, field)?;
        require_valid(&t.object, alg.validate())?;
        let r = check_plain(&alg, PlainKind::Frobenius, &opts);
        return check_output(g, &t.object, "plain_frobenius", field, alg.labels(), &r);
    }
    let a = valid_comodule(&doc, &t.object, field)?;
    let r = check_frobenius_in_mh(&a, &opts);
    check_output(g, &t.object, "frobenius_in_mh", field, a.labels(), &r)
}

pub fn symmetric(
    t: &ObjectArgs,
    character: Option<&str>,
    plain: bool,
    g: &GlobalOpts,
) -> CliResult {
    let (doc, field) = load(&t.file, g)?;
    let opts = g.decide_options();
    if plain {
        let alg = doc.algebra(&t.object, field)?;
        require_valid(&t.object, alg.validate())?;
        let r = check_plain(&alg, PlainKind::Symmetric, &opts);
        return check_output(g, &t.object, "plain_symmetric", field, alg.labels(), &r);
    }
    let a = valid_comodule(&doc, &t.object, field)?;
    let character = character.expect("clap requires --character without --plain");
    let u = doc.character(character, field, a.hopf().dim())?;
    let r = check_symmetric(&a, &u, &opts)?;
    check_output(g, &t.object, "symmetric", field, a.labels(), &r)
}

pub fn catalog_run_all(g: &GlobalOpts) -> CliResult {
    let field = g.field.unwrap_or(Field::Rational);
    let summary = run_regression(field, &g.decide_options());
    let text = match g.report {
        ReportFormat::Json => {
            let mut s = summary.to_json();
            s.push('\n');
            s
        }
        ReportFormat::Text => summary.to_text(),
    };
    Ok(Output {
        text,
        ok: summary.passed,
    })
}

pub fn catalog_list(g: &GlobalOpts) -> CliResult {
    let mut entries = catalog_entries();
    entries.sort_by_key(|e| e.name);
    let json = Value::from(
        entries
            .iter()
            .map(|e| json!({"name": e.name, "summary": e.summary, "checks": e.expected.len()}))
            .collect::<Vec<_>>(),
    );
    let mut text = String::new();
    for e in &entries {
        let _ = writeln!(text, "{:<36} {}", e.name, e.summary);
    }
    render(g, json, text, true)
}
