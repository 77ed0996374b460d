//! The JSON interchange format for structure-constant data.
//!
//! Scalars are strings (`"3/2"`, `"-1"`), tensors are dense nested arrays
//! indexed `[i][j][k]` in the order of the object's labels, and the antipode
//! is a nested array of rows with column `j` holding `S(e_j)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{graded_to_comodule, FiniteGroup, GradedAlgebraSpec};
use crate::corep::ComoduleAlgebraSC;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Tensor3, Vector};
use crate::hopfcore::{AlgebraSC, CoalgebraSC, HopfSC};

pub type ScalarText = String;
pub type TensorText = Vec<Vec<Vec<ScalarText>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterchangeDocument {
    /// `"q"` or `"fp:p"`.
    pub field: String,
    pub objects: BTreeMap<String, ObjectSpec>,
    /// Characters of Hopf objects, by name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub characters: BTreeMap<String, ElementSpec>,
    /// Linear functionals on algebra objects, by name.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functionals: BTreeMap<String, ElementSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObjectSpec {
    Algebra(AlgebraText),
    Hopf(HopfText),
    ComoduleAlgebra(ComoduleText),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraText {
    pub labels: Vec<String>,
    pub mult: TensorText,
    pub unit: Vec<ScalarText>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfText {
    pub labels: Vec<String>,
    pub mult: TensorText,
    pub unit: Vec<ScalarText>,
    pub comult: TensorText,
    pub counit: Vec<ScalarText>,
    pub antipode: Vec<Vec<ScalarText>>,
}

/// Either `hopf` and `coaction`, or `grading` alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleText {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<String>,
    pub labels: Vec<String>,
    pub mult: TensorText,
    pub unit: Vec<ScalarText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<TensorText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingText>,
}

/// Grading by a finite group; the coaction is over `kG`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingText {
    pub group: GroupText,
    /// One group element label per basis element.
    pub degrees: Vec<String>,
}

/// `"C<n>"`, `"S3"`, or an explicit Cayley table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupText {
    Named(String),
    Table {
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub object: String,
    pub coords: Vec<ScalarText>,
}

fn scalars(field: Field, xs: &[ScalarText]) -> Result<Vector> {
    xs.iter().map(|s| field.parse_scalar(s)).collect()
}

fn tensor(field: Field, t: &TensorText) -> Result<Tensor3> {
    let nested = t
        .iter()
        .map(|plane| {
            plane
                .iter()
                .map(|row| scalars(field, row))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Tensor3::from_nested(field, nested)
}

fn text(xs: &[Scalar]) -> Vec<ScalarText> {
    xs.iter().map(Scalar::to_string).collect()
}

fn tensor_text(t: &Tensor3) -> TensorText {
    t.to_nested()
        .iter()
        .map(|plane| plane.iter().map(|row| text(row)).collect())
        .collect()
}

fn matrix_text(m: &Matrix) -> Vec<Vec<ScalarText>> {
    (0..m.rows()).map(|r| text(m.row(r))).collect()
}

fn write_canonical(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let items: Vec<String> = xs
                .iter()
                .map(|x| serde_json::to_string(x).expect("scalars serialize"))
                .collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_canonical(x, depth + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_canonical(x, depth + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalars serialize")),
    }
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{what} has {got} entries, expected {want}"
        )))
    }
}

fn algebra_from(
    field: Field,
    labels: &[String],
    mult: &TensorText,
    unit: &[ScalarText],
) -> Result<AlgebraSC> {
    let n = labels.len();
    let t = tensor(field, mult)?;
    if n > 0 && t.dims() != (n, n, n) {
        return Err(Error::DimensionMismatch(format!(
            "mult has shape {:?} for {n} labels",
            t.dims()
        )));
    }
    AlgebraSC::new(labels.to_vec(), t, scalars(field, unit)?)
}

fn group_from(g: &GroupText) -> Result<FiniteGroup> {
    match g {
        GroupText::Named(name) => {
            if name == "S3" {
                return Ok(FiniteGroup::symmetric3());
            }
            let n: usize = name
                .strip_prefix('C')
                .and_then(|d| d.parse().ok())
                .filter(|&n| (1..=crate::MAX_DIM).contains(&n))
                .ok_or_else(|| {
                    Error::Parse(format!("unknown group {name:?} (use C<n>, S3 or a table)"))
                })?;
            Ok(FiniteGroup::cyclic(n))
        }
        GroupText::Table { labels, table } => FiniteGroup::new(labels.clone(), table.clone()),
    }
}

impl AlgebraText {
    pub fn from_algebra(a: &AlgebraSC) -> AlgebraText {
        AlgebraText {
            labels: a.labels().to_vec(),
            mult: tensor_text(a.mult()),
            unit: text(a.unit()),
        }
    }

    pub fn build(&self, field: Field) -> Result<AlgebraSC> {
        algebra_from(field, &self.labels, &self.mult, &self.unit)
    }
}

impl HopfText {
    pub fn from_hopf(h: &HopfSC) -> HopfText {
        HopfText {
            labels: h.labels().to_vec(),
            mult: tensor_text(h.algebra().mult()),
            unit: text(h.unit()),
            comult: tensor_text(h.coalgebra().comult()),
            counit: text(h.counit()),
            antipode: matrix_text(h.antipode()),
        }
    }

    pub fn build(&self, field: Field) -> Result<HopfSC> {
        let n = self.labels.len();
        let alg = algebra_from(field, &self.labels, &self.mult, &self.unit)?;
        let comult = tensor(field, &self.comult)?;
        if comult.dims() != (n, n, n) {
            return Err(Error::DimensionMismatch(format!(
                "comult has shape {:?} for {n} labels",
                comult.dims()
            )));
        }
        check_len("counit", self.counit.len(), n)?;
        let coalg = CoalgebraSC::new(comult, scalars(field, &self.counit)?)?;
        check_len("antipode", self.antipode.len(), n)?;
        let rows = self
            .antipode
            .iter()
            .map(|r| scalars(field, r))
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(
                "antipode rows must have one entry per label".into(),
            ));
        }
        HopfSC::new(alg, coalg, Matrix::from_rows(field, rows)?)
    }
}

impl ComoduleText {
    pub fn from_comodule(a: &ComoduleAlgebraSC, hopf: &str) -> ComoduleText {
        ComoduleText {
            hopf: Some(hopf.to_string()),
            labels: a.labels().to_vec(),
            mult: tensor_text(a.algebra().mult()),
            unit: text(a.algebra().unit()),
            coaction: Some(tensor_text(a.coaction())),
            grading: None,
        }
    }
}

impl InterchangeDocument {
    pub fn new(field: Field) -> InterchangeDocument {
        InterchangeDocument {
            field: field.to_string(),
            objects: BTreeMap::new(),
            characters: BTreeMap::new(),
            functionals: BTreeMap::new(),
        }
    }

    pub fn parse(json: &str) -> Result<InterchangeDocument> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical text: keys sorted, two-space indentation, arrays of
    /// scalars on one line, trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        let mut out = String::new();
        write_canonical(&value, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn declared_field(&self) -> Result<Field> {
        self.field.parse()
    }

    pub fn insert_hopf(&mut self, name: &str, h: &HopfSC) {
        self.objects
            .insert(name.to_string(), ObjectSpec::Hopf(HopfText::from_hopf(h)));
    }

    pub fn insert_algebra(&mut self, name: &str, a: &AlgebraSC) {
        self.objects.insert(
            name.to_string(),
            ObjectSpec::Algebra(AlgebraText::from_algebra(a)),
        );
    }

    /// Also inserts the Hopf algebra under `hopf_name`.
    pub fn insert_comodule(&mut self, name: &str, hopf_name: &str, a: &ComoduleAlgebraSC) {
        self.insert_hopf(hopf_name, a.hopf());
        self.objects.insert(
            name.to_string(),
            ObjectSpec::ComoduleAlgebra(ComoduleText::from_comodule(a, hopf_name)),
        );
    }

    pub fn insert_character(&mut self, name: &str, object: &str, coords: &[Scalar]) {
        self.characters.insert(
            name.to_string(),
            ElementSpec {
                object: object.to_string(),
                coords: text(coords),
            },
        );
    }

    pub fn insert_functional(&mut self, name: &str, object: &str, coords: &[Scalar]) {
        self.functionals.insert(
            name.to_string(),
            ElementSpec {
                object: object.to_string(),
                coords: text(coords),
            },
        );
    }

    fn object(&self, name: &str) -> Result<&ObjectSpec> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::Parse(format!("no object named {name:?}")))
    }

    pub fn hopf(&self, name: &str, field: Field) -> Result<HopfSC> {
        match self.object(name)? {
            ObjectSpec::Hopf(h) => h.build(field),
            _ => Err(Error::Parse(format!("{name:?} is not a Hopf algebra"))),
        }
    }

    /// The underlying algebra of any object.
    pub fn algebra(&self, name: &str, field: Field) -> Result<AlgebraSC> {
        match self.object(name)? {
            ObjectSpec::Algebra(a) => a.build(field),
            ObjectSpec::Hopf(h) => Ok(h.build(field)?.algebra().clone()),
            ObjectSpec::ComoduleAlgebra(c) => algebra_from(field, &c.labels, &c.mult, &c.unit),
        }
    }

    /// A comodule algebra; a Hopf object is read as itself with `ρ = Δ`.
    pub fn comodule(&self, name: &str, field: Field) -> Result<ComoduleAlgebraSC> {
        let c = match self.object(name)? {
            ObjectSpec::ComoduleAlgebra(c) => c,
            ObjectSpec::Hopf(h) => return Ok(ComoduleAlgebraSC::regular(&h.build(field)?)),
            ObjectSpec::Algebra(_) => {
                return Err(Error::Parse(format!("{name:?} has no coaction")))
            }
        };
        let alg = algebra_from(field, &c.labels, &c.mult, &c.unit)?;
        match (&c.hopf, &c.coaction, &c.grading) {
            (Some(h), Some(rho), None) => {
                let hopf = self.hopf(h, field)?;
                let rho = tensor(field, rho)?;
                if rho.dims() != (alg.dim(), alg.dim(), hopf.dim()) {
                    return Err(Error::DimensionMismatch(format!(
                        "coaction has shape {:?}, expected {:?}",
                        rho.dims(),
                        (alg.dim(), alg.dim(), hopf.dim())
                    )));
                }
                ComoduleAlgebraSC::new(alg, hopf, rho)
            }
            (None, None, Some(g)) => {
                let group = group_from(&g.group)?;
                check_len("degrees", g.degrees.len(), alg.dim())?;
                let degrees = g
                    .degrees
                    .iter()
                    .map(|d| {
                        group.labels().iter().position(|l| l == d).ok_or_else(|| {
                            Error::Parse(format!("{d:?} is not an element of the group"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                graded_to_comodule(&GradedAlgebraSpec::new(alg, group, degrees)?)
            }
            _ => Err(Error::Parse(format!(
                "{name:?} needs either \"hopf\" with \"coaction\", or \"grading\""
            ))),
        }
    }

    /// A named character, or comma-separated coordinates.
    pub fn character(&self, spec: &str, field: Field, dim: usize) -> Result<Vector> {
        let coords = match self.characters.get(spec) {
            Some(e) => scalars(field, &e.coords)?,
            None if spec.contains(',') || dim == 1 => scalars(
                field,
                &spec.split(',').map(str::to_string).collect::<Vec<_>>(),
            )?,
            None => return Err(Error::Parse(format!("no character named {spec:?}"))),
        };
        check_len("character", coords.len(), dim)?;
        Ok(coords)
    }

    pub fn functional(&self, name: &str, field: Field) -> Result<Vector> {
        let e = self
            .functionals
            .get(name)
            .ok_or_else(|| Error::Parse(format!("no functional named {name:?}")))?;
        scalars(field, &e.coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{graded_upper_triangular_extension, sweedler_h4};

    fn h4_document() -> InterchangeDocument {
        let h = sweedler_h4(Field::Rational).unwrap();
        let mut doc = InterchangeDocument::new(Field::Rational);
        doc.insert_comodule("H4regular", "H4", &ComoduleAlgebraSC::regular(&h));
        let alpha = crate::structure::distinguished_pair(&h).unwrap().alpha;
        doc.insert_character("alpha", "H4", alpha.coords());
        doc
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let doc = h4_document();
        let json = doc.to_json();
        let back = InterchangeDocument::parse(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        let f = back.declared_field().unwrap();
        assert_eq!(
            back.comodule("H4regular", f).unwrap(),
            ComoduleAlgebraSC::regular(&sweedler_h4(f).unwrap())
        );
        assert_eq!(
            back.character("alpha", f, 4).unwrap(),
            crate::exactlin::vector::from_i64(f, &[1, -1, 0, 0])
        );
    }

    #[test]
    fn fractions_and_field_override() {
        let ext = graded_upper_triangular_extension(Field::Rational).unwrap();
        let mut doc = InterchangeDocument::new(Field::Rational);
        doc.insert_comodule("E", "kC2", &ext.algebra);
        let half = Field::Rational.ratio(1, 2).unwrap();
        doc.insert_functional("w", "E", &[half.clone(), half]);
        let json = doc.to_json();
        assert!(json.contains("\"1/2\""));
        let back = InterchangeDocument::parse(&json).unwrap();
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            back.functional("w", f5).unwrap(),
            vec![f5.from_i64(3), f5.from_i64(3)]
        );
        assert_eq!(back.comodule("E", f5).unwrap().field(), f5);
    }

    #[test]
    fn grading_shorthand() {
        let json = r#"{
          "field": "q",
          "objects": {
            "kC2": {
              "kind": "comodule_algebra",
              "labels": ["e", "g"],
              "mult": [[["1","0"],["0","1"]],[["0","1"],["1","0"]]],
              "unit": ["1","0"],
              "grading": {"group": "C2", "degrees": ["e", "g"]}
            }
          }
        }"#;
        let doc = InterchangeDocument::parse(json).unwrap();
        let a = doc.comodule("kC2", Field::Rational).unwrap();
        assert!(a.validate().is_ok());
        assert_eq!(crate::corep::basis_degrees(&a), Some(vec![0, 1]));
    }

    #[test]
    fn malformed_input_is_a_parse_or_shape_error() {
        assert!(matches!(
            InterchangeDocument::parse("{"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            InterchangeDocument::parse(r#"{"field": "q", "objects": {}, "extra": 1}"#),
            Err(Error::Parse(_))
        ));
        let mut doc = h4_document();
        if let Some(ObjectSpec::Hopf(h)) = doc.objects.get_mut("H4") {
            h.counit.pop();
        }
        assert!(doc.hopf("H4", Field::Rational).is_err());
        assert!(doc.hopf("H4regular", Field::Rational).is_err());
        assert!(doc.character("beta", Field::Rational, 4).is_err());
        let bad = r#"{"field": "q", "objects": {"A": {"kind": "algebra", "labels": ["1"], "mult": [[["x"]]], "unit": ["1"]}}}"#;
        assert!(InterchangeDocument::parse(bad)
            .unwrap()
            .algebra("A", Field::Rational)
            .is_err());
    }

    proptest::proptest! {
        #[test]
        fn random_documents_round_trip(
            coords in proptest::collection::vec((-20i64..20, 1i64..9), 1..6),
            p in proptest::sample::select(vec![0u64, 2, 3, 7]),
        ) {
            proptest::prop_assume!(p == 0 || coords.iter().all(|&(_, b)| b % p as i64 != 0));
            let field = if p == 0 { Field::Rational } else { Field::prime(p).unwrap() };
            let mut doc = h4_document();
            doc.field = field.to_string();
            let v: Vec<Scalar> = coords.iter().map(|&(a, b)| field.ratio(a, b).unwrap()).collect();
            doc.insert_functional("f", "H4regular", &v);
            let json = doc.to_json();
            let back = InterchangeDocument::parse(&json).unwrap();
            proptest::prop_assert_eq!(back.to_json(), json);
            proptest::prop_assert_eq!(back.functional("f", field).unwrap(), v);
        }
    }
}
