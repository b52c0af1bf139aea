//! JSON structure files. Layout and index conventions are documented in
//! `docs/format.md`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use bihom::algebra::{BiHomAlgebra, LeftModule};
use bihom::bialgebra::{BiHomBialgebra, BialgebraMaps, ModuleAlgebraAction};
use bihom::coalgebra::{BiHomCoalgebra, Comodule};
use bihom::exactnum::parse_scalar;
use bihom::lie::BiHomLieAlgebra;
use bihom::twisting::Pseudotwistor;
use bihom::{Field, Matrix, Scalar, Tensor3};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{path}: expected {expected} entries, found {found}")]
    DimensionMismatch {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("{path}: {source}")]
    BadScalar { path: String, source: Box<bihom::Error> },
    #[error("{path}: {source}")]
    Invalid { path: String, source: Box<bihom::Error> },
}

type Result<T> = std::result::Result<T, FormatError>;

/// Every kind of object a file can hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(BiHomAlgebra),
    Coalgebra(BiHomCoalgebra),
    Bialgebra(BiHomBialgebra),
    Lie(BiHomLieAlgebra),
    /// Left module over an algebra supplied separately.
    Module(LeftModule),
    /// Right comodule over a coalgebra supplied separately.
    Comodule(Comodule),
    /// A module algebra: the algebra acted on and the action tensor.
    Action {
        algebra: BiHomAlgebra,
        action: ModuleAlgebraAction,
    },
    Map(Matrix),
    Pseudotwistor(Pseudotwistor),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bialgebra(_) => "bialgebra",
            Structure::Lie(_) => "lie",
            Structure::Module(_) => "module",
            Structure::Comodule(_) => "comodule",
            Structure::Action { .. } => "action",
            Structure::Map(_) => "map",
            Structure::Pseudotwistor(_) => "pseudotwistor",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Structure::Algebra(a) => a.field(),
            Structure::Coalgebra(c) => c.field(),
            Structure::Bialgebra(h) => h.mu.field(),
            Structure::Lie(l) => l.field(),
            Structure::Module(m) => m.alpha.field(),
            Structure::Comodule(m) => m.psi.field(),
            Structure::Action { algebra, .. } => algebra.field(),
            Structure::Map(m) => m.field(),
            Structure::Pseudotwistor(p) => p.t.field(),
        }
    }
}

/// `"Q"`, `"Fp:<p>"` or `"Q(q)"`.
pub fn field_descriptor(f: Field) -> String {
    f.to_string()
}

pub fn parse_field(text: &str) -> std::result::Result<Field, String> {
    match text {
        "Q" => Ok(Field::Rational),
        "Q(q)" => Ok(Field::RationalFunction),
        _ => {
            let p = text
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("unknown field descriptor {text:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// Walks a JSON value while tracking the path for error messages.
struct Node<'a> {
    value: &'a Value,
    path: String,
    field: Field,
}

impl<'a> Node<'a> {
    fn err(&self, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            path: self.path.clone(),
            message: message.into(),
        }
    }

    fn child(&self, value: &'a Value, step: impl std::fmt::Display) -> Node<'a> {
        Node {
            value,
            path: format!("{}{}", self.path, step),
            field: self.field,
        }
    }

    fn get(&self, key: &str) -> Result<Node<'a>> {
        self.opt(key)?.ok_or_else(|| self.err(format!("missing key {key:?}")))
    }

    fn opt(&self, key: &str) -> Result<Option<Node<'a>>> {
        let obj = self.value.as_object().ok_or_else(|| self.err("expected an object"))?;
        Ok(obj
            .get(key)
            .filter(|v| !v.is_null())
            .map(|v| self.child(v, format!(".{key}"))))
    }

    fn usize(&self) -> Result<usize> {
        self.value
            .as_u64()
            .map(|n| n as usize)
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    fn str(&self) -> Result<&'a str> {
        self.value.as_str().ok_or_else(|| self.err("expected a string"))
    }

    fn array(&self, len: Option<usize>) -> Result<Vec<Node<'a>>> {
        let items = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        if let Some(n) = len {
            if items.len() != n {
                return Err(FormatError::DimensionMismatch {
                    path: self.path.clone(),
                    expected: n,
                    found: items.len(),
                });
            }
        }
        Ok(items
            .iter()
            .enumerate()
            .map(|(i, v)| self.child(v, format!("[{i}]")))
            .collect())
    }

    fn scalar(&self) -> Result<Scalar> {
        let text = match self.value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() => n.to_string(),
            _ => return Err(self.err("expected a scalar literal string")),
        };
        parse_scalar(self.field, &text).map_err(|source| FormatError::BadScalar {
            path: self.path.clone(),
            source: Box::new(source),
        })
    }

    fn vector(&self, n: usize) -> Result<Vec<Scalar>> {
        self.array(Some(n))?.iter().map(Node::scalar).collect()
    }

    fn matrix(&self, rows: usize, cols: usize) -> Result<Matrix> {
        let rows: Vec<Vec<Scalar>> = self
            .array(Some(rows))?
            .iter()
            .map(|r| r.vector(cols))
            .collect::<Result<_>>()?;
        Matrix::from_rows(self.field, rows).map_err(|e| self.invalid(e))
    }

    fn tensor(&self, d1: usize, d2: usize, d3: usize) -> Result<Tensor3> {
        let nested: Vec<Vec<Vec<Scalar>>> = self
            .array(Some(d1))?
            .iter()
            .map(|a| a.array(Some(d2))?.iter().map(|b| b.vector(d3)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Tensor3::from_nested(self.field, nested).map_err(|e| self.invalid(e))
    }

    fn invalid(&self, source: bihom::Error) -> FormatError {
        FormatError::Invalid {
            path: self.path.clone(),
            source: Box::new(source),
        }
    }

    fn labels(&self, d: usize) -> Result<Vec<String>> {
        match self.opt("labels")? {
            None => Ok((1..=d).map(|i| format!("e{i}")).collect()),
            Some(node) => node.array(Some(d))?.iter().map(|n| n.str().map(String::from)).collect(),
        }
    }

    fn opt_vector(&self, key: &str, d: usize) -> Result<Option<Vec<Scalar>>> {
        self.opt(key)?.map(|n| n.vector(d)).transpose()
    }
}

fn parse_algebra(node: &Node, d: usize) -> Result<BiHomAlgebra> {
    BiHomAlgebra::new(
        node.labels(d)?,
        node.get("mu")?.tensor(d, d, d)?,
        node.get("alpha")?.matrix(d, d)?,
        node.get("beta")?.matrix(d, d)?,
        node.opt_vector("unit", d)?,
    )
    .map_err(|e| node.invalid(e))
}

fn parse_node(node: &Node) -> Result<Structure> {
    let kind = node.get("kind")?.str()?;
    let d = node.get("dim")?.usize()?;
    let s = match kind {
        "algebra" => Structure::Algebra(parse_algebra(node, d)?),
        "coalgebra" => Structure::Coalgebra(
            BiHomCoalgebra::new(
                node.labels(d)?,
                node.get("delta")?.tensor(d, d, d)?,
                node.get("psi")?.matrix(d, d)?,
                node.get("omega")?.matrix(d, d)?,
                node.opt_vector("counit", d)?,
            )
            .map_err(|e| node.invalid(e))?,
        ),
        "bialgebra" => {
            let maps = BialgebraMaps {
                alpha: node.get("alpha")?.matrix(d, d)?,
                beta: node.get("beta")?.matrix(d, d)?,
                psi: node.get("psi")?.matrix(d, d)?,
                omega: node.get("omega")?.matrix(d, d)?,
            };
            Structure::Bialgebra(
                BiHomBialgebra::from_maps(
                    node.labels(d)?,
                    node.get("mu")?.tensor(d, d, d)?,
                    node.get("delta")?.tensor(d, d, d)?,
                    maps,
                    node.opt_vector("unit", d)?,
                    node.opt_vector("counit", d)?,
                )
                .map_err(|e| node.invalid(e))?,
            )
        }
        "lie" => Structure::Lie(
            BiHomLieAlgebra::new(
                node.labels(d)?,
                node.get("bracket")?.tensor(d, d, d)?,
                node.get("alpha")?.matrix(d, d)?,
                node.get("beta")?.matrix(d, d)?,
            )
            .map_err(|e| node.invalid(e))?,
        ),
        "module" => {
            let acting = node.get("acting_dim")?.usize()?;
            Structure::Module(LeftModule {
                action: node.get("action")?.tensor(acting, d, d)?,
                alpha: node.get("alpha")?.matrix(d, d)?,
                beta: node.get("beta")?.matrix(d, d)?,
            })
        }
        "comodule" => {
            let coacting = node.get("coacting_dim")?.usize()?;
            Structure::Comodule(Comodule {
                rho: node.get("rho")?.matrix(d * coacting, d)?,
                psi: node.get("psi")?.matrix(d, d)?,
                omega: node.get("omega")?.matrix(d, d)?,
            })
        }
        "action" => {
            let acting = node.get("acting_dim")?.usize()?;
            let inner = node.get("algebra")?;
            let algebra = parse_algebra(&inner, d)?;
            Structure::Action {
                algebra,
                action: ModuleAlgebraAction {
                    action: node.get("action")?.tensor(acting, d, d)?,
                },
            }
        }
        "map" => {
            let cols = node.opt("cols")?.map(|n| n.usize()).transpose()?.unwrap_or(d);
            Structure::Map(node.get("matrix")?.matrix(d, cols)?)
        }
        "pseudotwistor" => {
            let (d2, d3) = (d * d, d * d * d);
            Structure::Pseudotwistor(Pseudotwistor {
                t: node.get("t")?.matrix(d2, d2)?,
                t1: node.get("t1")?.matrix(d3, d3)?,
                t2: node.get("t2")?.matrix(d3, d3)?,
                alpha2: node.get("alpha2")?.matrix(d, d)?,
                beta2: node.get("beta2")?.matrix(d, d)?,
            })
        }
        other => return Err(node.get("kind")?.err(format!("unknown kind {other:?}"))),
    };
    Ok(s)
}

/// Parses a structure file.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let value: Value = serde_json::from_str(text).map_err(|e| FormatError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let root = Node {
        value: &value,
        path: "$".into(),
        field: Field::Rational,
    };
    if let Some(v) = root.opt("format")? {
        let version = v.usize()?;
        if version as u64 != FORMAT_VERSION {
            return Err(v.err(format!("unsupported format version {version}")));
        }
    }
    let field_node = root.get("field")?;
    let field = parse_field(field_node.str()?).map_err(|m| field_node.err(m))?;
    parse_node(&Node { field, ..root })
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

fn tensor_json(t: &Tensor3) -> Value {
    Value::Array(
        t.to_nested()
            .iter()
            .map(|a| Value::Array(a.iter().map(|b| vector_json(b)).collect()))
            .collect(),
    )
}

fn algebra_fields(obj: &mut Map<String, Value>, a: &BiHomAlgebra) {
    obj.insert("dim".into(), json!(a.dim()));
    obj.insert("labels".into(), json!(a.labels));
    obj.insert("mu".into(), tensor_json(&a.mu));
    obj.insert("alpha".into(), matrix_json(&a.alpha));
    obj.insert("beta".into(), matrix_json(&a.beta));
    if let Some(u) = &a.unit {
        obj.insert("unit".into(), vector_json(u));
    }
}

/// Serializes with canonical scalar literals.
pub fn serialize_structure(s: &Structure) -> String {
    let mut obj = Map::new();
    obj.insert("format".into(), json!(FORMAT_VERSION));
    obj.insert("field".into(), json!(field_descriptor(s.field())));
    obj.insert("kind".into(), json!(s.kind()));
    match s {
        Structure::Algebra(a) => algebra_fields(&mut obj, a),
        Structure::Coalgebra(c) => {
            obj.insert("dim".into(), json!(c.dim()));
            obj.insert("labels".into(), json!(c.labels));
            obj.insert("delta".into(), tensor_json(&c.delta));
            obj.insert("psi".into(), matrix_json(&c.psi));
            obj.insert("omega".into(), matrix_json(&c.omega));
            if let Some(e) = &c.counit {
                obj.insert("counit".into(), vector_json(e));
            }
        }
        Structure::Bialgebra(h) => {
            obj.insert("dim".into(), json!(h.labels.len()));
            obj.insert("labels".into(), json!(h.labels));
            obj.insert("mu".into(), tensor_json(&h.mu));
            obj.insert("delta".into(), tensor_json(&h.delta));
            for (k, m) in [
                ("alpha", &h.alpha),
                ("beta", &h.beta),
                ("psi", &h.psi),
                ("omega", &h.omega),
            ] {
                obj.insert(k.into(), matrix_json(m));
            }
            if let Some(u) = &h.unit {
                obj.insert("unit".into(), vector_json(u));
            }
            if let Some(e) = &h.counit {
                obj.insert("counit".into(), vector_json(e));
            }
        }
        Structure::Lie(l) => {
            obj.insert("dim".into(), json!(l.dim()));
            obj.insert("labels".into(), json!(l.labels));
            obj.insert("bracket".into(), tensor_json(&l.bracket));
            obj.insert("alpha".into(), matrix_json(&l.alpha));
            obj.insert("beta".into(), matrix_json(&l.beta));
        }
        Structure::Module(m) => {
            obj.insert("dim".into(), json!(m.dim()));
            obj.insert("acting_dim".into(), json!(m.action.dims().0));
            obj.insert("action".into(), tensor_json(&m.action));
            obj.insert("alpha".into(), matrix_json(&m.alpha));
            obj.insert("beta".into(), matrix_json(&m.beta));
        }
        Structure::Comodule(m) => {
            obj.insert("dim".into(), json!(m.dim()));
            obj.insert("coacting_dim".into(), json!(m.rho.rows() / m.dim().max(1)));
            obj.insert("rho".into(), matrix_json(&m.rho));
            obj.insert("psi".into(), matrix_json(&m.psi));
            obj.insert("omega".into(), matrix_json(&m.omega));
        }
        Structure::Action { algebra, action } => {
            obj.insert("dim".into(), json!(algebra.dim()));
            obj.insert("acting_dim".into(), json!(action.action.dims().0));
            let mut inner = Map::new();
            inner.insert("kind".into(), json!("algebra"));
            algebra_fields(&mut inner, algebra);
            obj.insert("algebra".into(), Value::Object(inner));
            obj.insert("action".into(), tensor_json(&action.action));
        }
        Structure::Map(m) => {
            obj.insert("dim".into(), json!(m.rows()));
            obj.insert("cols".into(), json!(m.cols()));
            obj.insert("matrix".into(), matrix_json(m));
        }
        Structure::Pseudotwistor(p) => {
            obj.insert("dim".into(), json!(p.alpha2.rows()));
            obj.insert("t".into(), matrix_json(&p.t));
            obj.insert("t1".into(), matrix_json(&p.t1));
            obj.insert("t2".into(), matrix_json(&p.t2));
            obj.insert("alpha2".into(), matrix_json(&p.alpha2));
            obj.insert("beta2".into(), matrix_json(&p.beta2));
        }
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use bihom::algebra::{example_family, Family};
    use bihom::fixtures::{group_algebra, sweedler};

    fn roundtrip(s: &Structure) {
        let text = serialize_structure(s);
        let back = parse_structure(&text).unwrap();
        assert_eq!(&back, s);
        assert_eq!(serialize_structure(&back), text);
    }

    #[test]
    fn roundtrips() {
        let q = Field::Rational;
        let a = example_family(Family::First, &Scalar::ratio(q, 2, 3).unwrap(), &Scalar::from_i64(q, 5)).unwrap();
        roundtrip(&Structure::Algebra(a));
        roundtrip(&Structure::Bialgebra(sweedler(q).bialgebra));
        roundtrip(&Structure::Bialgebra(group_algebra(Field::Prime(5), 3).bialgebra));
        let fq = Field::RationalFunction;
        let m = Matrix::diagonal(fq, &[Scalar::q(), Scalar::q().inv().unwrap()]);
        roundtrip(&Structure::Map(m));
    }

    #[test]
    fn dimension_mismatch_is_reported_with_path() {
        let text = r#"{"field":"Q","kind":"map","dim":2,"matrix":[["1","0","0"],["0","1"]]}"#;
        match parse_structure(text).unwrap_err() {
            FormatError::DimensionMismatch { path, expected, found } => {
                assert_eq!(path, "$.matrix[0]");
                assert_eq!((expected, found), (2, 3));
            }
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn bad_scalar_and_json_errors() {
        let text = r#"{"field":"Q","kind":"map","dim":1,"matrix":[["1/0"]]}"#;
        assert!(matches!(parse_structure(text), Err(FormatError::BadScalar { .. })));
        assert!(matches!(
            parse_structure("{\n  \"field\": "),
            Err(FormatError::Json { line: 2, .. })
        ));
        let text = r#"{"field":"R","kind":"map","dim":1,"matrix":[["1"]]}"#;
        assert!(matches!(parse_structure(text), Err(FormatError::Parse { .. })));
    }
}
