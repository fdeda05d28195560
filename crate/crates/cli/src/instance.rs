//! The instance file format.
//!
//! Everything is dense and every rational is a string `"p"` or `"p/q"`.
//! Tables are indexed by basis position in argument order: `product[i][j]`
//! is `e_i e_j`, `left[i][j]` is `e_i . m_j`, `right[j][i]` is `m_j . e_i`.
//! Matrices are lists of rows.

use serde::Deserialize;

use hom_leibniz::cohomology::{Cochain2, Dims};
use hom_leibniz::deform::NijenhuisPair;
use hom_leibniz::homcore::{default_labels, Bimodule, Handedness, HomAlgebra, HomSpace};
use hom_leibniz::lmcat::{LmObject, LmRepresentation};
use hom_leibniz::tensor::Multilinear;
use hom_leibniz::{Matrix, Rational, Vector};

type Mat = Vec<Vec<String>>;
type Table = Vec<Vec<Vec<String>>>;

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: String,
    #[serde(default)]
    pub handedness: Option<String>,
    pub g: AlgebraSection,
    #[serde(rename = "M")]
    pub m: ModuleSection,
    pub f: Mat,
    #[serde(default)]
    pub rep: Option<RepSection>,
    #[serde(default)]
    pub cochain: Option<CochainSection>,
    #[serde(default)]
    pub pair: Option<PairSection>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub alpha: Mat,
    pub product: Table,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ModuleSection {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(rename = "alphaM")]
    pub alpha_m: Mat,
    pub left: Table,
    pub right: Table,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct SpaceSection {
    pub dim: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub alpha: Mat,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct RepSection {
    #[serde(rename = "V")]
    pub v: SpaceSection,
    #[serde(rename = "W")]
    pub w: SpaceSection,
    pub phi: Mat,
    pub v_left: Table,
    pub v_right: Table,
    pub w_left: Table,
    pub w_right: Table,
    pub cross_r: Table,
    pub cross_l: Table,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct CochainSection {
    pub omega: Table,
    pub mu: Table,
    pub nu: Table,
    pub theta: Mat,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PairSection {
    pub n0: Mat,
    pub n1: Mat,
}

/// A failure to read an instance, with the path to the offending entry.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type Res<T> = Result<T, InputError>;

fn err<T>(path: &str, msg: impl std::fmt::Display) -> Res<T> {
    Err(InputError(format!("{path}: {msg}")))
}

fn rational(s: &str, path: &str) -> Res<Rational> {
    s.parse().or_else(|e| err(path, e))
}

fn vector(v: &[String], len: usize, path: &str) -> Res<Vector> {
    if v.len() != len {
        return err(path, format!("expected {len} entries, found {}", v.len()));
    }
    v.iter().enumerate().map(|(i, s)| rational(s, &format!("{path}[{i}]"))).collect::<Res<Vec<_>>>().map(Vector)
}

fn matrix(m: &Mat, rows: usize, cols: usize, path: &str) -> Res<Matrix> {
    if m.len() != rows {
        return err(path, format!("expected {rows} rows, found {}", m.len()));
    }
    let rows = m.iter().enumerate().map(|(r, row)| Ok(vector(row, cols, &format!("{path}[{r}]"))?.0)).collect::<Res<Vec<_>>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, cols));
    }
    Matrix::from_rows(rows).or_else(|e| err(path, e))
}

/// `t[i][j]` is a vector of length `out`.
fn bilinear(t: &Table, a: usize, b: usize, out: usize, path: &str) -> Res<Multilinear> {
    if t.len() != a {
        return err(path, format!("expected {a} entries, found {}", t.len()));
    }
    let mut cells = Vec::with_capacity(a * b);
    for (i, row) in t.iter().enumerate() {
        if row.len() != b {
            return err(&format!("{path}[{i}]"), format!("expected {b} entries, found {}", row.len()));
        }
        for (j, cell) in row.iter().enumerate() {
            cells.push(vector(cell, out, &format!("{path}[{i}][{j}]"))?);
        }
    }
    Ok(Multilinear::from_fn(&[a, b], out, |t| cells[t[0] * b + t[1]].clone()))
}

fn labels(given: &Option<Vec<String>>, prefix: &str, dim: usize, path: &str) -> Res<Vec<String>> {
    match given {
        None => Ok(default_labels(prefix, dim)),
        Some(l) if l.len() == dim => Ok(l.clone()),
        Some(l) => err(path, format!("expected {dim} labels, found {}", l.len())),
    }
}

fn space(dim: usize, l: &Option<Vec<String>>, alpha: &Mat, prefix: &str, path: &str) -> Res<HomSpace> {
    let labels = labels(l, prefix, dim, &format!("{path}.labels"))?;
    let twist = matrix(alpha, dim, dim, &format!("{path}.alpha"))?;
    HomSpace::new(labels, twist).or_else(|e| err(path, e))
}

impl InstanceFile {
    pub fn parse(text: &str) -> Res<Self> {
        let file: InstanceFile = serde_json::from_str(text).or_else(|e| err("instance", e))?;
        if file.field != "Q" {
            return err("field", format!("only \"Q\" is supported, found {:?}", file.field));
        }
        Ok(file)
    }

    pub fn object(&self) -> Res<LmObject> {
        let handedness = match self.handedness.as_deref() {
            None | Some("left") => Handedness::Left,
            Some("right") => Handedness::Right,
            Some(h) => return err("handedness", format!("expected \"left\" or \"right\", found {h:?}")),
        };
        let (n, m) = (self.g.dim, self.m.dim);
        let gs = space(n, &self.g.labels, &self.g.alpha, "e", "g")?;
        let product = bilinear(&self.g.product, n, n, n, "g.product")?;
        let algebra = HomAlgebra::new(gs, product, handedness).or_else(|e| err("g", e))?;
        let ms = HomSpace::new(labels(&self.m.labels, "m", m, "M.labels")?, matrix(&self.m.alpha_m, m, m, "M.alphaM")?)
            .or_else(|e| err("M", e))?;
        let left = bilinear(&self.m.left, n, m, m, "M.left")?;
        let right = bilinear(&self.m.right, m, n, m, "M.right")?;
        let module = Bimodule::new(ms, left, right).or_else(|e| err("M", e))?;
        let anchor = matrix(&self.f, n, m, "f")?;
        LmObject::new(algebra, module, anchor).or_else(|e| err("instance", e))
    }
}

impl RepSection {
    pub fn parse(text: &str) -> Res<Self> {
        serde_json::from_str(text).or_else(|e| err("rep", e))
    }

    pub fn build(&self, o: &LmObject) -> Res<LmRepresentation> {
        let (n, m, v, w) = (o.n(), o.m(), self.v.dim, self.w.dim);
        let vs = space(v, &self.v.labels, &self.v.alpha, "v", "rep.V")?;
        let ws = space(w, &self.w.labels, &self.w.alpha, "w", "rep.W")?;
        let vb = Bimodule::new(vs, bilinear(&self.v_left, n, v, v, "rep.vLeft")?, bilinear(&self.v_right, v, n, v, "rep.vRight")?)
            .or_else(|e| err("rep.V", e))?;
        let wb = Bimodule::new(ws, bilinear(&self.w_left, n, w, w, "rep.wLeft")?, bilinear(&self.w_right, w, n, w, "rep.wRight")?)
            .or_else(|e| err("rep.W", e))?;
        let phi = matrix(&self.phi, w, v, "rep.phi")?;
        let cross_r = bilinear(&self.cross_r, w, m, v, "rep.crossR")?;
        let cross_l = bilinear(&self.cross_l, m, w, v, "rep.crossL")?;
        LmRepresentation::new(o, vb, wb, phi, cross_r, cross_l).or_else(|e| err("rep", e))
    }
}

impl CochainSection {
    pub fn parse(text: &str) -> Res<Self> {
        serde_json::from_str(text).or_else(|e| err("cochain", e))
    }

    pub fn build(&self, d: Dims, path: &str) -> Res<Cochain2> {
        Ok(Cochain2 {
            omega: bilinear(&self.omega, d.n, d.n, d.w, &format!("{path}.omega"))?,
            mu: bilinear(&self.mu, d.n, d.m, d.v, &format!("{path}.mu"))?,
            nu: bilinear(&self.nu, d.m, d.n, d.v, &format!("{path}.nu"))?,
            theta: matrix(&self.theta, d.w, d.m, &format!("{path}.theta"))?,
        })
    }
}

impl PairSection {
    pub fn parse(text: &str) -> Res<Self> {
        serde_json::from_str(text).or_else(|e| err("pair", e))
    }

    pub fn build(&self, o: &LmObject) -> Res<NijenhuisPair> {
        Ok(NijenhuisPair { n0: matrix(&self.n0, o.n(), o.n(), "pair.n0")?, n1: matrix(&self.n1, o.m(), o.m(), "pair.n1")? })
    }
}
