//! Named fields, each built from its construction and cross-checked against
//! an independently entered closed form before it is handed out.

use std::fmt;

use serde_json::{json, Value};

use crate::construct::ansatz::{build_ansatz, cyclic_field, AnsatzParams};
use crate::construct::reference::{
    abc_field, cyclic_polynomials, dihedral_field, dihedral_generators, dihedral_head, lambda, v0_x, v_x, varpi, varpi0, w_x,
    FIRST_HEAD_DENOMINATOR, SECOND_HEAD_DENOMINATOR,
};
use crate::error::{Error, Result};
use crate::exactnum::{rat, GoldenNumber, Scalar, Sqrt3Number};
use crate::linalg::{generate_group, icosahedral_generators};
use crate::ratfunc::{
    averaged_field, curl_multiplier, rf_curl, rf_equal, rf_group_average, sasakian_field,
    RationalVectorField,
};
use crate::trigexpr::{Polynomial, VectorFieldExpr};

type G = GoldenNumber;

/// The data behind a catalog entry.
#[derive(Clone, PartialEq, Eq)]
pub enum FieldData {
    /// Trigonometric polynomial field over `Q(√5)` in three variables.
    Golden(VectorFieldExpr<G>),
    /// Trigonometric polynomial field over `Q(√3)` in two variables.
    Planar(VectorFieldExpr<Sqrt3Number>),
    /// Rational-function field over `Q` in three variables.
    Rational(RationalVectorField),
}

impl FieldData {
    pub fn dimension(&self) -> usize {
        match self {
            FieldData::Golden(v) => v.dim(),
            FieldData::Planar(v) => v.dim(),
            FieldData::Rational(_) => 3,
        }
    }

    pub fn as_golden(&self) -> Option<&VectorFieldExpr<G>> {
        match self {
            FieldData::Golden(v) => Some(v),
            _ => None,
        }
    }

    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        match self {
            FieldData::Golden(v) => v.eval_f64(x),
            FieldData::Planar(v) => v.eval_f64(x),
            FieldData::Rational(v) => v.eval_f64(x).to_vec(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FieldData::Golden(v) => v.to_json(),
            FieldData::Planar(v) => v.to_json(),
            FieldData::Rational(v) => json!({ "dimension": 3, "rational_components": v.to_json() }),
        }
    }
}

impl fmt::Debug for FieldData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldData::Golden(v) => write!(f, "Golden({v})"),
            FieldData::Planar(v) => write!(f, "Planar({v})"),
            FieldData::Rational(v) => write!(f, "Rational({v})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub data: FieldData,
}

impl CatalogEntry {
    pub fn to_json(&self) -> Value {
        let mut v = self.data.to_json();
        if let Value::Object(m) = &mut v {
            m.insert("name".into(), json!(self.name));
            m.insert("summary".into(), json!(self.summary));
        }
        v
    }
}

/// Entry names in catalog order.
pub const ENTRY_NAMES: [&str; 14] = [
    "V", "W", "I", "V0", "W0", "Y", "M", "N", "P", "Q", "D", "ABC", "B", "F",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCatalog {
    entries: Vec<CatalogEntry>,
}

impl FieldCatalog {
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::UnknownField {
                name: name.to_string(),
                available: ENTRY_NAMES.join(", "),
            })
    }

    pub fn golden(&self, name: &str) -> Result<&VectorFieldExpr<G>> {
        self.get(name)?.data.as_golden().ok_or_else(|| {
            Error::InvalidArgument(format!("{name} is not a trigonometric field over Q(√5)"))
        })
    }
}

fn ensure(entry: &str, predicate: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Verification {
            entry: entry.to_string(),
            predicate: predicate.to_string(),
        })
    }
}

/// Homogeneous parts of the Taylor series of each component, checked to be
/// zero below `degree` and returned at `degree`.
pub fn taylor_head<S: Scalar>(v: &VectorFieldExpr<S>, degree: u32) -> Option<Vec<Polynomial<S>>> {
    let mut head = Vec::with_capacity(v.dim());
    for t in v.taylor(degree) {
        let top = t.homogeneous_part(degree);
        if t != top {
            return None;
        }
        head.push(top);
    }
    Some(head)
}

/// Builds every entry and checks it against its closed form.
pub fn catalog() -> Result<FieldCatalog> {
    let v = cyclic_field(&build_ansatz(&AnsatzParams::first_field()))?;
    ensure("V", "ansatz equals the product formula", v == cyclic_field(&v_x())?)?;
    let w = v.curl()?;
    ensure("W", "curl(V) equals the product formula", w == cyclic_field(&w_x())?)?;
    let i = v.add(&w)?;
    ensure("I", "curl(I) = I", i.curl()? == i)?;

    let v0 = cyclic_field(&build_ansatz(&AnsatzParams::second_field()))?;
    ensure("V0", "ansatz equals the product formula", v0 == cyclic_field(&v0_x())?)?;
    let w0 = v0.curl()?;
    ensure("W0", "curl(W0) = V0", w0.curl()? == v0)?;
    let y = v0.add(&w0)?;
    ensure("Y", "curl(Y) = Y", y.curl()? == y)?;

    let m = VectorFieldExpr::from_polynomials(cyclic_polynomials(&varpi()))?;
    let head_v = taylor_head(&v, 6).map(|h| h.iter().map(|p| p.scale(&G::integer(FIRST_HEAD_DENOMINATOR))).collect::<Vec<_>>());
    ensure("M", "768 · (degree-6 head of V)", head_v.as_deref() == m.as_polynomials().as_deref())?;
    let n = VectorFieldExpr::from_polynomials(cyclic_polynomials(&lambda()))?;
    ensure("N", "curl(M) = N", m.curl()? == n)?;

    let p = VectorFieldExpr::from_polynomials(cyclic_polynomials(&varpi0()))?;
    let head_v0 = taylor_head(&v0, 10).map(|h| {
        h.iter()
            .map(|q| q.scale(&G::integer(SECOND_HEAD_DENOMINATOR)))
            .collect::<Vec<_>>()
    });
    ensure("P", "23224320 · (degree-10 head of V0)", head_v0.as_deref() == p.as_polynomials().as_deref())?;
    let q = p.curl()?;
    ensure("Q", "curl(P) ≠ 0", !q.is_zero())?;
    let head_w0 = taylor_head(&w0, 9).map(|h| {
        h.iter()
            .map(|r| r.scale(&G::integer(SECOND_HEAD_DENOMINATOR)))
            .collect::<Vec<_>>()
    });
    ensure("Q", "23224320 · (degree-9 head of W0)", head_w0.as_deref() == q.as_polynomials().as_deref())?;

    let d = dihedral_field();
    ensure("D", "∇²D = −D", d.vector_laplacian() == d.scale(&-Sqrt3Number::integer(1)))?;
    ensure("D", "div D = 0", d.divergence().is_zero())?;
    for g in dihedral_generators() {
        ensure("D", "invariant under the dihedral generators", d.conjugate(&g)? == d)?;
    }
    ensure("D", "degree-2 head", taylor_head(&d, 2).as_deref() == Some(dihedral_head().as_slice()))?;

    let one = G::integer(1);
    let abc = abc_field(&one, &one, &one);
    ensure("ABC", "curl = itself", abc.curl()? == abc)?;

    let b = sasakian_field();
    ensure(
        "B",
        "curl(B) = 4/(1+r²)·B",
        rf_equal(&rf_curl(&b)?, &b.mul_scalar(&curl_multiplier())?),
    )?;
    let [_, beta, _] = icosahedral_generators();
    let cyclic = generate_group(&[beta], 3)?;
    let f = averaged_field();
    ensure(
        "F",
        "(1/4)·Σ β^{-j}∘B∘β^j equals (U(x,y,z), U(y,z,x), U(z,x,y))",
        rf_equal(&rf_group_average(&b, &cyclic, &rat(1, 4))?, &f),
    )?;

    let golden = |name, summary, v: VectorFieldExpr<G>| CatalogEntry {
        name,
        summary,
        data: FieldData::Golden(v),
    };
    Ok(FieldCatalog {
        entries: vec![
            golden("V", "even part of the first eigenfield", v),
            golden("W", "odd part of the first eigenfield, curl of V", w),
            golden("I", "first icosahedral curl eigenfield, V + W", i),
            golden("V0", "even part of the second eigenfield", v0),
            golden("W0", "odd part of the second eigenfield, curl of V0", w0),
            golden("Y", "second icosahedral curl eigenfield, V0 + W0", y),
            golden("M", "degree-6 polynomial head of 768·V", m),
            golden("N", "degree-5 polynomial head of 768·W, curl of M", n),
            golden("P", "degree-10 polynomial head of 23224320·V0", p),
            golden("Q", "curl of P, degree-9 head of 23224320·W0", q),
            CatalogEntry {
                name: "D",
                summary: "planar Helmholtz field with six-fold dihedral symmetry",
                data: FieldData::Planar(d),
            },
            golden("ABC", "ABC field with A = B = C = 1", abc),
            CatalogEntry {
                name: "B",
                summary: "Sasakian field on the 3-sphere in stereographic coordinates",
                data: FieldData::Rational(b),
            },
            CatalogEntry {
                name: "F",
                summary: "average of B over the cyclic group generated by β, scaled by 1/4",
                data: FieldData::Rational(f),
            },
        ],
    })
}

/// `I + t·Y` as a single field.
pub fn family_member(catalog: &FieldCatalog, t: &G) -> Result<VectorFieldExpr<G>> {
    catalog.golden("I")?.add(&catalog.golden("Y")?.scale(t))
}
