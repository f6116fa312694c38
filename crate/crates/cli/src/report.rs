//! Serializable reports. Field order is declaration order, so output is stable.

use semirep_core::chop::Factor;
use semirep_core::verify::Check;
use semirep_core::{Classification, GreenStructure, JClassData, Matrix, MonomialRep, Scalar, Semigroup, Side};
use serde::Serialize;
use serde_json::Value;

/// Integers over F_p, `"num/den"` strings over Q.
pub fn scalar(x: &Scalar) -> Value {
    match x {
        Scalar::Mod { value, .. } => Value::from(*value),
        Scalar::Rat(_) => Value::from(x.to_wire()),
    }
}

pub fn matrix(m: &Matrix) -> Vec<Vec<Value>> {
    m.row_vecs().map(|r| r.iter().map(scalar).collect()).collect()
}

/// A semigroup element, or `"0"` for the adjoined zero.
fn element_or_zero(x: Option<usize>) -> Value {
    x.map_or_else(|| Value::from("0"), Value::from)
}

#[derive(Debug, Serialize)]
pub struct JClassEntry {
    pub id: usize,
    pub elements: Vec<usize>,
    pub regular: bool,
    pub idempotents: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct RegularClassEntry {
    pub j_class: usize,
    pub idempotent: usize,
    pub group_order: usize,
    pub group: Vec<usize>,
    pub m: usize,
    pub n: usize,
    pub sandwich: Vec<Vec<Value>>,
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub size: usize,
    pub j_classes: Vec<JClassEntry>,
    pub j_order: Vec<[usize; 2]>,
    pub idempotents: Vec<usize>,
    pub regular_classes: Vec<RegularClassEntry>,
}

fn classes_within(classes: &[Vec<usize>], members: &[usize]) -> Vec<Vec<usize>> {
    classes
        .iter()
        .filter(|c| members.binary_search(&c[0]).is_ok())
        .cloned()
        .collect()
}

pub fn regular_entry(jd: &JClassData) -> RegularClassEntry {
    let group = &jd.group;
    RegularClassEntry {
        j_class: jd.j_class,
        idempotent: jd.idempotent,
        group_order: group.len(),
        group: group.elements().to_vec(),
        m: jd.m(),
        n: jd.n(),
        sandwich: jd
            .sandwich
            .iter()
            .map(|row| row.iter().map(|g| element_or_zero(g.map(|p| group.element(p)))).collect())
            .collect(),
    }
}

pub fn analysis(s: &Semigroup, green: &GreenStructure, regular: &[JClassData]) -> Analysis {
    let j_classes = green
        .j_classes
        .iter()
        .enumerate()
        .map(|(id, elements)| {
            let mut sorted = elements.clone();
            sorted.sort_unstable();
            JClassEntry {
                id,
                regular: green.regular[id],
                idempotents: green.idempotents_in(id),
                r_classes: classes_within(&green.r_classes, &sorted),
                l_classes: classes_within(&green.l_classes, &sorted),
                elements: sorted,
            }
        })
        .collect();
    Analysis {
        size: s.size(),
        j_classes,
        j_order: green.j_order.iter().map(|&(lo, hi)| [lo, hi]).collect(),
        idempotents: green.idempotents.clone(),
        regular_classes: regular.iter().map(regular_entry).collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct SimpleEntry {
    pub apex: usize,
    pub dim: usize,
    pub group_simple_dim: usize,
    pub induced_dim: usize,
    pub radical_dim: usize,
    pub coinduced_dim: usize,
    pub minimal_dim: usize,
    pub iso_check: bool,
    pub certified: bool,
    pub actions: Vec<Vec<Vec<Value>>>,
}

#[derive(Debug, Serialize)]
pub struct ClassCount {
    pub j_class: usize,
    pub group_order: usize,
    pub group_simples: usize,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub simples: usize,
    pub group_simples_total: usize,
    pub per_class: Vec<ClassCount>,
}

#[derive(Debug, Serialize)]
pub struct Irreps {
    pub field: String,
    pub seed: u64,
    pub simples: Vec<SimpleEntry>,
    pub summary: Summary,
}

pub fn irreps(c: &Classification, seed: u64) -> Irreps {
    let simples = c
        .reports
        .iter()
        .map(|r| SimpleEntry {
            apex: r.apex,
            dim: r.simple_dim,
            group_simple_dim: r.group_simple.dim(),
            induced_dim: r.induced_dim,
            radical_dim: r.radical_dim,
            coinduced_dim: r.coinduced_dim,
            minimal_dim: r.minimal_dim,
            iso_check: r.iso_check,
            certified: r.certified,
            actions: r.simple.actions().iter().map(matrix).collect(),
        })
        .collect();
    let per_class = c
        .classes
        .iter()
        .map(|(p, irr)| ClassCount {
            j_class: p.data.j_class,
            group_order: p.data.group.len(),
            group_simples: irr.len(),
        })
        .collect();
    Irreps {
        field: c.field.to_string(),
        seed,
        simples,
        summary: Summary {
            simples: c.reports.len(),
            group_simples_total: c.group_simple_total(),
            per_class,
        },
    }
}

#[derive(Debug, Serialize)]
pub struct Schutz {
    pub j_class: usize,
    pub side: &'static str,
    pub idempotent: usize,
    pub size: usize,
    pub transversal: Vec<usize>,
    /// One matrix per semigroup element; entries are elements of `G_J` or `"0"`.
    pub matrices: Vec<Vec<Vec<Value>>>,
}

pub fn schutz(jd: &JClassData, rep: &MonomialRep) -> Schutz {
    let group = &jd.group;
    Schutz {
        j_class: rep.j_class,
        side: match rep.side {
            Side::Right => "right",
            Side::Left => "left",
        },
        idempotent: jd.idempotent,
        size: rep.size,
        transversal: match rep.side {
            Side::Right => jd.l_transversal.clone(),
            Side::Left => jd.r_transversal.clone(),
        },
        matrices: (0..rep.elements())
            .map(|x| {
                rep.matrix(x)
                    .into_iter()
                    .map(|row| row.into_iter().map(|g| element_or_zero(g.map(|p| group.element(p)))).collect())
                    .collect()
            })
            .collect(),
    }
}

#[derive(Debug, Serialize)]
pub struct FactorEntry {
    pub dim: usize,
    pub multiplicity: usize,
    /// `None` for null factors, on which everything acts as zero.
    pub apex: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct Chop {
    pub field: String,
    pub seed: u64,
    pub module_dim: usize,
    pub distinct_factors: usize,
    pub factors: Vec<FactorEntry>,
}

pub fn chop(field: String, seed: u64, module_dim: usize, factors: &[Factor], apexes: &[Option<usize>]) -> Chop {
    Chop {
        field,
        seed,
        module_dim,
        distinct_factors: factors.iter().filter(|f| !f.annihilated).count(),
        factors: factors
            .iter()
            .zip(apexes)
            .map(|(f, &apex)| FactorEntry {
                dim: f.module.dim(),
                multiplicity: f.multiplicity,
                apex,
            })
            .collect(),
    }
}

/// `Check` lives in the core crate, which has no serde dependency.
#[derive(Debug)]
pub struct CheckRef<'a>(pub &'a Check);

impl Serialize for CheckRef<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Check", 3)?;
        st.serialize_field("name", &self.0.name)?;
        st.serialize_field("passed", &self.0.passed)?;
        st.serialize_field("detail", &self.0.detail)?;
        st.end()
    }
}

#[derive(Debug, Serialize)]
pub struct Verify<'a> {
    pub field: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRef<'a>>,
}
