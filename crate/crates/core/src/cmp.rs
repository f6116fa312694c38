//! Simple modules of a finite semigroup from simple modules of its maximal
//! subgroups.
//!
//! For a regular J-class with idempotent `e`, maximal subgroup `G` and a
//! simple `KG`-module `V` of dimension `r`:
//!
//! - the induced module is `V^n` (one copy per L-class), with `s` acting
//!   through the right Schützenberger representation `ρ(s)`, a row-monomial
//!   `n × n` matrix over `G ∪ {0}`;
//! - its unique maximal submodule is the set of vectors killed by `L_e`,
//!   equivalently the null space of the block sandwich matrix;
//! - the coinduced module is `V^m` (one copy per R-class) with `s` acting
//!   through the left Schützenberger representation `λ(s)`;
//! - its unique minimal submodule is the image of the block sandwich matrix,
//!   equivalently the submodule generated by `Coind(V) e`.
//!
//! Block layout everywhere: row index `a * r + i` for transversal index `a`
//! and coordinate `i` of `V`.

use rand::Rng;

use crate::chop::irreducibles;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::green::{green_structure, idempotents_isomorphic, jclass_data, jclass_data_at, GreenStructure, JClassData};
use crate::matrix::Matrix;
use crate::meataxe::{is_simple, SearchConfig, Simplicity, SimplicityMode};
use crate::module::{hom_dim, quotient_module, spin, submodule, Module};
use crate::semigroup::{Magma, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

/// `s ↦` a `size × size` matrix over `G ∪ {0}` (entries are group positions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialRep {
    pub j_class: usize,
    pub side: Side,
    pub size: usize,
    entries: Vec<Vec<Option<usize>>>,
}

impl MonomialRep {
    pub fn entry(&self, s: usize, i: usize, j: usize) -> Option<usize> {
        self.entries[s][i * self.size + j]
    }

    /// The matrix of `s`, row by row.
    pub fn matrix(&self, s: usize) -> Vec<Vec<Option<usize>>> {
        self.entries[s].chunks(self.size).map(<[Option<usize>]>::to_vec).collect()
    }

    pub fn elements(&self) -> usize {
        self.entries.len()
    }

    /// Row-monomial for the right representation, column-monomial for the left.
    pub fn is_monomial(&self) -> bool {
        let n = self.size;
        self.entries.iter().all(|m| {
            (0..n).all(|i| {
                let count = (0..n)
                    .filter(|&j| match self.side {
                        Side::Right => m[i * n + j].is_some(),
                        Side::Left => m[j * n + i].is_some(),
                    })
                    .count();
                count <= 1
            })
        })
    }

    pub fn is_zero(&self, s: usize) -> bool {
        self.entries[s].iter().all(Option::is_none)
    }

    /// First `(s, t)` with `M(s) M(t) != M(st)` in `M_size(KG)`.
    pub fn multiplicativity_failure(&self, s: &Semigroup, group: &impl Magma) -> Option<(usize, usize)> {
        let n = self.size;
        for a in 0..s.size() {
            for b in 0..s.size() {
                let expected = &self.entries[s.mul(a, b)];
                for i in 0..n {
                    for k in 0..n {
                        let mut terms: Vec<usize> = (0..n)
                            .filter_map(|j| Some(group.product(self.entry(a, i, j)?, self.entry(b, j, k)?)))
                            .collect();
                        terms.sort_unstable();
                        let want: Vec<usize> = expected[i * n + k].into_iter().collect();
                        if terms != want {
                            return Some((a, b));
                        }
                    }
                }
            }
        }
        None
    }
}

/// `t_a s = g t_a'` gives entry `(a, a') = g`; rows with `t_a s ∉ J` vanish.
pub fn right_schutzenberger(s: &Semigroup, jd: &JClassData) -> Result<MonomialRep> {
    let n = jd.n();
    let mut entries = Vec::with_capacity(s.size());
    for x in 0..s.size() {
        let mut m = vec![None; n * n];
        for (a, &t) in jd.l_transversal.iter().enumerate() {
            let p = s.mul(t, x);
            if jd.r_class.binary_search(&p).is_err() {
                continue;
            }
            let (g, a2) = jd.factor_right(p).ok_or(Error::FactorizationFailure(p))?;
            m[a * n + a2] = Some(g);
        }
        entries.push(m);
    }
    Ok(MonomialRep {
        j_class: jd.j_class,
        side: Side::Right,
        size: n,
        entries,
    })
}

/// `s l_b = l_b' g` gives entry `(b', b) = g`; columns with `s l_b ∉ J` vanish.
pub fn left_schutzenberger(s: &Semigroup, jd: &JClassData) -> Result<MonomialRep> {
    let m = jd.m();
    let mut entries = Vec::with_capacity(s.size());
    for x in 0..s.size() {
        let mut mat = vec![None; m * m];
        for (b, &l) in jd.r_transversal.iter().enumerate() {
            let p = s.mul(x, l);
            if jd.l_class.binary_search(&p).is_err() {
                continue;
            }
            let (b2, g) = jd.factor_left(p).ok_or(Error::FactorizationFailure(p))?;
            mat[b2 * m + b] = Some(g);
        }
        entries.push(mat);
    }
    Ok(MonomialRep {
        j_class: jd.j_class,
        side: Side::Left,
        size: m,
        entries,
    })
}

/// Replaces every entry `g` of a monomial matrix by the block `φ(g)`.
fn blow_up(rep: &MonomialRep, s: usize, v: &Module) -> Matrix {
    let r = v.dim();
    let n = rep.size;
    let mut out = Matrix::zeros(v.field(), n * r, n * r);
    for i in 0..n {
        for j in 0..n {
            if let Some(g) = rep.entry(s, i, j) {
                out.set_block(i * r, j * r, v.action(g));
            }
        }
    }
    out
}

fn check_group_module(v: &Module, jd: &JClassData) -> Result<()> {
    if v.actions().len() != jd.group.len() {
        return Err(Error::DimensionMismatch {
            expected: jd.group.len(),
            found: v.actions().len(),
        });
    }
    Ok(())
}

/// `Ind(V)`: dimension `r n`, action of `s` is `ρ(s)` with `g ↦ φ(g)`.
pub fn induce(v: &Module, s: &Semigroup, jd: &JClassData, rho: &MonomialRep) -> Result<Module> {
    check_group_module(v, jd)?;
    let actions = (0..s.size()).map(|x| blow_up(rho, x, v)).collect();
    Module::new(v.field(), v.dim() * rho.size, actions, s.generators().to_vec())
}

/// `Coind(V)`: dimension `r m`, action of `s` is `λ(s)` with `g ↦ φ(g)`.
pub fn coinduce(v: &Module, s: &Semigroup, jd: &JClassData, lambda: &MonomialRep) -> Result<Module> {
    check_group_module(v, jd)?;
    let actions = (0..s.size()).map(|x| blow_up(lambda, x, v)).collect();
    Module::new(v.field(), v.dim() * lambda.size, actions, s.generators().to_vec())
}

/// The `r n × r m` matrix with block `(a, b) = φ(C[b][a])`, mapping `V^n → V^m`.
pub fn sandwich_block(v: &Module, jd: &JClassData) -> Matrix {
    let r = v.dim();
    let (n, m) = (jd.n(), jd.m());
    let mut out = Matrix::zeros(v.field(), n * r, m * r);
    for (b, row) in jd.sandwich.iter().enumerate() {
        for (a, entry) in row.iter().enumerate() {
            if let Some(g) = entry {
                out.set_block(a * r, b * r, v.action(*g));
            }
        }
    }
    out
}

/// The unique maximal submodule of `Ind(V)`, computed as the vectors killed
/// by every element of `L_e` and as the null space of the sandwich blocks;
/// the two must coincide.
pub fn radical_n(induced: &Module, jd: &JClassData, v: &Module) -> Result<Matrix> {
    let d = induced.dim();
    let mut stacked = Matrix::zeros(induced.field(), d, 0);
    for &l in &jd.l_class {
        stacked = stacked.hstack(induced.action(l))?;
    }
    let by_annihilation = stacked.nullspace().row_space();
    let by_sandwich = sandwich_block(v, jd).nullspace().row_space();
    if by_annihilation != by_sandwich {
        return Err(Error::CrossCheckMismatch(format!(
            "J-class {}: L_e-annihilator has dim {}, sandwich null space has dim {}",
            jd.j_class,
            by_annihilation.rows(),
            by_sandwich.rows()
        )));
    }
    Ok(by_annihilation)
}

/// The unique minimal submodule of `Coind(V)`, computed as the image of the
/// sandwich blocks and as the spin of `Coind(V) e`; the two must coincide.
pub fn minimal_l(coinduced: &Module, jd: &JClassData, v: &Module) -> Result<Matrix> {
    let by_image = sandwich_block(v, jd).row_space();
    let by_spin = spin(coinduced.action(jd.idempotent), coinduced)?;
    if by_image != by_spin {
        return Err(Error::CrossCheckMismatch(format!(
            "J-class {}: sandwich image has dim {}, spin of Me has dim {}",
            jd.j_class,
            by_image.rows(),
            by_spin.rows()
        )));
    }
    Ok(by_image)
}

/// Regular J-class whose `I_J` equals `Ann M`.
pub fn apex_of(module: &Module, s: &Semigroup, green: &GreenStructure) -> Result<usize> {
    if module.is_annihilated() {
        return Err(Error::ZeroAction);
    }
    let ann = module.annihilator();
    let mut hits = Vec::new();
    for j in green.regular_classes() {
        if green.ideal_i_j(s, j)? == ann {
            hits.push(j);
        }
    }
    match hits.as_slice() {
        [j] => Ok(*j),
        _ => Err(Error::NoApex(ann)),
    }
}

/// Precomputed per-class inputs of the constructions.
#[derive(Debug, Clone)]
pub struct ClassPipeline {
    pub data: JClassData,
    pub rho: MonomialRep,
    pub lambda: MonomialRep,
}

impl ClassPipeline {
    pub fn new(s: &Semigroup, data: JClassData) -> Result<ClassPipeline> {
        let rho = right_schutzenberger(s, &data)?;
        let lambda = left_schutzenberger(s, &data)?;
        Ok(ClassPipeline { data, rho, lambda })
    }
}

struct Verifier<'a, R: Rng + ?Sized> {
    s: &'a Semigroup,
    green: &'a GreenStructure,
    cfg: &'a SearchConfig,
    rng: &'a mut R,
}

impl<R: Rng + ?Sized> Verifier<'_, R> {
    /// Simple, apex `J`, restriction to `e_J` isomorphic to `V`.
    fn check(&mut self, what: &str, m: &Module, jd: &JClassData, v: &Module) -> Result<bool> {
        let fail = |msg: String| Err(Error::VerificationFailure(format!("{what}: {msg}")));
        let certified = match is_simple(m, SimplicityMode::Auto, self.cfg, self.rng)? {
            Simplicity::Simple => true,
            Simplicity::ProbablySimple => false,
            Simplicity::NotSimple(w) => return fail(format!("has a submodule of dim {}", w.rows())),
        };
        let apex = apex_of(m, self.s, self.green)?;
        if apex != jd.j_class {
            return fail(format!("apex {apex}, expected {}", jd.j_class));
        }
        let res = m.restrict(&jd.group)?;
        if res.dim() != v.dim() || hom_dim(v, &res)? == 0 {
            return fail("restriction to e_J is not isomorphic to V".into());
        }
        Ok(certified)
    }
}

/// `Ind(V) / N` with its dimensions.
#[derive(Debug, Clone)]
pub struct InducedSimple {
    pub module: Module,
    pub induced_dim: usize,
    pub radical_dim: usize,
    pub certified: bool,
}

pub fn simple_from_induced<R: Rng + ?Sized>(
    v: &Module,
    s: &Semigroup,
    green: &GreenStructure,
    pipe: &ClassPipeline,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<InducedSimple> {
    let induced = induce(v, s, &pipe.data, &pipe.rho)?;
    let radical = radical_n(&induced, &pipe.data, v)?;
    let (module, _) = quotient_module(&induced, &radical)?;
    let certified = Verifier { s, green, cfg, rng }.check("induced quotient", &module, &pipe.data, v)?;
    Ok(InducedSimple {
        module,
        induced_dim: induced.dim(),
        radical_dim: radical.rows(),
        certified,
    })
}

/// `L(Coind(V))` as a module, with the coinduced dimension.
#[derive(Debug, Clone)]
pub struct CoinducedSimple {
    pub module: Module,
    pub coinduced_dim: usize,
    pub certified: bool,
}

pub fn simple_from_coinduced<R: Rng + ?Sized>(
    v: &Module,
    s: &Semigroup,
    green: &GreenStructure,
    pipe: &ClassPipeline,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<CoinducedSimple> {
    let coinduced = coinduce(v, s, &pipe.data, &pipe.lambda)?;
    let minimal = minimal_l(&coinduced, &pipe.data, v)?;
    let module = submodule(&coinduced, &minimal)?;
    let certified = Verifier { s, green, cfg, rng }.check("coinduced socle", &module, &pipe.data, v)?;
    Ok(CoinducedSimple {
        module,
        coinduced_dim: coinduced.dim(),
        certified,
    })
}

/// Everything known about one simple module of the semigroup.
#[derive(Debug, Clone)]
pub struct SimpleReport {
    pub apex: usize,
    pub group_simple: Module,
    pub induced_dim: usize,
    pub radical_dim: usize,
    pub simple_dim: usize,
    /// `Ind(V)/N`.
    pub simple: Module,
    pub coinduced_dim: usize,
    pub minimal_dim: usize,
    /// The minimal submodule of `Coind(V)`.
    pub socle: Module,
    /// `Ind(V)/N ≅ L(Coind(V))`.
    pub iso_check: bool,
    /// Simplicity proven rather than sampled.
    pub certified: bool,
}

pub fn simple_report<R: Rng + ?Sized>(
    v: &Module,
    s: &Semigroup,
    green: &GreenStructure,
    pipe: &ClassPipeline,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<SimpleReport> {
    let ind = simple_from_induced(v, s, green, pipe, cfg, rng)?;
    let coind = simple_from_coinduced(v, s, green, pipe, cfg, rng)?;
    let simple_dim = ind.module.dim();
    let minimal_dim = coind.module.dim();
    let image_rank = sandwich_block(v, &pipe.data).rank();
    if simple_dim != ind.induced_dim - ind.radical_dim || minimal_dim != image_rank || simple_dim != minimal_dim {
        return Err(Error::CrossCheckMismatch(format!(
            "J-class {}: rn - dim N = {}, dim image = {}",
            pipe.data.j_class,
            ind.induced_dim - ind.radical_dim,
            image_rank
        )));
    }
    let iso_check = hom_dim(&ind.module, &coind.module)? > 0;
    Ok(SimpleReport {
        apex: pipe.data.j_class,
        group_simple: v.clone(),
        induced_dim: ind.induced_dim,
        radical_dim: ind.radical_dim,
        simple_dim,
        simple: ind.module,
        coinduced_dim: coind.coinduced_dim,
        minimal_dim,
        socle: coind.module,
        iso_check,
        certified: ind.certified && coind.certified,
    })
}

/// The complete classification.
#[derive(Debug, Clone)]
pub struct Classification {
    pub field: Field,
    pub green: GreenStructure,
    /// Per regular J-class: the pipeline inputs and the simple `KG_J`-modules.
    pub classes: Vec<(ClassPipeline, Vec<Module>)>,
    pub reports: Vec<SimpleReport>,
}

impl Classification {
    pub fn class(&self, j: usize) -> Option<&(ClassPipeline, Vec<Module>)> {
        self.classes.iter().find(|(p, _)| p.data.j_class == j)
    }

    /// `Σ_J #irreducibles(G_J)`.
    pub fn group_simple_total(&self) -> usize {
        self.classes.iter().map(|(_, irr)| irr.len()).sum()
    }
}

/// One simple module per regular J-class and simple module of its maximal
/// subgroup, checked to be pairwise non-isomorphic.
pub fn all_irreducibles<R: Rng + ?Sized>(
    s: &Semigroup,
    field: Field,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<Classification> {
    let green = green_structure(s)?;
    let mut classes = Vec::new();
    let mut reports = Vec::new();
    for j in green.regular_classes() {
        let pipe = ClassPipeline::new(s, jclass_data(s, &green, j)?)?;
        let irr = irreducibles(&pipe.data.group, field, cfg, rng)?;
        for v in &irr {
            reports.push(simple_report(v, s, &green, &pipe, cfg, rng)?);
        }
        classes.push((pipe, irr));
    }
    for (i, a) in reports.iter().enumerate() {
        for b in &reports[i + 1..] {
            if a.apex == b.apex && a.simple_dim == b.simple_dim && hom_dim(&a.simple, &b.simple)? > 0 {
                return Err(Error::VerificationFailure(format!(
                    "two simples with apex {} are isomorphic",
                    a.apex
                )));
            }
        }
    }
    Ok(Classification {
        field,
        green,
        classes,
        reports,
    })
}

/// Compares, for every simple `V` at the minimum-index idempotent `e`, the
/// simple module built at the maximum-index idempotent `f` of the same class
/// from the transported module `g' ↦ φ(x g' x')` (with `g' = x' g x`).
pub fn transversal_independence_check<R: Rng + ?Sized>(
    s: &Semigroup,
    green: &GreenStructure,
    field: Field,
    j: usize,
    cfg: &SearchConfig,
    rng: &mut R,
) -> Result<bool> {
    let idems = green.idempotents_in(j);
    let (Some(&e), Some(&f)) = (idems.first(), idems.last()) else {
        return Err(Error::NotRegular(j));
    };
    if e == f {
        return Ok(true);
    }
    let at_e = ClassPipeline::new(s, jclass_data_at(s, green, j, e)?)?;
    let at_f = ClassPipeline::new(s, jclass_data_at(s, green, j, f)?)?;
    let (x, x_bar) = idempotents_isomorphic(s, e, f)?
        .ok_or_else(|| Error::InternalInconsistency(format!("idempotents {e}, {f} of one J-class not isomorphic")))?;
    let (ge, gf) = (&at_e.data.group, &at_f.data.group);
    // position in G_f of x' g x, for each position of g in G_e
    let mut to_f = vec![0; ge.len()];
    for (p, slot) in to_f.iter_mut().enumerate() {
        let image = s.mul(s.mul(x_bar, ge.element(p)), x);
        *slot = gf
            .position(image)
            .ok_or_else(|| Error::InternalInconsistency(format!("x'gx = {image} outside G_f")))?;
    }
    for v in irreducibles(ge, field, cfg, rng)? {
        let mut actions = vec![Matrix::zeros(field, v.dim(), v.dim()); gf.len()];
        for (p, &q) in to_f.iter().enumerate() {
            actions[q] = v.action(p).clone();
        }
        let moved = Module::new(field, v.dim(), actions, gf.generators().to_vec())?;
        if moved.multiplicativity_failure(gf).is_some() {
            return Ok(false);
        }
        let me = simple_from_induced(&v, s, green, &at_e, cfg, rng)?;
        let mf = simple_from_induced(&moved, s, green, &at_f, cfg, rng)?;
        if me.module.dim() != mf.module.dim() || hom_dim(&me.module, &mf.module)? == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
