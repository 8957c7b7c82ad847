//! Matrix elements of tensor operators between irreducible spaces and the
//! extraction of the reduced matrix element `I(j1 j2 j)`.
//!
//! With `|phi; m1 m2> = sum_k alpha_{k1,k2}^{m1,m2} t_{j1 k1} |j2 k2>`, the overlaps
//! `<j m | phi; m1 m2>` equal `C^{j1 j2 j}_{m1 m2 m} I`, so that
//! `<j m| t_{j1 m1} |j2 m2> = I sum_n alpha_{-m1,-m2}^{-n1,-n2} C^{j1 j2 j}_{n1 n2 m}`.

use crate::coupling::alpha::AlphaTable;
use crate::coupling::basis::CoupledBasis;
use crate::coupling::cgc::sl2_cgc;
use crate::coupling::intermediate::{axpy, first_nonzero, ladder, sub_vec, Vector};
use crate::error::{domain, Error, Result};
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{HPoly, PolyMatrix, RadScalar};
use crate::tensor_ops::TensorOpFamily;

fn check_spaces(fam: &TensorOpFamily, j2: HalfInt, j: HalfInt) -> Result<()> {
    let (s, t) = (&fam.context.source, &fam.context.target);
    let irreducible = |rep: &crate::algebra::Representation, w: HalfInt| {
        rep.dim() == w.multiplicity() && rep.blocks.len() == 1 && rep.blocks[0].j == w
    };
    if !irreducible(s, j2) || !irreducible(t, j) {
        return Err(domain(format!("{} does not map W({j2}) to W({j}) (source {}, target {})", fam.name, s.name, t.name)));
    }
    Ok(())
}

/// `<j m| t_{j1 m1} |j2 m2>`.
pub fn matrix_element(fam: &TensorOpFamily, j: HalfInt, m: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt) -> Result<HPoly> {
    check_spaces(fam, j2, j)?;
    let t = fam.component(m1).ok_or_else(|| domain(format!("m1 = {m1} is not a weight of rank {}", fam.rank)))?;
    let r = m.index_in(j).ok_or_else(|| domain(format!("m = {m} is not a weight of {j}")))?;
    let c = m2.index_in(j2).ok_or_else(|| domain(format!("m2 = {m2} is not a weight of {j2}")))?;
    Ok(t.get(r, c).clone())
}

/// `|phi; m1 m2>` in the target space.
pub fn phi_vector(fam: &TensorOpFamily, j2: HalfInt, m1: HalfInt, m2: HalfInt) -> Result<Vector> {
    let table = AlphaTable::cached(fam.rank, j2)?;
    if !m1.is_weight_of(fam.rank) || !m2.is_weight_of(j2) {
        return Err(domain(format!("({m1}, {m2}) is not a weight pair of ({}, {j2})", fam.rank)));
    }
    Ok(phi_with(fam, &table, m1, m2))
}

fn phi_with(fam: &TensorOpFamily, table: &AlphaTable, m1: HalfInt, m2: HalfInt) -> Vector {
    let (j1, j2) = (table.j1, table.j2);
    let mut out = vec![HPoly::zero(); fam.context.target.dim()];
    for (i1, k1) in j1.weights().enumerate() {
        for (i2, k2) in j2.weights().enumerate() {
            let a = table.get(k1, k2, m1, m2);
            if a.is_zero() {
                continue;
            }
            let col = fam.components[i1].column(i2);
            for (o, x) in out.iter_mut().zip(&col) {
                if !x.is_zero() {
                    *o += &(x * a);
                }
            }
        }
    }
    out
}

/// `Z+- |phi; m1 m2>` against the undeformed ladder coefficients, with `Z+-`
/// of the target space.
pub fn verify_phi_recurrence(fam: &TensorOpFamily, j2: HalfInt) -> Result<Report> {
    let j1 = fam.rank;
    let table = AlphaTable::cached(j1, j2)?;
    let target = &fam.context.target;
    let zp = target.z_plus()?;
    let zm = target.z_minus();
    let n = target.dim();
    let phis: Vec<Vec<Vector>> = j1.weights().map(|m1| j2.weights().map(|m2| phi_with(fam, &table, m1, m2)).collect()).collect();
    let get = |m1: HalfInt, m2: HalfInt| -> Vector {
        match (m1.index_in(j1), m2.index_in(j2)) {
            (Some(a), Some(b)) => phis[a][b].clone(),
            _ => vec![HPoly::zero(); n],
        }
    };
    Ok(Report::timed(format!("phi recurrence {} on W({j2})", fam.name), |r| {
        let mut bad = Vec::new();
        for m1 in j1.weights() {
            for m2 in j2.weights() {
                for (s, z) in [(1i64, &zp), (-1, &zm)] {
                    let step = if s > 0 { HalfInt::ONE } else { -HalfInt::ONE };
                    let lhs = z.apply(&get(m1, m2));
                    let mut rhs = vec![HPoly::zero(); n];
                    axpy(&mut rhs, &ladder(j1, m1, s), &get(m1 + step, m2));
                    axpy(&mut rhs, &ladder(j2, m2, s), &get(m1, m2 + step));
                    if first_nonzero(&sub_vec(&lhs, &rhs)).is_some() {
                        bad.push(format!("{} ({m1},{m2})", if s > 0 { '+' } else { '-' }));
                    }
                }
            }
        }
        r.push(if bad.is_empty() {
            Check::pass("Z+- |phi; m1 m2> recurrence", format!("{} weight pairs", j1.multiplicity() * j2.multiplicity()))
        } else {
            Check::fail("Z+- |phi; m1 m2> recurrence", format!("fails at {}", bad.join(", ")))
        });
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Channel {
    pub m: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub value: HPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedMatrixElement {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j: HalfInt,
    pub value: HPoly,
    /// Every channel with a nonzero `sl(2)` coefficient, `m` descending then `m1` descending.
    pub channels: Vec<Channel>,
}

impl ReducedMatrixElement {
    pub fn h_degree(&self) -> Option<usize> {
        self.value.degree()
    }
}

/// `<j m | phi; m1 m2>` for all weights, indexed `[m][m1][m2]`.
fn overlaps(fam: &TensorOpFamily, j2: HalfInt, j: HalfInt, table: &AlphaTable) -> Vec<Vec<Vec<HPoly>>> {
    let j1 = fam.rank;
    let phis: Vec<Vec<Vector>> = j1.weights().map(|m1| j2.weights().map(|m2| phi_with(fam, table, m1, m2)).collect()).collect();
    j.weights().enumerate().map(|(mi, _)| phis.iter().map(|row| row.iter().map(|v| v[mi].clone()).collect()).collect()).collect()
}

/// `I(j1 j2 j)` from every channel; all channels must agree exactly.
pub fn reduced_matrix_element(fam: &TensorOpFamily, j2: HalfInt, j: HalfInt) -> Result<ReducedMatrixElement> {
    let j1 = fam.rank;
    if !HalfInt::triangle(j1, j2, j) {
        return Err(Error::SelectionRule { j1, j2, j });
    }
    check_spaces(fam, j2, j)?;
    let table = AlphaTable::cached(j1, j2)?;
    let ov = overlaps(fam, j2, j, &table);
    let mut channels = Vec::new();
    for (mi, m) in j.weights().enumerate() {
        for (i1, m1) in j1.weights().enumerate() {
            let m2 = m - m1;
            let Some(i2) = m2.index_in(j2) else { continue };
            let c = sl2_cgc(j1, j2, j, m1, m2);
            if c.is_zero() {
                continue;
            }
            let value = ov[mi][i1][i2].div_scalar(&c)?;
            channels.push(Channel { m, m1, m2, value });
        }
    }
    let value = channels.first().map(|c| c.value.clone()).unwrap_or_default();
    if let Some(c) = channels.iter().find(|c| c.value != value) {
        return Err(Error::Inconsistent(format!(
            "I({j1} {j2} {j}) differs between channels: {value} at the first channel, {} at (m={}, m1={}, m2={})",
            c.value, c.m, c.m1, c.m2
        )));
    }
    Ok(ReducedMatrixElement { j1, j2, j, value, channels })
}

/// `sum_n alpha_{-m1,-m2}^{-n1,-n2} C^{j1 j2 j}_{n1 n2 m}`: the bra-side coefficient.
pub fn bra_cgc(table: &AlphaTable, j: HalfInt, m: HalfInt, m1: HalfInt, m2: HalfInt) -> HPoly {
    let (j1, j2) = (table.j1, table.j2);
    let mut acc = HPoly::zero();
    for n1 in j1.weights() {
        let n2 = m - n1;
        if !n2.is_weight_of(j2) {
            continue;
        }
        let c = sl2_cgc(j1, j2, j, n1, n2);
        let a = table.get(-m1, -m2, -n1, -n2);
        if !c.is_zero() && !a.is_zero() {
            acc += &a.scale(&c);
        }
    }
    acc
}

/// Checks the theorem for one family: channel independence of `I`, the
/// overlaps `<j m|phi; m1 m2> = C I` for all weights, every matrix element
/// against `I` times the bra coefficient, the same matrix elements recovered
/// from the overlaps through alpha orthogonality, the bra coefficient against
/// the coupled bra vectors, and the `h = 0` limit.
pub fn verify_wigner_eckart(fam: &TensorOpFamily, j2: HalfInt, j: HalfInt) -> Result<Report> {
    let j1 = fam.rank;
    let suite = format!("wigner-eckart {} : W({j2}) -> W({j})", fam.name);
    if !HalfInt::triangle(j1, j2, j) {
        let mut r = Report::new(suite);
        r.push(Check::skip("selection rule", format!("({j1}, {j2}) cannot couple to {j}")));
        return Ok(r);
    }
    check_spaces(fam, j2, j)?;
    let table = AlphaTable::cached(j1, j2)?;
    let basis = CoupledBasis::new(j1, j2)?;
    let reduced = reduced_matrix_element(fam, j2, j);
    let ov = overlaps(fam, j2, j, &table);
    let classical = classical_reduced(fam, j2, j);
    Ok(Report::timed(suite, |r| {
        let red = match reduced {
            Ok(v) => {
                r.push(Check::pass(
                    format!("I({j1} {j2} {j}) channel independent"),
                    format!("I = {} from {} channels, h-degree {}", v.value, v.channels.len(), degree_text(&v.value)),
                ));
                v
            }
            Err(e) => {
                r.push(Check::fail(format!("I({j1} {j2} {j}) channel independent"), e.to_string()));
                return;
            }
        };
        let i = &red.value;
        let mut bad_overlap = Vec::new();
        let mut bad_element = Vec::new();
        let mut bad_rederived = Vec::new();
        let mut bad_remark = Vec::new();
        let mut count = 0usize;
        for (mi, m) in j.weights().enumerate() {
            let coupled = basis.vectors.iter().find(|v| v.j == j && v.m == m).expect("coupled vector exists");
            for (i1, m1) in j1.weights().enumerate() {
                for (i2, m2) in j2.weights().enumerate() {
                    count += 1;
                    let c = sl2_cgc(j1, j2, j, m1, m2);
                    let expected = if m1 + m2 == m { i.scale(&c) } else { HPoly::zero() };
                    if ov[mi][i1][i2] != expected {
                        bad_overlap.push(format!("(m={m}, m1={m1}, m2={m2})"));
                    }
                    let bc = bra_cgc(&table, j, m, m1, m2);
                    let element = fam.components[i1].get(mi, i2);
                    if *element != i * &bc {
                        bad_element.push(format!("(m={m}, m1={m1}, m2={m2}): {element} vs {}", i * &bc));
                    }
                    let mut back = HPoly::zero();
                    for (k1i, n1) in j1.weights().enumerate() {
                        for (k2i, n2) in j2.weights().enumerate() {
                            let a = table.get(-m1, -m2, -n1, -n2);
                            if !a.is_zero() {
                                back += &(a * &ov[mi][k1i][k2i]);
                            }
                        }
                    }
                    if back != *element {
                        bad_rederived.push(format!("(m={m}, m1={m1}, m2={m2})"));
                    }
                    if coupled.bra[i1 * j2.multiplicity() + i2] != bc {
                        bad_remark.push(format!("(m={m}, m1={m1}, m2={m2})"));
                    }
                }
            }
        }
        let verdict = |name: &str, bad: Vec<String>, ok: String| {
            if bad.is_empty() {
                Check::pass(name, ok)
            } else {
                Check::fail(name, bad.join("; "))
            }
        };
        r.push(verdict("<j m|phi; m1 m2> = C I", bad_overlap, format!("{count} weight triples")));
        r.push(verdict("<j m|t_{m1}|j2 m2> = I sum alpha C", bad_element, format!("{count} matrix elements")));
        r.push(verdict(
            "matrix elements from overlaps via alpha orthogonality",
            bad_rederived,
            format!("{count} matrix elements"),
        ));
        r.push(verdict("bra coefficient = coupled bra <j m| component", bad_remark, format!("{count} components")));
        r.push(match classical {
            Ok(Some(v)) if v == i.at_zero() => Check::pass("I(h=0) = classical reduced element", format!("{v}")),
            Ok(Some(v)) => Check::fail("I(h=0) = classical reduced element", format!("{} vs {v}", i.at_zero())),
            Ok(None) => {
                Check::from_bool("I(h=0) = classical reduced element", i.at_zero().is_zero(), "classical family vanishes")
            }
            Err(e) => Check::fail("I(h=0) = classical reduced element", e.to_string()),
        });
    }))
}

fn degree_text(p: &HPoly) -> String {
    p.degree().map_or("-".to_string(), |d| d.to_string())
}

/// Reduced element of the `h = 0` family with undeformed coupling:
/// `<j m| t_{m1} |j2 m2> = C^{j1 j2 j}_{m1 m2 m} I_0`.
pub fn classical_reduced(fam: &TensorOpFamily, j2: HalfInt, j: HalfInt) -> Result<Option<RadScalar>> {
    let j1 = fam.rank;
    let zero: Vec<PolyMatrix> = fam.at_zero();
    let mut value: Option<RadScalar> = None;
    for (mi, m) in j.weights().enumerate() {
        for (i1, m1) in j1.weights().enumerate() {
            for (i2, m2) in j2.weights().enumerate() {
                let element = zero[i1].get(mi, i2).at_zero();
                let c = if m1 + m2 == m { sl2_cgc(j1, j2, j, m1, m2) } else { RadScalar::zero() };
                if c.is_zero() {
                    if !element.is_zero() {
                        return Err(Error::Inconsistent(format!(
                            "classical element nonzero at vanishing coefficient (m={m}, m1={m1}, m2={m2})"
                        )));
                    }
                    continue;
                }
                let v = element.div_exact(&c)?;
                match &value {
                    None => value = Some(v),
                    Some(w) if *w != v => {
                        return Err(Error::Inconsistent(format!("classical reduced element differs: {w} vs {v}")));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(value)
}

/// Highest weight of the target when it is a single irreducible block.
pub fn target_irrep(fam: &TensorOpFamily) -> Option<HalfInt> {
    let t = &fam.context.target;
    (t.blocks.len() == 1 && t.blocks[0].j.multiplicity() == t.dim()).then(|| t.blocks[0].j)
}

pub fn source_irrep(fam: &TensorOpFamily) -> Option<HalfInt> {
    let s = &fam.context.source;
    (s.blocks.len() == 1 && s.blocks[0].j.multiplicity() == s.dim()).then(|| s.blocks[0].j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Irrep;
    use crate::tensor_ops::{
        boson_lowering, boson_raising, fermion_realization, identity_family, rank1_generators, OpSpaceContext,
    };
    use std::sync::Arc;

    fn hi(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn identity_channels_agree() {
        let j = hi(2);
        let fam = identity_family(OpSpaceContext::endo(Arc::new(Irrep::new(j).unwrap().rep)));
        let red = reduced_matrix_element(&fam, j, j).unwrap();
        // <j m|1|j m> = 1 = C^{0 j j}_{0 m m} I with C = 1
        assert!(red.value.is_one());
        assert_eq!(red.channels.len(), 3);
        assert!(matrix_element(&fam, j, hi(0), hi(0), j, hi(0)).unwrap().is_one());
        assert!(matrix_element(&fam, j, hi(2), hi(0), j, hi(0)).unwrap().is_zero());
    }

    #[test]
    fn fermion_element_from_matrix() {
        // first family on W(1/2) -> W(0) copy spanned by a1+|0>
        let f = fermion_realization().unwrap();
        let b = &f.fock.blocks;
        let fam = f.first.restrict(&b[0], &b[1]);
        // t_{-1/2}|0> = (-a2 + h(N2-1)a1+)|0> = -h a1+|0>
        let e = matrix_element(&fam, hi(0), hi(0), hi(-1), hi(1), hi(-1)).unwrap();
        assert_eq!(e, -HPoly::h());
        let r = verify_wigner_eckart(&fam, hi(1), hi(0)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn boson_and_rank1() {
        let up = boson_raising(hi(1)).unwrap();
        let r = verify_wigner_eckart(&up, hi(1), hi(2)).unwrap();
        assert!(r.passed(), "{r}");
        let down = boson_lowering(hi(3)).unwrap();
        assert!(verify_wigner_eckart(&down, hi(3), hi(2)).unwrap().passed());
        let g = rank1_generators(hi(2)).unwrap();
        assert!(verify_wigner_eckart(&g, hi(2), hi(2)).unwrap().passed());
        assert!(verify_phi_recurrence(&g, hi(2)).unwrap().passed());
    }

    #[test]
    fn selection_rule_is_typed() {
        let j = hi(1);
        let fam = identity_family(OpSpaceContext::endo(Arc::new(Irrep::new(j).unwrap().rep)));
        assert!(matches!(reduced_matrix_element(&fam, j, hi(3)), Err(Error::SelectionRule { .. })));
    }

    #[test]
    fn wrong_spaces_rejected() {
        let up = boson_raising(hi(1)).unwrap();
        assert!(reduced_matrix_element(&up, hi(3), hi(2)).is_err());
        assert!(matrix_element(&up, hi(1), hi(1), hi(1), hi(1), hi(1)).is_err());
    }

    #[test]
    fn top_phi_is_annihilated() {
        let g = rank1_generators(hi(2)).unwrap();
        let phi = phi_vector(&g, hi(2), hi(2), hi(2)).unwrap();
        let zp = g.context.target.z_plus().unwrap();
        assert!(zp.apply(&phi).iter().all(HPoly::is_zero));
    }
}
