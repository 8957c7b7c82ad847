//! Exact checks of the defining relations, the Casimir and the Hopf axioms.

use crate::algebra::hopf::{self, Generator};
use crate::algebra::irrep::{self, Irrep};
use crate::algebra::rep::Representation;
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::report::{Check, Report};
use crate::scalar::{parse_hpoly, series, HPoly, PolyMatrix};

/// `[X,Y] - H`, `[H,X] - 2 sinh(hX)/h` and `[H,Y] + Y cosh(hX) + cosh(hX) Y`.
pub fn relation_residuals(rep: &Representation) -> Result<[PolyMatrix; 3]> {
    let r1 = &rep.x.commutator(&rep.y) - &rep.h;
    let r2 = &rep.h.commutator(&rep.x) - &rep.sinh_over_h()?.scale_int(2);
    let c = rep.cosh();
    let r3 = &(&rep.h.commutator(&rep.y) + &(&rep.y * &c)) + &(&c * &rep.y);
    Ok([r1, r2, r3])
}

pub fn relation_checks(rep: &Representation) -> Vec<Check> {
    let names = ["[X,Y] = H", "[H,X] = 2 sinh(hX)/h", "[H,Y] = -(Y cosh hX + cosh hX Y)"];
    match relation_residuals(rep) {
        Ok(res) => names.iter().zip(res.iter()).map(|(n, r)| Check::zero(format!("{}: {n}", rep.name), r)).collect(),
        Err(e) => vec![Check::fail(format!("{}: relations", rep.name), e.to_string())],
    }
}

pub fn verify_defining_relations(j: HalfInt) -> Result<Report> {
    let irrep = Irrep::new(j)?;
    Ok(Report::timed(format!("relations j={j}"), |r| {
        r.extend(relation_checks(&irrep.rep));
    }))
}

/// Casimir scalarity, agreement of both Casimir forms, and the sl(2) relations
/// of `Z+-, H`.
pub fn verify_irrep(j: HalfInt) -> Result<Report> {
    let irrep = Irrep::new(j)?;
    let rep = &irrep.rep;
    let d = irrep.dim();
    Ok(Report::timed(format!("irrep j={j}"), |r| {
        r.extend(relation_checks(rep));
        match rep.casimir() {
            Ok(c) => {
                r.push(Check::zero(format!("C = j(j+1) I at j={j}"), &(&c - &irrep.casimir_value())));
                r.push(Check::zero(
                    format!("Casimir X,Y,H form = Z+Z- + (H/2)(H/2-1) at j={j}"),
                    &(&c - &irrep.casimir_sl2_form()),
                ));
            }
            Err(e) => r.push(Check::fail(format!("Casimir j={j}"), e.to_string())),
        }
        let s = &irrep.sl2;
        r.push(Check::zero(format!("[H,Z+] = 2Z+ at j={j}"), &(&s.hm.commutator(&s.zp) - &s.zp.scale_int(2))));
        r.push(Check::zero(format!("[H,Z-] = -2Z- at j={j}"), &(&s.hm.commutator(&s.zm) + &s.zm.scale_int(2))));
        r.push(Check::zero(format!("[Z+,Z-] = H at j={j}"), &(&s.zp.commutator(&s.zm) - &s.hm)));
        match rep.z_plus() {
            Ok(zp) => r.push(Check::zero(format!("(2/h) tanh(hX/2) = Z+ at j={j}"), &(&zp - &s.zp))),
            Err(e) => r.push(Check::fail(format!("Z+ round trip j={j}"), e.to_string())),
        }
        r.push(Check::zero(format!("cosh(hX/2) Y cosh(hX/2) = Z- at j={j}"), &(&rep.z_minus() - &s.zm)));
        r.push(Check::from_bool(
            format!("X strictly upper triangular at j={j}"),
            (0..d).all(|i| (0..=i).all(|k| rep.x.get(i, k).is_zero())),
            "nilpotent",
        ));
        r.push(Check::zero(format!("e^hX e^-hX = 1 at j={j}"), &(&(&rep.exp_hx * &rep.exp_mhx) - &rep.identity())));
        match irrep::exp_hx_mobius(j, 1) {
            Ok(m) => r.push(Check::zero(format!("e^hX series = Mobius form at j={j}"), &(&m - &rep.exp_hx))),
            Err(e) => r.push(Check::fail(format!("Mobius form j={j}"), e.to_string())),
        }
        r.push(Check::zero(format!("X(h=0) = Z+ at j={j}"), &(&rep.x.at_zero() - &s.zp)));
        r.push(Check::zero(format!("Y(h=0) = Z- at j={j}"), &(&rep.y.at_zero() - &s.zm)));
    }))
}

/// Matrix of `Delta(g)` on `W(j1) (x) W(j2)`.
pub fn coproduct_matrix(g: Generator, j1: HalfInt, j2: HalfInt) -> Result<PolyMatrix> {
    let a = Irrep::new(j1)?;
    let b = Irrep::new(j2)?;
    Ok(coproduct_on(g, &a.rep, &b.rep))
}

pub fn coproduct_on(g: Generator, a: &Representation, b: &Representation) -> PolyMatrix {
    let n = a.dim() * b.dim();
    hopf::coproduct(g)
        .into_iter()
        .fold(PolyMatrix::zeros(n, n), |acc, (sign, l, r)| &acc + &a.word(&l).kron(&b.word(&r)).scale_int(sign))
}

/// The defining relations hold for the coproduct matrices on `W(j1) (x) W(j2)`,
/// and `Delta(e^{hX}) = e^{h Delta(X)}`.
pub fn verify_coproduct_homomorphism(j1: HalfInt, j2: HalfInt) -> Result<Report> {
    let a = Irrep::new(j1)?;
    let b = Irrep::new(j2)?;
    let t = a.rep.tensor(&b.rep);
    Ok(Report::timed(format!("coproduct j1={j1} j2={j2}"), |r| {
        r.extend(relation_checks(&t));
        let hx = t.x.scale(&HPoly::h());
        r.push(Check::zero(format!("Delta(e^hX) = exp(h Delta X) on {j1}(x){j2}"), &(&series::exp(&hx) - &t.exp_hx)));
    }))
}

/// Counit and antipode axioms on the generators, at matrix level on `W(j)`.
pub fn verify_hopf_axioms(j: HalfInt) -> Result<Report> {
    let irrep = Irrep::new(j)?;
    let rep = &irrep.rep;
    let mut report = verify_coproduct_homomorphism(j, j)?;
    report.suite = format!("hopf j={j}");
    for g in [Generator::X, Generator::Y, Generator::H, Generator::ExpHX, Generator::ExpmHX] {
        let target = rep.generator(g).into_owned();
        let n = rep.dim();
        let mut left_counit = PolyMatrix::zeros(n, n);
        let mut right_counit = PolyMatrix::zeros(n, n);
        let mut left_antipode = PolyMatrix::zeros(n, n);
        let mut right_antipode = PolyMatrix::zeros(n, n);
        for (sign, l, r) in hopf::coproduct(g) {
            left_counit = &left_counit + &rep.word(&r).scale_int(sign * hopf::counit_word(&l));
            right_counit = &right_counit + &rep.word(&l).scale_int(sign * hopf::counit_word(&r));
            let (sl, wl) = hopf::antipode_word(&l);
            let (sr, wr) = hopf::antipode_word(&r);
            left_antipode = &left_antipode + &(&rep.word(&wl) * &rep.word(&r)).scale_int(sign * sl);
            right_antipode = &right_antipode + &(&rep.word(&l) * &rep.word(&wr)).scale_int(sign * sr);
        }
        let unit = rep.identity().scale_int(hopf::counit(g));
        report.push(Check::zero(format!("(eps (x) id) Delta({g}) = {g} at j={j}"), &(&left_counit - &target)));
        report.push(Check::zero(format!("(id (x) eps) Delta({g}) = {g} at j={j}"), &(&right_counit - &target)));
        report.push(Check::zero(format!("S({g}_1) {g}_2 = eps({g}) at j={j}"), &(&left_antipode - &unit)));
        report.push(Check::zero(format!("{g}_1 S({g}_2) = eps({g}) at j={j}"), &(&right_antipode - &unit)));
    }
    Ok(report)
}

fn literal(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|e| parse_hpoly(e).expect("valid literal")).collect()).collect())
        .expect("rectangular literal")
}

/// The small matrices written out by hand: `j = 1/2` and `j = 1`, where
/// `Y` picks up the entries `-h^2 / (2 sqrt 2)`.
pub fn verify_printed_matrices() -> Result<Report> {
    let half = Irrep::new(HalfInt::HALF)?;
    let one = Irrep::new(HalfInt::ONE)?;
    let c = "-(1/4)*sqrt(2)*h^2";
    let expected = [
        ("X", &half, literal(&[&["0", "1"], &["0", "0"]])),
        ("Y", &half, literal(&[&["0", "0"], &["1", "0"]])),
        ("H", &half, literal(&[&["1", "0"], &["0", "-1"]])),
        ("X", &one, literal(&[&["0", "sqrt(2)", "0"], &["0", "0", "sqrt(2)"], &["0", "0", "0"]])),
        ("Y", &one, literal(&[&["0", c, "0"], &["sqrt(2)", "0", c], &["0", "sqrt(2)", "0"]])),
        ("H", &one, literal(&[&["2", "0", "0"], &["0", "0", "0"], &["0", "0", "-2"]])),
    ];
    Ok(Report::timed("printed matrices", |r| {
        for (name, irrep, m) in &expected {
            let g: Generator = name.parse().expect("generator name");
            r.push(Check::zero(format!("{name} at j={}", irrep.j), &(irrep.rep.generator(g).as_ref() - m)));
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_small_j() {
        for twice in [0, 1, 4] {
            let r = verify_defining_relations(HalfInt::from_twice(twice)).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.checks.len(), 3);
        }
    }

    #[test]
    fn irrep_suite_passes_through_j2() {
        for twice in 0..=4 {
            let r = verify_irrep(HalfInt::from_twice(twice)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn coproduct_x_is_kron_sum() {
        let half = HalfInt::HALF;
        let dx = coproduct_matrix(Generator::X, half, half).unwrap();
        let x = irrep::x_matrix(half).unwrap();
        let id = PolyMatrix::identity(2);
        assert_eq!(dx, &x.kron(&id) + &id.kron(&x));
    }

    #[test]
    fn coproduct_relations_spin_half() {
        let half = HalfInt::HALF;
        let dx = coproduct_matrix(Generator::X, half, half).unwrap();
        let dy = coproduct_matrix(Generator::Y, half, half).unwrap();
        let dh = coproduct_matrix(Generator::H, half, half).unwrap();
        assert_eq!(dx.commutator(&dy), dh);
        // classical limit of Delta(Y)
        let y = irrep::y_matrix(half).unwrap();
        let id = PolyMatrix::identity(2);
        assert_eq!(dy.at_zero(), &y.kron(&id) + &id.kron(&y));
    }

    #[test]
    fn printed_matrices_match() {
        let r = verify_printed_matrices().unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn hopf_axioms_hold() {
        for twice in 0..=3 {
            let r = verify_hopf_axioms(HalfInt::from_twice(twice)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
