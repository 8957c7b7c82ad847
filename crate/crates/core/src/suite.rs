//! The full verification run: algebra, coupling, tensor operators and
//! Wigner-Eckart, for every highest weight up to a bound.

use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::verify as alg;
use crate::coupling;
use crate::error::Result;
use crate::halfint::HalfInt;
use crate::report::{Check, Report, Status};
use crate::tensor_ops::{
    self, adjoint, boson_lowering, boson_raising, couple_tensor_ops, fermion_realization, identity_family, rank1_generators,
    OpSpaceContext, TensorOpFamily,
};
use crate::wigner_eckart;

type Job = Box<dyn Fn() -> Result<Report> + Send + Sync>;

fn job(f: impl Fn() -> Result<Report> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// Runs jobs in parallel; results keep the job order.
fn run_jobs(stage: &str, jobs: Vec<Job>) -> Vec<Report> {
    jobs.par_iter()
        .map(|f| {
            f().unwrap_or_else(|e| {
                let mut r = Report::new(stage);
                r.push(Check::fail("construction", e.to_string()));
                r
            })
        })
        .collect()
}

/// `0, 1/2, ..., max`.
pub fn weights_up_to(max: HalfInt) -> Vec<HalfInt> {
    (0..=max.twice().max(0)).map(HalfInt::from_twice).collect()
}

fn pairs_up_to(max: HalfInt) -> Vec<(HalfInt, HalfInt)> {
    let w = weights_up_to(max);
    w.iter().flat_map(|&a| w.iter().map(move |&b| (a, b))).collect()
}

pub fn algebra_suite(max: HalfInt) -> Vec<Report> {
    let mut jobs = vec![job(alg::verify_printed_matrices)];
    for j in weights_up_to(max) {
        jobs.push(job(move || alg::verify_irrep(j)));
        jobs.push(job(move || alg::verify_hopf_axioms(j)));
    }
    for (a, b) in pairs_up_to(max) {
        if a != b {
            jobs.push(job(move || alg::verify_coproduct_homomorphism(a, b)));
        }
    }
    run_jobs("algebra", jobs)
}

pub fn coupling_suite(max: HalfInt) -> Vec<Report> {
    let mut jobs = Vec::new();
    for (a, b) in pairs_up_to(max) {
        jobs.push(job(move || coupling::verify_alpha_orthogonality(a, b)));
        jobs.push(job(move || coupling::verify_intermediate_orthonormality(a, b)));
        jobs.push(job(move || coupling::verify_intermediate_action(a, b)));
        jobs.push(job(move || coupling::verify_decomposition(a, b)));
        jobs.push(job(move || coupling::verify_cgc_invertibility(a, b)));
        jobs.push(job(move || coupling::verify_classical_cgc(a, b)));
    }
    run_jobs("coupling", jobs)
}

/// Every concrete family the suites know about, with source weights up to `max`.
pub fn families(max: HalfInt) -> Result<Vec<TensorOpFamily>> {
    let f = fermion_realization()?;
    let mut out = vec![f.first.clone(), f.second.clone()];
    for j in weights_up_to(max) {
        out.push(boson_raising(j)?);
        if j.twice() > 0 {
            out.push(boson_lowering(j)?);
        }
        out.push(rank1_generators(j)?);
    }
    out.extend(coupled_families(max)?);
    Ok(out)
}

/// Rank 1 and rank 0 families coupled from pairs of rank 1/2 families.
pub fn coupled_families(max: HalfInt) -> Result<Vec<TensorOpFamily>> {
    let f = fermion_realization()?;
    let mut out = Vec::new();
    for j in [HalfInt::ONE, HalfInt::ZERO] {
        out.push(couple_tensor_ops(&f.first, &f.second, j)?);
    }
    for j2 in weights_up_to(max - HalfInt::ONE) {
        let inner = boson_raising(j2)?;
        let outer = boson_raising(j2 + HalfInt::HALF)?;
        for j in [HalfInt::ONE, HalfInt::ZERO] {
            out.push(couple_tensor_ops(&outer, &inner, j)?);
        }
    }
    Ok(out)
}

pub fn tensor_ops_suite(max: HalfInt) -> Vec<Report> {
    let fams = match families(max) {
        Ok(f) => f,
        Err(e) => {
            let mut r = Report::new("tensor operators");
            r.push(Check::fail("construction", e.to_string()));
            return vec![r];
        }
    };
    let mut jobs: Vec<Job> = vec![job(|| Ok(tensor_ops::verify_fermion_structure(&fermion_realization()?)))];
    for fam in fams {
        let fam = Arc::new(fam);
        let a = Arc::clone(&fam);
        jobs.push(job(move || tensor_ops::verify_tensor_operator(&a)));
        jobs.push(job(move || tensor_ops::verify_classical_limit(&fam)));
    }
    for j in weights_up_to(max) {
        jobs.push(job(move || tensor_ops::verify_boson_actions(j)));
        jobs.push(job(move || adjoint_samples(j)));
    }
    jobs.push(job(|| {
        let f = fermion_realization()?;
        let samples = vec![
            ("a1+".to_string(), f.ops.a1d.clone()),
            ("a2".to_string(), f.ops.a2.clone()),
            ("N1".to_string(), f.ops.n1.clone()),
        ];
        adjoint::verify_adjoint_is_representation(&f.first.context, &samples)
    }));
    run_jobs("tensor operators", jobs)
}

/// `ad` on every matrix unit of `End(W(j))` and of `Hom(W(j), W(j+1/2))`.
fn adjoint_samples(j: HalfInt) -> Result<Report> {
    let w = Arc::new(crate::algebra::Irrep::new(j)?.rep);
    let up = Arc::new(crate::algebra::Irrep::new(j + HalfInt::HALF)?.rep);
    let mut report = Report::new(format!("adjoint representation on operator units j={j}"));
    for ctx in [OpSpaceContext::endo(Arc::clone(&w)), OpSpaceContext::new(w, up)] {
        let (rows, cols) = ctx.shape();
        let samples: Vec<_> = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .map(|(r, c)| (format!("e_{r}{c}"), adjoint::unit_operator(&ctx, r, c)))
            .collect();
        let sub = adjoint::verify_adjoint_is_representation(&ctx, &samples)?;
        report.extend(sub.checks);
        report.wall_time_ms += sub.wall_time_ms;
    }
    Ok(report)
}

/// A family between irreducible spaces, with its source and target weights.
#[derive(Clone, Debug)]
pub struct WeCase {
    pub family: TensorOpFamily,
    pub j2: HalfInt,
    pub j: HalfInt,
}

/// All admissible `(family, j2, j)` with `j2, j <= max`.
pub fn wigner_eckart_cases(max: HalfInt) -> Result<Vec<WeCase>> {
    let mut out = Vec::new();
    let mut push = |family: TensorOpFamily| {
        let (Some(j2), Some(j)) = (wigner_eckart::source_irrep(&family), wigner_eckart::target_irrep(&family)) else {
            return;
        };
        if j2 <= max && j <= max && HalfInt::triangle(family.rank, j2, j) {
            out.push(WeCase { family, j2, j });
        }
    };
    let f = fermion_realization()?;
    let blocks = &f.fock.blocks;
    for fam in [&f.first, &f.second] {
        for zero in &blocks[1..] {
            push(fam.restrict(&blocks[0], zero));
            push(fam.restrict(zero, &blocks[0]));
        }
    }
    for fam in coupled_families(max)? {
        if fam.context.source.blocks.len() > 1 {
            push(fam.restrict(&blocks[0], &blocks[0]));
            push(fam.restrict(&blocks[1], &blocks[1]));
        } else {
            push(fam);
        }
    }
    for j in weights_up_to(max) {
        push(boson_raising(j)?);
        if j.twice() > 0 {
            push(boson_lowering(j)?);
        }
        push(rank1_generators(j)?);
        push(identity_family(OpSpaceContext::endo(Arc::new(crate::algebra::Irrep::new(j)?.rep))));
    }
    Ok(out)
}

pub fn wigner_eckart_suite(max: HalfInt) -> Vec<Report> {
    let cases = match wigner_eckart_cases(max) {
        Ok(c) => c,
        Err(e) => {
            let mut r = Report::new("wigner-eckart");
            r.push(Check::fail("construction", e.to_string()));
            return vec![r];
        }
    };
    let mut jobs = Vec::new();
    for case in cases {
        let case = Arc::new(case);
        let c = Arc::clone(&case);
        jobs.push(job(move || wigner_eckart::verify_wigner_eckart(&c.family, c.j2, c.j)));
        jobs.push(job(move || wigner_eckart::verify_phi_recurrence(&case.family, case.j2)));
    }
    run_jobs("wigner-eckart", jobs)
}

/// Stage name and its reports, in run order.
#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub max_j: HalfInt,
    pub stages: Vec<(String, Vec<Report>)>,
}

impl SuiteRun {
    pub fn reports(&self) -> impl Iterator<Item = &Report> {
        self.stages.iter().flat_map(|(_, r)| r.iter())
    }

    pub fn passed(&self) -> bool {
        self.reports().all(Report::passed)
    }

    pub fn count(&self, status: Status) -> usize {
        self.reports().map(|r| r.count(status)).sum()
    }
}

pub fn verify_all(max: HalfInt) -> SuiteRun {
    let stages = vec![
        ("algebra".to_string(), algebra_suite(max)),
        ("coupling".to_string(), coupling_suite(max)),
        ("tensor operators".to_string(), tensor_ops_suite(max)),
        ("wigner-eckart".to_string(), wigner_eckart_suite(max)),
    ];
    SuiteRun { max_j: max, stages }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_listing() {
        assert_eq!(weights_up_to(HalfInt::ONE).len(), 3);
        assert_eq!(pairs_up_to(HalfInt::HALF).len(), 4);
    }

    #[test]
    fn small_run_passes() {
        let run = verify_all(HalfInt::HALF);
        for r in run.reports() {
            assert!(r.passed(), "{r}");
        }
        assert!(run.count(Status::Pass) > 50);
    }

    #[test]
    fn cases_are_admissible() {
        let cases = wigner_eckart_cases(HalfInt::ONE).unwrap();
        assert!(cases.iter().all(|c| HalfInt::triangle(c.family.rank, c.j2, c.j)));
        assert!(cases.iter().any(|c| c.family.name.contains("fermion")));
    }
}
