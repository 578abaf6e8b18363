mod common;

use centralizer_core::equivalence::verdict_from_reports;
use centralizer_core::homological::{homological_report, rep_finite};
use centralizer_core::oracle::{jordan_sizes_by_rank, similar};
use centralizer_core::structure::{frobenius_dimension, structure_report, StructureReport};
use centralizer_core::{smith, Config, ExactMatrix};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn invariant_factors_survive_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for k in 0..60 {
        let field = all_fields()[k % 4];
        let c = sample(field, 6, &mut rng);
        let g = invertible(field, c.n(), &mut rng);
        let d = c.conjugate(&g).unwrap();
        assert_eq!(smith::invariant_factors(&c).unwrap(), smith::invariant_factors(&d).unwrap());
        assert!(similar(&c, &d).unwrap());
    }
}

#[test]
fn invariant_factors_form_a_divisibility_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for k in 0..60 {
        let field = all_fields()[k % 4];
        let c = sample(field, 7, &mut rng);
        let inv = smith::invariant_factors(&c).unwrap();
        assert!(inv.is_divisibility_chain());
        assert_eq!(inv.total_degree(), c.n());
        // the last factor annihilates the matrix
        assert!(c.eval_poly(inv.minimal_polynomial().unwrap()).unwrap().is_zero());
        let e = smith::elementary_divisors(&c).unwrap();
        assert_eq!(e.invariant_factors(), inv);
    }
}

#[test]
fn nilpotent_elementary_divisors_match_rank_sequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..30 {
        let mut sizes = Vec::new();
        let mut left = rng.gen_range(1..=8);
        while left > 0 {
            let s = rng.gen_range(1..=left);
            sizes.push(s);
            left -= s;
        }
        let c = nilpotent(&sizes).conjugate(&invertible(q(), sizes.iter().sum(), &mut rng)).unwrap();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let want: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
        assert_eq!(jordan_sizes_by_rank(&c).unwrap(), want);
        let mut got: Vec<u64> = smith::elementary_divisors(&c)
            .unwrap()
            .multiset
            .iter()
            .flat_map(|e| std::iter::repeat(e.exponent).take(e.multiplicity))
            .collect();
        got.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(got, want);
    }
}

#[test]
fn frobenius_dimension_examples() {
    assert_eq!(structure_report(&ExactMatrix::identity(q(), 4)).unwrap().frobenius_dimension, 16);
    assert_eq!(structure_report(&nilpotent(&[4])).unwrap().frobenius_dimension, 4);
    assert_eq!(structure_report(&nilpotent(&[2, 1])).unwrap().frobenius_dimension, 5);
    let inv = smith::invariant_factors(&nilpotent(&[3, 2, 2])).unwrap();
    assert_eq!(frobenius_dimension(&inv).unwrap(), 5 * 2 + 3 * 2 + 3);
}

fn sampled_reports(seed: u64) -> Vec<StructureReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<StructureReport> = (0..40)
        .map(|_| structure_report(&structured(q(), rng.gen_range(1..=6), &mut rng)).unwrap())
        .collect();
    for sizes in [&[5usize, 4, 2][..], &[5, 3, 1], &[5, 4, 1], &[5, 2, 1], &[3, 3], &[2, 2, 1]] {
        out.push(structure_report(&nilpotent(sizes)).unwrap());
    }
    out
}

#[test]
fn almost_nu_stable_equivalence_preserves_representation_type() {
    let cfg = Config::default();
    let reports = sampled_reports(24);
    let mut checked = 0;
    for a in &reports {
        for b in &reports {
            if verdict_from_reports(a, b, &cfg).unwrap().ad_equivalent() {
                assert_eq!(rep_finite(a), rep_finite(b));
                checked += 1;
            }
        }
    }
    assert!(checked > reports.len());
}

#[test]
fn homological_report_is_consistent() {
    for r in sampled_reports(25) {
        let h = homological_report(&r);
        assert!(h.findim_finite);
        let singletons = r.blocks.iter().all(|b| b.power_index_set.len() == 1);
        assert_eq!(h.is_symmetric_nakayama, singletons);
    }
}
