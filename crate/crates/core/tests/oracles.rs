//! Known values, each recomputed here from first principles.

use qserre_core::aqbridge::{aq_irreducibility, build_aq_pair, projector, ProjectorKind};
use qserre_core::exactnum::critical_value;
use qserre_core::linalg::{Matrix, Subspace};
use qserre_core::tdpair::verify_tdpair;
use qserre_core::uqrep::{evaluation_module, from_spec};
use qserre_core::words::{enumerate_irreducible, signature, Word};
use qserre_core::{scan_grid, scan_point, EvalFactor, ModuleSpec, Scalar};

fn s(x: &str) -> Scalar {
    x.parse().unwrap()
}

fn spec(q: &str, fs: &[(u32, &str)]) -> ModuleSpec {
    ModuleSpec::new(s(q), fs.iter().map(|&(d, a)| EvalFactor::new(d, s(a))).collect())
}

fn direct_critical(q: &Scalar) -> Scalar {
    let diff = q - &(Scalar::one() / q);
    Scalar::one() / &(q * &(&diff * &diff))
}

#[test]
fn critical_values_by_direct_evaluation() {
    for (q, want) in [("2", "2/9"), ("1/2", "8/9"), ("3", "3/64"), ("3/2", "24/25")] {
        let q = s(q);
        assert_eq!(direct_critical(&q), s(want));
        assert_eq!(critical_value(&q).unwrap(), s(want));
    }
}

#[test]
fn two_dimensional_irreducible_module() {
    let rep = evaluation_module(1, &s("1"), &s("2")).unwrap();
    let pair = build_aq_pair(&rep).unwrap();
    let v = aq_irreducibility(&pair, &rep).unwrap();
    // 1 - a c with a = 1, c = 2/9
    assert_eq!(v.criterion_value, s("7/9"));
    assert_eq!(v.oracle_algebra_dim, 4);
    assert!(v.criterion_verdict && v.oracle_verdict && v.witness.is_none());
}

#[test]
fn product_criterion_factorises() {
    let rep = from_spec(&spec("2", &[(1, "1"), (1, "3")])).unwrap();
    let pair = build_aq_pair(&rep).unwrap();
    let v = aq_irreducibility(&pair, &rep).unwrap();
    let c = direct_critical(&s("2"));
    let expected = &(&Scalar::one() - &c) * &(&Scalar::one() - &(&s("3") * &c));
    assert_eq!(expected, s("7/27"));
    assert_eq!(v.criterion_value, expected);
    assert_eq!(v.oracle_algebra_dim, 16);
}

#[test]
fn boundary_witness_is_a_line() {
    let rep = evaluation_module(1, &s("9/2"), &s("2")).unwrap();
    let pair = build_aq_pair(&rep).unwrap();
    let v = aq_irreducibility(&pair, &rep).unwrap();
    assert!(v.criterion_value.is_zero() && !v.oracle_verdict);
    let w = v.witness.unwrap();
    assert_eq!(w.dim(), 1);
    let b = &w.vectors()[0];
    assert!(w.contains_vector(&pair.a.mul_vec(b)) && w.contains_vector(&pair.astar.mul_vec(b)));
}

#[test]
fn sigma_one_on_two_dimensional_module() {
    // v0 -> e0+ v0 = q^-1 a v1 -> e1+ (q^-1 a v1) = q^-1 a v0
    let (q, a) = (s("3/2"), s("5"));
    let rep = evaluation_module(1, &a, &q).unwrap();
    let product = rep.e1p() * rep.e0p();
    let lowest: Vec<Scalar> = vec![Scalar::one(), Scalar::zero()];
    let image = product.mul_vec(&lowest);
    assert_eq!(image[0], &a / &q);
    assert!(image[1].is_zero());
}

/// Run lengths computed without the library's signature code.
fn reducible_oracle(w: &str) -> bool {
    let mut runs: Vec<usize> = Vec::new();
    let mut last = None;
    for c in w.chars() {
        if last == Some(c) {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
        last = Some(c);
    }
    runs.windows(3).any(|t| t[0] >= t[1] && t[1] < t[2])
}

fn all_words(n: usize) -> Vec<String> {
    (0..1u32 << n).map(|b| (0..n).map(|j| if b >> (n - 1 - j) & 1 == 0 { 'x' } else { 'y' }).collect()).collect()
}

#[test]
fn irreducible_counts_match_oracle() {
    for n in 0..=10 {
        let oracle: Vec<String> = all_words(n).into_iter().filter(|w| !reducible_oracle(w)).collect();
        let lib: Vec<String> = enumerate_irreducible(n).unwrap().iter().map(Word::to_string).collect();
        assert_eq!(lib, oracle, "length {n}");
    }
    assert_eq!(enumerate_irreducible(4).unwrap().len(), 14);
    assert_eq!(enumerate_irreducible(5).unwrap().len(), 24);
}

#[test]
fn signature_and_length_four_examples() {
    for w in ["yxxyyx", "xyyxxy"] {
        assert_eq!(signature(&w.parse().unwrap()).parts, vec![1, 2, 2, 1]);
    }
    let reducible: Vec<String> = all_words(4).into_iter().filter(|w| reducible_oracle(w)).collect();
    assert_eq!(reducible, vec!["xyxx", "yxyy"]);
    for n in 0..4 {
        assert!(all_words(n).iter().all(|w| !reducible_oracle(w)));
    }
}

#[test]
fn standard_orderings_swap_with_the_pair() {
    let rep = from_spec(&spec("2", &[(2, "3"), (1, "5/2")])).unwrap();
    let pair = build_aq_pair(&rep).unwrap();
    let fwd = verify_tdpair(&pair.a, &pair.astar).unwrap();
    let back = verify_tdpair(&pair.astar, &pair.a).unwrap();
    assert!(fwd.is_td_pair() && back.is_td_pair());
    assert_eq!(fwd.ordering_a, back.ordering_astar);
    assert_eq!(fwd.ordering_astar, back.ordering_a);
    assert_eq!(fwd.shape, back.shape);
}

fn sum_of(n: usize, parts: &[Subspace], lo: isize, hi: isize) -> Subspace {
    let lo = lo.max(0) as usize;
    let hi = (hi.max(0) as usize).min(parts.len() - 1);
    Subspace::sum_all(n, &parts[lo..=hi])
}

#[test]
fn tridiagonal_containments_and_projector_products() {
    for sp in [spec("2", &[(3, "7")]), spec("3/2", &[(2, "2"), (1, "1")])] {
        let rep = from_spec(&sp).unwrap();
        let pair = build_aq_pair(&rep).unwrap();
        let n = pair.dim;
        let d = pair.diameter;
        for i in 0..=d {
            let ii = i as isize;
            let around = sum_of(n, &pair.eig_a, ii - 1, ii + 1);
            assert!(around.contains(&pair.eig_a[i].image(&pair.astar)));
            let around_star = sum_of(n, &pair.eig_astar, ii - 1, ii + 1);
            assert!(around_star.contains(&pair.eig_astar[i].image(&pair.a)));
        }
        let e: Vec<Matrix> = (0..=d).map(|i| projector(&pair, ProjectorKind::E, i).unwrap()).collect();
        let es: Vec<Matrix> = (0..=d).map(|i| projector(&pair, ProjectorKind::Estar, i).unwrap()).collect();
        for i in 0..=d {
            for j in 0..=d {
                let far = i.abs_diff(j) > 1;
                assert_eq!(far, (&(&e[i] * &pair.astar) * &e[j]).is_zero());
                assert_eq!(far, (&(&es[i] * &pair.a) * &es[j]).is_zero());
            }
        }
    }
}

#[test]
fn integer_scan_has_no_reducible_point() {
    let q = s("2");
    for a in scan_grid(&s("1"), &s("9"), &s("1")).unwrap() {
        let row = scan_point(1, &a, &q);
        let v = row.verdict.unwrap();
        assert_eq!(v.criterion_value, &Scalar::one() - &(&a * &direct_critical(&q)));
        assert!(v.criterion_verdict && v.oracle_verdict);
    }
    let row = scan_point(1, &s("9/2"), &q);
    assert!(!row.verdict.unwrap().oracle_verdict);
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn unimodal_oracle(p: &[usize]) -> bool {
    let peak = (0..p.len()).find(|&t| t + 1 == p.len() || p[t] >= p[t + 1]).unwrap_or(0);
    p[..=peak].windows(2).all(|w| w[0] < w[1]) && p[peak..].windows(2).all(|w| w[0] >= w[1])
}

#[test]
fn irreducible_count_is_twice_the_unimodal_compositions() {
    for n in 1..=12 {
        let shapes = compositions(n).iter().filter(|p| unimodal_oracle(p)).count();
        assert_eq!(enumerate_irreducible(n).unwrap().len(), 2 * shapes, "length {n}");
    }
}

#[test]
fn irreducible_words_span_up_to_length_eight() {
    use qserre_core::words::spanning_check;
    for sp in [spec("2", &[(1, "1"), (1, "3")]), spec("3/2", &[(2, "7")])] {
        let pair = build_aq_pair(&from_spec(&sp).unwrap()).unwrap();
        for n in 0..=8 {
            let c = spanning_check(&pair.a, &pair.astar, n).unwrap();
            assert!(c.holds, "length {n}");
            assert!(c.total_rank <= pair.dim * pair.dim);
        }
    }
}
