use std::collections::BTreeMap;

use circulant_trees::graph::{instance_eigenvalue, LaplacianMatrix};
use circulant_trees::oracle::{bareiss_determinant, cofactor_count, ExactMatrix};
use circulant_trees::rug::Integer;
use circulant_trees::*;
use proptest::prelude::*;

const PREC: u32 = 128;

fn directed_spec() -> impl Strategy<Value = DirectedCirculantSpec> {
    (2u64..=6, 1u64..=6, 1u64..=4)
        .prop_flat_map(|(beta, n, p)| (Just(beta), Just(n), Just(p), prop::collection::vec(1..=beta, 1..=2)))
        .prop_map(|(beta, n, p, mut g)| {
            g.sort_unstable();
            DirectedCirculantSpec::new(beta, n, p, g).unwrap()
        })
}

fn any_instance(max_order: usize) -> impl Strategy<Value = GeneralCirculantInstance> {
    (1usize..=max_order, any::<bool>())
        .prop_flat_map(|(order, directed)| {
            (
                Just(order),
                Just(directed),
                prop::collection::vec(0u64..order as u64 * 2, 0..=4),
            )
        })
        .prop_map(|(order, directed, gens)| {
            let gens: Vec<u64> = if directed { gens } else { gens.into_iter().filter(|g| g % order as u64 != 0).collect() };
            GeneralCirculantInstance::from_generators(order, directed, gens).unwrap()
        })
}

/// Expansion along the first row.
fn naive_det(m: &[Vec<i64>]) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut acc = Integer::new();
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let term = naive_det(&minor) * m[0][j];
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn laplacian_rows_sum_to_zero(inst in any_instance(30)) {
        let l = laplacian(&inst);
        for v in 0..l.size() {
            prop_assert_eq!(l.row(v).iter().sum::<i64>(), 0);
        }
        let loops = i64::from(inst.loop_multiplicity());
        prop_assert_eq!(l.trace(), l.size() as i64 * (inst.degree() as i64 - loops));
        if !inst.is_directed() {
            prop_assert!(l.is_symmetric());
        }
    }

    #[test]
    fn laplacian_matches_edge_list(inst in any_instance(30)) {
        let from_edges = LaplacianMatrix::from_edges(inst.order(), &inst.edge_list());
        prop_assert_eq!(laplacian(&inst), from_edges);
    }

    #[test]
    fn eigenvalues_conjugate_and_sum_to_trace(inst in any_instance(24)) {
        let n = inst.order() as u64;
        let mut sum = Interval::zero(PREC);
        for k in 1..n {
            let a = instance_eigenvalue(&inst, k, PREC).unwrap();
            let b = instance_eigenvalue(&inst, n - k, PREC).unwrap();
            prop_assert!(a.overlaps(&b.conj()));
            if !inst.is_directed() {
                prop_assert!(a.im.contains_zero());
            }
            sum = &sum + &a.re;
        }
        prop_assert!(sum.contains_integer(&Integer::from(laplacian(&inst).trace())));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        rows in (0usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n))
    ) {
        let exact = ExactMatrix::from_rows(&rows).unwrap();
        prop_assert_eq!(bareiss_determinant(&exact), naive_det(&rows));
    }

    #[test]
    fn cofactor_is_vertex_independent(inst in any_instance(24)) {
        let l = laplacian(&inst);
        let first = cofactor_count(&l, 0).unwrap();
        for v in 1..l.size() {
            prop_assert_eq!(&cofactor_count(&l, v).unwrap(), &first);
        }
    }

    #[test]
    fn eigenproduct_encloses_cofactor(inst in any_instance(24)) {
        let exact = if inst.is_directed() {
            tau_directed(&inst).unwrap()
        } else {
            tau_undirected(&inst).unwrap()
        };
        let enc = tau_eigenproduct(&inst, 256).unwrap();
        prop_assert!(enc.contains_integer(exact.value()), "{:?}: {} vs {}", inst, enc, exact);
    }

    #[test]
    fn reduction_keeps_spec_generators(spec in directed_spec()) {
        let inst = reduce_to_instance(&spec).unwrap();
        prop_assert_eq!(inst.order() as u64, spec.order());
        prop_assert_eq!(inst.degree(), spec.d());
        for k in 0..spec.order() {
            let a = graph::digraph_eigenvalue(&spec, k, PREC).unwrap();
            let b = instance_eigenvalue(&inst, k, PREC).unwrap();
            prop_assert!(a.overlaps(&b));
        }
    }
}

#[test]
fn bareiss_thousand_small_matrices() {
    // deterministic sweep on top of the proptest sample
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 11) as i64 - 5
    };
    for i in 0..1200 {
        let n = i % 5;
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let exact = ExactMatrix::from_rows(&rows).unwrap();
        assert_eq!(bareiss_determinant(&exact), naive_det(&rows), "{rows:?}");
    }
}

#[test]
fn disconnected_instances_have_no_trees() {
    let two_triangles = GeneralCirculantInstance::from_generators(6, false, [2]).unwrap();
    assert!(tau_undirected(&two_triangles).unwrap().is_zero());
    let split = GeneralCirculantInstance::from_generators(8, true, [2, 4]).unwrap();
    assert!(tau_directed(&split).unwrap().is_zero());
    let budget = PrecisionBudget::default();
    assert!(tau_eigenproduct_count(&split, budget).unwrap().count.is_zero());
}

#[test]
fn undirected_multiplicity_semantics() {
    // generator N/2 with multiplicity 2 gives a doubled perfect matching
    let inst = GeneralCirculantInstance::new(4, false, BTreeMap::from([(2, 2)])).unwrap();
    assert_eq!(inst.degree(), 2);
    let l = laplacian(&inst);
    assert_eq!(l.get(0, 2), -2);
    assert_eq!(l.get(0, 0), 2);
}

#[test]
fn cycle_power_instances_match_definition() {
    for beta in 2..=5u64 {
        for n in 2..=5u64 {
            for variant in [CyclePowerVariant::PowerN, CyclePowerVariant::PowerNMinus1] {
                let spec = CyclePowerSpec::new(beta, n, variant).unwrap();
                let inst = cycle_power_instance(&spec).unwrap();
                let order = spec.order() as usize;
                let l = laplacian(&inst);
                for v in 1..order {
                    let dist = v.min(order - v) as u64;
                    let expected = if dist <= spec.power() {
                        if 2 * v == order { -2 } else { -1 }
                    } else {
                        0
                    };
                    assert_eq!(l.get(0, v), expected, "{spec} v={v}");
                }
                for k in 0..spec.order() {
                    let a = graph::cycle_power_eigenvalue(&spec, k, PREC).unwrap();
                    let b = instance_eigenvalue(&inst, k, PREC).unwrap();
                    assert!(a.overlaps(&b.re), "{spec} k={k}");
                }
            }
        }
    }
}
