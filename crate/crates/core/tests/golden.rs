mod common;

use common::{LAMBDA_11_5_DIAGONAL, LAMBDA_11_5_FILLINGS, LAMBDA_15_MATRICES};
use prsk_core::diagrams::level_shapes;
use prsk_core::idempotents::partition_to_index;
use prsk_core::rs::PairCoords;
use prsk_core::tableaux::enumerate_syt;
use prsk_core::{Correspondence, GroupParams, HookPartition, Level, TableauPair};

#[test]
fn lambda_11_5_fillings_in_index_order() {
    let all = enumerate_syt(3, Level::v(3, 3).unwrap(), HookPartition { k: 11, i: 5 }).unwrap();
    assert_eq!(all.len(), 18);
    for (j, ((t, idx), (row, col))) in all.iter().zip(LAMBDA_11_5_FILLINGS).enumerate() {
        assert_eq!(idx.value, j as u64 + 1);
        assert_eq!(t.rows(), (row.to_vec(), col.to_vec()), "P{}", j + 1);
    }
}

#[test]
fn lambda_11_5_diagonal_images() {
    let gp = GroupParams::new(3, 3).unwrap();
    let h = Correspondence::full(gp);
    let all = enumerate_syt(3, Level::v(3, 3).unwrap(), HookPartition { k: 11, i: 5 }).unwrap();
    for ((t, _), a) in all.into_iter().zip(LAMBDA_11_5_DIAGONAL) {
        let x = h.map(&TableauPair::new(t.clone(), t).unwrap()).unwrap();
        assert_eq!(x, gp.element(a as i64, 9));
    }
}

#[test]
fn lambda_15_pairing_of_k_and_l() {
    let lv = Level::w(3, 1).unwrap();
    let shapes = level_shapes(3, lv);
    assert_eq!(shapes.iter().map(|s| s.i).collect::<Vec<_>>(), (3..=11).collect::<Vec<_>>());
    for (k, l, _) in LAMBDA_15_MATRICES {
        assert_eq!(partition_to_index(3, HookPartition { k: 15, i: k }, lv).unwrap().0, l, "k = {k}");
    }
}

#[test]
fn lambda_15_matrices_except_one_entry() {
    let gp = GroupParams::new(3, 3).unwrap();
    let h = Correspondence::sub(gp).unwrap();
    let level = Level::w(3, 1).unwrap();
    let mut mismatches = Vec::new();
    for (k, l, m) in LAMBDA_15_MATRICES {
        for i in 1..=2 {
            for j in 1..=2 {
                let c = PairCoords { level, shape: HookPartition { k: 15, i: k }, l: Some(l), i, j };
                let (a, b) = m[i as usize - 1][j as usize - 1];
                let got = h.element(&c).unwrap();
                if got != gp.element(a as i64, b as i64) {
                    mismatches.push((k, i, j, got.to_string()));
                }
            }
        }
    }
    // The printed (2,1) entry for k = 3 repeats tau^6 from the (1,2) entry.
    assert_eq!(mismatches, vec![(3, 2, 1, "g^18*tau^4".to_string())]);
}
