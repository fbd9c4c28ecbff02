use std::collections::BTreeMap;

use kron_core::partition;
use kron_core::partitions::enumerate_partitions;
use kron_core::tableaux::{count_ssyt_alpha_lattice, is_alpha_lattice};
use kron_core::{CompositionType, Partition, PartitionConstraints, SkewShape, Tableau};

const MAX_ENTRY: usize = 4;

fn in_box(k: usize) -> Vec<Partition> {
    enumerate_partitions(k, PartitionConstraints::inside(Partition::rectangle(4, 4))).collect()
}

/// Counts α-lattice SSYT by content, by trying every filling with entries
/// in `1..=MAX_ENTRY`.
fn brute_counts(shape: &SkewShape, alpha: &Partition) -> BTreeMap<CompositionType, u64> {
    let lens: Vec<usize> = (0..shape.rows())
        .map(|i| {
            let (a, b) = shape.row_range(i);
            b - a
        })
        .collect();
    let cells = shape.size();
    let mut out = BTreeMap::new();
    let mut values = vec![1usize; cells];
    loop {
        let mut rows = Vec::new();
        let mut k = 0;
        for &l in &lens {
            rows.push(values[k..k + l].to_vec());
            k += l;
        }
        if let Ok(t) = Tableau::new(shape.clone(), rows) {
            if is_alpha_lattice(&t.reverse_reading_word(), alpha) {
                *out.entry(t.content()).or_insert(0) += 1;
            }
        }
        let mut i = 0;
        while i < cells && values[i] == MAX_ENTRY {
            values[i] = 1;
            i += 1;
        }
        if i == cells {
            return out;
        }
        values[i] += 1;
    }
}

#[test]
fn search_matches_brute_force_in_four_by_four_box() {
    let alphas = [
        partition![],
        partition![1],
        partition![2],
        partition![1, 1],
        partition![2, 1],
        partition![3, 1],
    ];
    let outers: Vec<Partition> = (0..=16).flat_map(in_box).collect();
    let mut checked = 0;
    for outer in &outers {
        for inner in (0..=outer.size()).flat_map(in_box) {
            if !outer.contains(&inner) || outer.size() - inner.size() > 6 {
                continue;
            }
            let shape = SkewShape::new(outer.clone(), inner).unwrap();
            for alpha in &alphas {
                for (ty, count) in brute_counts(&shape, alpha) {
                    assert_eq!(
                        count_ssyt_alpha_lattice(&shape, &ty, alpha),
                        count,
                        "{shape:?} {ty:?} {alpha:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}
