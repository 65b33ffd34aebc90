//! Acceptance gate: one test per top-level claim, each ending in a single
//! PASS line (or a SKIP note when a stretch computation exceeds its
//! budget).  Every number asserted here is produced by the engine at test
//! time and compared against an independent route: a closed form, a brute
//! enumeration, or a second computation under a different presentation.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;

use cutideal_core::budget::{Budget, BudgetError};
use cutideal_core::combinatorics::{
    claw_hilbert_degree2, claw_hilbert_degree2_by_recursion, cycle_generator_count, eulerian,
    stirling2, stirling2_k4_closed, tree_generator_count, tree_hilbert,
};
use cutideal_core::composer::{composed_series, UnionPair};
use cutideal_core::cuts::{claw_cycle_bijection, cut_exponent_matrix, phylo_exponent_matrix};
use cutideal_core::engine::{
    basis_shape, minimal_generator_degrees, order_search, toric_ideal, AttemptOutcome,
    GroebnerBasis, MonomialOrder, OrderKind,
};
use cutideal_core::graph::Graph;
use cutideal_core::hilbert::{is_hilbertian, regularity, semigroup_hilbert, HilbertSeries};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn load(name: &str) -> Graph {
    let text = fs::read_to_string(corpus_dir().join(format!("{name}.graph"))).unwrap();
    Graph::parse_text(&text).unwrap()
}

/// Every corpus forest, re-derived from the shipped files rather than any
/// hardcoded list.
fn corpus_forests() -> Vec<(String, Graph)> {
    let mut names: Vec<String> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter_map(|f| f.strip_suffix(".graph").map(str::to_owned))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| (n.clone(), load(&n)))
        .filter(|(_, g)| g.cycle_rank() == 0)
        .collect()
}

fn full_analysis(g: &Graph) -> Result<(GroebnerBasis, HilbertSeries, BTreeMap<u32, u64>), BudgetError> {
    let m = cut_exponent_matrix(g)?;
    let gb = toric_ideal(&m, &MonomialOrder::degrevlex(m.cols()), &Budget::default())?;
    let mu = minimal_generator_degrees(&m, &gb);
    let series = HilbertSeries::from_groebner(&gb);
    Ok((gb, series, mu.counts().clone()))
}

fn pass(criterion: u32, slug: &str, detail: &str) {
    println!("criterion {criterion} ({slug}): PASS - {detail}");
}

fn skip_note(criterion: u32, slug: &str, what: &str, err: &BudgetError) {
    println!("criterion {criterion} ({slug}): SKIP {what} - {err}");
}

#[test]
fn criterion_1_cycle_generator_counts() {
    let expected: [(usize, &[(u32, u64)]); 3] = [(3, &[]), (4, &[(2, 3)]), (5, &[(2, 30)])];
    for (n, counts) in expected {
        let (_, _, mu) = full_analysis(&Graph::cycle(n)).expect("within budget");
        let want: BTreeMap<u32, u64> = counts.iter().copied().collect();
        assert_eq!(mu, want, "cycle {n}");
        assert_eq!(
            BigInt::from(mu.values().sum::<u64>()),
            cycle_generator_count(n),
            "closed form, cycle {n}"
        );
    }
    // Stretch: the hexagon, gated by the default budget.
    match full_analysis(&Graph::cycle(6)) {
        Ok((_, _, mu)) => {
            let want: BTreeMap<u32, u64> = [(2u32, 195u64)].into_iter().collect();
            assert_eq!(mu, want, "cycle 6");
            assert_eq!(BigInt::from(195u32), cycle_generator_count(6));
            pass(1, "cycle-generators", "C3 {}, C4 {2:3}, C5 {2:30}, C6 {2:195}, all 3*S(n,4)");
        }
        Err(e) => {
            skip_note(1, "cycle-generators", "hexagon stretch", &e);
            pass(1, "cycle-generators", "C3 {}, C4 {2:3}, C5 {2:30}, all 3*S(n,4)");
        }
    }
}

#[test]
fn criterion_2_cycle_basis_shape() {
    let mut winners = Vec::new();
    for n in [4usize, 5] {
        let m = cut_exponent_matrix(&Graph::cycle(n)).unwrap();
        let report = order_search(&m, &Budget::default()).expect("search within budget");
        let (name, gb) = report
            .winner
            .unwrap_or_else(|| panic!("no squarefree quadratic order found for cycle {n}"));
        let shape = basis_shape(&gb);
        assert!(shape.squarefree && shape.quadratic, "certification, cycle {n}");
        winners.push(format!("C{n} via {name}"));
    }
    pass(2, "cycle-basis-shape", &winners.join(", "));
}

#[test]
fn criterion_3_tree_package() {
    let shapes: [(usize, &[&str]); 4] = [
        (1, &["k2"]),
        (2, &["path3", "star2"]),
        (3, &["path4", "star3"]),
        (4, &["path5", "star4", "spider211"]),
    ];
    for (n, names) in shapes {
        for name in names {
            let g = load(name);
            let m = cut_exponent_matrix(&g).unwrap();
            let (_, series, mu) = full_analysis(&g).expect("trees fit the budget");

            for i in 0..=4u32 {
                assert_eq!(
                    BigInt::from(series.value_at(i)),
                    tree_hilbert(n, i as usize),
                    "h({i}) on {name}"
                );
                assert_eq!(
                    BigInt::from(semigroup_hilbert(&m, i)),
                    tree_hilbert(n, i as usize),
                    "enumerated h({i}) on {name}"
                );
            }
            let total: u64 = mu.values().sum();
            assert_eq!(BigInt::from(total), tree_generator_count(n), "generators on {name}");
            let numerator: Vec<BigInt> =
                series.numerator().iter().map(|&c| BigInt::from(c)).collect();
            let row: Vec<BigInt> = (1..=n).map(|k| eulerian(n, k)).collect();
            assert_eq!(numerator, row, "h-vector on {name}");
            let factorial: i128 = (1..=n as i128).product();
            assert_eq!(series.degree(), factorial, "degree on {name}");
            assert_eq!(regularity(&series, n).regularity, n, "regularity on {name}");
            assert!(series.is_symmetric(), "symmetry on {name}");
        }
    }
    pass(3, "tree-package", "h(i)=(i+1)^n, generator count, Eulerian h-vector, degree n!, reg n, symmetric; every shape with 1..=4 edges");
}

#[test]
fn criterion_4_gorenstein_discrimination() {
    let (_, c4, _) = full_analysis(&Graph::cycle(4)).unwrap();
    assert!(c4.is_symmetric(), "square");
    let (_, c5, _) = full_analysis(&Graph::cycle(5)).unwrap();
    assert!(!c5.is_symmetric(), "pentagon");

    let forests = corpus_forests();
    assert_eq!(forests.len(), 32, "forest corpus complete");
    for (name, g) in &forests {
        let cs = composed_series(g, &Budget::default())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(cs.series.is_symmetric(), "{name}");
        assert!(cs.verified(), "{name}: composition evidence");
    }

    match full_analysis(&Graph::cycle(6)) {
        Ok((_, c6, _)) => {
            assert!(!c6.is_symmetric(), "hexagon");
            pass(4, "gorenstein", "symmetric for C4 and 32 forest shapes, not for C5 or C6");
        }
        Err(e) => {
            skip_note(4, "gorenstein", "hexagon stretch", &e);
            pass(4, "gorenstein", "symmetric for C4 and 32 forest shapes, not for C5");
        }
    }
}

#[test]
fn criterion_5_disjoint_union_presentation() {
    for (tag, left, right) in [
        ("K2+K2", Graph::path(2), Graph::path(2)),
        ("C3+K2", Graph::cycle(3), Graph::path(2)),
    ] {
        let (v1, v2) = (left.vertex_count(), right.vertex_count());
        let pair = UnionPair::new(left, right, 1, 1).unwrap();
        let counted = pair.same_side_partitions().len();
        assert_eq!(counted, 1 << (v1 + v2 - 2), "{tag}: statement exponent");
        assert_ne!(counted, 1 << (v1 + v2 - 1), "{tag}: in-proof exponent is |P|, not |P1|");

        let report = pair.verify_doubling(&Budget::default()).unwrap();
        assert!(report.all_good(), "{tag}: {report:?}");
        assert!(report.equality.holds(), "{tag}: mutual reduction");
    }
    pass(5, "disjoint-union", "composed generators equal the direct ideal for K2+K2 and C3+K2; linear-form count matches 2^(v1+v2-2)");
}

#[test]
fn criterion_6_claw_cycle_correspondence() {
    for leaves in 2..=4usize {
        let bij = claw_cycle_bijection(leaves);
        let phylo = phylo_exponent_matrix(leaves).unwrap();
        let cycle = cut_exponent_matrix(&Graph::cycle(leaves + 1)).unwrap();
        assert_eq!(
            bij.transport_cut_matrix(&cycle).to_text(),
            phylo.to_text(),
            "{leaves} leaves: matrices"
        );

        let n = phylo.cols();
        let budget = Budget::default();
        let phylo_gb = toric_ideal(&phylo, &MonomialOrder::degrevlex(n), &budget).unwrap();
        let cycle_gb = toric_ideal(
            &cycle,
            &MonomialOrder::new(OrderKind::DegRevLex, bij.cut_col_for.clone()),
            &budget,
        )
        .unwrap();
        let mut inverse = vec![0usize; n];
        for (phylo_col, &cycle_col) in bij.cut_col_for.iter().enumerate() {
            inverse[cycle_col] = phylo_col;
        }
        let mut relabeled: Vec<_> = cycle_gb
            .elements()
            .iter()
            .map(|b| {
                let moved = b.relabel(&inverse, n);
                (moved.plus().exps().to_vec(), moved.minus().exps().to_vec())
            })
            .collect();
        relabeled.sort();
        let mut native: Vec<_> = phylo_gb
            .elements()
            .iter()
            .map(|b| (b.plus().exps().to_vec(), b.minus().exps().to_vec()))
            .collect();
        native.sort();
        assert_eq!(relabeled, native, "{leaves} leaves: reduced bases");
    }
    pass(6, "claw-cycle", "matrices and reduced bases agree for 2, 3, 4 leaves under matched orders");
}

#[test]
fn criterion_7_ring_graph_suite() {
    let g = load("triangle_c4_vertex");
    let m = cut_exponent_matrix(&g).unwrap();
    let budget = Budget::default();
    match toric_ideal(&m, &MonomialOrder::degrevlex(m.cols()), &budget) {
        Ok(gb) => {
            let mu = minimal_generator_degrees(&m, &gb);
            assert!(mu.counts().keys().all(|&d| d == 2), "quadratic generation: {}", mu.format_compact());
            assert_eq!(mu.count_at(2), 198, "quadric count");

            let series = HilbertSeries::from_groebner(&gb);
            let window = series.default_window().max(3);
            assert!(is_hilbertian(&series, window), "Hilbertian over window {window}");
            let reg = regularity(&series, g.edge_count());
            assert!(reg.within_bound, "reg {} vs edges+1 = {}", reg.regularity, reg.edge_bound);

            let report = order_search(&m, &budget).unwrap();
            let squarefree = match report.winner {
                Some((name, win)) => {
                    let shape = basis_shape(&win);
                    assert!(shape.squarefree && shape.quadratic, "winner certification");
                    format!("squarefree quadratic basis via {name}")
                }
                None if report
                    .attempts
                    .iter()
                    .any(|a| matches!(a.outcome, AttemptOutcome::OverBudget(_))) =>
                {
                    "squarefree initial terms not computable within budget".to_string()
                }
                None => "no squarefree witness among the candidate orders".to_string(),
            };
            pass(7, "ring-sum", &format!(
                "full route: 198 quadrics, Hilbertian over 0..={window}, reg {} <= {}, {squarefree}",
                reg.regularity, reg.edge_bound
            ));
        }
        Err(e) => {
            // Honest fallback: verify quadratic generation in a truncated
            // range without the full basis.
            skip_note(7, "ring-sum", "full basis", &e);
            let mu = cutideal_core::engine::minimal_generator_degrees_up_to(&m, 3);
            assert_eq!(mu.count_at(3), 0, "no cubic minimal generators in range");
            assert!(mu.count_at(2) > 0, "quadrics present");
            pass(7, "ring-sum", &format!(
                "truncated at degree 3: minimal generators {}",
                mu.format_compact()
            ));
        }
    }
}

#[test]
fn criterion_8_formula_suite() {
    for n in 0..=30usize {
        assert_eq!(stirling2_k4_closed(n), stirling2(n, 4), "S({n},4)");
    }
    for n in 1..=7usize {
        let counts = descent_counts(n);
        for k in 1..=n {
            assert_eq!(eulerian(n, k), BigInt::from(counts[k - 1]), "A({n},{k})");
        }
    }
    for n in 1..=30usize {
        for k in 1..=n {
            assert_eq!(eulerian(n, k), eulerian(n, n + 1 - k), "symmetry A({n},{k})");
        }
        let sum: BigInt = (1..=n).map(|k| eulerian(n, k)).sum();
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        assert_eq!(sum, factorial, "row sum {n}");
    }
    for n in 1..=5usize {
        let closed = claw_hilbert_degree2(n);
        assert_eq!(closed, claw_hilbert_degree2_by_recursion(n), "claw recursion {n}");
        let m = phylo_exponent_matrix(n).unwrap();
        assert_eq!(closed, BigInt::from(semigroup_hilbert(&m, 2)), "claw enumeration {n}");
    }
    // mu_2 = C(N+1,2) - h(2), with mu_2 taken from the computed basis.
    for n in 3..=6usize {
        let m = cut_exponent_matrix(&Graph::cycle(n)).unwrap();
        let gb = toric_ideal(&m, &MonomialOrder::degrevlex(m.cols()), &Budget::default()).unwrap();
        let mu = minimal_generator_degrees(&m, &gb);
        let vars = m.cols() as u64;
        assert_eq!(
            mu.count_at(2),
            vars * (vars + 1) / 2 - semigroup_hilbert(&m, 2),
            "mu_2 identity, cycle {n}"
        );
    }
    pass(8, "formulas", "Stirling closed form (n<=30), Eulerian vs descents (n<=7), symmetry and row sums (n<=30), claw recursion vs enumeration (n<=5), mu_2 identity through C6");
}

#[test]
fn criterion_9_determinism() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_cutideal"))
            .args(["verify", "all", "--out", dir.path().to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "verify all must succeed");
        let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().to_string_lossy().into_owned(),
                    fs::read(e.path()).unwrap(),
                )
            })
            .collect();
        files.sort();
        (out.stdout, files)
    };
    let (stdout_a, files_a) = run();
    let (stdout_b, files_b) = run();
    assert_eq!(stdout_a, stdout_b, "reports");
    assert_eq!(files_a.len(), files_b.len(), "artifact count");
    assert!(files_a.len() > 30, "artifacts written");
    for ((name_a, body_a), (name_b, body_b)) in files_a.iter().zip(files_b.iter()) {
        assert_eq!(name_a, name_b);
        assert_eq!(body_a, body_b, "{name_a}");
    }
    pass(9, "determinism", &format!(
        "two `verify all` runs byte-identical: stdout and {} artifact files",
        files_a.len()
    ));
}

/// counts[d] = permutations of 1..=n with d descents, enumerated directly.
fn descent_counts(n: usize) -> Vec<u64> {
    fn heap(arr: &mut Vec<usize>, k: usize, counts: &mut Vec<u64>) {
        if k <= 1 {
            let descents = arr.windows(2).filter(|w| w[0] > w[1]).count();
            counts[descents] += 1;
            return;
        }
        for i in 0..k - 1 {
            heap(arr, k - 1, counts);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
        heap(arr, k - 1, counts);
    }
    let mut arr: Vec<usize> = (1..=n).collect();
    let mut counts = vec![0u64; n];
    heap(&mut arr, n, &mut counts);
    counts
}
